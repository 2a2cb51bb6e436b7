//! Validated run configuration. Everything that can be rejected is rejected here, before any
//! computation starts.

use std::path::PathBuf;

use weil_core::enumerate::{EnumSpec, SetKind, MAX_G_ALL};
use weil_core::exactnum::{parse_rational, IntPoly};
use weil_core::weilpoly::{CoeffTuple, PrimePower};

use crate::args::{Cli, Command, Format, Kind, Output};

pub type Rational = weil_core::census::Epsilon;

#[derive(Debug)]
pub enum CheckInput {
    Tuple(CoeffTuple),
    Poly(IntPoly),
}

#[derive(Debug)]
pub enum VerifyTask {
    Thm23 { g: usize, n: Option<usize> },
    AlIdentity { g: usize, epsilon: Rational },
    Recursion { c1: u32, c2: u32, kmax: u32 },
}

#[derive(Debug)]
pub enum Task {
    Check(CheckInput),
    Enum(EnumSpec),
    Classify(EnumSpec),
    Census { g: usize, epsilon: Rational },
    Verify(VerifyTask),
    Growth { g_max: usize },
}

#[derive(Debug)]
pub struct RunConfig {
    pub task: Task,
    pub q: PrimePower,
    pub parts: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub no_header: bool,
}

fn int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("not an integer list: {s:?}"))
        })
        .collect()
}

fn prime_power(q: u64) -> Result<PrimePower, String> {
    PrimePower::new(q).map_err(|e| e.to_string())
}

fn epsilon(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn set_spec(q: PrimePower, g: usize, set: &str, n: Option<usize>) -> Result<EnumSpec, String> {
    let kind: SetKind = set.parse().map_err(|e: weil_core::Error| e.to_string())?;
    if n.is_some() && !matches!(kind, SetKind::Z(_)) {
        return Err("--n only applies to --set Z".into());
    }
    if matches!(kind, SetKind::Z(_)) && n.is_none() {
        return Err("--set Z needs --n".into());
    }
    let kind = kind.with_n(n).map_err(|e| e.to_string())?;
    EnumSpec::new(q, g, kind).map_err(|e| e.to_string())
}

fn positive_parts(parts: usize) -> Result<usize, String> {
    if parts == 0 {
        return Err("--parts must be at least 1".into());
    }
    Ok(parts)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("{flag} is required here"))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let (task, q, parts, output): (Task, u64, usize, Output) = match cli.command {
            Command::Check(a) => {
                let q = prime_power(a.q)?;
                let input = match (a.a.as_deref(), a.poly.as_deref()) {
                    (Some(list), None) => {
                        let coeffs = int_list(list)?;
                        if let Some(g) = a.g {
                            if g != coeffs.len() {
                                return Err(format!(
                                    "--g {g} but --a has {} entries",
                                    coeffs.len()
                                ));
                            }
                        }
                        CheckInput::Tuple(CoeffTuple::new(q, coeffs).map_err(|e| e.to_string())?)
                    }
                    (None, Some(list)) => {
                        let mut coeffs = int_list(list)?;
                        coeffs.reverse();
                        CheckInput::Poly(IntPoly::from_i64(&coeffs))
                    }
                    _ => return Err("check needs exactly one of --a or --poly".into()),
                };
                (Task::Check(input), a.q, 1, a.output)
            }
            Command::Enum(a) => {
                let spec = set_spec(prime_power(a.q)?, a.g, &a.set, a.n)?;
                (Task::Enum(spec), a.q, positive_parts(a.parts)?, a.output)
            }
            Command::Classify(a) => {
                let spec = set_spec(prime_power(a.q)?, a.g, &a.set, a.n)?;
                if matches!(spec.kind(), SetKind::Z(_)) {
                    return Err("Z tuples are partial and cannot be classified".into());
                }
                (
                    Task::Classify(spec),
                    a.q,
                    positive_parts(a.parts)?,
                    a.output,
                )
            }
            Command::Census(a) => {
                prime_power(a.q)?;
                if a.g == 0 || a.g > MAX_G_ALL {
                    return Err(format!("census needs 1 ≤ g ≤ {MAX_G_ALL}"));
                }
                let eps = epsilon(&a.epsilon)?;
                weil_core::census::check_epsilon(&eps).map_err(|e| e.to_string())?;
                (
                    Task::Census {
                        g: a.g,
                        epsilon: eps,
                    },
                    a.q,
                    positive_parts(a.parts)?,
                    a.output,
                )
            }
            Command::Verify(a) => {
                prime_power(a.q)?;
                let task = match a.kind {
                    Kind::Thm23 => {
                        let g = need(a.g, "--g")?;
                        if let Some(n) = a.n {
                            if n == 0 || 2 * n > g {
                                return Err(format!("need 1 ≤ n ≤ g/2, got n={n}, g={g}"));
                            }
                        }
                        VerifyTask::Thm23 { g, n: a.n }
                    }
                    Kind::AlIdentity => {
                        let g = need(a.g, "--g")?;
                        if g == 0 || g > MAX_G_ALL {
                            return Err(format!("aL-identity needs 1 ≤ g ≤ {MAX_G_ALL}"));
                        }
                        let eps = epsilon(&need(a.epsilon, "--epsilon")?)?;
                        weil_core::census::check_epsilon(&eps).map_err(|e| e.to_string())?;
                        VerifyTask::AlIdentity { g, epsilon: eps }
                    }
                    Kind::Recursion => {
                        let (c1, c2, kmax) = (
                            need(a.c1, "--c1")?,
                            need(a.c2, "--c2")?,
                            need(a.kmax, "--kmax")?,
                        );
                        if c1 == 0 || c2 == 0 || kmax == 0 {
                            return Err("--c1, --c2 and --kmax must be positive".into());
                        }
                        VerifyTask::Recursion { c1, c2, kmax }
                    }
                };
                (Task::Verify(task), a.q, 1, a.output)
            }
            Command::Growth(a) => {
                if a.g == 0 || a.g > weil_core::enumerate::MAX_G_REGION {
                    return Err(format!(
                        "growth needs 1 ≤ g ≤ {}",
                        weil_core::enumerate::MAX_G_REGION
                    ));
                }
                (Task::Growth { g_max: a.g }, a.q, 1, a.output)
            }
        };
        Ok(Self {
            task,
            q: prime_power(q)?,
            parts,
            out: output.out,
            format: output.format,
            no_header: output.no_header,
        })
    }
}
