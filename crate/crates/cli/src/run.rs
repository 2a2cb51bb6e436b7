use std::fs::File;
use std::io::{self, BufWriter, Write};

use serde_json::json;
use weil_core::census::{
    cached_census, census_csv_header, census_csv_row, census_json, classify_set, growth_report,
    utc_timestamp, verify_al_identity, verify_recursion_domination, verify_thm23_bound,
    verify_thm23_bounds, BoundReport,
};
use weil_core::classify::{factor_weil, simplicity, ClassRecord};
use weil_core::enumerate::{collect_parallel, enumerate_set, tuple_csv, EnumSpec};
use weil_core::exactnum::IntPoly;
use weil_core::weilpoly::{
    dh_condition, is_ordinary, is_q_symmetric, is_weil, CoeffTuple, PrimePower, WeilPoly,
};

use crate::args::Format;
use crate::config::{CheckInput, RunConfig, Task, VerifyTask};

/// What went wrong after validation.
#[derive(Debug)]
pub enum Failure {
    /// Some bound did not hold.
    Verification,
    Runtime(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<weil_core::Error> for Failure {
    fn from(e: weil_core::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

pub fn run(cfg: &RunConfig) -> Result<(), Failure> {
    let mut out: Box<dyn Write> = match &cfg.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let verdict = match &cfg.task {
        Task::Check(input) => check(input, cfg.q, cfg.format, &mut out).map(|_| true),
        Task::Enum(spec) => enumerate(spec, cfg, &mut out).map(|_| true),
        Task::Classify(spec) => classify(spec, cfg, &mut out).map(|_| true),
        Task::Census { g, epsilon } => {
            let table = cached_census(cfg.q, *g, epsilon, cfg.parts)?;
            let ts = (!cfg.no_header).then(utc_timestamp);
            match cfg.format {
                Format::Json => write!(out, "{}", census_json(&table, ts))?,
                Format::Csv => {
                    writeln!(out, "# counts restricted to ordinary classes")?;
                    if let Some(ts) = ts {
                        writeln!(out, "# generated_at={ts}")?;
                    }
                    writeln!(out, "{}", census_csv_header())?;
                    writeln!(out, "{}", census_csv_row(&table))?;
                }
            }
            Ok(true)
        }
        Task::Verify(v) => verify(v, cfg, &mut out),
        Task::Growth { g_max } => {
            let rows = growth_report(cfg.q, *g_max)?;
            match cfg.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap())?,
                Format::Csv => {
                    writeln!(out, "g,x_count,log_ratio,in_bracket")?;
                    for r in rows {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            r.g, r.x_count, r.log_ratio, r.in_bracket
                        )?;
                    }
                }
            }
            Ok(true)
        }
    }?;
    out.flush()?;
    if verdict {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    fields: &[(&str, serde_json::Value)],
) -> io::Result<()> {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            writeln!(out, "{}", serde_json::Value::Object(map))
        }
        Format::Csv => {
            for (k, v) in fields {
                match v {
                    serde_json::Value::String(s) => writeln!(out, "{k}={s}")?,
                    other => writeln!(out, "{k}={other}")?,
                }
            }
            Ok(())
        }
    }
}

fn check(
    input: &CheckInput,
    q: PrimePower,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut fields: Vec<(&str, serde_json::Value)> = Vec::new();
    let tuple = match input {
        CheckInput::Tuple(t) => {
            fields.push(("polynomial", json!(t.expand().to_string())));
            Some(t.clone())
        }
        CheckInput::Poly(f) => {
            fields.push(("polynomial", json!(f.to_string())));
            poly_tuple(f, q, &mut fields)
        }
    };
    if let Some(t) = tuple {
        let f = t.expand();
        fields.push(("tuple", json!(t.coeffs())));
        fields.push(("q_symmetric", json!(true)));
        fields.push(("dh", json!(dh_condition(&t))));
        let weil = is_weil(&f, q)?;
        fields.push(("weil", json!(weil)));
        if weil {
            let w = WeilPoly::new(f, q)?;
            let ordinary = is_ordinary(&w);
            let v = simplicity(&w);
            fields.push(("ordinary", json!(ordinary)));
            fields.push(("simplicity", json!(v.value.to_string())));
            fields.push(("reason", json!(v.reason.to_string())));
            match factor_weil(&w) {
                Ok(fac) => {
                    let parts: Vec<String> = fac
                        .factors()
                        .iter()
                        .map(|(p, m)| {
                            if *m == 1 {
                                format!("({p})")
                            } else {
                                format!("({p})^{m}")
                            }
                        })
                        .collect();
                    fields.push(("factors", json!(parts.concat())));
                    if ordinary {
                        let dim = fac.degrees().first().copied().unwrap_or(0) / 2;
                        fields.push(("largest_dim", json!(dim)));
                    }
                }
                Err(e) => fields.push(("factors", json!(format!("unavailable: {e}")))),
            }
        }
    }
    emit(out, format, &fields)?;
    Ok(())
}

/// Turns a full coefficient list into a tuple, recording why not when it is not one.
fn poly_tuple(
    f: &IntPoly,
    q: PrimePower,
    fields: &mut Vec<(&str, serde_json::Value)>,
) -> Option<CoeffTuple> {
    let reject = |fields: &mut Vec<(&str, serde_json::Value)>, sym: bool, why: String| {
        fields.push(("q_symmetric", json!(sym)));
        fields.push(("weil", json!(false)));
        fields.push(("reason", json!(why)));
        None
    };
    if !f.is_monic() || f.deg() % 2 == 1 || f.deg() == 0 {
        return reject(fields, false, "not monic of positive even degree".into());
    }
    if !is_q_symmetric(f, q) {
        return reject(
            fields,
            false,
            format!("coefficients do not satisfy x^2g F(q/x) = q^g F(x) for q={q}"),
        );
    }
    match CoeffTuple::from_poly(f, q) {
        Ok(t) => Some(t),
        Err(e) => reject(fields, true, e.to_string()),
    }
}

fn enumerate(spec: &EnumSpec, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let line = |t: &CoeffTuple| match cfg.format {
        Format::Csv => tuple_csv(t),
        Format::Json => serde_json::to_string(t).expect("tuple serializes"),
    };
    if cfg.parts == 1 {
        for t in enumerate_set(spec, None) {
            writeln!(out, "{}", line(&t))?;
        }
    } else {
        for t in collect_parallel(spec, cfg.parts) {
            writeln!(out, "{}", line(&t))?;
        }
    }
    Ok(())
}

fn classify(spec: &EnumSpec, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let records = classify_set(spec, cfg.parts)?;
    match cfg.format {
        Format::Csv => {
            writeln!(out, "{}", ClassRecord::csv_header(spec.g()))?;
            for r in &records {
                writeln!(out, "{}", r.csv())?;
            }
        }
        Format::Json => {
            for r in &records {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(r).expect("record serializes")
                )?;
            }
        }
    }
    Ok(())
}

fn verify(task: &VerifyTask, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, Failure> {
    let reports: Vec<BoundReport> = match task {
        VerifyTask::Thm23 { g, n: Some(n) } => vec![verify_thm23_bound(cfg.q, *g, *n)?],
        VerifyTask::Thm23 { g, n: None } => verify_thm23_bounds(cfg.q, *g)?,
        VerifyTask::AlIdentity { g, epsilon } => vec![verify_al_identity(cfg.q, *g, epsilon)?],
        VerifyTask::Recursion { c1, c2, kmax } => {
            verify_recursion_domination(*c1, *c2, cfg.q, *kmax)?
        }
    };
    match cfg.format {
        Format::Csv => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports).unwrap())?,
    }
    Ok(reports.iter().all(BoundReport::passes))
}
