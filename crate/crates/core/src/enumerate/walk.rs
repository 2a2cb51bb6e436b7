//! Depth-first walk over coefficient prefixes, `a_1` outermost.
//!
//! For ALL/ALL_ORDINARY the walk can prune prefixes using the derivatives of the real Weil
//! polynomial `h`. The top `i + 1` coefficients of `h` determine `h^{(g-i)}`, which must have all
//! its roots real in `[-2√q, 2√q]` whenever `h` does. The constant term of that derivative is a
//! positive multiple of `t_i`, so the admissible `t_i` form an integer interval; the scan stops as
//! soon as it leaves that interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::range::{admissible_range, to_i64, IntRange};
use super::spec::{EnumSpec, SetKind};
use crate::exactnum::{all_roots_real_in, IntPoly, QuadraticValue};
use crate::weilpoly::{basis_entry, binomial, is_weil, real_interval, CoeffTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Accept,
    Reject,
    /// Filtered out by a condition that says nothing about neighbouring values.
    Skip,
}

#[derive(Clone, Debug)]
enum Mode {
    /// Every value in range is accepted, except that the last X/Y coordinate must be prime to p.
    Plain { coprime: bool },
    /// Interior ALL level with pruning: test `base + scale·t_i`.
    Derivative {
        base: IntPoly,
        scale: BigInt,
        shift: BigInt,
    },
    /// Last ALL coordinate: the full Weil test.
    Leaf { ordinary: bool },
}

#[derive(Clone, Debug)]
struct Level {
    next: i64,
    hi: i64,
    seen_valid: bool,
    mode: Mode,
}

/// Options for the walk. Pruning never changes the emitted set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkOptions {
    pub prune: bool,
}

impl Default for WalkOptions {
    fn default() -> Self {
        Self { prune: true }
    }
}

#[derive(Clone, Debug)]
struct Core {
    spec: EnumSpec,
    opts: WalkOptions,
    len: usize,
    p: i64,
    factorials: Vec<BigInt>,
}

impl Core {
    fn new(spec: EnumSpec, opts: WalkOptions) -> Self {
        let g = spec.g();
        let mut factorials = vec![BigInt::one()];
        for k in 1..=g {
            let next = &factorials[k - 1] * BigInt::from(k);
            factorials.push(next);
        }
        Self {
            spec,
            opts,
            len: spec.tuple_len(),
            p: spec.q().p() as i64,
            factorials,
        }
    }

    fn is_all(&self) -> bool {
        matches!(self.spec.kind(), SetKind::All | SetKind::AllOrdinary)
    }

    /// `Σ_{k<i} basis(i, k)·t_k` with `t_0 = 1`: the offset with `a_i = t_i + shift`.
    fn shift(&self, t: &[BigInt]) -> BigInt {
        let g = self.spec.g();
        let q = self.spec.q().q();
        let i = t.len() + 1;
        let mut s = basis_entry(g, i, 0, q);
        for (idx, tk) in t.iter().enumerate() {
            let k = idx + 1;
            if (i - k) % 2 == 0 {
                s += basis_entry(g, i, k, q) * tk;
            }
        }
        s
    }

    /// `h^{(g-i)} / 1` restricted to the known `t_0..t_{i-1}`:
    /// `Σ_{k<i} t_k (g-k)!/(i-k)! t^{i-k}`.
    fn derivative_base(&self, t: &[BigInt]) -> IntPoly {
        let g = self.spec.g();
        let i = t.len() + 1;
        let mut coeffs = vec![BigInt::zero(); i + 1];
        for k in 0..i {
            let tk = if k == 0 {
                BigInt::one()
            } else {
                t[k - 1].clone()
            };
            coeffs[i - k] = tk * (&self.factorials[g - k] / &self.factorials[i - k]);
        }
        IntPoly::new(coeffs)
    }

    /// Bounds on `t_i` implied by `|t_i| ≤ C(g,i)(2√q)^i` and by the signs `base + scale·t_i`
    /// must have at `±2√q`.
    fn t_bounds(&self, base: &IntPoly, scale: &BigInt, i: usize) -> (BigInt, BigInt) {
        let q = self.spec.q();
        let g = self.spec.g();
        let mag = QuadraticValue::half_power(i as u32, q.q())
            .scale(&(binomial(g, i) * BigInt::from(2).pow(i as u32)))
            .floor();
        let (mut lo, mut hi) = (-mag.clone(), mag);
        let (alpha, beta) = real_interval(q);
        // base(β) + scale·t ≥ 0
        let at_beta = -base.eval_qv(&beta);
        lo = lo.max(ceil_div(&at_beta.ceil(), scale));
        // (-1)^i (base(α) + scale·t) ≥ 0
        let at_alpha = -base.eval_qv(&alpha);
        if i % 2 == 0 {
            lo = lo.max(ceil_div(&at_alpha.ceil(), scale));
        } else {
            hi = hi.min(at_alpha.floor().div_floor(scale));
        }
        (lo, hi)
    }

    fn level(&self, prefix: &[i64], t: &[BigInt], restrict: Option<IntRange>) -> Level {
        let i = prefix.len() + 1;
        let mut range = admissible_range(&self.spec, prefix);
        if let Some(r) = restrict {
            range = range.intersect(&r);
        }
        let last = i == self.len;
        let mode = if !self.is_all() {
            Mode::Plain {
                coprime: last && matches!(self.spec.kind(), SetKind::X | SetKind::Y),
            }
        } else {
            let ordinary = self.spec.kind() == SetKind::AllOrdinary;
            if !self.opts.prune {
                if last {
                    Mode::Leaf { ordinary }
                } else {
                    Mode::Plain { coprime: false }
                }
            } else {
                let shift = self.shift(t);
                let base = self.derivative_base(t);
                let scale = self.factorials[self.spec.g() - i].clone();
                let (tlo, thi) = self.t_bounds(&base, &scale, i);
                let alo = to_i64(&(tlo + &shift).max(BigInt::from(range.lo)));
                let ahi = to_i64(&(thi + &shift).min(BigInt::from(range.hi)));
                range = IntRange::new(alo, ahi);
                if last {
                    Mode::Leaf { ordinary }
                } else {
                    Mode::Derivative { base, scale, shift }
                }
            }
        };
        Level {
            next: range.lo,
            hi: range.hi,
            seen_valid: false,
            mode,
        }
    }

    fn verdict(&self, level: &Level, prefix: &[i64], v: i64) -> Verdict {
        match &level.mode {
            Mode::Plain { coprime } => {
                if *coprime && v.rem_euclid(self.p) == 0 {
                    Verdict::Skip
                } else {
                    Verdict::Accept
                }
            }
            Mode::Derivative { base, scale, shift } => {
                let ti = BigInt::from(v) - shift;
                let mut coeffs = base.coeffs().to_vec();
                coeffs[0] += scale * ti;
                let d = IntPoly::new(coeffs);
                let (lo, hi) = real_interval(self.spec.q());
                if all_roots_real_in(&d, &lo, &hi).expect("nonzero derivative") {
                    Verdict::Accept
                } else {
                    Verdict::Reject
                }
            }
            Mode::Leaf { ordinary } => {
                if *ordinary && v.rem_euclid(self.p) == 0 {
                    return Verdict::Skip;
                }
                let mut a = prefix.to_vec();
                a.push(v);
                let f = CoeffTuple::new(self.spec.q(), a)
                    .expect("nonempty")
                    .expand();
                if is_weil(&f, self.spec.q()).expect("monic even degree") {
                    Verdict::Accept
                } else {
                    Verdict::Reject
                }
            }
        }
    }

    /// Convex levels can stop at the first rejection after an acceptance.
    fn convex(&self, level: &Level) -> bool {
        self.opts.prune && !matches!(level.mode, Mode::Plain { .. })
    }

    /// Advances `level` to its next accepted value.
    fn advance(&self, level: &mut Level, prefix: &[i64]) -> Option<i64> {
        while level.next <= level.hi {
            let v = level.next;
            level.next += 1;
            match self.verdict(level, prefix, v) {
                Verdict::Accept => {
                    level.seen_valid = true;
                    return Some(v);
                }
                Verdict::Reject if level.seen_valid && self.convex(level) => {
                    level.next = level.hi + 1;
                }
                _ => {}
            }
        }
        None
    }

    fn t_of(&self, level: &Level, v: i64) -> Option<BigInt> {
        match &level.mode {
            Mode::Derivative { shift, .. } => Some(BigInt::from(v) - shift),
            _ => None,
        }
    }

    /// Number of values the last X/Y/Z coordinate can take in `r`.
    fn count_last_plain(&self, r: IntRange, coprime: bool) -> u64 {
        if r.is_empty() {
            return 0;
        }
        if !coprime {
            return r.len();
        }
        let multiples = |x: i64| Integer::div_floor(&x, &self.p);
        let mult = (multiples(r.hi) - multiples(r.lo - 1)) as u64;
        r.len() - mult
    }

    fn count_rec(
        &self,
        prefix: &mut Vec<i64>,
        t: &mut Vec<BigInt>,
        restrict: Option<IntRange>,
    ) -> u64 {
        let mut level = self.level(prefix, t, restrict);
        let last = prefix.len() + 1 == self.len;
        if last {
            if let Mode::Plain { coprime } = level.mode {
                return self.count_last_plain(IntRange::new(level.next, level.hi), coprime);
            }
            let mut n = 0;
            while self.advance(&mut level, prefix).is_some() {
                n += 1;
            }
            return n;
        }
        let mut total = 0;
        while let Some(v) = self.advance(&mut level, prefix) {
            prefix.push(v);
            let pushed_t = self.t_of(&level, v).map(|tv| t.push(tv)).is_some();
            total += self.count_rec(prefix, t, None);
            if pushed_t {
                t.pop();
            }
            prefix.pop();
        }
        total
    }
}

/// Lazy lexicographic stream of the members of a set, optionally restricted to an interval of
/// `a_1` values.
pub struct SetStream {
    core: Core,
    restrict: Option<IntRange>,
    levels: Vec<Level>,
    prefix: Vec<i64>,
    t: Vec<BigInt>,
    started: bool,
}

impl SetStream {
    pub fn new(spec: EnumSpec, restrict: Option<IntRange>, opts: WalkOptions) -> Self {
        Self {
            core: Core::new(spec, opts),
            restrict,
            levels: Vec::new(),
            prefix: Vec::new(),
            t: Vec::new(),
            started: false,
        }
    }
}

impl Iterator for SetStream {
    type Item = CoeffTuple;

    fn next(&mut self) -> Option<CoeffTuple> {
        if !self.started {
            self.started = true;
            let first = self.core.level(&[], &[], self.restrict);
            self.levels.push(first);
        }
        loop {
            let depth = self.levels.len();
            if depth == 0 {
                return None;
            }
            let level = self.levels.last_mut().expect("nonempty");
            match self.core.advance(level, &self.prefix) {
                None => {
                    self.levels.pop();
                    if self.prefix.pop().is_some() && self.t.len() > self.prefix.len() {
                        self.t.pop();
                    }
                }
                Some(v) if depth == self.core.len => {
                    let mut a = self.prefix.clone();
                    a.push(v);
                    return Some(CoeffTuple::new(self.core.spec.q(), a).expect("nonempty"));
                }
                Some(v) => {
                    if let Some(tv) = self.core.t_of(level, v) {
                        self.t.push(tv);
                    }
                    self.prefix.push(v);
                    let child = self.core.level(&self.prefix, &self.t, None);
                    self.levels.push(child);
                }
            }
        }
    }
}

/// Counts the members with `a_1` restricted to `restrict`, without materializing tuples.
pub fn count_in(spec: &EnumSpec, restrict: Option<IntRange>, opts: WalkOptions) -> u64 {
    let core = Core::new(*spec, opts);
    core.count_rec(&mut Vec::new(), &mut Vec::new(), restrict)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}
