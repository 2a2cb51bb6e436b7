use super::range::{admissible_range, IntRange};
use super::spec::EnumSpec;

/// Disjoint intervals covering the admissible range of one coordinate (always `a_1` here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangePartition {
    pub index: usize,
    pub intervals: Vec<IntRange>,
}

impl RangePartition {
    /// The single-interval partition.
    pub fn whole(spec: &EnumSpec) -> Self {
        make_partition(spec, 1)
    }
}

/// Splits the `a_1` range into at most `parts` contiguous intervals whose sizes differ by at most
/// one, larger ones first.
pub fn make_partition(spec: &EnumSpec, parts: usize) -> RangePartition {
    let parts = parts.max(1) as u64;
    let range = admissible_range(spec, &[]);
    let len = range.len();
    let mut intervals = Vec::new();
    if len > 0 {
        let base = len / parts;
        let extra = len % parts;
        let mut lo = range.lo;
        for k in 0..parts {
            let size = base + u64::from(k < extra);
            if size == 0 {
                break;
            }
            let hi = lo + size as i64 - 1;
            intervals.push(IntRange::new(lo, hi));
            lo = hi + 1;
        }
    }
    RangePartition {
        index: 0,
        intervals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::SetKind;
    use crate::weilpoly::PrimePower;

    fn spec(q: u64, g: usize, kind: SetKind) -> EnumSpec {
        EnumSpec::new(PrimePower::new(q).unwrap(), g, kind).unwrap()
    }

    #[test]
    fn examples() {
        let p = make_partition(&spec(2, 2, SetKind::X), 1);
        assert_eq!(p.intervals, vec![IntRange::new(-1, 1)]);
        let p = make_partition(&spec(2, 2, SetKind::All), 2);
        assert_eq!(p.intervals, vec![IntRange::new(-5, 0), IntRange::new(1, 5)]);
        let p = make_partition(&spec(2, 1, SetKind::X), 4);
        assert!(p.intervals.len() <= 4);
        assert_eq!(p.intervals.first().unwrap().lo, -2);
        assert_eq!(p.intervals.last().unwrap().hi, 2);
        for w in p.intervals.windows(2) {
            assert_eq!(w[0].hi + 1, w[1].lo);
        }
    }

    #[test]
    fn more_parts_than_values() {
        let p = make_partition(&spec(2, 4, SetKind::Y), 8);
        assert_eq!(p.intervals, vec![IntRange::new(0, 0)]);
    }
}
