//! Exact enumerators for the coefficient sets X, Y, Z and for all (ordinary) Weil polynomials of
//! a given dimension.
//!
//! Members are produced in lexicographic order of `(a_1, …, a_g)`. Partitioning splits the range
//! of `a_1`, so concatenating the partitioned streams in interval order reproduces the
//! unpartitioned stream exactly; that is what keeps parallel runs byte-identical.

mod partition;
mod range;
mod spec;
mod walk;

pub use partition::{make_partition, RangePartition};
pub use range::{admissible_range, root_bound, IntRange};
pub use spec::{EnumSpec, SetKind, MAX_G_ALL, MAX_G_REGION};
pub use walk::{SetStream, WalkOptions};

use rayon::prelude::*;

use crate::weilpoly::CoeffTuple;

/// Stream of the members, in lexicographic order within each partition interval.
pub fn enumerate_set(
    spec: &EnumSpec,
    partition: Option<&RangePartition>,
) -> Box<dyn Iterator<Item = CoeffTuple> + Send> {
    enumerate_with(spec, partition, WalkOptions::default())
}

pub fn enumerate_with(
    spec: &EnumSpec,
    partition: Option<&RangePartition>,
    opts: WalkOptions,
) -> Box<dyn Iterator<Item = CoeffTuple> + Send> {
    match partition {
        None => Box::new(SetStream::new(*spec, None, opts)),
        Some(p) => {
            let spec = *spec;
            let intervals = p.intervals.clone();
            Box::new(
                intervals
                    .into_iter()
                    .flat_map(move |r| SetStream::new(spec, Some(r), opts)),
            )
        }
    }
}

/// Number of members, by the same pruned walk without materializing tuples.
pub fn count_set(spec: &EnumSpec) -> u64 {
    walk::count_in(spec, None, WalkOptions::default())
}

pub fn count_set_with(spec: &EnumSpec, opts: WalkOptions) -> u64 {
    walk::count_in(spec, None, opts)
}

/// Materializes the set by enumerating the intervals of `make_partition(spec, parts)`
/// concurrently; the result does not depend on `parts`.
pub fn collect_parallel(spec: &EnumSpec, parts: usize) -> Vec<CoeffTuple> {
    let partition = make_partition(spec, parts);
    let chunks: Vec<Vec<CoeffTuple>> = partition
        .intervals
        .par_iter()
        .map(|r| SetStream::new(*spec, Some(*r), WalkOptions::default()).collect())
        .collect();
    chunks.into_iter().flatten().collect()
}

/// Parallel version of [`count_set`].
pub fn count_parallel(spec: &EnumSpec, parts: usize) -> u64 {
    let partition = make_partition(spec, parts);
    partition
        .intervals
        .par_iter()
        .map(|r| walk::count_in(spec, Some(*r), WalkOptions::default()))
        .sum()
}

/// One CSV line `q,g,a_1,…,a_g`.
pub fn tuple_csv(t: &CoeffTuple) -> String {
    let mut s = format!("{},{}", t.q(), t.g());
    for a in t.coeffs() {
        s.push(',');
        s.push_str(&a.to_string());
    }
    s
}
