//! Deterministic witness scans over flattened index spaces.
//!
//! Property checks walk an index space `0..count` (pairs and triples are
//! flattened row-major) looking for the smallest index whose predicate fires.
//! `first_hit` dispatches to the parallel implementation when the `parallel`
//! feature is on; both implementations are public so benchmarks and tests can
//! compare them directly. Because the parallel path reduces with `min`, the
//! reported witness is identical to the sequential one regardless of thread
//! count or schedule.

/// Smallest index in `0..count` where `pred` returns true, sequentially.
pub fn first_hit_seq<F>(count: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    (0..count).find(|&i| pred(i))
}

/// Smallest index in `0..count` where `pred` returns true, on rayon.
#[cfg(feature = "parallel")]
pub fn first_hit_par<F>(count: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().filter(|&i| pred(i)).min()
}

/// Smallest index in `0..count` where `pred` returns true.
#[cfg(feature = "parallel")]
pub fn first_hit<F>(count: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync,
{
    // Tiny scans are cheaper sequentially than the fork-join setup.
    if count < 1 << 12 {
        first_hit_seq(count, pred)
    } else {
        first_hit_par(count, pred)
    }
}

/// Smallest index in `0..count` where `pred` returns true.
#[cfg(not(feature = "parallel"))]
pub fn first_hit<F>(count: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync,
{
    first_hit_seq(count, pred)
}
