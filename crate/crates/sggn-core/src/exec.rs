//! Data-parallel execution with a sequential fallback.
//!
//! All parallel work in the crate is an indexed map: item `i` is computed by a
//! pure function of `i` (plus captured read-only state) and results are
//! assembled in index order. This makes outputs bitwise independent of worker
//! count, and lets the `parallel` feature swap rayon in and out freely.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sequential indexed map.
pub fn indexed_map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync,
    T: Send,
{
    (0..n).map(f).collect()
}

/// Rayon-backed indexed map; collection preserves index order.
#[cfg(feature = "parallel")]
pub fn indexed_map_par<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync,
    T: Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Indexed map using the configured execution strategy.
pub fn indexed_map<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync,
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        indexed_map_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        indexed_map_seq(n, f)
    }
}

/// Indexed map that stops at the first error (error of the lowest index wins).
pub fn try_indexed_map<T, E, F>(n: usize, f: F) -> Result<Vec<T>, E>
where
    F: Fn(usize) -> Result<T, E> + Sync,
    T: Send,
    E: Send,
{
    let results = indexed_map(n, f);
    results.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_and_seq_agree_bitwise() {
        let f = |i: usize| (i as f64).sin() * 1e3 + (i as f64).sqrt();
        let seq = indexed_map_seq(1000, f);
        let any = indexed_map(1000, f);
        for (a, b) in seq.iter().zip(any.iter()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
}
