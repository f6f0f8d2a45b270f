//! Sequential / data-parallel execution of exhaustive sweeps.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool. Without it, every mode falls back to the sequential
//! loop. Results never depend on the mode: callers merge per-index outputs in
//! index order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `f` over `0..len` and returns the results in index order.
    pub fn map_range<R, F>(self, len: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Maps `f` over `0..len` in contiguous chunks and folds each chunk with
    /// `fold`, returning chunk results in order.
    pub fn fold_chunks<A, F>(self, len: u64, chunk: u64, init: impl Fn() -> A + Sync + Send, f: F) -> Vec<A>
    where
        A: Send,
        F: Fn(&mut A, u64) + Sync + Send,
    {
        let chunk = chunk.max(1);
        let n_chunks = len.div_ceil(chunk);
        self.map_range(n_chunks, |c| {
            let mut acc = init();
            let lo = c * chunk;
            let hi = (lo + chunk).min(len);
            for i in lo..hi {
                f(&mut acc, i);
            }
            acc
        })
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}
