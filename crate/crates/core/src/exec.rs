//! Execution strategy for the data-parallel loops (pair sweeps, clique branches,
//! simulation trials).
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the rayon
//! global pool; without it, it falls back to the sequential path. Results are collected
//! in input order either way, so output never depends on the schedule.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps `f` over `0..len`, preserving index order in the output.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
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
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// All unordered index pairs `(i, j)`, `i < j < len`, in lexicographic order.
    pub fn pairs(len: usize) -> Vec<(usize, usize)> {
        (0..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .collect()
    }
}
