//! Data-parallel loops over trial indices.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool; without it every loop runs sequentially. Results
//! never depend on the execution mode: maps are index-driven and reductions
//! are plain counting.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// The mode that will actually run.
    pub fn effective(self) -> Execution {
        if Self::parallel_available() {
            self
        } else {
            Execution::Sequential
        }
    }
}

/// `range.map(map).reduce(reduce)`, starting from `identity()`.
pub fn map_reduce<T, I, M, R>(exec: Execution, range: Range<u64>, identity: I, map: M, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    M: Fn(u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(map).reduce(identity, reduce),
        _ => range.map(map).fold(identity(), reduce),
    }
}

/// `range.map(map).collect()`, order preserved.
pub fn map_collect<T, M>(exec: Execution, range: Range<u64>, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(u64) -> T + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(map).collect(),
        _ => range.map(map).collect(),
    }
}
