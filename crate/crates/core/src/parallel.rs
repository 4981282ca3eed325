//! Ordered data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, [`Strategy::Parallel`] fans out over rayon's
//! pool; without it, both strategies run on the calling thread. Output order
//! always follows input order.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this build can actually run work in parallel.
    pub fn available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map_ordered<T, U, F>(items: &[T], strategy: Strategy, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
