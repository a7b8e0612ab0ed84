//! Data-parallel helpers. With the `parallel` feature the work is spread over
//! the rayon pool; without it, or with [`Execution::Sequential`], the same
//! closures run in a plain loop. Results are always in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when the crate is built without `parallel`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map<T, R, F>(mode: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(mode: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// Concatenates the per-item vectors produced by `f`, in input order.
pub fn flat_map_range<R, F>(mode: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Vec<R> + Sync + Send,
{
    map_range(mode, n, f).into_iter().flatten().collect()
}

/// Runs `op` inside a dedicated pool of `threads` workers, or directly when
/// `threads` is `None` or the crate is sequential-only.
pub fn with_threads<R: Send>(threads: Option<usize>, op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(t) = threads {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
            return pool.install(op);
        }
    }
    let _ = threads;
    op()
}
