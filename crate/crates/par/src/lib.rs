//! Execution switch shared by the numeric crates.
//!
//! Work is expressed as an indexed map followed by an in-order reduction, so
//! results do not depend on thread count or scheduling.

use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Parallel when the `parallel` feature is compiled in, sequential otherwise.
    pub fn available() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Evaluates `f(0..len)` and returns the results in index order.
pub fn map_indexed<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
        _ => (0..len).map(f).collect(),
    }
}

/// Maps over a slice, preserving order.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    map_indexed(exec, items.len(), |i| f(&items[i]))
}

/// Runs `f` inside a pool with `jobs` worker threads (or the global pool for `None`).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

/// Stable 64-bit seed derived from a parent seed and a list of labels.
pub fn derive_seed(seed: u64, labels: &[&[u8]]) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    for l in labels {
        h.update((l.len() as u64).to_le_bytes());
        h.update(l);
    }
    let out = h.finalize();
    u64::from_le_bytes(out[..8].try_into().expect("digest has 32 bytes"))
}

/// Seed for the `index`-th batch of a stochastic computation.
pub fn batch_seed(seed: u64, index: u64) -> u64 {
    derive_seed(seed, &[b"batch", &index.to_le_bytes()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let a = map_indexed(Exec::Parallel, 1000, |i| i * i);
        let b = map_indexed(Exec::Sequential, 1000, |i| i * i);
        assert_eq!(a, b);
    }

    #[test]
    fn seeds_differ_by_label() {
        let a = derive_seed(7, &[b"dyson", &0u64.to_le_bytes()]);
        let b = derive_seed(7, &[b"dyson", &1u64.to_le_bytes()]);
        let c = derive_seed(7, &[b"morris", &0u64.to_le_bytes()]);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, derive_seed(7, &[b"dyson", &0u64.to_le_bytes()]));
    }
}
