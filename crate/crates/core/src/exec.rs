//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature the batch loops (segmented sieving, power
//! enumeration, per-element factor scans) run on the rayon
//! pool. Without it, or with [`Exec::Sequential`], they run on the calling
//! thread. Both paths produce identical results; outputs are merged in index
//! order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Map `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Map `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Split `0..n` into contiguous chunks and map each chunk.
    pub fn map_chunks<R, F>(self, n: u64, chunk: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64, u64) -> R + Sync + Send,
    {
        let chunk = chunk.max(1);
        let count = n.div_ceil(chunk) as usize;
        self.map_range(count, |i| {
            let lo = i as u64 * chunk;
            let hi = (lo + chunk).min(n);
            f(lo, hi)
        })
    }

    /// Sum a `u64`-valued function over `0..n`.
    pub fn sum_range<F>(self, n: usize, f: F) -> u64
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).sum();
        }
        (0..n).map(f).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_map_covers_range_in_order() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let parts = exec.map_chunks(10, 3, |lo, hi| (lo, hi));
            assert_eq!(parts, vec![(0, 3), (3, 6), (6, 9), (9, 10)]);
        }
    }

    #[test]
    fn both_paths_agree() {
        let seq = Exec::Sequential.sum_range(1000, |i| (i * i) as u64);
        let par = Exec::Parallel.sum_range(1000, |i| (i * i) as u64);
        assert_eq!(seq, par);
    }
}
