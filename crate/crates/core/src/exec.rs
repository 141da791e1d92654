use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How batch work is scheduled.
///
/// `Parallel` maps work items on the rayon pool when the `parallel` feature is
/// enabled and degrades to `Sequential` otherwise. Either way results are
/// collected in index order, so callers that reduce the collected values
/// sequentially get bit-identical answers under both policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Evaluate `f` on every index of `range`, returning results in index order.
    pub fn map<T, F>(self, range: Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Like [`map`](Self::map) over a slice.
    pub fn map_slice<'a, S, T, F>(self, items: &'a [S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&'a S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Apply `f` to every element of `items` in place.
    pub fn for_each_mut<T, F>(self, items: &mut [T], f: F)
    where
        T: Send,
        F: Fn(&mut T) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            items.par_iter_mut().for_each(f);
            return;
        }
        items.iter_mut().for_each(f);
    }

    /// Sort `items` with a total order `cmp`.
    pub fn sort_by<T, F>(self, items: &mut [T], cmp: F)
    where
        T: Send,
        F: Fn(&T, &T) -> std::cmp::Ordering + Sync,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            items.par_sort_unstable_by(cmp);
            return;
        }
        items.sort_unstable_by(cmp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_policies_preserve_order() {
        let seq = Execution::Sequential.map(0..1000, |i| i * i);
        let par = Execution::Parallel.map(0..1000, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[31], 961);
    }
}
