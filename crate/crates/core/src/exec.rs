//! Sequential/parallel execution helpers. All hot loops are written against
//! these so the crate builds and behaves identically without rayon
//! (`--no-default-features`); only wall time changes.

/// Map `items` and fold the results with `merge`, starting from `init`.
/// Chunking and merge order are deterministic, so any associative,
/// commutative `merge` yields thread-count-independent results.
pub fn map_merge<T, R, F, M>(items: &[T], map: F, init: R, merge: M) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
    M: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(&map)
            .reduce_with(&merge)
            .unwrap_or(init)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(&map).fold(init, &merge)
    }
}

