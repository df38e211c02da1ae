//! Thin switch between rayon and plain iterators.
//!
//! Every reduction routed through here must be associative and commutative so
//! that the parallel and sequential builds produce identical results.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_reduce<T, M, R>(range: Range<usize>, identity: T, map: M, reduce: R) -> T
where
    T: Send + Sync + Clone,
    M: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    range
        .into_par_iter()
        .map(map)
        .reduce(|| identity.clone(), reduce)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce<T, M, R>(range: Range<usize>, identity: T, map: M, reduce: R) -> T
where
    T: Send + Sync + Clone,
    M: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    range.map(map).fold(identity, reduce)
}

/// Returns any `Some` produced by `f`; which one is unspecified in the parallel build.
#[cfg(feature = "parallel")]
pub(crate) fn find_any<T, F>(range: Range<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    range.into_par_iter().find_map_any(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_any<T, F>(range: Range<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    range.into_iter().find_map(f)
}

#[cfg(feature = "parallel")]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    data.par_chunks_mut(chunk)
        .enumerate()
        .for_each(|(i, c)| f(i, c));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}
