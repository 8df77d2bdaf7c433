//! Deterministic chunked parallelism for the pure enumeration layers.
//!
//! Candidates are addressed by index; workers scan disjoint index chunks and
//! the single-threaded merge reassembles hits in index order, so results are
//! identical to a sequential scan regardless of the thread count.

/// Applies `test` to every index in `0..total` and returns the hits in index
/// order. `threads = 1` runs inline.
pub fn scan_indices<T: Send>(
    total: u128,
    threads: usize,
    test: impl Fn(u128) -> Option<T> + Sync,
) -> Vec<T> {
    let threads = threads.clamp(1, total.clamp(1, 64) as usize);
    if threads == 1 {
        return (0..total).filter_map(test).collect();
    }
    let chunk = total.div_ceil(threads as u128);
    let mut per_chunk: Vec<Vec<T>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads as u128 {
            let lo = t * chunk;
            let hi = ((t + 1) * chunk).min(total);
            let test = &test;
            handles.push(scope.spawn(move || (lo..hi).filter_map(test).collect::<Vec<T>>()));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker"))
            .collect()
    });
    let mut out = Vec::new();
    for v in per_chunk.iter_mut() {
        out.append(v);
    }
    out
}
