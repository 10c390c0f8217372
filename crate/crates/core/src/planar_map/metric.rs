use std::collections::VecDeque;

use super::HalfEdgeMap;
use crate::error::{Error, Result};

/// Graph distance from `origin` to every vertex.
pub fn bfs_distances(m: &HalfEdgeMap, origin: usize) -> Result<Vec<u32>> {
    if origin >= m.vertex_count() {
        return Err(Error::IndexOutOfRange { index: origin, max: m.vertex_count() - 1 });
    }
    let mut dist = vec![u32::MAX; m.vertex_count()];
    dist[origin] = 0;
    let mut queue = VecDeque::with_capacity(m.vertex_count());
    queue.push_back(origin);
    while let Some(v) = queue.pop_front() {
        for d in m.darts_around(v) {
            let w = m.target(d);
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist.contains(&u32::MAX) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Largest distance from `origin`.
pub fn radius(m: &HalfEdgeMap, origin: usize) -> Result<u32> {
    Ok(bfs_distances(m, origin)?.into_iter().max().unwrap())
}

/// `L(j)` for `j = 0 .. radius - 1`: the share of edges whose far endpoint
/// is at distance at most `j + 1` from `origin`.
///
/// In a quadrangulation built from a well-labeled tree, edge `k` joins the
/// corner `k` (label `R(k)`) to a vertex at distance `R(k) - 1`, so this
/// equals the share of corners `k` in `[0, 2n - 1]` with `R(k) - 1 <= j`.
pub fn profile(m: &HalfEdgeMap, origin: usize) -> Result<Vec<f64>> {
    let dist = bfs_distances(m, origin)?;
    let radius = *dist.iter().max().unwrap() as usize;
    let mut counts = vec![0usize; radius + 1];
    for d in (0..m.dart_count()).step_by(2) {
        let far = dist[m.origin(d)].max(dist[m.target(d)]) as usize;
        counts[far] += 1;
    }
    Ok(cumulative_shares(&counts[1..], m.edge_count()))
}

/// Same profile read off a label process `R` on `[0, 2n]`.
pub fn profile_from_labels(r: &[i32]) -> Vec<f64> {
    let corners = &r[..r.len() - 1];
    let max = *corners.iter().max().unwrap() as usize;
    let mut counts = vec![0usize; max];
    for &l in corners {
        counts[l as usize - 1] += 1;
    }
    cumulative_shares(&counts, corners.len())
}

fn cumulative_shares(counts: &[usize], total: usize) -> Vec<f64> {
    let mut acc = 0;
    counts
        .iter()
        .map(|&c| {
            acc += c;
            acc as f64 / total as f64
        })
        .collect()
}
