use std::collections::BTreeMap;

use super::construction::{quad_of_encoding, tree_of_quad};
use crate::labeled::{encode, reroot};
use crate::planar_map::{PointedQuadrangulation, RootedQuadrangulation};

pub use crate::planar_map::point;

/// Rooted quadrangulations that forget to `pq`: the images of the rerootings
/// of its tree at minimal labels, one per isomorphism class.
pub fn fiber(pq: &PointedQuadrangulation) -> Vec<RootedQuadrangulation> {
    let root = pq.map().darts_around(pq.origin()).next().unwrap();
    let q = RootedQuadrangulation::from_parts(pq.map().clone(), root);
    let e = encode(&tree_of_quad(&q).expect("a valid quadrangulation has a tree"));
    let mut distinct = BTreeMap::new();
    for theta in e.minima() {
        let q = quad_of_encoding(&reroot(&e, theta).expect("minima are in range"));
        distinct.entry(q.code()).or_insert(q);
    }
    distinct.into_values().collect()
}

/// Number of distinct rootings at origin darts, computed directly.
pub fn fiber_size_by_darts(pq: &PointedQuadrangulation) -> usize {
    let mut codes: Vec<_> = pq
        .map()
        .darts_around(pq.origin())
        .map(|d| crate::planar_map::rooted_code(pq.map(), d))
        .collect();
    codes.sort();
    codes.dedup();
    codes.len()
}
