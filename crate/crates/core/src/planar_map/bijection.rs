//! General planar maps with `n` edges versus quadrangulations with `n` faces.
//!
//! Every corner of the map becomes an edge from its vertex to a new vertex
//! placed in its face. Map dart `d` owns the corner between `d` and
//! `next(d)`; the new edge for it gets darts `2d` (vertex to face) and
//! `2d + 1`.

use super::{bfs_distances, HalfEdgeMap, MarkedMap, Marking};
use crate::error::{Error, Result};

pub fn quad_of_map(m: &MarkedMap) -> Result<MarkedMap> {
    let map = &m.map;
    let darts = map.dart_count();
    let mut twin = vec![0; 2 * darts];
    let mut next = vec![0; 2 * darts];
    for d in 0..darts {
        twin[2 * d] = 2 * d + 1;
        twin[2 * d + 1] = 2 * d;
        next[2 * d] = 2 * map.next(d);
    }
    for f in 0..map.face_count() {
        // The corner after the k-th face dart is the one owned by its twin.
        // Faces are traversed counterclockwise, so the clockwise order at the
        // face vertex is the reversed traversal.
        let corners: Vec<usize> = map.face_darts(f).map(|d| map.twin(d)).collect();
        let k = corners.len();
        for j in 0..k {
            next[2 * corners[j] + 1] = 2 * corners[(j + k - 1) % k] + 1;
        }
    }
    let quad = HalfEdgeMap::new(twin, next)?;
    let marking = match m.marking {
        Marking::Root(r) => Marking::Root(2 * map.prev(r)),
        Marking::Origin(v) => {
            let d = map.darts_around(v).next().unwrap();
            Marking::Origin(quad.origin(2 * d))
        }
    };
    MarkedMap::new(quad, marking)
}

/// Inverse of [`quad_of_map`]: vertices at even distance from the origin
/// are the map's vertices, and each face contributes the edge joining its two
/// even corners.
pub fn map_of_quad(q: &MarkedMap) -> Result<MarkedMap> {
    let quad = &q.map;
    if let Some(why) = super::quadrangulation_defect(quad) {
        return Err(Error::NotAQuadrangulation(why));
    }
    let origin = match q.marking {
        Marking::Root(d) => quad.origin(d),
        Marking::Origin(v) => v,
    };
    let dist = bfs_distances(quad, origin)?;
    let darts = quad.dart_count();
    let even = |g: usize| dist[quad.origin(g)] % 2 == 0;
    let mut rank = vec![usize::MAX; darts];
    let mut blue = Vec::with_capacity(darts / 2);
    for g in 0..darts {
        if even(g) {
            rank[g] = blue.len();
            blue.push(g);
        }
    }
    let mut twin = vec![0; blue.len()];
    let mut next = vec![0; blue.len()];
    for (i, &g) in blue.iter().enumerate() {
        next[i] = rank[quad.next(g)];
        let opposite = quad.face_next(quad.face_next(g));
        debug_assert!(even(opposite));
        twin[i] = rank[opposite];
    }
    let map = HalfEdgeMap::new(twin, next)?;
    let marking = match q.marking {
        Marking::Root(rho) => Marking::Root(rank[quad.next(rho)]),
        Marking::Origin(v) => {
            let g = quad.darts_around(v).next().unwrap();
            Marking::Origin(map.origin(rank[g]))
        }
    };
    MarkedMap::new(map, marking)
}

#[cfg(test)]
mod tests {
    use super::super::{rooted_code, validate_quadrangulation};
    use super::*;

    fn single_loop() -> HalfEdgeMap {
        HalfEdgeMap::new(vec![1, 0], vec![1, 0]).unwrap()
    }

    fn single_link() -> HalfEdgeMap {
        HalfEdgeMap::new(vec![1, 0], vec![0, 1]).unwrap()
    }

    #[test]
    fn one_edge_maps_give_the_two_one_face_quads() {
        let mut codes = Vec::new();
        for map in [single_loop(), single_link()] {
            let m = MarkedMap::new(map, Marking::Root(0)).unwrap();
            let q = quad_of_map(&m).unwrap();
            assert!(validate_quadrangulation(&q.map));
            assert_eq!(q.map.face_count(), 1);
            assert_eq!(map_of_quad(&q).unwrap(), m);
            let Marking::Root(r) = q.marking else { unreachable!() };
            codes.push(rooted_code(&q.map, r));
        }
        assert_ne!(codes[0], codes[1]);
    }

    #[test]
    fn pointed_round_trip() {
        let m = MarkedMap::new(single_link(), Marking::Origin(1)).unwrap();
        let q = quad_of_map(&m).unwrap();
        assert_eq!(map_of_quad(&q).unwrap(), m);
    }
}
