//! Planar maps as rotation systems.
//!
//! A map on `2E` darts is given by the involution `twin` and the permutation
//! `next`, the clockwise successor of a dart around its origin. Faces are the
//! orbits of `next ∘ twin`; each face lies on the left of its darts, so a
//! face is traversed counterclockwise.

mod bijection;
mod canonical;
mod io;
mod metric;

pub use bijection::{map_of_quad, quad_of_map};
pub use canonical::{canonical_code, pointed_code, rooted_code, CanonicalCode, CodeMode};
pub use io::{Marking, MarkedMap};
pub use metric::{bfs_distances, profile, profile_from_labels, radius};

use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdgeMap {
    twin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    vertex: Vec<usize>,
    vertex_dart: Vec<usize>,
    face: Vec<usize>,
    face_dart: Vec<usize>,
}

impl HalfEdgeMap {
    /// Validates the permutations, connectivity and genus 0.
    pub fn new(twin: Vec<usize>, next: Vec<usize>) -> Result<Self> {
        let darts = twin.len();
        if darts == 0 || darts % 2 == 1 {
            return Err(Error::MalformedMap(format!("{darts} darts, expected a positive even count")));
        }
        if next.len() != darts {
            return Err(Error::MalformedMap(format!(
                "twin has {darts} entries, next has {}",
                next.len()
            )));
        }
        for (d, &t) in twin.iter().enumerate() {
            if t >= darts || t == d || twin[t] != d {
                return Err(Error::MalformedMap(format!("twin is not a fixed-point-free involution at {d}")));
            }
        }
        let mut prev = vec![UNSET; darts];
        for (d, &s) in next.iter().enumerate() {
            if s >= darts || prev[s] != UNSET {
                return Err(Error::MalformedMap(format!("next is not a permutation at {d}")));
            }
            prev[s] = d;
        }
        let map = Self::assemble(twin, next, prev);
        if !map.is_connected() {
            return Err(Error::Disconnected);
        }
        let chi = map.euler_characteristic();
        if chi != 2 {
            return Err(Error::NotPlanar(chi));
        }
        Ok(map)
    }

    /// Builds a map from permutations known to be valid.
    pub(crate) fn from_parts(twin: Vec<usize>, next: Vec<usize>) -> Self {
        let mut prev = vec![0; next.len()];
        for (d, &s) in next.iter().enumerate() {
            prev[s] = d;
        }
        let map = Self::assemble(twin, next, prev);
        debug_assert!(map.is_connected() && map.euler_characteristic() == 2);
        map
    }

    fn assemble(twin: Vec<usize>, next: Vec<usize>, prev: Vec<usize>) -> Self {
        let darts = twin.len();
        let mut vertex = vec![UNSET; darts];
        let mut vertex_dart = Vec::new();
        for d in 0..darts {
            if vertex[d] == UNSET {
                let id = vertex_dart.len();
                vertex_dart.push(d);
                let mut e = d;
                loop {
                    vertex[e] = id;
                    e = next[e];
                    if e == d {
                        break;
                    }
                }
            }
        }
        let mut face = vec![UNSET; darts];
        let mut face_dart = Vec::new();
        for d in 0..darts {
            if face[d] == UNSET {
                let id = face_dart.len();
                face_dart.push(d);
                let mut e = d;
                loop {
                    face[e] = id;
                    e = next[twin[e]];
                    if e == d {
                        break;
                    }
                }
            }
        }
        HalfEdgeMap { twin, next, prev, vertex, vertex_dart, face, face_dart }
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for d in self.darts_around(v) {
                let w = self.vertex[self.twin[d]];
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == seen.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_dart.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_dart.len()
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// Clockwise successor around the origin of `d`.
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    /// Next dart along the face on the left of `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.next[self.twin[d]]
    }

    /// Origin vertex of `d`. Vertices are numbered by their smallest dart.
    pub fn origin(&self, d: usize) -> usize {
        self.vertex[d]
    }

    pub fn target(&self, d: usize) -> usize {
        self.vertex[self.twin[d]]
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face[d]
    }

    pub fn twins(&self) -> &[usize] {
        &self.twin
    }

    pub fn nexts(&self) -> &[usize] {
        &self.next
    }

    /// Darts leaving `v`, clockwise, starting with its smallest dart.
    pub fn darts_around(&self, v: usize) -> DartCycle<'_> {
        let start = self.vertex_dart[v];
        DartCycle { perm: &self.next, twin: None, start, current: Some(start) }
    }

    /// Darts of face `f` in traversal order, starting with its smallest dart.
    pub fn face_darts(&self, f: usize) -> DartCycle<'_> {
        let start = self.face_dart[f];
        DartCycle { perm: &self.next, twin: Some(&self.twin), start, current: Some(start) }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_around(v).count()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.face_darts(f).count()
    }
}

/// Iterator over a cycle of `next` (a vertex) or `next ∘ twin` (a face).
pub struct DartCycle<'a> {
    perm: &'a [usize],
    twin: Option<&'a [usize]>,
    start: usize,
    current: Option<usize>,
}

impl Iterator for DartCycle<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let d = self.current?;
        let step = match self.twin {
            Some(twin) => self.perm[twin[d]],
            None => self.perm[d],
        };
        self.current = (step != self.start).then_some(step);
        Some(d)
    }
}

/// Why a map fails to be a quadrangulation, if it does.
pub fn quadrangulation_defect(m: &HalfEdgeMap) -> Option<String> {
    if let Some(d) = (0..m.dart_count()).find(|&d| m.origin(d) == m.target(d)) {
        return Some(format!("dart {d} is a loop"));
    }
    if let Some(f) = (0..m.face_count()).find(|&f| m.face_degree(f) != 4) {
        return Some(format!("face {f} has degree {}", m.face_degree(f)));
    }
    None
}

/// Connected, genus 0 (both enforced by [`HalfEdgeMap::new`]), loopless,
/// every face of degree four.
pub fn validate_quadrangulation(m: &HalfEdgeMap) -> bool {
    quadrangulation_defect(m).is_none()
}

/// Quadrangulation with a root dart; its origin is the root's start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedQuadrangulation {
    map: HalfEdgeMap,
    root: usize,
}

impl RootedQuadrangulation {
    pub fn new(map: HalfEdgeMap, root: usize) -> Result<Self> {
        if root >= map.dart_count() {
            return Err(Error::IndexOutOfRange { index: root, max: map.dart_count() - 1 });
        }
        if let Some(why) = quadrangulation_defect(&map) {
            return Err(Error::NotAQuadrangulation(why));
        }
        Ok(RootedQuadrangulation { map, root })
    }

    pub(crate) fn from_parts(map: HalfEdgeMap, root: usize) -> Self {
        debug_assert!(quadrangulation_defect(&map).is_none());
        RootedQuadrangulation { map, root }
    }

    pub fn map(&self) -> &HalfEdgeMap {
        &self.map
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn origin(&self) -> usize {
        self.map.origin(self.root)
    }

    /// Number of faces.
    pub fn size(&self) -> usize {
        self.map.face_count()
    }

    pub fn code(&self) -> CanonicalCode {
        rooted_code(&self.map, self.root)
    }
}

/// Quadrangulation with a distinguished origin vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedQuadrangulation {
    map: HalfEdgeMap,
    origin: usize,
}

impl PointedQuadrangulation {
    pub fn new(map: HalfEdgeMap, origin: usize) -> Result<Self> {
        if origin >= map.vertex_count() {
            return Err(Error::IndexOutOfRange { index: origin, max: map.vertex_count() - 1 });
        }
        if let Some(why) = quadrangulation_defect(&map) {
            return Err(Error::NotAQuadrangulation(why));
        }
        Ok(PointedQuadrangulation { map, origin })
    }

    pub fn map(&self) -> &HalfEdgeMap {
        &self.map
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn size(&self) -> usize {
        self.map.face_count()
    }

    pub fn code(&self) -> CanonicalCode {
        pointed_code(&self.map, self.origin)
    }
}

/// Forgets the root dart, keeping its origin.
pub fn point(q: &RootedQuadrangulation) -> PointedQuadrangulation {
    PointedQuadrangulation { map: q.map.clone(), origin: q.origin() }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Path with two edges, as a one-face map: darts 0,1 on edge a-b and
    /// 2,3 on edge b-c.
    pub fn path2() -> HalfEdgeMap {
        // a: {0}; b: {1, 2}; c: {3}
        HalfEdgeMap::new(vec![1, 0, 3, 2], vec![0, 2, 1, 3]).unwrap()
    }

    pub fn triangle() -> HalfEdgeMap {
        // edges a-b (0,1), b-c (2,3), c-a (4,5)
        HalfEdgeMap::new(vec![1, 0, 3, 2, 5, 4], vec![5, 2, 1, 4, 3, 0]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn path_is_a_quadrangulation() {
        let m = path2();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (3, 2, 1));
        assert_eq!(m.face_degree(0), 4);
        assert!(validate_quadrangulation(&m));
    }

    #[test]
    fn triangle_is_not() {
        let m = triangle();
        assert_eq!(m.face_count(), 2);
        assert!(!validate_quadrangulation(&m));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(HalfEdgeMap::new(vec![0, 1], vec![0, 1]), Err(Error::MalformedMap(_))));
        assert!(matches!(HalfEdgeMap::new(vec![1, 0], vec![0, 0]), Err(Error::MalformedMap(_))));
        assert!(matches!(HalfEdgeMap::new(vec![1, 0, 3], vec![0, 1, 2]), Err(Error::MalformedMap(_))));
        // Two disjoint edges.
        assert_eq!(HalfEdgeMap::new(vec![1, 0, 3, 2], vec![0, 1, 2, 3]), Err(Error::Disconnected));
        // One vertex with two loops interleaved: a torus.
        assert_eq!(HalfEdgeMap::new(vec![2, 3, 0, 1], vec![1, 2, 3, 0]), Err(Error::NotPlanar(0)));
    }

    #[test]
    fn loops_are_rejected() {
        // A single loop: one vertex, two faces of degree one.
        let m = HalfEdgeMap::new(vec![1, 0], vec![1, 0]).unwrap();
        assert!(quadrangulation_defect(&m).unwrap().contains("loop"));
    }

    #[test]
    fn rooted_and_pointed_wrappers() {
        let q = RootedQuadrangulation::new(path2(), 1).unwrap();
        assert_eq!(q.origin(), 1);
        assert_eq!(q.size(), 1);
        assert_eq!(point(&q).origin(), 1);
        assert!(RootedQuadrangulation::new(triangle(), 0).is_err());
        assert!(RootedQuadrangulation::new(path2(), 4).is_err());
    }
}
