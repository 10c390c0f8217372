//! Well-labeled trees with `n` edges versus rooted quadrangulations with `n`
//! faces.
//!
//! Corner `i` of the tree (time `i` of the clockwise walk, `0 <= i < 2n`)
//! sends a chord to corner `P(i)`, or to an extra vertex `v` when
//! `P(i) = -1`. Chord `i` is the edge with darts `2i` (leaving corner `i`)
//! and `2i + 1`. The tree edges are then erased.

use super::predecessor::predecessors_unchecked;
use crate::error::{Error, Result};
use crate::labeled::{encode, Encoding, LabeledTree};
use crate::planar_map::{bfs_distances, HalfEdgeMap, RootedQuadrangulation};
use crate::trees::{contour_nodes, PlaneTree};

pub fn quad_of_tree(t: &LabeledTree) -> Result<RootedQuadrangulation> {
    if t.min_label() < 1 {
        return Err(Error::NotWellLabeled);
    }
    Ok(quad_of_encoding(&encode(t)))
}

/// [`quad_of_tree`] on an encoding known to be well-labeled.
pub fn quad_of_encoding(e: &Encoding) -> RootedQuadrangulation {
    let corners = e.r.len() - 1;
    let r = &e.r[..corners];
    let p = predecessors_unchecked(r);
    let nodes = contour_nodes(&e.v);
    let v = e.edges() + 1;

    // Chords arriving at each corner, by decreasing origin (CSR layout).
    let mut offsets = vec![0usize; corners + 2];
    for &target in p.as_slice() {
        offsets[(target + 1) as usize + 1] += 1;
    }
    for k in 1..offsets.len() {
        offsets[k] += offsets[k - 1];
    }
    let mut fill = offsets.clone();
    let mut arrivals = vec![0usize; corners];
    for j in (0..corners).rev() {
        let slot = (p.get(j) + 1) as usize;
        arrivals[fill[slot]] = j;
        fill[slot] += 1;
    }
    let arriving = |slot: usize| &arrivals[offsets[slot]..offsets[slot + 1]];

    let darts = 2 * corners;
    let mut twin = vec![0; darts];
    for i in 0..corners {
        twin[2 * i] = 2 * i + 1;
        twin[2 * i + 1] = 2 * i;
    }
    let mut next = vec![0; darts];
    let mut first = vec![usize::MAX; v + 1];
    let mut last = vec![usize::MAX; v + 1];
    let mut push = |vertex: usize, dart: usize| {
        if last[vertex] == usize::MAX {
            first[vertex] = dart;
        } else {
            next[last[vertex]] = dart;
        }
        last[vertex] = dart;
    };
    // Clockwise around a tree node: its corners in order, each holding the
    // outgoing chord followed by the chords that land there.
    for i in 0..corners {
        let u = nodes[i];
        push(u, 2 * i);
        for &j in arriving(i + 1) {
            push(u, 2 * j + 1);
        }
    }
    for &j in arriving(0) {
        push(v, 2 * j + 1);
    }
    for vertex in 0..=v {
        next[last[vertex]] = first[vertex];
    }
    let map = HalfEdgeMap::from_parts(twin, next);
    // Chord 0 always ends at v since R(0) = 1.
    RootedQuadrangulation::from_parts(map, 1)
}

/// Inverse of [`quad_of_tree`]: labels are distances to the origin, and each
/// face contributes one tree edge.
pub fn tree_of_quad(q: &RootedQuadrangulation) -> Result<LabeledTree> {
    let m = q.map();
    let origin = q.origin();
    let dist = bfs_distances(m, origin)?;
    let darts = m.dart_count();
    let label = |d: usize| dist[m.origin(d)];

    // A tree edge is either a face dart (`along`) or a diagonal drawn inside
    // the corner just counterclockwise of a dart (`inside`).
    let mut along = vec![usize::MAX; darts];
    let mut inside = vec![usize::MAX; darts];
    let mut ends = Vec::with_capacity(m.face_count());
    for f in 0..m.face_count() {
        let d: Vec<usize> = m.face_darts(f).collect();
        let l: Vec<u32> = d.iter().map(|&x| label(x)).collect();
        let id = ends.len();
        if l[0] == l[2] && l[1] == l[3] {
            // Two opposite corners one step further away: join them.
            let (a, b) = if l[1] > l[0] { (d[1], d[3]) } else { (d[0], d[2]) };
            inside[a] = id;
            inside[b] = id;
            ends.push((m.origin(a), m.origin(b)));
        } else {
            let top = (0..4).max_by_key(|&k| l[k]).unwrap();
            let e = d[top];
            along[e] = id;
            along[m.twin(e)] = id;
            ends.push((m.origin(e), m.target(e)));
        }
    }

    // Tree half-edges around every vertex in clockwise order.
    let around = |start: usize| {
        let mut list = Vec::new();
        let mut d = start;
        loop {
            if inside[d] != usize::MAX {
                list.push(inside[d]);
            }
            if along[d] != usize::MAX {
                list.push(along[d]);
            }
            d = m.next(d);
            if d == start {
                break;
            }
        }
        list
    };
    let other = |edge: usize, w: usize| {
        let (a, b) = ends[edge];
        if a == w {
            b
        } else {
            a
        }
    };

    let root_node = m.target(q.root());
    let mut children = vec![Vec::new(); m.vertex_count()];
    children[root_node] = around(m.next(m.twin(q.root())))
        .into_iter()
        .map(|e| other(e, root_node))
        .collect();
    let mut parent_edge = vec![usize::MAX; m.vertex_count()];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (&c, e) in children[root_node].iter().zip(around(m.next(m.twin(q.root()))).into_iter()) {
        stack.push((c, e));
    }
    let mut visited = vec![false; m.vertex_count()];
    visited[root_node] = true;
    while let Some((w, via)) = stack.pop() {
        if visited[w] {
            return Err(Error::NotAQuadrangulation("face edges do not form a tree".into()));
        }
        visited[w] = true;
        parent_edge[w] = via;
        let list = around(m.darts_around(w).next().unwrap());
        let at = list.iter().position(|&e| e == via).unwrap();
        let k = list.len();
        let kids: Vec<(usize, usize)> =
            (1..k).map(|s| list[(at + s) % k]).map(|e| (other(e, w), e)).collect();
        children[w] = kids.iter().map(|&(c, _)| c).collect();
        stack.extend(kids);
    }
    let (tree, ids) = PlaneTree::from_children_at(&children, root_node)?;
    if tree.edge_count() != m.face_count() {
        return Err(Error::NotAQuadrangulation("face edges do not span the vertices".into()));
    }
    let mut labels = vec![0; tree.node_count()];
    for (w, &id) in ids.iter().enumerate() {
        if id != usize::MAX {
            labels[id] = dist[w] as i32;
        }
    }
    LabeledTree::new(tree, labels)
}
