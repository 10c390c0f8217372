//! The doddering tree of a label process, the gluer tree of a walk, and the
//! quadrangulation obtained by identifying doddering nodes along the gluer
//! tree.

use super::predecessor::{check_label_process, predecessors_unchecked};
use crate::error::{Error, Result};
use crate::planar_map::{HalfEdgeMap, RootedQuadrangulation};
use crate::trees::{contour_nodes, Direction, PlaneTree, Walk};

/// Tree on tags `-1 ..= N` where the parent of tag `i` is `P(i)`. Among
/// siblings, larger tags come first clockwise, so the reverse traversal
/// visits tags in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DodderingTree {
    tree: PlaneTree,
    tag_of: Vec<isize>,
    node_of_tag: Vec<usize>,
}

impl DodderingTree {
    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    /// Tag of a node (clockwise id).
    pub fn tag(&self, node: usize) -> isize {
        self.tag_of[node]
    }

    /// Node carrying `tag`, for `tag` in `-1 ..= N`.
    pub fn node(&self, tag: isize) -> usize {
        self.node_of_tag[(tag + 1) as usize]
    }
}

pub fn doddering(r: &[i32]) -> Result<DodderingTree> {
    check_label_process(r)?;
    let p = predecessors_unchecked(r);
    // Index tag + 1; children pushed by decreasing tag.
    let mut children = vec![Vec::new(); r.len() + 1];
    for j in (0..r.len()).rev() {
        children[(p.get(j) + 1) as usize].push(j + 1);
    }
    let (tree, ids) = PlaneTree::from_children_at(&children, 0)?;
    let mut tag_of = vec![0isize; ids.len()];
    for (slot, &id) in ids.iter().enumerate() {
        tag_of[id] = slot as isize - 1;
    }
    Ok(DodderingTree { tree, tag_of, node_of_tag: ids })
}

/// The underlying tree of a labeled tree; corner `k` is time `k` of its
/// clockwise walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluerTree {
    walk: Walk,
    corner_node: Vec<usize>,
}

impl GluerTree {
    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn edges(&self) -> usize {
        self.walk.edges()
    }

    /// Node owning corner `k`.
    pub fn corner_node(&self, k: usize) -> usize {
        self.corner_node[k]
    }
}

pub fn gluer(v: &Walk) -> GluerTree {
    GluerTree { walk: v.clone(), corner_node: contour_nodes(v) }
}

/// `b[k]` is the gluer corner receiving the `(k + 1)`-th non-root node of
/// the doddering tree in reverse order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingAssignment(pub Vec<usize>);

/// The discrete assignment: the `(k + 1)`-th doddering node goes to corner `k`.
pub fn corner_assignment(d: &DodderingTree) -> GluingAssignment {
    GluingAssignment((0..d.tree.edge_count()).collect())
}

/// Identifies doddering nodes whose images are corners of one gluer node.
/// Around a glued vertex the pieces are ordered by corner, each piece keeping
/// its own clockwise rotation (parent edge first).
pub fn assemble(d: &DodderingTree, g: &GluerTree, b: &GluingAssignment) -> Result<RootedQuadrangulation> {
    let t = &d.tree;
    let order = t.visit_order(Direction::Reverse);
    let b = &b.0;
    if b.len() != order.len() - 1 {
        return Err(Error::InadmissibleGluing(format!(
            "{} images for {} non-root nodes",
            b.len(),
            order.len() - 1
        )));
    }
    if let Some(k) = b.windows(2).position(|w| w[1] <= w[0]) {
        return Err(Error::InadmissibleGluing(format!("images not increasing at {}", k + 1)));
    }
    if let Some(&last) = b.last() {
        if last > 2 * g.edges() {
            return Err(Error::InadmissibleGluing(format!("corner {last} does not exist")));
        }
    }
    let root_vertex = g.edges() + 1;
    let mut vertex_of = vec![root_vertex; t.node_count()];
    let mut depth_of_vertex = vec![None; root_vertex];
    for (k, &x) in order[1..].iter().enumerate() {
        let u = g.corner_node(b[k]);
        vertex_of[x] = u;
        match depth_of_vertex[u] {
            None => depth_of_vertex[u] = Some(t.depth(x)),
            Some(h) if h != t.depth(x) => {
                return Err(Error::InadmissibleGluing(format!(
                    "gluer node {u} would merge labels {h} and {}",
                    t.depth(x)
                )))
            }
            Some(_) => {}
        }
    }

    // Edge to the parent of node x >= 1: dart 2(x-1) upward, 2(x-1)+1 downward.
    let up = |x: usize| 2 * (x - 1);
    let down = |x: usize| 2 * (x - 1) + 1;
    let darts = 2 * t.edge_count();
    let mut twin = vec![0; darts];
    for x in 1..t.node_count() {
        twin[up(x)] = down(x);
        twin[down(x)] = up(x);
    }
    let mut next = vec![usize::MAX; darts];
    let mut first = vec![usize::MAX; root_vertex + 1];
    let mut last = vec![usize::MAX; root_vertex + 1];
    let mut push = |vertex: usize, dart: usize| {
        if last[vertex] == usize::MAX {
            first[vertex] = dart;
        } else {
            next[last[vertex]] = dart;
        }
        last[vertex] = dart;
    };
    // Reverse order lists the pieces of each glued vertex by increasing corner.
    for &x in &order {
        let vertex = vertex_of[x];
        if x != 0 {
            push(vertex, up(x));
        }
        for &c in t.children(x) {
            push(vertex, down(c));
        }
    }
    for vertex in 0..=root_vertex {
        if last[vertex] == usize::MAX {
            return Err(Error::InadmissibleGluing(format!("gluer node {vertex} receives nothing")));
        }
        next[last[vertex]] = first[vertex];
    }
    let map = HalfEdgeMap::new(twin, next)
        .map_err(|e| Error::InadmissibleGluing(format!("glued map is invalid: {e}")))?;
    // Root edge: from the doddering root to the first node of the reverse order.
    RootedQuadrangulation::new(map, down(order[1]))
}
