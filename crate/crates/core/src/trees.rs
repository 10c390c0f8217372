//! Rooted plane trees and their depth-first encodings.
//!
//! Nodes are identified by their rank in the clockwise first-visit order, the
//! root being node `0`. Children are stored in clockwise order. Traversals in
//! the reverse direction report clockwise node ids together with their own
//! visit order, so both orders can coexist without re-indexing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const NO_PARENT: usize = usize::MAX;

/// Orientation used when choosing the next child during a traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    Reverse,
}

/// Depth-first walk (contour process) of a tree with `n` edges: `2n + 1`
/// nonnegative heights starting and ending at zero, moving by one unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk(Vec<u32>);

impl Walk {
    pub fn new(steps: Vec<u32>) -> Result<Self> {
        if steps.len() < 3 {
            return Err(Error::EmptyTree);
        }
        if steps.len() % 2 == 0 {
            return Err(Error::InvalidWalk(format!(
                "length {} is even, expected 2n + 1",
                steps.len()
            )));
        }
        if steps[0] != 0 || *steps.last().unwrap() != 0 {
            return Err(Error::InvalidWalk("walk must start and end at 0".into()));
        }
        for (i, pair) in steps.windows(2).enumerate() {
            if pair[0].abs_diff(pair[1]) != 1 {
                return Err(Error::InvalidWalk(format!(
                    "step {i} -> {} is not a unit move ({} to {})",
                    i + 1,
                    pair[0],
                    pair[1]
                )));
            }
        }
        Ok(Walk(steps))
    }

    pub(crate) fn from_vec_unchecked(steps: Vec<u32>) -> Self {
        debug_assert!(Walk::new(steps.clone()).is_ok());
        Walk(steps)
    }

    /// Number of edges of the encoded tree.
    pub fn edges(&self) -> usize {
        (self.0.len() - 1) / 2
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn max_height(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl std::ops::Index<usize> for Walk {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv_line(f, self.0.iter())
    }
}

impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Walk::new(parse_csv_line(s)?)
    }
}

pub(crate) fn write_csv_line<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_csv_line<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.trim()
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad integer `{}`", tok.trim())))
        })
        .collect()
}

/// Node depths listed in the first-visit order of one traversal direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightSeq(Vec<u32>);

impl HeightSeq {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for HeightSeq {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

/// A depth-first traversal: the node visited at every time step and the
/// resulting walk.
#[derive(Clone, Debug)]
pub struct Contour {
    /// `nodes[i]` is the (clockwise) id of the node visited at time `i`.
    pub nodes: Vec<usize>,
    pub walk: Walk,
}

/// Rooted plane tree with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    parent: Vec<usize>,
    offsets: Vec<usize>,
    kids: Vec<usize>,
    depth: Vec<u32>,
}

impl PlaneTree {
    /// Builds a tree from arbitrary child lists (node `0` is the root, lists in
    /// clockwise order). Nodes are renumbered by clockwise first visit.
    pub fn from_children(children: &[Vec<usize>]) -> Result<Self> {
        let (tree, ids) = Self::from_children_at(children, 0)?;
        if let Some(missing) = ids.iter().position(|&id| id == NO_PARENT) {
            return Err(Error::InvalidTree(format!("node {missing} is unreachable from the root")));
        }
        Ok(tree)
    }

    /// Tree spanned by the nodes reachable from `root` through the child
    /// lists, with the new id of every input node (`usize::MAX` if unreached).
    pub fn from_children_at(children: &[Vec<usize>], root: usize) -> Result<(Self, Vec<usize>)> {
        let count = children.len();
        if root >= count {
            return Err(Error::InvalidTree(format!("root {root} out of range")));
        }
        let mut ids = vec![NO_PARENT; count];
        ids[root] = 0;
        let mut next_id = 1;
        let mut steps = vec![0u32];
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let (node, next) = *top;
            if let Some(&child) = children[node].get(next) {
                top.1 += 1;
                if child >= count {
                    return Err(Error::InvalidTree(format!("child id {child} out of range")));
                }
                if ids[child] != NO_PARENT {
                    return Err(Error::InvalidTree(format!("node {child} reached twice")));
                }
                ids[child] = next_id;
                next_id += 1;
                stack.push((child, 0));
                steps.push(stack.len() as u32 - 1);
            } else {
                stack.pop();
                if !stack.is_empty() {
                    steps.push(stack.len() as u32 - 1);
                }
            }
        }
        if steps.len() < 3 {
            return Err(Error::EmptyTree);
        }
        Ok((PlaneTree::from_walk(&Walk::from_vec_unchecked(steps)), ids))
    }

    /// Inverse of the clockwise walk.
    pub fn from_walk(walk: &Walk) -> Self {
        let steps = walk.as_slice();
        let nodes = walk.edges() + 1;
        let mut parent = vec![NO_PARENT; nodes];
        let mut depth = vec![0u32; nodes];
        let mut child_count = vec![0usize; nodes];
        let mut path = Vec::with_capacity(walk.max_height() as usize + 1);
        path.push(0usize);
        let mut next_id = 1;
        for pair in steps.windows(2) {
            if pair[1] > pair[0] {
                let p = *path.last().unwrap();
                parent[next_id] = p;
                depth[next_id] = pair[1];
                child_count[p] += 1;
                path.push(next_id);
                next_id += 1;
            } else {
                path.pop();
            }
        }
        let mut offsets = Vec::with_capacity(nodes + 1);
        offsets.push(0);
        for &c in &child_count {
            offsets.push(offsets.last().unwrap() + c);
        }
        let mut fill = offsets.clone();
        let mut kids = vec![0usize; nodes - 1];
        // Preorder ids make each child list come out in clockwise order.
        for (u, &p) in parent.iter().enumerate().skip(1) {
            kids[fill[p]] = u;
            fill[p] += 1;
        }
        PlaneTree { parent, offsets, kids, depth }
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, u: usize) -> Option<usize> {
        match self.parent[u] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    /// Children of `u` in clockwise order.
    pub fn children(&self, u: usize) -> &[usize] {
        &self.kids[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn depth(&self, u: usize) -> u32 {
        self.depth[u]
    }

    pub fn height(&self) -> u32 {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Mirror image: every child list reversed.
    pub fn mirror(&self) -> PlaneTree {
        let children: Vec<Vec<usize>> = (0..self.node_count())
            .map(|u| self.children(u).iter().rev().copied().collect())
            .collect();
        PlaneTree::from_children(&children).expect("mirror of a valid tree is valid")
    }

    pub fn contour(&self, direction: Direction) -> Contour {
        let n = self.edge_count();
        let mut nodes = Vec::with_capacity(2 * n + 1);
        let mut steps = Vec::with_capacity(2 * n + 1);
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        nodes.push(0);
        steps.push(0);
        while let Some(top) = stack.last_mut() {
            let (u, visited) = *top;
            let kids = self.children(u);
            if visited < kids.len() {
                top.1 += 1;
                let child = match direction {
                    Direction::Clockwise => kids[visited],
                    Direction::Reverse => kids[kids.len() - 1 - visited],
                };
                stack.push((child, 0));
                nodes.push(child);
                steps.push(self.depth[child]);
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    nodes.push(p);
                    steps.push(self.depth[p]);
                }
            }
        }
        Contour { nodes, walk: Walk::from_vec_unchecked(steps) }
    }

    /// Depth-first walk in the given direction.
    pub fn dfw(&self, direction: Direction) -> Walk {
        match direction {
            Direction::Clockwise => self.clockwise_walk(),
            Direction::Reverse => self.contour(direction).walk,
        }
    }

    fn clockwise_walk(&self) -> Walk {
        // Preorder ids: node u+1 is either a child of u or hangs off an ancestor.
        let n = self.edge_count();
        let mut steps = Vec::with_capacity(2 * n + 1);
        steps.push(0);
        for u in 1..self.node_count() {
            let mut h = *steps.last().unwrap();
            let target = self.depth[u] - 1;
            while h > target {
                h -= 1;
                steps.push(h);
            }
            steps.push(self.depth[u]);
        }
        let mut h = *steps.last().unwrap();
        while h > 0 {
            h -= 1;
            steps.push(h);
        }
        Walk::from_vec_unchecked(steps)
    }

    /// Node ids in first-visit order of the given direction.
    pub fn visit_order(&self, direction: Direction) -> Vec<usize> {
        match direction {
            Direction::Clockwise => (0..self.node_count()).collect(),
            Direction::Reverse => {
                let mut order = Vec::with_capacity(self.node_count());
                let mut stack = vec![0usize];
                while let Some(u) = stack.pop() {
                    order.push(u);
                    // Reverse order visits the last clockwise child first.
                    stack.extend_from_slice(self.children(u));
                }
                order
            }
        }
    }

    /// Depths of the nodes in first-visit order (CHP or RHP).
    pub fn height_process(&self, direction: Direction) -> HeightSeq {
        HeightSeq(
            self.visit_order(direction)
                .into_iter()
                .map(|u| self.depth[u])
                .collect(),
        )
    }

    /// First traversal time of every node, listed in first-visit order of the
    /// same direction.
    pub fn first_visit_times(&self, direction: Direction) -> Vec<usize> {
        let contour = self.contour(direction);
        let mut times = Vec::with_capacity(self.node_count());
        let mut seen = vec![false; self.node_count()];
        for (t, &u) in contour.nodes.iter().enumerate() {
            if !seen[u] {
                seen[u] = true;
                times.push(t);
            }
        }
        times
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.clockwise_walk().fmt(f)
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(walk_to_tree(&s.parse()?))
    }
}

/// Clockwise (or reverse) depth-first walk of `tree`.
pub fn dfw(tree: &PlaneTree, direction: Direction) -> Walk {
    tree.dfw(direction)
}

/// Rebuilds the tree whose clockwise walk is `walk`.
pub fn walk_to_tree(walk: &Walk) -> PlaneTree {
    PlaneTree::from_walk(walk)
}

pub fn height_process(tree: &PlaneTree, direction: Direction) -> HeightSeq {
    tree.height_process(direction)
}

/// Whether times `i` and `j` of `walk` are corners of the same node.
pub fn same_node(walk: &Walk, i: usize, j: usize) -> Result<bool> {
    let max = walk.len() - 1;
    for index in [i, j] {
        if index > max {
            return Err(Error::IndexOutOfRange { index, max });
        }
    }
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    let w = walk.as_slice();
    if w[lo] != w[hi] {
        return Ok(false);
    }
    Ok(w[lo..=hi].iter().all(|&h| h >= w[lo]))
}

/// Clockwise node id visited at every time of a clockwise walk, computed
/// without materializing the tree.
pub fn contour_nodes(walk: &Walk) -> Vec<usize> {
    let steps = walk.as_slice();
    let mut nodes = Vec::with_capacity(steps.len());
    let mut path = Vec::with_capacity(walk.max_height() as usize + 1);
    path.push(0usize);
    nodes.push(0);
    let mut next_id = 1;
    for pair in steps.windows(2) {
        if pair[1] > pair[0] {
            path.push(next_id);
            next_id += 1;
        } else {
            path.pop();
        }
        nodes.push(*path.last().unwrap());
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walk(v: &[u32]) -> Walk {
        Walk::new(v.to_vec()).unwrap()
    }

    fn two_children_one_grandchild() -> PlaneTree {
        // root -> a, root -> b; a -> c
        PlaneTree::from_children(&[vec![1, 2], vec![3], vec![], vec![]]).unwrap()
    }

    #[test]
    fn single_edge_walks() {
        let t = walk_to_tree(&walk(&[0, 1, 0]));
        assert_eq!(t.edge_count(), 1);
        assert_eq!(dfw(&t, Direction::Clockwise).as_slice(), &[0, 1, 0]);
        assert_eq!(dfw(&t, Direction::Reverse).as_slice(), &[0, 1, 0]);
        assert_eq!(height_process(&t, Direction::Clockwise).as_slice(), &[0, 1]);
    }

    #[test]
    fn hand_traversal_both_directions() {
        let t = two_children_one_grandchild();
        assert_eq!(dfw(&t, Direction::Clockwise).as_slice(), &[0, 1, 2, 1, 0, 1, 0]);
        assert_eq!(dfw(&t, Direction::Reverse).as_slice(), &[0, 1, 0, 1, 2, 1, 0]);
    }

    #[test]
    fn path_from_walk() {
        let t = walk_to_tree(&walk(&[0, 1, 2, 1, 0]));
        assert_eq!(t.children(0), &[1]);
        assert_eq!(t.children(1), &[2]);
        assert!(t.children(2).is_empty());
    }

    #[test]
    fn cherry_heights() {
        let t = walk_to_tree(&walk(&[0, 1, 0, 1, 0]));
        assert_eq!(height_process(&t, Direction::Clockwise).as_slice(), &[0, 1, 1]);
        assert_eq!(height_process(&t, Direction::Reverse).as_slice(), &[0, 1, 1]);
        assert_eq!(t.visit_order(Direction::Reverse), vec![0, 2, 1]);
    }

    #[test]
    fn same_node_cases() {
        let cherry = walk(&[0, 1, 0, 1, 0]);
        assert!(same_node(&cherry, 0, 4).unwrap());
        assert!(!same_node(&cherry, 1, 3).unwrap());
        let path = walk(&[0, 1, 2, 1, 0]);
        assert!(same_node(&path, 1, 3).unwrap());
        assert!(same_node(&path, 3, 1).unwrap());
        assert_eq!(
            same_node(&path, 0, 5),
            Err(Error::IndexOutOfRange { index: 5, max: 4 })
        );
    }

    #[test]
    fn rejects_bad_walks() {
        assert_eq!(Walk::new(vec![0]), Err(Error::EmptyTree));
        assert!(Walk::new(vec![0, 1, 1]).is_err());
        assert!(Walk::new(vec![0, 1, 2]).is_err());
        assert!(Walk::new(vec![0, 2, 0]).is_err());
        assert!(Walk::new(vec![0, 1, 0, 1]).is_err());
        assert!("0,1,x".parse::<Walk>().is_err());
    }

    #[test]
    fn from_children_rejects_cycles_and_orphans() {
        assert!(PlaneTree::from_children(&[vec![1], vec![0]]).is_err());
        assert!(PlaneTree::from_children(&[vec![1], vec![], vec![]]).is_err());
        assert_eq!(PlaneTree::from_children(&[vec![]]), Err(Error::EmptyTree));
    }

    #[test]
    fn from_children_relabels_in_clockwise_order() {
        let t = PlaneTree::from_children(&[vec![2, 1], vec![], vec![3], vec![]]).unwrap();
        assert_eq!(t.children(0), &[1, 3]);
        assert_eq!(t.children(1), &[2]);
    }

    #[test]
    fn serialization_is_the_clockwise_walk() {
        let t = two_children_one_grandchild();
        assert_eq!(t.to_string(), "0,1,2,1,0,1,0");
        assert_eq!("0,1,2,1,0,1,0".parse::<PlaneTree>().unwrap(), t);
    }

    #[test]
    fn contour_nodes_match_tree_contour() {
        let t = two_children_one_grandchild();
        let c = t.contour(Direction::Clockwise);
        assert_eq!(contour_nodes(&c.walk), c.nodes);
        assert_eq!(c.nodes, vec![0, 1, 2, 1, 0, 3, 0]);
    }

    #[test]
    fn reverse_contour_reports_clockwise_ids() {
        let t = two_children_one_grandchild();
        let c = t.contour(Direction::Reverse);
        assert_eq!(c.nodes, vec![0, 3, 0, 1, 2, 1, 0]);
        assert_eq!(t.first_visit_times(Direction::Reverse), vec![0, 1, 3, 4]);
    }
}
