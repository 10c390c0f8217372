//! Labeled trees, their `(R, V)` encodings and the rerooting action.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trees::{contour_nodes, parse_csv_line, write_csv_line, Direction, PlaneTree, Walk};

/// Plane tree with an integer label per node: root label 1, labels of
/// neighbours differ by at most one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    tree: PlaneTree,
    labels: Vec<i32>,
}

impl LabeledTree {
    /// `labels` is indexed by clockwise node id.
    pub fn new(tree: PlaneTree, labels: Vec<i32>) -> Result<Self> {
        if labels.len() != tree.node_count() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} nodes",
                labels.len(),
                tree.node_count()
            )));
        }
        if labels[0] != 1 {
            return Err(Error::InvalidLabels(format!("root label is {}, expected 1", labels[0])));
        }
        for u in 1..tree.node_count() {
            let p = tree.parent(u).unwrap();
            if labels[u].abs_diff(labels[p]) > 1 {
                return Err(Error::InvalidLabels(format!(
                    "edge {p}-{u} carries labels {} and {}",
                    labels[p], labels[u]
                )));
            }
        }
        Ok(LabeledTree { tree, labels })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> i32 {
        self.labels[u]
    }

    pub fn edge_count(&self) -> usize {
        self.tree.edge_count()
    }

    pub fn min_label(&self) -> i32 {
        *self.labels.iter().min().unwrap()
    }

    pub fn max_label(&self) -> i32 {
        *self.labels.iter().max().unwrap()
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        encode(self).fmt(f)
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        decode(&s.parse()?)
    }
}

/// Label process `R` and clockwise walk `V` of a labeled tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Encoding {
    pub r: Vec<i32>,
    pub v: Walk,
}

impl Encoding {
    /// Checks every encoding invariant.
    pub fn new(r: Vec<i32>, v: Walk) -> Result<Self> {
        let e = Encoding { r, v };
        node_labels(&e)?;
        Ok(e)
    }

    pub(crate) fn new_unchecked(r: Vec<i32>, v: Walk) -> Self {
        debug_assert!(node_labels(&Encoding { r: r.clone(), v: v.clone() }).is_ok());
        Encoding { r, v }
    }

    pub fn edges(&self) -> usize {
        self.v.edges()
    }

    /// Positions in `[0, 2n - 1]` where `R` is minimal.
    pub fn minima(&self) -> Vec<usize> {
        minima_set(&self.r)
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv_line(f, self.r.iter())?;
        f.write_str("\n")?;
        self.v.fmt(f)
    }
}

impl FromStr for Encoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let (Some(r), Some(v), None) = (lines.next(), lines.next(), lines.next()) else {
            return Err(Error::Parse("an encoding is exactly two lines, R then V".into()));
        };
        Encoding::new(parse_csv_line(r)?, v.parse()?)
    }
}

fn node_labels(e: &Encoding) -> Result<Vec<i32>> {
    let len = e.v.len();
    if e.r.len() != len {
        return Err(Error::InvalidEncoding(format!(
            "R has length {}, V has length {len}",
            e.r.len()
        )));
    }
    if e.r[0] != 1 || e.r[len - 1] != 1 {
        return Err(Error::InvalidEncoding("R must start and end at 1".into()));
    }
    if let Some(i) = e.r.windows(2).position(|w| w[0].abs_diff(w[1]) > 1) {
        return Err(Error::InvalidEncoding(format!("R jumps by more than one at {i}")));
    }
    let nodes = contour_nodes(&e.v);
    let mut labels = vec![None; e.v.edges() + 1];
    for (i, &u) in nodes.iter().enumerate() {
        match labels[u] {
            None => labels[u] = Some(e.r[i]),
            Some(l) if l != e.r[i] => {
                return Err(Error::InvalidEncoding(format!(
                    "corners of node {u} carry labels {l} and {}",
                    e.r[i]
                )))
            }
            Some(_) => {}
        }
    }
    Ok(labels.into_iter().map(Option::unwrap).collect())
}

pub fn encode(t: &LabeledTree) -> Encoding {
    let contour = t.tree.contour(Direction::Clockwise);
    let r = contour.nodes.iter().map(|&u| t.labels[u]).collect();
    Encoding { r, v: contour.walk }
}

pub fn decode(e: &Encoding) -> Result<LabeledTree> {
    let labels = node_labels(e)?;
    LabeledTree::new(PlaneTree::from_walk(&e.v), labels)
}

pub fn is_well_labeled(t: &LabeledTree) -> bool {
    t.labels.iter().all(|&l| l >= 1)
}

/// Encoding of the tree rerooted at corner `theta`, labels shifted so the
/// new root has label 1.
pub fn reroot(e: &Encoding, theta: usize) -> Result<Encoding> {
    let len = e.v.len();
    let period = len - 1;
    if theta > period {
        return Err(Error::IndexOutOfRange { index: theta, max: period });
    }
    let v = e.v.as_slice();
    let vt = v[theta];
    // Minimum of V between theta and every other position, on both sides.
    let mut low_after = Vec::with_capacity(period + 1 - theta);
    let mut m = vt;
    for &h in &v[theta..] {
        m = m.min(h);
        low_after.push(m);
    }
    let mut low_before = vec![0u32; theta + 1];
    m = vt;
    for j in (0..=theta).rev() {
        m = m.min(v[j]);
        low_before[j] = m;
    }
    let mut walk = Vec::with_capacity(len);
    let mut r = Vec::with_capacity(len);
    for i in 0..len {
        let j = if i == period { theta } else { (theta + i) % period };
        let low = if j >= theta { low_after[j - theta] } else { low_before[j] };
        walk.push(v[j] + vt - 2 * low);
        r.push(e.r[j] - e.r[theta] + 1);
    }
    Ok(Encoding { r, v: Walk::from_vec_unchecked(walk) })
}

/// Sorted positions in `[0, len - 2]` attaining the minimum of `r`.
pub fn minima_set(r: &[i32]) -> Vec<usize> {
    let body = &r[..r.len().saturating_sub(1).max(1)];
    let min = *body.iter().min().unwrap();
    body.iter()
        .enumerate()
        .filter(|&(_, &x)| x == min)
        .map(|(i, _)| i)
        .collect()
}

/// First position in `[0, 2n - 1]` where `r` is minimal.
pub fn first_minimum(r: &[i32]) -> usize {
    let body = &r[..r.len().saturating_sub(1).max(1)];
    let min = *body.iter().min().unwrap();
    body.iter().position(|&x| x == min).unwrap()
}

/// Rerooting at the first minimum: the well-labeled representative.
pub fn to_positive(t: &LabeledTree) -> LabeledTree {
    decode(&positive_encoding(&encode(t))).expect("rerooting preserves validity")
}

pub fn positive_encoding(e: &Encoding) -> Encoding {
    reroot(e, first_minimum(&e.r)).expect("first minimum is in range")
}

/// Number of rerootings `theta` in `[0, 2n - 1]` fixing the tree.
pub fn stabilizer_size(t: &LabeledTree) -> usize {
    encoding_stabilizer(&encode(t))
}

pub fn encoding_stabilizer(e: &Encoding) -> usize {
    let period = e.v.len() - 1;
    (0..period)
        .filter(|&theta| {
            // Label increments must be invariant under the cyclic shift.
            let shift_ok = (0..period).all(|i| {
                let a = (theta + i) % period;
                let b = (a + 1) % period;
                e.r[(i + 1) % period] - e.r[i] == e.r[b] - e.r[a]
            });
            shift_ok && reroot(e, theta).unwrap() == *e
        })
        .count()
}

/// Underlying tree with one `{-1, 0, +1}` mark per edge: the label change
/// when the edge is walked downward, i.e. on its first clockwise side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedTree {
    tree: PlaneTree,
    marks: Vec<i8>,
}

impl MarkedTree {
    /// `marks[k - 1]` belongs to the edge from node `k` to its parent.
    pub fn new(tree: PlaneTree, marks: Vec<i8>) -> Result<Self> {
        if marks.len() != tree.edge_count() {
            return Err(Error::InvalidMarks(format!(
                "{} marks for {} edges",
                marks.len(),
                tree.edge_count()
            )));
        }
        if let Some(k) = marks.iter().position(|m| !(-1..=1).contains(m)) {
            return Err(Error::InvalidMarks(format!("mark {} on edge {}", marks[k], k + 1)));
        }
        Ok(MarkedTree { tree, marks })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn marks(&self) -> &[i8] {
        &self.marks
    }

    /// Marks of all `2n` sides in clockwise contour order; the two sides of
    /// an edge carry opposite marks.
    pub fn side_marks(&self) -> Vec<i8> {
        let c = self.tree.contour(Direction::Clockwise);
        c.nodes
            .windows(2)
            .zip(c.walk.as_slice().windows(2))
            .map(|(u, h)| {
                if h[1] > h[0] {
                    self.marks[u[1] - 1]
                } else {
                    -self.marks[u[0] - 1]
                }
            })
            .collect()
    }
}

pub fn to_marked(t: &LabeledTree) -> MarkedTree {
    let marks = (1..t.tree.node_count())
        .map(|u| (t.labels[u] - t.labels[t.tree.parent(u).unwrap()]) as i8)
        .collect();
    MarkedTree { tree: t.tree.clone(), marks }
}

pub fn from_marked(m: &MarkedTree) -> LabeledTree {
    let mut labels = vec![1i32; m.tree.node_count()];
    // Preorder ids: parents precede children.
    for u in 1..labels.len() {
        labels[u] = labels[m.tree.parent(u).unwrap()] + i32::from(m.marks[u - 1]);
    }
    LabeledTree { tree: m.tree.clone(), labels }
}
