use super::HalfEdgeMap;

/// Isomorphism invariant of a rooted or pointed map. Two maps have equal
/// codes iff they are isomorphic as rooted (resp. pointed) maps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_le_bytes()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeMode {
    /// The argument is the root dart.
    Rooted,
    /// The argument is the origin vertex.
    Pointed,
}

pub fn canonical_code(m: &HalfEdgeMap, mode: CodeMode, at: usize) -> CanonicalCode {
    match mode {
        CodeMode::Rooted => rooted_code(m, at),
        CodeMode::Pointed => pointed_code(m, at),
    }
}

/// Relabels darts in breadth-first order from `root`, exploring `next` then
/// `twin`, and lists both permutations in the new labels.
pub fn rooted_code(m: &HalfEdgeMap, root: usize) -> CanonicalCode {
    let darts = m.dart_count();
    let mut label = vec![u32::MAX; darts];
    let mut order = Vec::with_capacity(darts);
    label[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for e in [m.next(d), m.twin(d)] {
            if label[e] == u32::MAX {
                label[e] = order.len() as u32;
                order.push(e);
            }
        }
    }
    let mut code = Vec::with_capacity(2 * darts);
    for &d in &order {
        code.push(label[m.next(d)]);
        code.push(label[m.twin(d)]);
    }
    CanonicalCode(code)
}

/// Smallest rooted code over the darts leaving `origin`.
pub fn pointed_code(m: &HalfEdgeMap, origin: usize) -> CanonicalCode {
    m.darts_around(origin)
        .map(|d| rooted_code(m, d))
        .min()
        .expect("every vertex has a dart")
}
