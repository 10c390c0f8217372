//! Exhaustive listings for small sizes and exact laws over them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::{binomial, Integer};
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::labeled::{encode, is_well_labeled, positive_encoding, reroot, Encoding, LabeledTree};
use crate::planar_map::{
    point, quad_of_map, rooted_code, CanonicalCode, HalfEdgeMap, MarkedMap, Marking,
    PointedQuadrangulation, RootedQuadrangulation,
};
use crate::schaeffer::quad_of_encoding;
use crate::trees::{PlaneTree, Walk};

/// Largest size accepted by [`enumerate`].
pub const MAX_ENUMERATION: usize = 6;
/// Largest size accepted by [`orbit_decomposition`].
pub const MAX_ORBITS: usize = 5;
/// Largest size accepted by [`law_tables`] and [`tv_distance`].
pub const MAX_LAWS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    PlaneTrees,
    LabeledTrees,
    WellLabeled,
    RootedQuads,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::PlaneTrees, Kind::LabeledTrees, Kind::WellLabeled, Kind::RootedQuads];

    pub fn name(self) -> &'static str {
        match self {
            Kind::PlaneTrees => "plane_trees",
            Kind::LabeledTrees => "labeled_trees",
            Kind::WellLabeled => "well_labeled",
            Kind::RootedQuads => "rooted_quads",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown kind `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub enum Enumerated {
    PlaneTrees(Vec<PlaneTree>),
    LabeledTrees(Vec<LabeledTree>),
    RootedQuads(Vec<RootedQuadrangulation>),
}

impl Enumerated {
    pub fn len(&self) -> usize {
        match self {
            Enumerated::PlaneTrees(v) => v.len(),
            Enumerated::LabeledTrees(v) => v.len(),
            Enumerated::RootedQuads(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_size(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if n > max {
        return Err(Error::TooLarge { n, max, what });
    }
    Ok(())
}

pub fn enumerate(n: usize, kind: Kind) -> Result<Enumerated> {
    check_size(n, MAX_ENUMERATION, "enumeration")?;
    Ok(match kind {
        Kind::PlaneTrees => Enumerated::PlaneTrees(plane_trees(n)),
        Kind::LabeledTrees => Enumerated::LabeledTrees(labeled_trees(n)),
        Kind::WellLabeled => {
            Enumerated::LabeledTrees(labeled_trees(n).into_iter().filter(is_well_labeled).collect())
        }
        Kind::RootedQuads => Enumerated::RootedQuads(rooted_quads(n)),
    })
}

pub fn catalan(n: usize) -> u64 {
    binomial(2 * n as u64, n as u64) / (n as u64 + 1)
}

/// All clockwise walks with `n` edges, in lexicographic order.
pub fn walks(n: usize) -> Vec<Walk> {
    fn extend(prefix: &mut Vec<u32>, ups: usize, n: usize, out: &mut Vec<Walk>) {
        let h = *prefix.last().unwrap();
        if prefix.len() == 2 * n + 1 {
            out.push(Walk::new(prefix.clone()).unwrap());
            return;
        }
        if h > 0 {
            prefix.push(h - 1);
            extend(prefix, ups, n, out);
            prefix.pop();
        }
        if ups < n {
            prefix.push(h + 1);
            extend(prefix, ups + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![0], 0, n, &mut out);
    out
}

pub fn plane_trees(n: usize) -> Vec<PlaneTree> {
    walks(n).iter().map(PlaneTree::from_walk).collect()
}

/// Every tree with every labeling (`3^n` per tree).
pub fn labeled_trees(n: usize) -> Vec<LabeledTree> {
    let mut out = Vec::with_capacity(catalan(n) as usize * 3usize.pow(n as u32));
    for tree in plane_trees(n) {
        for code in 0..3usize.pow(n as u32) {
            let mut labels = vec![1i32; n + 1];
            let mut c = code;
            for u in 1..=n {
                labels[u] = labels[tree.parent(u).unwrap()] + (c % 3) as i32 - 1;
                c /= 3;
            }
            out.push(LabeledTree::new(tree.clone(), labels).unwrap());
        }
    }
    out
}

/// Rooted planar maps with `n` edges (any face degrees, loops allowed),
/// grown edge by edge and deduplicated by canonical code.
pub fn rooted_maps(n: usize) -> Result<Vec<MarkedMap>> {
    check_size(n, MAX_ENUMERATION, "rooted map enumeration")?;
    let mut layer: BTreeMap<CanonicalCode, HalfEdgeMap> = BTreeMap::new();
    for next in [vec![1, 0], vec![0, 1]] {
        let m = HalfEdgeMap::new(vec![1, 0], next).unwrap();
        layer.insert(unrooted_code(&m), m);
    }
    for _ in 1..n {
        let mut grown = BTreeMap::new();
        for m in layer.values() {
            for child in insertions(m) {
                grown.entry(unrooted_code(&child)).or_insert(child);
            }
        }
        layer = grown;
    }
    let mut out = Vec::new();
    for m in layer.into_values() {
        let mut seen = BTreeSet::new();
        for d in 0..m.dart_count() {
            if seen.insert(rooted_code(&m, d)) {
                out.push(MarkedMap::new(m.clone(), Marking::Root(d))?);
            }
        }
    }
    Ok(out)
}

fn unrooted_code(m: &HalfEdgeMap) -> CanonicalCode {
    (0..m.dart_count()).map(|d| rooted_code(m, d)).min().unwrap()
}

/// Maps with one more edge: a pendant edge in any corner, or an edge
/// joining two corners of one face. Corner `x` lies between `x` and `next(x)`.
fn insertions(m: &HalfEdgeMap) -> Vec<HalfEdgeMap> {
    let darts = m.dart_count();
    let (a, b) = (darts, darts + 1);
    let base_twin = || {
        let mut t = m.twins().to_vec();
        t.extend([b, a]);
        t
    };
    let mut out = Vec::new();
    for x in 0..darts {
        let mut next = m.nexts().to_vec();
        next.extend([next[x], b]);
        next[x] = a;
        out.push(HalfEdgeMap::new(base_twin(), next).expect("pendant edges keep the map planar"));
    }
    for x in 0..darts {
        for y in x..darts {
            if m.face_of(m.next(x)) != m.face_of(m.next(y)) {
                continue;
            }
            let mut next = m.nexts().to_vec();
            next.extend([0, 0]);
            if x == y {
                next[b] = next[x];
                next[a] = b;
                next[x] = a;
            } else {
                next[a] = next[x];
                next[x] = a;
                next[b] = next[y];
                next[y] = b;
            }
            if let Ok(child) = HalfEdgeMap::new(base_twin(), next) {
                out.push(child);
            }
        }
    }
    out
}

/// Rooted quadrangulations with `n` faces, obtained from rooted maps with
/// `n` edges (independently of the labeled-tree construction).
pub fn rooted_quads(n: usize) -> Vec<RootedQuadrangulation> {
    rooted_maps(n)
        .expect("size already checked")
        .iter()
        .map(|m| {
            quad_of_map(m)
                .and_then(MarkedMap::into_rooted_quadrangulation)
                .expect("the image of a map is a quadrangulation")
        })
        .collect()
}

/// `2 * 3^n * (2n)! / (n! (n + 2)!)`.
pub fn rooted_quad_count(n: usize) -> u64 {
    2 * 3u64.pow(n as u32) * binomial(2 * n as u64, n as u64) / ((n as u64 + 1) * (n as u64 + 2))
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u64
}

/// Closed formula for the number of unrooted plane trees with `n` edges,
/// evaluated exactly. At `n = 1` it gives 2 although there is a single such
/// tree; see [`unrooted_tree_count`].
pub fn walkup_formula(n: usize) -> Rational64 {
    assert!(n >= 1);
    let n = n as i64;
    let c = catalan(n as usize) as i64;
    let mut total = Rational64::new(c, 2 * n);
    if n % 2 == 1 {
        total += Rational64::new(binomial(n + 1, (n + 1) / 2), 4 * n);
    }
    total += Rational64::new(totient(n as u64) as i64, n);
    let mut tail = 0i64;
    for s in 2..n {
        if n % s == 0 {
            tail += totient((n / s) as u64) as i64 * binomial(2 * s, s);
        }
    }
    total + Rational64::new(tail, 2 * n)
}

/// Number of unrooted plane trees with `n` edges: the closed formula for
/// `n >= 2` (which must be an integer), the enumeration for `n = 1`.
pub fn walkup_count(n: usize) -> Result<u64> {
    if n < 2 {
        return unrooted_tree_count(n);
    }
    let value = walkup_formula(n);
    if !value.is_integer() {
        return Err(Error::InvalidConfig(format!("formula gives non-integer {value} at n = {n}")));
    }
    Ok(value.to_integer() as u64)
}

/// Orbits of plane trees under rerooting, by exhaustive enumeration.
pub fn unrooted_tree_count(n: usize) -> Result<u64> {
    check_size(n, MAX_ENUMERATION, "unrooted tree enumeration")?;
    let mut reps = BTreeSet::new();
    for w in walks(n) {
        let r = vec![1; 2 * n + 1];
        let e = Encoding::new(r, w).unwrap();
        let rep = (0..2 * n).map(|theta| reroot(&e, theta).unwrap().v.into_inner()).min().unwrap();
        reps.insert(rep);
    }
    Ok(reps.len() as u64)
}

#[derive(Clone, Debug)]
pub struct Orbit {
    /// Smallest encoding in the orbit.
    pub representative: Encoding,
    pub size: usize,
    pub stabilizer: usize,
}

/// Orbits of labeled trees with `n` edges under rerooting.
#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    pub n: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    pub fn total(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

fn orbit_key(e: &Encoding) -> (Vec<i32>, Vec<u32>) {
    (e.r.clone(), e.v.as_slice().to_vec())
}

pub fn orbit_decomposition(n: usize) -> Result<OrbitDecomposition> {
    check_size(n, MAX_ORBITS, "orbit decomposition")?;
    let mut orbits: BTreeMap<(Vec<i32>, Vec<u32>), Orbit> = BTreeMap::new();
    for t in labeled_trees(n) {
        let e = encode(&t);
        let images: Vec<Encoding> = (0..2 * n).map(|theta| reroot(&e, theta).unwrap()).collect();
        let rep = images.iter().min_by_key(|x| orbit_key(x)).unwrap().clone();
        let stabilizer = images.iter().filter(|x| **x == e).count();
        let key = orbit_key(&rep);
        let orbit = orbits.entry(key).or_insert(Orbit { representative: rep, size: 0, stabilizer });
        orbit.size += 1;
    }
    Ok(OrbitDecomposition { n, orbits: orbits.into_values().collect() })
}

#[derive(Clone, Debug)]
pub struct PointedEntry {
    pub quad: PointedQuadrangulation,
    pub uniform: Rational64,
    pub schaeffer: Rational64,
}

#[derive(Clone, Debug)]
pub struct RootedEntry {
    pub quad: RootedQuadrangulation,
    pub origin_degree: usize,
    /// Law of the sampler: uniform labeled tree, uniform minimum, reroot.
    pub sampled: Rational64,
    /// `2n / (C_n 3^n deg)`.
    pub formula: Rational64,
}

/// Exact laws on pointed and rooted quadrangulations with `n` faces, keyed
/// by canonical code.
#[derive(Clone, Debug)]
pub struct LawTables {
    pub n: usize,
    pub pointed: BTreeMap<CanonicalCode, PointedEntry>,
    pub rooted: BTreeMap<CanonicalCode, RootedEntry>,
}

pub fn law_tables(n: usize) -> Result<LawTables> {
    check_size(n, MAX_LAWS, "law tables")?;
    let trees = labeled_trees(n);
    let total = trees.len() as i64;
    let mut pointed: BTreeMap<CanonicalCode, PointedEntry> = BTreeMap::new();
    let mut rooted: BTreeMap<CanonicalCode, RootedEntry> = BTreeMap::new();
    for t in &trees {
        let e = encode(t);
        let q = quad_of_encoding(&positive_encoding(&e));
        let pq = point(&q);
        pointed
            .entry(pq.code())
            .or_insert_with(|| PointedEntry {
                quad: pq,
                uniform: Rational64::from_integer(0),
                schaeffer: Rational64::from_integer(0),
            })
            .schaeffer += Rational64::new(1, total);

        let minima = e.minima();
        let weight = Rational64::new(1, total * minima.len() as i64);
        for theta in minima {
            let q = quad_of_encoding(&reroot(&e, theta).unwrap());
            let degree = q.map().degree(q.origin());
            rooted
                .entry(q.code())
                .or_insert_with(|| RootedEntry {
                    quad: q,
                    origin_degree: degree,
                    sampled: Rational64::from_integer(0),
                    formula: Rational64::new(2 * n as i64, total * degree as i64),
                })
                .sampled += weight;
        }
    }
    let uniform = Rational64::new(1, pointed.len() as i64);
    for entry in pointed.values_mut() {
        entry.uniform = uniform;
    }
    Ok(LawTables { n, pointed, rooted })
}

/// Total variation distance between the uniform law on pointed
/// quadrangulations and the law induced by uniform labeled trees.
pub fn tv_distance(n: usize) -> Result<Rational64> {
    let tables = law_tables(n)?;
    let sum: Rational64 = tables
        .pointed
        .values()
        .map(|e| {
            let d = e.uniform - e.schaeffer;
            if d < Rational64::from_integer(0) {
                -d
            } else {
                d
            }
        })
        .sum();
    Ok(sum / 2)
}
