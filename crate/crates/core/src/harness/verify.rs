use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;

use crate::enumeration::{
    catalan, enumerate, law_tables, orbit_decomposition, rooted_maps, rooted_quad_count, rooted_quads, tv_distance,
    unrooted_tree_count, walkup_count, Enumerated, Kind,
};
use crate::labeled::{encode, Encoding};
use crate::planar_map::{bfs_distances, map_of_quad, point, quad_of_map, quadrangulation_defect, radius};
use crate::schaeffer::{assemble, corner_assignment, doddering, gluer, quad_of_encoding, quad_of_tree, tree_of_quad};
use crate::trees::{Direction, PlaneTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check { name: name.into(), passed, detail }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<40} {}", self.name, self.detail)
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn well_labeled(n: usize) -> Vec<crate::labeled::LabeledTree> {
    match enumerate(n, Kind::WellLabeled).expect("size within bounds") {
        Enumerated::LabeledTrees(v) => v,
        _ => unreachable!(),
    }
}

/// Every exact identity of the exhaustive suite for sizes up to `max_n`
/// (each check also has its own bound).
pub fn exhaustive_checks(max_n: usize) -> Vec<Check> {
    vec![
        Check::new("tree/quad round trip", bijection(max_n.min(5))),
        Check::new("gluing equals chord construction", gluing(max_n.min(4))),
        Check::new("map/quad round trip", maps(max_n.min(3))),
        Check::new("labeled tree counts", labeled_counts(max_n.min(6))),
        Check::new("unrooted tree formula", walkup(max_n.min(6))),
        Check::new("orbits equal pointed quads", orbits(max_n.min(4))),
        Check::new("exact laws", laws(max_n.min(3))),
        Check::new("tv strictly decreasing", tv_trend(max_n.min(3))),
    ]
}

fn bijection(max_n: usize) -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=max_n {
        let trees = well_labeled(n);
        let mut codes = BTreeSet::new();
        for t in &trees {
            let q = quad_of_tree(t).map_err(|e| e.to_string())?;
            let back = tree_of_quad(&q).map_err(|e| e.to_string())?;
            ensure(&back == t, || format!("round trip fails on {t}"))?;
            codes.insert(q.code());
        }
        ensure(codes.len() == trees.len(), || format!("n={n}: construction is not injective"))?;
        ensure(trees.len() as u64 == rooted_quad_count(n), || {
            format!("n={n}: {} trees vs {} quads", trees.len(), rooted_quad_count(n))
        })?;
        counts.push(trees.len().to_string());
    }
    Ok(format!("n<={max_n}, counts {}", counts.join(" ")))
}

fn gluing(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for t in well_labeled(n) {
            let e = encode(&t);
            let d = doddering(&e.r[..2 * n]).map_err(|e| e.to_string())?;
            let q = assemble(&d, &gluer(&e.v), &corner_assignment(&d)).map_err(|e| e.to_string())?;
            ensure(q.code() == quad_of_tree(&t).unwrap().code(), || format!("gluing differs on {t}"))?;
        }
    }
    Ok(format!("n<={max_n}"))
}

fn maps(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let all = rooted_maps(n).map_err(|e| e.to_string())?;
        for m in &all {
            let q = quad_of_map(m).map_err(|e| e.to_string())?;
            let back = map_of_quad(&q).map_err(|e| e.to_string())?;
            ensure(&back == m, || format!("n={n}: map round trip fails"))?;
        }
        ensure(all.len() as u64 == rooted_quad_count(n), || format!("n={n}: {} rooted maps", all.len()))?;
    }
    Ok(format!("n<={max_n}"))
}

fn labeled_counts(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let got = enumerate(n, Kind::LabeledTrees).map_err(|e| e.to_string())?.len() as u64;
        let want = catalan(n) * 3u64.pow(n as u32);
        ensure(got == want, || format!("n={n}: {got} != C_n 3^n = {want}"))?;
    }
    let quads = enumerate(2, Kind::RootedQuads).map_err(|e| e.to_string())?.len();
    ensure(quads == 9, || format!("{quads} rooted quads with 2 faces"))?;
    Ok(format!("n<={max_n}, 9 rooted quads at n=2"))
}

fn walkup(max_n: usize) -> Outcome {
    let mut values = Vec::new();
    for n in 2..=max_n {
        let formula = walkup_count(n).map_err(|e| e.to_string())?;
        let oracle = unrooted_tree_count(n).map_err(|e| e.to_string())?;
        ensure(formula == oracle, || format!("n={n}: formula {formula}, enumeration {oracle}"))?;
        values.push(formula.to_string());
    }
    Ok(format!("2<=n<={max_n}: {}", values.join(" ")))
}

fn orbits(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let dec = orbit_decomposition(n).map_err(|e| e.to_string())?;
        let total = catalan(n) as usize * 3usize.pow(n as u32);
        ensure(dec.total() == total, || format!("n={n}: orbit sizes sum to {}", dec.total()))?;
        ensure(dec.orbits.iter().all(|o| o.size * o.stabilizer == 2 * n), || {
            format!("n={n}: orbit-stabilizer fails")
        })?;
        let pointed: BTreeSet<_> = rooted_quads(n).iter().map(|q| point(q).code()).collect();
        ensure(dec.orbits.len() == pointed.len(), || {
            format!("n={n}: {} orbits, {} pointed quads", dec.orbits.len(), pointed.len())
        })?;
    }
    Ok(format!("n<={max_n}"))
}

fn laws(max_n: usize) -> Outcome {
    let one = Rational64::from_integer(1);
    for n in 1..=max_n {
        let t = law_tables(n).map_err(|e| e.to_string())?;
        let su: Rational64 = t.pointed.values().map(|e| e.uniform).sum();
        let ss: Rational64 = t.pointed.values().map(|e| e.schaeffer).sum();
        let sd: Rational64 = t.rooted.values().map(|e| e.sampled).sum();
        ensure(su == one && ss == one && sd == one, || format!("n={n}: sums {su} {ss} {sd}"))?;
        ensure(t.rooted.values().all(|e| e.sampled == e.formula), || {
            format!("n={n}: sampled rooted law differs from 2n/(C_n 3^n deg)")
        })?;
    }
    let tv = tv_distance(1).map_err(|e| e.to_string())?;
    ensure(tv == Rational64::new(1, 6), || format!("tv(1) = {tv}"))?;
    Ok(format!("n<={max_n}, tv(1) = 1/6"))
}

/// Total variation between the uniform and the tree-induced pointed laws for
/// `n = 1 ..= max_n`, which must strictly decrease.
fn tv_trend(max_n: usize) -> Outcome {
    let tvs: Vec<Rational64> = (1..=max_n.max(2))
        .map(tv_distance)
        .collect::<crate::Result<_>>()
        .map_err(|e| e.to_string())?;
    let shown: Vec<String> = tvs.iter().map(|r| r.to_string()).collect();
    let shown = format!("tv {}", shown.join(" "));
    if tvs.windows(2).all(|w| w[1] < w[0]) {
        Ok(shown)
    } else {
        Err(shown)
    }
}

/// `m(l) + H̃(l) = 2l`: first reverse visit time plus depth, for every node.
pub fn first_visit_identity(t: &PlaneTree) -> bool {
    let times = t.first_visit_times(Direction::Reverse);
    let depths = t.height_process(Direction::Reverse);
    times.iter().zip(depths.as_slice()).enumerate().all(|(l, (&m, &h))| m + h as usize == 2 * l)
}

/// Exact structural identities of the quadrangulation of a well-labeled
/// encoding; the error names the first one that fails.
pub fn check_instance(e: &Encoding) -> std::result::Result<(), String> {
    let n = e.edges();
    let r = &e.r;
    let q = quad_of_encoding(e);
    let m = q.map();
    if let Some(defect) = quadrangulation_defect(m) {
        return Err(defect);
    }
    ensure((m.edge_count(), m.vertex_count(), m.face_count()) == (2 * n, n + 2, n), || {
        format!("E, V, F = {}, {}, {}", m.edge_count(), m.vertex_count(), m.face_count())
    })?;
    let dist = bfs_distances(m, q.origin()).map_err(|e| e.to_string())?;
    ensure((0..2 * n).all(|i| dist[m.origin(2 * i)] as i32 == r[i]), || "labels are not distances".into())?;
    let minima = r[..2 * n].iter().filter(|&&l| l == 1).count();
    ensure(m.degree(q.origin()) == minima, || {
        format!("origin degree {} but {minima} minima", m.degree(q.origin()))
    })?;
    let max = *r.iter().max().unwrap();
    ensure(radius(m, q.origin()).unwrap() as i32 == max, || "radius is not the maximal label".into())?;
    let d = doddering(r).map_err(|e| e.to_string())?;
    let rhp = d.tree().height_process(Direction::Reverse);
    ensure(
        rhp.as_slice()[0] == 0 && rhp.as_slice()[1..].iter().zip(r).all(|(&h, &l)| h as i32 == l),
        || "doddering heights differ from the labels".into(),
    )?;
    ensure(first_visit_identity(d.tree()), || "first-visit identity fails on the doddering tree".into())?;
    ensure(first_visit_identity(&PlaneTree::from_walk(&e.v)), || {
        "first-visit identity fails on the gluer tree".into()
    })?;
    Ok(())
}
