use std::collections::{BTreeMap, BTreeSet};

use quadmap::enumeration::{enumerate, labeled_trees, rooted_quad_count, Enumerated, Kind};
use quadmap::labeled::{encode, encoding_stabilizer, is_well_labeled, reroot, LabeledTree};
use quadmap::planar_map::{bfs_distances, point, radius, validate_quadrangulation};
use quadmap::schaeffer::{
    assemble, corner_assignment, doddering, fiber, fiber_size_by_darts, gluer, predecessor_table,
    quad_of_tree, tree_of_quad,
};
use quadmap::trees::Direction;

fn well_labeled(n: usize) -> Vec<LabeledTree> {
    match enumerate(n, Kind::WellLabeled).unwrap() {
        Enumerated::LabeledTrees(v) => v,
        _ => unreachable!(),
    }
}

#[test]
fn bijection_round_trip_and_injectivity() {
    for n in 1..=5 {
        let trees = well_labeled(n);
        let mut codes = BTreeSet::new();
        for t in &trees {
            let q = quad_of_tree(t).unwrap();
            let m = q.map();
            assert!(validate_quadrangulation(m));
            assert_eq!((m.edge_count(), m.vertex_count(), m.face_count()), (2 * n, n + 2, n));
            assert_eq!(&tree_of_quad(&q).unwrap(), t, "round trip failed for {t}");
            codes.insert(q.code());
        }
        assert_eq!(codes.len(), trees.len());
        assert_eq!(trees.len() as u64, rooted_quad_count(n));
    }
}

#[test]
fn image_is_every_rooted_quadrangulation() {
    for n in 1..=4 {
        let from_trees: BTreeSet<_> = well_labeled(n).iter().map(|t| quad_of_tree(t).unwrap().code()).collect();
        let Enumerated::RootedQuads(quads) = enumerate(n, Kind::RootedQuads).unwrap() else {
            unreachable!()
        };
        let from_maps: BTreeSet<_> = quads.iter().map(|q| q.code()).collect();
        assert_eq!(from_trees, from_maps, "n = {n}");
    }
}

#[test]
fn labels_are_distances_and_origin_degree_counts_minima() {
    for n in 1..=5 {
        for t in well_labeled(n) {
            let e = encode(&t);
            let q = quad_of_tree(&t).unwrap();
            let m = q.map();
            let dist = bfs_distances(m, q.origin()).unwrap();
            for i in 0..2 * n {
                assert_eq!(dist[m.origin(2 * i)] as i32, e.r[i]);
            }
            assert_eq!(m.degree(q.origin()), e.minima().len());
            assert_eq!(m.degree(q.origin()), e.r[..2 * n].iter().filter(|&&l| l == 1).count());
            assert_eq!(radius(m, q.origin()).unwrap() as i32, t.max_label());
        }
    }
}

#[test]
fn doddering_reverse_heights_are_the_labels() {
    for n in 1..=5 {
        for t in well_labeled(n) {
            let e = encode(&t);
            let d = doddering(&e.r).unwrap();
            assert_eq!(d.tree().edge_count(), e.r.len());
            let rhp = d.tree().height_process(Direction::Reverse);
            let expected: Vec<u32> = std::iter::once(0).chain(e.r.iter().map(|&x| x as u32)).collect();
            assert_eq!(rhp.as_slice(), &expected[..]);
            let p = predecessor_table(&e.r).unwrap();
            for i in 0..e.r.len() {
                let pi = p.get(i);
                for j in (pi + 1).max(0) as usize..i {
                    assert!(pi <= p.get(j) && p.get(j) < j as isize);
                }
            }
        }
    }
}

#[test]
fn gluing_agrees_with_the_chord_construction() {
    for n in 1..=4 {
        for t in well_labeled(n) {
            let e = encode(&t);
            let d = doddering(&e.r[..2 * n]).unwrap();
            let g = gluer(&e.v);
            let q = assemble(&d, &g, &corner_assignment(&d)).unwrap();
            assert_eq!(q.map().vertex_count(), n + 2);
            assert_eq!(q.code(), quad_of_tree(&t).unwrap().code(), "tree {t}");
        }
    }
}

#[test]
fn fibers_match_minima_over_stabilizer() {
    let mut total_rooted = 0;
    for n in 1..=3 {
        let mut pointed = BTreeMap::new();
        for t in well_labeled(n) {
            let q = quad_of_tree(&t).unwrap();
            pointed.entry(point(&q).code()).or_insert_with(|| (point(&q), encode(&t)));
        }
        let mut rooted = 0;
        for (pq, e) in pointed.values() {
            let f = fiber(pq);
            assert_eq!(f.len(), fiber_size_by_darts(pq));
            assert_eq!(f.len(), e.minima().len() / encoding_stabilizer(e));
            for q in &f {
                assert_eq!(point(q).code(), pq.code());
            }
            rooted += f.len();
        }
        assert_eq!(rooted as u64, rooted_quad_count(n));
        total_rooted += rooted;
    }
    assert_eq!(total_rooted, 2 + 9 + 54);
}

#[test]
fn pointing_ignores_rerooting_at_minima() {
    for n in 1..=3 {
        for t in labeled_trees(n).into_iter().filter(is_well_labeled) {
            let e = encode(&t);
            let base = point(&quad_of_tree(&t).unwrap()).code();
            for theta in e.minima() {
                let moved = quadmap::labeled::decode(&reroot(&e, theta).unwrap()).unwrap();
                assert_eq!(point(&quad_of_tree(&moved).unwrap()).code(), base);
            }
        }
    }
}

#[test]
fn one_face_examples() {
    let trees = well_labeled(1);
    let mut degrees: Vec<usize> = trees
        .iter()
        .map(|t| {
            let q = quad_of_tree(t).unwrap();
            q.map().degree(q.origin())
        })
        .collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 2]);
    for t in &trees {
        let q = quad_of_tree(t).unwrap();
        assert_eq!(fiber(&point(&q)).len(), 1);
    }
}
