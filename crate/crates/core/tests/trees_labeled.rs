use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use quadmap::enumeration::{labeled_trees, walks};
use quadmap::harness::{replica_rng, sample_uniform_encoding, uniform_walk};
use quadmap::harness::verify::first_visit_identity;
use quadmap::labeled::{
    decode, encode, first_minimum, from_marked, is_well_labeled, minima_set, reroot, stabilizer_size, to_marked,
    to_positive, Encoding,
};
use quadmap::trees::{contour_nodes, dfw, same_node, walk_to_tree, Direction, PlaneTree, Walk};

/// Distances from `from` to every node, by BFS on the undirected tree.
fn tree_distances(t: &PlaneTree, from: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; t.node_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let around = t.children(u).iter().copied().chain(t.parent(u));
        for w in around {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Rerooting read off the tree: distances and label differences seen from
/// the node of corner `theta`, along the contour started there.
fn reroot_oracle(e: &Encoding, theta: usize) -> (Vec<u32>, Vec<i32>) {
    let n2 = e.r.len() - 1;
    let nodes = contour_nodes(&e.v);
    let t = walk_to_tree(&e.v);
    let dist = tree_distances(&t, nodes[theta]);
    let at = |i: usize| if i == n2 { theta } else { (theta + i) % n2 };
    let v = (0..=n2).map(|i| dist[nodes[at(i)]]).collect();
    let r = (0..=n2).map(|i| e.r[at(i)] - e.r[theta] + 1).collect();
    (v, r)
}

fn check_tree(t: &PlaneTree) {
    let w = dfw(t, Direction::Clockwise);
    assert_eq!(&walk_to_tree(&w), t);
    assert_eq!(dfw(t, Direction::Reverse), dfw(&t.mirror(), Direction::Clockwise));
    assert!(first_visit_identity(t));
    // Corners of one node form one class of the same-node relation.
    let nodes = contour_nodes(&w);
    let mut classes = BTreeSet::new();
    for i in 0..w.len() {
        let class: Vec<usize> = (0..w.len()).filter(|&j| same_node(&w, i, j).unwrap()).collect();
        assert!(class.iter().all(|&j| nodes[j] == nodes[i]));
        assert_eq!(class.len(), nodes.iter().filter(|&&u| u == nodes[i]).count());
        classes.insert(class);
    }
    assert_eq!(classes.len(), t.node_count());
}

#[test]
fn every_small_tree_round_trips() {
    for n in 1..=6 {
        for w in walks(n) {
            check_tree(&walk_to_tree(&w));
        }
    }
}

#[test]
fn same_node_rejects_out_of_range() {
    let w: Walk = "0,1,0".parse().unwrap();
    assert!(same_node(&w, 0, 3).is_err());
}

#[test]
fn rerooting_matches_the_tree_and_is_a_group_action() {
    for n in 1..=3 {
        let all: Vec<Encoding> = labeled_trees(n).iter().map(encode).collect();
        let set: BTreeSet<(Vec<i32>, Vec<u32>)> = all.iter().map(|e| (e.r.clone(), e.v.as_slice().to_vec())).collect();
        for theta in 0..=2 * n {
            let mut image = BTreeSet::new();
            for e in &all {
                let f = reroot(e, theta).unwrap();
                Encoding::new(f.r.clone(), f.v.clone()).unwrap();
                let (v, r) = reroot_oracle(e, theta);
                assert_eq!((f.v.as_slice(), &f.r[..]), (&v[..], &r[..]), "θ={theta} on {:?}", e.r);
                for theta2 in 0..=2 * n {
                    let composed = reroot(&f, theta2).unwrap();
                    assert_eq!(composed, reroot(e, (theta + theta2) % (2 * n)).unwrap());
                }
                image.insert((f.r, f.v.into_inner()));
            }
            // A fixed rerooting permutes the labeled trees, so it keeps the
            // uniform law.
            assert_eq!(image, set);
        }
        assert!(reroot(&all[0], 2 * n + 1).is_err());
    }
}

#[test]
fn encodings_and_marks_round_trip() {
    for n in 1..=4 {
        let trees = labeled_trees(n);
        for t in &trees {
            assert_eq!(&decode(&encode(t)).unwrap(), t);
            let m = to_marked(t);
            assert_eq!(&from_marked(&m), t);
        }
        let shapes: BTreeSet<String> = trees.iter().map(|t| t.tree().to_string()).collect();
        assert_eq!(trees.len(), shapes.len() * 3usize.pow(n as u32));
    }
}

#[test]
fn positive_representative_and_orbits() {
    for n in 1..=4 {
        for t in labeled_trees(n) {
            let e = encode(&t);
            let p = to_positive(&t);
            assert!(is_well_labeled(&p));
            assert_eq!(p, decode(&reroot(&e, first_minimum(&e.r)).unwrap()).unwrap());
            assert_eq!(to_positive(&p), p);
            if is_well_labeled(&t) {
                assert_eq!(p, t);
            }
            // Rerooting anywhere lands on a minimum rerooting of L(T).
            let pe = encode(&p);
            let at_minima: BTreeSet<Vec<i32>> =
                minima_set(&pe.r).into_iter().map(|th| reroot(&pe, th).unwrap().r).collect();
            let orbit: BTreeSet<(Vec<i32>, Vec<u32>)> = (0..2 * n)
                .map(|th| reroot(&e, th).unwrap())
                .map(|f| (f.r, f.v.into_inner()))
                .collect();
            assert_eq!(orbit.len() * stabilizer_size(&t), 2 * n);
            for th in 0..2 * n {
                let moved = decode(&reroot(&e, th).unwrap()).unwrap();
                assert!(at_minima.contains(&encode(&to_positive(&moved)).r));
            }
        }
    }
}

fn sampled_encoding() -> impl Strategy<Value = Encoding> {
    (1usize..600, any::<u64>()).prop_map(|(n, seed)| sample_uniform_encoding(n, &mut replica_rng(seed, 1, 0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_trees_round_trip(n in 1usize..3000, seed in any::<u64>()) {
        let w = uniform_walk(n, &mut replica_rng(seed, 0, 0));
        let t = walk_to_tree(&w);
        prop_assert_eq!(dfw(&t, Direction::Clockwise), w);
        prop_assert_eq!(dfw(&t, Direction::Reverse), dfw(&t.mirror(), Direction::Clockwise));
        prop_assert!(first_visit_identity(&t));
        prop_assert_eq!(t.node_count(), n + 1);
    }

    #[test]
    fn random_rerootings(e in sampled_encoding(), a in any::<usize>(), b in any::<usize>()) {
        let n2 = e.r.len() - 1;
        let (a, b) = (a % (n2 + 1), b % (n2 + 1));
        let f = reroot(&e, a).unwrap();
        prop_assert!(Encoding::new(f.r.clone(), f.v.clone()).is_ok());
        prop_assert_eq!(reroot(&f, b).unwrap(), reroot(&e, (a + b) % n2).unwrap());
        let (v, r) = reroot_oracle(&e, a);
        prop_assert_eq!(f.v.as_slice(), &v[..]);
        prop_assert_eq!(&f.r, &r);
        let t = decode(&e).unwrap();
        prop_assert_eq!(encode(&t), e.clone());
        prop_assert_eq!(from_marked(&to_marked(&t)), t);
    }
}
