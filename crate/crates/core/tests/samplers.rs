use std::collections::BTreeMap;

use proptest::prelude::*;
use quadmap::enumeration::{catalan, law_tables, walks};
use quadmap::harness::{
    check_instance, replica_rng, sample_labeled_uniform, sample_pd_encoding, sample_pointed_ps, sample_rooted_pd,
    sample_uniform_encoding, uniform_walk,
};
use quadmap::labeled::{encode, is_well_labeled};

/// Chi-square 99% critical values by degrees of freedom.
fn critical(df: usize) -> f64 {
    match df {
        4 => 13.277,
        5 => 15.086,
        8 => 20.090,
        17 => 33.409,
        _ => panic!("no critical value for df={df}"),
    }
}

/// Pearson statistic of observed counts against expected probabilities; every
/// category with positive probability must be listed in `expected`.
fn chi_square(observed: &BTreeMap<String, usize>, expected: &BTreeMap<String, f64>) -> f64 {
    let draws: usize = observed.values().sum();
    assert!(observed.keys().all(|k| expected.contains_key(k)), "sample outside the support");
    expected
        .iter()
        .map(|(k, &p)| {
            let e = p * draws as f64;
            let o = *observed.get(k).unwrap_or(&0) as f64;
            (o - e).powi(2) / e
        })
        .sum()
}

fn tally(keys: impl Iterator<Item = String>) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_default() += 1;
    }
    counts
}

fn uniform_over(keys: impl Iterator<Item = String>) -> BTreeMap<String, f64> {
    let keys: Vec<String> = keys.collect();
    let p = 1.0 / keys.len() as f64;
    keys.into_iter().map(|k| (k, p)).collect()
}

fn code_key(code: &[u32]) -> String {
    code.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
}

#[test]
fn walks_are_uniform() {
    let mut rng = replica_rng(11, 0, 0);
    let observed = tally((0..20_000).map(|_| uniform_walk(3, &mut rng).to_string()));
    let expected = uniform_over(walks(3).iter().map(|w| w.to_string()));
    assert_eq!(expected.len() as u64, catalan(3));
    let stat = chi_square(&observed, &expected);
    assert!(stat < critical(4), "chi2 = {stat}");
}

#[test]
fn labeled_trees_are_uniform() {
    let mut rng = replica_rng(12, 0, 0);
    let ones = (0..30_000).filter(|_| sample_uniform_encoding(1, &mut rng).r[1] == 1).count();
    assert!((ones as f64 / 30_000.0 - 1.0 / 3.0).abs() < 0.02, "share {ones}");

    let observed = tally((0..100_000).map(|_| sample_labeled_uniform(2, &mut rng).to_string()));
    let expected = uniform_over(quadmap::enumeration::labeled_trees(2).iter().map(|t| t.to_string()));
    assert_eq!(expected.len(), 18);
    let stat = chi_square(&observed, &expected);
    assert!(stat < critical(17), "chi2 = {stat}");
}

#[test]
fn rooted_law_is_degree_biased() {
    let mut rng = replica_rng(13, 0, 0);
    // One edge: the star (origin degree 1) has weight 2/3.
    let stars = (0..30_000).filter(|_| sample_pd_encoding(1, &mut rng).r[1] == 2).count();
    assert!((stars as f64 / 30_000.0 - 2.0 / 3.0).abs() < 0.02, "share {stars}");

    let n = 2;
    let tables = law_tables(n).unwrap();
    let c = (catalan(n) * 3u64.pow(n as u32)) as f64;
    let expected: BTreeMap<String, f64> = tables
        .rooted
        .iter()
        .map(|(code, e)| (code_key(code.as_slice()), 2.0 * n as f64 / (c * e.quad.map().degree(e.quad.origin()) as f64)))
        .collect();
    assert_eq!(expected.len(), 9);
    let observed = tally((0..60_000).map(|_| code_key(sample_rooted_pd(n, &mut rng).1.code().as_slice())));
    let stat = chi_square(&observed, &expected);
    assert!(stat < critical(8), "chi2 = {stat}");
}

#[test]
fn pointed_law_matches_the_table() {
    let mut rng = replica_rng(14, 0, 0);
    let tables = law_tables(2).unwrap();
    let expected: BTreeMap<String, f64> = tables
        .pointed
        .iter()
        .map(|(code, e)| (code_key(code.as_slice()), *e.schaeffer.numer() as f64 / *e.schaeffer.denom() as f64))
        .collect();
    assert_eq!(expected.len(), 6);
    let observed = tally((0..60_000).map(|_| code_key(sample_pointed_ps(2, &mut rng).code().as_slice())));
    let stat = chi_square(&observed, &expected);
    assert!(stat < critical(5), "chi2 = {stat}");
}

#[test]
fn sampling_is_deterministic() {
    let a = sample_pd_encoding(500, &mut replica_rng(3, 4, 5));
    let b = sample_pd_encoding(500, &mut replica_rng(3, 4, 5));
    let c = sample_pd_encoding(500, &mut replica_rng(3, 4, 6));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_instances_satisfy_every_identity(n in 1usize..3000, seed in any::<u64>()) {
        let mut rng = replica_rng(seed, 7, 0);
        let e = sample_pd_encoding(n, &mut rng);
        prop_assert!(is_well_labeled(&quadmap::labeled::decode(&e).unwrap()));
        prop_assert_eq!(check_instance(&e), Ok(()));
        let (t, q) = sample_rooted_pd(n, &mut rng);
        prop_assert_eq!(encode(&quadmap::schaeffer::tree_of_quad(&q).unwrap()), encode(&t));
    }
}
