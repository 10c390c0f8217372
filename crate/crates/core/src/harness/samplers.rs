use rand::seq::SliceRandom;
use rand::Rng;

use crate::labeled::{decode, first_minimum, reroot, Encoding, LabeledTree};
use crate::planar_map::{point, PointedQuadrangulation, RootedQuadrangulation};
use crate::schaeffer::quad_of_encoding;
use crate::trees::Walk;

/// Uniform clockwise walk with `n` edges: shuffle `n` up-steps and `n + 1`
/// down-steps, start right after the first minimum of the partial sums (the
/// only rotation that stays nonnegative), drop the final down-step.
pub fn uniform_walk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Walk {
    assert!(n >= 1, "trees need at least one edge");
    let mut steps: Vec<i8> = Vec::with_capacity(2 * n + 1);
    steps.resize(n, 1);
    steps.resize(2 * n + 1, -1);
    steps.shuffle(rng);
    let mut sum = 0i64;
    let mut low = 0i64;
    let mut start = 0;
    for (k, &s) in steps.iter().enumerate() {
        sum += i64::from(s);
        if sum < low {
            low = sum;
            start = k + 1;
        }
    }
    let mut heights = Vec::with_capacity(2 * n + 1);
    let mut h = 0u32;
    heights.push(0);
    for k in 0..2 * n {
        let s = steps[(start + k) % steps.len()];
        h = if s > 0 { h + 1 } else { h - 1 };
        heights.push(h);
    }
    Walk::from_vec_unchecked(heights)
}

/// Uniform labeled tree with `n` edges, as an encoding: a uniform walk and
/// independent uniform label steps in `{−1, 0, 1}` along the edges.
pub fn sample_uniform_encoding<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Encoding {
    let v = uniform_walk(n, rng);
    let steps = v.as_slice();
    let mut path = Vec::with_capacity(v.max_height() as usize + 1);
    path.push(1i32);
    let mut r = Vec::with_capacity(steps.len());
    r.push(1);
    for pair in steps.windows(2) {
        if pair[1] > pair[0] {
            let top = *path.last().unwrap();
            path.push(top + rng.random_range(-1..=1));
        } else {
            path.pop();
        }
        r.push(*path.last().unwrap());
    }
    Encoding::new_unchecked(r, v)
}

pub fn sample_labeled_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LabeledTree {
    decode(&sample_uniform_encoding(n, rng)).expect("sampled encodings are valid")
}

/// Well-labeled encoding: a uniform labeled tree rerooted at a uniformly
/// chosen minimum.
pub fn sample_pd_encoding<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Encoding {
    let e = sample_uniform_encoding(n, rng);
    let minima = e.minima();
    let theta = minima[rng.random_range(0..minima.len())];
    reroot(&e, theta).expect("minima are in range")
}

/// A rooted quadrangulation whose law gives `q` weight `2n / (C_n 3^n deg q)`.
pub fn sample_rooted_pd<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (LabeledTree, RootedQuadrangulation) {
    let e = sample_pd_encoding(n, rng);
    let q = quad_of_encoding(&e);
    (decode(&e).expect("rerooting keeps encodings valid"), q)
}

/// Pointed quadrangulation of the positive representative of a uniform
/// labeled tree.
pub fn sample_pointed_ps<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PointedQuadrangulation {
    let e = sample_uniform_encoding(n, rng);
    let positive = reroot(&e, first_minimum(&e.r)).expect("minimum is in range");
    point(&quad_of_encoding(&positive))
}
