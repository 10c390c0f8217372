use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::SnakePath;
use crate::harness::uniform_walk;

/// Variance of the head increments per unit of lifetime, so that
/// `Cov(f(s), f(t)) = label_variance · min ζ[s, t]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SnakeLaw {
    pub label_variance: f64,
}

impl SnakeLaw {
    /// `√(2/3)`, the covariance constant stated for the limit snake.
    pub fn stated() -> Self {
        SnakeLaw { label_variance: (2.0f64 / 3.0).sqrt() }
    }

    /// `2/3`, the variance of a uniform step in `{−1, 0, 1}`: the constant
    /// reached by normalized uniform labeled trees.
    pub fn discrete_limit() -> Self {
        SnakeLaw { label_variance: 2.0 / 3.0 }
    }
}

impl Default for SnakeLaw {
    fn default() -> Self {
        SnakeLaw::stated()
    }
}

/// Snake driven by a uniform tree with `m` edges, on the grid `2m`:
/// `ζ = V / √m` (so `ζ ≈ √2 e` for a normalized excursion `e`) and `f` a
/// Gaussian field along the branches of that tree.
pub fn sample_snake<R: Rng + ?Sized>(m: usize, law: SnakeLaw, rng: &mut R) -> SnakePath {
    assert!(m >= 1, "the driving tree needs at least one edge");
    let walk = uniform_walk(m, rng);
    let scale = (m as f64).sqrt();
    let step = Normal::new(0.0, (law.label_variance / scale).sqrt()).unwrap();
    let steps = walk.as_slice();
    let mut heads = Vec::with_capacity(walk.max_height() as usize + 1);
    heads.push(0.0f64);
    let mut f = Vec::with_capacity(steps.len());
    f.push(0.0);
    for pair in steps.windows(2) {
        if pair[1] > pair[0] {
            let top = *heads.last().unwrap();
            heads.push(top + step.sample(rng));
        } else {
            heads.pop();
        }
        f.push(*heads.last().unwrap());
    }
    let zeta = steps.iter().map(|&v| v as f64 / scale).collect();
    SnakePath { f, zeta }
}
