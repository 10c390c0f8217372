use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, Exp1, Pareto};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schaeffer::check_label_process;

/// Edge-length distributions, all normalized to mean 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum LengthFamily {
    Deterministic,
    Uniform { a: f64, b: f64 },
    Exponential,
    /// Pareto with tail index `alpha > 1`, scaled to mean 1.
    Pareto { alpha: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeLengthModel {
    pub family: LengthFamily,
    /// Moment order whose finiteness is required before the gap is expected
    /// to vanish.
    #[serde(default = "default_guard")]
    pub moment_guard: f64,
}

fn default_guard() -> f64 {
    5.0
}

impl EdgeLengthModel {
    pub fn new(family: LengthFamily) -> Result<Self> {
        let model = EdgeLengthModel { family, moment_guard: default_guard() };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            LengthFamily::Deterministic | LengthFamily::Exponential => {}
            LengthFamily::Uniform { a, b } => {
                if !(0.0 <= a && a < b) {
                    return Err(Error::InvalidModel(format!("uniform needs 0 <= a < b, got [{a}, {b}]")));
                }
                if ((a + b) / 2.0 - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidModel(format!("uniform on [{a}, {b}] has mean {}", (a + b) / 2.0)));
                }
            }
            LengthFamily::Pareto { alpha } => {
                if !(alpha > 1.0) {
                    return Err(Error::InvalidModel(format!("pareto needs alpha > 1 for a mean, got {alpha}")));
                }
            }
        }
        if !(self.moment_guard > 0.0) {
            return Err(Error::InvalidModel(format!("moment guard {} must be positive", self.moment_guard)));
        }
        Ok(())
    }

    /// Supremum of the orders of finite moments.
    pub fn tail_index(&self) -> f64 {
        match self.family {
            LengthFamily::Pareto { alpha } => alpha,
            _ => f64::INFINITY,
        }
    }

    /// Raised when the moment of order `moment_guard` is infinite.
    pub fn tail_warning(&self) -> bool {
        self.tail_index() <= self.moment_guard
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.family {
            LengthFamily::Deterministic => 1.0,
            LengthFamily::Uniform { a, b } => rng.random_range(a..b),
            LengthFamily::Exponential => Exp1.sample(rng),
            LengthFamily::Pareto { alpha } => {
                let scale = (alpha - 1.0) / alpha;
                Pareto::new(scale, alpha).unwrap().sample(rng)
            }
        }
    }
}

impl fmt::Display for EdgeLengthModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            LengthFamily::Deterministic => write!(f, "deterministic"),
            LengthFamily::Uniform { a, b } => write!(f, "uniform:{a}:{b}"),
            LengthFamily::Exponential => write!(f, "exponential"),
            LengthFamily::Pareto { alpha } => write!(f, "pareto:{alpha}"),
        }
    }
}

impl FromStr for EdgeLengthModel {
    type Err = Error;

    /// `deterministic`, `uniform:A:B`, `exponential` or `pareto:ALPHA`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<f64>().map_err(|_| Error::Parse(format!("bad number `{x}`")));
        let family = match parts[..] {
            ["deterministic"] => LengthFamily::Deterministic,
            ["exponential"] => LengthFamily::Exponential,
            ["uniform", a, b] => LengthFamily::Uniform { a: num(a)?, b: num(b)? },
            ["pareto", alpha] => LengthFamily::Pareto { alpha: num(alpha)? },
            _ => return Err(Error::Parse(format!("unknown edge-length model `{s}`"))),
        };
        EdgeLengthModel::new(family)
    }
}

#[derive(Clone, Debug)]
pub struct PerturbedWalk {
    /// Branch length sums down to every doddering node, over `n^{1/4}`.
    pub c_tilde: Vec<f64>,
    /// `max |c̃ − c|` where `c = R / n^{1/4}`.
    pub gap: f64,
    pub tail_warning: bool,
}

/// Gives every edge of the doddering tree of `r` an independent length and
/// compares the resulting depths with the unit-length ones.
pub fn perturbed_walk<R: Rng + ?Sized>(
    r: &[i32],
    model: &EdgeLengthModel,
    n: usize,
    rng: &mut R,
) -> Result<PerturbedWalk> {
    model.validate()?;
    check_label_process(r)?;
    let scale = (n as f64).powf(0.25);
    // Depth sum of the last node seen at every label: that node is the
    // predecessor of the next position one level deeper.
    let max = *r.iter().max().unwrap() as usize;
    let mut last = vec![0.0f64; max + 1];
    let mut c_tilde = Vec::with_capacity(r.len());
    let mut gap: f64 = 0.0;
    for &label in r {
        let depth = last[label as usize - 1] + model.sample(rng);
        last[label as usize] = depth;
        c_tilde.push(depth / scale);
        gap = gap.max((depth - f64::from(label)).abs() / scale);
    }
    Ok(PerturbedWalk { c_tilde, gap, tail_warning: model.tail_warning() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_lengths_leave_no_gap() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let model = EdgeLengthModel::new(LengthFamily::Deterministic).unwrap();
        let w = perturbed_walk(&[1, 2, 3, 2, 1, 1, 2], &model, 3, &mut rng).unwrap();
        assert_eq!(w.gap, 0.0);
        assert!(!w.tail_warning);
    }

    #[test]
    fn means_are_enforced() {
        assert!(EdgeLengthModel::new(LengthFamily::Uniform { a: 0.0, b: 1.0 }).is_err());
        assert!(EdgeLengthModel::new(LengthFamily::Uniform { a: 0.5, b: 1.5 }).is_ok());
        assert!(EdgeLengthModel::new(LengthFamily::Pareto { alpha: 1.0 }).is_err());
        assert!("uniform:0.2:1.8".parse::<EdgeLengthModel>().is_ok());
        assert!("uniform:0.2:1.9".parse::<EdgeLengthModel>().is_err());
        assert!("gamma:2".parse::<EdgeLengthModel>().is_err());
    }

    #[test]
    fn heavy_tails_are_flagged() {
        assert!(EdgeLengthModel::new(LengthFamily::Pareto { alpha: 3.0 }).unwrap().tail_warning());
        assert!(!EdgeLengthModel::new(LengthFamily::Pareto { alpha: 8.0 }).unwrap().tail_warning());
        assert!(!EdgeLengthModel::new(LengthFamily::Exponential).unwrap().tail_warning());
    }

    #[test]
    fn sample_means_are_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in ["uniform:0.5:1.5", "exponential", "pareto:6"] {
            let model: EdgeLengthModel = spec.parse().unwrap();
            let mean = (0..200_000).map(|_| model.sample(&mut rng)).sum::<f64>() / 200_000.0;
            assert!((mean - 1.0).abs() < 0.02, "{spec}: {mean}");
        }
    }

    #[test]
    fn display_round_trip() {
        for spec in ["deterministic", "uniform:0.5:1.5", "exponential", "pareto:4.5"] {
            assert_eq!(spec.parse::<EdgeLengthModel>().unwrap().to_string(), spec);
        }
    }
}
