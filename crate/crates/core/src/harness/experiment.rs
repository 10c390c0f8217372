use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::edge_length::{perturbed_walk, EdgeLengthModel};
use super::samplers::{sample_pd_encoding, sample_uniform_encoding, uniform_walk};
use crate::error::{Error, Result};
use crate::planar_map::profile_from_labels;
use crate::snake::{class_diameter, normalize_encoding, sample_snake, SnakeLaw};
use crate::trees::{Direction, PlaneTree};

/// Two-sample KS thresholds used by the scaling checks. They are choices of
/// this harness and are written into every CSV header.
pub const KS_DISCRETE: f64 = 0.05;
pub const KS_SNAKE: f64 = 0.08;

/// Step and upper end of the `λ` grid of the profile experiment.
pub const PROFILE_STEP: f64 = 0.02;
pub const PROFILE_MAX: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Radius,
    Profile,
    HpGap,
    ClassDiameter,
    EdgeGap,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 5] = [
        ExperimentKind::Radius,
        ExperimentKind::Profile,
        ExperimentKind::HpGap,
        ExperimentKind::ClassDiameter,
        ExperimentKind::EdgeGap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Radius => "radius",
            ExperimentKind::Profile => "profile",
            ExperimentKind::HpGap => "hp_gap",
            ExperimentKind::ClassDiameter => "class_diameter",
            ExperimentKind::EdgeGap => "edge_gap",
        }
    }

    /// CSV header line of the experiment.
    pub fn columns(self) -> &'static str {
        match self {
            ExperimentKind::Radius => "law,size,replica,radius",
            ExperimentKind::Profile => "size,lambda,mean_profile",
            ExperimentKind::HpGap => "size,replica,hp_gap",
            ExperimentKind::ClassDiameter => "size,replica,class_diameter",
            ExperimentKind::EdgeGap => "size,replica,gap,tail_warning",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownExperiment(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// One of the [`ExperimentKind`] names.
    pub name: String,
    pub sizes: Vec<usize>,
    pub replicas: usize,
    #[serde(default)]
    pub seed: u64,
    /// Edge count of the tree driving the snake in the radius experiment;
    /// the snake lives on the grid `2 * grid`.
    #[serde(default)]
    pub grid: Option<usize>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// Edge-length model of the edge_gap experiment, as accepted by
    /// [`EdgeLengthModel::from_str`].
    #[serde(default)]
    pub edge_length: Option<String>,
    /// Head-increment variance of the snake; defaults to [`SnakeLaw::stated`].
    #[serde(default)]
    pub label_variance: Option<f64>,
}

impl ExperimentConfig {
    pub fn new(name: &str, sizes: Vec<usize>, replicas: usize, seed: u64) -> Self {
        ExperimentConfig {
            name: name.to_string(),
            sizes,
            replicas,
            seed,
            grid: None,
            output: None,
            edge_length: None,
            label_variance: None,
        }
    }

    pub fn kind(&self) -> Result<ExperimentKind> {
        self.name.parse()
    }

    pub fn validate(&self) -> Result<()> {
        self.kind()?;
        if self.replicas < 1 {
            return Err(Error::InvalidConfig("replicas must be at least 1".into()));
        }
        if self.sizes.is_empty() || self.sizes[0] < 1 {
            return Err(Error::InvalidConfig("sizes must be nonempty and positive".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig("sizes must be strictly increasing".into()));
        }
        if self.grid == Some(0) {
            return Err(Error::InvalidConfig("snake grid must be positive".into()));
        }
        if let Some(c) = self.label_variance {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::InvalidConfig(format!("label variance {c} must be positive")));
            }
        }
        self.edge_model()?;
        Ok(())
    }

    pub fn snake_law(&self) -> SnakeLaw {
        self.label_variance.map_or_else(SnakeLaw::stated, |c| SnakeLaw { label_variance: c })
    }

    pub fn edge_model(&self) -> Result<EdgeLengthModel> {
        self.edge_length.as_deref().unwrap_or("uniform:0.5:1.5").parse()
    }
}

impl FromStr for ExperimentConfig {
    type Err = Error;

    /// TOML document with the fields of the struct.
    fn from_str(s: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random state of one replica, a function of `(seed, stream, replica)` only.
pub fn replica_rng(seed: u64, stream: u64, replica: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(splitmix(splitmix(seed) ^ stream) ^ replica))
}

/// Runs `f` once per replica, in parallel, and returns the results in
/// replica order.
pub fn replicate<T, F>(seed: u64, stream: u64, replicas: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    (0..replicas)
        .into_par_iter()
        .map(|i| f(&mut replica_rng(seed, stream, i as u64)))
        .collect()
}

/// `(max R⁺ − 1) / n^{1/4}` for a `P_D`-distributed encoding.
pub fn rooted_radius<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> f64 {
    let e = sample_pd_encoding(n, rng);
    (e.r.iter().max().unwrap() - 1) as f64 / (n as f64).powf(0.25)
}

/// `(max R − min R) / n^{1/4}` for a uniform labeled tree.
pub fn pointed_radius<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> f64 {
    let e = sample_uniform_encoding(n, rng);
    let (lo, hi) = (e.r.iter().min().unwrap(), e.r.iter().max().unwrap());
    (hi - lo) as f64 / (n as f64).powf(0.25)
}

/// `max f^{[θ*]} = max f − min f` for a snake driven by `m` edges.
pub fn snake_radius<R: rand::Rng + ?Sized>(m: usize, law: SnakeLaw, rng: &mut R) -> f64 {
    let x = sample_snake(m, law, rng);
    x.max_f() - x.min_f()
}

/// `l(λ)` on the grid `0, PROFILE_STEP, …, PROFILE_MAX` for one `P_D` sample:
/// `L(j)` is interpolated linearly between integers and read at `λ n^{1/4}`.
pub fn profile_curve<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let e = sample_pd_encoding(n, rng);
    let shares = profile_from_labels(&e.r);
    let scale = (n as f64).powf(0.25);
    let at = |j: usize| shares.get(j).copied().unwrap_or(1.0);
    profile_grid()
        .map(|lambda| {
            let x = lambda * scale;
            let j = x.floor() as usize;
            at(j) + (at(j + 1) - at(j)) * (x - j as f64)
        })
        .collect()
}

pub fn profile_grid() -> impl Iterator<Item = f64> {
    let steps = (PROFILE_MAX / PROFILE_STEP).round() as usize;
    (0..=steps).map(|k| k as f64 * PROFILE_STEP)
}

/// Average of [`profile_curve`] over replicas.
pub fn mean_profile(n: usize, replicas: usize, seed: u64, stream: u64) -> Vec<f64> {
    let curves = replicate(seed, stream, replicas, |rng| profile_curve(n, rng));
    let mut mean = vec![0.0; curves[0].len()];
    for c in &curves {
        for (m, v) in mean.iter_mut().zip(c) {
            *m += v;
        }
    }
    mean.iter_mut().for_each(|m| *m /= replicas as f64);
    mean
}

/// `sup_t |Ṽ(2nt) − H̃(nt)| / √n` with both processes linearly
/// interpolated; the supremum is attained on the grid `k / 2n`.
pub fn hp_gap<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> f64 {
    let walk = uniform_walk(n, rng);
    let h = PlaneTree::from_walk(&walk).height_process(Direction::Clockwise);
    let h = h.as_slice();
    let mut sup: f64 = 0.0;
    for (k, &v) in walk.as_slice().iter().enumerate() {
        let hk = if k % 2 == 0 {
            f64::from(h[k / 2])
        } else {
            (f64::from(h[k / 2]) + f64::from(h[k / 2 + 1])) / 2.0
        };
        sup = sup.max((f64::from(v) - hk).abs());
    }
    sup / (n as f64).sqrt()
}

/// `d⁺` of the normalized class of a uniform labeled tree, minima detected
/// exactly.
pub fn class_diameter_sample<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> f64 {
    class_diameter(&normalize_encoding(&sample_uniform_encoding(n, rng)), 0.0)
}

/// `‖c̃ − c‖∞` over the doddering tree of a `P_D` sample.
pub fn edge_gap<R: rand::Rng + ?Sized>(n: usize, model: &EdgeLengthModel, rng: &mut R) -> f64 {
    let e = sample_pd_encoding(n, rng);
    perturbed_walk(&e.r, model, n, rng).expect("sampled label processes are valid").gap
}

/// Runs the experiment named in `cfg` and returns its CSV, header comments
/// included. Byte-identical for identical configurations.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<String> {
    cfg.validate()?;
    let kind = cfg.kind()?;
    let mut out = String::new();
    let _ = writeln!(out, "# experiment={kind} seed={} replicas={}", cfg.seed, cfg.replicas);
    let _ = writeln!(out, "# ks_discrete={KS_DISCRETE} ks_snake={KS_SNAKE}");
    let seed = cfg.seed;
    let reps = cfg.replicas;
    match kind {
        ExperimentKind::Radius => {
            let law = cfg.snake_law();
            let _ = writeln!(out, "# snake_label_variance={}", law.label_variance);
            out.push_str(kind.columns());
            out.push('\n');
            for (i, &n) in cfg.sizes.iter().enumerate() {
                let pd = replicate(seed, stream(i, 0), reps, |rng| rooted_radius(n, rng));
                let ps = replicate(seed, stream(i, 1), reps, |rng| pointed_radius(n, rng));
                for (label, values) in [("pd", pd), ("ps", ps)] {
                    for (r, v) in values.iter().enumerate() {
                        let _ = writeln!(out, "{label},{n},{r},{v}");
                    }
                }
            }
            if let Some(m) = cfg.grid {
                let snake = replicate(seed, stream(cfg.sizes.len(), 2), reps, |rng| snake_radius(m, law, rng));
                for (r, v) in snake.iter().enumerate() {
                    let _ = writeln!(out, "snake,{m},{r},{v}");
                }
            }
        }
        ExperimentKind::Profile => {
            out.push_str(kind.columns());
            out.push('\n');
            for (i, &n) in cfg.sizes.iter().enumerate() {
                let mean = mean_profile(n, reps, seed, stream(i, 0));
                for (lambda, v) in profile_grid().zip(&mean) {
                    let _ = writeln!(out, "{n},{lambda},{v}");
                }
            }
        }
        ExperimentKind::HpGap | ExperimentKind::ClassDiameter | ExperimentKind::EdgeGap => {
            let model = cfg.edge_model()?;
            if kind == ExperimentKind::EdgeGap {
                let _ = writeln!(out, "# edge_length={model} moment_guard={}", model.moment_guard);
            }
            out.push_str(kind.columns());
            out.push('\n');
            for (i, &n) in cfg.sizes.iter().enumerate() {
                let values = replicate(seed, stream(i, 0), reps, |rng| match kind {
                    ExperimentKind::HpGap => hp_gap(n, rng),
                    ExperimentKind::ClassDiameter => class_diameter_sample(n, rng),
                    _ => edge_gap(n, &model, rng),
                });
                for (r, v) in values.iter().enumerate() {
                    if kind == ExperimentKind::EdgeGap {
                        let _ = writeln!(out, "{n},{r},{v},{}", model.tail_warning());
                    } else {
                        let _ = writeln!(out, "{n},{r},{v}");
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Stream index of size `i` and sub-sample `j`.
pub fn stream(i: usize, j: u64) -> u64 {
    ((i as u64) << 8) | j
}
