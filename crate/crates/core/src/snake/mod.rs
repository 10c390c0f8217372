//! Grid-discretized snake paths `(f, ζ)`: a lifetime excursion `ζ` and a
//! head function `f` constant on the tree coded by `ζ`.

mod sample;

pub use sample::{sample_snake, SnakeLaw};

use std::fmt;

use crate::error::{Error, Result};
use crate::labeled::Encoding;

/// Snake-property tolerance for paths built from exact encodings.
pub const TAU_DISCRETE: f64 = 1e-9;
/// Snake-property tolerance for simulated paths.
pub const TAU_SIMULATED: f64 = 1e-6;

/// Values of `f` and `ζ` at the grid points `k / m`, `k = 0..=m`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnakePath {
    f: Vec<f64>,
    zeta: Vec<f64>,
}

impl SnakePath {
    pub fn new(f: Vec<f64>, zeta: Vec<f64>, tau: f64) -> Result<Self> {
        if f.len() != zeta.len() {
            return Err(Error::GridMismatch { left: f.len() - 1, right: zeta.len() - 1 });
        }
        if f.len() < 2 {
            return Err(Error::InvalidSnake("a grid needs at least two points".into()));
        }
        let m = f.len() - 1;
        if zeta[0].abs() > tau || zeta[m].abs() > tau || f[0].abs() > tau || f[m].abs() > tau {
            return Err(Error::InvalidSnake("f and ζ must vanish at both ends".into()));
        }
        if let Some(k) = zeta.iter().position(|&z| z < -tau || !z.is_finite()) {
            return Err(Error::InvalidSnake(format!("ζ({k}) = {} is negative", zeta[k])));
        }
        if let Some(k) = f.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidSnake(format!("f({k}) is not finite")));
        }
        let path = SnakePath { f, zeta };
        if let Some((i, j)) = path.snake_violation(tau) {
            return Err(Error::InvalidSnake(format!(
                "points {i} and {j} code the same node but f differs by {}",
                (path.f[i] - path.f[j]).abs()
            )));
        }
        Ok(path)
    }

    /// Two grid points coding the same node with different heads, if any.
    fn snake_violation(&self, tau: f64) -> Option<(usize, usize)> {
        // Stack of grid points with strictly increasing ζ: the ancestors still
        // visible from the current point.
        let mut stack: Vec<usize> = Vec::new();
        for j in 0..self.zeta.len() {
            let z = self.zeta[j];
            while let Some(&top) = stack.last() {
                if self.zeta[top] > z + tau {
                    stack.pop();
                } else {
                    break;
                }
            }
            match stack.last() {
                Some(&i) if (self.zeta[i] - z).abs() <= tau => {
                    if (self.f[i] - self.f[j]).abs() > tau {
                        return Some((i, j));
                    }
                }
                _ => stack.push(j),
            }
        }
        None
    }

    /// Number of grid intervals.
    pub fn grid(&self) -> usize {
        self.f.len() - 1
    }

    pub fn f(&self) -> &[f64] {
        &self.f
    }

    pub fn zeta(&self) -> &[f64] {
        &self.zeta
    }

    pub fn max_f(&self) -> f64 {
        self.f.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_f(&self) -> f64 {
        self.f.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl fmt::Display for SnakePath {
    /// CSV with columns `s,f,zeta`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "s,f,zeta")?;
        let m = self.grid() as f64;
        for k in 0..=self.grid() {
            writeln!(f, "{},{},{}", k as f64 / m, self.f[k], self.zeta[k])?;
        }
        Ok(())
    }
}

fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `‖f₁ − f₂‖∞ + ‖ζ₁ − ζ₂‖∞` over the grid.
pub fn d_t(x: &SnakePath, y: &SnakePath) -> Result<f64> {
    if x.grid() != y.grid() {
        return Err(Error::GridMismatch { left: x.grid(), right: y.grid() });
    }
    Ok(sup_distance(&x.f, &y.f) + sup_distance(&x.zeta, &y.zeta))
}

/// Reroots at grid point `k`: `f(k ⊕ s) − f(k)` and the lifetime seen from
/// the point coded by `k`.
pub fn reroot_j(x: &SnakePath, k: usize) -> Result<SnakePath> {
    let m = x.grid();
    if k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    let zk = x.zeta[k];
    let mut low_after = Vec::with_capacity(m + 1 - k);
    let mut low = zk;
    for &z in &x.zeta[k..] {
        low = low.min(z);
        low_after.push(low);
    }
    let mut low_before = vec![0.0; k + 1];
    low = zk;
    for j in (0..=k).rev() {
        low = low.min(x.zeta[j]);
        low_before[j] = low;
    }
    let mut f = Vec::with_capacity(m + 1);
    let mut zeta = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let j = if i == m { k } else { (k + i) % m };
        let low = if j >= k { low_after[j - k] } else { low_before[j] };
        f.push(x.f[j] - x.f[k]);
        zeta.push((x.zeta[j] + zk - 2.0 * low).max(0.0));
    }
    Ok(SnakePath { f, zeta })
}

/// [`reroot_j`] at a time `theta` in `[0, 1]`, which must be a grid point.
pub fn reroot_j_at(x: &SnakePath, theta: f64) -> Result<SnakePath> {
    let scaled = theta * x.grid() as f64;
    let k = scaled.round();
    if !(0.0..=x.grid() as f64).contains(&k) || (scaled - k).abs() > 1e-9 {
        return Err(Error::OffGrid(theta));
    }
    reroot_j(x, k as usize)
}

/// Smallest grid index in `[0, m − 1]` where `f` is minimal.
pub fn first_argmin(f: &[f64]) -> usize {
    let body = &f[..(f.len() - 1).max(1)];
    let mut best = 0;
    for (k, &v) in body.iter().enumerate() {
        if v < body[best] {
            best = k;
        }
    }
    best
}

/// Grid indices in `[0, m − 1]` with `f <= min f + tau_min`.
pub fn minimum_points(x: &SnakePath, tau_min: f64) -> Vec<usize> {
    let body = &x.f[..x.grid()];
    let min = body.iter().copied().fold(f64::INFINITY, f64::min);
    (0..body.len()).filter(|&k| body[k] <= min + tau_min).collect()
}

/// One rerooting per near-minimal grid point; each has `f >= 0` up to
/// `tau_min` and starts at 0.
pub fn positive_representatives(x: &SnakePath, tau_min: f64) -> Vec<SnakePath> {
    minimum_points(x, tau_min)
        .into_iter()
        .map(|k| reroot_j(x, k).expect("index is on the grid"))
        .collect()
}

/// `(δ⁺, d⁺)`: the smallest distance between positive representatives of
/// `x` and `y`, and the largest distance from a representative of `x` to the
/// first-minimum representative of `y`.
pub fn class_distances(x: &SnakePath, y: &SnakePath, tau_min: f64) -> Result<(f64, f64)> {
    if x.grid() != y.grid() {
        return Err(Error::GridMismatch { left: x.grid(), right: y.grid() });
    }
    let xs = positive_representatives(x, tau_min);
    let ys = positive_representatives(y, tau_min);
    let mut delta = f64::INFINITY;
    for a in &xs {
        for b in &ys {
            delta = delta.min(d_t(a, b)?);
        }
    }
    let target = reroot_j(y, first_argmin(&y.f))?;
    let mut spread: f64 = 0.0;
    for a in &xs {
        spread = spread.max(d_t(a, &target)?);
    }
    Ok((delta, spread))
}

/// `d⁺` of the class of `x` against its own first-minimum representative.
pub fn class_diameter(x: &SnakePath, tau_min: f64) -> f64 {
    let target = reroot_j(x, first_argmin(&x.f)).expect("index is on the grid");
    minimum_points(x, tau_min)
        .into_iter()
        .map(|k| d_t(&reroot_j(x, k).unwrap(), &target).unwrap())
        .fold(0.0, f64::max)
}

/// Grid `2n`: `f = (R − 1) / n^{1/4}`, `ζ = V / √n`.
pub fn normalize_encoding(e: &Encoding) -> SnakePath {
    let n = e.edges() as f64;
    let fs = n.powf(0.25);
    let zs = n.sqrt();
    SnakePath {
        f: e.r.iter().map(|&r| (r - 1) as f64 / fs).collect(),
        zeta: e.v.as_slice().iter().map(|&v| v as f64 / zs).collect(),
    }
}
