//! Neumann eigenfunctions of the Laplacian on the unit disk.
//!
//! Every eigenfunction is `c J_n(omega r) cos(n theta)` or
//! `c J_n(omega r) sin(n theta)` with `J_n'(omega) = 0`. Levels with `n = 0`
//! are simple; levels with `n >= 1` carry the cos/sin pair. Level 0 is the
//! constant mode `1/sqrt(pi)`.

use crate::specfun::{bessel_j, jnp_root, jnp_roots_below, RootIndex};
use crate::{Error, Point, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Cos,
    Sin,
}

impl Parity {
    pub fn trig(self, n: u32, theta: f64) -> f64 {
        let a = n as f64 * theta;
        match self {
            Parity::Cos => a.cos(),
            Parity::Sin => a.sin(),
        }
    }
}

/// One L²-normalised eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub n: u32,
    /// Root index of `J_n'`; 0 only for the constant mode.
    pub k: u32,
    pub parity: Parity,
    pub omega: f64,
    /// The constant `c`.
    pub norm: f64,
}

impl Mode {
    pub fn constant() -> Self {
        Mode { n: 0, k: 0, parity: Parity::Cos, omega: 0.0, norm: 1.0 / PI.sqrt() }
    }

    pub fn value_at(&self, p: Point) -> f64 {
        eval_mode(self, p)
    }

    pub fn is_constant(&self) -> bool {
        self.omega == 0.0
    }
}

/// A distinct eigenvalue `omega^2` with its eigenfunctions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenLevel {
    pub index: usize,
    pub omega: f64,
    pub modes: Vec<Mode>,
}

impl EigenLevel {
    pub fn multiplicity(&self) -> usize {
        self.modes.len()
    }

    /// Angular order shared by every mode of the level.
    pub fn order(&self) -> u32 {
        self.modes[0].n
    }

    pub fn is_double(&self) -> bool {
        self.modes.len() == 2
    }

    /// Number of modes of the given parity.
    pub fn count(&self, parity: Parity) -> usize {
        self.modes.iter().filter(|m| m.parity == parity).count()
    }
}

/// `c` with `c^{-2} = a_n (1 - n^2/omega^2) J_n(omega)^2 / 2`, where
/// `a_0 = 2 pi` and `a_n = pi` otherwise, for the level `J_n'(omega) = 0`
/// with root index `k >= 1`.
pub fn mode_norm(n: u32, k: u32) -> Result<f64> {
    Ok(norm_at(n, jnp_root(RootIndex::new(n, k))?))
}

pub(crate) fn norm_at(n: u32, omega: f64) -> f64 {
    if omega == 0.0 {
        return 1.0 / PI.sqrt();
    }
    let angular = if n == 0 { 2.0 * PI } else { PI };
    let nf = n as f64;
    let jn = bessel_j(n as i32, omega);
    let radial = 0.5 * (1.0 - nf * nf / (omega * omega)) * jn * jn;
    1.0 / (angular * radial).sqrt()
}

pub fn eval_mode(mode: &Mode, p: Point) -> f64 {
    if mode.is_constant() {
        return mode.norm;
    }
    let r = p.norm();
    mode.norm * bessel_j(mode.n as i32, mode.omega * r) * mode.parity.trig(mode.n, p.angle())
}

fn modes_for(n: u32, k: u32, omega: f64) -> Vec<Mode> {
    let norm = norm_at(n, omega);
    let mk = |parity| Mode { n, k, parity, omega, norm };
    if n == 0 {
        vec![mk(Parity::Cos)]
    } else {
        vec![mk(Parity::Cos), mk(Parity::Sin)]
    }
}

/// Every level with `omega < omega_max`, in increasing order and indexed
/// from 0 (the constant mode).
pub fn enumerate_levels(omega_max: f64) -> Result<Vec<EigenLevel>> {
    if !(omega_max >= 0.0) || !omega_max.is_finite() {
        return Err(Error::InvalidInput(format!("omega_max must be finite and >= 0, got {omega_max}")));
    }
    let mut found: Vec<(f64, u32, u32)> = Vec::new();
    // j'_{n,1} > n, so orders above omega_max contribute nothing
    let mut n = 0u32;
    while (n as f64) < omega_max {
        for (k, root) in jnp_roots_below(n, omega_max).into_iter().enumerate() {
            found.push((root, n, k as u32 + 1));
        }
        n += 1;
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut levels = vec![EigenLevel { index: 0, omega: 0.0, modes: vec![Mode::constant()] }];
    for (omega, n, k) in found {
        levels.push(EigenLevel { index: levels.len(), omega, modes: modes_for(n, k, omega) });
    }
    Ok(levels)
}

/// Level with the given index.
pub fn level(index: usize) -> Result<EigenLevel> {
    let mut omega_max = 8.0 + 2.0 * (index as f64).sqrt();
    loop {
        let levels = enumerate_levels(omega_max)?;
        if let Some(l) = levels.into_iter().nth(index) {
            return Ok(l);
        }
        omega_max *= 1.5;
    }
}

/// The level `J_n'(omega) = 0` of order `n`, root `k`.
pub fn level_of(n: u32, k: u32) -> Result<EigenLevel> {
    let omega = jnp_root(RootIndex::new(n, k))?;
    let levels = enumerate_levels(omega * (1.0 + 1e-12) + 1e-12)?;
    levels
        .into_iter()
        .find(|l| l.order() == n && l.modes[0].k == k)
        .ok_or_else(|| Error::InvalidInput(format!("no level with n = {n}, k = {k}")))
}

/// `L^2` inner product over the unit disk: Gauss–Legendre in `r`, the
/// trapezoid rule in `theta`.
pub fn l2_inner(a: &Mode, b: &Mode) -> f64 {
    let (x, w) = crate::quadrature::gauss_legendre(60);
    let nt = 128;
    let mut s = 0.0;
    for (xi, wi) in x.iter().zip(&w) {
        let r = 0.5 * (xi + 1.0);
        for j in 0..nt {
            let th = 2.0 * PI * j as f64 / nt as f64;
            let p = Point::from_polar(r, th);
            s += 0.5 * wi * r * (2.0 * PI / nt as f64) * a.value_at(p) * b.value_at(p);
        }
    }
    s
}
