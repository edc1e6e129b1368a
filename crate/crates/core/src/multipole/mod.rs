//! Reference eigensolver for the unit disk with a grounded disk inclusion.
//!
//! The perturbed field is expanded in Bessel harmonics about the origin and
//! about the inclusion centre; the addition theorem couples the two frames.
//! Eigenfrequencies are the zeros of the smallest singular value of the
//! resulting boundary-condition matrix, located by a coarse scan followed by
//! golden-section refinement.

mod graf;
mod system;

pub use graf::{direct_harmonic, graf_translate, graf_translate_signed, Kind};
pub use system::{assemble_full, assemble_system, concentric_characteristic, sigma_min, Block, MultipoleSystem};

use crate::asymptotics::r_closed_form;
use crate::layer::{s0, CapacityInput};
use crate::spectrum::{enumerate_levels, EigenLevel, Parity};
use crate::{Error, Point, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub const MIN_SCAN_POINTS: usize = 400;
pub const MIN_TOL: f64 = 1e-12;
const MAX_REFINE: usize = 200;
/// A minimum is a root when `sigma < ROOT_THRESHOLD * median(sigma)`.
pub const ROOT_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultipoleConfig {
    /// Highest Fourier order on each boundary.
    pub order: usize,
    pub scan_lo: f64,
    pub scan_hi: f64,
    pub scan_points: usize,
    pub tol: f64,
    /// Use the even/odd blocks (centre on the positive x-axis).
    pub parity_split: bool,
    /// Expected root count in the even block (or in total without parity
    /// splitting).
    pub expected_even: usize,
    pub expected_odd: usize,
}

/// Order that resolves the coupling `d^n` to about 1e-16, plus a margin.
pub fn default_order(d: f64) -> usize {
    if d <= 0.0 {
        return 8;
    }
    let n = (-36.8 / (2.0 * d.ln())).ceil() + 4.0;
    n.clamp(8.0, 96.0) as usize
}

impl MultipoleConfig {
    /// Window and counts for a level, sized from the asymptotic shift.
    pub fn for_level(level: &EigenLevel, d: f64, eps: f64) -> Result<Self> {
        let w = level.omega;
        let levels = enumerate_levels(w + 4.0)?;
        let pos = levels
            .iter()
            .position(|l| l.order() == level.order() && l.modes[0].k == level.modes[0].k)
            .ok_or_else(|| Error::InvalidInput("level not found in the spectrum".into()))?;
        let below = if pos > 0 { 0.5 * (levels[pos - 1].omega + w) } else { 0.5 * w };
        // an inclusion only raises frequencies, so the next level's roots
        // stay above its unperturbed value
        let above = match levels.get(pos + 1) {
            Some(l) => l.omega - 1e-4 * (l.omega - w),
            None => w + 1.0,
        };
        let z = Point::new(d, 0.0);
        let t = crate::asymptotics::t_green(level, z);
        let pred = if t > 0.0 {
            let s = s0(CapacityInput::new(w, eps))?;
            let r = r_closed_form(level, z, w)?;
            (t / (1.0 / s - r)).abs()
        } else {
            0.0
        };
        let reach = (4.0 * PI * t / eps.ln().abs()).max(2.0 * pred);
        let margin = 10.0 * eps * eps + 1e-3;
        Ok(Self {
            order: default_order(d),
            scan_lo: (w - 10.0 * eps * eps).max(below),
            scan_hi: (w + reach + margin).min(above),
            scan_points: MIN_SCAN_POINTS,
            tol: MIN_TOL,
            parity_split: true,
            expected_even: level.count(Parity::Cos),
            expected_odd: level.count(Parity::Sin),
        })
    }

    fn check(&self) -> Result<()> {
        if self.order < 4 {
            return Err(Error::InvalidInput(format!("order must be >= 4, got {}", self.order)));
        }
        if !(self.scan_lo < self.scan_hi) || !(self.scan_lo > 0.0) {
            return Err(Error::InvalidInput(format!("empty scan window [{}, {}]", self.scan_lo, self.scan_hi)));
        }
        if self.scan_points < 3 {
            return Err(Error::InvalidInput("need at least 3 scan points".into()));
        }
        if !(self.tol >= MIN_TOL) {
            return Err(Error::InvalidInput(format!("tol must be >= {MIN_TOL}")));
        }
        Ok(())
    }
}

/// Roots in each parity block, ascending.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RootSet {
    pub even: Vec<f64>,
    pub odd: Vec<f64>,
}

impl RootSet {
    pub fn all(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.even.iter().chain(&self.odd).copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }
}

fn golden(f: &dyn Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)> {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..MAX_REFINE {
        if (b - a).abs() <= tol {
            let x = 0.5 * (a + b);
            let fx = f(x)?;
            let best = [(x, fx), (c, fc), (d, fd)].into_iter().min_by(|p, q| p.1.total_cmp(&q.1)).unwrap();
            return Ok(best);
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Err(Error::NonConvergence(format!("golden section did not reach {tol:e} in {MAX_REFINE} steps")))
}

fn median(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(f64::total_cmp);
    s[s.len() / 2]
}

/// Roots of one block in the configured window.
pub fn roots_in_block(center: Point, eps: f64, config: &MultipoleConfig, block: Block) -> Result<Vec<f64>> {
    config.check()?;
    let n = config.scan_points;
    let h = (config.scan_hi - config.scan_lo) / (n - 1) as f64;
    let grid: Vec<f64> = (0..n).map(|i| config.scan_lo + h * i as f64).collect();
    let f = |w: f64| sigma_min(w, center, eps, config.order, block);
    let sig = grid.par_iter().map(|&w| f(w)).collect::<Result<Vec<f64>>>()?;
    let threshold = ROOT_THRESHOLD * median(&sig);
    let mut roots: Vec<f64> = Vec::new();
    for i in 0..n {
        let left = if i == 0 { f64::INFINITY } else { sig[i - 1] };
        let right = if i + 1 == n { f64::INFINITY } else { sig[i + 1] };
        if !(sig[i] <= left && sig[i] <= right) {
            continue;
        }
        let a = grid[i.saturating_sub(1)];
        let b = grid[(i + 1).min(n - 1)];
        let (x, fx) = golden(&f, a, b, config.tol)?;
        if fx < threshold && !roots.iter().any(|r| (r - x).abs() <= 10.0 * config.tol) {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

fn expect(found: &[f64], expected: usize, what: &str) -> Result<()> {
    if found.len() != expected {
        return Err(Error::RootCountMismatch {
            expected,
            found: found.len(),
            detail: format!("{what} roots {found:?}"),
        });
    }
    Ok(())
}

/// Eigenfrequencies for the inclusion of radius `eps` centred at `(d, 0)`.
pub fn find_roots(d: f64, eps: f64, config: &MultipoleConfig) -> Result<RootSet> {
    find_roots_at(Point::new(d, 0.0), eps, config)
}

/// As [`find_roots`] for a centre at any angle. With parity splitting the
/// centre is first rotated onto the positive x-axis.
pub fn find_roots_at(center: Point, eps: f64, config: &MultipoleConfig) -> Result<RootSet> {
    if config.parity_split {
        let on_axis = Point::new(center.norm(), 0.0);
        let even = if config.expected_even > 0 {
            roots_in_block(on_axis, eps, config, Block::Even)?
        } else {
            Vec::new()
        };
        expect(&even, config.expected_even, "even-block")?;
        let odd = if config.expected_odd > 0 {
            roots_in_block(on_axis, eps, config, Block::Odd)?
        } else {
            Vec::new()
        };
        expect(&odd, config.expected_odd, "odd-block")?;
        Ok(RootSet { even, odd })
    } else {
        let all = roots_in_block(center, eps, config, Block::Full)?;
        expect(&all, config.expected_even + config.expected_odd, "full-system")?;
        Ok(RootSet { even: all, odd: Vec::new() })
    }
}

/// Perturbed frequencies of a level, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRoots {
    pub omega_theta: f64,
    pub roots: Vec<f64>,
    pub config: MultipoleConfig,
}

impl LevelRoots {
    pub fn lo(&self) -> f64 {
        self.roots[0]
    }

    pub fn hi(&self) -> f64 {
        *self.roots.last().unwrap()
    }
}

/// Find the perturbed frequencies of `level` for an inclusion of radius
/// `eps` at `z`. `order` overrides the default truncation.
pub fn solve_level(level: &EigenLevel, z: Point, eps: f64, order: Option<usize>) -> Result<LevelRoots> {
    let mut config = MultipoleConfig::for_level(level, z.norm(), eps)?;
    if let Some(n) = order {
        config.order = n;
    }
    let roots = find_roots_at(z, eps, &config)?.all();
    Ok(LevelRoots { omega_theta: level.omega, roots, config })
}

/// Root of [`concentric_characteristic`] in `[lo, hi]` by scan and
/// bisection.
pub fn concentric_root(n: u32, eps: f64, lo: f64, hi: f64) -> Result<f64> {
    let g = |w: f64| concentric_characteristic(n, w, eps);
    let steps = 400;
    let h = (hi - lo) / steps as f64;
    let mut a = lo;
    let mut fa = g(a)?;
    for i in 1..=steps {
        let b = lo + h * i as f64;
        let fb = g(b)?;
        if fa == 0.0 {
            return Ok(a);
        }
        if fa.signum() != fb.signum() {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (x0 + x1);
                if mid <= x0 || mid >= x1 {
                    break;
                }
                let fm = g(mid)?;
                if fm.signum() == f0.signum() {
                    x0 = mid;
                    f0 = fm;
                } else {
                    x1 = mid;
                }
            }
            return Ok(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    Err(Error::NonConvergence(format!("no sign change of the order-{n} characteristic in [{lo}, {hi}]")))
}
