//! Splitting of a Neumann eigenvalue of the unit disk under a small
//! grounded disk inclusion of radius `eps` centred at `z`.
//!
//! The zero-order shift of the perturbed branch is
//! `t / (1/s0 - r)` with
//!
//! * `t = U(z).D^omega[U](z) / (omega + omega_theta)`,
//! * `r = sum_{j != theta} U_j(z).D^omega[U_j](z) / (omega^2 - omega_j^2)`,
//! * `s0 = -(ln(eta_0 omega eps) / (2 pi) + ln cap)^{-1}`,
//!
//! all evaluated at `omega = omega_theta` ([`Evaluation::Frozen`]) or at the
//! perturbed frequency itself ([`Evaluation::SelfConsistent`]). The second
//! choice solves `1/s0(omega) = F(omega)` and removes the
//! `O(1/ln^2 eps)` error of the frozen form.

mod resummed;

pub use resummed::{level_product, neumann_regular_part, r_closed_form, t_closed_form};

use crate::layer::{double_layer_checked, s0, CapacityInput, CircleQuadrature, DoubleLayerProbe};
use crate::spectrum::{enumerate_levels, EigenLevel, Mode, Parity};
use crate::{Error, Point, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default frequency cutoff for the truncated `r` sum.
pub const DEFAULT_TRUNCATION: f64 = 60.0;

/// Relative change allowed when the cutoff is doubled.
pub const DOUBLING_TOLERANCE: f64 = 1e-4;

const PROBE_NODES: usize = 512;

/// How the sum over the other levels is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RSum {
    /// Levels with `omega_j < cutoff`, double layer by quadrature.
    Truncated { cutoff: f64 },
    /// The re-summed closed form.
    Resummed,
}

/// Frequency at which `s0`, `t` and `r` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evaluation {
    Frozen,
    SelfConsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticOptions {
    pub r_sum: RSum,
    pub evaluation: Evaluation,
}

impl AsymptoticOptions {
    /// Frozen frequency and truncated sum.
    pub fn frozen(cutoff: f64) -> Self {
        Self { r_sum: RSum::Truncated { cutoff }, evaluation: Evaluation::Frozen }
    }

    /// Self-consistent frequency and re-summed `r`.
    pub fn self_consistent() -> Self {
        Self { r_sum: RSum::Resummed, evaluation: Evaluation::SelfConsistent }
    }
}

impl Default for AsymptoticOptions {
    fn default() -> Self {
        Self::self_consistent()
    }
}

/// Partial sum of `r` with its convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RSeries {
    pub value: f64,
    /// Magnitude of the contribution of the last pi-wide frequency band.
    pub tail_estimate: f64,
    /// Relative change when the cutoff is doubled.
    pub doubling_change: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralConstants {
    pub s0: f64,
    pub t: f64,
    pub r: f64,
    pub level_index: usize,
    pub z: Point,
    /// Frequency at which the constants were evaluated.
    pub omega: f64,
    /// `None` for the re-summed form.
    pub truncation_omega: Option<f64>,
    pub tail_estimate: f64,
    pub converged: bool,
}

/// Mode labels for the two branches of a double level.
///
/// Branches are the modes `c J_n(omega r) cos(n (theta - rotation))`
/// (shifted) and `c J_n(omega r) sin(n (theta - rotation))` (unshifted,
/// its nodal line passes through `z`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Attribution {
    pub rotation: f64,
    pub unshifted: Parity,
    pub shifted: Parity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitPrediction {
    pub level: EigenLevel,
    pub eps: f64,
    pub z: Point,
    /// `omega_eps_j - omega_theta`, ascending.
    pub shifts: Vec<f64>,
    /// Order in `eps` of the neglected remainder.
    pub remainder_order: u32,
    pub constants: SpectralConstants,
    pub attribution: Option<Attribution>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums {
    /// `p_1, ..., p_m`.
    pub p: Vec<f64>,
}

impl PowerSums {
    pub fn from_roots(roots: &[f64]) -> Self {
        let p = (1..=roots.len() as i32).map(|l| roots.iter().map(|x| x.powi(l)).sum()).collect();
        Self { p }
    }

    pub fn multiplicity(&self) -> usize {
        self.p.len()
    }
}

fn check_level(level: &EigenLevel) -> Result<()> {
    if level.omega == 0.0 {
        return Err(Error::InvalidInput("the constant level does not split".into()));
    }
    if !(1..=2).contains(&level.multiplicity()) {
        return Err(Error::InvalidInput(format!("multiplicity {} unsupported", level.multiplicity())));
    }
    Ok(())
}

fn same_level(a: &EigenLevel, b: &EigenLevel) -> bool {
    a.order() == b.order() && a.modes[0].k == b.modes[0].k
}

/// Modes of a level after rotating the (cos, sin) basis by `angle`;
/// each entry pairs a mode with its coefficient.
fn rotated_basis(level: &EigenLevel, angle: f64) -> Vec<Vec<(f64, Mode)>> {
    if level.multiplicity() == 1 {
        return vec![vec![(1.0, level.modes[0])]];
    }
    let (s, c) = angle.sin_cos();
    let (a, b) = (level.modes[0], level.modes[1]);
    vec![vec![(c, a), (s, b)], vec![(-s, a), (c, b)]]
}

/// `t` at `omega_theta` by quadrature of the double layer, in the basis
/// rotated by `angle`.
pub fn t_omega_in_basis(level: &EigenLevel, z: Point, angle: f64) -> Result<f64> {
    check_level(level)?;
    let q = CircleQuadrature::default();
    let mut total = 0.0;
    for combo in rotated_basis(level, angle) {
        let mut u = 0.0;
        let mut du = 0.0;
        for (coef, m) in &combo {
            u += coef * m.value_at(z);
            du += coef * double_layer_checked(level.omega, m, z, q, 1e-10)?;
        }
        total += u * du;
    }
    Ok(total / (2.0 * level.omega))
}

/// `t_{omega_theta} = U(z).D^{omega_theta}[U](z) / (2 omega_theta)` by
/// quadrature.
pub fn t_omega(level: &EigenLevel, z: Point) -> Result<f64> {
    t_omega_in_basis(level, z, 0.0)
}

/// `t_omega` at a free frequency.
pub fn t_omega_at(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    check_level(level)?;
    t_closed_form(level, z, omega)
}

/// `|U(z)|^2 / (2 omega_theta)`, the value `t` takes by Green's identity.
pub fn t_green(level: &EigenLevel, z: Point) -> f64 {
    level.modes.iter().map(|m| m.value_at(z).powi(2)).sum::<f64>() / (2.0 * level.omega)
}

struct Truncated {
    levels: Vec<EigenLevel>,
}

impl Truncated {
    fn new(cutoff: f64) -> Result<Self> {
        Ok(Self { levels: enumerate_levels(cutoff)? })
    }

    fn sum(&self, level: &EigenLevel, z: Point, omega: f64, cutoff: f64, angle: f64) -> Result<(f64, f64)> {
        let probe = DoubleLayerProbe::new(omega, z, CircleQuadrature::new(PROBE_NODES)?)?;
        let mut total = 0.0;
        let mut band = 0.0;
        for other in self.levels.iter().take_while(|l| l.omega < cutoff) {
            if same_level(other, level) {
                continue;
            }
            let mut prod = 0.0;
            for combo in rotated_basis(other, angle) {
                let u: f64 = combo.iter().map(|(c, m)| c * m.value_at(z)).sum();
                if u == 0.0 {
                    continue;
                }
                let du: f64 = combo.iter().map(|(c, m)| c * probe.mode(m)).sum();
                prod += u * du;
            }
            let term = prod / (omega * omega - other.omega * other.omega);
            total += term;
            if other.omega >= cutoff - PI {
                band += term;
            }
        }
        Ok((total, band.abs()))
    }
}

fn check_cutoff(level: &EigenLevel, cutoff: f64) -> Result<()> {
    if !(cutoff >= 4.0 * level.omega) || !cutoff.is_finite() {
        return Err(Error::InvalidInput(format!(
            "truncation {cutoff} must be at least 4 omega_theta = {}",
            4.0 * level.omega
        )));
    }
    Ok(())
}

/// Truncated `r` at a free frequency, in the basis rotated by `angle`.
pub fn r_omega_in_basis(level: &EigenLevel, z: Point, omega: f64, cutoff: f64, angle: f64) -> Result<RSeries> {
    check_level(level)?;
    check_cutoff(level, cutoff)?;
    let table = Truncated::new(2.0 * cutoff)?;
    let (value, tail) = table.sum(level, z, omega, cutoff, angle)?;
    let (doubled, _) = table.sum(level, z, omega, 2.0 * cutoff, angle)?;
    let change = if value == 0.0 { (doubled - value).abs() } else { ((doubled - value) / value).abs() };
    Ok(RSeries {
        value,
        tail_estimate: tail,
        doubling_change: change,
        converged: change <= DOUBLING_TOLERANCE,
    })
}

/// `r_{omega_theta}` truncated at `cutoff`.
pub fn r_omega(level: &EigenLevel, z: Point, cutoff: f64) -> Result<RSeries> {
    r_omega_in_basis(level, z, level.omega, cutoff, 0.0)
}

/// Truncated `r_omega` at a free frequency.
pub fn r_omega_at(level: &EigenLevel, z: Point, omega: f64, cutoff: f64) -> Result<RSeries> {
    r_omega_in_basis(level, z, omega, cutoff, 0.0)
}

/// Re-summed `r_omega` (no truncation).
pub fn r_omega_resummed(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    check_level(level)?;
    r_closed_form(level, z, omega)
}

/// `t / (1/s0 - r)`.
pub fn zero_order_shift(c: &SpectralConstants) -> Result<f64> {
    if c.t == 0.0 {
        return Ok(0.0);
    }
    let den = 1.0 / c.s0 - c.r;
    if den.abs() < 1e-12 {
        return Err(Error::Degenerate(format!("1/s0 - r = {den:e}")));
    }
    Ok(c.t / den)
}

/// Roots from their power sums, `m` in {1, 2}.
pub fn power_sums_to_roots(sums: &PowerSums) -> Result<Vec<f64>> {
    match sums.p.as_slice() {
        [p1] => Ok(vec![*p1]),
        [p1, p2] => {
            let disc = 2.0 * p2 - p1 * p1;
            if disc < -1e-12 {
                return Err(Error::InvalidInput(format!(
                    "inconsistent power sums: 2 p2 - p1^2 = {disc:e}"
                )));
            }
            let s = disc.max(0.0).sqrt();
            Ok(vec![0.5 * (p1 - s), 0.5 * (p1 + s)])
        }
        _ => Err(Error::InvalidInput(format!("multiplicity {} unsupported", sums.p.len()))),
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidInput(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(())
}

fn check_point(z: Point) -> Result<()> {
    if !(z.norm() <= crate::layer::MAX_INTERIOR_RADIUS) {
        return Err(Error::InvalidInput(format!("|z| must be <= 0.95, got {}", z.norm())));
    }
    Ok(())
}

/// `s0`, `t` and `r` at `omega_theta`.
pub fn frozen_constants(level: &EigenLevel, z: Point, eps: f64, r_sum: RSum) -> Result<SpectralConstants> {
    check_level(level)?;
    check_eps(eps)?;
    check_point(z)?;
    let w = level.omega;
    let s = s0(CapacityInput::new(w, eps))?;
    let t = t_omega(level, z)?;
    let (r, cutoff, tail, converged) = match r_sum {
        RSum::Truncated { cutoff } => {
            let series = r_omega(level, z, cutoff)?;
            (series.value, Some(cutoff), series.tail_estimate, series.converged)
        }
        RSum::Resummed => (r_closed_form(level, z, w)?, None, 0.0, true),
    };
    Ok(SpectralConstants {
        s0: s,
        t,
        r,
        level_index: level.index,
        z,
        omega: w,
        truncation_omega: cutoff,
        tail_estimate: tail,
        converged,
    })
}

/// Constants at the frequency `omega_theta + delta` solving
/// `delta = t_omega / (1/s0(omega) - r_omega)`.
pub fn self_consistent_constants(
    level: &EigenLevel,
    z: Point,
    eps: f64,
    r_sum: RSum,
) -> Result<SpectralConstants> {
    let frozen = frozen_constants(level, z, eps, r_sum)?;
    let start = zero_order_shift(&frozen)?;
    if start == 0.0 {
        return Ok(frozen);
    }
    let w = level.omega;
    let table = match r_sum {
        RSum::Truncated { cutoff } => Some((Truncated::new(cutoff)?, cutoff)),
        RSum::Resummed => None,
    };
    let eval = |delta: f64| -> Result<(f64, f64, f64)> {
        let omega = w + delta;
        let s = s0(CapacityInput::new(omega, eps))?;
        let t = t_closed_form(level, z, omega)?;
        let r = match &table {
            Some((tab, cutoff)) => tab.sum(level, z, omega, *cutoff, 0.0)?.0,
            None => r_closed_form(level, z, omega)?,
        };
        Ok((s, t, r))
    };
    let residual = |delta: f64| -> Result<f64> {
        let (s, t, r) = eval(delta)?;
        Ok(delta * (1.0 / s - r) - t)
    };
    // secant from the frozen prediction
    let (mut x0, mut x1) = (start, start * 1.01);
    let (mut f0, mut f1) = (residual(x0)?, residual(x1)?);
    let mut converged = false;
    for _ in 0..100 {
        if f1 == f0 {
            converged = (x1 - x0).abs() <= 1e-13 * x1.abs();
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = residual(x1)?;
        if (x1 - x0).abs() <= 1e-13 * x1.abs().max(1e-300) || f1 == 0.0 {
            converged = true;
            break;
        }
    }
    if !converged || !(x1.abs() < 4.0 * start.abs()) {
        return Err(Error::NonConvergence(format!(
            "self-consistent shift did not settle (start {start:e}, last {x1:e})"
        )));
    }
    let (s, t, r) = eval(x1)?;
    Ok(SpectralConstants { s0: s, t, r, omega: w + x1, ..frozen })
}

/// Prediction at `omega_theta` with `r` truncated at `truncation`.
pub fn predict_splitting(level: &EigenLevel, z: Point, eps: f64, truncation: f64) -> Result<SplitPrediction> {
    predict_splitting_with(level, z, eps, &AsymptoticOptions::frozen(truncation))
}

pub fn predict_splitting_with(
    level: &EigenLevel,
    z: Point,
    eps: f64,
    options: &AsymptoticOptions,
) -> Result<SplitPrediction> {
    let constants = match options.evaluation {
        Evaluation::Frozen => frozen_constants(level, z, eps, options.r_sum)?,
        Evaluation::SelfConsistent => self_consistent_constants(level, z, eps, options.r_sum)?,
    };
    let x = zero_order_shift(&constants)?;
    let m = level.multiplicity();
    let sums = PowerSums { p: (1..=m as i32).map(|l| x.powi(l)).collect() };
    let shifts = power_sums_to_roots(&sums)?;
    let attribution = if m == 2 && z.norm() > 0.0 && x != 0.0 {
        Some(Attribution { rotation: z.angle(), unshifted: Parity::Sin, shifted: Parity::Cos })
    } else {
        None
    };
    Ok(SplitPrediction {
        level: level.clone(),
        eps,
        z,
        shifts,
        remainder_order: 2,
        constants,
        attribution,
    })
}

/// `-pi |U(z)|^2 / (omega_theta ln eps)`.
pub fn legacy_leading_order(level: &EigenLevel, z: Point, eps: f64) -> Result<f64> {
    check_level(level)?;
    check_eps(eps)?;
    let u2: f64 = level.modes.iter().map(|m| m.value_at(z).powi(2)).sum();
    Ok(-PI * u2 / (level.omega * eps.ln()))
}
