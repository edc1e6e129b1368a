//! Closed forms on the unit disk for the eigenfunction sums.
//!
//! Both the level term `U(z).D^omega[U](z)` and the full sum
//! `F(omega) = sum_j U_j(z).D^omega[U_j](z) / (omega^2 - omega_j^2)` are
//! Fourier series in the angular order. `F` re-sums into
//! `-(1/4) sum_{n in Z} J_n(omega d)^2 Y_n'(omega) / J_n'(omega)` with
//! `d = |z|`, which converges like `d^{2n}`.

use crate::specfun::{
    bessel_j, bessel_j_log_seq, bessel_jp, bessel_y_log_seq, bessel_yp, log_half_difference,
};
use crate::spectrum::EigenLevel;
use crate::{Error, Point, Result};
use std::f64::consts::PI;

fn orders_needed(omega: f64, d: f64) -> usize {
    if d == 0.0 {
        return 1;
    }
    let geometric = if d < 1.0 { (-40.0 / (2.0 * d.ln())).ceil() } else { 2000.0 };
    (geometric + omega * d + 20.0).clamp(20.0, 2000.0) as usize
}

/// `F(omega)` for `z` with `|z| < 1`. Poles at every Neumann eigenfrequency.
pub fn neumann_regular_part(omega: f64, z: Point) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::InvalidInput(format!("omega must be > 0, got {omega}")));
    }
    let d = z.norm();
    if !(d < 1.0) {
        return Err(Error::InvalidInput(format!("need |z| < 1, got {d}")));
    }
    let nmax = orders_needed(omega, d);
    let lj = bessel_j_log_seq(nmax + 1, omega);
    let ly = bessel_y_log_seq(nmax + 1, omega)?;
    let ljd = if d > 0.0 { Some(bessel_j_log_seq(nmax, omega * d)) } else { None };
    let mut sum = 0.0;
    for n in 0..=nmax {
        // J_n(omega d)^2, as a log
        let l_jd2 = match &ljd {
            Some(v) => 2.0 * v[n].1,
            None if n == 0 => 0.0,
            None => continue,
        };
        let (jp, yp) = if n == 0 {
            ((-lj[1].0, lj[1].1), (-ly[1].0, ly[1].1))
        } else {
            (log_half_difference(lj[n - 1], lj[n + 1]), log_half_difference(ly[n - 1], ly[n + 1]))
        };
        let mult = if n == 0 { 1.0 } else { 2.0 };
        let term = -0.25 * mult * yp.0 * jp.0 * (l_jd2 + yp.1 - jp.1).exp();
        sum += term;
        if n > 2 && n as f64 > omega * d + 5.0 && term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    Ok(sum)
}

/// `T(omega) = U_theta(z) . D^omega[U_theta](z)` from the closed-form
/// double layer of each mode.
pub fn level_product(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    let n = level.order() as i32;
    let d = z.norm();
    let wt = level.omega;
    let c = level.modes[0].norm;
    // trig^2 summed over the level's modes
    let phi = z.angle();
    let angular: f64 = level.modes.iter().map(|m| m.parity.trig(m.n, phi).powi(2)).sum();
    let radial = c * c * bessel_j(n, wt * d) * bessel_j(n, wt) * 0.5 * PI * omega
        * bessel_j(n, omega * d)
        * bessel_yp(n, omega)?;
    Ok(radial * angular)
}

/// `d T / d omega`.
fn level_product_derivative(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    let n = level.order() as i32;
    let nf = n as f64;
    let d = z.norm();
    let wt = level.omega;
    let c = level.modes[0].norm;
    let phi = z.angle();
    let angular: f64 = level.modes.iter().map(|m| m.parity.trig(m.n, phi).powi(2)).sum();
    let jd = bessel_j(n, omega * d);
    let jdp = bessel_jp(n, omega * d);
    let yp = bessel_yp(n, omega)?;
    let y = crate::specfun::bessel_y(n, omega)?;
    let ypp = -yp / omega - (1.0 - nf * nf / (omega * omega)) * y;
    let g = jd * yp + omega * d * jdp * yp + omega * jd * ypp;
    Ok(c * c * bessel_j(n, wt * d) * bessel_j(n, wt) * 0.5 * PI * g * angular)
}

/// `t_omega = T(omega) / (omega + omega_theta)` from the closed form.
pub fn t_closed_form(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    Ok(level_product(level, z, omega)? / (omega + level.omega))
}

/// `r_omega = F(omega) - t_omega / (omega - omega_theta)`, with the removable
/// singularity at `omega = omega_theta` taken analytically.
pub fn r_closed_form(level: &EigenLevel, z: Point, omega: f64) -> Result<f64> {
    let wt = level.omega;
    if (omega - wt).abs() > 1e-7 * wt {
        let f = neumann_regular_part(omega, z)?;
        return Ok(f - t_closed_form(level, z, omega)? / (omega - wt));
    }
    let limit = r_at_level(level, z)?;
    if omega == wt {
        return Ok(limit);
    }
    // first-order correction from a symmetric difference well clear of the pole
    let h = 1e-4 * wt;
    let up = r_closed_form(level, z, wt + h)?;
    let dn = r_closed_form(level, z, wt - h)?;
    Ok(limit + (omega - wt) * (up - dn) / (2.0 * h))
}

/// Laurent limit of `r_omega` as `omega -> omega_theta`.
fn r_at_level(level: &EigenLevel, z: Point) -> Result<f64> {
    let n = level.order();
    let ni = n as i32;
    let nf = n as f64;
    let w = level.omega;
    let d = z.norm();
    // F without its order-n term
    let full_minus = {
        let nmax = orders_needed(w, d);
        let mut s = 0.0;
        for m in 0..=nmax as u32 {
            if m == n {
                continue;
            }
            s += order_term(m, w, d)?;
            if m > 2 && m as f64 > w * d + 5.0 && order_term(m, w, d)?.abs() < 1e-18 * s.abs() {
                break;
            }
        }
        s
    };
    let mult = if n == 0 { 1.0 } else { 2.0 };
    let jd = bessel_j(ni, w * d);
    let jdp = bessel_jp(ni, w * d);
    let y = crate::specfun::bessel_y(ni, w)?;
    let yp = bessel_yp(ni, w)?;
    let ypp = -yp / w - (1.0 - nf * nf / (w * w)) * y;
    let g = -0.25 * mult * jd * jd * yp;
    let gp = -0.25 * mult * (2.0 * d * jd * jdp * yp + jd * jd * ypp);
    let j = bessel_j(ni, w);
    let j2 = -(1.0 - nf * nf / (w * w)) * j;
    let j3 = -j2 / w - 2.0 * nf * nf / (w * w * w) * j;
    let singular = gp / j2 - g * j3 / (2.0 * j2 * j2);
    let t = level_product(level, z, w)?;
    let tp = level_product_derivative(level, z, w)?;
    let dt = tp / (2.0 * w) - t / (4.0 * w * w);
    Ok(full_minus + singular - dt)
}

fn order_term(n: u32, omega: f64, d: f64) -> Result<f64> {
    let ni = n as i32;
    let jd = if d == 0.0 { if n == 0 { 1.0 } else { 0.0 } } else { bessel_j(ni, omega * d) };
    if jd == 0.0 {
        return Ok(0.0);
    }
    let mult = if n == 0 { 1.0 } else { 2.0 };
    Ok(-0.25 * mult * jd * jd * bessel_yp(ni, omega)? / bessel_jp(ni, omega))
}
