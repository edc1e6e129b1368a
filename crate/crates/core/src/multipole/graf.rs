use crate::specfun::{bessel_j, bessel_j_log_seq, bessel_y, bessel_y_log_seq};
use crate::{Error, Point, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Kind of cylindrical harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    J,
    Y,
}

fn cyl(kind: Kind, n: i32, x: f64) -> Result<f64> {
    match kind {
        Kind::J => Ok(bessel_j(n, x)),
        Kind::Y => bessel_y(n, x),
    }
}

/// `C_n(omega |target - center|) e^{i n arg(target - center)}` evaluated
/// directly.
pub fn direct_harmonic(kind: Kind, n: i32, omega: f64, center: Point, target: Point) -> Result<Complex64> {
    let rel = target - center;
    let v = cyl(kind, n, omega * rel.norm())?;
    Ok(Complex64::from_polar(v, n as f64 * rel.angle()))
}

/// The harmonic of order `n` centred at `offset`, evaluated at `target`
/// through the origin-centred harmonics of `target`:
///
/// `C_n(omega rho) e^{i n phi} = sum_k C_{n-k}(omega r) e^{i (n-k) theta}
///  J_k(omega |offset|) e^{i k (arg offset + pi)}`,
///
/// with `(r, theta)` the polar coordinates of `target`, `(rho, phi)` those
/// of `target - offset`. For `Kind::Y` it needs `|target| > |offset|`.
pub fn graf_translate(kind: Kind, n: i32, omega: f64, offset: Point, target: Point) -> Result<Complex64> {
    graf_translate_signed(kind, n, omega, offset, target, false)
}

/// As [`graf_translate`]; `mutated` drops the `pi` phase of the offset
/// factor. Only used to demonstrate that the direct-evaluation check
/// detects a convention error.
pub fn graf_translate_signed(
    kind: Kind,
    n: i32,
    omega: f64,
    offset: Point,
    target: Point,
    mutated: bool,
) -> Result<Complex64> {
    let d = offset.norm();
    let r = target.norm();
    if kind == Kind::Y && !(r > d) {
        return Err(Error::InvalidInput(format!(
            "Y translation needs |target| > |offset|, got {r} <= {d}"
        )));
    }
    if d == 0.0 {
        return direct_harmonic(kind, n, omega, Point::ORIGIN, target);
    }
    let theta = target.angle();
    let phase = offset.angle() + if mutated { 0.0 } else { std::f64::consts::PI };
    // the series converges like (d / r)^k for Y and faster for J
    let ratio = if kind == Kind::Y { d / r } else { 0.0 };
    let geometric = if ratio > 0.0 { (-40.0 / ratio.ln()).ceil() as usize } else { 0 };
    let kmax = (geometric + (omega * d).ceil() as usize + 40).clamp(400, 20_000);
    let na = n.unsigned_abs() as usize;
    let lj = bessel_j_log_seq(kmax, omega * d);
    let lc = match kind {
        Kind::J => bessel_j_log_seq(kmax + na, omega * r),
        Kind::Y => bessel_y_log_seq(kmax + na, omega * r)?,
    };
    let reflect = |v: &[(f64, f64)], k: i64| -> (f64, f64) {
        let (s, l) = v[k.unsigned_abs() as usize];
        if k < 0 && k % 2 != 0 {
            (-s, l)
        } else {
            (s, l)
        }
    };
    let term = |k: i64| -> Complex64 {
        let (sj, lgj) = reflect(&lj, k);
        let (sc, lgc) = reflect(&lc, n as i64 - k);
        if sj == 0.0 || sc == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(sj * sc * (lgj + lgc).exp(), (n as i64 - k) as f64 * theta + k as f64 * phase)
    };
    let mut sum = term(0);
    let kmin = (omega * d).ceil() as usize + 5;
    let mut quiet = 0;
    for k in 1..=kmax {
        let add = term(k as i64) + term(-(k as i64));
        sum += add;
        if k > kmin && add.norm() <= 1e-17 * sum.norm().max(1e-300) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
        if k == kmax && add.norm() > 1e-10 * sum.norm() {
            return Err(Error::NonConvergence(format!(
                "Graf series tail {:e} after {kmax} terms",
                add.norm()
            )));
        }
    }
    Ok(sum)
}
