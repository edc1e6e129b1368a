//! Bessel functions of integer order and real argument.
//!
//! `J_n` comes from its ascending series when `x²/4` is small compared with
//! `n + 1`, and from Miller's backward recurrence otherwise. `Y_0` and `Y_1`
//! come from ascending series for `x <= 2`, from Neumann series over the
//! Miller sequence for `2 < x < 25`, and from Hankel's asymptotic expansion
//! for `x >= 25`; higher orders of `Y` follow by forward recurrence, which
//! is stable for the second kind.
//!
//! Negative orders use `C_{-n} = (-1)^n C_n` for both kinds.

mod roots;

pub use roots::{jnp_root, jnp_root_within, jnp_roots_below, RootIndex};

use crate::{Error, Result};
use std::f64::consts::{FRAC_2_PI, LN_2, PI};

/// Euler–Mascheroni constant, 20 significant digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

/// Upper end of the ascending-series regime for `Y_0` and `Y_1`.
const Y_SERIES_MAX: f64 = 2.0;
/// Lower end of the Hankel regime for `Y_0` and `Y_1`.
const HANKEL_MIN: f64 = 25.0;

/// `ln eta_n = gamma - ln 2 - H_n`, with `H_n` the n-th harmonic number.
///
/// With this constant the ascending series of the Bessel function of the
/// second kind reads `Y_0(x) = (2/pi) sum_n (-1)^n ((x/2)^n / n!)^2 ln(eta_n x)`.
pub fn ln_eta(n: u32) -> f64 {
    let harmonic: f64 = (1..=n).map(|k| 1.0 / k as f64).sum();
    EULER_GAMMA - LN_2 - harmonic
}

/// `eta_0 = e^gamma / 2`, so that `Y_0(x) ~ (2/pi) ln(eta_0 x)` as `x -> 0`.
pub fn eta0() -> f64 {
    ln_eta(0).exp()
}

#[inline]
fn reflect_sign(n: i32) -> f64 {
    if n < 0 && n % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

/// Bessel function of the first kind `J_n(x)`.
pub fn bessel_j(n: i32, x: f64) -> f64 {
    let sign = reflect_sign(n);
    let m = n.unsigned_abs() as usize;
    if x < 0.0 {
        let parity = if m % 2 == 1 { -1.0 } else { 1.0 };
        return sign * parity * bessel_j(m as i32, -x);
    }
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    if use_j_series(m, x) {
        sign * j_series(m, x)
    } else {
        sign * miller(m, x)[m]
    }
}

/// `J_0(x), ..., J_nmax(x)` for `x >= 0`.
pub fn bessel_j_seq(nmax: usize, x: f64) -> Vec<f64> {
    assert!(x >= 0.0, "bessel_j_seq needs x >= 0");
    if x == 0.0 {
        let mut v = vec![0.0; nmax + 1];
        v[0] = 1.0;
        return v;
    }
    if use_j_series(0, x) {
        return (0..=nmax).map(|n| j_series(n, x)).collect();
    }
    let mut seq = miller(nmax, x);
    seq.truncate(nmax + 1);
    seq
}

/// Derivative `J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2`.
pub fn bessel_jp(n: i32, x: f64) -> f64 {
    0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x))
}

/// Bessel function of the second kind `Y_n(x)`, defined for `x > 0`.
pub fn bessel_y(n: i32, x: f64) -> Result<f64> {
    let m = n.unsigned_abs() as usize;
    let seq = bessel_y_seq(m, x)?;
    Ok(reflect_sign(n) * seq[m])
}

/// Derivative `Y_n'(x)`.
pub fn bessel_yp(n: i32, x: f64) -> Result<f64> {
    Ok(0.5 * (bessel_y(n - 1, x)? - bessel_y(n + 1, x)?))
}

/// `Y_0(x), ..., Y_nmax(x)` by forward recurrence from `Y_0`, `Y_1`.
pub fn bessel_y_seq(nmax: usize, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "Y_n(x) has a logarithmic singularity at x = 0; got x = {x}"
        )));
    }
    let (y0, y1) = y01(x);
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(y0);
    if nmax >= 1 {
        out.push(y1);
    }
    for k in 1..nmax {
        let next = (2.0 * k as f64 / x) * out[k] - out[k - 1];
        out.push(next);
    }
    Ok(out)
}

/// Signs and natural logarithms of `|Y_0(x)|, ..., |Y_nmax(x)|`.
///
/// Uses the ratio form of the forward recurrence so that orders whose value
/// overflows `f64` remain representable.
pub fn bessel_y_log_seq(nmax: usize, x: f64) -> Result<Vec<(f64, f64)>> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("Y_n(x) needs x > 0; got x = {x}")));
    }
    let (y0, y1) = y01(x);
    let mut out = Vec::with_capacity(nmax + 1);
    out.push((y0.signum(), y0.abs().ln()));
    if nmax == 0 {
        return Ok(out);
    }
    out.push((y1.signum(), y1.abs().ln()));
    // ratio = Y_k / Y_{k-1}
    let mut ratio = y1 / y0;
    for k in 1..nmax {
        ratio = 2.0 * k as f64 / x - 1.0 / ratio;
        let (s, l) = out[k];
        out.push((s * ratio.signum(), l + ratio.abs().ln()));
    }
    Ok(out)
}

/// Signs and natural logarithms of `|J_0(x)|, ..., |J_nmax(x)|` for `x > 0`.
///
/// Orders whose value underflows are reached through the ratios
/// `J_{k+1}/J_k` of the backward recurrence, continued from the last
/// representable order above `x`.
pub fn bessel_j_log_seq(nmax: usize, x: f64) -> Vec<(f64, f64)> {
    assert!(x > 0.0, "bessel_j_log_seq needs x > 0");
    let direct = bessel_j_seq(nmax, x);
    let cut = (0..=nmax).find(|&n| n as f64 > x + 1.0 && direct[n].abs() < 1e-250);
    let mut out: Vec<(f64, f64)> = direct.iter().map(|v| (v.signum(), v.abs().ln())).collect();
    let Some(cut) = cut else { return out };
    // q_k = J_{k+1} / J_k, positive and decreasing for k > x
    let top = nmax + 30 + (2.0 * nmax as f64).sqrt() as usize;
    let mut q = 0.5 * x / (top + 1) as f64;
    let mut ratios = vec![0.0; nmax + 1];
    for k in (cut - 1..top).rev() {
        q = 1.0 / (2.0 * (k + 1) as f64 / x - q);
        if k < nmax {
            ratios[k] = q;
        }
    }
    for n in cut..=nmax {
        let (s, l) = out[n - 1];
        out[n] = (s, l + ratios[n - 1].ln());
    }
    out
}

/// `(a - b) / 2` for numbers given as (sign, ln magnitude).
pub(crate) fn log_half_difference(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let m = a.1.max(b.1);
    let v = a.0 * (a.1 - m).exp() - b.0 * (b.1 - m).exp();
    (v.signum(), m + (0.5 * v.abs()).ln())
}

/// Hankel's asymptotic expansion for large `x`, returning `(J_n(x), Y_n(x))`.
///
/// The series is summed until its terms fall below 1e-17 relative or start
/// to grow. Accurate for `x >> n^2`; the library uses it for `n <= 1`,
/// `x >= 25`.
pub fn hankel_asymptotic(n: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (n as f64).powi(2);
    let mut p: f64 = 1.0;
    let mut q: f64 = 0.0;
    let mut term = 1.0_f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let mag = term.abs();
        if mag > last || mag < 1e-17 * (p.abs() + q.abs()) {
            break;
        }
        last = mag;
        // k = 1, 2, 3, 4, ... contributes +Q, -P, -Q, +P, ...
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
    }
    let chi = x - (0.5 * n as f64 + 0.25) * PI;
    let (s, c) = chi.sin_cos();
    let amp = (FRAC_2_PI / x).sqrt();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}

/// Ascending series for `Y_0` written with `ln eta_n`.
pub fn y0_eta_series(x: f64) -> f64 {
    let lnx = x.ln();
    let q = 0.25 * x * x;
    let mut coeff = 1.0; // ((x/2)^k / k!)^2
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 0..200u32 {
        if k > 0 {
            let kf = k as f64;
            coeff *= -q / (kf * kf);
            harmonic += 1.0 / kf;
        }
        let term = coeff * (EULER_GAMMA - LN_2 - harmonic + lnx);
        sum += term;
        if k > 2 && term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    FRAC_2_PI * sum
}

fn use_j_series(n: usize, x: f64) -> bool {
    let q = 0.25 * x * x;
    x <= 2.0 || q < (n as f64 + 1.0)
}

/// `(x/2)^n / n! * sum_k (-x^2/4)^k / (k! (n+1)_k)`.
fn j_series(n: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for i in 1..=n {
        lead *= half / i as f64;
    }
    if lead == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        term *= q / (k as f64 * (n + k) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// Miller's backward recurrence normalised by `J_0 + 2 sum J_2k = 1`.
///
/// Returns `J_0(x), ..., J_top(x)` where `top >= nmax` is the starting order
/// minus one; entries above `nmax` are also accurate and are used by the
/// Neumann series for `Y`.
fn miller(nmax: usize, x: f64) -> Vec<f64> {
    let reach = (nmax as f64).max(x);
    let mut start = (reach + 30.0 + (50.0 * reach).sqrt()).ceil() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut vals = vec![0.0; start + 1];
    let mut next = 0.0; // f_{k+1}
    let mut cur = 1e-300; // f_k
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        vals[k] = cur;
        if k % 2 == 0 {
            norm += 2.0 * cur;
        }
        let prev = (2.0 * k as f64 / x) * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > 1e250 {
            let scale = 1e-250;
            cur *= scale;
            next *= scale;
            norm *= scale;
            for v in &mut vals[k..] {
                *v *= scale;
            }
        }
    }
    vals[0] = cur;
    norm += cur;
    for v in &mut vals {
        *v /= norm;
    }
    vals.truncate(start);
    vals
}

fn y01(x: f64) -> (f64, f64) {
    if x <= Y_SERIES_MAX {
        (y0_eta_series(x), y1_series(x))
    } else if x < HANKEL_MIN {
        y01_neumann(x)
    } else {
        (hankel_asymptotic(0, x).1, hankel_asymptotic(1, x).1)
    }
}

/// `Y_1(x) = -2/(pi x) + (2/pi) ln(x/2) J_1(x)
///           - (x/(2 pi)) sum_k (psi(k+1) + psi(k+2)) (-x^2/4)^k / (k! (k+1)!)`.
fn y1_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut coeff = 1.0;
    // psi(k+1) = -gamma + H_k
    let mut h_k = 0.0;
    let mut h_k1 = 1.0;
    let mut sum = 0.0;
    for k in 0..200u32 {
        if k > 0 {
            let kf = k as f64;
            coeff *= q / (kf * (kf + 1.0));
            h_k += 1.0 / kf;
            h_k1 += 1.0 / (kf + 1.0);
        }
        let term = coeff * (h_k + h_k1 - 2.0 * EULER_GAMMA);
        sum += term;
        if k > 2 && term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    -FRAC_2_PI / x + FRAC_2_PI * (0.5 * x).ln() * j_series(1, x) - x / (2.0 * PI) * sum
}

/// Neumann series over the Miller sequence:
/// `(pi/2) Y_0 = L J_0 - 2 sum (-1)^k J_2k / k`,
/// `(pi/2) Y_1 = -J_0/x + L J_1 + sum (-1)^k (J_{2k-1} - J_{2k+1}) / k`,
/// with `L = ln(x/2) + gamma`.
fn y01_neumann(x: f64) -> (f64, f64) {
    let j = miller(1, x);
    let l = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s0 += sign * j[2 * k] / k as f64;
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
        k += 1;
    }
    let y0 = FRAC_2_PI * (l * j[0] - 2.0 * s0);
    let y1 = FRAC_2_PI * (-j[0] / x + l * j[1] + s1);
    (y0, y1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        assert_eq!(bessel_j(7, 0.0), 0.0);
    }

    #[test]
    fn reference_values_at_one() {
        assert!((bessel_j(0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!((bessel_y(0, 1.0).unwrap() - 0.088_256_964_215_676_96).abs() < 1e-15);
    }

    #[test]
    fn y_rejects_nonpositive_argument() {
        assert!(matches!(bessel_y(0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_y(3, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn eta0_from_gamma() {
        assert!((eta0() - 0.890_536_209_0).abs() < 1e-10);
        // leading term of the series
        let x = 1e-4;
        let lead = FRAC_2_PI * (eta0() * x).ln();
        assert!(rel(bessel_y(0, x).unwrap(), lead) < 1e-7);
    }

    #[test]
    fn reflection_is_exact() {
        for n in 0..12 {
            for &x in &[0.3, 4.0, 31.0] {
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(bessel_j(-n, x), s * bessel_j(n, x));
                assert_eq!(bessel_y(-n, x).unwrap(), s * bessel_y(n, x).unwrap());
            }
        }
    }

    #[test]
    fn regimes_match_at_crossovers() {
        // Y: series / Neumann at 2, Neumann / Hankel at 25
        for &x in &[Y_SERIES_MAX, HANKEL_MIN] {
            let below = x * (1.0 - 1e-15);
            let (a0, a1) = y01(below);
            let (b0, b1) = y01(x);
            let (c0, c1) = y01(x * (1.0 + 1e-15));
            assert!(rel(a0, b0) < 1e-13 && rel(b0, c0) < 1e-13, "Y0 at {x}");
            assert!(rel(a1, b1) < 1e-13 && rel(b1, c1) < 1e-13, "Y1 at {x}");
        }
        // the Neumann series itself agrees with both neighbours
        for &x in &[1.5, 2.0] {
            let (n0, n1) = y01_neumann(x);
            assert!(rel(n0, y0_eta_series(x)) < 1e-13);
            assert!(rel(n1, y1_series(x)) < 1e-13);
        }
        for &x in &[25.0, 30.0] {
            let (n0, n1) = y01_neumann(x);
            let (_, h0) = hankel_asymptotic(0, x);
            let (_, h1) = hankel_asymptotic(1, x);
            assert!((n0 - h0).abs() < 1e-14, "{n0} {h0}");
            assert!((n1 - h1).abs() < 1e-14, "{n1} {h1}");
        }
        // J: series / Miller boundary
        for n in [0usize, 3, 10] {
            let x = if n == 0 { 2.0 } else { 2.0 * ((n + 1) as f64).sqrt() };
            assert!(rel(j_series(n, x), miller(n, x)[n]) < 1e-13, "J_{n} at {x}");
        }
    }

    #[test]
    fn hankel_and_miller_agree_for_j() {
        for &x in &[25.0, 60.0, 199.0] {
            let (j0, _) = hankel_asymptotic(0, x);
            let (j1, _) = hankel_asymptotic(1, x);
            assert!((j0 - bessel_j(0, x)).abs() < 1e-14);
            assert!((j1 - bessel_j(1, x)).abs() < 1e-14);
        }
    }

    #[test]
    fn log_sequence_matches_direct_values() {
        let x = 0.37;
        let direct = bessel_y_seq(20, x).unwrap();
        let logs = bessel_y_log_seq(20, x).unwrap();
        for (d, (s, l)) in direct.iter().zip(&logs) {
            assert!(rel(s * l.exp(), *d) < 1e-12);
        }
        // far beyond f64 range the logarithm still exists
        let big = bessel_y_log_seq(64, 1e-6).unwrap();
        assert!(big[64].1 > 900.0 && big[64].1.is_finite());
    }

    #[test]
    fn ln_eta_of_one() {
        assert!((ln_eta(1) - (EULER_GAMMA - LN_2 - 1.0)).abs() < 1e-16);
    }

    #[test]
    fn log_j_sequence_continues_past_underflow() {
        let x = 1.5;
        let l = bessel_j_log_seq(300, x);
        let direct = bessel_j_seq(60, x);
        for n in 0..=60 {
            assert!((l[n].0 * l[n].1.exp() - direct[n]).abs() <= 1e-13 * direct[n].abs());
        }
        // J_n(x) ~ (x/2)^n / n! for n >> x
        let n = 300;
        let lead: f64 = n as f64 * (0.5 * x).ln() - (1..=n).map(|k| (k as f64).ln()).sum::<f64>();
        assert!((l[n].1 - lead).abs() < 1e-2, "{} vs {lead}", l[n].1);
        assert!(l[n].1 < -1000.0);
    }
}
