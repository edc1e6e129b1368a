//! One-dimensional quadrature rules.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// `P_n` from the Chebyshev-like initial guesses.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, z);
        if d != 0.0 {
            dp = d;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn legendre(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Integral of `f` over `[a, b]` with the Gauss–Legendre rule of order `n`.
pub fn gauss_integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let h = 0.5 * (b - a);
    let c = 0.5 * (a + b);
    x.iter().zip(&w).map(|(xi, wi)| wi * f(c + h * xi)).sum::<f64>() * h
}

/// Tanh–sinh (double exponential) quadrature on `[a, b]`.
///
/// Tolerates integrable endpoint singularities; `f` is never evaluated at
/// the endpoints. The step is halved until two levels agree to `tol`
/// relative, or `max_levels` is reached.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, max_levels: u32) -> f64 {
    let c = 0.5 * (a + b);
    let h2 = 0.5 * (b - a);
    let tmax = 4.5;
    let eval = |t: f64| -> f64 {
        let s = 0.5 * PI * t.sinh();
        let ch = s.cosh();
        // distance to the nearer endpoint, computed without cancellation
        let gap = h2 / (s.exp() * ch);
        let w = 0.5 * PI * t.cosh() / (ch * ch);
        if gap <= 0.0 || w == 0.0 {
            return 0.0;
        }
        let (xr, xl) = (b - gap, a + gap);
        let right = if xr < b { f(xr) } else { 0.0 };
        let left = if xl > a { f(xl) } else { 0.0 };
        w * (right + left)
    };
    let mut h = 0.5;
    let mut sum = 0.5 * PI * f(c);
    let mut k = 1;
    while (k as f64) * h <= tmax {
        sum += eval(k as f64 * h);
        k += 1;
    }
    let mut prev = sum * h * h2;
    for _ in 0..max_levels {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            sum += eval(k as f64 * h);
            k += 2;
        }
        let cur = sum * h * h2;
        if (cur - prev).abs() <= tol * cur.abs().max(1e-300) {
            return cur;
        }
        prev = cur;
    }
    prev
}
