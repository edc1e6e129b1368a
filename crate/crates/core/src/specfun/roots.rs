use super::bessel_jp;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Identifies the k-th positive root of `J_n'` (k starts at 1).
///
/// For `n = 0` the root `x = 0` is not counted, so `RootIndex { n: 0, k: 1 }`
/// is the first zero of `J_1`, 3.8317...
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex {
    pub n: u32,
    pub k: u32,
}

impl RootIndex {
    pub fn new(n: u32, k: u32) -> Self {
        Self { n, k }
    }
}

fn default_upper(idx: RootIndex) -> f64 {
    let n = idx.n as f64;
    n + 2.0 * n.cbrt() + (idx.k as f64 + 2.0) * PI + 10.0
}

/// k-th positive root of `J_n'`, bracketed by a scan of step pi/4 and then
/// bisected to the last ulp.
pub fn jnp_root(idx: RootIndex) -> Result<f64> {
    jnp_root_within(idx, default_upper(idx))
}

/// As [`jnp_root`], scanning no further than `upper`.
pub fn jnp_root_within(idx: RootIndex, upper: f64) -> Result<f64> {
    if idx.k == 0 {
        return Err(Error::InvalidInput("root index k starts at 1".into()));
    }
    let n = idx.n as i32;
    let step = PI / 4.0;
    let mut a = if idx.n == 0 { 0.5 } else { idx.n as f64 };
    let mut fa = bessel_jp(n, a);
    let mut found = 0;
    while a < upper {
        let b = a + step;
        let fb = bessel_jp(n, b);
        if fb == 0.0 {
            found += 1;
            if found == idx.k {
                return Ok(b);
            }
            a = b + 1e-9;
            fa = bessel_jp(n, a);
            continue;
        }
        if fa.signum() != fb.signum() {
            found += 1;
            if found == idx.k {
                return Ok(bisect(n, a, b, fa));
            }
        }
        a = b;
        fa = fb;
    }
    Err(Error::NonConvergence(format!(
        "only {found} roots of J_{n}' found below {upper}; wanted k = {}",
        idx.k
    )))
}

/// Every positive root of `J_n'` below `upper`, ascending, from a single
/// scan.
pub fn jnp_roots_below(n: u32, upper: f64) -> Vec<f64> {
    let ni = n as i32;
    let step = PI / 4.0;
    let mut a = if n == 0 { 0.5 } else { n as f64 };
    let mut fa = bessel_jp(ni, a);
    let mut out = Vec::new();
    while a < upper {
        let b = (a + step).min(upper);
        let fb = bessel_jp(ni, b);
        if fa.signum() != fb.signum() || fb == 0.0 {
            let r = if fb == 0.0 { b } else { bisect(ni, a, b, fa) };
            if r < upper {
                out.push(r);
            }
        }
        if b >= upper {
            break;
        }
        a = b;
        fa = fb;
    }
    out
}

fn bisect(n: i32, mut lo: f64, mut hi: f64, flo: f64) -> f64 {
    let slo = flo.signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = bessel_jp(n, mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
