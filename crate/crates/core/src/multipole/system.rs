//! Boundary-condition matrices for the disk with an off-centre inclusion.
//!
//! The field is `sum_n a_n J_n(omega r) trig(n theta) / sa_n` (origin frame)
//! plus `sum_m b_m Y_m(omega rho) trig(m phi) / |H_m(omega eps)|` (inclusion
//! frame). Columns are scaled so that every unknown produces O(1) data on
//! the boundary it is attached to: `sa_n = hypot(J_n(omega), J_n'(omega))`.
//! Rows are the Fourier coefficients of `u` on `rho = eps` (Dirichlet) and
//! of `du/dr` on `r = 1` (Neumann). A row whose largest entry exceeds one
//! is divided by it; smaller rows are left alone, since a Neumann row whose
//! diagonal passes through zero at an eigenfrequency would otherwise be
//! blown up and turn the sigma_min dip into a spike far narrower than any
//! scan grid.

use crate::specfun::{bessel_j, bessel_j_log_seq, bessel_y_log_seq, log_half_difference};
use crate::{Error, Point, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    /// Cosine harmonics, symmetric about the line through 0 and z.
    Even,
    /// Sine harmonics.
    Odd,
    /// Both parities, for a centre at any angle.
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultipoleSystem {
    pub omega: f64,
    pub center: Point,
    pub eps: f64,
    pub block: Block,
    pub matrix: DMatrix<f64>,
    pub sigma_min: f64,
}

/// (sign, ln|x|) helpers
type Lg = (f64, f64);

fn lg_mul(x: f64, parts: &[Lg], inv: &[f64]) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let mut s = x.signum();
    let mut l = x.abs().ln();
    for p in parts {
        s *= p.0;
        l += p.1;
    }
    for i in inv {
        l -= i;
    }
    s * l.exp()
}

/// Per-frequency Bessel data shared by all assembly paths.
struct Tables {
    n: usize,
    /// J_k(omega d) for 0 <= k <= 2N + 1
    jd: Vec<f64>,
    /// J_n'(omega), Y_n'(omega) as logs
    jp: Vec<Lg>,
    yp: Vec<Lg>,
    /// ln sa_n
    lsa: Vec<f64>,
    /// J_k(omega eps), Y_k(omega eps) as logs and ln |H_k(omega eps)|
    je: Vec<Lg>,
    ye: Vec<Lg>,
    lh: Vec<f64>,
}

fn derivative_logs(v: &[Lg], n: usize) -> Vec<Lg> {
    (0..=n)
        .map(|k| if k == 0 { (-v[1].0, v[1].1) } else { log_half_difference(v[k - 1], v[k + 1]) })
        .collect()
}

fn log_hypot(a: Lg, b: Lg) -> f64 {
    let m = a.1.max(b.1);
    m + 0.5 * ((2.0 * (a.1 - m)).exp() + (2.0 * (b.1 - m)).exp()).ln()
}

impl Tables {
    fn new(omega: f64, d: f64, eps: f64, n: usize) -> Result<Self> {
        let lj = bessel_j_log_seq(n + 1, omega);
        let ly = bessel_y_log_seq(n + 1, omega)?;
        let jp = derivative_logs(&lj, n);
        let yp = derivative_logs(&ly, n);
        let lsa = (0..=n).map(|k| log_hypot(lj[k], jp[k])).collect();
        let jd = if d == 0.0 {
            let mut v = vec![0.0; 2 * n + 2];
            v[0] = 1.0;
            v
        } else {
            crate::specfun::bessel_j_seq(2 * n + 1, omega * d)
        };
        let je = bessel_j_log_seq(n, omega * eps);
        let ye = bessel_y_log_seq(n, omega * eps)?;
        let lh = je.iter().zip(&ye).map(|(a, b)| log_hypot(*a, *b)).collect();
        Ok(Self { n, jd, jp, yp, lsa, je, ye, lh })
    }

    /// J_k(omega d) for any integer k
    fn jd(&self, k: i64) -> f64 {
        let a = k.unsigned_abs() as usize;
        let v = self.jd.get(a).copied().unwrap_or(0.0);
        if k < 0 && a % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

fn sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check(omega: f64, center: Point, eps: f64, order: usize) -> Result<()> {
    let d = center.norm();
    if order < 4 {
        return Err(Error::InvalidInput(format!("order must be >= 4, got {order}")));
    }
    if !(omega > 0.0) || !(eps > 0.0) {
        return Err(Error::InvalidInput("omega and eps must be positive".into()));
    }
    if !(d + eps < 1.0) || !(d == 0.0 || eps < d) {
        return Err(Error::InvalidInput(format!(
            "inclusion (d = {d}, eps = {eps}) must lie inside the disk and away from its centre"
        )));
    }
    Ok(())
}

fn normalize_rows(m: &mut DMatrix<f64>) {
    for mut row in m.row_iter_mut() {
        let big = row.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if big > 1.0 {
            row /= big;
        }
    }
}

fn smallest_singular_value(m: &DMatrix<f64>) -> f64 {
    m.singular_values().iter().fold(f64::INFINITY, |a, v| a.min(*v))
}

/// Parity block for a centre `(d, 0)`.
pub fn assemble_system(omega: f64, d: f64, eps: f64, order: usize, block: Block) -> Result<MultipoleSystem> {
    let center = Point::new(d, 0.0);
    if block == Block::Full {
        return assemble_full(omega, center, eps, order);
    }
    check(omega, center, eps, order)?;
    let tab = Tables::new(omega, d, eps, order)?;
    let matrix = parity_block(&tab, block == Block::Even);
    let sigma_min = smallest_singular_value(&matrix);
    Ok(MultipoleSystem { omega, center, eps, block, matrix, sigma_min })
}

fn parity_block(tab: &Tables, even: bool) -> DMatrix<f64> {
    let n = tab.n;
    let first = if even { 0 } else { 1 };
    let orders: Vec<usize> = (first..=n).collect();
    let size = orders.len();
    let mut m = DMatrix::zeros(2 * size, 2 * size);
    let s = if even { 1.0 } else { -1.0 };
    // Dirichlet rows on rho = eps
    for (row, &k) in orders.iter().enumerate() {
        let ki = k as i64;
        for (col, &nn) in orders.iter().enumerate() {
            let ni = nn as i64;
            let g = if k == 0 { tab.jd(ni) } else { tab.jd(ni - ki) + s * sign(ki) * tab.jd(ni + ki) };
            m[(row, col)] = lg_mul(g, &[tab.je[k]], &[tab.lsa[nn]]);
        }
        m[(row, size + row)] = tab.ye[k].0 * (tab.ye[k].1 - tab.lh[k]).exp();
    }
    // Neumann rows on r = 1
    for (row, &j) in orders.iter().enumerate() {
        let ji = j as i64;
        m[(size + row, row)] = tab.jp[j].0 * (tab.jp[j].1 - tab.lsa[j]).exp();
        for (col, &mm) in orders.iter().enumerate() {
            let mi = mm as i64;
            let g = if j == 0 {
                sign(mi) * tab.jd(mi)
            } else {
                sign(mi - ji) * tab.jd(mi - ji) + s * sign(mi) * tab.jd(mi + ji)
            };
            m[(size + row, size + col)] = lg_mul(g, &[tab.yp[j]], &[tab.lh[mm]]);
        }
    }
    normalize_rows(&mut m);
    m
}

/// Real (cos, sin) coefficients of `sum_k c_k C_k e^{i k .}` for a real
/// function, given complex coefficients indexed by `k + offset`.
fn real_coefficients(c: impl Fn(i64) -> Complex64, k: usize) -> (f64, f64) {
    let ki = k as i64;
    if k == 0 {
        return (c(0).re, 0.0);
    }
    let plus = c(ki);
    let minus = c(-ki) * sign(ki);
    ((plus + minus).re, -(plus - minus).im)
}

/// Full system for a centre at any angle, from the complex addition
/// theorem.
pub fn assemble_full(omega: f64, center: Point, eps: f64, order: usize) -> Result<MultipoleSystem> {
    check(omega, center, eps, order)?;
    let d = center.norm();
    let phi_z = center.angle();
    let tab = Tables::new(omega, d, eps, order)?;
    let n = order;
    // unknown / row layout: cos 0..=N then sin 1..=N
    let labels: Vec<(usize, bool)> = (0..=n).map(|k| (k, true)).chain((1..=n).map(|k| (k, false))).collect();
    let size = labels.len();
    let mut m = DMatrix::zeros(2 * size, 2 * size);
    // J_n(omega r) e^{i n theta} = sum_k J_{n-k}(omega d) e^{i (n-k) phi_z} J_k(omega rho) e^{i k phi}
    let a_coef = |nn: i64, k: i64| Complex64::from_polar(tab.jd(nn - k), (nn - k) as f64 * phi_z);
    // Y_m(omega rho) e^{i m phi} = sum_j J_{m-j}(omega d) e^{i (m-j)(phi_z + pi)} Y_j(omega r) e^{i j theta}
    let b_coef = |mm: i64, j: i64| Complex64::from_polar(tab.jd(mm - j), (mm - j) as f64 * (phi_z + PI));
    // coefficients of trig(n .) built from e^{+-i n .}
    let trig = |coef: &dyn Fn(i64, i64) -> Complex64, nn: usize, cos: bool, k: i64| -> Complex64 {
        let ni = nn as i64;
        let p = coef(ni, k);
        let q = coef(-ni, k) * sign(ni);
        if cos {
            (p + q) * 0.5
        } else {
            (p - q) * Complex64::new(0.0, -0.5)
        }
    };
    for (row, &(k, rc)) in labels.iter().enumerate() {
        for (col, &(nn, cc)) in labels.iter().enumerate() {
            let (cs, sn) = real_coefficients(|kk| trig(&a_coef, nn, cc, kk), k);
            let g = if rc { cs } else { sn };
            m[(row, col)] = lg_mul(g, &[tab.je[k]], &[tab.lsa[nn]]);
        }
        m[(row, size + row)] = tab.ye[k].0 * (tab.ye[k].1 - tab.lh[k]).exp();
    }
    for (row, &(j, rc)) in labels.iter().enumerate() {
        m[(size + row, row)] = tab.jp[j].0 * (tab.jp[j].1 - tab.lsa[j]).exp();
        for (col, &(mm, cc)) in labels.iter().enumerate() {
            let (cs, sn) = real_coefficients(|jj| trig(&b_coef, mm, cc, jj), j);
            let g = if rc { cs } else { sn };
            m[(size + row, size + col)] = lg_mul(g, &[tab.yp[j]], &[tab.lh[mm]]);
        }
    }
    normalize_rows(&mut m);
    let sigma_min = smallest_singular_value(&m);
    Ok(MultipoleSystem { omega, center, eps, block: Block::Full, matrix: m, sigma_min })
}

/// Smallest singular value of a system without keeping the matrix.
pub fn sigma_min(omega: f64, center: Point, eps: f64, order: usize, block: Block) -> Result<f64> {
    match block {
        Block::Full => Ok(assemble_full(omega, center, eps, order)?.sigma_min),
        _ => {
            if center.y != 0.0 || center.x < 0.0 {
                return Err(Error::InvalidInput("parity blocks need a centre on the positive x-axis".into()));
            }
            Ok(assemble_system(omega, center.x, eps, order, block)?.sigma_min)
        }
    }
}

/// `J_n'(omega) Y_n(omega eps) - Y_n'(omega) J_n(omega eps)`, whose zeros
/// are the eigenfrequencies of the annulus `eps < r < 1` in order `n`.
pub fn concentric_characteristic(n: u32, omega: f64, eps: f64) -> Result<f64> {
    if !(omega > 0.0) || !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidInput(format!("need omega > 0 and 0 < eps < 1, got {omega}, {eps}")));
    }
    let ni = n as i32;
    let jp = crate::specfun::bessel_jp(ni, omega);
    let yp = crate::specfun::bessel_yp(ni, omega)?;
    Ok(jp * crate::specfun::bessel_y(ni, omega * eps)? - yp * bessel_j(ni, omega * eps))
}
