//! Fundamental solution, double-layer potential on the unit circle, and the
//! single-layer machinery on the inclusion boundary.

use crate::specfun::{bessel_j, bessel_y, bessel_yp, eta0};
use crate::spectrum::{Mode, Parity};
use crate::{Error, Point, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Largest `|z|` accepted for interior double-layer evaluation.
pub const MAX_INTERIOR_RADIUS: f64 = 0.95;

/// Node count used for double-layer evaluation unless stated otherwise.
pub const DEFAULT_NODES: usize = 256;

/// `Gamma_0 = ln(r) / (2 pi)` and `Gamma_omega = Y_0(omega r) / 4`.
///
/// The two branches are not continuous in `omega`: callers pick one.
pub fn gamma(omega: f64, distance: f64) -> Result<f64> {
    if !(distance > 0.0) {
        return Err(Error::Domain(format!("Gamma needs distance > 0, got {distance}")));
    }
    if omega == 0.0 {
        Ok(distance.ln() / (2.0 * PI))
    } else if omega > 0.0 {
        Ok(0.25 * bessel_y(0, omega * distance)?)
    } else {
        Err(Error::InvalidInput(format!("omega must be >= 0, got {omega}")))
    }
}

/// Periodic trapezoid rule on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleQuadrature {
    m: usize,
}

impl CircleQuadrature {
    pub fn new(m: usize) -> Result<Self> {
        if m < 4 || !m.is_power_of_two() {
            return Err(Error::InvalidInput(format!("node count must be a power of two >= 4, got {m}")));
        }
        Ok(Self { m })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self, i: usize) -> f64 {
        2.0 * PI * i as f64 / self.m as f64
    }

    pub fn node(&self, i: usize) -> Point {
        Point::from_polar(1.0, self.theta(i))
    }

    pub fn weight(&self) -> f64 {
        2.0 * PI / self.m as f64
    }

    pub fn doubled(&self) -> Self {
        Self { m: 2 * self.m }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        (0..self.m).map(|i| f(self.theta(i))).sum::<f64>() * self.weight()
    }
}

impl Default for CircleQuadrature {
    fn default() -> Self {
        Self { m: DEFAULT_NODES }
    }
}

fn check_interior(omega: f64, z: Point) -> Result<()> {
    if !(omega > 0.0) {
        return Err(Error::InvalidInput(format!("double layer needs omega > 0, got {omega}")));
    }
    if !(z.norm() <= MAX_INTERIOR_RADIUS) {
        return Err(Error::InvalidInput(format!(
            "interior point must satisfy |z| <= {MAX_INTERIOR_RADIUS}, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

/// `d Gamma_omega(z, y) / d nu(y)` for `y` on the unit circle:
/// `-(omega/4) Y_1(omega R) (1 - z.y) / R` with `R = |z - y|`.
pub fn double_layer_kernel(omega: f64, z: Point, y: Point) -> Result<f64> {
    let r = z.distance(y);
    Ok(-0.25 * omega * bessel_y(1, omega * r)? * (1.0 - z.dot(y)) / r)
}

/// `D^omega[phi](z)` for a density given as a function of the boundary angle.
pub fn double_layer_density(
    omega: f64,
    z: Point,
    quad: CircleQuadrature,
    density: impl Fn(f64) -> f64,
) -> Result<f64> {
    check_interior(omega, z)?;
    let mut sum = 0.0;
    for i in 0..quad.len() {
        let y = quad.node(i);
        sum += double_layer_kernel(omega, z, y)? * density(quad.theta(i));
    }
    Ok(sum * quad.weight())
}

/// `D^omega[u](z)` with the trace of `mode` on the unit circle as density.
pub fn double_layer_at(omega: f64, mode: &Mode, z: Point, quad: CircleQuadrature) -> Result<f64> {
    double_layer_density(omega, z, quad, |th| mode.value_at(Point::from_polar(1.0, th)))
}

/// As [`double_layer_at`] at `M` and `2M` nodes; fails if the two differ by
/// more than `tol`. Returns the `2M` value.
pub fn double_layer_checked(
    omega: f64,
    mode: &Mode,
    z: Point,
    quad: CircleQuadrature,
    tol: f64,
) -> Result<f64> {
    let coarse = double_layer_at(omega, mode, z, quad)?;
    let fine = double_layer_at(omega, mode, z, quad.doubled())?;
    if (fine - coarse).abs() > tol {
        return Err(Error::NonConvergence(format!(
            "double layer changed by {:e} from {} to {} nodes",
            (fine - coarse).abs(),
            quad.len(),
            2 * quad.len()
        )));
    }
    Ok(fine)
}

/// Closed form of `D^omega[trig(n theta)](z)` on the unit circle:
/// `(pi omega / 2) J_n(omega |z|) Y_n'(omega) trig(n arg z)`.
pub fn double_layer_harmonic(omega: f64, n: u32, parity: Parity, z: Point) -> Result<f64> {
    let ni = n as i32;
    let radial = 0.5 * PI * omega * bessel_j(ni, omega * z.norm()) * bessel_yp(ni, omega)?;
    Ok(radial * parity.trig(n, z.angle()))
}

/// Kernel samples at a fixed `(omega, z)`, used to apply the double layer
/// to many modes at once.
#[derive(Debug, Clone)]
pub struct DoubleLayerProbe {
    quad: CircleQuadrature,
    kernel: Vec<f64>,
}

impl DoubleLayerProbe {
    pub fn new(omega: f64, z: Point, quad: CircleQuadrature) -> Result<Self> {
        check_interior(omega, z)?;
        let kernel = (0..quad.len())
            .map(|i| double_layer_kernel(omega, z, quad.node(i)).map(|k| k * quad.weight()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { quad, kernel })
    }

    /// `D^omega[trig(n theta)](z)`.
    pub fn harmonic(&self, n: u32, parity: Parity) -> f64 {
        self.kernel
            .iter()
            .enumerate()
            .map(|(i, k)| k * parity.trig(n, self.quad.theta(i)))
            .sum()
    }

    /// `D^omega[u](z)` for an eigenmode, using that its trace is
    /// `c J_n(omega_j) trig(n theta)`.
    pub fn mode(&self, mode: &Mode) -> f64 {
        if mode.is_constant() {
            return mode.norm * self.harmonic(0, Parity::Cos);
        }
        mode.norm * bessel_j(mode.n as i32, mode.omega) * self.harmonic(mode.n, mode.parity)
    }
}

/// Eigenvalue of `S^0[phi](x) = (1/2 pi) int ln|x - y| phi(y) dsigma(y)` on
/// the unit circle acting on `e^{i n theta}`.
pub fn single_layer_circle_fourier(n: i32) -> f64 {
    if n == 0 {
        0.0
    } else {
        -0.5 / n.unsigned_abs() as f64
    }
}

/// Equilibrium density and Robin constant of the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacitySolution {
    /// `cap = e^{2 pi a}`.
    pub capacity: f64,
    /// The constant value `a` of `S^0[phi]` on the circle.
    pub a: f64,
    /// Density at the nodes `2 pi i / M`.
    pub density: Vec<f64>,
}

/// Solves `S^0[phi] = a`, `int phi = 1` on the unit circle with `S^0`
/// applied through its Fourier diagonalisation.
pub fn capacity_circle() -> CapacitySolution {
    let m = 64;
    let h = 2.0 * PI / m as f64;
    let mut row = vec![0.0; m];
    for (k, r) in row.iter_mut().enumerate() {
        let t = h * k as f64;
        let half = m as i32 / 2;
        let nyquist = single_layer_circle_fourier(half) * (half as f64 * t).cos();
        *r = ((1..half)
            .map(|n| 2.0 * single_layer_circle_fourier(n) * (n as f64 * t).cos())
            .sum::<f64>()
            + nyquist)
            / m as f64;
    }
    let mut a = DMatrix::zeros(m + 1, m + 1);
    for i in 0..m {
        for j in 0..m {
            a[(i, j)] = row[(i + m - j) % m] + single_layer_circle_fourier(0) / m as f64;
        }
        a[(i, m)] = -1.0;
        a[(m, i)] = h;
    }
    let mut rhs = DVector::zeros(m + 1);
    rhs[m] = 1.0;
    let sol = a.lu().solve(&rhs).expect("bordered capacity system is nonsingular");
    let robin = sol[m];
    CapacitySolution { capacity: (2.0 * PI * robin).exp(), a: robin, density: sol.as_slice()[..m].to_vec() }
}

/// Parameters of the scaled single layer
/// `S[phi](x) = (1/2 pi) int ln(eta_0 omega eps |x - y|) phi(y) dsigma(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityInput {
    pub omega: f64,
    pub eps: f64,
    pub log_capacity: f64,
}

impl CapacityInput {
    pub fn new(omega: f64, eps: f64) -> Self {
        Self { omega, eps, log_capacity: 0.0 }
    }

    fn check(&self) -> Result<()> {
        if !(self.eps > 0.0) || !(self.omega > 0.0) {
            return Err(Error::InvalidInput(format!(
                "need omega > 0 and eps > 0, got omega = {}, eps = {}",
                self.omega, self.eps
            )));
        }
        Ok(())
    }

    /// Eigenvalue of `S` on the constant function.
    pub fn constant_eigenvalue(&self) -> f64 {
        (eta0() * self.omega * self.eps).ln() + 2.0 * PI * self.log_capacity
    }

    /// Eigenvalue of `S` on `e^{i n theta}`.
    pub fn eigenvalue(&self, n: i32) -> f64 {
        if n == 0 {
            self.constant_eigenvalue()
        } else {
            single_layer_circle_fourier(n)
        }
    }
}

/// `s_0 = -(ln(eta_0 omega eps) / (2 pi) + ln cap)^{-1}`.
pub fn s0(input: CapacityInput) -> Result<f64> {
    input.check()?;
    let l = (eta0() * input.omega * input.eps).ln() / (2.0 * PI) + input.log_capacity;
    if l.abs() < 1e-14 {
        return Err(Error::Degenerate(format!("s0 denominator vanishes ({l:e})")));
    }
    Ok(-1.0 / l)
}

/// Exponent pair of the monomial `x_1^a x_2^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex {
    pub a: u32,
    pub b: u32,
}

impl MultiIndex {
    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn order(&self) -> u32 {
        self.a + self.b
    }

    pub fn eval(&self, p: Point) -> f64 {
        p.x.powi(self.a as i32) * p.y.powi(self.b as i32)
    }

    /// Every index with `a + b <= max_order`.
    pub fn up_to(max_order: u32) -> Vec<Self> {
        (0..=max_order).flat_map(|s| (0..=s).map(move |a| Self::new(a, s - a))).collect()
    }
}

const CAPACITY_NODES: usize = 32;
const MAX_CAPACITY_ORDER: u32 = 8;

/// Fourier coefficients `c_n`, `0 <= n < M/2`, of a monomial on the circle.
fn monomial_coefficients(alpha: MultiIndex) -> Vec<Complex64> {
    let m = CAPACITY_NODES;
    let samples: Vec<f64> =
        (0..m).map(|i| alpha.eval(Point::from_polar(1.0, 2.0 * PI * i as f64 / m as f64))).collect();
    (0..m / 2)
        .map(|n| {
            let parity_ok = (n as u32 + alpha.order()).is_multiple_of(2);
            if !parity_ok {
                return Complex64::new(0.0, 0.0);
            }
            samples
                .iter()
                .enumerate()
                .map(|(i, s)| s * Complex64::from_polar(1.0, -2.0 * PI * (n * i) as f64 / m as f64))
                .sum::<Complex64>()
                / m as f64
        })
        .collect()
}

/// `s_{alpha,beta} = (-1)^{|alpha|+|beta|+1} int y^beta S^{-1}[x^alpha](y) dsigma(y)`
/// on the unit circle, with `S` inverted diagonally in Fourier space.
///
/// A monomial of order `k` only carries frequencies `n = k mod 2`, so the
/// result is exactly 0 when `|alpha| + |beta|` is odd.
pub fn generalized_capacity(alpha: MultiIndex, beta: MultiIndex, input: CapacityInput) -> Result<f64> {
    input.check()?;
    if alpha.order() + beta.order() > MAX_CAPACITY_ORDER {
        return Err(Error::InvalidInput(format!(
            "|alpha| + |beta| must be <= {MAX_CAPACITY_ORDER}"
        )));
    }
    let ca = monomial_coefficients(alpha);
    let cb = monomial_coefficients(beta);
    // int y^beta psi = 2 pi sum_n cb_{-n} ca_n / mu_n, and c_{-n} = conj(c_n)
    let mut total = 0.0;
    for n in 0..ca.len() {
        let prod = ca[n] * cb[n].conj();
        if prod == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mu = input.eigenvalue(n as i32);
        if mu.abs() < 1e-14 {
            return Err(Error::Degenerate(format!("S eigenvalue for n = {n} vanishes")));
        }
        let weight = if n == 0 { 1.0 } else { 2.0 };
        total += weight * prod.re / mu;
    }
    let sign = if (alpha.order() + beta.order()).is_multiple_of(2) { -1.0 } else { 1.0 };
    Ok(sign * 2.0 * PI * total)
}
