//! Independent numerical oracles for the single-layer closed forms.
//!
//! Nothing here uses the Fourier eigenvalues of [`crate::layer`]; values
//! come from quadrature of the logarithmic kernel only.

use crate::layer::{CapacityInput, MultiIndex};
use crate::quadrature::{gauss_legendre, tanh_sinh};
use crate::specfun::eta0;
use crate::{Error, Point, Result};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

/// `(1/2 pi) int_0^{2 pi} ln|2 sin(u/2)| cos(n u) du` by tanh–sinh
/// quadrature on panels of width at most `pi / (n + 1)`.
pub fn single_layer_fourier_by_quadrature(n: i32) -> f64 {
    let nf = n.unsigned_abs() as f64;
    let panels = (n.unsigned_abs() + 1) as usize;
    let width = PI / panels as f64;
    let f = |u: f64| (2.0 * (0.5 * u).sin()).ln() * (nf * u).cos();
    // the integrand is symmetric about u = pi
    let half: f64 = (0..panels)
        .map(|p| tanh_sinh(f, p as f64 * width, (p + 1) as f64 * width, 1e-15, 10))
        .sum();
    half / PI
}

/// Nyström discretisation of `S^0` on `M` equispaced nodes by product
/// integration: the density is replaced by its trigonometric interpolant
/// and the logarithmic kernel is integrated exactly against each cardinal
/// function.
#[derive(Debug, Clone)]
pub struct DenseSingleLayer {
    m: usize,
    /// `w_k = (1/2 pi) int ln|2 sin(u/2)| L_0(theta_k - u) du`.
    weights: Vec<f64>,
}

impl DenseSingleLayer {
    pub fn new(m: usize) -> Result<Self> {
        if m < 8 || !m.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("node count must be even and >= 8, got {m}")));
        }
        let h = 2.0 * PI / m as f64;
        let (gx, gw) = gauss_legendre(16);
        let cardinal = |u: f64| -> f64 {
            let s = (0.5 * u).sin();
            if s.abs() < 1e-150 {
                return 1.0;
            }
            (0.5 * m as f64 * u).sin() * (0.5 * u).cos() / (s * m as f64)
        };
        let log_kernel = |u: f64| (2.0 * (0.5 * u).sin()).abs().ln();
        let mut weights = vec![0.0; m];
        for k in 0..=m / 2 {
            let tk = h * k as f64;
            let f = |u: f64| log_kernel(u) * cardinal(tk - u);
            let mut sum = tanh_sinh(f, 0.0, h, 1e-15, 10) + tanh_sinh(f, 2.0 * PI - h, 2.0 * PI, 1e-15, 10);
            for p in 1..m - 1 {
                let (a, b) = (h * p as f64, h * (p + 1) as f64);
                let (c, r) = (0.5 * (a + b), 0.5 * (b - a));
                sum += gx.iter().zip(&gw).map(|(x, w)| w * f(c + r * x)).sum::<f64>() * r;
            }
            weights[k] = sum / (2.0 * PI);
            weights[(m - k) % m] = weights[k];
        }
        Ok(Self { m, weights })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn theta(&self, i: usize) -> f64 {
        2.0 * PI * i as f64 / self.m as f64
    }

    /// `S^0[phi]` at the nodes.
    pub fn apply(&self, phi: &[f64]) -> Vec<f64> {
        assert_eq!(phi.len(), self.m);
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.weights[(i + self.m - j) % self.m] * phi[j]).sum())
            .collect()
    }

    /// Ratio `S^0[cos(n .)] / cos(n .)` read off at the node `theta = 0`.
    pub fn fourier_eigenvalue(&self, n: i32) -> f64 {
        let phi: Vec<f64> = (0..self.m).map(|j| (n as f64 * self.theta(j)).cos()).collect();
        self.apply(&phi)[0]
    }

    /// Collocation matrix of the scaled operator `S`.
    fn scaled_matrix(&self, input: CapacityInput) -> DMatrix<f64> {
        let mu0 = (eta0() * input.omega * input.eps).ln() + 2.0 * PI * input.log_capacity;
        let m = self.m;
        DMatrix::from_fn(m, m, |i, j| mu0 / m as f64 + self.weights[(i + m - j) % m])
    }

    /// `s_{alpha,beta}` by solving `S psi = x^alpha` densely and integrating
    /// `y^beta psi` with the trapezoid rule.
    pub fn generalized_capacity(&self, alpha: MultiIndex, beta: MultiIndex, input: CapacityInput) -> Result<f64> {
        let a = self.scaled_matrix(input);
        let nodes: Vec<Point> = (0..self.m).map(|i| Point::from_polar(1.0, self.theta(i))).collect();
        let rhs = DVector::from_iterator(self.m, nodes.iter().map(|p| alpha.eval(*p)));
        let psi = a
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Degenerate("dense single-layer matrix is singular".into()))?;
        let integral: f64 =
            nodes.iter().zip(psi.iter()).map(|(p, v)| beta.eval(*p) * v).sum::<f64>() * 2.0 * PI / self.m as f64;
        let sign = if (alpha.order() + beta.order()).is_multiple_of(2) { -1.0 } else { 1.0 };
        Ok(sign * integral)
    }
}
