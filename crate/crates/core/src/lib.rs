//! Neumann eigenvalues of the unit disk perturbed by a small grounded disk.
//!
//! A disk of radius `eps` centred at `z` is removed from the unit disk and
//! the eigenfunctions are forced to vanish on its boundary. Each eigenvalue
//! `omega_theta` of the unperturbed Neumann problem splits into as many
//! perturbed eigenvalues as its multiplicity. The crate provides
//!
//! * [`specfun`]: Bessel functions `J_n`, `Y_n` and the roots of `J_n'`,
//! * [`spectrum`]: the Neumann eigenvalues and orthonormal modes of the disk,
//! * [`layer`]: the Helmholtz fundamental solution, the double layer
//!   potential by periodic quadrature, and capacities of the unit circle,
//! * [`asymptotics`]: the spectral constants `t`, `r`, `s0` and the
//!   predicted splitting,
//! * [`multipole`]: an independent two-centre multipole eigensolver used as
//!   ground truth,
//! * [`harness`]: parameter sweeps, CSV/JSON export and the validation suite,
//! * [`oracle`]: reference computations that do not share code paths with
//!   the routines they check.
//!
//! ```
//! use eigensplit::{asymptotics, spectrum, Point};
//!
//! let levels = spectrum::enumerate_levels(2.0).unwrap();
//! let first = &levels[1];
//! assert_eq!(first.multiplicity(), 2);
//!
//! let pred = asymptotics::predict_splitting(first, Point::new(0.5, 0.0), 1e-3, 60.0).unwrap();
//! assert_eq!(pred.shifts.len(), 2);
//! assert_eq!(pred.shifts[0], 0.0);
//! assert!(pred.shifts[1] > 0.0);
//! ```

pub mod asymptotics;
mod error;
mod geometry;
pub mod harness;
pub mod layer;
pub mod multipole;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use geometry::Point;
