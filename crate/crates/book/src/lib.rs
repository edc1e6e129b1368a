//! Every Rust listing in `book/src` is compiled and run as a doc-test of
//! this crate, so the guide cannot drift from the library.
//!
//! One module per chapter keeps failing listings easy to locate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/bessel.md")]
pub mod bessel {}
#[doc = include_str!("../../../book/src/spectrum.md")]
pub mod spectrum {}
#[doc = include_str!("../../../book/src/layer-potentials.md")]
pub mod layer_potentials {}
#[doc = include_str!("../../../book/src/asymptotics.md")]
pub mod asymptotics {}
#[doc = include_str!("../../../book/src/multipole.md")]
pub mod multipole {}
#[doc = include_str!("../../../book/src/sweeps.md")]
pub mod sweeps {}
