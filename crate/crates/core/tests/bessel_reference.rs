//! Bessel values against a 40-digit reference table.

mod reference;

use eigensplit::specfun::{bessel_j, bessel_jp, bessel_y, jnp_root, RootIndex};
use reference::{JNP_ROOTS, TABLE};

// error floor for oscillatory values near a zero
const J_FLOOR: f64 = 1e-15;
const Y_FLOOR: f64 = 1e-14;

#[test]
fn first_kind_matches_reference() {
    let mut worst = (0.0, 0, 0.0);
    for &(n, x, j, _) in TABLE {
        let Some(want) = j else { continue };
        let got = bessel_j(n, x);
        let err = (got - want).abs() / want.abs().max(J_FLOOR / 1e-13);
        if err > worst.0 {
            worst = (err, n, x);
        }
    }
    assert!(worst.0 <= 1e-13, "worst J error {:e} at n={}, x={}", worst.0, worst.1, worst.2);
}

#[test]
fn second_kind_matches_reference() {
    let mut worst = (0.0, 0, 0.0);
    for &(n, x, _, y) in TABLE {
        let Some(want) = y else { continue };
        let got = bessel_y(n, x).unwrap();
        let err = (got - want).abs() / want.abs().max(Y_FLOOR / 1e-12);
        if err > worst.0 {
            worst = (err, n, x);
        }
    }
    assert!(worst.0 <= 1e-12, "worst Y error {:e} at n={}, x={}", worst.0, worst.1, worst.2);
}

#[test]
fn underflowed_entries_are_tiny() {
    for &(n, x, j, _) in TABLE {
        if j.is_none() {
            assert!(bessel_j(n, x).abs() < 1e-290, "J_{n}({x})");
        }
    }
}

#[test]
fn derivative_roots_match_reference() {
    for &(n, k, want) in JNP_ROOTS {
        let got = jnp_root(RootIndex::new(n as u32, k)).unwrap();
        assert!(
            (got - want).abs() <= 4.0 * f64::EPSILON * want,
            "root ({n},{k}): {got} vs {want}"
        );
        assert!(bessel_jp(n, got).abs() < 1e-14);
    }
}
