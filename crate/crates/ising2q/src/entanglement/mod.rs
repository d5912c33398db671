//! Wootters concurrence and entanglement of formation for two-qubit states.
//!
//! The concurrence of a state rho is built from the spin-flipped matrix
//! R12 = rho (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y): with lambda_i
//! the square roots of R12's eigenvalues in decreasing order,
//! C = max(lambda_1 - lambda_2 - lambda_3 - lambda_4, 0).
//!
//! Every density matrix in this crate is real (the Hamiltonian contains only
//! sigma^z and sigma^x terms), so rho* = rho and the whole computation stays
//! real. Two independent routes are provided:
//!
//! * [`concurrence`] diagonalizes the symmetric matrix S = sqrt(rho) Y
//!   sqrt(rho); the |eigenvalues| of S are exactly the lambda_i.
//! * [`concurrence_bruteforce`] runs a general (Hessenberg-QR) eigenvalue
//!   solver on the non-symmetric product rho Y, whose eigenvalue squares are
//!   the eigenvalues of R12 = (rho Y)^2.
//!
//! The two share no factorization and serve as a cross-check of each other.
//!
//! An independent closed-form oracle for the axial-field case theta1 = 0
//! lives in [`appendix`].

pub mod appendix;

use crate::error::{Error, Result};
use crate::linalg4::{eigh, mat_mul, sqrt_psd, Mat4, SymMatrix4};
use crate::thermal::DensityMatrix;

/// |eigenvalue| below this is treated as an exact zero before sorting;
/// degenerate configurations produce +-epsilon noise at this scale.
const LAMBDA_CLAMP: f64 = 1e-12;
/// Slack accepted on the [0, 1] range of a concurrence argument.
const RANGE_SLACK: f64 = 1e-12;

/// Concurrence plus the data it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult {
    /// Concurrence in [0, 1].
    pub concurrence: f64,
    /// Square roots of the spin-flip eigenvalues, descending, clamped >= 0.
    pub lambdas: [f64; 4],
    /// Entanglement of formation in [0, 1].
    pub eof: f64,
}

/// The real matrix sigma_y (x) sigma_y in the natural basis:
/// antidiagonal (-1, 1, 1, -1).
pub fn spin_flip_matrix() -> SymMatrix4 {
    let mut y = [[0.0; 4]; 4];
    y[0][3] = -1.0;
    y[1][2] = 1.0;
    y[2][1] = 1.0;
    y[3][0] = -1.0;
    SymMatrix4::new(y).expect("antidiagonal is symmetric")
}

/// A * Y as signed column shuffles (exact, no arithmetic error).
fn apply_y_right(a: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        out[i][0] = -a[i][3];
        out[i][1] = a[i][2];
        out[i][2] = a[i][1];
        out[i][3] = -a[i][0];
    }
    out
}

/// Y * A as signed row shuffles.
fn apply_y_left(a: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for j in 0..4 {
        out[0][j] = -a[3][j];
        out[1][j] = a[2][j];
        out[2][j] = a[1][j];
        out[3][j] = -a[0][j];
    }
    out
}

/// Spin-flipped matrix R12 = rho Y rho Y. Not symmetric in general.
pub fn spin_flip(rho: &DensityMatrix) -> Mat4 {
    let k = apply_y_right(rho.matrix().entries());
    mat_mul(&k, &k)
}

fn result_from_mu(mu: [f64; 4]) -> ConcurrenceResult {
    let mut lambdas = [0.0; 4];
    for (l, &m) in lambdas.iter_mut().zip(mu.iter()) {
        let a = m.abs();
        *l = if a < LAMBDA_CLAMP { 0.0 } else { a };
    }
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite lambdas"));
    let raw = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    let concurrence = raw.clamp(0.0, 1.0);
    ConcurrenceResult {
        concurrence,
        lambdas,
        eof: binary_entropy(eof_argument(concurrence)),
    }
}

/// Primary route: eigenvalues of the symmetric S = sqrt(rho) Y sqrt(rho).
///
/// Because rho is real, the eigenvalues of rho Y are real and their absolute
/// values equal the lambda_i; S is similar to rho Y and symmetric, so the
/// Jacobi solver applies.
pub fn concurrence(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    let s = sqrt_psd(rho.matrix())?;
    let ys = apply_y_left(s.entries());
    let sys = SymMatrix4::symmetrize(&mat_mul(s.entries(), &ys));
    let spec = eigh(&sys)?;
    Ok(result_from_mu(spec.values))
}

/// Cross-validation route: the eigenvalues of R12 = (rho Y)^2 are computed as
/// the squares of the real eigenvalues of the non-symmetric matrix rho Y,
/// extracted with the general Hessenberg-QR solver. Nothing is shared with
/// the square-root factorization of the primary route.
///
/// Squaring first and solving R12 itself would lose half the significant
/// digits near lambda = 0 (the square root of an O(eps) eigenvalue is O(1e-8)),
/// which is why the first-power product is solved instead.
pub fn concurrence_bruteforce(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    let k = apply_y_right(rho.matrix().entries());
    let mu = crate::linalg4::eig_real4(&k)?;
    Ok(result_from_mu(mu))
}

fn eof_argument(c: f64) -> f64 {
    (1.0 + (1.0 - c * c).max(0.0).sqrt()) / 2.0
}

fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Entanglement of formation E = h((1 + sqrt(1 - C^2)) / 2), with h the
/// binary entropy. Monotone in the concurrence, E(0) = 0, E(1) = 1.
pub fn entanglement_of_formation(c: f64) -> Result<f64> {
    if !c.is_finite() || c < -RANGE_SLACK || c > 1.0 + RANGE_SLACK {
        return Err(Error::invalid_param(
            "concurrence",
            format!("must lie in [0, 1], got {c}"),
        ));
    }
    Ok(binary_entropy(eof_argument(c.clamp(0.0, 1.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg4::{mat_max_abs, mat_sub};
    use crate::model::ModelParams;
    use crate::thermal::{ground_state, thermal_state};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn params(j: f64, b1: f64, b2: f64, t1: f64, t2: f64, t: f64) -> ModelParams {
        ModelParams::new(j, b1, b2, t1, t2, t).unwrap()
    }

    #[test]
    fn product_state_has_zero_spin_flip() {
        let rho = DensityMatrix::pure(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let r = spin_flip(&rho);
        assert!(mat_max_abs(&r) < 1e-15);
        assert_eq!(concurrence(&rho).unwrap().concurrence, 0.0);
    }

    #[test]
    fn singlet_is_maximally_entangled() {
        let inv = 0.5f64.sqrt();
        let rho = DensityMatrix::pure(&[0.0, inv, -inv, 0.0]).unwrap();
        // R12 = rho for the singlet
        let r = spin_flip(&rho);
        assert!(mat_max_abs(&mat_sub(&r, rho.matrix().entries())) < 1e-14);
        let res = concurrence(&rho).unwrap();
        assert!((res.concurrence - 1.0).abs() < 1e-12);
        assert!((res.lambdas[0] - 1.0).abs() < 1e-12);
        assert!(res.lambdas[1..].iter().all(|&l| l < 1e-12));
        let brute = concurrence_bruteforce(&rho).unwrap();
        assert!((brute.concurrence - 1.0).abs() < 1e-12);
    }

    #[test]
    fn separable_mixture_has_zero_concurrence() {
        // (|00><00| + |11><11|)/2 and any other natural-basis diagonal state
        let mix = DensityMatrix::from_parts(
            SymMatrix4::diagonal([0.5, 0.0, 0.0, 0.5]),
            crate::thermal::StateKind::GroundState { degeneracy: 2 },
        );
        assert_eq!(concurrence(&mix).unwrap().concurrence, 0.0);
        assert_eq!(concurrence_bruteforce(&mix).unwrap().concurrence, 0.0);
        let rho = thermal_state(&params(1.0, 0.0, 0.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(concurrence(&rho).unwrap().concurrence, 0.0);
        assert_eq!(concurrence_bruteforce(&rho).unwrap().concurrence, 0.0);
    }

    #[test]
    fn transverse_ground_state_matches_closed_form() {
        // C = [1 + (B/J)^2]^(-1/2) for fields along x; at B = J that is 2^(-1/2)
        let rho = ground_state(&params(1.0, 1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 0.0)).unwrap();
        let c = concurrence(&rho).unwrap().concurrence;
        assert!((c - 0.5f64.sqrt()).abs() < 1e-12, "C = {c}");
    }

    #[test]
    fn axial_field_on_site_one_kills_entanglement() {
        let rho = thermal_state(&params(1.0, 0.7, 1.3, 0.0, 0.4 * PI, 0.3)).unwrap();
        assert!(concurrence(&rho).unwrap().concurrence <= 1e-10);
    }

    #[test]
    fn dual_routes_agree_on_random_thermal_states() {
        let mut state = 0xC0FFEE123456789Au64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..300 {
            let p = params(
                1.0,
                next() * 5.0,
                next() * 5.0,
                next() * PI,
                next() * PI,
                0.01 + next() * 5.0,
            );
            let rho = thermal_state(&p).unwrap();
            let a = concurrence(&rho).unwrap().concurrence;
            let b = concurrence_bruteforce(&rho).unwrap().concurrence;
            assert!((a - b).abs() <= 1e-9, "routes disagree: {a} vs {b}");
        }
    }

    #[test]
    fn pure_state_concurrence_is_twice_the_determinant() {
        let mut state = 0xFACEFEED00D5Eu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for _ in 0..300 {
            let v = [next(), next(), next(), next()];
            let norm2: f64 = v.iter().map(|x| x * x).sum();
            if norm2 < 1e-3 {
                continue;
            }
            let rho = DensityMatrix::pure(&v).unwrap();
            let expected = 2.0 * (v[0] * v[3] - v[1] * v[2]).abs() / norm2;
            let a = concurrence(&rho).unwrap().concurrence;
            let b = concurrence_bruteforce(&rho).unwrap().concurrence;
            assert!((a - expected).abs() <= 1e-10, "primary {a} vs {expected}");
            assert!((b - expected).abs() <= 1e-10, "brute {b} vs {expected}");
        }
    }

    #[test]
    fn concurrence_is_invariant_under_site_swap_and_reflection() {
        let p = params(1.0, 1.7, 0.9, 0.8, 2.1, 0.4);
        let c = concurrence(&thermal_state(&p).unwrap()).unwrap().concurrence;
        let cs = concurrence(&thermal_state(&p.swapped_sites()).unwrap())
            .unwrap()
            .concurrence;
        assert!((c - cs).abs() <= 1e-10);
        let pr = params(1.0, 1.7, 0.9, -0.8, -2.1, 0.4);
        let cr = concurrence(&thermal_state(&pr).unwrap()).unwrap().concurrence;
        assert!((c - cr).abs() <= 1e-10);
    }

    #[test]
    fn infinite_temperature_state_is_unentangled() {
        let rho = thermal_state(&params(1.0, 2.0, 3.0, 0.3, 1.2, 1e6)).unwrap();
        assert!(concurrence(&rho).unwrap().concurrence <= 1e-10);
    }

    #[test]
    fn eof_endpoints_and_reference_value() {
        assert_eq!(entanglement_of_formation(0.0).unwrap(), 0.0);
        assert!((entanglement_of_formation(1.0).unwrap() - 1.0).abs() < 1e-15);
        let e = entanglement_of_formation(0.5f64.sqrt()).unwrap();
        assert!((e - 0.600876036692856).abs() < 1e-12, "E = {e}");
    }

    #[test]
    fn eof_is_monotone() {
        let mut prev = -1.0;
        for k in 0..=100 {
            let c = k as f64 / 100.0;
            let e = entanglement_of_formation(c).unwrap();
            assert!(e >= prev);
            prev = e;
        }
    }

    #[test]
    fn eof_rejects_out_of_range() {
        assert!(entanglement_of_formation(1.5).is_err());
        assert!(entanglement_of_formation(-0.5).is_err());
        assert!(entanglement_of_formation(f64::NAN).is_err());
        // boundary slack accepted
        assert!(entanglement_of_formation(1.0 + 5e-13).is_ok());
        assert!(entanglement_of_formation(-5e-13).is_ok());
    }

    #[test]
    fn result_invariants_hold() {
        let rho = thermal_state(&params(1.0, 1.2, 0.4, 1.0, 2.2, 0.7)).unwrap();
        let res = concurrence(&rho).unwrap();
        assert!(res.lambdas.windows(2).all(|w| w[0] >= w[1]));
        assert!(res.lambdas.iter().all(|&l| l >= 0.0));
        let raw = res.lambdas[0] - res.lambdas[1] - res.lambdas[2] - res.lambdas[3];
        assert!((res.concurrence - raw.max(0.0)).abs() <= 1e-12);
        assert!((0.0..=1.0).contains(&res.concurrence));
        assert!((0.0..=1.0).contains(&res.eof));
    }
}
