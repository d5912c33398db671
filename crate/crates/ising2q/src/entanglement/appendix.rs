//! Closed-form oracle for the axial-field case theta1 = 0.
//!
//! When the field on site 1 points along the Ising axis the Hamiltonian splits
//! into two 2x2 blocks, one mixing {|10>, |11>} (the X pair) and one mixing
//! {|00>, |01>} (the Y pair):
//!
//!   E_X(+-) = -B1 +- sqrt(4 J^2 + B2^2 - 4 J B2 cos(theta2))
//!   E_Y(+-) = +B1 +- sqrt(4 J^2 + B2^2 + 4 J B2 cos(theta2))
//!
//! with normalized eigenvector amplitudes (a, b) and (c, d). The resulting
//! thermal (or ground) density matrix keeps the same block structure, the
//! spin-flipped matrix takes the form
//!
//!   [[A, C, 0, 0], [D, B, 0, 0], [0, 0, B, -C], [0, 0, -D, A]]
//!
//! and its eigenvalues come in the two equal pairs
//!
//!   lambda_{1,2} = [(A + B) + sqrt((A - B)^2 + 4 C D)] / 2
//!   lambda_{3,4} = [(A + B) - sqrt((A - B)^2 + 4 C D)] / 2 ,
//!
//! so the concurrence is identically zero: one field along the Ising axis can
//! never produce entanglement, at any temperature or field strength. This
//! module evaluates all of that without the numeric eigensolver, which makes
//! it an independent oracle for the rest of the pipeline.

use crate::error::{Error, Result};
use crate::linalg4::SymMatrix4;
use crate::model::ModelParams;
use crate::thermal::{DensityMatrix, StateKind};

use super::{entanglement_of_formation, ConcurrenceResult};

/// A +-pair of closed-form quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branches {
    pub minus: f64,
    pub plus: f64,
}

/// Closed-form eigensystem of the axial-field Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppendixSpectrum {
    /// Energies of the {|10>, |11>} pair.
    pub e_x: Branches,
    /// Energies of the {|00>, |01>} pair.
    pub e_y: Branches,
    /// |11> amplitudes of the X eigenvectors.
    pub a: Branches,
    /// |10> amplitudes of the X eigenvectors.
    pub b: Branches,
    /// |01> amplitudes of the Y eigenvectors.
    pub c: Branches,
    /// |00> amplitudes of the Y eigenvectors.
    pub d: Branches,
}

/// Normalized eigenvectors of [[delta, y], [y, -delta]] for eigenvalues
/// +q and -q, q = hypot(delta, y), choosing the numerically stable branch.
/// Returns ((plus0, plus1), (minus0, minus1)) with plus components >= 0 and
/// minus0 <= 0 <= minus1 (for y >= 0).
fn block_eigvecs(delta: f64, y: f64) -> ((f64, f64), (f64, f64)) {
    let q = delta.hypot(y);
    if q == 0.0 {
        return ((1.0, 0.0), (0.0, 1.0));
    }
    if delta >= 0.0 {
        let n = (2.0 * q * (q + delta)).sqrt();
        (((q + delta) / n, y / n), (-y / n, (q + delta) / n))
    } else {
        let n = (2.0 * q * (q - delta)).sqrt();
        ((y / n, (q - delta) / n), (-(q - delta) / n, y / n))
    }
}

/// Spin-flip block entries A, B, C, D from a block-diagonal density matrix in
/// the appendix form.
pub fn spin_flip_abcd(rho: &SymMatrix4) -> [f64; 4] {
    let r11 = rho.get(0, 0);
    let r12 = rho.get(0, 1);
    let r22 = rho.get(1, 1);
    let r33 = rho.get(2, 2);
    let r34 = rho.get(2, 3);
    let r44 = rho.get(3, 3);
    [
        r11 * r44 - r12 * r34,
        r22 * r33 - r12 * r34,
        r33 * r12 - r11 * r34,
        r44 * r12 - r22 * r34,
    ]
}

/// Evaluates the closed forms for a signed axial field `b1` on site 1.
/// theta1 = pi is the same problem with b1 negated, which is how the caller
/// maps it here.
pub(crate) fn closed_form(
    j: f64,
    b1: f64,
    b2: f64,
    theta2: f64,
    t: f64,
) -> Result<(AppendixSpectrum, DensityMatrix, ConcurrenceResult)> {
    let cos = theta2.cos();
    let y = b2 * theta2.sin();
    let q = (4.0 * j * j + b2 * b2 - 4.0 * j * b2 * cos).sqrt();
    let p = (4.0 * j * j + b2 * b2 + 4.0 * j * b2 * cos).sqrt();

    // X pair lives on {|10>, |11>}: block [[dx, y], [y, -dx]] after removing
    // the -b1 shift
    let dx = b2 * cos - 2.0 * j;
    let ((b_plus, a_plus), (b_minus, a_minus)) = block_eigvecs(dx, y);
    // Y pair lives on {|00>, |01>}: block [[dy, y], [y, -dy]] after removing
    // the +b1 shift
    let dy = b2 * cos + 2.0 * j;
    let ((d_plus, c_plus), (d_minus, c_minus)) = block_eigvecs(dy, y);

    let spectrum = AppendixSpectrum {
        e_x: Branches {
            minus: -b1 - q,
            plus: -b1 + q,
        },
        e_y: Branches {
            minus: b1 - p,
            plus: b1 + p,
        },
        a: Branches {
            minus: a_minus,
            plus: a_plus,
        },
        b: Branches {
            minus: b_minus,
            plus: b_plus,
        },
        c: Branches {
            minus: c_minus,
            plus: c_plus,
        },
        d: Branches {
            minus: d_minus,
            plus: d_plus,
        },
    };

    let states = [
        (spectrum.e_x.minus, [0.0, 0.0, b_minus, a_minus]),
        (spectrum.e_x.plus, [0.0, 0.0, b_plus, a_plus]),
        (spectrum.e_y.minus, [d_minus, c_minus, 0.0, 0.0]),
        (spectrum.e_y.plus, [d_plus, c_plus, 0.0, 0.0]),
    ];

    let e_min = states.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let e_max = states.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);

    let rho = if t > 0.0 {
        let weights: Vec<f64> = states.iter().map(|s| (-(s.0 - e_min) / t).exp()).collect();
        let z: f64 = weights.iter().sum();
        let mut acc = SymMatrix4::zero();
        for (w, (_, v)) in weights.iter().zip(states.iter()) {
            acc = acc.add(&SymMatrix4::outer(v).scale(w / z));
        }
        DensityMatrix::from_parts(acc, StateKind::Thermal { temperature: t })
    } else {
        let tol = 1e-9 * (e_max - e_min + 1.0);
        let ground: Vec<&(f64, [f64; 4])> =
            states.iter().filter(|s| s.0 - e_min <= tol).collect();
        let g = ground.len();
        let mut acc = SymMatrix4::zero();
        for (_, v) in &ground {
            acc = acc.add(&SymMatrix4::outer(v).scale(1.0 / g as f64));
        }
        DensityMatrix::from_parts(acc, StateKind::GroundState { degeneracy: g })
    };

    let [ca, cb, cc, cd] = spin_flip_abcd(rho.matrix());
    let disc = ((ca - cb) * (ca - cb) + 4.0 * cc * cd).max(0.0);
    let lam_high = 0.5 * ((ca + cb) + disc.sqrt());
    let lam_low = 0.5 * ((ca + cb) - disc.sqrt());
    let l_high = lam_high.max(0.0).sqrt();
    let l_low = lam_low.max(0.0).sqrt();
    let lambdas = [l_high, l_high, l_low, l_low];
    // equal pairs cancel identically
    let concurrence = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
    let result = ConcurrenceResult {
        concurrence,
        lambdas,
        eof: entanglement_of_formation(concurrence)?,
    };
    Ok((spectrum, rho, result))
}

/// Closed-form eigensystem, density matrix and (identically zero) concurrence
/// for a field on site 1 along the Ising axis. Errors unless theta1 = 0.
pub fn appendix_oracle(
    p: &ModelParams,
) -> Result<(AppendixSpectrum, DensityMatrix, ConcurrenceResult)> {
    if p.theta1() != 0.0 {
        return Err(Error::OracleRequiresAxialField(p.theta1()));
    }
    closed_form(p.j(), p.b1(), p.b2(), p.theta2(), p.temperature())
}
