//! Gibbs density matrices and the zero-temperature limit.
//!
//! rho = Z^-1 sum_i exp(-E_i / T) |Psi_i><Psi_i| in reduced units (k_B = 1).
//! Boltzmann weights are always computed against shifted energies E_i - E_0 so
//! small temperatures cannot overflow; the partition value records the shift.

use crate::error::{Error, Result};
use crate::linalg4::{eigh, SymMatrix4};
use crate::model::{hamiltonian, ModelParams};

/// How a density matrix was produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateKind {
    /// Gibbs state at reduced temperature T > 0.
    Thermal { temperature: f64 },
    /// T -> 0+ limit: uniform mixture over the (possibly degenerate) ground
    /// eigenspace.
    GroundState { degeneracy: usize },
}

/// Unit-trace positive-semidefinite symmetric matrix with provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    matrix: SymMatrix4,
    kind: StateKind,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &SymMatrix4 {
        &self.matrix
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    /// Crate-internal assembly from an already-validated matrix; used by the
    /// closed-form oracle, which builds its density matrix without the
    /// numeric eigensolver.
    pub(crate) fn from_parts(matrix: SymMatrix4, kind: StateKind) -> Self {
        DensityMatrix { matrix, kind }
    }

    /// Rank-1 projector onto an arbitrary normalized state vector. The input
    /// is normalized here; a zero vector is rejected.
    pub fn pure(state: &[f64; 4]) -> Result<Self> {
        let norm2: f64 = state.iter().map(|x| x * x).sum();
        if !norm2.is_finite() || norm2 == 0.0 {
            return Err(Error::invalid_param(
                "state",
                "pure state must be a finite non-zero vector",
            ));
        }
        let inv = norm2.sqrt().recip();
        let v = [
            state[0] * inv,
            state[1] * inv,
            state[2] * inv,
            state[3] * inv,
        ];
        Ok(DensityMatrix {
            matrix: SymMatrix4::outer(&v),
            kind: StateKind::GroundState { degeneracy: 1 },
        })
    }
}

/// Scale-aware tolerance for grouping degenerate energy levels.
fn degeneracy_tol(values: &[f64; 4]) -> f64 {
    1e-9 * (values[3] - values[0] + 1.0)
}

/// Gibbs state at the parameters' temperature. Requires T > 0; the T = 0
/// limit is [`ground_state`], never a silent fallback.
pub fn thermal_state(p: &ModelParams) -> Result<DensityMatrix> {
    let t = p.temperature();
    if t <= 0.0 {
        return Err(Error::NonpositiveTemperature(t));
    }
    let spec = eigh(&hamiltonian(p))?;
    let e0 = spec.values[0];
    let mut weights = [0.0; 4];
    let mut z = 0.0;
    for (w, &e) in weights.iter_mut().zip(spec.values.iter()) {
        *w = (-(e - e0) / t).exp();
        z += *w;
    }
    let mut acc = SymMatrix4::zero();
    for k in 0..4 {
        acc = acc.add(&SymMatrix4::outer(&spec.vector(k)).scale(weights[k] / z));
    }
    Ok(DensityMatrix {
        matrix: acc,
        kind: StateKind::Thermal { temperature: t },
    })
}

/// Zero-temperature state: the projector onto the ground level, or the
/// uniform mixture over the ground eigenspace when it is degenerate (the
/// T -> 0+ limit of the Gibbs state). The temperature field of the parameters
/// is ignored.
pub fn ground_state(p: &ModelParams) -> Result<DensityMatrix> {
    let spec = eigh(&hamiltonian(p))?;
    let tol = degeneracy_tol(&spec.values);
    let mut g = 1;
    while g < 4 && spec.values[g] - spec.values[0] <= tol {
        g += 1;
    }
    let mut acc = SymMatrix4::zero();
    let w = 1.0 / g as f64;
    for k in 0..g {
        acc = acc.add(&SymMatrix4::outer(&spec.vector(k)).scale(w));
    }
    Ok(DensityMatrix {
        matrix: acc,
        kind: StateKind::GroundState { degeneracy: g },
    })
}

/// Partition function computed against shifted energies, so `z` is the sum of
/// `exp(-(E_i - E_0)/T)` and always lies in `[1, 4]`. The unshifted value is
/// `z * exp(-E_0 / T)`, recoverable from the recorded shift (and liable to
/// overflow at small T, which is exactly why it is not stored).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionValue {
    /// Shifted partition sum, in [1, 4].
    pub z: f64,
    /// Inverse reduced temperature 1/T.
    pub beta: f64,
    /// Ground energy E_0 subtracted from every level before exponentiating.
    pub energy_shift: f64,
}

pub fn partition_function(p: &ModelParams) -> Result<PartitionValue> {
    let t = p.temperature();
    if t <= 0.0 {
        return Err(Error::NonpositiveTemperature(t));
    }
    let spec = eigh(&hamiltonian(p))?;
    let e0 = spec.values[0];
    let z = spec.values.iter().map(|&e| (-(e - e0) / t).exp()).sum();
    Ok(PartitionValue {
        z,
        beta: 1.0 / t,
        energy_shift: e0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg4::{mat_max_abs, mat_mul, mat_sub};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn params(j: f64, b1: f64, b2: f64, t1: f64, t2: f64, t: f64) -> ModelParams {
        ModelParams::new(j, b1, b2, t1, t2, t).unwrap()
    }

    fn eigvals(m: &SymMatrix4) -> [f64; 4] {
        eigh(m).unwrap().values
    }

    #[test]
    fn infinite_temperature_is_maximally_mixed() {
        let rho = thermal_state(&params(1.0, 0.8, 1.3, 0.4, 2.0, 1e9)).unwrap();
        let target = SymMatrix4::identity().scale(0.25);
        let diff = mat_max_abs(&mat_sub(rho.matrix().entries(), target.entries()));
        assert!(diff <= 1e-6, "diff {diff:e}");
    }

    #[test]
    fn zero_field_thermal_weights() {
        // H diagonal (2,-2,-2,2); shifted weights (1, 1, e^-4, e^-4)/Z
        let rho = thermal_state(&params(1.0, 0.0, 0.0, 0.0, 0.0, 1.0)).unwrap();
        let z = 2.0 + 2.0 * (-4.0f64).exp();
        let w_low = 1.0 / z;
        let w_high = (-4.0f64).exp() / z;
        let m = rho.matrix();
        for (i, expected) in [w_high, w_low, w_low, w_high].iter().enumerate() {
            assert!((m.get(i, i) - expected).abs() < 1e-14);
        }
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(m.get(i, j).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn thermal_rejects_zero_temperature() {
        assert!(matches!(
            thermal_state(&params(1.0, 1.0, 1.0, 0.1, 0.1, 0.0)),
            Err(Error::NonpositiveTemperature(_))
        ));
    }

    #[test]
    fn zero_field_ground_state_is_degenerate_mixture() {
        let rho = ground_state(&params(1.0, 0.0, 0.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(rho.kind(), StateKind::GroundState { degeneracy: 2 });
        let expected = SymMatrix4::diagonal([0.0, 0.5, 0.5, 0.0]);
        let diff = mat_max_abs(&mat_sub(rho.matrix().entries(), expected.entries()));
        assert!(diff <= 1e-12);
    }

    #[test]
    fn transverse_ground_state_is_rank_one() {
        let rho = ground_state(&params(1.0, 1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 0.0)).unwrap();
        assert_eq!(rho.kind(), StateKind::GroundState { degeneracy: 1 });
        let ev = eigvals(rho.matrix());
        assert!(ev[..3].iter().all(|&x| x.abs() < 1e-10));
        assert!((ev[3] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn axial_unique_ground_is_basis_projector() {
        // diag (5,-1,-3,-1): unique ground is |10>
        let rho = ground_state(&params(1.0, 2.0, 1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(rho.kind(), StateKind::GroundState { degeneracy: 1 });
        let mut expected = SymMatrix4::zero().to_array();
        expected[2][2] = 1.0;
        let diff = mat_max_abs(&mat_sub(rho.matrix().entries(), &expected));
        assert!(diff <= 1e-12);
    }

    #[test]
    fn partition_limits_and_zero_field_value() {
        let z = partition_function(&params(1.0, 0.0, 0.0, 0.0, 0.0, 1e9)).unwrap();
        assert!((z.z - 4.0).abs() < 1e-6);
        let z = partition_function(&params(1.0, 0.0, 0.0, 0.0, 0.0, 1.0)).unwrap();
        assert!((z.z - (2.0 + 2.0 * (-4.0f64).exp())).abs() < 1e-14);
        assert!((z.beta - 1.0).abs() < 1e-15);
        assert!((z.energy_shift + 2.0).abs() < 1e-14);
    }

    #[test]
    fn trace_one_and_psd_for_random_parameters() {
        let mut state = 0x853C49E6748FEA9Bu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let p = params(
                1.0,
                next() * 5.0,
                next() * 5.0,
                next() * PI,
                next() * PI,
                0.01 + next() * 5.0,
            );
            let rho = thermal_state(&p).unwrap();
            assert!((rho.matrix().trace() - 1.0).abs() <= 1e-12);
            let ev = eigvals(rho.matrix());
            assert!(ev[0] >= -1e-12 && ev[3] <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn thermal_state_commutes_with_hamiltonian() {
        let p = params(1.0, 0.9, 2.2, 0.7, 2.3, 0.37);
        let rho = thermal_state(&p).unwrap();
        let h = hamiltonian(&p);
        let hr = mat_mul(h.entries(), rho.matrix().entries());
        let rh = mat_mul(rho.matrix().entries(), h.entries());
        assert!(mat_max_abs(&mat_sub(&hr, &rh)) <= 1e-10);
    }

    #[test]
    fn thermal_approaches_ground_state_at_low_temperature() {
        // non-degenerate ground state with a healthy gap
        let p = params(1.0, 1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 1e-6);
        let rho_t = thermal_state(&p).unwrap();
        let rho_g = ground_state(&p).unwrap();
        let diff = mat_max_abs(&mat_sub(
            rho_t.matrix().entries(),
            rho_g.matrix().entries(),
        ));
        assert!(diff <= 1e-4, "diff {diff:e}");
    }

    #[test]
    fn pure_state_normalizes() {
        let rho = DensityMatrix::pure(&[0.0, 2.0, 0.0, 0.0]).unwrap();
        assert!((rho.matrix().get(1, 1) - 1.0).abs() < 1e-15);
        assert!((rho.matrix().trace() - 1.0).abs() < 1e-15);
        assert!(DensityMatrix::pure(&[0.0; 4]).is_err());
    }
}
