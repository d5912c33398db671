//! Two-qubit Ising Hamiltonian in site-dependent magnetic fields.
//!
//! H = 2J sigma1^z sigma2^z
//!   + B1 cos(theta1) sigma1^z + B1 sin(theta1) sigma1^x
//!   + B2 cos(theta2) sigma2^z + B2 sin(theta2) sigma2^x
//!
//! All quantities are in reduced units: energies in units of J, temperature as
//! k_B T / J. Angles are polar angles against the Ising z-axis and each field
//! is assumed to lie in the xz-plane (the model is rotation symmetric about
//! z, so this costs no generality). Because only sigma^z and sigma^x appear,
//! the Hamiltonian is real symmetric in the natural basis.

use std::f64::consts::PI;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg4::{eigh, kron2, pauli, SymMatrix4};

/// Physical inputs in reduced units. Constructed through [`ModelParams::new`],
/// which validates ranges and folds angles into `[0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    j: f64,
    b1: f64,
    b2: f64,
    theta1: f64,
    theta2: f64,
    t: f64,
}

/// Folds an arbitrary finite angle into `[0, pi]` using periodicity and the
/// theta -> -theta reflection, which is a local-unitary symmetry of the model
/// (conjugation by sigma^z on the corresponding qubit), so nothing measured
/// downstream changes.
fn fold_angle(theta: f64) -> f64 {
    if (0.0..=PI).contains(&theta) {
        return theta;
    }
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t = 2.0 * PI - t;
    }
    t
}

impl ModelParams {
    pub fn new(j: f64, b1: f64, b2: f64, theta1: f64, theta2: f64, t: f64) -> Result<Self> {
        for (field, v) in [
            ("J", j),
            ("B1", b1),
            ("B2", b2),
            ("theta1", theta1),
            ("theta2", theta2),
            ("T", t),
        ] {
            if !v.is_finite() {
                return Err(Error::invalid_param(field, format!("must be finite, got {v}")));
            }
        }
        if j <= 0.0 {
            return Err(Error::invalid_param("J", format!("must be > 0, got {j}")));
        }
        if b1 < 0.0 {
            return Err(Error::invalid_param("B1", format!("must be >= 0, got {b1}")));
        }
        if b2 < 0.0 {
            return Err(Error::invalid_param("B2", format!("must be >= 0, got {b2}")));
        }
        if t < 0.0 {
            return Err(Error::invalid_param("T", format!("must be >= 0, got {t}")));
        }
        Ok(ModelParams {
            j,
            b1,
            b2,
            theta1: fold_angle(theta1),
            theta2: fold_angle(theta2),
            t,
        })
    }

    pub fn j(&self) -> f64 {
        self.j
    }
    pub fn b1(&self) -> f64 {
        self.b1
    }
    pub fn b2(&self) -> f64 {
        self.b2
    }
    pub fn theta1(&self) -> f64 {
        self.theta1
    }
    pub fn theta2(&self) -> f64 {
        self.theta2
    }
    pub fn temperature(&self) -> f64 {
        self.t
    }

    /// Same parameters at a different reduced temperature.
    pub fn with_temperature(&self, t: f64) -> Result<Self> {
        ModelParams::new(self.j, self.b1, self.b2, self.theta1, self.theta2, t)
    }

    /// Same parameters with the two sites exchanged.
    pub fn swapped_sites(&self) -> Self {
        ModelParams {
            j: self.j,
            b1: self.b2,
            b2: self.b1,
            theta1: self.theta2,
            theta2: self.theta1,
            t: self.t,
        }
    }
}

/// Wire format: `{"J": 1.0, "B1": 0.5, "B2": 1.0, "theta1": "0.5pi",
/// "theta2": 0.3, "T": 0.1}` with every field optional (J defaults to 1,
/// everything else to 0) and angle fields accepting pi-literals.
#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(rename = "J", default = "default_j")]
    j: f64,
    #[serde(rename = "B1", default)]
    b1: f64,
    #[serde(rename = "B2", default)]
    b2: f64,
    #[serde(default, deserialize_with = "crate::piexpr::deserialize_scalar")]
    theta1: f64,
    #[serde(default, deserialize_with = "crate::piexpr::deserialize_scalar")]
    theta2: f64,
    #[serde(rename = "T", default)]
    t: f64,
}

fn default_j() -> f64 {
    1.0
}

impl Serialize for ModelParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawParams {
            j: self.j,
            b1: self.b1,
            b2: self.b2,
            theta1: self.theta1,
            theta2: self.theta2,
            t: self.t,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ModelParams {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawParams::deserialize(deserializer)?;
        ModelParams::new(raw.j, raw.b1, raw.b2, raw.theta1, raw.theta2, raw.t)
            .map_err(D::Error::custom)
    }
}

/// Assembles the Hamiltonian matrix in the natural basis. The Ising prefactor
/// is 2J (the coupling appears as a sum of two identical terms), which pins
/// the zero-field ground energy at -2J.
pub fn hamiltonian(p: &ModelParams) -> SymMatrix4 {
    let zz = kron2(&pauli::SIGMA_Z, &pauli::SIGMA_Z);
    let z1 = kron2(&pauli::SIGMA_Z, &pauli::ID2);
    let x1 = kron2(&pauli::SIGMA_X, &pauli::ID2);
    let z2 = kron2(&pauli::ID2, &pauli::SIGMA_Z);
    let x2 = kron2(&pauli::ID2, &pauli::SIGMA_X);

    let (c1, s1) = (p.theta1.cos(), p.theta1.sin());
    let (c2, s2) = (p.theta2.cos(), p.theta2.sin());

    let mut h = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            h[i][j] = 2.0 * p.j * zz[i][j]
                + p.b1 * c1 * z1[i][j]
                + p.b1 * s1 * x1[i][j]
                + p.b2 * c2 * z2[i][j]
                + p.b2 * s2 * x2[i][j];
        }
    }
    SymMatrix4::new(h).expect("sum of symmetric terms is symmetric")
}

/// Minimum eigenvalue of the Hamiltonian.
pub fn ground_energy(p: &ModelParams) -> Result<f64> {
    Ok(eigh(&hamiltonian(p))?.values[0])
}
