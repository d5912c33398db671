use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix entry is not finite")]
    NonFinite,

    #[error("matrix is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositiveSemidefinite(f64),

    #[error("eigensolver did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("unexpected complex eigenvalue (imaginary part {0:e})")]
    ComplexEigenvalue(f64),

    #[error("invalid parameter `{field}`: {message}")]
    InvalidParameter {
        field: &'static str,
        message: String,
    },

    #[error("thermal state needs T > 0 (got {0}); use the ground state for T = 0")]
    NonpositiveTemperature(f64),

    #[error("closed-form oracle requires theta1 = 0 (got {0})")]
    OracleRequiresAxialField(f64),

    #[error("unknown preset id `{0}`")]
    UnknownPreset(String),

    #[error("invalid sweep spec at {path}: {message}")]
    InvalidSpec { path: String, message: String },

    #[error("sweep failed at grid point {index} ({coords}): {source}")]
    SweepPoint {
        index: usize,
        coords: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid_param(field: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
