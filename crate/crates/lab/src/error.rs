use std::path::PathBuf;

use fricke_core::algebraic::AlgebraicError;
use fricke_core::fricke::FrickeError;
use fricke_core::variety::VarietyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    /// Malformed input: exit status 2.
    #[error("{0}")]
    Usage(String),
    /// A certification could not be completed: exit status 1.
    #[error("{0}")]
    Certification(String),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl LabError {
    pub fn exit_code(&self) -> u8 {
        match self {
            LabError::Certification(_) => 1,
            LabError::Usage(_) | LabError::Io { .. } => 2,
        }
    }
}

impl From<FrickeError> for LabError {
    fn from(e: FrickeError) -> Self {
        match e {
            FrickeError::NoRealPoint(_) => LabError::Usage(e.to_string()),
            FrickeError::Algebraic(AlgebraicError::Domain(_)) => LabError::Usage(e.to_string()),
            _ => LabError::Certification(e.to_string()),
        }
    }
}

impl From<AlgebraicError> for LabError {
    fn from(e: AlgebraicError) -> Self {
        LabError::from(FrickeError::from(e))
    }
}

impl From<VarietyError> for LabError {
    fn from(e: VarietyError) -> Self {
        match e {
            VarietyError::Algebraic(a) => LabError::from(a),
            other => LabError::Usage(other.to_string()),
        }
    }
}
