use std::io;

use felderhof::bench::BenchError;
use felderhof::lattice::LatticeError;
use felderhof::mprod::MprodError;
use felderhof::poly::PolyError;
use felderhof::schur::SchurError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("verification failed")]
    VerificationFailed,
    #[error("{0}")]
    Disagreement(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::VerificationFailed | CliError::Disagreement(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::TooLarge { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SchurError> for CliError {
    fn from(e: SchurError) -> Self {
        match e {
            SchurError::DimensionCap { .. } => CliError::Cap(e.to_string()),
            SchurError::Lattice(l) => l.into(),
            SchurError::Poly(p) => p.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<MprodError> for CliError {
    fn from(e: MprodError) -> Self {
        match e {
            MprodError::TooManySpaces(..) => CliError::Cap(e.to_string()),
            MprodError::Lattice(l) => l.into(),
            MprodError::Poly(p) => p.into(),
            MprodError::DegenerateSample(_) => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::CapExceeded(_) => CliError::Cap(e.to_string()),
            BenchError::Disagreement { .. } => CliError::Disagreement(e.to_string()),
            BenchError::Lattice(l) => l.into(),
            BenchError::Schur(s) => s.into(),
            BenchError::Mprod(m) => m.into(),
            BenchError::Invalid(_) => CliError::Invalid(e.to_string()),
        }
    }
}
