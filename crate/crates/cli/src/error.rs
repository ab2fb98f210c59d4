use std::fmt;
use std::process::ExitCode;

use dwork_ns::counting::CountError;
use dwork_ns::delpezzo::DelPezzoError;
use dwork_ns::exactalg::ExactError;
use dwork_ns::ffield::FfError;
use dwork_ns::galoisrep::GaloisError;
use dwork_ns::reptheory::RepError;

/// Exit status classes: invalid input or bad reduction (2), anything else (1).
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Invalid(_) => ExitCode::from(2),
            Failure::Internal(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid(m) => write!(f, "invalid input: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

fn labelled(kind: &str, detail: impl fmt::Display) -> String {
    format!("{kind}: {detail}")
}

impl From<FfError> for Failure {
    fn from(e: FfError) -> Failure {
        match e {
            FfError::DenominatorDivisible { .. } => Failure::Invalid(labelled("BadReduction", e)),
            FfError::EvenOrCompositeModulus(2) => Failure::Invalid(labelled("EvenCharacteristic", e)),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Failure {
        match e {
            CountError::Field(f) => f.into(),
            CountError::IdentityViolated { .. } => Failure::Internal(e.to_string()),
            CountError::EvenCharacteristic => Failure::Invalid(labelled("EvenCharacteristic", e)),
            CountError::BadReduction { .. } => Failure::Invalid(labelled("BadReduction", e)),
            CountError::LambdaZero => Failure::Invalid(labelled("LambdaZero", e)),
            CountError::RamifiedPrime(_) => Failure::Invalid(labelled("RamifiedPrime", e)),
            CountError::PrimeExcluded(_) => Failure::Invalid(labelled("PrimeExcluded", e)),
        }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Failure {
        match e {
            ExactError::LambdaSingular(_) => Failure::Invalid(labelled("LambdaSingular", e)),
            ExactError::Parse(_) | ExactError::DependentClasses { .. } | ExactError::ZeroInput => {
                Failure::Invalid(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<GaloisError> for Failure {
    fn from(e: GaloisError) -> Failure {
        match e {
            GaloisError::Exact(x) => x.into(),
            GaloisError::Field(x) => x.into(),
            GaloisError::Count(x) => x.into(),
            GaloisError::RamifiedPrime(_) => Failure::Invalid(labelled("RamifiedPrime", e)),
            GaloisError::UnknownDimension(_) => Failure::Invalid(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<DelPezzoError> for Failure {
    fn from(e: DelPezzoError) -> Failure {
        match e {
            DelPezzoError::Exact(x) => x.into(),
            DelPezzoError::InvalidSurface(_) => Failure::Invalid(e.to_string()),
            // a sign vector that moves the surface itself, as sigma_I does for r = 1
            DelPezzoError::ImageNotFound { .. } => Failure::Invalid(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Failure {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Internal(e.to_string())
    }
}
