use lie_cohomology::catalog::CatalogError;
use lie_cohomology::cochain::CochainError;
use lie_cohomology::factorization::FactorizationError;
use lie_cohomology::invariants::InvariantError;
use lie_cohomology::LieError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::InvalidAlgebra(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match &e {
            CatalogError::Jacobi(v) => {
                let [i, j, k] = v.triple;
                CliError::InvalidAlgebra(format!("{v} (basis indices {i}, {j}, {k})"))
            }
            _ => CliError::InvalidAlgebra(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InvalidModule(v) => CliError::InvalidAlgebra(v.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<CochainError> for CliError {
    fn from(e: CochainError) -> Self {
        match e {
            CochainError::InvalidRepresentation(v) => CliError::InvalidAlgebra(v.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Jacobi(v) => CliError::InvalidAlgebra(v.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<FactorizationError> for CliError {
    fn from(e: FactorizationError) -> Self {
        match e {
            FactorizationError::NotACocycle(v) => {
                let [i, j, k] = v.triple;
                CliError::InvalidAlgebra(format!("cochain is not a 2-cocycle; extension breaks Jacobi: {v} (basis indices {i}, {j}, {k})"))
            }
            FactorizationError::Cochain(c) => c.into(),
            FactorizationError::Invariant(i) => i.into(),
            FactorizationError::Lie(l) => l.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
