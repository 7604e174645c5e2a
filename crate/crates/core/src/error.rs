use thiserror::Error;

/// Which defining property of a generalized Cartan matrix failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcmViolation {
    NotSquare,
    Empty,
    Diagonal { index: usize, value: i64 },
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    ZeroAsymmetry { row: usize, col: usize },
}

impl std::fmt::Display for GcmViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GcmViolation::NotSquare => write!(f, "matrix is not square"),
            GcmViolation::Empty => write!(f, "matrix is empty"),
            GcmViolation::Diagonal { index, value } => {
                write!(f, "diagonal entry a[{index}][{index}] = {value}, expected 2")
            }
            GcmViolation::PositiveOffDiagonal { row, col, value } => {
                write!(f, "positive off-diagonal entry a[{row}][{col}] = {value}")
            }
            GcmViolation::ZeroAsymmetry { row, col } => {
                write!(f, "zero-asymmetry: a[{row}][{col}] = 0 but a[{col}][{row}] != 0")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(GcmViolation),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeter(String),
    #[error("Coxeter matrix is not crystallographic (entry m = {0})")]
    NotCrystallographic(u32),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("theorem inapplicable: {0}")]
    Inapplicable(String),
    #[error("the pair of roots is not prenilpotent")]
    NotPrenilpotent,
    #[error("not a nilpotent set: {0}")]
    NotNilpotent(String),
    #[error("greedy extremal removal found no nibbling sequence")]
    NoNibblingFound,
    #[error("group is not spherical")]
    NotSpherical,
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
