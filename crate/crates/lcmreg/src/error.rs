use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
///
/// Budget exhaustion is kept distinguishable from input errors because the
/// CLI maps them to different exit codes (2 vs 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} out of range (1..=16)")]
    BadVertexCount(usize),
    #[error("line {line}: {msg}")]
    GraphParse { line: usize, msg: String },
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("no Dirac order: complement is not chordal")]
    NoDiracOrder,
    #[error("exhaustive enumeration needs n <= 7, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("invalid size {n} for family {family}")]
    BadFamilySize { family: String, n: usize },

    #[error("exponent overflow (limit {0} per variable)")]
    ExponentOverflow(u8),
    #[error("empty ideal: graph has no edges")]
    EmptyIdeal,
    #[error("ideal power must be >= 1")]
    BadPower,
    #[error("variable x{0} not in support")]
    VariableNotInSupport(usize),
    #[error("unit monomial not allowed here")]
    UnitMonomial,

    #[error("lattice too large: exceeded budget of {budget} elements")]
    LatticeTooLarge { budget: usize },
    #[error("face budget exceeded: more than {budget} faces")]
    FaceBudgetExceeded { budget: u64 },
    #[error("face budget {budget} exceeded on interval (1, {multidegree})")]
    FaceBudgetExceededOnInterval { budget: u64, multidegree: String },
    #[error("monomial {0} is not a lattice element")]
    NotInLattice(String),
    #[error("{lo} does not strictly divide {hi}")]
    NotStrictDivisor { lo: String, hi: String },
    #[error("atoms are not all of degree {expected}")]
    BadAtomDegree { expected: u32 },
    #[error("ideal is not equigenerated")]
    NotEquigenerated,
    #[error("lcm-lattice is not graded by degree")]
    NotGraded,
    #[error("no degree-{0} elements: syzygy ideal is empty")]
    NoSyzygyElements(u32),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("cannot parse field {0:?} (expected q, f2, f3, ...)")]
    BadFieldSpec(String),
    #[error("face {0:?} is not in the complex")]
    NotAFace(Vec<u16>),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for resource-budget errors (CLI exit code 2).
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::LatticeTooLarge { .. }
                | Error::FaceBudgetExceeded { .. }
                | Error::FaceBudgetExceededOnInterval { .. }
        )
    }
}

/// Resource limits for lattice closure and face enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Maximum number of lcm-lattice elements before `build_lcm_lattice` fails.
    pub max_lattice_elements: usize,
    /// Maximum total number of faces an order complex may enumerate.
    pub max_faces: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_lattice_elements: 2_000_000,
            max_faces: 50_000_000,
        }
    }
}
