use std::fmt;

use kminv::cartan::CartanError;
use kminv::invariants::InvariantError;
use kminv::subalgebra::SubalgebraError;
use kminv::topology::TopologyError;
use kminv::weyl::WeylError;

/// Exit codes, one per failure class. Kept in sync with [`EXIT_CODE_HELP`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Code {
    VerificationFailed = 1,
    Io = 3,
    Parse = 4,
    InvalidMatrix = 5,
    Decomposable = 6,
    NotIndefinite = 7,
    FiniteType = 8,
    NonSymmetrizable = 9,
    CycleCondition = 10,
    NotACartanMatrix = 11,
    Extraction = 12,
    Overflow = 13,
    Precondition = 14,
}

pub const EXIT_CODE_HELP: &str = "\
Exit codes:
   0  success
   1  verify: at least one check failed
   2  invalid command line
   3  input file cannot be read
   4  malformed matrix file
   5  matrix violates the Cartan axioms
   6  matrix is decomposable
   7  matrix is not of indefinite type
   8  matrix is of finite type
   9  matrix is not symmetrizable
  10  Dynkin diagram is not a cycle with a -1 on every edge
  11  computed subalgebra matrix is not a Cartan matrix
  12  generator counts cannot be extracted from the flag series
  13  integer overflow in Weyl group arithmetic
  14  other precondition violated";

#[derive(Debug)]
pub struct CliError {
    pub code: Code,
    pub message: String,
}

impl CliError {
    pub fn new(code: Code, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<CartanError> for CliError {
    fn from(e: CartanError) -> Self {
        let code = match e {
            CartanError::Parse(_) | CartanError::Empty | CartanError::NotSquare { .. } => Code::Parse,
            CartanError::DiagonalNotTwo { .. }
            | CartanError::PositiveOffDiagonal { .. }
            | CartanError::ZeroAsymmetry { .. } => Code::InvalidMatrix,
            CartanError::Decomposable(_) => Code::Decomposable,
            CartanError::NotIndefinite(_) => Code::NotIndefinite,
            _ => Code::Precondition,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        let code = match e {
            WeylError::Overflow => Code::Overflow,
            _ => Code::Precondition,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        let code = match e {
            InvariantError::Decomposable(_) => Code::Decomposable,
            InvariantError::NotIndefinite(_) => Code::NotIndefinite,
            InvariantError::FiniteType => Code::FiniteType,
            InvariantError::NonSymmetrizable => Code::NonSymmetrizable,
            InvariantError::NotInvariant | InvariantError::Poly(_) => Code::Precondition,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<SubalgebraError> for CliError {
    fn from(e: SubalgebraError) -> Self {
        let code = match e {
            SubalgebraError::NotACartanMatrix(_) => Code::NotACartanMatrix,
            SubalgebraError::RankTooSmall(_)
            | SubalgebraError::BadLabeling(_)
            | SubalgebraError::PreconditionViolated(_) => Code::Precondition,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        let code = match e {
            TopologyError::Decomposable(_) => Code::Decomposable,
            TopologyError::NotIndefinite(_) => Code::NotIndefinite,
            TopologyError::FiniteType => Code::FiniteType,
            TopologyError::NonSymmetrizable => Code::NonSymmetrizable,
            TopologyError::NegativeGeneratorCount { .. }
            | TopologyError::InconsistentSeries { .. }
            | TopologyError::SeriesTooShort { .. } => Code::Extraction,
            TopologyError::Weyl(w) => return w.into(),
        };
        CliError::new(code, e.to_string())
    }
}
