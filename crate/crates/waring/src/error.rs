use num_rational::BigRational;
use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto its exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: the zero monomial (all exponents zero) has no decomposition")]
    DegenerateInput,

    #[error("degenerate parameter t = {0}: the scale polynomial vanishes there")]
    DegenerateParameter(BigRational),

    #[error("degenerate parameter t = {parameter}: scale polynomial vanishes for monomials {monomials:?}")]
    DegenerateParameterForMonomials {
        parameter: BigRational,
        monomials: Vec<Vec<u32>>,
    },

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("index-set precondition violated: {0}")]
    IndexSet(String),

    #[error("input is not homogeneous (degrees {0} and {1} both present); homogenize first")]
    NotHomogeneous(u32, u32),

    #[error("degenerate simplex: vertices are not affinely independent")]
    DegenerateSimplex,

    #[error("linear form is not regular with respect to the simplex (two vertices evaluate equally)")]
    NotRegular,

    #[error("no parameter among {0} attempts makes every linear form regular on the simplex")]
    RegularityBudgetExhausted(usize),

    #[error("merged coefficient cancelled to zero for form {0:?}; summand count no longer matches the closed formula")]
    CoefficientCancellation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
