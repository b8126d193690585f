use thiserror::Error;

/// Errors raised by the algebra, code and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("p = 2 is not supported: F_2 + uF_2 has only the trivial automorphism")]
    CharacteristicTwo,
    #[error("s = {s} does not define a nontrivial automorphism over F_{p}")]
    TrivialAutomorphism { p: u32, s: u32 },
    #[error("element is not a unit")]
    NotUnit,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operands use different moduli or automorphisms")]
    AutomorphismMismatch,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("x^n - 1 has more than {limit} monic divisors")]
    DivisorExplosion { limit: usize },
    #[error("{0} does not divide x^n - 1 in F_p[x]")]
    NotADivisor(String),
    #[error("lift search needs {needed} candidates, cap is {cap}")]
    LiftBudgetExceeded { needed: u128, cap: u128 },

    #[error("abar must be monic and divide x^n - 1 in F_p[x]")]
    AbarNotDivisor,
    #[error("g must be monic and right-divide x^n - 1 in R[x;theta]")]
    GNotRightDivisor,
    #[error("mixed form requires deg abar < deg g and deg p < deg g")]
    DegreeOrder,
    #[error("abar does not divide g mod u")]
    AbarNotDividingGModU,
    #[error("((x^n - 1)/g) * u p is not in <u abar>")]
    MonicThreeConditionFailed,
    #[error("message part `{part}` has degree {degree}, bound is {bound}")]
    MessageDegreeOverflow { part: &'static str, degree: usize, bound: i64 },
    #[error("message shape does not match the code's generator form")]
    MessageShape,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("word is not a codeword")]
    NotACodeword,
    #[error("error pattern is not a correctable single u-error")]
    Uncorrectable,
    #[error("operation not defined for this generator form")]
    UnsupportedForm,
    #[error("closure has {size} elements, limit is {limit}")]
    ClosureTooLarge { size: u128, limit: u128 },
    #[error("code is the zero code")]
    EmptyCode,

    #[error("Gray map length {ell} must lie in [2, {p}]")]
    EllOutOfRange { ell: usize, p: u32 },
    #[error("exhaustive enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("bounded weight search needs more than {budget} candidates")]
    CombinatorialBudgetExceeded { budget: u128 },
    #[error("minimum distance could not be determined within budget")]
    DistanceUndetermined,

    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid record: {0}")]
    Record(String),
}

impl Error {
    /// Budget-type failures, as opposed to validation or parse failures.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::DivisorExplosion { .. }
                | Error::LiftBudgetExceeded { .. }
                | Error::ClosureTooLarge { .. }
                | Error::BudgetExceeded { .. }
                | Error::CombinatorialBudgetExceeded { .. }
                | Error::DistanceUndetermined
        )
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::Record(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
