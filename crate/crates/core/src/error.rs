use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("substitution degree {s} is below polynomial degree {degree}")]
    SubstitutionDegree { s: usize, degree: usize },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("insufficient series order: need at least {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact polynomial division: nonzero remainder {0}")]
    NonZeroRemainder(String),

    #[error("unexpected monomial y^{a} z^{b} for shape {shape} at n = {n}")]
    UnexpectedMonomial {
        shape: &'static str,
        n: usize,
        a: u32,
        b: u32,
    },

    #[error("shape {shape} is undefined at n = {n}")]
    ShapeUndefined { shape: &'static str, n: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("index ({n}, {k}) is outside the support of family {family}")]
    OutOfSupport { family: String, n: usize, k: i64 },

    #[error("{what}: n = {n} outside the enumeration bound {min}..={max}")]
    OutOfBounds {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("double factorial is only defined for odd m >= -1, got {0}")]
    DoubleFactorialArgument(i64),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,

    #[error("root isolation failed: {0}")]
    IsolationFailed(String),

    #[error("operator expansion is not in the (x+x^2)^k D^k basis: {0}")]
    NotInBasis(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
