use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} outside the supported range [{min}, {max}]")]
    PrimeOutOfRange { p: u64, min: u64, max: u64 },
    #[error("unsupported extension degree {0}")]
    UnsupportedDegree(usize),
    #[error("{got} coefficients given for a degree-{degree} field")]
    TooManyCoefficients { got: usize, degree: usize },
    #[error("operands live in different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime field")]
    NotPrimeField(String),
    #[error("degree {source_degree} does not divide degree {target_degree}")]
    DegreeMismatch { source_degree: usize, target_degree: usize },
    #[error("group elements for different primes ({0} vs {1})")]
    PrimeMismatch(u32, u32),
    #[error("invalid group element: {0}")]
    InvalidGroupElement(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("field {0} does not contain F_p^2")]
    FieldTooSmall(String),
    #[error("the identity has no isolated fixed points")]
    IdentityInput,
    #[error("element is not a normalised wild element: {0}")]
    NotWild(String),
    #[error("series: {0}")]
    Series(String),
    #[error("series precision exhausted (cap {0})")]
    PrecisionExhausted(usize),
    #[error("class functions are defined on different class lists")]
    ClassListMismatch,
    #[error("non-integral multiplicity {0}")]
    NonIntegral(String),
    #[error("ell = {0} must differ from p")]
    EllEqualsP(u64),
    #[error("{0} is not a valid torsion prime")]
    BadEll(u64),
    #[error("ell-torsion search space {size} exceeds bound {bound}")]
    BoundExceeded { size: u128, bound: u128 },
    #[error("splitting field of degree {0} exceeds the cap")]
    SplittingFieldTooLarge(usize),
    #[error("divisor class not in the span of the torsion basis")]
    NotInSpan,
    #[error("CRT moduli product {product} does not exceed {needed}")]
    ModuliTooSmall { product: i64, needed: i64 },
    #[error("inconsistent congruences: ell-independence violated ({0})")]
    InconsistentCongruences(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("internal error: {0}")]
    Internal(String),
}
