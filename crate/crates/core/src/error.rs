use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The given integer is not prime.
    NotPrime(u64),
    /// Extension degree must be at least 2; use a prime field otherwise.
    BadExtensionDegree(u32),
    /// Inversion or division by the zero element.
    DivisionByZero,
    /// The base and the modulus are not coprime.
    NotCoprime { g: u64, n: u64 },
    /// Modulus of a multiplicative-order computation must be at least 2.
    BadModulus(u64),
    /// Operands belong to different fields.
    FieldMismatch,
    /// The operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// The field characteristic divides the cyclotomic index.
    CharacteristicDividesN { p: u64 },
    /// Homogenization degree is smaller than the polynomial degree.
    DegreeTooSmall { needed: usize, got: usize },
    /// Vector length does not match the matrix column count.
    DimensionMismatch { expected: usize, got: usize },
    /// A witness element must be nonzero.
    ZeroWitness,
    /// A degree or order argument is out of range.
    BadDegree(String),
    /// A stated hypothesis of the verified statement does not hold.
    HypothesisFailed(String),
    /// The witness enumeration exceeded the configured candidate budget.
    SearchSpaceTooLarge { budget: u64 },
    /// No homogeneous witness was found up to the requested degree.
    NoWitnessFound { max_d: usize },
    /// The integer is not a member of the semigroup (or is zero).
    NotMember(u64),
    /// The pair does not satisfy 2 <= a < b with gcd(a, b) = 1.
    BadPair { a: u64, b: u64 },
    /// Semigroup generators must have gcd 1.
    GcdNotOne,
    /// A semigroup needs at least one positive generator.
    EmptyGenerators,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{} is not prime", n),
            Error::BadExtensionDegree(e) => {
                write!(f, "extension degree {} is invalid (use a prime field for e = 1)", e)
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotCoprime { g, n } => write!(f, "{} and {} are not coprime", g, n),
            Error::BadModulus(n) => write!(f, "modulus {} must be at least 2", n),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::CharacteristicDividesN { p } => {
                write!(f, "field characteristic {} divides the cyclotomic index", p)
            }
            Error::DegreeTooSmall { needed, got } => {
                write!(f, "homogenization degree {} is below the polynomial degree {}", got, needed)
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "expected a vector of length {}, got {}", expected, got)
            }
            Error::ZeroWitness => write!(f, "witness element must be nonzero"),
            Error::BadDegree(msg) => write!(f, "bad degree: {}", msg),
            Error::HypothesisFailed(msg) => write!(f, "hypothesis failed: {}", msg),
            Error::SearchSpaceTooLarge { budget } => {
                write!(f, "witness enumeration exceeded the candidate budget of {}", budget)
            }
            Error::NoWitnessFound { max_d } => {
                write!(f, "no homogeneous witness found up to degree {}", max_d)
            }
            Error::NotMember(s) => write!(f, "{} is not a nonzero member of the semigroup", s),
            Error::BadPair { a, b } => {
                write!(f, "({}, {}) must satisfy 2 <= a < b with gcd(a, b) = 1", a, b)
            }
            Error::GcdNotOne => write!(f, "semigroup generators must have gcd 1"),
            Error::EmptyGenerators => write!(f, "semigroup needs at least one positive generator"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
