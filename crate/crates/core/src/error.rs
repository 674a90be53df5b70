use alloc::string::String;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("vertex {index} has {found} coordinates, expected {expected}")]
    CoordinateCount {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("duplicate vertex at index {0}")]
    DuplicateVertex(usize),
    #[error("point at index {0} is not a vertex of the convex hull")]
    NotAVertex(usize),
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("integer overflow in lattice computation")]
    Overflow,
    #[error("polynomial of degree {degree} cannot be reversed with respect to {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("spectral exponent {exponent} does not fit dimension {dim}")]
    ExponentOutOfRange { exponent: String, dim: usize },
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
    #[error("invalid theta family: {0}")]
    InvalidTheta(String),
    #[error("delta-vector entry {index} is negative ({value})")]
    NegativeDelta { index: usize, value: String },
    #[error("palindromy violated: {0}")]
    PalindromyViolation(String),
    #[error("leading coefficient vanishes, polynomial degree is below the dimension")]
    DegenerateDegree,
    #[error("root finder did not converge")]
    ConvergenceFailure,
    #[error("polynomial has no roots to find (degree {0})")]
    ConstantPolynomial(usize),
    #[error(
        "product requires at least one reflexive factor \
         (counterexample: u^3 has theta = 2z, v^2 has theta = z, but u^3 + v^2 has theta = z + z^2)"
    )]
    ReflexivityRequired,
}

pub type Result<T> = core::result::Result<T, Error>;
