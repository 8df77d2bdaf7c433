//! Error type shared across the kernel.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arithmetic on scalars from different fields.
    FieldMismatch,
    /// Inversion of the zero scalar.
    DivisionByZero,
    /// The rationals cannot be exhaustively enumerated.
    NotEnumerable,
    /// Composition or pointwise operation on maps with incompatible spaces.
    ShapeMismatch { context: String },
    /// `split_idempotent` was handed a map with q∘q ≠ q.
    NotIdempotent,
    /// `solve_affine` found no solution.
    Inconsistent,
    /// `factor_through` could not factor the map through the embedding.
    NoFactorization { context: String },
    /// A morphism that must factor through an equalizer or center failed to.
    FactorizationFailure { context: String },
    /// A convolution inverse does not exist.
    NoInverse,
    /// Over the rationals the linear solution family is positive-dimensional
    /// and the particular solution fails the quadratic condition; the unique
    /// inverse (if any) cannot be located by this solver.
    Undetermined,
    /// An operation that needs a cocommutative coalgebra got one that is not.
    NotCocommutative,
    /// A map that had to be invertible is not.
    NotInvertible,
    /// An integral that had to be total is not.
    NotTotal,
    /// Two crossed systems or cleft extensions cannot be compared
    /// (different coinvariant subalgebras or unit maps).
    NotComparable { context: String },
    /// Malformed user input (field spec, scalar literal, …).
    InvalidInput { context: String },
    /// Groupoid data violates the category/groupoid axioms.
    InvalidGroupoid { context: String },
    /// The twisted condition fails; names the first violated identity.
    TwistedFail { label: String },
    /// The cocycle condition fails; names the first violated identity.
    CocycleFail { label: String },
    /// The normal condition fails; names the first violated identity.
    NormalFail { label: String },
    /// An exhaustive enumeration would exceed the configured bound.
    SearchSpaceTooLarge { needed: u128, bound: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "scalars belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotEnumerable => write!(f, "the rationals are not enumerable"),
            Error::ShapeMismatch { context } => write!(f, "shape mismatch: {context}"),
            Error::NotIdempotent => write!(f, "map is not idempotent"),
            Error::Inconsistent => write!(f, "linear system has no solution"),
            Error::NoFactorization { context } => {
                write!(f, "no factorization through embedding: {context}")
            }
            Error::FactorizationFailure { context } => {
                write!(f, "required factorization failed: {context}")
            }
            Error::NoInverse => write!(f, "no convolution inverse exists"),
            Error::Undetermined => write!(
                f,
                "inverse undetermined: positive-dimensional solution family over the rationals"
            ),
            Error::NotCocommutative => write!(f, "coalgebra is not cocommutative"),
            Error::NotInvertible => write!(f, "map is not invertible"),
            Error::NotTotal => write!(f, "integral is not total"),
            Error::NotComparable { context } => write!(f, "not comparable: {context}"),
            Error::InvalidInput { context } => write!(f, "invalid input: {context}"),
            Error::InvalidGroupoid { context } => write!(f, "invalid groupoid: {context}"),
            Error::TwistedFail { label } => write!(f, "twisted condition fails at ({label})"),
            Error::CocycleFail { label } => write!(f, "cocycle condition fails at ({label})"),
            Error::NormalFail { label } => write!(f, "normal condition fails at ({label})"),
            Error::SearchSpaceTooLarge { needed, bound } => write!(
                f,
                "search space of {needed} candidates exceeds the bound of {bound}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
