use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank must be at least one.
    InvalidRank(usize),
    /// Two operands live in different ranks.
    RankMismatch { expected: usize, found: usize },
    /// A coordinate vector of the wrong length.
    Arity { expected: usize, found: usize },
    NotDominant,
    /// Input outside `P^+(1)`.
    NotMultiplicityFree,
    TooManyParts { max: usize, found: usize },
    NegativeQInteger(i64),
    SizeMismatch { shape: usize, content: usize },
    NotSymmetric,
    /// A charge word or Kostka–Foulkes content that is not a partition.
    InvalidContent,
    UnknownSuite(alloc::string::String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(n) => write!(f, "rank must be at least 1, got {}", n),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {}, found {}", expected, found)
            }
            Error::Arity { expected, found } => {
                write!(f, "expected {} coordinates, found {}", expected, found)
            }
            Error::NotDominant => f.write_str("weight is not dominant"),
            Error::NotMultiplicityFree => f.write_str("weight has a coordinate outside {0, 1}"),
            Error::TooManyParts { max, found } => {
                write!(f, "partition has {} nonzero parts, at most {} allowed", found, max)
            }
            Error::NegativeQInteger(n) => write!(f, "q-integer of negative argument {}", n),
            Error::SizeMismatch { shape, content } => {
                write!(f, "shape has {} boxes but content sums to {}", shape, content)
            }
            Error::NotSymmetric => f.write_str("polynomial is not symmetric"),
            Error::InvalidContent => f.write_str("content is not a partition"),
            Error::UnknownSuite(s) => write!(f, "unknown identity suite `{}`", s),
        }
    }
}

impl core::error::Error for Error {}
