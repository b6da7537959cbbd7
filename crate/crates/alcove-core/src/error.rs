use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("letter {letter} out of range 0..={max}")]
    BadLetter { letter: usize, max: usize },
    #[error("face type letter {letter} out of range 1..={max}")]
    BadFaceLetter { letter: usize, max: usize },
    #[error("element is not reduced for the given face types; minimal representative has word {suggested:?}")]
    NotReduced { suggested: Vec<usize> },
    #[error("coweight is not dominant")]
    NotDominant,
    #[error("gallery is not positively folded at step {step}")]
    NotPositivelyFolded { step: usize },
    #[error("interval set is not an outcrop for this hyperplane")]
    NotOutcrop,
    #[error("interval set is not an ingrowth for this hyperplane")]
    NotIngrowth,
    #[error("move list has length {got}, type word has length {expected}")]
    MoveCountMismatch { expected: usize, got: usize },
    #[error("first alcove does not contain the start face")]
    BadFirstAlcove,
    #[error("enumeration needs galleries of length {needed}, above the cap {cap}")]
    CapExceeded { cap: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
