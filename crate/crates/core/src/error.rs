use thiserror::Error;

use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("symbol index {index} out of range for an alphabet of {size} symbols")]
    SymbolOutOfRange { index: u32, size: usize },
    #[error("alphabets do not match")]
    AlphabetMismatch,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("presentation defines the empty shift space")]
    EmptyShift,
    #[error("block length {n} too small: need at least {required}")]
    BlockLengthTooSmall { n: usize, required: usize },
    #[error("operation requires a shift of finite type given by forbidden words")]
    NotAnSft,
    #[error("point is not in the shift space")]
    PointNotInShift,
    #[error("invalid circle map: {0}")]
    InvalidCircleMap(String),
    #[error("arcs do not cover the circle; uncovered points {uncovered:?}")]
    NotACover { uncovered: Vec<Rational> },
    #[error("cover is not taut: closures of {first} and {second} meet but the cells are disjoint")]
    NotTaut { first: String, second: String },
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("cells or covers belong to different systems")]
    MixedSystems,
    #[error("refinement map is ambiguous: covers are not pairwise disjoint")]
    AmbiguousIota,
    #[error("cover does not refine the coarser cover")]
    NotARefinement,
    #[error("no coarse cell contains the star of {cell}; star = {star:?}")]
    StarConditionFails { cell: String, star: Vec<String> },
    #[error("pseudo-orbit gap at index {index} is {gap}, not below delta")]
    GapTooLarge { index: usize, gap: Rational },
    #[error("empty pseudo-orbit")]
    EmptyPseudoOrbit,
    #[error("cover criterion fails between depths at position {pair}")]
    CriterionFails { pair: usize },
    #[error(
        "inclusion of the star-substitution image fails at level {level}; witness {witness:?}"
    )]
    InclusionFails { level: usize, witness: Vec<String> },
    #[error("invalid tower: {0}")]
    InvalidTower(String),
    #[error("invalid block code: {0}")]
    InvalidCode(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("spec error: {0}")]
    Spec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
