//! Exact finite-resolution checks of shadowing for symbolic systems and
//! piecewise-linear circle maps.
//!
//! Systems are subshifts (given by forbidden words or labeled graphs) or
//! continuous piecewise-linear circle maps with rational data. Finite open
//! covers of a system yield the pseudo-orbit pattern shift PO(𝒰), a 1-step
//! shift of finite type, and the orbit pattern languages O(𝒰)|_L. Shadowing
//! is witnessed by language identities between such shifts across
//! refinements, and towers of these shifts approximate the system as an
//! inverse limit.
//!
//! Everything is computed exactly: languages via subset automata, arcs via
//! rational arithmetic. Every verdict is labeled with the resolution it was
//! checked at.

pub mod alphabet;
mod automaton;
pub mod builtins;
pub mod circle;
pub mod cover;
pub mod error;
pub mod factor;
pub mod numeric;
pub mod point;
pub mod shadowing;
pub mod spec;
pub mod subshift;
pub mod system;
pub mod tower;

pub use alphabet::{Alphabet, Sym, Word};
pub use circle::{CircleMap, ClosedSet, OpenArc};
pub use cover::{
    iota, star_selection, CellShape, Cover, CoverCell, PoGraph, RefinementMap, StarSelection,
};
pub use error::{Error, Result};
pub use factor::{
    alp_check, lifts_check, sofic_counterexample, AlpQuery, AlpReport, AlpVerdict, BlockCode,
    LiftsReport, SemiconjugacyVerdict,
};
pub use numeric::Rational;
pub use point::EpPoint;
pub use subshift::{Language, Presentation, SftVerdict, Subshift};
pub use system::{Point, System};
pub use tower::{
    build_general_tower, build_po_tower, GeneralTower, PoTower, SftTower, Thread, TowerVerdict,
};
