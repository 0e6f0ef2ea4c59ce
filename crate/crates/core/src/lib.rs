//! Alexander-Conway polynomials of oriented link diagrams from marker
//! state sums, with the classical determinant and a skein evaluator as
//! independent checks.

pub mod corpus;
pub mod diagram;
pub mod halfpoly;
pub mod oracle;
pub mod random;
pub mod seifert;
pub mod states;
pub mod statesum;

pub use diagram::{CrossingId, Diagram, DiagramError, EdgeId};
pub use halfpoly::{ConwayPoly, HalfLaurent};
