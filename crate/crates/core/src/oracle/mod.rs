//! Cross-checks that share no code with the state sums: the region-labeled
//! Alexander determinant and a skein-relation rewriting evaluator.

mod alexander;
mod skein;

pub use alexander::{alexander_determinant, alexander_matrix, AlexanderMatrix};
pub use skein::{skein_recursion_nabla, SkeinError, DEFAULT_DEPTH_LIMIT};
