//! Exact computation of homology-cobordism invariants of closed oriented
//! 3-manifolds, and obstructions to a homology cobordism class containing a
//! Seifert fibered space.

pub mod exactalg;
pub mod families;
pub mod forms;
pub mod magnus;
pub mod manifold;
pub mod obstruct;
pub mod seifert;
