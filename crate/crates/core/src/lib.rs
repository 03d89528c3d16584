//! Simple 3-polytopes, their belts and prismatic circuits, small covers over
//! them and the right-angled Coxeter groups they determine.

pub mod belts;
pub mod classify;
pub mod coloring;
pub mod complex;
pub mod polytope;
pub mod racg;

pub use polytope::{builtin, default_corpus, FacetId, SimplePolytope3};
