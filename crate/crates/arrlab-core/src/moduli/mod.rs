//! Moduli of line arrangements with a prescribed incidence structure:
//! incremental reconstruction over a rational-function field, closure
//! polynomials, moduli point counts, and projective equivalence.

mod equivalence;
pub mod mvpoly;
mod solver;

pub use equivalence::realizations_equivalent;
pub use mvpoly::MvPoly;
pub use solver::{
    plan_construction, solve_moduli, ConstructionPlan, ModuliError, ModuliReport, ModuliStatus,
    PlanSlot,
};
