//! Exact-arithmetic toolkit for complex projective line arrangements:
//! quadratic number fields, incidence lattices, moduli of nine-line
//! arrangements, and the census machinery behind their classification.

pub mod catalog;
pub mod classify;
pub mod exact;
pub mod geometry;
pub mod lattice;
pub mod moduli;

pub use classify::{CensusResult, ClassifyError, NineLineClass};
pub use exact::{ExactError, Poly, QuadExt, RatFun, Rational};
pub use geometry::{Arrangement, GeometryError, ProjLine, ProjPoint, ProjTransform};
pub use lattice::{IncidenceStructure, LatticeError, LatticeIso, MultiplicityProfile};
