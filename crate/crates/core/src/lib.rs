//! Binary cubic forms over the ring of integers of ℚ or a quadratic field,
//! quadratic algebras over it, and the parametrization linking them.

pub mod base_field;
pub mod counting_local;
pub mod cubic_forms;
pub mod error;
pub mod gauss_composition;
pub mod numeric;
pub mod quad_algebra;
pub mod rlattice;
pub mod zlattice;

pub use base_field::{BaseField, FracIdealR, KElem, PrimeIdealR};
pub use cubic_forms::{CubicForm, FormSpace, GroupElem};
pub use quad_algebra::{BalancedQuadruple, LElem, QuadAlgebra, SIdeal};
pub use error::{Error, Result};
