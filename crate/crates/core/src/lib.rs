//! Finite restriction semigroups, finite categories, and the germ/slice
//! correspondence between them.
//!
//! * [`algebra`]: biunary semigroups given by tables, their axioms,
//!   orders, joins and morphisms.
//! * [`category`]: finite categories, slices, cofunctors, covering functors.
//! * [`duality`]: germ categories, the unit and counit, and reports that
//!   check the adjunction and equivalence statements on concrete inputs.
//! * [`gba`]: finite generalized Boolean algebras and prime characters.

pub mod algebra;
pub mod category;
pub mod duality;
pub mod format;
pub mod gba;
pub mod laws;
pub mod report;
pub mod zoo;

pub use algebra::{classify, AlgebraClassification, AlgebraError, BiUnaryAlgebra, MorphismType, SemigroupMorphism};
pub use category::{Cofunctor, CoveringFunctor, FinCat, Slice, SliceSemigroup};
pub use duality::{DualityError, GermCategory};
pub use gba::{FinGba, PrimeCharacter};
pub use report::Report;
