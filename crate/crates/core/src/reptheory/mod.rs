//! The symmetry group `H = S4 ⋉ (Z/2)²` of the Dwork pencil, its character table, and the
//! decomposition of the character on primitive cohomology.

pub mod character;
pub mod cyclo;
pub mod group;
pub mod reference;
pub mod subgroups;

pub use character::{
    character_table_h, chi_pr, chi_pr_function, chi_pr_perm, decompose, CharacterTable, ClassFunction, Fingerprint,
    HClasses, Multiplicity,
};
pub use cyclo::Cyclo3;
pub use group::{build_group, conjugacy_classes, ConjClass, GroupElement};
pub use reference::{match_reference, ClassMatching};
pub use subgroups::{restrict_and_decompose, subgroup_table, Subgroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("the two lifts of {element} give chi_pr values {values:?}")]
    RepresentativeAmbiguous { element: String, values: (i64, i64) },
    #[error("{0} has a nontrivial sign part")]
    SignedInput(String),
    #[error("multiplicity of {label} is {sum}/{order}, not an integer")]
    NonIntegralMultiplicity { label: String, sum: String, order: usize },
    #[error("reference table mismatch: {0}")]
    ReferenceMismatch(&'static str),
}
