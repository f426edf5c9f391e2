//! Ideal theory of finite commutative semirings.
//!
//! A [`FiniteSemiring`] is given by Cayley tables on `{0, …, n-1}`. On top
//! of it the crate provides the ideal calculus (sums, products, colons,
//! radicals), prime and maximal spectra with their Zariski closed sets,
//! homomorphisms with contraction and extension, rings and semimodules of
//! fractions, and irreducible and primary decompositions. The [`checks`]
//! module verifies the classical theorems of the subject exhaustively on
//! any given semiring.

pub mod checks;
pub mod decomposition;
pub mod error;
pub mod gallery;
pub mod ideals;
pub mod io;
pub mod localization;
pub mod morphisms;
pub mod semimodules;
pub mod semiring;
pub mod set;
pub mod spectrum;

pub use checks::{run_checks, CheckReport, Selection};
pub use decomposition::{Decomposition, DecompositionKind};
pub use error::{Error, Result, Violation};
pub use ideals::{enumerate_ideals, ideal_semiring, Ideal, IdealLattice};
pub use semiring::{
    direct_product, validate_semiring, Element, FiniteSemiring, RawSemiring, SemiringId,
    DEFAULT_SIZE_CAP,
};
pub use localization::{localize, localize_at_prime, LocalizationResult};
pub use morphisms::{enumerate_homs, validate_hom, SemiringHom};
pub use semimodules::{
    is_zero_locally, localize_module, validate_semimodule, FiniteSemimodule, LocalizedModule,
    RawSemimodule, Subsemimodule,
};
pub use set::ElementSet;
pub use spectrum::{McSet, Spectrum};
