//! ω-primality and asymptotic ω-primality of finitely generated cancellative
//! reduced monoids: numerical semigroups, affine semigroups, two-generated
//! presentations and lattice presentations.
//!
//! ```
//! use omega_primality::{omega_element, Element, Monoid, OmegaOptions, SemigroupSpec};
//!
//! let s = Monoid::new(&SemigroupSpec::numerical(&[3, 5])).unwrap();
//! let report = omega_element(&s, &Element::value(3), &OmegaOptions::default()).unwrap();
//! assert_eq!(report.value, 3u32.into());
//! ```

pub mod asymptotic;
#[cfg(feature = "cli")]
pub mod cli;
mod clock;
pub mod diophantine;
pub mod error;
pub mod lattice;
pub mod omega;
pub mod semigroup;
pub mod vector;

pub use asymptotic::{
    asymptotic_omega_element, asymptotic_omega_semigroup, empirical_ratio_sequence, k_vector, KVector,
    Rational,
};
pub use diophantine::{
    brute_minimals_bounded, e_membership, ideal_preimage_minimals, min_solutions_homogeneous,
    min_solutions_inhomogeneous, minimals_filter, qa_search_bound, sound_bound, Antichain, IntMatrix, Limits,
};
pub use error::{Error, Result};
pub use omega::{
    cross_check, omega_element, omega_semigroup, omega_two_gen_closed, two_gen_minimals, CrossCheck, Method,
    OmegaOptions, OmegaReport, SemigroupOmega,
};
pub use semigroup::{
    apery, frobenius, kernel_lattice, membership, normalize_spec, Element, Mode, Monoid, SemigroupSpec,
};
pub use vector::{NVec, ZVec};
