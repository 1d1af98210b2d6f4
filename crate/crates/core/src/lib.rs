//! Finite extended probability spaces.
//!
//! A ground set `Ω⁺` of positive elementary events has a negative mirror
//! `Ω⁻`; an element and its mirror annihilate when united. An extended
//! probability function `P` is defined on the composed family
//! `F = {A ∪ −B : A, B ∈ F⁺, A ∩ B = ∅}` and may take negative values.
//!
//! ```
//! use epspace::harness::parse_space;
//! use epspace::validate::{validate_axioms, ValidationMode};
//!
//! let space = parse_space(
//!     r#"{"omega_plus": ["a", "b"], "weights": {"a": "1/4", "b": "3/4"}, "algebra": "powerset"}"#,
//! )
//! .unwrap();
//! let value = space.eval_event(&"a,-b".parse().unwrap()).unwrap();
//! assert_eq!(value.to_string(), "-1/2");
//! assert!(validate_axioms(&space, ValidationMode::Exhaustive).all_passed());
//! ```

pub mod domain;
pub mod error;
pub mod events;
pub mod harness;
pub mod measure;
pub mod rational;
pub mod report;
pub mod structures;
pub mod theorems;
pub mod validate;

pub use error::{EventError, HarnessError, SpaceError, StructureError};
pub use events::{
    annihilating_union, negate_event, normalize, Event, Label, RawEventDraft, SignedAtom,
};
pub use measure::{make_space, ExtendedSpace, ExtendedValue, WeightMap};
pub use report::{CheckEntry, Counterexample, ValidationReport};
pub use structures::{compose_f, generate_algebra, EventFamily, GroundSet};
pub use theorems::{run_theorem_checks, run_theorem_suite};
pub use validate::{check_kolmogorov_restriction, validate_axioms, ValidationMode};
