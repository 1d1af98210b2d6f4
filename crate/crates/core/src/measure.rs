//! Extended probability spaces and their evaluation.
//!
//! `P` is generated by non-negative atom weights summing to one:
//! `P(A) = Σ_{w ∈ A⁺} weight(w) − Σ_{-w ∈ A⁻} weight(w)`. Every axiom the
//! validator checks is then a theorem of this model, and the fault hooks
//! ([`ExtendedSpace::with_event_override`],
//! [`ExtendedSpace::with_atom_weight`]) exist so the validator can be shown
//! to catch violations.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SpaceError;
use crate::events::{normalize, Event, Label, RawEventDraft, SignedAtom};
use crate::rational::approximate;
use crate::structures::{
    compose_f, is_set_algebra, is_set_field, mirror_family, EventFamily, FamilyKind, GroundSet,
};

/// Exact non-negative atom weights summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: BTreeMap<Label, BigRational>,
}

impl WeightMap {
    pub fn new(weights: BTreeMap<Label, BigRational>) -> Result<Self, SpaceError> {
        if let Some((label, weight)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(SpaceError::NonNegativity {
                label: label.clone(),
                weight: weight.clone(),
            });
        }
        let sum: BigRational = weights.values().sum();
        if !sum.is_one() {
            return Err(SpaceError::Normalization { sum });
        }
        Ok(WeightMap { weights })
    }

    pub fn get(&self, label: &Label) -> Option<&BigRational> {
        self.weights.get(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigRational)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// A value of `P`. Within `[-1, 1]` for every space [`make_space`] accepts;
/// fault-injected spaces may leave that range, which the validator reports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedValue(BigRational);

impl ExtendedValue {
    pub fn new(value: BigRational) -> Self {
        ExtendedValue(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        approximate(&self.0)
    }

    pub fn is_within_bounds(&self) -> bool {
        self.0 >= -BigRational::one() && self.0 <= BigRational::one()
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The triad `(Ω, F, P)` over a finite positive ground set.
#[derive(Debug, Clone)]
pub struct ExtendedSpace {
    ground: GroundSet,
    fplus: EventFamily,
    fminus: EventFamily,
    f: EventFamily,
    weights: BTreeMap<Label, BigRational>,
    overrides: BTreeMap<Event, BigRational>,
    fault_injected: bool,
}

/// Validates the weights and the positive algebra, then derives `F⁻` and
/// `F`.
pub fn make_space(
    ground: GroundSet,
    weights: WeightMap,
    fplus: EventFamily,
) -> Result<ExtendedSpace, SpaceError> {
    for label in weights.weights.keys() {
        if !ground.contains(label) {
            return Err(SpaceError::Schema(format!(
                "weight given for unknown label `{label}`"
            )));
        }
    }
    if let Some(label) = ground.labels().iter().find(|l| weights.get(l).is_none()) {
        return Err(SpaceError::Schema(format!("no weight for label `{label}`")));
    }

    let omega_plus = ground.positive();
    if let Some(member) = fplus.iter().find(|m| !m.is_subset(&omega_plus)) {
        return Err(SpaceError::Algebra(format!(
            "member {} is not a subset of the positive ground set",
            member.braced()
        )));
    }
    if !fplus.contains(&omega_plus) {
        return Err(SpaceError::Algebra(
            "the positive ground set is not a member".to_string(),
        ));
    }
    let (algebra, _) = is_set_algebra(&fplus)?;
    if !algebra {
        return Err(SpaceError::Algebra(
            "not closed under intersection and symmetric difference".to_string(),
        ));
    }

    let fplus = fplus.with_kind(FamilyKind::PositiveAlgebra);
    let fminus = mirror_family(&fplus);
    let f = compose_f(&fplus)?;
    Ok(ExtendedSpace {
        ground,
        fplus,
        fminus,
        f,
        weights: weights.weights,
        overrides: BTreeMap::new(),
        fault_injected: false,
    })
}

impl ExtendedSpace {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `F⁺`.
    pub fn fplus(&self) -> &EventFamily {
        &self.fplus
    }

    /// `F⁻`.
    pub fn fminus(&self) -> &EventFamily {
        &self.fminus
    }

    /// `F`.
    pub fn f(&self) -> &EventFamily {
        &self.f
    }

    pub fn weight(&self, label: &Label) -> Option<&BigRational> {
        self.weights.get(label)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Label, &BigRational)> {
        self.weights.iter()
    }

    pub fn is_fault_injected(&self) -> bool {
        self.fault_injected
    }

    /// Whether `F⁺` is also closed under complement in `Ω⁺`.
    pub fn fplus_is_field(&self) -> bool {
        is_set_field(&self.fplus, &self.ground.positive()).unwrap_or(false)
    }

    /// `P(A)` for `A ∈ F`.
    pub fn eval_event(&self, event: &Event) -> Result<ExtendedValue, SpaceError> {
        if !self.f.contains(event) {
            return Err(SpaceError::NotMeasurable(event.clone()));
        }
        if let Some(value) = self.overrides.get(event) {
            return Ok(ExtendedValue(value.clone()));
        }
        Ok(ExtendedValue(self.signed_mass(event.iter())))
    }

    /// `P` of a draft, evaluated after normalization.
    pub fn eval_draft(&self, draft: &RawEventDraft) -> Result<ExtendedValue, SpaceError> {
        self.eval_event(&normalize(draft))
    }

    /// Signed weight sum over raw atoms, with no membership test, no
    /// annihilation and no overrides. Atoms outside the ground set count 0.
    pub fn signed_mass<'a, I>(&self, atoms: I) -> BigRational
    where
        I: IntoIterator<Item = &'a SignedAtom>,
    {
        atoms.into_iter().fold(BigRational::zero(), |acc, atom| {
            match self.weights.get(atom.label()) {
                Some(w) if atom.is_positive() => acc + w,
                Some(w) => acc - w,
                None => acc,
            }
        })
    }

    /// Fault hook: forces `P(event) := value`.
    pub fn with_event_override(mut self, event: Event, value: BigRational) -> Self {
        self.overrides.insert(event, value);
        self.fault_injected = true;
        self
    }

    /// Fault hook: sets an atom weight without any validation.
    pub fn with_atom_weight(mut self, label: &Label, value: BigRational) -> Self {
        self.weights.insert(label.clone(), value);
        self.fault_injected = true;
        self
    }
}
