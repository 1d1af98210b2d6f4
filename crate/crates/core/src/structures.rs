//! Finite set rings, set algebras and set fields, closure generation, and
//! the construction of the negative mirror `F⁻` and composed family `F`
//! from a positive algebra `F⁺`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{SpaceError, StructureError};
use crate::events::{
    annihilating_union, event_difference, event_intersection, negate_event, Event, Label, Sign,
};

/// Largest universe for which algebras are materialized explicitly.
pub const MATERIALIZATION_CEILING: usize = 12;

/// The positive ground set `Ω⁺`. `Ω⁻` is implied by negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<Label>,
}

impl GroundSet {
    /// Labels are stored sorted. Duplicates and the empty set are rejected.
    pub fn new<I>(labels: I) -> Result<Self, SpaceError>
    where
        I: IntoIterator<Item = Label>,
    {
        let mut labels: Vec<Label> = labels.into_iter().collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(SpaceError::DuplicateLabel(w[0].clone()));
        }
        if labels.is_empty() {
            return Err(SpaceError::EmptyGround);
        }
        Ok(GroundSet { labels })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.labels.binary_search(label).is_ok()
    }

    /// `Ω⁺` as an event.
    pub fn positive(&self) -> Event {
        Event::from_labels(Sign::Positive, &self.labels)
    }

    /// `Ω⁻ ≡ -Ω⁺` as an event.
    pub fn negative(&self) -> Event {
        Event::from_labels(Sign::Negative, &self.labels)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    PlainCollection,
    PositiveAlgebra,
    NegativeMirror,
    ComposedF,
}

/// A finite collection of events, iterated in event order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventFamily {
    members: BTreeSet<Event>,
    kind: FamilyKind,
}

impl EventFamily {
    pub fn new<I>(members: I, kind: FamilyKind) -> Self
    where
        I: IntoIterator<Item = Event>,
    {
        EventFamily {
            members: members.into_iter().collect(),
            kind,
        }
    }

    pub fn collection<I>(members: I) -> Self
    where
        I: IntoIterator<Item = Event>,
    {
        EventFamily::new(members, FamilyKind::PlainCollection)
    }

    /// All subsets of `Ω⁺`.
    pub fn powerset(ground: &GroundSet) -> Result<Self, StructureError> {
        if ground.len() > MATERIALIZATION_CEILING {
            return Err(StructureError::TooLarge {
                atoms: ground.len(),
                ceiling: MATERIALIZATION_CEILING,
            });
        }
        let labels = ground.labels();
        let members = (0u32..(1 << labels.len())).map(|mask| {
            Event::from_labels(
                Sign::Positive,
                labels
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, l)| l),
            )
        });
        Ok(EventFamily::new(members, FamilyKind::PositiveAlgebra))
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: FamilyKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn members(&self) -> &BTreeSet<Event> {
        &self.members
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, Event> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, event: &Event) -> bool {
        self.members.contains(event)
    }

    /// Sorted text forms of the members.
    pub fn to_texts(&self) -> Vec<String> {
        self.members.iter().map(Event::to_string).collect()
    }
}

impl<'a> IntoIterator for &'a EventFamily {
    type Item = &'a Event;
    type IntoIter = std::collections::btree_set::Iter<'a, Event>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

fn require_homogeneous(family: &EventFamily) -> Result<(), StructureError> {
    match family.iter().find(|e| !e.is_sign_homogeneous()) {
        Some(e) => Err(StructureError::MixedSign(e.clone())),
        None => Ok(()),
    }
}

/// Closed under intersection (R1) and symmetric difference (R2).
pub fn is_set_ring(family: &EventFamily) -> Result<bool, StructureError> {
    require_homogeneous(family)?;
    for a in family {
        for b in family {
            if !family.contains(&event_intersection(a, b)) {
                return Ok(false);
            }
            match a.try_symmetric_difference(b) {
                Ok(d) if family.contains(&d) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// A ring with a unit `E` such that `A ∩ E = A` for every member `A`.
/// Returns the unit when one exists.
pub fn is_set_algebra(family: &EventFamily) -> Result<(bool, Option<Event>), StructureError> {
    if !is_set_ring(family)? {
        return Ok((false, None));
    }
    let unit = family
        .iter()
        .find(|e| family.iter().all(|a| event_intersection(a, e) == *a))
        .cloned();
    Ok((unit.is_some(), unit))
}

/// A set algebra whose unit is `universe` and which is closed under
/// complement within `universe`.
pub fn is_set_field(family: &EventFamily, universe: &Event) -> Result<bool, StructureError> {
    if let Some(member) = family.iter().find(|m| !m.is_subset(universe)) {
        return Err(StructureError::NotInUniverse {
            member: member.clone(),
            universe: universe.clone(),
        });
    }
    let (algebra, unit) = is_set_algebra(family)?;
    if !algebra || unit.as_ref() != Some(universe) {
        return Ok(false);
    }
    Ok(family
        .iter()
        .all(|a| family.contains(&complement(universe, a))))
}

/// `C_X A = X \ A`.
pub fn complement(universe: &Event, a: &Event) -> Event {
    event_difference(universe, a)
}

/// `C_Ω A ≡ C_Ω⁺ A⁺ + C_Ω⁻ A⁻` for an event of the composed family.
pub fn omega_complement(ground: &GroundSet, a: &Event) -> Event {
    annihilating_union(
        &complement(&ground.positive(), &a.positive_part()),
        &complement(&ground.negative(), &a.negative_part()),
    )
}

/// The least family containing `generators` and `universe` that is closed
/// under union, intersection and difference.
///
/// Built from the partition of `universe` into blocks of atoms that no
/// generator separates; the algebra is every union of blocks.
pub fn generate_algebra(
    generators: &EventFamily,
    universe: &Event,
) -> Result<EventFamily, StructureError> {
    if let Some(member) = generators.iter().find(|m| !m.is_subset(universe)) {
        return Err(StructureError::NotInUniverse {
            member: member.clone(),
            universe: universe.clone(),
        });
    }
    let mut blocks: BTreeMap<Vec<bool>, Vec<_>> = BTreeMap::new();
    for atom in universe {
        let signature: Vec<bool> = generators.iter().map(|g| g.contains(atom)).collect();
        blocks.entry(signature).or_default().push(atom.clone());
    }
    let blocks: Vec<Vec<_>> = blocks.into_values().collect();
    if blocks.len() > MATERIALIZATION_CEILING {
        return Err(StructureError::TooLarge {
            atoms: blocks.len(),
            ceiling: MATERIALIZATION_CEILING,
        });
    }
    let members = (0u32..(1 << blocks.len())).map(|mask| {
        let atoms = blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .flat_map(|(_, b)| b.iter().cloned());
        Event::try_from_atoms(atoms).expect("subsets of a valid universe are valid events")
    });
    let kind = if universe.is_positive() {
        FamilyKind::PositiveAlgebra
    } else {
        FamilyKind::PlainCollection
    };
    Ok(EventFamily::new(members, kind))
}

/// `F⁻ = {-A : A ∈ F⁺}`.
pub fn mirror_family(fplus: &EventFamily) -> EventFamily {
    EventFamily::new(fplus.iter().map(negate_event), FamilyKind::NegativeMirror)
}

/// `F`: every `A ∪ -B` with `A, B ∈ F⁺` and `A ∩ B ≡ ∅`.
pub fn compose_f(fplus: &EventFamily) -> Result<EventFamily, StructureError> {
    if let Some(e) = fplus.iter().find(|e| !e.is_positive()) {
        return Err(StructureError::NotPositive(e.clone()));
    }
    let mut members = BTreeSet::new();
    for a in fplus {
        for b in fplus {
            if a.is_disjoint(b) {
                let composed = a
                    .try_union(&negate_event(b))
                    .expect("disjoint positive parts never conflict");
                members.insert(composed);
            }
        }
    }
    Ok(EventFamily {
        members,
        kind: FamilyKind::ComposedF,
    })
}
