//! Signed atoms, events with annihilation, and the event-level algebra.
//!
//! An [`Event`] is a finite set of [`SignedAtom`]s in which no label occurs
//! with both signs. A [`RawEventDraft`] is the unnormalized input form: it may
//! hold duplicates and annihilating pairs, and [`normalize`] turns it into an
//! event by collapsing duplicates and then removing both members of every
//! opposite-sign pair.
//!
//! Two equalities are in play. Literal equality (`==` on [`Event`]) is plain
//! set equality. Annihilated equality ([`annihilated_equals`]) compares after
//! normalization, so `[a, -a]` and `{}` are annihilated-equal.
//!
//! ```
//! use epspace::events::{annihilating_union, Event};
//!
//! let x: Event = "a,-b".parse().unwrap();
//! let y: Event = "b,c".parse().unwrap();
//! assert_eq!(annihilating_union(&x, &y).to_string(), "a,c");
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::EventError;

/// Identifier of an elementary event. Matches `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(text: &str) -> Result<Self, EventError> {
        let mut chars = text.chars();
        let valid = match chars.next() {
            Some(first) if first.is_ascii_alphabetic() || first == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if valid {
            Ok(Label(Arc::from(text)))
        } else {
            Err(EventError::InvalidLabel(text.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Label {
    type Err = EventError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::new(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// An elementary event `w` or its antievent `-w`.
///
/// Atoms order by label first and sign second, so `a < -a < b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedAtom {
    label: Label,
    sign: Sign,
}

impl SignedAtom {
    pub fn new(label: Label, sign: Sign) -> Self {
        SignedAtom { label, sign }
    }

    pub fn positive(label: Label) -> Self {
        SignedAtom::new(label, Sign::Positive)
    }

    pub fn negative(label: Label) -> Self {
        SignedAtom::new(label, Sign::Negative)
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    /// The graded involution: `w -> -w`, `-w -> w`.
    pub fn negate(&self) -> SignedAtom {
        SignedAtom::new(self.label.clone(), self.sign.flip())
    }
}

impl fmt::Display for SignedAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "{}", self.label),
            Sign::Negative => write!(f, "-{}", self.label),
        }
    }
}

impl FromStr for SignedAtom {
    type Err = EventError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.strip_prefix('-') {
            Some(rest) => Ok(SignedAtom::negative(Label::new(rest.trim())?)),
            None => Ok(SignedAtom::positive(Label::new(s)?)),
        }
    }
}

/// A finite set of signed atoms with no label carrying both signs.
///
/// Atoms are kept sorted and deduplicated. Events order by size first and
/// then lexicographically by their atom sequence; this is the enumeration
/// order used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Event {
    atoms: Vec<SignedAtom>,
}

impl Event {
    pub fn empty() -> Self {
        Event::default()
    }

    /// Builds an event from arbitrary atoms, collapsing duplicates.
    /// Fails if some label occurs with both signs.
    pub fn try_from_atoms<I>(atoms: I) -> Result<Self, EventError>
    where
        I: IntoIterator<Item = SignedAtom>,
    {
        let mut atoms: Vec<SignedAtom> = atoms.into_iter().collect();
        atoms.sort();
        atoms.dedup();
        if let Some(label) = first_conflict(&atoms) {
            return Err(EventError::ConflictingAtoms(label.clone()));
        }
        Ok(Event { atoms })
    }

    /// Event holding `labels` with the given sign.
    pub fn from_labels<'a, I>(sign: Sign, labels: I) -> Self
    where
        I: IntoIterator<Item = &'a Label>,
    {
        let mut atoms: Vec<SignedAtom> = labels
            .into_iter()
            .map(|l| SignedAtom::new(l.clone(), sign))
            .collect();
        atoms.sort();
        atoms.dedup();
        Event { atoms }
    }

    /// Caller guarantees `atoms` is sorted, deduplicated and conflict-free.
    fn from_sorted(atoms: Vec<SignedAtom>) -> Self {
        debug_assert!(atoms.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(first_conflict(&atoms).is_none());
        Event { atoms }
    }

    pub fn atoms(&self) -> &[SignedAtom] {
        &self.atoms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedAtom> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, atom: &SignedAtom) -> bool {
        self.atoms.binary_search(atom).is_ok()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.atoms.iter().map(SignedAtom::label)
    }

    /// True when every atom is positive (the empty event included).
    pub fn is_positive(&self) -> bool {
        self.atoms.iter().all(SignedAtom::is_positive)
    }

    /// True when every atom is negative (the empty event included).
    pub fn is_negative(&self) -> bool {
        self.atoms.iter().all(|a| !a.is_positive())
    }

    pub fn is_sign_homogeneous(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        intersect_sorted(&self.atoms, &other.atoms).len() == self.atoms.len()
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.atoms.len() && j < other.atoms.len() {
            match self.atoms[i].cmp(&other.atoms[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// `X⁺`: the positive atoms.
    pub fn positive_part(&self) -> Event {
        Event::from_sorted(
            self.atoms
                .iter()
                .filter(|a| a.is_positive())
                .cloned()
                .collect(),
        )
    }

    /// `X⁻`: the negative atoms.
    pub fn negative_part(&self) -> Event {
        Event::from_sorted(
            self.atoms
                .iter()
                .filter(|a| !a.is_positive())
                .cloned()
                .collect(),
        )
    }

    /// Plain set union, without annihilation. Fails when the union would
    /// hold some label with both signs.
    pub fn try_union(&self, other: &Event) -> Result<Event, EventError> {
        let atoms = union_sorted(&self.atoms, &other.atoms);
        match first_conflict(&atoms) {
            Some(label) => Err(EventError::ConflictingAtoms(label.clone())),
            None => Ok(Event::from_sorted(atoms)),
        }
    }

    /// Plain symmetric difference. Fails like [`Event::try_union`].
    pub fn try_symmetric_difference(&self, other: &Event) -> Result<Event, EventError> {
        let left = difference_sorted(&self.atoms, &other.atoms);
        let right = difference_sorted(&other.atoms, &self.atoms);
        let atoms = union_sorted(&left, &right);
        match first_conflict(&atoms) {
            Some(label) => Err(EventError::ConflictingAtoms(label.clone())),
            None => Ok(Event::from_sorted(atoms)),
        }
    }

    /// Text form wrapped in braces, e.g. `{a,-b}` or `{}`.
    pub fn braced(&self) -> String {
        if self.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", self)
        }
    }
}

impl Ord for Event {
    fn cmp(&self, other: &Self) -> Ordering {
        self.atoms
            .len()
            .cmp(&other.atoms.len())
            .then_with(|| self.atoms.cmp(&other.atoms))
    }
}

impl PartialOrd for Event {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("{}");
        }
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl FromStr for Event {
    type Err = EventError;

    /// Parses `a,-b,c`, optionally wrapped in braces. The empty text and
    /// `{}` both denote the empty event.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Event::try_from_atoms(parse_atoms(s)?)
    }
}

impl<'a> IntoIterator for &'a Event {
    type Item = &'a SignedAtom;
    type IntoIter = std::slice::Iter<'a, SignedAtom>;

    fn into_iter(self) -> Self::IntoIter {
        self.atoms.iter()
    }
}

/// Pre-normalization input: any sequence of atoms, duplicates and
/// annihilating pairs allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawEventDraft {
    entries: Vec<SignedAtom>,
}

impl RawEventDraft {
    pub fn new(entries: Vec<SignedAtom>) -> Self {
        RawEventDraft { entries }
    }

    /// Concatenation of the atoms of several events.
    pub fn concat<'a, I>(events: I) -> Self
    where
        I: IntoIterator<Item = &'a Event>,
    {
        RawEventDraft {
            entries: events
                .into_iter()
                .flat_map(|e| e.atoms.iter().cloned())
                .collect(),
        }
    }

    pub fn entries(&self) -> &[SignedAtom] {
        &self.entries
    }

    pub fn push(&mut self, atom: SignedAtom) {
        self.entries.push(atom);
    }
}

impl From<&Event> for RawEventDraft {
    fn from(event: &Event) -> Self {
        RawEventDraft::new(event.atoms.clone())
    }
}

impl Extend<SignedAtom> for RawEventDraft {
    fn extend<T: IntoIterator<Item = SignedAtom>>(&mut self, iter: T) {
        self.entries.extend(iter);
    }
}

impl FromStr for RawEventDraft {
    type Err = EventError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(RawEventDraft::new(parse_atoms(s)?))
    }
}

impl fmt::Display for RawEventDraft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, atom) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{atom}")?;
        }
        f.write_str("]")
    }
}

/// Anything that can be brought to a normalized [`Event`].
pub trait Normalize {
    fn normalized(&self) -> Event;
}

impl Normalize for Event {
    fn normalized(&self) -> Event {
        self.clone()
    }
}

impl Normalize for RawEventDraft {
    fn normalized(&self) -> Event {
        normalize(self)
    }
}

/// `-X`: flips the sign of every atom.
pub fn negate_event(x: &Event) -> Event {
    // labels are unique within an event, so flipping signs keeps the order
    Event::from_sorted(x.atoms.iter().map(SignedAtom::negate).collect())
}

/// `(X⁺, X⁻)`.
pub fn split_event(x: &Event) -> (Event, Event) {
    (x.positive_part(), x.negative_part())
}

/// Collapses duplicates, then removes both members of every opposite-sign
/// pair.
pub fn normalize(draft: &RawEventDraft) -> Event {
    let mut atoms = draft.entries.clone();
    atoms.sort();
    atoms.dedup();
    let mut kept = Vec::with_capacity(atoms.len());
    let mut i = 0;
    while i < atoms.len() {
        if i + 1 < atoms.len() && atoms[i].label == atoms[i + 1].label {
            i += 2;
        } else {
            kept.push(atoms[i].clone());
            i += 1;
        }
    }
    Event::from_sorted(kept)
}

/// Union with annihilation: `X + Y ≡ (X ∪ Y) \ [(X ∩ -Y) ∪ (-X ∩ Y)]`.
pub fn annihilating_union(x: &Event, y: &Event) -> Event {
    let neg_x = negate_event(x);
    let neg_y = negate_event(y);
    let union = union_sorted(&x.atoms, &y.atoms);
    let annihilated = union_sorted(
        &intersect_sorted(&x.atoms, &neg_y.atoms),
        &intersect_sorted(&neg_x.atoms, &y.atoms),
    );
    Event::from_sorted(difference_sorted(&union, &annihilated))
}

pub fn event_intersection(a: &Event, b: &Event) -> Event {
    Event::from_sorted(intersect_sorted(&a.atoms, &b.atoms))
}

pub fn event_difference(a: &Event, b: &Event) -> Event {
    Event::from_sorted(difference_sorted(&a.atoms, &b.atoms))
}

/// The `=` relation: equality after normalization.
pub fn annihilated_equals<L, R>(x: &L, y: &R) -> bool
where
    L: Normalize + ?Sized,
    R: Normalize + ?Sized,
{
    x.normalized() == y.normalized()
}

fn parse_atoms(s: &str) -> Result<Vec<SignedAtom>, EventError> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| {
            if item.trim().is_empty() {
                Err(EventError::EmptyEntry(s.to_string()))
            } else {
                item.parse()
            }
        })
        .collect()
}

fn first_conflict(sorted: &[SignedAtom]) -> Option<&Label> {
    sorted
        .windows(2)
        .find(|w| w[0].label == w[1].label)
        .map(|w| &w[0].label)
}

fn union_sorted(a: &[SignedAtom], b: &[SignedAtom]) -> Vec<SignedAtom> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn intersect_sorted(a: &[SignedAtom], b: &[SignedAtom]) -> Vec<SignedAtom> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn difference_sorted(a: &[SignedAtom], b: &[SignedAtom]) -> Vec<SignedAtom> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for atom in a {
        while j < b.len() && b[j] < *atom {
            j += 1;
        }
        if j >= b.len() || b[j] != *atom {
            out.push(atom.clone());
        }
    }
    out
}
