//! Independent oracles shared by the integration tests. Events are modelled
//! here as `(pos, neg)` bitmasks over label indices so none of the library's
//! merge routines are reused.

#![allow(dead_code)]

use std::collections::BTreeSet;

use epspace::events::{Event, Label, Sign, SignedAtom};
use epspace::rational::ratio;
use epspace::structures::{EventFamily, GroundSet};
use epspace::{make_space, ExtendedSpace, WeightMap};
use num_rational::BigRational;
use num_traits::Zero;

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub fn labels(n: usize) -> Vec<Label> {
    NAMES[..n].iter().map(|l| Label::new(l).unwrap()).collect()
}

pub fn ground(n: usize) -> GroundSet {
    GroundSet::new(labels(n)).unwrap()
}

/// Powerset space over the first `weights.len()` names with weights `n/d`.
pub fn powerset_space(weights: &[(i64, i64)]) -> ExtendedSpace {
    let g = ground(weights.len());
    let w = WeightMap::new(
        labels(weights.len())
            .into_iter()
            .zip(weights)
            .map(|(l, (n, d))| (l, ratio(*n, *d)))
            .collect(),
    )
    .unwrap();
    let fplus = EventFamily::powerset(&g).unwrap();
    make_space(g, w, fplus).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mask {
    pub pos: u32,
    pub neg: u32,
}

impl Mask {
    pub fn to_event(self, n: usize) -> Event {
        let names = labels(n);
        let atoms = (0..n).flat_map(|i| {
            let mut v = Vec::new();
            if self.pos >> i & 1 == 1 {
                v.push(SignedAtom::positive(names[i].clone()));
            }
            if self.neg >> i & 1 == 1 {
                v.push(SignedAtom::negative(names[i].clone()));
            }
            v
        });
        Event::try_from_atoms(atoms).unwrap()
    }

    pub fn from_event(event: &Event) -> Mask {
        let mut m = Mask { pos: 0, neg: 0 };
        for atom in event.iter() {
            let i = NAMES
                .iter()
                .position(|n| *n == atom.label().as_str())
                .unwrap();
            match atom.sign() {
                Sign::Positive => m.pos |= 1 << i,
                Sign::Negative => m.neg |= 1 << i,
            }
        }
        m
    }

    /// Union followed by removal of every label present with both signs.
    pub fn annihilating_union(self, other: Mask) -> Mask {
        let pos = self.pos | other.pos;
        let neg = self.neg | other.neg;
        let both = pos & neg;
        Mask {
            pos: pos & !both,
            neg: neg & !both,
        }
    }
}

/// All `3^n` events over `n` labels: each label absent, positive or negative.
pub fn all_events(n: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    for code in 0..3u32.pow(n as u32) {
        let mut m = Mask { pos: 0, neg: 0 };
        let mut c = code;
        for i in 0..n {
            match c % 3 {
                1 => m.pos |= 1 << i,
                2 => m.neg |= 1 << i,
                _ => {}
            }
            c /= 3;
        }
        out.push(m);
    }
    out
}

/// `P` by direct summation of atom weights.
pub fn summed_value(space: &ExtendedSpace, event: &Event) -> BigRational {
    let mut total = BigRational::zero();
    for atom in event.iter() {
        let w = space.weight(atom.label()).unwrap().clone();
        if atom.is_positive() {
            total += w;
        } else {
            total -= w;
        }
    }
    total
}

/// Least family of subsets of `0..n` (as bitmasks) containing `generators`,
/// the empty set and the full set, closed under union and difference, found
/// by iterating to a fixed point.
pub fn brute_force_algebra(generators: &[u32], n: usize) -> BTreeSet<u32> {
    let full = (1u32 << n) - 1;
    let mut family: BTreeSet<u32> = generators.iter().copied().collect();
    family.insert(0);
    family.insert(full);
    loop {
        let current: Vec<u32> = family.iter().copied().collect();
        let before = family.len();
        for &x in &current {
            for &y in &current {
                family.insert(x | y);
                family.insert(x & !y);
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

/// Is `family` closed under union and difference and does it hold the full set?
pub fn is_algebra_mask(family: &BTreeSet<u32>, n: usize) -> bool {
    let full = (1u32 << n) - 1;
    family.contains(&full)
        && family.iter().all(|&x| {
            family
                .iter()
                .all(|&y| family.contains(&(x | y)) && family.contains(&(x & !y)))
        })
}

pub fn positive_mask_event(mask: u32, n: usize) -> Event {
    Mask { pos: mask, neg: 0 }.to_event(n)
}

pub fn family_masks(family: &EventFamily) -> BTreeSet<u32> {
    family.iter().map(|e| Mask::from_event(e).pos).collect()
}
