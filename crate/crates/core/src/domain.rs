//! Shared search machinery for the validator and the theorem suite: the
//! materialized event lists of a space, cached values of `P`, and
//! exhaustive or seeded-sampled searches over pairs and triples that return
//! the least failing tuple.

use std::collections::HashMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::events::Event;
use crate::measure::ExtendedSpace;
use crate::report::Counterexample;

/// Pair searches over more tuples than this are sampled.
pub const PAIR_BUDGET: usize = 4_000_000;
/// Triple searches over more tuples than this are sampled.
pub const TRIPLE_BUDGET: usize = 2_000_000;
/// Sample count used when a budget is exceeded.
pub const OVERFLOW_SAMPLES: usize = 200_000;
pub const OVERFLOW_SEED: u64 = 0x005e_ed0f_e7e7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled { trials: usize, seed: u64 },
}

impl Coverage {
    /// Exhaustive when `tuples` fits the budget.
    pub fn within_budget(tuples: usize, budget: usize) -> Coverage {
        if tuples <= budget {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled {
                trials: OVERFLOW_SAMPLES,
                seed: OVERFLOW_SEED,
            }
        }
    }

    pub fn note(&self, what: &str) -> Option<String> {
        match self {
            Coverage::Exhaustive => None,
            Coverage::Sampled { trials, seed } => {
                Some(format!("sampled {trials} {what} with seed {seed}"))
            }
        }
    }
}

/// The event lists of a space in enumeration order, with `P` cached.
pub struct Domain<'a> {
    pub space: &'a ExtendedSpace,
    pub events: Vec<&'a Event>,
    pub fplus: Vec<&'a Event>,
    pub fminus: Vec<&'a Event>,
    values: HashMap<&'a Event, BigRational>,
}

impl<'a> Domain<'a> {
    pub fn new(space: &'a ExtendedSpace) -> Self {
        let events: Vec<&Event> = space.f().iter().collect();
        let values = events
            .iter()
            .map(|e| {
                let v = space
                    .eval_event(e)
                    .expect("members of F are measurable")
                    .into_rational();
                (*e, v)
            })
            .collect();
        Domain {
            space,
            events,
            fplus: space.fplus().iter().collect(),
            fminus: space.fminus().iter().collect(),
            values,
        }
    }

    /// `P(event)`. Panics when `event ∉ F`; callers only pass members.
    pub fn p(&self, event: &Event) -> BigRational {
        match self.values.get(event) {
            Some(v) => v.clone(),
            None => self
                .space
                .eval_event(event)
                .unwrap_or_else(|e| panic!("{e}"))
                .into_rational(),
        }
    }

    pub fn in_f(&self, event: &Event) -> bool {
        self.values.contains_key(event)
    }
}

/// First failure over single items.
pub fn first_failure<T, F>(items: &[T], check: F) -> Option<Counterexample>
where
    F: FnMut(&T) -> Option<Counterexample>,
{
    items.iter().find_map(check)
}

/// Least failing `(i, j)` over ordered pairs.
pub fn least_pair_failure<T, F>(
    items: &[T],
    coverage: Coverage,
    mut check: F,
) -> Option<Counterexample>
where
    F: FnMut(&T, &T) -> Option<Counterexample>,
{
    let n = items.len();
    if n == 0 {
        return None;
    }
    match coverage {
        Coverage::Exhaustive => {
            for x in items {
                for y in items {
                    if let Some(cx) = check(x, y) {
                        return Some(cx);
                    }
                }
            }
            None
        }
        Coverage::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best: Option<((usize, usize), Counterexample)> = None;
            for _ in 0..trials {
                let key = (rng.gen_range(0..n), rng.gen_range(0..n));
                if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                if let Some(cx) = check(&items[key.0], &items[key.1]) {
                    best = Some((key, cx));
                }
            }
            best.map(|(_, cx)| cx)
        }
    }
}

/// Least failing `(i, j, k)` over ordered triples.
pub fn least_triple_failure<T, F>(
    items: &[T],
    coverage: Coverage,
    mut check: F,
) -> Option<Counterexample>
where
    F: FnMut(&T, &T, &T) -> Option<Counterexample>,
{
    let n = items.len();
    if n == 0 {
        return None;
    }
    match coverage {
        Coverage::Exhaustive => {
            for x in items {
                for y in items {
                    for z in items {
                        if let Some(cx) = check(x, y, z) {
                            return Some(cx);
                        }
                    }
                }
            }
            None
        }
        Coverage::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best: Option<((usize, usize, usize), Counterexample)> = None;
            for _ in 0..trials {
                let key = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                if let Some(cx) = check(&items[key.0], &items[key.1], &items[key.2]) {
                    best = Some((key, cx));
                }
            }
            best.map(|(_, cx)| cx)
        }
    }
}
