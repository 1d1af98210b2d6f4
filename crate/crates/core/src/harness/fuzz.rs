//! Deterministic random spaces for fuzzing the validator.
//!
//! Trial `i` of seed `s` draws from a ChaCha8 stream keyed by `(s, i)`, so
//! any single trial can be reproduced without replaying the others.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{Coverage, OVERFLOW_SAMPLES, PAIR_BUDGET};
use crate::error::HarnessError;
use crate::events::{Event, Label, Sign};
use crate::harness::enumerate::ENUMERATION_CEILING;
use crate::measure::{make_space, ExtendedSpace, WeightMap};
use crate::report::ValidationReport;
use crate::structures::{generate_algebra, EventFamily, GroundSet};
use crate::validate::{check_kolmogorov_restriction, validate_axioms, ValidationMode};

/// Atom weights are `k / Σk` with each `k` drawn from `0..=MAX_WEIGHT_UNITS`.
pub const MAX_WEIGHT_UNITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub atoms: usize,
    pub trials: usize,
    pub seed: u64,
    /// Always use the powerset algebra instead of letting the generator pick.
    pub powerset_only: bool,
}

impl FuzzConfig {
    pub fn new(atoms: usize, trials: usize, seed: u64) -> Result<Self, HarnessError> {
        if atoms == 0 || atoms > ENUMERATION_CEILING {
            return Err(HarnessError::CeilingExceeded {
                atoms,
                ceiling: ENUMERATION_CEILING,
            });
        }
        if trials == 0 {
            return Err(HarnessError::Config(
                "trials must be at least 1".to_string(),
            ));
        }
        Ok(FuzzConfig {
            atoms,
            trials,
            seed,
            powerset_only: false,
        })
    }

    pub fn powerset_only(mut self, on: bool) -> Self {
        self.powerset_only = on;
        self
    }
}

/// Builds trial `trial_index` of `config`.
pub fn random_space(config: &FuzzConfig, trial_index: usize) -> ExtendedSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial_index as u64);

    let labels: Vec<Label> = (1..=config.atoms)
        .map(|i| Label::new(&format!("w{i}")).expect("generated labels are valid"))
        .collect();
    let mut units: Vec<u32> = labels
        .iter()
        .map(|_| rng.gen_range(0..=MAX_WEIGHT_UNITS))
        .collect();
    if units.iter().all(|&u| u == 0) {
        units[0] = 1;
    }
    let total: u32 = units.iter().sum();
    let weights: BTreeMap<Label, BigRational> = labels
        .iter()
        .zip(&units)
        .map(|(l, &u)| {
            (
                l.clone(),
                BigRational::new(BigInt::from(u), BigInt::from(total)),
            )
        })
        .collect();

    let ground = GroundSet::new(labels.clone()).expect("generated labels are distinct");
    let use_powerset = rng.gen_bool(0.5) || config.powerset_only;
    let fplus = if use_powerset {
        EventFamily::powerset(&ground).expect("atoms are within the ceiling")
    } else {
        let count = rng.gen_range(0..=2);
        let generators: Vec<Event> = (0..count)
            .map(|_| {
                let picked = labels.iter().filter(|_| rng.gen_bool(0.5));
                Event::from_labels(Sign::Positive, picked)
            })
            .collect();
        generate_algebra(&EventFamily::collection(generators), &ground.positive())
            .expect("generators lie inside the ground set")
    };
    make_space(
        ground,
        WeightMap::new(weights).expect("weights sum to one by construction"),
        fplus,
    )
    .expect("generated spaces are valid")
}

/// One fuzz trial: the space and its axiom plus Kolmogorov report.
#[derive(Debug, Clone)]
pub struct FuzzTrial {
    pub index: usize,
    pub space: ExtendedSpace,
    pub report: ValidationReport,
}

impl FuzzTrial {
    /// `# trial <i> atoms=<n> algebra=<powerset|k members> weights=<l:w,...>`
    pub fn header(&self) -> String {
        let fplus = self.space.fplus();
        let powerset = fplus.len() == 1usize << self.space.ground().len();
        let algebra = if powerset {
            "powerset".to_string()
        } else {
            format!("{}-members", fplus.len())
        };
        let mut weights = String::new();
        for (i, (label, w)) in self.space.weights().enumerate() {
            if i > 0 {
                weights.push(',');
            }
            let _ = write!(weights, "{label}:{w}");
        }
        format!(
            "# trial {} atoms={} algebra={} weights={}",
            self.index,
            self.space.ground().len(),
            algebra,
            weights
        )
    }
}

/// Validation mode used for a trial: exhaustive while `|F|²` fits the pair
/// budget, seeded sampling otherwise.
pub fn trial_mode(space: &ExtendedSpace, seed: u64, trial_index: usize) -> ValidationMode {
    let n = space.f().len();
    match Coverage::within_budget(n * n, PAIR_BUDGET) {
        Coverage::Exhaustive => ValidationMode::Exhaustive,
        Coverage::Sampled { .. } => ValidationMode::Sampled {
            trials: OVERFLOW_SAMPLES,
            seed: seed.wrapping_add(trial_index as u64),
        },
    }
}

/// Runs the trials across scoped threads and returns them in trial order.
pub fn run_fuzz(config: &FuzzConfig) -> Vec<FuzzTrial> {
    let run_one = |index: usize| {
        let space = random_space(config, index);
        let mut report = validate_axioms(&space, trial_mode(&space, config.seed, index));
        report.extend(check_kolmogorov_restriction(&space));
        FuzzTrial {
            index,
            space,
            report,
        }
    };
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(config.trials);
    if workers <= 1 {
        return (0..config.trials).map(run_one).collect();
    }
    let mut slots: Vec<Option<FuzzTrial>> = vec![None; config.trials];
    std::thread::scope(|scope| {
        let chunks: Vec<_> = slots.chunks_mut(config.trials.div_ceil(workers)).collect();
        let mut start = 0;
        for chunk in chunks {
            let base = start;
            start += chunk.len();
            let run_one = &run_one;
            scope.spawn(move || {
                for (offset, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(run_one(base + offset));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|t| t.expect("every trial slot is filled"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn deterministic_per_trial() {
        let config = FuzzConfig::new(4, 10, 99).unwrap();
        for i in 0..10 {
            let a = random_space(&config, i);
            let b = random_space(&config, i);
            assert_eq!(a.ground(), b.ground());
            assert_eq!(a.fplus(), b.fplus());
            assert!(a.weights().eq(b.weights()));
        }
    }

    #[test]
    fn weights_sum_to_one_and_algebras_vary() {
        let config = FuzzConfig::new(5, 40, 3).unwrap();
        let mut coarse = 0;
        for i in 0..40 {
            let s = random_space(&config, i);
            let total: BigRational = s.weights().map(|(_, w)| w.clone()).sum();
            assert!(total.is_one());
            if s.fplus().len() < 32 {
                coarse += 1;
            }
        }
        assert!(coarse > 0);
        let powerset = config.powerset_only(true);
        assert!((0..40).all(|i| random_space(&powerset, i).fplus().len() == 32));
    }

    #[test]
    fn config_bounds() {
        assert!(FuzzConfig::new(0, 1, 0).is_err());
        assert!(FuzzConfig::new(9, 1, 0).is_err());
        assert!(FuzzConfig::new(3, 0, 0).is_err());
        assert!(FuzzConfig::new(8, 1, 0).is_ok());
    }

    #[test]
    fn fuzz_run_passes_and_keeps_order() {
        let config = FuzzConfig::new(3, 12, 5).unwrap();
        let trials = run_fuzz(&config);
        assert_eq!(trials.len(), 12);
        for (i, t) in trials.iter().enumerate() {
            assert_eq!(t.index, i);
            assert!(t.report.all_passed(), "{}", t.report.to_text());
        }
    }
}
