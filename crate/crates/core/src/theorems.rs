//! The theorem suite: executable checks of the derived properties of
//! extended probability spaces.
//!
//! Ids are grouped by kind: `C*` structural corollaries, `K1`..`K3` the
//! Kolmogorov axioms on `F⁺` (aggregated by `T7`), `L*` event-algebra laws,
//! `P*` properties of `P`, `T*` structural theorems. `L4a`..`L4e` are the
//! idempotence, commutativity, identity, associativity and homogeneous-union
//! laws of `+`. `T4a` is the complement decomposition and `T4b`
//! monotonicity; `P11a` is elementary additivity and `P11b` the bounds.
//!
//! Pair and triple checks are exhaustive while the tuple count fits
//! [`PAIR_BUDGET`] / [`TRIPLE_BUDGET`], and seeded-sampled beyond that; a
//! sampled entry carries a note saying so.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::domain::{
    first_failure, least_pair_failure, least_triple_failure, Coverage, Domain, PAIR_BUDGET,
    TRIPLE_BUDGET,
};
use crate::events::{
    annihilating_union, event_difference, event_intersection, negate_event, normalize, Event,
    RawEventDraft, SignedAtom,
};
use crate::measure::ExtendedSpace;
use crate::report::{CheckEntry, Counterexample, ValidationReport};
use crate::structures::{complement, is_set_algebra, is_set_field, omega_complement};
use crate::validate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check id `{0}`")]
pub struct UnknownCheck(pub String);

type Check = fn(&Domain<'_>) -> CheckEntry;

const SUITE: &[(&str, Check)] = &[
    ("C1", c1_domain_symmetry),
    ("C2", c2_element_symmetry),
    ("C3", c3_event_symmetry),
    ("C4", c4_positive_negative_overlap),
    ("C5", c5_upper_bound),
    ("K1", k1),
    ("K2", k2),
    ("K3", k3),
    ("L1", l1_involution_image),
    ("L2", l2_no_fixed_points),
    ("L3", l3_self_annihilation),
    ("L4a", l4a_idempotence),
    ("L4b", l4b_commutativity),
    ("L4c", l4c_identity),
    ("L4d", l4d_associativity),
    ("L4e", l4e_homogeneous_union),
    ("L5", l5_no_distributivity),
    ("L6", l6_intersection_split),
    ("L7", l7_difference_split),
    ("L8", l8_part_recomposition),
    ("L9", l9_union_split),
    ("L10", l10_empty_event),
    ("L11", l11_parts_disjoint),
    ("P1", p1_bijection),
    ("P2", p2_ground_disjoint),
    ("P3", p3_family_inclusions),
    ("P4", p4_positive_iff_negated_negative),
    ("P5", p5_negative_members),
    ("P6", p6_annihilated_evaluation),
    ("P7", p7_cross_negation),
    ("P8", p8_sign_antisymmetry),
    ("P9", p9_whole_space),
    ("P10", p10_complement_antisymmetry),
    ("P11a", p11a_elementary_additivity),
    ("P11b", p11b_bounds),
    ("T1", t1_algebra_symmetry),
    ("T2", t2_composed_closure),
    ("T3", t3_decomposition),
    ("T4a", t4a_complement_decomposition),
    ("T4b", t4b_monotonicity),
    ("T5", t5_continuity),
    ("T6", t6_additivity_implication),
    ("T7", t7_kolmogorov_restriction),
];

/// Every suite id, in report order.
pub fn suite_ids() -> Vec<&'static str> {
    SUITE.iter().map(|(id, _)| *id).collect()
}

pub fn run_theorem_suite(space: &ExtendedSpace) -> ValidationReport {
    let domain = Domain::new(space);
    let mut report = ValidationReport::new(SUITE.iter().map(|(_, check)| check(&domain)).collect());
    report.sort_by_id();
    report
}

/// Runs the named checks only, in suite order, each at most once.
pub fn run_theorem_checks<S: AsRef<str>>(
    space: &ExtendedSpace,
    ids: &[S],
) -> Result<ValidationReport, UnknownCheck> {
    let mut wanted = BTreeSet::new();
    for id in ids {
        let id = id.as_ref();
        if !SUITE.iter().any(|(known, _)| *known == id) {
            return Err(UnknownCheck(id.to_string()));
        }
        wanted.insert(id);
    }
    let domain = Domain::new(space);
    let mut report = ValidationReport::new(
        SUITE
            .iter()
            .filter(|(id, _)| wanted.contains(id))
            .map(|(_, check)| check(&domain))
            .collect(),
    );
    report.sort_by_id();
    Ok(report)
}

fn pair_coverage(n: usize) -> Coverage {
    Coverage::within_budget(n.saturating_mul(n), PAIR_BUDGET)
}

fn triple_coverage(n: usize) -> Coverage {
    Coverage::within_budget(n.saturating_mul(n).saturating_mul(n), TRIPLE_BUDGET)
}

fn annotate(entry: CheckEntry, coverage: Coverage, what: &str) -> CheckEntry {
    match coverage.note(what) {
        Some(note) => entry.with_note(note),
        None => entry,
    }
}

/// Pair check over `F`.
fn over_pairs<F>(id: &str, domain: &Domain<'_>, check: F) -> CheckEntry
where
    F: FnMut(&&Event, &&Event) -> Option<Counterexample>,
{
    let coverage = pair_coverage(domain.events.len());
    annotate(
        CheckEntry::from_search(id, least_pair_failure(&domain.events, coverage, check)),
        coverage,
        "pairs",
    )
}

/// Single-event check over `F`.
fn over_events<F>(id: &str, domain: &Domain<'_>, check: F) -> CheckEntry
where
    F: FnMut(&&Event) -> Option<Counterexample>,
{
    CheckEntry::from_search(id, first_failure(&domain.events, check))
}

fn event_mismatch(
    names: [&str; 2],
    x: &Event,
    y: &Event,
    lhs: &Event,
    rhs: &Event,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| {
        Counterexample::new()
            .event(names[0], x)
            .event(names[1], y)
            .event("lhs", lhs)
            .event("rhs", rhs)
    })
}

fn value_mismatch(
    name: &str,
    a: &Event,
    lhs: &BigRational,
    rhs: &BigRational,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| {
        Counterexample::new()
            .event(name, a)
            .value("lhs", lhs)
            .value("rhs", rhs)
    })
}

fn omega_atoms(domain: &Domain<'_>) -> Vec<SignedAtom> {
    let ground = domain.space.ground();
    ground
        .positive()
        .iter()
        .chain(ground.negative().iter())
        .cloned()
        .collect()
}

fn c1_domain_symmetry(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let (plus, minus) = (ground.positive(), ground.negative());
    let failure = omega_atoms(domain).into_iter().find_map(|w| {
        let forward = !plus.contains(&w) || minus.contains(&w.negate());
        let backward = !minus.contains(&w.negate()) || plus.contains(&w);
        (!(forward && backward)).then(|| Counterexample::new().text("w", w.to_string()))
    });
    CheckEntry::from_search("C1", failure)
}

fn c2_element_symmetry(domain: &Domain<'_>) -> CheckEntry {
    let failure = omega_atoms(domain).into_iter().find_map(|w| {
        (w.negate().negate() != w).then(|| Counterexample::new().text("w", w.to_string()))
    });
    CheckEntry::from_search("C2", failure)
}

fn c3_event_symmetry(domain: &Domain<'_>) -> CheckEntry {
    over_events("C3", domain, |x| {
        let back = negate_event(&negate_event(x));
        (back != **x).then(|| Counterexample::new().event("X", x).event("-(-X)", &back))
    })
}

fn c4_positive_negative_overlap(domain: &Domain<'_>) -> CheckEntry {
    let shared: Vec<&Event> = domain
        .space
        .fplus()
        .iter()
        .filter(|e| domain.space.fminus().contains(e))
        .collect();
    let failure = (shared != [&Event::empty()]).then(|| {
        Counterexample::new().text(
            "shared",
            shared
                .iter()
                .map(|e| e.braced())
                .collect::<Vec<_>>()
                .join(";"),
        )
    });
    CheckEntry::from_search("C4", failure)
}

fn c5_upper_bound(domain: &Domain<'_>) -> CheckEntry {
    over_events("C5", domain, |a| {
        let v = domain.p(a);
        (v > BigRational::one()).then(|| Counterexample::new().event("A", a).value("P(A)", &v))
    })
}

fn k1(domain: &Domain<'_>) -> CheckEntry {
    entry_from(validate::kolmogorov_entries(domain), "K1")
}

fn k2(domain: &Domain<'_>) -> CheckEntry {
    entry_from(validate::kolmogorov_entries(domain), "K2")
}

fn k3(domain: &Domain<'_>) -> CheckEntry {
    entry_from(validate::kolmogorov_entries(domain), "K3")
}

fn entry_from(report: ValidationReport, id: &str) -> CheckEntry {
    report
        .get(id)
        .cloned()
        .unwrap_or_else(|| panic!("report lacks {id}"))
}

fn l1_involution_image(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let image = |e: &Event| {
        Event::try_from_atoms(e.iter().map(SignedAtom::negate)).expect("image of a valid event")
    };
    let plus_image = image(&ground.positive());
    let minus_image = image(&ground.negative());
    let failure = if plus_image != ground.negative() {
        Some(Counterexample::new().event("alpha(Omega+)", &plus_image))
    } else if minus_image != ground.positive() {
        Some(Counterexample::new().event("alpha(Omega-)", &minus_image))
    } else {
        None
    };
    CheckEntry::from_search("L1", failure)
}

fn l2_no_fixed_points(domain: &Domain<'_>) -> CheckEntry {
    let failure = omega_atoms(domain)
        .into_iter()
        .find_map(|w| (w.negate() == w).then(|| Counterexample::new().text("w", w.to_string())));
    CheckEntry::from_search("L2", failure)
}

fn l3_self_annihilation(domain: &Domain<'_>) -> CheckEntry {
    over_events("L3", domain, |x| {
        let sum = annihilating_union(x, &negate_event(x));
        (!sum.is_empty()).then(|| Counterexample::new().event("X", x).event("X+(-X)", &sum))
    })
}

fn l4a_idempotence(domain: &Domain<'_>) -> CheckEntry {
    over_events("L4a", domain, |x| {
        let sum = annihilating_union(x, x);
        (sum != **x).then(|| Counterexample::new().event("X", x).event("X+X", &sum))
    })
}

fn l4b_commutativity(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("L4b", domain, |x, y| {
        event_mismatch(
            ["X", "Y"],
            x,
            y,
            &annihilating_union(x, y),
            &annihilating_union(y, x),
        )
    })
}

fn l4c_identity(domain: &Domain<'_>) -> CheckEntry {
    over_events("L4c", domain, |x| {
        let sum = annihilating_union(x, &Event::empty());
        (sum != **x).then(|| Counterexample::new().event("X", x).event("X+{}", &sum))
    })
}

fn l4d_associativity(domain: &Domain<'_>) -> CheckEntry {
    let coverage = triple_coverage(domain.events.len());
    let failure = least_triple_failure(&domain.events, coverage, |x, y, z| {
        let left = annihilating_union(x, &annihilating_union(y, z));
        let right = annihilating_union(&annihilating_union(x, y), z);
        (left != right).then(|| {
            Counterexample::new()
                .event("X", x)
                .event("Y", y)
                .event("Z", z)
                .event("X+(Y+Z)", &left)
                .event("(X+Y)+Z", &right)
        })
    });
    annotate(CheckEntry::from_search("L4d", failure), coverage, "triples")
}

fn l4e_homogeneous_union(domain: &Domain<'_>) -> CheckEntry {
    let mut failure = None;
    for family in [&domain.fplus, &domain.fminus] {
        failure = least_pair_failure(family, pair_coverage(family.len()), |x, y| {
            let sum = annihilating_union(x, y);
            match x.try_union(y) {
                Ok(union) => event_mismatch(["X", "Y"], x, y, &sum, &union),
                Err(_) => Some(Counterexample::new().event("X", x).event("Y", y)),
            }
        });
        if failure.is_some() {
            break;
        }
    }
    CheckEntry::from_search("L4e", failure)
}

/// Passes when both non-distributivity witnesses exist; the entry carries
/// them.
fn l5_no_distributivity(domain: &Domain<'_>) -> CheckEntry {
    let coverage = triple_coverage(domain.events.len());
    let left = least_triple_failure(&domain.events, coverage, |x, y, z| {
        let lhs = event_intersection(z, &annihilating_union(x, y));
        let rhs = annihilating_union(&event_intersection(z, x), &event_intersection(z, y));
        (lhs != rhs).then(|| {
            Counterexample::new()
                .event("X", x)
                .event("Y", y)
                .event("Z", z)
                .event("lhs", &lhs)
                .event("rhs", &rhs)
        })
    });
    let right = least_triple_failure(&domain.events, coverage, |x, y, z| {
        let lhs = annihilating_union(x, &event_intersection(y, z));
        let rhs = annihilating_union(&event_intersection(x, y), &event_intersection(x, z));
        (lhs != rhs).then(|| {
            Counterexample::new()
                .event("bX", x)
                .event("bY", y)
                .event("bZ", z)
                .event("blhs", &lhs)
                .event("brhs", &rhs)
        })
    });
    let entry = match (left, right) {
        (Some(a), Some(b)) => {
            let mut witness = a;
            for (name, binding) in b.bindings() {
                witness = match binding {
                    crate::report::Binding::Event(e) => witness.event(name, e),
                    other => witness.text(name, other.to_string()),
                };
            }
            CheckEntry::pass("L5").with_witness(witness)
        }
        (a, b) => {
            let mut cx = Counterexample::new();
            if a.is_none() {
                cx = cx.text("missing", "witness for Z∩(X+Y) vs (Z∩X)+(Z∩Y)");
            }
            if b.is_none() {
                cx = cx.text("missing_b", "witness for X+(Y∩Z) vs (X∩Y)+(X∩Z)");
            }
            CheckEntry::fail("L5", cx)
        }
    };
    annotate(entry, coverage, "triples")
}

fn l6_intersection_split(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("L6", domain, |a, b| {
        let lhs = event_intersection(a, b);
        let rhs = annihilating_union(
            &event_intersection(&a.positive_part(), &b.positive_part()),
            &event_intersection(&a.negative_part(), &b.negative_part()),
        );
        event_mismatch(["A", "B"], a, b, &lhs, &rhs)
    })
}

fn l7_difference_split(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("L7", domain, |a, b| {
        let lhs = event_difference(a, b);
        let rhs = annihilating_union(
            &event_difference(&a.positive_part(), &b.positive_part()),
            &event_difference(&a.negative_part(), &b.negative_part()),
        );
        event_mismatch(["A", "B"], a, b, &lhs, &rhs)
    })
}

fn l8_part_recomposition(domain: &Domain<'_>) -> CheckEntry {
    over_events("L8", domain, |x| {
        let (pos, neg) = (x.positive_part(), x.negative_part());
        let sum = annihilating_union(&pos, &neg);
        let ok = sum == **x && pos.try_union(&neg).as_ref() == Ok(&sum);
        (!ok).then(|| Counterexample::new().event("X", x).event("X++X-", &sum))
    })
}

fn l9_union_split(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("L9", domain, |a, b| {
        let lhs = annihilating_union(a, b);
        let rhs = annihilating_union(
            &annihilating_union(&a.positive_part(), &b.positive_part()),
            &annihilating_union(&a.negative_part(), &b.negative_part()),
        );
        event_mismatch(["A", "B"], a, b, &lhs, &rhs)
    })
}

fn l10_empty_event(domain: &Domain<'_>) -> CheckEntry {
    let v = domain.p(&Event::empty());
    CheckEntry::from_search(
        "L10",
        (!v.is_zero()).then(|| Counterexample::new().value("P({})", &v)),
    )
}

fn l11_parts_disjoint(domain: &Domain<'_>) -> CheckEntry {
    over_events("L11", domain, |x| {
        let overlap = event_intersection(&x.positive_part(), &x.negative_part());
        (!overlap.is_empty()).then(|| Counterexample::new().event("X", x))
    })
}

fn p1_bijection(domain: &Domain<'_>) -> CheckEntry {
    let atoms = omega_atoms(domain);
    let images: BTreeSet<SignedAtom> = atoms.iter().map(SignedAtom::negate).collect();
    let ground = domain.space.ground();
    let failure = (images.len() != atoms.len()
        || ground.positive().len() != ground.negative().len())
    .then(|| {
        Counterexample::new()
            .text("|Omega|", atoms.len().to_string())
            .text("|alpha(Omega)|", images.len().to_string())
    });
    CheckEntry::from_search("P1", failure)
}

fn p2_ground_disjoint(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let overlap = event_intersection(&ground.positive(), &ground.negative());
    CheckEntry::from_search(
        "P2",
        (!overlap.is_empty()).then(|| Counterexample::new().event("overlap", &overlap)),
    )
}

fn p3_family_inclusions(domain: &Domain<'_>) -> CheckEntry {
    let space = domain.space;
    let failure = first_failure(&domain.fplus, |a| {
        (!domain.in_f(a)).then(|| Counterexample::new().event("F+ member", a))
    })
    .or_else(|| {
        first_failure(&domain.fminus, |h| {
            (!domain.in_f(h)).then(|| Counterexample::new().event("F- member", h))
        })
    })
    .or_else(|| {
        first_failure(&domain.events, |x| {
            let ok = space.fplus().contains(&x.positive_part())
                && space.fminus().contains(&x.negative_part());
            (!ok).then(|| Counterexample::new().event("X", x))
        })
    });
    CheckEntry::from_search("P3", failure)
}

fn p4_positive_iff_negated_negative(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let (plus, minus) = (ground.positive(), ground.negative());
    over_events("P4", domain, |x| {
        let ok = x.is_subset(&plus) == negate_event(x).is_subset(&minus);
        (!ok).then(|| Counterexample::new().event("X", x))
    })
}

fn p5_negative_members(domain: &Domain<'_>) -> CheckEntry {
    let minus = domain.space.ground().negative();
    let selected: BTreeSet<&Event> = domain
        .events
        .iter()
        .copied()
        .filter(|x| x.is_subset(&minus))
        .collect();
    let mirror: BTreeSet<&Event> = domain.fminus.iter().copied().collect();
    let failure = selected
        .symmetric_difference(&mirror)
        .next()
        .map(|e| Counterexample::new().event("X", e));
    CheckEntry::from_search("P5", failure)
}

fn p6_annihilated_evaluation(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("P6", domain, |x, y| {
        let sum = annihilating_union(x, y);
        if !domain.in_f(&sum) {
            return Some(
                Counterexample::new()
                    .event("X", x)
                    .event("Y", y)
                    .text("X+Y", "not in F"),
            );
        }
        // raw signed mass of the plain union: annihilated pairs contribute w - w
        let raw: BTreeSet<&SignedAtom> = x.iter().chain(y.iter()).collect();
        let lhs = domain.p(&sum);
        let rhs = domain.space.signed_mass(raw);
        (lhs != rhs).then(|| {
            Counterexample::new()
                .event("X", x)
                .event("Y", y)
                .value("lhs", &lhs)
                .value("rhs", &rhs)
        })
    })
}

fn p7_cross_negation(domain: &Domain<'_>) -> CheckEntry {
    over_pairs("P7", domain, |x, y| {
        let lhs = event_intersection(x, &negate_event(y));
        let rhs = negate_event(&event_intersection(&negate_event(x), y));
        event_mismatch(["X", "Y"], x, y, &lhs, &rhs)
    })
}

fn p8_sign_antisymmetry(domain: &Domain<'_>) -> CheckEntry {
    over_events("P8", domain, |a| {
        value_mismatch("A", a, &domain.p(a), &-domain.p(&negate_event(a)))
    })
}

fn p9_whole_space(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let omega = RawEventDraft::concat([&ground.positive(), &ground.negative()]);
    let annihilated = domain.p(&normalize(&omega));
    let raw = domain.space.signed_mass(omega.entries());
    let failure = (!annihilated.is_zero() || !raw.is_zero()).then(|| {
        Counterexample::new()
            .value("P(Omega)", &annihilated)
            .value("mass(Omega)", &raw)
    });
    CheckEntry::from_search("P9", failure)
}

fn p10_complement_antisymmetry(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    over_events("P10", domain, |a| {
        let comp = omega_complement(ground, a);
        if !domain.in_f(&comp) {
            return Some(Counterexample::new().event("A", a).event("C(A)", &comp));
        }
        value_mismatch("A", a, &domain.p(a), &-domain.p(&comp))
    })
}

fn p11a_elementary_additivity(domain: &Domain<'_>) -> CheckEntry {
    over_events("P11a", domain, |a| {
        let singletons: Option<Vec<Event>> = a
            .iter()
            .map(|w| {
                let s = Event::try_from_atoms([w.clone()]).expect("singleton");
                domain.in_f(&s).then_some(s)
            })
            .collect();
        let singletons = singletons?;
        let sum: BigRational = singletons.iter().map(|s| domain.p(s)).sum();
        value_mismatch("A", a, &domain.p(a), &sum)
    })
}

fn p11b_bounds(domain: &Domain<'_>) -> CheckEntry {
    over_events("P11b", domain, |a| {
        let v = domain.p(a);
        (v.abs() > BigRational::one())
            .then(|| Counterexample::new().event("A", a).value("P(A)", &v))
    })
}

fn t1_algebra_symmetry(domain: &Domain<'_>) -> CheckEntry {
    let space = domain.space;
    let ground = space.ground();
    let failure = match is_set_algebra(space.fminus()) {
        Ok((true, Some(unit))) if unit == ground.negative() => {
            let plus_field = is_set_field(space.fplus(), &ground.positive()).unwrap_or(false);
            let minus_field = is_set_field(space.fminus(), &ground.negative()).unwrap_or(false);
            (plus_field && !minus_field)
                .then(|| Counterexample::new().text("reason", "F- is not a field"))
        }
        Ok((_, unit)) => Some(
            Counterexample::new()
                .text("reason", "F- is not an algebra with unit Omega-")
                .text(
                    "unit",
                    unit.map(|u| u.braced()).unwrap_or_else(|| "none".into()),
                ),
        ),
        Err(e) => Some(Counterexample::new().text("reason", e.to_string())),
    };
    CheckEntry::from_search("T1", failure)
}

fn t2_composed_closure(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let coverage = pair_coverage(domain.events.len());
    let failure = least_pair_failure(&domain.events, coverage, |a, b| {
        let results = [
            ("A+B", annihilating_union(a, b)),
            ("A∩B", event_intersection(a, b)),
            ("A\\B", event_difference(a, b)),
        ];
        results
            .iter()
            .find(|(_, r)| !domain.in_f(r))
            .map(|(name, r)| {
                Counterexample::new()
                    .event("A", a)
                    .event("B", b)
                    .event(name, r)
            })
    })
    .or_else(|| {
        first_failure(&domain.events, |a| {
            let comp = omega_complement(ground, a);
            (!domain.in_f(&comp)).then(|| Counterexample::new().event("A", a).event("C(A)", &comp))
        })
    });
    annotate(CheckEntry::from_search("T2", failure), coverage, "pairs")
}

fn t3_decomposition(domain: &Domain<'_>) -> CheckEntry {
    over_events("T3", domain, |a| {
        let lhs = domain.p(a);
        let via_negation =
            domain.p(&a.positive_part()) - domain.p(&negate_event(&a.negative_part()));
        let via_parts = domain.p(&a.positive_part()) + domain.p(&a.negative_part());
        value_mismatch("A", a, &lhs, &via_negation)
            .or_else(|| value_mismatch("A", a, &lhs, &via_parts))
    })
}

fn t4a_complement_decomposition(domain: &Domain<'_>) -> CheckEntry {
    let ground = domain.space.ground();
    let (plus, minus) = (ground.positive(), ground.negative());
    over_events("T4a", domain, |a| {
        let comp = omega_complement(ground, a);
        if !domain.in_f(&comp) {
            return Some(Counterexample::new().event("A", a).event("C(A)", &comp));
        }
        let comp_pos = complement(&plus, &a.positive_part());
        let first = complement(&plus, &negate_event(&a.negative_part()));
        let second = negate_event(&complement(&minus, &a.negative_part()));
        for part in [&comp_pos, &first, &second] {
            if !domain.in_f(part) {
                return Some(Counterexample::new().event("A", a).event("part", part));
            }
        }
        let lhs = domain.p(&comp);
        value_mismatch("A", a, &lhs, &(domain.p(&comp_pos) - domain.p(&first)))
            .or_else(|| value_mismatch("A", a, &lhs, &(domain.p(&comp_pos) - domain.p(&second))))
    })
}

fn t4b_monotonicity(domain: &Domain<'_>) -> CheckEntry {
    let monotone = least_pair_failure(&domain.fplus, pair_coverage(domain.fplus.len()), |a, b| {
        (a.is_subset(b) && domain.p(a) > domain.p(b)).then(|| {
            Counterexample::new()
                .event("A", a)
                .event("B", b)
                .value("P(A)", &domain.p(a))
                .value("P(B)", &domain.p(b))
        })
    });
    let failure = monotone.or_else(|| {
        least_pair_failure(
            &domain.fminus,
            pair_coverage(domain.fminus.len()),
            |h, k| {
                (h.is_subset(k) && domain.p(h) < domain.p(k)).then(|| {
                    Counterexample::new()
                        .event("H", h)
                        .event("K", k)
                        .value("P(H)", &domain.p(h))
                        .value("P(K)", &domain.p(k))
                })
            },
        )
    });
    CheckEntry::from_search("T4b", failure)
}

fn t5_continuity(domain: &Domain<'_>) -> CheckEntry {
    let empty = domain.p(&Event::empty());
    if !empty.is_zero() {
        return CheckEntry::fail("T5", Counterexample::new().value("P({})", &empty));
    }
    let coverage = pair_coverage(domain.events.len());
    let failure = least_pair_failure(&domain.events, coverage, |a, b| {
        // a decreasing step A ⊇ B shrinks both parts
        if !b.is_subset(a) {
            return None;
        }
        let ok = b.positive_part().is_subset(&a.positive_part())
            && negate_event(&b.negative_part()).is_subset(&negate_event(&a.negative_part()));
        (!ok).then(|| Counterexample::new().event("A", a).event("B", b))
    })
    .or_else(|| {
        first_failure(&domain.events, |a| {
            let parts = domain.p(&a.positive_part()) - domain.p(&negate_event(&a.negative_part()));
            value_mismatch("A", a, &domain.p(a), &parts)
        })
    });
    annotate(CheckEntry::from_search("T5", failure), coverage, "pairs")
        .with_note("finitely vacuous: decreasing chains in a finite F reach {}")
}

fn t6_additivity_implication(domain: &Domain<'_>) -> CheckEntry {
    let coverage = pair_coverage(domain.events.len());
    let axioms = validate::axiom_entries(domain, coverage);
    let status = |id| axioms.passed(id).unwrap_or(false);
    let (ep5p, ep10, ep5) = (status("EP5p"), status("EP10"), status("EP5"));
    let failure = (ep5p && ep10 && !ep5).then(|| {
        Counterexample::new()
            .text("EP5p", "PASS")
            .text("EP10", "PASS")
            .text("EP5", "FAIL")
    });
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    annotate(CheckEntry::from_search("T6", failure), coverage, "pairs").with_note(format!(
        "EP5p {} EP10 {} EP5 {}",
        verdict(ep5p),
        verdict(ep10),
        verdict(ep5)
    ))
}

fn t7_kolmogorov_restriction(domain: &Domain<'_>) -> CheckEntry {
    let report = validate::kolmogorov_entries(domain);
    let mut failed: Vec<&str> = report.failures().map(|e| e.check_id.as_str()).collect();
    if !domain.space.fplus_is_field() {
        failed.push("field");
    }
    CheckEntry::from_search(
        "T7",
        (!failed.is_empty()).then(|| Counterexample::new().text("failed", failed.join(","))),
    )
}
