//! Verification suites. Each returns its mismatches in sweep order, so the
//! outcome is identical however the work is spread over threads.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tetra_core::gin::{ek_betti, gin_acm, gin_of_curve};
use tetra_core::groebner::{gin_oracle, DEFAULT_PRIME, SECOND_PRIME};
use tetra_core::monomial::Monomial;
use tetra_core::resolution::{
    acm_linear_family, betti_table, betti_tables_over_tie_breaks, enumerate_linear_in_class,
    gin_betti_prediction,
};
use tetra_core::tuple::{
    apply_reduction, canonicalize, ci_power_form, degree_of_tuple, is_acm, is_cwl, is_minimal,
    is_minimal_numerical, max_facet_weight, reduction_applicable, reduction_trace,
    regularity_closed_form, ReductionType,
};
use tetra_core::{betti_table_oracle, MonomialIdeal, TetTuple};

use crate::args::Suite;

pub const SAMPLE_SIZE: usize = 32;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub suite: String,
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub bound: u32,
    pub seed: u64,
    pub prime: u64,
}

impl SuiteConfig {
    pub fn primes(&self) -> [u64; 2] {
        let other = if self.prime == SECOND_PRIME { DEFAULT_PRIME } else { SECOND_PRIME };
        [self.prime, other]
    }

    pub fn seeds(&self) -> [u64; 2] {
        [self.seed, self.seed.wrapping_add(1)]
    }
}

pub fn sweep(bound: u32) -> Vec<TetTuple> {
    TetTuple::all_with_total_at_most(bound)
        .into_iter()
        .filter(|t| !t.is_trivial())
        .collect()
}

/// Seeded tuples with entries in `0..=3`, used beyond the exhaustive sweep.
pub fn sample(seed: u64) -> Vec<TetTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLE_SIZE)
        .map(|_| TetTuple::new([(); 6].map(|_| rng.gen_range(0..=3))))
        .filter(|t| !t.is_trivial())
        .collect()
}

fn collect<F>(suite: Suite, cases: &[TetTuple], check: F) -> SuiteOutcome
where
    F: Fn(&TetTuple) -> Vec<String> + Sync,
{
    let mismatches = cases.par_iter().flat_map_iter(&check).collect();
    SuiteOutcome { suite: suite.name().into(), cases: cases.len(), mismatches }
}

/// `(I_d)` linear for every `d` from the least generator degree to the regularity.
pub fn componentwise_linear_oracle(ideal: &MonomialIdeal) -> bool {
    let table = betti_table_oracle(ideal);
    let (Some(lo), Some(reg)) = (ideal.min_generator_degree(), table.regularity()) else {
        return true;
    };
    (lo..=reg as u32).all(|d| {
        let component = ideal.component_ideal(d);
        component.is_zero() || betti_table_oracle(&component).is_linear()
    })
}

/// Entries `β_{i,j}` with `j ≥ i + d + 1` where `I_{≥d}` and `I` differ.
pub fn truncation_defects(ideal: &MonomialIdeal, d: u32) -> Vec<(u32, u32)> {
    let full = betti_table_oracle(ideal);
    let truncated = betti_table_oracle(&ideal.truncate(d));
    let keys: BTreeSet<(u32, u32)> =
        full.entries().chain(truncated.entries()).map(|(i, j, _)| (i, j)).collect();
    keys.into_iter()
        .filter(|&(i, j)| j > i + d && full.get(i, j) != truncated.get(i, j))
        .collect()
}

/// `I(r+1,0,r,r,0,r+1) = (ac)·I(r,0,r-1,r-1,0,r) + (bd)^r·I(1,0,0,0,0,1)`.
pub fn liaison_addition_holds(r: u32) -> bool {
    let lhs = MonomialIdeal::of_tuple(&TetTuple::new([r + 1, 0, r, r, 0, r + 1]));
    let smaller = MonomialIdeal::of_tuple(&TetTuple::new([r, 0, r - 1, r - 1, 0, r]));
    let lines = MonomialIdeal::of_tuple(&TetTuple::new([1, 0, 0, 0, 0, 1]));
    let rhs = smaller
        .mul_monomial(&Monomial::new([1, 0, 1, 0]))
        .sum(&lines.mul_monomial(&Monomial::new([0, r, 0, r])));
    lhs == rhs
}

fn reduction_checks(t: &TetTuple) -> Vec<String> {
    let mut out = Vec::new();
    if is_minimal(t) != is_minimal_numerical(t) {
        out.push(format!("{t}: definitional and numerical minimality disagree"));
    }
    for ty in ReductionType::ALL.into_iter().filter(|&ty| reduction_applicable(t, ty)) {
        let step = match apply_reduction(t, ty) {
            Ok(s) => s,
            Err(e) => {
                out.push(format!("{t} {ty:?}: {e}"));
                continue;
            }
        };
        match MonomialIdeal::of_tuple(&step.child).basic_double_link(step.g, &step.f) {
            Ok(j) if j == MonomialIdeal::of_tuple(t) => {}
            Ok(_) => out.push(format!("{t} {ty:?}: basic double link gives a different ideal")),
            Err(e) => out.push(format!("{t} {ty:?}: {e}")),
        }
        if degree_of_tuple(t) != degree_of_tuple(&step.child) + step.f_degree() as u64 {
            out.push(format!("{t} {ty:?}: degree is not additive"));
        }
    }
    let trace = reduction_trace(t);
    if !trace.terminal.is_trivial() && !is_minimal(&trace.terminal) {
        out.push(format!("{t}: terminal {} is not minimal", trace.terminal));
    }
    for step in &trace.steps {
        let (p, c) = (&step.parent, &step.child);
        if !is_minimal(p) && ci_power_form(p).is_none() && max_facet_weight(p) <= max_facet_weight(c) {
            out.push(format!("{t}: max facet weight does not drop at {p}"));
        }
    }
    out
}

fn betti_checks(t: &TetTuple) -> Vec<String> {
    let oracle = betti_table_oracle(&MonomialIdeal::of_tuple(t));
    match betti_tables_over_tie_breaks(t) {
        Ok(tables) if tables == BTreeSet::from([oracle.clone()]) => vec![],
        Ok(tables) => vec![format!("{t}: builder {tables:?} vs oracle {oracle:?}")],
        Err(e) => vec![format!("{t}: {e}")],
    }
}

fn regularity_checks(t: &TetTuple) -> Vec<String> {
    let oracle = betti_table_oracle(&MonomialIdeal::of_tuple(t)).regularity();
    match regularity_closed_form(t) {
        Ok(r) if Some(r as i64) == oracle => vec![],
        Ok(r) => vec![format!("{t}: closed form {r} vs oracle {oracle:?}")],
        Err(e) => vec![format!("{t}: {e}")],
    }
}

fn cwl_checks(t: &TetTuple) -> Vec<String> {
    let oracle = componentwise_linear_oracle(&MonomialIdeal::of_tuple(t));
    match is_cwl(t) {
        Ok(c) if c == oracle => vec![],
        Ok(c) => vec![format!("{t}: is_cwl {c} vs oracle {oracle}")],
        Err(e) => vec![format!("{t}: {e}")],
    }
}

fn truncation_checks(t: &TetTuple) -> Vec<String> {
    let ideal = MonomialIdeal::of_tuple(t);
    let reg = match regularity_closed_form(t) {
        Ok(r) => r,
        Err(e) => return vec![format!("{t}: {e}")],
    };
    (1..=reg + 1)
        .flat_map(|d| {
            truncation_defects(&ideal, d)
                .into_iter()
                .map(move |(i, j)| format!("{t}: truncation at {d} changes beta({i},{j})"))
        })
        .collect()
}

fn gin_checks(t: &TetTuple, cfg: &SuiteConfig) -> Vec<String> {
    let mut out = Vec::new();
    if is_acm(t) {
        match (gin_acm(t), gin_betti_prediction(t)) {
            (Ok(g), Ok(p)) if ek_betti(&g) == p => {}
            (Ok(g), Ok(p)) => out.push(format!("{t}: ek_betti {:?} vs prediction {p:?}", ek_betti(&g))),
            (Err(e), _) | (_, Err(e)) => out.push(format!("{t}: {e}")),
        }
    }
    match gin_of_curve(t) {
        Ok(Some(constructed)) => match gin_oracle(&MonomialIdeal::of_tuple(t), cfg.seeds(), cfg.primes()) {
            Ok(numeric) if numeric == constructed => {}
            Ok(numeric) => out.push(format!("{t}: constructed {constructed} vs numerical {numeric}")),
            Err(e) => out.push(format!("{t}: {e}")),
        },
        Ok(None) => {}
        Err(e) => out.push(format!("{t}: {e}")),
    }
    out
}

fn enumeration_outcome(cfg: &SuiteConfig) -> SuiteOutcome {
    let tuples = sweep(cfg.bound);
    let minimal: Vec<TetTuple> = tuples.iter().copied().filter(is_minimal).collect();
    let classes: BTreeMap<TetTuple, Result<BTreeSet<TetTuple>, String>> = minimal
        .par_iter()
        .map(|m| (*m, enumerate_linear_in_class(m).map_err(|e| e.to_string())))
        .collect();
    let mut mismatches: Vec<String> = minimal
        .par_iter()
        .flat_map_iter(|m| match &classes[m] {
            Err(e) => vec![format!("{m}: {e}")],
            Ok(found) => found
                .iter()
                .filter(|u| !betti_table_oracle(&MonomialIdeal::of_tuple(u)).is_linear())
                .map(|u| format!("{m}: enumerated {u} is not linear"))
                .collect(),
        })
        .collect();
    // every non-ACM curve with a linear resolution must be reached by its class enumeration
    mismatches.par_extend(tuples.par_iter().flat_map_iter(|t| {
        let trace = reduction_trace(t);
        let linear = betti_table(t).map(|b| b.is_linear()).unwrap_or(false);
        let mut out = Vec::new();
        if trace.is_acm() {
            // family tags are sound; they are not complete (the chain of three lines has none)
            if acm_linear_family(t).is_some() && !linear {
                out.push(format!("{t}: tagged ACM-linear family but the resolution is not linear"));
            }
            if linear != betti_table_oracle(&MonomialIdeal::of_tuple(t)).is_linear() {
                out.push(format!("{t}: linearity differs from the oracle"));
            }
        } else if linear {
            let reached = match classes.get(&trace.terminal) {
                Some(Ok(found)) => found.contains(&canonicalize(t).0),
                _ => enumerate_linear_in_class(&trace.terminal)
                    .map(|f| f.contains(&canonicalize(t).0))
                    .unwrap_or(false),
            };
            if !reached {
                out.push(format!("{t}: linear but missing from the enumeration of {}", trace.terminal));
            }
        }
        out
    }));
    SuiteOutcome { suite: Suite::Enumeration.name().into(), cases: tuples.len(), mismatches }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<SuiteOutcome> {
    let mut sampled = sweep(cfg.bound);
    sampled.extend(sample(cfg.seed));
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
        Suite::Reduction => vec![collect(suite, &sweep(cfg.bound), reduction_checks)],
        Suite::Betti => vec![collect(suite, &sampled, betti_checks)],
        Suite::Regularity => vec![collect(suite, &sampled, regularity_checks)],
        Suite::Cwl => vec![collect(suite, &sweep(cfg.bound), cwl_checks)],
        Suite::Truncation => vec![collect(suite, &sweep(cfg.bound), truncation_checks)],
        Suite::Gin => vec![collect(suite, &sweep(cfg.bound), |t| gin_checks(t, cfg))],
        Suite::Enumeration => vec![enumeration_outcome(cfg)],
        Suite::LiaisonAddition => {
            let rs: Vec<u32> = (1..=cfg.bound.max(1)).collect();
            let mismatches = rs
                .iter()
                .filter(|&&r| !liaison_addition_holds(r))
                .map(|r| format!("liaison addition fails for r = {r}"))
                .collect();
            vec![SuiteOutcome { suite: suite.name().into(), cases: rs.len(), mismatches }]
        }
    }
}
