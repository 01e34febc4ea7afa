//! Graded Betti tables of tetrahedral curves assembled from the reduction
//! trace: each basic double link `J = L·I + (F)` with `deg F = e` contributes
//! a generator in degree `e` and a syzygy in degree `e + 1`, and twists the
//! resolution of `I` by one.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::tuple::{
    apply_reduction, canonicalize, ci_power_form, cwl_from_trace, is_minimal, max_facet_weight,
    max_last_forms, max_weight_reductions, reduction_trace, ReductionTrace, ReductionType,
    TetTuple,
};

/// Closed-form resolution of a minimal curve. Normalized so `a6` is the
/// largest entry, it is linear of length three starting in degree `a1 + a6`.
pub fn minimal_curve_betti(t: &TetTuple) -> Result<BettiTable> {
    if !is_minimal(t) {
        return Err(Error::NotMinimal(*t));
    }
    let (u, _) = max_last_forms(t)[0];
    let a: Vec<i64> = u.entries().iter().map(|&x| x as i64).collect();
    let (a1, a6) = (a[0], a[5]);
    let half: i64 = a[1..5].iter().map(|x| x * (x + 1) / 2).sum();
    let beta1 = (a1 + 1) * (a6 + 1) - half;
    let beta2 = 2 * a1 * a6 + a1 + a6 - 2 * half;
    let beta3 = a1 * a6 - half;
    let d = (a1 + a6) as u32;
    Ok(BettiTable::from_entries([
        (0, d, beta1 as u64),
        (1, d + 1, beta2 as u64),
        (2, d + 2, beta3 as u64),
    ]))
}

/// Resolution of `(ab, cd)^r`: `0 → R(-2r-2)^r → R(-2r)^{r+1}`.
pub fn ci_power_betti(r: u32) -> BettiTable {
    BettiTable::from_entries([(0, 2 * r, r as u64 + 1), (1, 2 * r + 2, r as u64)])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BaseKind {
    Trivial,
    MinimalCurve,
    CIPower(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RecipeStep {
    pub f_degree: u32,
    /// Number of links above this one; twists its generator and syzygy.
    pub shift_applied: u32,
}

impl RecipeStep {
    pub fn generator_degree(&self) -> u32 {
        self.f_degree + self.shift_applied
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ResolutionRecipe {
    pub base_kind: BaseKind,
    pub base: TetTuple,
    pub base_betti: BettiTable,
    /// Top curve first.
    pub steps: Vec<RecipeStep>,
}

impl ResolutionRecipe {
    /// Recipe along an explicit chain of curves, each a maximal-facet
    /// reduction of the previous one, top curve first.
    pub fn from_chain(chain: &[TetTuple]) -> Result<Self> {
        let top = chain.first().ok_or(Error::TrivialCurve)?;
        if top.is_trivial() {
            return Err(Error::TrivialCurve);
        }
        let mut steps = Vec::new();
        for (k, c) in chain.iter().enumerate() {
            if let Some((base_kind, base_betti)) = base_of(c)? {
                return Ok(ResolutionRecipe {
                    base_kind,
                    base: *c,
                    base_betti,
                    steps,
                });
            }
            steps.push(RecipeStep {
                f_degree: max_facet_weight(c),
                shift_applied: k as u32,
            });
        }
        Err(Error::Parse(format!(
            "chain from {top} ends before reaching a base curve"
        )))
    }

    pub fn from_trace(trace: &ReductionTrace) -> Result<Self> {
        Self::from_chain(&trace.chain())
    }

    pub fn assemble(&self) -> BettiTable {
        let mut table = self.base_betti.shifted(self.steps.len() as u32);
        for step in &self.steps {
            let e = step.generator_degree();
            table.add(0, e, 1);
            table.add(1, e + 1, 1);
        }
        table
    }
}

/// The curve's own resolution when the assembly stops there: the unit ideal,
/// a power of the `(2,2)` complete intersection, or a minimal curve.
fn base_of(c: &TetTuple) -> Result<Option<(BaseKind, BettiTable)>> {
    Ok(if c.is_trivial() {
        Some((BaseKind::Trivial, BettiTable::from_entries([(0, 0, 1)])))
    } else if let Some(r) = ci_power_form(c) {
        Some((BaseKind::CIPower(r), ci_power_betti(r)))
    } else if is_minimal(c) {
        Some((BaseKind::MinimalCurve, minimal_curve_betti(c)?))
    } else {
        None
    })
}

pub fn resolution_recipe(t: &TetTuple) -> Result<ResolutionRecipe> {
    ResolutionRecipe::from_trace(&reduction_trace(t))
}

pub fn betti_table(t: &TetTuple) -> Result<BettiTable> {
    Ok(resolution_recipe(t)?.assemble())
}

/// Every Betti table obtained by following any maximal-weight facet at every
/// step. A single element means the result is independent of tie-breaking.
pub fn betti_tables_over_tie_breaks(t: &TetTuple) -> Result<BTreeSet<BettiTable>> {
    fn rec(t: &TetTuple, memo: &mut HashMap<TetTuple, BTreeSet<BettiTable>>) -> Result<BTreeSet<BettiTable>> {
        if let Some(hit) = memo.get(t) {
            return Ok(hit.clone());
        }
        let out = if let Some((_, base)) = base_of(t)? {
            BTreeSet::from([base])
        } else {
            let mut set = BTreeSet::new();
            for step in max_weight_reductions(t) {
                for child in rec(&step.child, memo)? {
                    let mut table = child.shifted(1);
                    let e = step.f_degree();
                    table.add(0, e, 1);
                    table.add(1, e + 1, 1);
                    set.insert(table);
                }
            }
            set
        };
        memo.insert(*t, out.clone());
        Ok(out)
    }
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    rec(t, &mut HashMap::new())
}

pub fn has_linear_resolution(t: &TetTuple) -> Result<bool> {
    Ok(betti_table(t)?.is_linear())
}

/// The five orbits of ACM curves with a linear resolution.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum AcmLinearFamily {
    /// `(r,0,0,0,0,0)`: a line with multiplicity `r`.
    A(u32),
    /// `(1,1,0,1,0,0)`: three non-coplanar lines through a point.
    B,
    /// `(1,1,1,1,1,1)`.
    C,
    /// `(2,1,0,1,0,1)`.
    D,
    /// `(2,1,1,1,1,2)`.
    E,
}

impl AcmLinearFamily {
    pub fn representative(&self) -> TetTuple {
        match *self {
            AcmLinearFamily::A(r) => TetTuple::new([r, 0, 0, 0, 0, 0]),
            AcmLinearFamily::B => TetTuple::new([1, 1, 0, 1, 0, 0]),
            AcmLinearFamily::C => TetTuple::new([1, 1, 1, 1, 1, 1]),
            AcmLinearFamily::D => TetTuple::new([2, 1, 0, 1, 0, 1]),
            AcmLinearFamily::E => TetTuple::new([2, 1, 1, 1, 1, 2]),
        }
    }

    pub fn label(&self) -> char {
        match self {
            AcmLinearFamily::A(_) => 'a',
            AcmLinearFamily::B => 'b',
            AcmLinearFamily::C => 'c',
            AcmLinearFamily::D => 'd',
            AcmLinearFamily::E => 'e',
        }
    }
}

pub fn acm_linear_family(t: &TetTuple) -> Option<AcmLinearFamily> {
    let c = canonicalize(t).0;
    let r = t.max_entry();
    [
        AcmLinearFamily::A(r),
        AcmLinearFamily::B,
        AcmLinearFamily::C,
        AcmLinearFamily::D,
        AcmLinearFamily::E,
    ]
    .into_iter()
    .find(|fam| r > 0 && canonicalize(&fam.representative()).0 == c)
}

/// Canonical forms of every ACM tuple with `Σ aᵢ ≤ bound` whose resolution is linear.
pub fn acm_linear_orbits(bound: u32) -> BTreeSet<TetTuple> {
    TetTuple::all_with_total_at_most(bound)
        .into_iter()
        .filter(|t| !t.is_trivial() && reduction_trace(t).is_acm())
        .filter(|t| has_linear_resolution(t).unwrap_or(false))
        .map(|t| canonicalize(&t).0)
        .collect()
}

/// Curves `J` with `apply_reduction(J, ty) = t` and `deg F = required_f_degree`.
pub fn ascent_candidates(t: &TetTuple, required_f_degree: u32) -> BTreeSet<(TetTuple, ReductionType)> {
    let mut out = BTreeSet::new();
    for ty in ReductionType::ALL {
        let facet = ty.facet();
        // each zero facet entry may stay 0 or become 1
        let zeros: Vec<usize> = facet.iter().copied().filter(|&i| t.get(i) == 0).collect();
        for mask in 0u32..(1 << zeros.len()) {
            let mut e = t.entries();
            for &i in &facet {
                if e[i] > 0 {
                    e[i] += 1;
                }
            }
            for (bit, &i) in zeros.iter().enumerate() {
                e[i] = (mask >> bit) & 1;
            }
            let parent = TetTuple::new(e);
            if let Ok(step) = apply_reduction(&parent, ty) {
                if step.child == *t && step.f_degree() == required_f_degree {
                    out.insert((parent, ty));
                }
            }
        }
    }
    out
}

/// Level cap for [`enumerate_linear_in_class`]; each of the four link types
/// can be used at most once along a linear ascent.
pub const ENUMERATION_LEVEL_CAP: usize = 10;

/// Canonical forms of every curve with a linear resolution obtained by
/// ascending from a minimal curve with links that keep the resolution linear.
pub fn enumerate_linear_in_class(minimal: &TetTuple) -> Result<BTreeSet<TetTuple>> {
    if minimal.is_trivial() {
        return Err(Error::IsAcm(*minimal));
    }
    if !is_minimal(minimal) {
        return Err(Error::NotMinimal(*minimal));
    }
    let mut degree = minimal_curve_betti(minimal)?
        .min_generator_degree()
        .expect("minimal curves have generators");
    let mut found: BTreeSet<TetTuple> = BTreeSet::from([canonicalize(minimal).0]);
    let mut level: BTreeSet<TetTuple> = BTreeSet::from([*minimal]);
    for _ in 0..ENUMERATION_LEVEL_CAP {
        degree += 1;
        let mut next = BTreeSet::new();
        for t in &level {
            for (parent, _) in ascent_candidates(t, degree) {
                if has_linear_resolution(&parent)? {
                    next.insert(parent);
                }
            }
        }
        if next.is_empty() {
            return Ok(found);
        }
        found.extend(next.iter().map(|p| canonicalize(p).0));
        level = next;
    }
    Err(Error::EnumerationCap(ENUMERATION_LEVEL_CAP))
}

/// Betti table of the revlex generic initial ideal: equal to the curve's
/// table when the ideal is componentwise linear, otherwise with `r` extra
/// generators and syzygies one degree above the lowest generator degree.
pub fn gin_betti_prediction(t: &TetTuple) -> Result<BettiTable> {
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    let trace = reduction_trace(t);
    let mut table = ResolutionRecipe::from_trace(&trace)?.assemble();
    if !cwl_from_trace(&trace) {
        let r = trace.first_ci_power.expect("non-CWL curves meet a CI power").r as u64;
        let p = table.min_generator_degree().expect("non-trivial");
        table.add(0, p + 1, r);
        table.add(1, p + 1, r);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TetTuple {
        s.parse().unwrap()
    }

    fn table(entries: &[(u32, u32, u64)]) -> BettiTable {
        BettiTable::from_entries(entries.iter().copied())
    }

    #[test]
    fn minimal_curve_examples() {
        assert_eq!(
            minimal_curve_betti(&t("4,1,2,1,1,5")).unwrap(),
            table(&[(0, 9, 24), (1, 10, 37), (2, 11, 14)])
        );
        assert_eq!(
            minimal_curve_betti(&t("1,0,0,0,0,1")).unwrap(),
            table(&[(0, 2, 4), (1, 3, 4), (2, 4, 1)])
        );
        for r in 1..6u32 {
            let b = minimal_curve_betti(&TetTuple::new([r, 0, r - 1, r - 1, 0, r])).unwrap();
            let r64 = r as u64;
            assert_eq!(
                b,
                table(&[(0, 2 * r, 3 * r64 + 1), (1, 2 * r + 1, 4 * r64), (2, 2 * r + 2, r64)])
            );
        }
        assert_eq!(
            minimal_curve_betti(&t("0,1,1,1,1,0")),
            Err(Error::NotMinimal(t("0,1,1,1,1,0")))
        );
    }

    #[test]
    fn ci_power_examples() {
        assert_eq!(ci_power_betti(1), table(&[(0, 2, 2), (1, 4, 1)]));
        assert_eq!(ci_power_betti(2), table(&[(0, 4, 3), (1, 6, 2)]));
        assert_eq!(ci_power_betti(4), table(&[(0, 8, 5), (1, 10, 4)]));
    }

    #[test]
    fn worked_tables() {
        assert_eq!(
            betti_table(&t("1,2,1,2,0,2")).unwrap(),
            table(&[(0, 6, 1), (0, 4, 2), (0, 3, 1), (1, 7, 1), (1, 5, 2)])
        );
        assert_eq!(
            betti_table(&t("1,3,4,2,3,0")).unwrap(),
            table(&[(0, 8, 1), (0, 7, 1), (0, 6, 3), (1, 9, 1), (1, 8, 3)])
        );
        assert_eq!(
            betti_table(&t("7,5,5,2,1,6")).unwrap(),
            table(&[
                (0, 17, 1),
                (0, 15, 1),
                (0, 13, 26),
                (1, 18, 1),
                (1, 16, 1),
                (1, 14, 39),
                (2, 15, 14)
            ])
        );
        assert_eq!(betti_table(&TetTuple::TRIVIAL), Err(Error::TrivialCurve));
    }

    #[test]
    fn recipe_for_acm_cwl_example() {
        let r = resolution_recipe(&t("1,2,1,2,0,2")).unwrap();
        assert_eq!(r.base_kind, BaseKind::Trivial);
        let degrees: Vec<u32> = r.steps.iter().map(RecipeStep::generator_degree).collect();
        assert_eq!(degrees, vec![6, 4, 4]);
    }

    #[test]
    fn linear_resolution_examples() {
        assert_eq!(has_linear_resolution(&t("2,1,1,1,1,2")), Ok(true));
        assert_eq!(has_linear_resolution(&t("1,2,1,2,0,2")), Ok(false));
        assert_eq!(has_linear_resolution(&t("3,2,1,1,2,3")), Ok(true));
    }

    #[test]
    fn acm_family_examples() {
        assert_eq!(acm_linear_family(&t("3,0,0,0,0,0")), Some(AcmLinearFamily::A(3)));
        assert_eq!(acm_linear_family(&t("0,0,0,0,3,0")), Some(AcmLinearFamily::A(3)));
        assert_eq!(acm_linear_family(&t("1,1,0,1,0,0")), Some(AcmLinearFamily::B));
        assert_eq!(acm_linear_family(&t("2,1,1,1,1,1")), None);
        assert_eq!(has_linear_resolution(&t("2,1,1,1,1,1")), Ok(false));
        assert_eq!(acm_linear_family(&TetTuple::TRIVIAL), None);
    }

    #[test]
    fn ascents_of_two_skew_lines() {
        let up = ascent_candidates(&t("1,0,0,0,0,1"), 3);
        assert!(up.contains(&(t("2,1,0,0,0,1"), ReductionType::A)));
        for (p, ty) in &up {
            let s = apply_reduction(p, *ty).unwrap();
            assert_eq!(s.child, t("1,0,0,0,0,1"));
            assert_eq!(s.f_degree(), 3);
        }
    }

    #[test]
    fn ascents_of_trivial_curve_are_lines() {
        let up = ascent_candidates(&TetTuple::TRIVIAL, 1);
        let parents: BTreeSet<TetTuple> = up.iter().map(|p| p.0).collect();
        assert_eq!(parents.len(), 6);
        assert!(parents.iter().all(|p| p.total() == 1));
    }

    #[test]
    fn ascents_of_ci_power_round_trip() {
        let base = t("0,4,4,4,4,0");
        for e in 8..=13 {
            for (p, ty) in ascent_candidates(&base, e) {
                let s = apply_reduction(&p, ty).unwrap();
                assert_eq!((s.child, s.f_degree()), (base, e));
            }
        }
        // (2,5,5,5,5,0) lies two links above, not one
        assert!(ascent_candidates(&base, 10).iter().all(|(p, _)| *p != t("2,5,5,5,5,0")));
        assert!(!ascent_candidates(&base, 10).is_empty());
    }

    #[test]
    fn acm_linear_beyond_the_five_families() {
        // a chain of three lines: (ac, bc, bd) with two linear syzygies
        let chain = t("1,0,0,1,0,1");
        assert!(crate::tuple::is_acm(&chain) && has_linear_resolution(&chain).unwrap());
        assert_eq!(acm_linear_family(&chain), None);
        assert_eq!(acm_linear_family(&t("1,1,0,1,0,0")), Some(AcmLinearFamily::B));
        let orbits = acm_linear_orbits(10);
        let outside: BTreeSet<TetTuple> = orbits
            .iter()
            .copied()
            .filter(|o| acm_linear_family(o).is_none())
            .collect();
        let expected: BTreeSet<TetTuple> = ["1,0,0,1,0,1", "0,1,1,1,2,0", "0,1,2,2,2,0", "0,2,2,2,3,0"]
            .iter()
            .map(|s| canonicalize(&t(s)).0)
            .collect();
        assert_eq!(outside, expected);
    }

    #[test]
    fn isolated_minimal_curves() {
        assert_eq!(
            enumerate_linear_in_class(&t("3,0,0,0,0,3")).unwrap(),
            BTreeSet::from([t("0,0,3,3,0,0")])
        );
        // slack 2 is not enough: (3,1,1,0,0,2) links down to (2,0,0,0,0,2) with deg F = 5
        let found = enumerate_linear_in_class(&t("2,0,0,0,0,2")).unwrap();
        assert_eq!(found.len(), 6);
        assert!(found.contains(&canonicalize(&t("3,1,1,0,0,2")).0));
        let step = apply_reduction(&t("3,1,1,0,0,2"), ReductionType::A).unwrap();
        assert_eq!((step.child, step.f_degree()), (t("2,0,0,0,0,2"), 5));
    }

    #[test]
    fn class_of_two_skew_lines() {
        let found = enumerate_linear_in_class(&t("1,0,0,0,0,1")).unwrap();
        let expected: BTreeSet<TetTuple> = [
            "1,0,0,0,0,1",
            "2,1,0,0,0,1",
            "3,1,0,1,0,1",
            "2,2,0,0,0,2",
            "0,1,1,1,3,0",
            "0,1,2,2,1,1",
            "3,2,0,1,1,2",
            "3,2,1,1,2,3",
        ]
        .iter()
        .map(|s| canonicalize(&t(s)).0)
        .collect();
        assert_eq!(found, expected);
        // (2,1,1,1,0,1) has a linear-looking shape but is ACM, so it lies in another class
        assert!(crate::tuple::reduction_trace(&t("2,1,1,1,0,1")).is_acm());
    }


    #[test]
    fn enumeration_errors() {
        assert_eq!(
            enumerate_linear_in_class(&t("2,1,0,0,0,1")),
            Err(Error::NotMinimal(t("2,1,0,0,0,1")))
        );
        assert_eq!(
            enumerate_linear_in_class(&TetTuple::TRIVIAL),
            Err(Error::IsAcm(TetTuple::TRIVIAL))
        );
    }

    #[test]
    fn gin_prediction_examples() {
        let base = betti_table(&t("2,5,5,5,5,0")).unwrap();
        let mut expected = base.clone();
        expected.add(0, 11, 4);
        expected.add(1, 11, 4);
        assert_eq!(gin_betti_prediction(&t("2,5,5,5,5,0")).unwrap(), expected);
        assert_eq!(
            expected,
            table(&[(0, 10, 5), (0, 11, 4), (0, 12, 2), (1, 11, 4), (1, 12, 4), (1, 13, 2)])
        );
        for r in 1..5u32 {
            let c = TetTuple::new([0, r, r, r, r, 0]);
            let mut want = ci_power_betti(r);
            want.add(0, 2 * r + 1, r as u64);
            want.add(1, 2 * r + 1, r as u64);
            assert_eq!(gin_betti_prediction(&c).unwrap(), want);
        }
        assert_eq!(
            gin_betti_prediction(&t("10,1,2,3,10,1")).unwrap(),
            betti_table(&t("10,1,2,3,10,1")).unwrap()
        );
    }
}
