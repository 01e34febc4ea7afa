//! Reverse-lexicographic generic initial ideals of tetrahedral curves, and
//! the Eliahou–Kervaire Betti numbers of strongly stable ideals.

use std::fmt;

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::tuple::{
    buchsbaum_minimal_form, reduction_trace, regularity_closed_form, TerminalKind, TetTuple,
};

/// First failing monomial of the exchange test, if any: for every generator
/// `u` and variable `x_j | u`, `u·x_i/x_j` must lie in the ideal for `i < j`.
pub fn stability_witness(ideal: &MonomialIdeal) -> Option<Monomial> {
    for u in ideal.generators() {
        for j in 1..4 {
            if u.0[j] == 0 {
                continue;
            }
            for i in 0..j {
                let mut e = u.0;
                e[j] -= 1;
                e[i] += 1;
                if !ideal.contains(&Monomial(e)) {
                    return Some(*u);
                }
            }
        }
    }
    None
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    stability_witness(ideal).is_none()
}

/// A strongly stable monomial ideal (order `a > b > c > d`).
/// Generators are kept in lexicographic order, largest first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StableIdeal {
    gens: Vec<Monomial>,
}

impl StableIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if let Some(bad) = stability_witness(&ideal) {
            return Err(Error::NotStable(bad));
        }
        Ok(Self::from_ideal_unchecked(ideal))
    }

    fn from_ideal_unchecked(ideal: MonomialIdeal) -> Self {
        let mut gens = ideal.generators().to_vec();
        gens.sort_by(|x, y| y.cmp_lex(x));
        StableIdeal { gens }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(self.gens.iter().copied())
    }
}

impl fmt::Display for StableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for StableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `β_{i, deg u + i} = Σ_u C(max(u) - 1, i)` over minimal generators `u`.
pub fn ek_betti(s: &StableIdeal) -> BettiTable {
    let mut table = BettiTable::new();
    for u in s.generators() {
        let m = u.max_index().max(1) as u64;
        for i in 0..m {
            table.add(i as u32, u.degree() + i as u32, binomial(m - 1, i));
        }
    }
    table
}

/// The lexicographic ideal of `k[a,b]` (embedded in `k[a,b,c,d]`) whose
/// quotient has Hilbert function with second difference `h`.
pub fn lex_ideal_from_h_vector(h: &[i64]) -> MonomialIdeal {
    let mut gens = Vec::new();
    for d in 0..=h.len() as u32 {
        let hd = h.get(d as usize).copied().unwrap_or(0).max(0) as u32;
        let take = (d + 1).saturating_sub(hd);
        gens.extend((0..take).map(|k| Monomial([d - k, k, 0, 0])));
    }
    MonomialIdeal::from_generators(gens)
}

/// gin of an ACM curve: the two-variable lex ideal with the curve's h-vector.
pub fn gin_acm(t: &TetTuple) -> Result<StableIdeal> {
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    if !reduction_trace(t).is_acm() {
        return Err(Error::NotAcm(*t));
    }
    let reg = regularity_closed_form(t)?;
    let hilbert = MonomialIdeal::of_tuple(t).hilbert_data(reg + 3)?;
    StableIdeal::new(lex_ideal_from_h_vector(&hilbert.h_vector))
}

/// gin of the minimal Buchsbaum curve `(r,0,r-1,r-1,0,r)`:
/// `(a², ab, b², ac)` for `r = 1`, then
/// `(a²)·gin(r) + (a b^{2r+1}, b^{2r+2}, a^{r+1} b^r c)`.
pub fn gin_buchsbaum_minimal(r: u32) -> StableIdeal {
    assert!(r >= 1, "Buchsbaum minimal curves start at r = 1");
    let mut ideal = MonomialIdeal::from_generators(
        ["a^2", "a*b", "b^2", "a*c"].map(|s| s.parse::<Monomial>().expect("literal")),
    );
    for k in 1..r {
        let extra = [
            Monomial([1, 2 * k + 1, 0, 0]),
            Monomial([0, 2 * k + 2, 0, 0]),
            Monomial([k + 1, k, 1, 0]),
        ];
        ideal = ideal
            .mul_monomial(&Monomial::var_pow(0, 2))
            .sum(&MonomialIdeal::from_generators(extra));
    }
    StableIdeal::from_ideal_unchecked(ideal)
}

/// `a·gin(I) + (b^e)`: the gin after a maximal-facet basic double link with `deg F = e`.
pub fn gin_bdl_step(gin: &StableIdeal, e: u32) -> StableIdeal {
    let ideal = gin
        .to_ideal()
        .mul_monomial(&Monomial::var(0))
        .sum(&MonomialIdeal::from_generators([Monomial::var_pow(1, e)]));
    StableIdeal::from_ideal_unchecked(ideal)
}

/// gin of a curve when it is known: ACM curves, and curves whose reduction
/// ends at a minimal Buchsbaum curve. `None` for every other minimal class.
pub fn gin_of_curve(t: &TetTuple) -> Result<Option<StableIdeal>> {
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    let trace = reduction_trace(t);
    if trace.terminal_kind == TerminalKind::Trivial {
        return gin_acm(t).map(Some);
    }
    let Some(r) = buchsbaum_minimal_form(&trace.terminal) else {
        return Ok(None);
    };
    let gin = trace
        .steps
        .iter()
        .rev()
        .fold(gin_buchsbaum_minimal(r), |g, step| gin_bdl_step(&g, step.f_degree()));
    Ok(Some(gin))
}
