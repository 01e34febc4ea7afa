//! Monomials and monomial ideals in `k[a,b,c,d]`.
//!
//! Ideals are always stored by their minimal generating set, sorted in
//! degree-reverse-lexicographic order (largest first) with `a > b > c > d`,
//! so structural equality is ideal equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tuple::{TetTuple, EDGES};

pub const VARIABLES: [char; 4] = ['a', 'b', 'c', 'd'];

/// Index of one of the four variables, `0 = a` through `3 = d`.
pub type Variable = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exponents: [u32; 4]) -> Self {
        Monomial(exponents)
    }

    pub fn var(x: Variable) -> Self {
        Self::var_pow(x, 1)
    }

    pub fn var_pow(x: Variable, e: u32) -> Self {
        let mut exps = [0; 4];
        exps[x] = e;
        Monomial(exps)
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].max(other.0[i]);
        }
        Monomial(e)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].min(other.0[i]);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (i, slot) in e.iter_mut().enumerate() {
            *slot += other.0[i];
        }
        Monomial(e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut e = self.0;
        for (i, slot) in e.iter_mut().enumerate() {
            *slot -= other.0[i];
        }
        Some(Monomial(e))
    }

    /// Position (1-based, `a = 1`) of the last variable dividing the monomial; 0 for 1.
    pub fn max_index(&self) -> usize {
        (0..4).rev().find(|&i| self.0[i] > 0).map_or(0, |i| i + 1)
    }

    /// Degree-reverse-lexicographic comparison with `a > b > c > d`.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..4).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                // smaller power of the last differing variable wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Pure lexicographic comparison with `a > b > c > d`.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VARIABLES[i])?;
            } else {
                write!(f, "{}^{}", VARIABLES[i], e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::ONE);
        }
        let mut exps = [0u32; 4];
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => (
                    v.trim(),
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let mut chars = var.chars();
            let idx = match (chars.next(), chars.next()) {
                (Some(c), None) => VARIABLES
                    .iter()
                    .position(|&v| v == c)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {c:?}")))?,
                _ => return Err(Error::Parse(format!("bad factor {factor:?}"))),
            };
            exps[idx] += pow;
        }
        Ok(Monomial(exps))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All monomials of degree `d`, largest first in degrevlex.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) * (d + 3) / 6) as usize);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            for c in (0..=d - a - b).rev() {
                out.push(Monomial([a, b, c, d - a - b - c]));
            }
        }
    }
    out.sort_by(|x, y| y.cmp_degrevlex(x));
    out
}

/// Number of monomials of degree `d` in four variables.
pub fn count_monomials(d: u32) -> u64 {
    let d = d as u64;
    (d + 1) * (d + 2) * (d + 3) / 6
}

/// A monomial ideal given by its minimal generators. No generators means the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn from_generators<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|x, y| x.cmp_degrevlex(y));
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        // ascending degree, so a divisor is always seen before its multiples
        for m in all {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(|x, y| y.cmp_degrevlex(x));
        MonomialIdeal { gens: minimal }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial::ONE],
        }
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn min_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Componentwise maximum of the generator exponents.
    pub fn exponent_bound(&self) -> Monomial {
        self.gens.iter().fold(Monomial::ONE, |acc, g| acc.lcm(g))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MonomialIdeal::from_generators(self.gens.iter().map(|g| g.mul(m)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        MonomialIdeal::from_generators(self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        MonomialIdeal::from_generators(
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.mul(h))),
        )
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Self {
        MonomialIdeal::from_generators(
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h))),
        )
    }

    /// `(x, y)^n`.
    pub fn edge_power(x: Variable, y: Variable, n: u32) -> Self {
        MonomialIdeal::from_generators(
            (0..=n).map(|i| Monomial::var_pow(x, i).mul(&Monomial::var_pow(y, n - i))),
        )
    }

    /// The ideal `(x1,x2)^{a1} ∩ ... ∩ (x3,x4)^{a6}` of a tetrahedral curve.
    pub fn of_tuple(t: &TetTuple) -> Self {
        let mut ideal = MonomialIdeal::unit();
        for (edge, &(x, y)) in EDGES.iter().enumerate() {
            let n = t.get(edge);
            if n > 0 {
                ideal = ideal.intersect(&MonomialIdeal::edge_power(x, y, n));
            }
        }
        ideal
    }

    /// `g·I + (f)`; requires `f ∈ I` and `g ∤ f`.
    pub fn basic_double_link(&self, g: Variable, f: &Monomial) -> Result<Self> {
        if !self.contains(f) {
            return Err(Error::FNotInIdeal(*f));
        }
        if f.0[g] > 0 {
            return Err(Error::GDividesF(*f));
        }
        Ok(self
            .mul_monomial(&Monomial::var(g))
            .sum(&MonomialIdeal::from_generators([*f])))
    }

    /// Degree-`d` monomials of the ideal.
    pub fn graded_piece(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// `(I_d)`: the ideal generated by the degree-`d` part.
    pub fn component_ideal(&self, d: u32) -> Self {
        MonomialIdeal::from_generators(self.graded_piece(d))
    }

    /// `I_{≥d}`: the ideal generated by all elements of degree at least `d`.
    pub fn truncate(&self, d: u32) -> Self {
        MonomialIdeal::from_generators(self.gens.iter().flat_map(|g| {
            let deg = g.degree();
            if deg >= d {
                vec![*g]
            } else {
                monomials_of_degree(d - deg)
                    .into_iter()
                    .map(|m| g.mul(&m))
                    .collect()
            }
        }))
    }

    /// `dim_k (R/I)_d`.
    pub fn quotient_dimension(&self, d: u32) -> u64 {
        count_monomials(d) - self.graded_piece(d).len() as u64
    }

    pub fn hilbert_data(&self, upto: u32) -> Result<HilbertData> {
        HilbertData::compute(self, upto)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hilbert function of `R/I` in degrees `0..=upto`, with the derived h-vector and degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub values: Vec<u64>,
    /// Second difference of `values`, trailing zeros dropped.
    pub h_vector: Vec<i64>,
    /// Eventual first difference of `values`.
    pub degree: u64,
}

impl HilbertData {
    fn compute(ideal: &MonomialIdeal, upto: u32) -> Result<Self> {
        let values: Vec<u64> = (0..=upto).map(|d| ideal.quotient_dimension(d)).collect();
        let first: Vec<i64> = (0..values.len())
            .map(|d| values[d] as i64 - if d > 0 { values[d - 1] as i64 } else { 0 })
            .collect();
        let n = first.len();
        let past_generators = ideal.max_generator_degree().is_none_or(|m| upto > m);
        if n < 3 || !past_generators || first[n - 1] != first[n - 2] {
            return Err(Error::BoundTooSmall(upto));
        }
        let mut h_vector: Vec<i64> = (0..n)
            .map(|d| first[d] - if d > 0 { first[d - 1] } else { 0 })
            .collect();
        while h_vector.last() == Some(&0) {
            h_vector.pop();
        }
        Ok(HilbertData {
            degree: first[n - 1] as u64,
            values,
            h_vector,
        })
    }
}
