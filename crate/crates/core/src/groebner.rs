//! Prime-field Gröbner bases in `k[a,b,c,d]` under degrevlex, used to compute
//! generic initial ideals numerically.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gin::{stability_witness, StableIdeal};
use crate::monomial::{Monomial, MonomialIdeal};

pub const DEFAULT_PRIME: u64 = 32003;
pub const SECOND_PRIME: u64 = 65521;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PrimeField {
    /// `p` must be an odd prime below 2³¹ so products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn add(&self, x: PrimeFieldElement, y: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement((x.0 + y.0) % self.p)
    }

    pub fn sub(&self, x: PrimeFieldElement, y: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement((x.0 + self.p - y.0) % self.p)
    }

    pub fn mul(&self, x: PrimeFieldElement, y: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement(x.0 * y.0 % self.p)
    }

    pub fn neg(&self, x: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement((self.p - x.0) % self.p)
    }

    /// Panics on zero.
    pub fn inv(&self, x: PrimeFieldElement) -> PrimeFieldElement {
        assert!(x.0 != 0, "inverse of zero");
        let (mut base, mut exp, mut acc) = (x.0, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        PrimeFieldElement(acc)
    }
}

/// A residue in `[0, p)`; the modulus lives in the enclosing [`PrimeField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement(u64);

impl PrimeFieldElement {
    pub const ZERO: PrimeFieldElement = PrimeFieldElement(0);
    pub const ONE: PrimeFieldElement = PrimeFieldElement(1);

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

/// Terms sorted ascending in degrevlex, so the leading term is last.
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial4 {
    terms: Vec<(Monomial, PrimeFieldElement)>,
}

impl Polynomial4 {
    pub fn zero() -> Self {
        Polynomial4 { terms: Vec::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial4 { terms: vec![(m, PrimeFieldElement::ONE)] }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, PrimeFieldElement)>>(
        field: &PrimeField,
        terms: I,
    ) -> Self {
        let mut acc: HashMap<Monomial, PrimeFieldElement> = HashMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert(PrimeFieldElement::ZERO);
            *slot = field.add(*slot, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| x.0.cmp_degrevlex(&y.0));
        Polynomial4 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<PrimeFieldElement> {
        self.terms.last().map(|t| t.1)
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, PrimeFieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> PrimeFieldElement {
        self.terms
            .binary_search_by(|t| t.0.cmp_degrevlex(m))
            .map(|i| self.terms[i].1)
            .unwrap_or(PrimeFieldElement::ZERO)
    }

    pub fn scale(&self, field: &PrimeField, c: PrimeFieldElement, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial4 {
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), field.mul(*x, c))).collect(),
        }
    }

    pub fn make_monic(&self, field: &PrimeField) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(c) => self.scale(field, field.inv(c), &Monomial::ONE),
        }
    }

    /// `self + c·m·other`, merging the two sorted term lists.
    pub fn add_scaled(
        &self,
        field: &PrimeField,
        c: PrimeFieldElement,
        m: &Monomial,
        other: &Polynomial4,
    ) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().map(|(t, x)| (t.mul(m), field.mul(*x, c))).peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(l), Some(r)) => l.0.cmp_degrevlex(&r.0),
            };
            match ord {
                Ordering::Less => out.push(*left.next().unwrap()),
                Ordering::Greater => out.push(right.next().unwrap()),
                Ordering::Equal => {
                    let (t, x) = *left.next().unwrap();
                    let (_, y) = right.next().unwrap();
                    let s = field.add(x, y);
                    if !s.is_zero() {
                        out.push((t, s));
                    }
                }
            }
        }
        Polynomial4 { terms: out }
    }

    pub fn mul(&self, field: &PrimeField, other: &Polynomial4) -> Self {
        Self::from_terms(
            field,
            self.terms.iter().flat_map(|(s, x)| {
                other.terms.iter().map(move |(t, y)| (s.mul(t), field.mul(*x, *y)))
            }),
        )
    }
}

impl fmt::Display for Polynomial4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| match (c.value(), *m == Monomial::ONE) {
                (_, true) => c.value().to_string(),
                (1, false) => m.to_string(),
                (v, false) => format!("{v}*{m}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Polynomial4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Matrix4 = [[u64; 4]; 4];

fn determinant_mod(field: &PrimeField, m: &Matrix4) -> u64 {
    let p = field.modulus();
    let mut a = *m;
    let mut det = 1u64;
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !a[r][col].is_multiple_of(p)) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = field.inv(PrimeFieldElement(a[col][col])).value();
        for r in col + 1..4 {
            let factor = a[r][col] * inv % p;
            let top = a[col];
            for (x, y) in a[r].iter_mut().zip(top).skip(col) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
    }
    det
}

/// Seeded random matrix over `F_p`, resampled until invertible.
pub fn random_invertible_matrix(field: &PrimeField, seed: u64) -> Matrix4 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = [[0u64; 4]; 4];
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = rng.gen_range(0..field.modulus());
            }
        }
        if determinant_mod(field, &m) != 0 {
            return m;
        }
    }
}

/// Substitutes `x_i ↦ Σ_j m[i][j] x_j` into each minimal generator.
pub fn change_coordinates(field: &PrimeField, ideal: &MonomialIdeal, m: &Matrix4) -> Vec<Polynomial4> {
    let forms: Vec<Polynomial4> = m
        .iter()
        .map(|row| {
            Polynomial4::from_terms(field, (0..4).map(|j| (Monomial::var(j), PrimeFieldElement(row[j]))))
        })
        .collect();
    let mut powers: HashMap<(usize, u32), Polynomial4> = HashMap::new();
    let mut power = |i: usize, e: u32| -> Polynomial4 {
        if let Some(p) = powers.get(&(i, e)) {
            return p.clone();
        }
        let mut acc = Polynomial4::monomial(Monomial::ONE);
        for _ in 0..e {
            acc = acc.mul(field, &forms[i]);
        }
        powers.insert((i, e), acc.clone());
        acc
    };
    ideal
        .generators()
        .iter()
        .map(|g| {
            (0..4).fold(Polynomial4::monomial(Monomial::ONE), |acc, i| {
                acc.mul(field, &power(i, g.0[i]))
            })
        })
        .collect()
}

pub fn generic_change(ideal: &MonomialIdeal, seed: u64, field: &PrimeField) -> Vec<Polynomial4> {
    change_coordinates(field, ideal, &random_invertible_matrix(field, seed))
}

/// Full reduction of `f` modulo the monic polynomials `basis`.
fn normal_form(field: &PrimeField, f: &Polynomial4, basis: &[Polynomial4]) -> Polynomial4 {
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, PrimeFieldElement)> = Vec::new();
    while let Some((m, c)) = p.terms.last().copied() {
        let divisor = basis.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            m.checked_div(&lm).map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => p = p.add_scaled(field, field.neg(c), &q, g),
            None => {
                rest.push((m, c));
                p.terms.pop();
            }
        }
    }
    rest.reverse();
    Polynomial4 { terms: rest }
}

fn s_polynomial(field: &PrimeField, f: &Polynomial4, g: &Polynomial4) -> Polynomial4 {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(&lg);
    let left = f.scale(field, PrimeFieldElement::ONE, &l.checked_div(&lf).unwrap());
    left.add_scaled(field, field.neg(PrimeFieldElement::ONE), &l.checked_div(&lg).unwrap(), g)
}

/// The reduced degrevlex Gröbner basis, sorted by leading monomial, largest first.
pub fn groebner_basis(field: &PrimeField, gens: &[Polynomial4]) -> Vec<Polynomial4> {
    let mut basis: Vec<Polynomial4> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.make_monic(field)).collect();
    let lm = |b: &[Polynomial4], i: usize| b[i].leading_monomial().unwrap();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((lm(&basis, i).lcm(&lm(&basis, j)).degree(), i, j));
        }
    }
    let is_pending = |pending: &BTreeSet<(u32, usize, usize)>, b: &[Polynomial4], i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        pending.contains(&(lm(b, i).lcm(&lm(b, j)).degree(), i, j))
    };
    while let Some(pair) = pending.pop_first() {
        let (_, i, j) = pair;
        let (li, lj) = (lm(&basis, i), lm(&basis, j));
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !is_pending(&pending, &basis, i, k)
                && !is_pending(&pending, &basis, j, k)
        });
        if chain {
            continue;
        }
        let h = normal_form(field, &s_polynomial(field, &basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.make_monic(field);
        let n = basis.len();
        let lh = h.leading_monomial().unwrap();
        basis.push(h);
        for k in 0..n {
            pending.insert((lm(&basis, k).lcm(&lh).degree(), k, n));
        }
    }
    reduce_basis(field, basis)
}

fn reduce_basis(field: &PrimeField, basis: Vec<Polynomial4>) -> Vec<Polynomial4> {
    let mut minimal: Vec<Polynomial4> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, other)| {
            let lo = other.leading_monomial().unwrap();
            k != i && lo.divides(&lg) && (lo != lg || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial4> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial4> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
            let g = &minimal[i];
            let (m, c) = *g.terms.last().unwrap();
            let tail = Polynomial4 { terms: g.terms[..g.terms.len() - 1].to_vec() };
            let mut r = normal_form(field, &tail, &others);
            r.terms.push((m, c));
            r
        })
        .collect();
    reduced.sort_by(|x, y| {
        y.leading_monomial().unwrap().cmp_degrevlex(&x.leading_monomial().unwrap())
    });
    reduced
}

pub fn initial_ideal(basis: &[Polynomial4]) -> MonomialIdeal {
    MonomialIdeal::from_generators(basis.iter().filter_map(|g| g.leading_monomial()))
}

/// Initial ideal after a seeded generic change of coordinates, over `F_p`.
pub fn gin_single_run(ideal: &MonomialIdeal, seed: u64, field: &PrimeField) -> MonomialIdeal {
    initial_ideal(&groebner_basis(field, &generic_change(ideal, seed, field)))
}

/// gin computed once per (seed, prime) pair; all runs must agree and the
/// common answer must be strongly stable.
pub fn gin_oracle(ideal: &MonomialIdeal, seeds: [u64; 2], primes: [u64; 2]) -> Result<StableIdeal> {
    let mut results = Vec::new();
    for p in primes {
        let field = PrimeField::new(p)?;
        for seed in seeds {
            results.push((seed, p, gin_single_run(ideal, seed, &field)));
        }
    }
    let first = results[0].2.clone();
    if results.iter().any(|(_, _, r)| *r != first) {
        return Err(Error::Disagreement(
            results.iter().map(|(s, p, r)| format!("seed {s}, p = {p}: {r}")).collect(),
        ));
    }
    if let Some(bad) = stability_witness(&first) {
        return Err(Error::NotBorelFixed(format!("{first} fails at {bad}")));
    }
    StableIdeal::new(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::TetTuple;

    fn field() -> PrimeField {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    fn linear(f: &PrimeField, coeffs: [i64; 4]) -> Polynomial4 {
        Polynomial4::from_terms(f, (0..4).map(|j| (Monomial::var(j), f.element(coeffs[j]))))
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(gens.iter().map(|s| s.parse().unwrap()))
    }

    const SEEDS: [u64; 2] = [1, 2];
    const PRIMES: [u64; 2] = [DEFAULT_PRIME, SECOND_PRIME];

    #[test]
    fn field_arithmetic() {
        let f = field();
        let x = f.element(12345);
        assert_eq!(f.mul(x, f.inv(x)), PrimeFieldElement::ONE);
        assert_eq!(f.add(x, f.neg(x)), PrimeFieldElement::ZERO);
        assert_eq!(f.element(-1).value(), DEFAULT_PRIME - 1);
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(32001).is_err());
    }

    #[test]
    fn polynomial_printing() {
        let f = field();
        let p = Polynomial4::from_terms(
            &f,
            [("c".parse().unwrap(), f.element(5)), ("a^2*b".parse().unwrap(), f.element(3))],
        );
        assert_eq!(p.to_string(), "3*a^2*b + 5*c");
        assert_eq!(p.leading_monomial(), Some("a^2*b".parse().unwrap()));
    }

    #[test]
    fn identity_change_is_trivial() {
        let f = field();
        let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        let i = ideal(&["a^2", "b*c"]);
        let polys = change_coordinates(&f, &i, &id);
        let expected: Vec<_> = i.generators().iter().map(|g| Polynomial4::monomial(*g)).collect();
        assert_eq!(polys, expected);
    }

    #[test]
    fn seeded_change_is_deterministic() {
        let f = field();
        let i = ideal(&["a", "b"]);
        assert_eq!(generic_change(&i, 9, &f), generic_change(&i, 9, &f));
        let forms = generic_change(&i, 9, &f);
        assert_eq!(groebner_basis(&f, &forms).len(), 2);
    }

    #[test]
    fn small_bases() {
        let f = field();
        let a = Polynomial4::monomial(Monomial::var(0));
        let b = Polynomial4::monomial(Monomial::var(1));
        assert_eq!(groebner_basis(&f, &[a.clone(), b.clone()]), vec![a.clone(), b.clone()]);
        let sum = linear(&f, [1, 1, 0, 0]);
        let diff = linear(&f, [1, -1, 0, 0]);
        assert_eq!(groebner_basis(&f, &[sum, diff]), vec![a, b]);

        let g1 = Polynomial4::from_terms(
            &f,
            [("a^2".parse().unwrap(), f.element(1)), ("c*d".parse().unwrap(), f.element(4))],
        );
        let g2 = Polynomial4::from_terms(
            &f,
            [("b^3".parse().unwrap(), f.element(1)), ("d^3".parse().unwrap(), f.element(7))],
        );
        let basis = groebner_basis(&f, &[g2.clone(), g1.clone()]);
        assert_eq!(basis, vec![g2, g1]);
    }

    #[test]
    fn twisted_cubic_basis() {
        // the 2x2 minors of [[a,b,c],[b,c,d]] already form a degrevlex basis
        let f = field();
        let minor = |p: &str, q: &str| {
            Polynomial4::from_terms(
                &f,
                [(p.parse().unwrap(), f.element(1)), (q.parse().unwrap(), f.element(-1))],
            )
        };
        let gens = [minor("a*c", "b^2"), minor("a*d", "b*c"), minor("b*d", "c^2")];
        let basis = groebner_basis(&f, &gens);
        assert_eq!(initial_ideal(&basis), ideal(&["b^2", "b*c", "c^2"]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            gin_oracle(&ideal(&["a", "b"]), SEEDS, PRIMES).unwrap().to_ideal(),
            ideal(&["a", "b"])
        );
        let two_lines = MonomialIdeal::of_tuple(&TetTuple::new([1, 0, 0, 0, 0, 1]));
        assert_eq!(
            gin_oracle(&two_lines, SEEDS, PRIMES).unwrap().to_ideal(),
            ideal(&["a^2", "a*b", "b^2", "a*c"])
        );
        let acm = MonomialIdeal::of_tuple(&TetTuple::new([1, 2, 2, 2, 1, 2]));
        assert_eq!(
            gin_oracle(&acm, SEEDS, PRIMES).unwrap().to_ideal(),
            ideal(&["a^4", "a^3*b", "a^2*b^3", "a*b^4", "b^6"])
        );
    }

    #[test]
    fn bad_prime_rejected() {
        assert!(matches!(
            gin_oracle(&ideal(&["a"]), SEEDS, [DEFAULT_PRIME, 100]),
            Err(Error::Parse(_))
        ));
    }
}
