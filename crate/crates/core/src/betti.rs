//! Graded Betti numbers of monomial ideals by brute force over upper Koszul
//! simplicial complexes:
//! `β_{i,m}(I) = dim H̃_{i-1}(K^m(I))`, `K^m(I) = {τ ⊆ {a,b,c,d} : m/x^τ ∈ I}`.
//!
//! Index `i = 0` counts minimal generators of `I`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::monomial::{Monomial, MonomialIdeal};

/// A simplicial complex on the vertex set `{a,b,c,d}`, stored as the set of
/// its faces: bit `s` is set when the subset with bitmask `s` is a face.
/// `faces == 0` is the void complex; `faces == 1` is `{∅}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SimplicialComplex4 {
    faces: u16,
}

impl SimplicialComplex4 {
    pub const VOID: SimplicialComplex4 = SimplicialComplex4 { faces: 0 };
    pub const EMPTY: SimplicialComplex4 = SimplicialComplex4 { faces: 1 };

    /// Downward closure of the given faces (each a vertex bitmask).
    pub fn generated_by(facets: &[u8]) -> Self {
        let mut faces = 0u16;
        for &f in facets {
            let f = f & 0xF;
            // enumerate all submasks of f
            let mut s = f;
            loop {
                faces |= 1 << s;
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        SimplicialComplex4 { faces }
    }

    pub fn full_simplex() -> Self {
        Self::generated_by(&[0xF])
    }

    pub fn contains(&self, face: u8) -> bool {
        self.faces & (1 << face) != 0
    }

    pub fn faces(&self) -> impl Iterator<Item = u8> + '_ {
        (0u8..16).filter(|&s| self.contains(s))
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces().all(|f| (0..4).all(|v| f & (1 << v) == 0 || self.contains(f & !(1 << v))))
    }

    /// A cone (some vertex `v` with `τ ∪ {v}` a face for every face `τ`) is acyclic.
    pub fn is_cone(&self) -> bool {
        self.faces != 0
            && (0..4).any(|v| self.faces().all(|f| self.contains(f | (1 << v))))
    }
}

/// Ranks of reduced homology in dimensions `-1, 0, 1, 2` (over ℚ).
pub fn reduced_homology_ranks(k: &SimplicialComplex4) -> [usize; 4] {
    // chains[d] are the faces of dimension d-1, i.e. with d vertices
    let mut chains: [Vec<u8>; 5] = Default::default();
    for f in k.faces() {
        chains[f.count_ones() as usize].push(f);
    }
    // rank of ∂ : C_{d-1} → C_{d-2} (faces with d vertices to d-1 vertices)
    let mut boundary_rank = [0usize; 6];
    for d in 1..=4 {
        if chains[d].is_empty() || chains[d - 1].is_empty() {
            continue;
        }
        let rows = chains[d - 1].len();
        let cols = chains[d].len();
        let mut mat = vec![vec![0i64; cols]; rows];
        for (c, &face) in chains[d].iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..4 {
                if face & (1 << v) != 0 {
                    let sub = face & !(1 << v);
                    let r = chains[d - 1].iter().position(|&x| x == sub).expect("downward closed");
                    mat[r][c] = sign;
                    sign = -sign;
                }
            }
        }
        boundary_rank[d] = integer_rank(mat);
    }
    let mut out = [0usize; 4];
    for (slot, d) in out.iter_mut().zip(0..4) {
        // faces with d vertices live in dimension d-1
        *slot = chains[d].len() - boundary_rank[d] - boundary_rank[d + 1];
    }
    out
}

/// Exact rank via fraction-free (Bareiss) elimination.
fn integer_rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = 1i64;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn upper_koszul(ideal: &MonomialIdeal, m: &Monomial) -> SimplicialComplex4 {
    let mut faces = 0u16;
    for s in 0u8..16 {
        let tau = Monomial::new([0, 1, 2, 3].map(|v| ((s >> v) & 1) as u32));
        if let Some(q) = m.checked_div(&tau) {
            if ideal.contains(&q) {
                faces |= 1 << s;
            }
        }
    }
    SimplicialComplex4 { faces }
}

/// Graded Betti numbers `β_{i,j}` keyed by `(i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (u32, u32, u64)>>(entries: I) -> Self {
        let mut t = BettiTable::new();
        for (i, j, r) in entries {
            t.add(i, j, r);
        }
        t
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, j: u32, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &r) in &other.entries {
            self.add(i, j, r);
        }
    }

    /// Twist every internal degree up by `s`.
    pub fn shifted(&self, s: u32) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &r)| ((i, j + s), r)).collect(),
        }
    }

    /// `(i, j, rank)` triples sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, i: u32) -> u64 {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    pub fn projective_dimension(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max (j - i)`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.entries().filter(|e| e.0 == 0).map(|e| e.1).collect()
    }

    pub fn min_generator_degree(&self) -> Option<u32> {
        self.generator_degrees().into_iter().min()
    }

    /// All generators in one degree `d` and every `β_{i,j}` sits at `j = d + i`.
    pub fn is_linear(&self) -> bool {
        let gens = self.generator_degrees();
        match gens.as_slice() {
            [d] => self.entries.keys().all(|&(i, j)| j == d + i),
            _ => false,
        }
    }

    /// `Σ_i (-1)^i β_{i,j}` for every `j` with a non-zero sum.
    pub fn alternating_sums(&self) -> BTreeMap<u32, i64> {
        let mut out = BTreeMap::new();
        for (i, j, r) in self.entries() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *out.entry(j).or_insert(0) += sign * r as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Display as an exact sequence, e.g. `0 → R(-3)^2 → R(-2)^3 → J → 0`.
    pub fn resolution_string(&self, name: &str) -> String {
        let mut out = String::from("0");
        let pd = self.projective_dimension().unwrap_or(0);
        for i in (0..=pd).rev() {
            let mut terms: Vec<(u32, u64)> = self
                .entries()
                .filter(|e| e.0 == i)
                .map(|e| (e.1, e.2))
                .collect();
            if terms.is_empty() {
                continue;
            }
            terms.sort_by_key(|x| std::cmp::Reverse(x.0));
            let parts: Vec<String> = terms
                .iter()
                .map(|&(j, r)| {
                    let base = if j == 0 { "R".to_string() } else { format!("R(-{j})") };
                    if r == 1 {
                        base
                    } else {
                        format!("{base}^{r}")
                    }
                })
                .collect();
            out.push_str(" → ");
            out.push_str(&parts.join(" ⊕ "));
        }
        out.push_str(&format!(" → {name} → 0"));
        out
    }

    /// Macaulay-style grid: row `j - i`, column `i`.
    pub fn grid_string(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return String::from("(zero)\n");
        };
        let rows: Vec<i64> = {
            let mut v: Vec<i64> = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let (lo, hi) = (rows[0], rows[rows.len() - 1]);
        let width = self
            .entries()
            .map(|e| e.2.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len())
            .max(1);
        let mut s = format!("{:>5} ", "");
        for i in 0..=pd {
            s.push_str(&format!(" {:>width$}", i));
        }
        s.push('\n');
        for row in lo..=hi {
            s.push_str(&format!("{:>5}:", row));
            for i in 0..=pd {
                let j = row + i as i64;
                let v = if j >= 0 { self.get(i, j as u32) } else { 0 };
                let cell = if v == 0 { "-".to_string() } else { v.to_string() };
                s.push_str(&format!(" {:>width$}", cell));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (i, j, r)) in self.entries().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j}):{r}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<(u32, u32, u64)>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BettiJson {
            entries: self.entries().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = BettiJson::deserialize(d)?;
        Ok(BettiTable::from_entries(json.entries))
    }
}

/// Membership table for every monomial in the box below `bound`.
struct BoxMembership {
    dims: [usize; 4],
    member: Vec<bool>,
}

impl BoxMembership {
    fn new(ideal: &MonomialIdeal, bound: &Monomial) -> Self {
        let dims = bound.exponents().map(|e| e as usize + 1);
        let size = dims.iter().product();
        let mut member = vec![false; size];
        let this = |e: [usize; 4]| ((e[0] * dims[1] + e[1]) * dims[2] + e[2]) * dims[3] + e[3];
        for g in ideal.generators() {
            let e = g.exponents().map(|x| x as usize);
            if e.iter().zip(dims).all(|(&x, d)| x < d) {
                member[this(e)] = true;
            }
        }
        // row-major order visits m - e_v before m
        for idx in 0..size {
            if member[idx] {
                continue;
            }
            let e = Self::unindex(idx, dims);
            member[idx] = (0..4).any(|v| {
                e[v] > 0 && {
                    let mut p = e;
                    p[v] -= 1;
                    member[this(p)]
                }
            });
        }
        BoxMembership { dims, member }
    }

    fn unindex(mut idx: usize, dims: [usize; 4]) -> [usize; 4] {
        let mut e = [0; 4];
        for v in (0..4).rev() {
            e[v] = idx % dims[v];
            idx /= dims[v];
        }
        e
    }

    fn index(&self, e: [usize; 4]) -> usize {
        ((e[0] * self.dims[1] + e[1]) * self.dims[2] + e[2]) * self.dims[3] + e[3]
    }

    fn koszul(&self, e: [usize; 4]) -> SimplicialComplex4 {
        let mut faces = 0u16;
        for s in 0u8..16 {
            let mut q = e;
            let mut ok = true;
            for (v, slot) in q.iter_mut().enumerate() {
                if s & (1 << v) != 0 {
                    if *slot == 0 {
                        ok = false;
                        break;
                    }
                    *slot -= 1;
                }
            }
            if ok && self.member[self.index(q)] {
                faces |= 1 << s;
            }
        }
        SimplicialComplex4 { faces }
    }
}

/// Betti table of a proper non-zero monomial ideal, summed over all
/// multidegrees in the box below the componentwise maximum of the generators.
pub fn betti_table_oracle(ideal: &MonomialIdeal) -> BettiTable {
    let mut table = BettiTable::new();
    if ideal.is_zero() {
        return table;
    }
    let bound = ideal.exponent_bound();
    let membership = BoxMembership::new(ideal, &bound);
    for idx in 0..membership.member.len() {
        if !membership.member[idx] {
            continue;
        }
        let e = BoxMembership::unindex(idx, membership.dims);
        let k = membership.koszul(e);
        if k.is_cone() {
            continue;
        }
        let degree = e.iter().sum::<usize>() as u32;
        for (i, &rank) in reduced_homology_ranks(&k).iter().enumerate() {
            table.add(i as u32, degree, rank as u64);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::TetTuple;

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(gens.iter().map(|s| s.parse().unwrap()))
    }

    fn table(entries: &[(u32, u32, u64)]) -> BettiTable {
        BettiTable::from_entries(entries.iter().copied())
    }

    #[test]
    fn homology_of_basic_complexes() {
        assert_eq!(reduced_homology_ranks(&SimplicialComplex4::full_simplex()), [0, 0, 0, 0]);
        let two_points = SimplicialComplex4::generated_by(&[0b01, 0b10]);
        assert_eq!(reduced_homology_ranks(&two_points), [0, 1, 0, 0]);
        assert_eq!(reduced_homology_ranks(&SimplicialComplex4::EMPTY), [1, 0, 0, 0]);
        assert_eq!(reduced_homology_ranks(&SimplicialComplex4::VOID), [0, 0, 0, 0]);
        // boundary of a triangle and of a tetrahedron
        let circle = SimplicialComplex4::generated_by(&[0b011, 0b110, 0b101]);
        assert_eq!(reduced_homology_ranks(&circle), [0, 0, 1, 0]);
        let sphere = SimplicialComplex4::generated_by(&[0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(reduced_homology_ranks(&sphere), [0, 0, 0, 1]);
    }

    #[test]
    fn koszul_complexes() {
        let k = upper_koszul(&ideal(&["a", "b"]), &"a*b".parse().unwrap());
        assert!(k.contains(0) && k.contains(0b01) && k.contains(0b10));
        assert!(!k.contains(0b11));
        assert!(k.is_downward_closed());
        assert_eq!(reduced_homology_ranks(&k), [0, 1, 0, 0]);

        // only the empty face survives, so a single generator sits in degree a
        let k = upper_koszul(&ideal(&["a"]), &"a".parse().unwrap());
        assert_eq!(k, SimplicialComplex4::generated_by(&[0]));
        assert_eq!(reduced_homology_ranks(&k), [1, 0, 0, 0]);

        let k = upper_koszul(&ideal(&["a*b", "c*d"]), &"a*b*c*d".parse().unwrap());
        assert_eq!(reduced_homology_ranks(&k)[1], 1);
    }

    #[test]
    fn oracle_small_ideals() {
        assert_eq!(betti_table_oracle(&ideal(&["a", "b"])), table(&[(0, 1, 2), (1, 2, 1)]));
        assert_eq!(betti_table_oracle(&ideal(&["a"])), table(&[(0, 1, 1)]));
        assert_eq!(
            betti_table_oracle(&ideal(&["a", "b", "c", "d"])),
            table(&[(0, 1, 4), (1, 2, 6), (2, 3, 4), (3, 4, 1)])
        );
        assert_eq!(betti_table_oracle(&MonomialIdeal::unit()), table(&[(0, 0, 1)]));
    }

    #[test]
    fn oracle_on_tetrahedral_curves() {
        let i = MonomialIdeal::of_tuple(&TetTuple::new([0, 2, 2, 2, 2, 0]));
        assert_eq!(betti_table_oracle(&i), table(&[(0, 4, 3), (1, 6, 2)]));
        let i = MonomialIdeal::of_tuple(&TetTuple::new([4, 1, 2, 1, 1, 5]));
        assert_eq!(
            betti_table_oracle(&i),
            table(&[(0, 9, 24), (1, 10, 37), (2, 11, 14)])
        );
    }

    #[test]
    fn table_invariants() {
        let t = table(&[(0, 4, 3), (1, 6, 2)]);
        assert_eq!(t.projective_dimension(), Some(1));
        assert_eq!(t.regularity(), Some(5));
        assert!(!t.is_linear());
        assert!(table(&[(0, 2, 4), (1, 3, 4), (2, 4, 1)]).is_linear());
        assert_eq!(t.shifted(2), table(&[(0, 6, 3), (1, 8, 2)]));
    }

    #[test]
    fn json_shape() {
        let t = table(&[(1, 6, 2), (0, 4, 3)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"entries":[[0,4,3],[1,6,2]]}"#);
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn resolution_text() {
        let t = table(&[(0, 6, 1), (0, 4, 2), (0, 3, 1), (1, 7, 1), (1, 5, 2)]);
        assert_eq!(
            t.resolution_string("J"),
            "0 → R(-7) ⊕ R(-5)^2 → R(-6) ⊕ R(-4)^2 ⊕ R(-3) → J → 0"
        );
    }

    #[test]
    fn integer_rank_examples() {
        assert_eq!(integer_rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 5]]), 3);
    }
}
