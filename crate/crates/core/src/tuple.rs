//! Six-tuples of edge weights, the vertex-permutation action, and the
//! basic-double-link reductions (A)–(D).
//!
//! Edges are indexed `0..6` as `(a,b), (a,c), (a,d), (b,c), (b,d), (c,d)`;
//! edge `i` and edge `5 - i` are disjoint. The reduction of type A/B/C/D
//! lowers the three edges through vertex `a`/`b`/`c`/`d`, and the linear
//! form of the link is that vertex's variable.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Variable, VARIABLES};

/// Vertex pairs of the six edges.
pub const EDGES: [(Variable, Variable); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn edge_index(x: Variable, y: Variable) -> usize {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    match (x, y) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("({x},{y}) is not an edge"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TetTuple([u32; 6]);

impl TetTuple {
    pub const TRIVIAL: TetTuple = TetTuple([0; 6]);

    pub fn new(entries: [u32; 6]) -> Self {
        TetTuple(entries)
    }

    pub fn entries(&self) -> [u32; 6] {
        self.0
    }

    /// Weight of edge `i` (0-based).
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn weight(&self, x: Variable, y: Variable) -> u32 {
        self.0[edge_index(x, y)]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.0 == [0; 6]
    }

    pub fn permute(&self, pi: &VertexPerm) -> TetTuple {
        let mut out = [0; 6];
        for (i, &(x, y)) in EDGES.iter().enumerate() {
            out[edge_index(pi.0[x], pi.0[y])] = self.0[i];
        }
        TetTuple(out)
    }

    /// The 24 images under vertex permutations, in [`VertexPerm::all`] order.
    pub fn orbit(&self) -> impl Iterator<Item = (TetTuple, VertexPerm)> + '_ {
        VertexPerm::all().into_iter().map(move |pi| (self.permute(&pi), pi))
    }

    /// All tuples with non-negative entries summing to at most `bound`.
    pub fn all_with_total_at_most(bound: u32) -> Vec<TetTuple> {
        let mut out = Vec::new();
        let mut cur = [0u32; 6];
        fn rec(pos: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<TetTuple>) {
            if pos == 6 {
                out.push(TetTuple(*cur));
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
            cur[pos] = 0;
        }
        rec(0, bound, &mut cur, &mut out);
        out
    }

    /// All tuples with every entry at most `max`.
    pub fn all_with_entries_at_most(max: u32) -> Vec<TetTuple> {
        let n = max + 1;
        (0..n.pow(6))
            .map(|mut k| {
                let mut e = [0; 6];
                for slot in e.iter_mut() {
                    *slot = k % n;
                    k /= n;
                }
                TetTuple(e)
            })
            .collect()
    }
}

impl fmt::Display for TetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        write!(f, "({},{},{},{},{},{})", e[0], e[1], e[2], e[3], e[4], e[5])
    }
}

impl fmt::Debug for TetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TetTuple {
    type Err = Error;

    /// Six comma-separated non-negative integers, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six comma-separated entries, got {}",
                parts.len()
            )));
        }
        let mut e = [0u32; 6];
        for (slot, p) in e.iter_mut().zip(parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("{p:?} is not a non-negative integer")))?;
        }
        Ok(TetTuple(e))
    }
}

/// A permutation of the vertices `a,b,c,d`: vertex `x` goes to `self.0[x]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct VertexPerm(pub [Variable; 4]);

impl VertexPerm {
    pub const IDENTITY: VertexPerm = VertexPerm([0, 1, 2, 3]);

    /// The 24 permutations in lexicographic order of their images.
    pub fn all() -> Vec<VertexPerm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in (0..4).filter(|&b| b != a) {
                for c in (0..4).filter(|&c| c != a && c != b) {
                    let d = 6 - a - b - c;
                    out.push(VertexPerm([a, b, c, d]));
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> VertexPerm {
        let mut inv = [0; 4];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        VertexPerm(inv)
    }
}

impl fmt::Display for VertexPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..4)
            .map(|x| format!("{}->{}", VARIABLES[x], VARIABLES[self.0[x]]))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Lexicographically least tuple in the orbit, with a permutation reaching it.
pub fn canonicalize(t: &TetTuple) -> (TetTuple, VertexPerm) {
    t.orbit()
        .min_by(|(x, _), (y, _)| x.cmp(y))
        .expect("orbit is non-empty")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ReductionType {
    A,
    B,
    C,
    D,
}

impl ReductionType {
    pub const ALL: [ReductionType; 4] = [
        ReductionType::A,
        ReductionType::B,
        ReductionType::C,
        ReductionType::D,
    ];

    /// The vertex whose three edges are lowered; also the linear form `G`.
    pub fn vertex(self) -> Variable {
        self as usize
    }

    /// Edge indices of the facet, ascending.
    pub fn facet(self) -> [usize; 3] {
        let v = self.vertex();
        let mut out = [0; 3];
        let mut k = 0;
        for (i, &(x, y)) in EDGES.iter().enumerate() {
            if x == v || y == v {
                out[k] = i;
                k += 1;
            }
        }
        out
    }

    pub fn facet_weight(self, t: &TetTuple) -> u32 {
        self.facet().iter().map(|&i| t.get(i)).sum()
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `(w_A, w_B, w_C, w_D)`.
pub fn facet_weights(t: &TetTuple) -> [u32; 4] {
    ReductionType::ALL.map(|ty| ty.facet_weight(t))
}

pub fn max_facet_weight(t: &TetTuple) -> u32 {
    facet_weights(t).into_iter().max().unwrap_or(0)
}

fn other_vertices(v: Variable) -> [Variable; 3] {
    let mut out = [0; 3];
    for (k, x) in (0..4).filter(|&x| x != v).enumerate() {
        out[k] = x;
    }
    out
}

/// Whether the three inequalities of system `ty` hold for a non-trivial `t`:
/// for the facet edges `{v,x}`, `{v,y}` the sum of their weights is at least
/// the weight of the third side `{x,y}`.
pub fn reduction_applicable(t: &TetTuple, ty: ReductionType) -> bool {
    if t.is_trivial() {
        return false;
    }
    let v = ty.vertex();
    let [x, y, z] = other_vertices(v);
    [(x, y), (x, z), (y, z)]
        .iter()
        .all(|&(p, q)| t.weight(v, p) + t.weight(v, q) >= t.weight(p, q))
}

fn serialize_variable<S: Serializer>(
    v: &Variable,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&VARIABLES[*v])
}

/// One basic double link `parent = g·I(child) + (f)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ReductionStep {
    #[serde(rename = "type")]
    pub ty: ReductionType,
    pub parent: TetTuple,
    pub child: TetTuple,
    pub f: Monomial,
    #[serde(serialize_with = "serialize_variable")]
    pub g: Variable,
}

impl ReductionStep {
    /// Degree of `F`, equal to the reduced facet's weight on the parent.
    pub fn f_degree(&self) -> u32 {
        self.f.degree()
    }
}

pub fn apply_reduction(t: &TetTuple, ty: ReductionType) -> Result<ReductionStep> {
    if !reduction_applicable(t, ty) {
        return Err(Error::NotApplicable { tuple: *t, ty });
    }
    let v = ty.vertex();
    let mut child = t.entries();
    let mut f = [0u32; 4];
    for x in other_vertices(v) {
        let e = edge_index(v, x);
        f[x] = t.get(e);
        child[e] = child[e].saturating_sub(1);
    }
    Ok(ReductionStep {
        ty,
        parent: *t,
        child: TetTuple(child),
        f: Monomial::new(f),
        g: v,
    })
}

/// Every applicable reduction along a facet of maximal weight, in A<B<C<D order.
pub fn max_weight_reductions(t: &TetTuple) -> Vec<ReductionStep> {
    let weights = facet_weights(t);
    let top = weights.iter().copied().max().unwrap_or(0);
    ReductionType::ALL
        .into_iter()
        .filter(|&ty| weights[ty.vertex()] == top)
        .filter_map(|ty| apply_reduction(t, ty).ok())
        .collect()
}

pub fn max_weight_reduction(t: &TetTuple) -> Result<ReductionStep> {
    if t.is_trivial() {
        return Err(Error::IsTrivial);
    }
    if let Some(step) = max_weight_reductions(t).into_iter().next() {
        return Ok(step);
    }
    // Any non-minimal curve can reduce each of its maximal facets, so this
    // only triggers on minimal curves.
    Err(Error::IsMinimal(*t))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TerminalKind {
    Trivial,
    MinimalCurve,
}

/// Position in the chain of the topmost curve of shape `(0,r,r,r,r,0)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CiPowerMark {
    pub index: usize,
    pub r: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: TetTuple,
    pub terminal_kind: TerminalKind,
    pub first_ci_power: Option<CiPowerMark>,
}

impl ReductionTrace {
    /// The curves visited, top curve first, terminal last.
    pub fn chain(&self) -> Vec<TetTuple> {
        self.steps
            .iter()
            .map(|s| s.parent)
            .chain(std::iter::once(self.terminal))
            .collect()
    }

    pub fn is_acm(&self) -> bool {
        self.terminal_kind == TerminalKind::Trivial
    }
}

pub fn reduction_trace(t: &TetTuple) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut cur = *t;
    let terminal_kind = loop {
        if cur.is_trivial() {
            break TerminalKind::Trivial;
        }
        match max_weight_reduction(&cur) {
            Ok(step) => {
                cur = step.child;
                steps.push(step);
            }
            Err(_) => break TerminalKind::MinimalCurve,
        }
    };
    let mut trace = ReductionTrace {
        steps,
        terminal: cur,
        terminal_kind,
        first_ci_power: None,
    };
    trace.first_ci_power = trace
        .chain()
        .iter()
        .enumerate()
        .find_map(|(index, c)| ci_power_form(c).map(|r| CiPowerMark { index, r }));
    trace
}

/// Non-trivial and admits none of the reductions (A)–(D).
pub fn is_minimal(t: &TetTuple) -> bool {
    !t.is_trivial() && ReductionType::ALL.iter().all(|&ty| !reduction_applicable(t, ty))
}

/// Images of `t` whose last entry is the maximum, with the permutation used.
pub fn max_last_forms(t: &TetTuple) -> Vec<(TetTuple, VertexPerm)> {
    let m = t.max_entry();
    t.orbit().filter(|(u, _)| u.get(5) == m).collect()
}

/// The numerical minimality test: with `a6` maximal,
/// `a1 > max(a3+a5, a2+a4)` and `a6 > max(a4+a5, a2+a3)`.
pub fn is_minimal_numerical(t: &TetTuple) -> bool {
    !t.is_trivial()
        && max_last_forms(t).iter().any(|(u, _)| {
            let a = u.entries();
            a[0] > (a[2] + a[4]).max(a[1] + a[3]) && a[5] > (a[3] + a[4]).max(a[1] + a[2])
        })
}

/// `Some(r)` iff `t` is in the orbit of `(0,r,r,r,r,0)` with `r ≥ 1`.
pub fn ci_power_form(t: &TetTuple) -> Option<u32> {
    let r = t.max_entry();
    if r == 0 {
        return None;
    }
    let e = t.entries();
    (0..3)
        .find(|&i| {
            e[i] == 0 && e[5 - i] == 0 && (0..6).all(|j| j == i || j == 5 - i || e[j] == r)
        })
        .map(|_| r)
}

/// `Some(r)` iff `t` is in the orbit of the minimal Buchsbaum curve `(r,0,r-1,r-1,0,r)`.
pub fn buchsbaum_minimal_form(t: &TetTuple) -> Option<u32> {
    let r = t.max_entry();
    if r == 0 {
        return None;
    }
    let target = TetTuple([r, 0, r - 1, r - 1, 0, r]);
    (canonicalize(t).0 == canonicalize(&target).0).then_some(r)
}

pub fn is_acm(t: &TetTuple) -> bool {
    reduction_trace(t).is_acm()
}

/// Componentwise linearity read off the reduction trace: non-ACM curves
/// always are; ACM curves are unless the chain meets a `(0,r,r,r,r,0)` form.
pub fn is_cwl(t: &TetTuple) -> Result<bool> {
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    Ok(cwl_from_trace(&reduction_trace(t)))
}

pub(crate) fn cwl_from_trace(trace: &ReductionTrace) -> bool {
    !trace.is_acm() || trace.first_ci_power.is_none()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SchwartauStatus {
    pub is_schwartau: bool,
    pub cwl: bool,
}

/// Schwartau curves (`a2 = a5 = 0`) fail componentwise linearity exactly when
/// `a1,a3,a4,a6 > 0` and `a1 + a6 = a3 + a4`. Other curves report [`is_cwl`].
pub fn schwartau_status(t: &TetTuple) -> SchwartauStatus {
    let a = t.entries();
    let is_schwartau = a[1] == 0 && a[4] == 0;
    let cwl = if is_schwartau {
        !([a[0], a[2], a[3], a[5]].iter().all(|&x| x > 0) && a[0] + a[5] == a[2] + a[3])
    } else {
        is_cwl(t).unwrap_or(true)
    };
    SchwartauStatus { is_schwartau, cwl }
}

/// `Σ aᵢ(aᵢ+1)/2`.
pub fn degree_of_tuple(t: &TetTuple) -> u64 {
    t.0.iter().map(|&a| a as u64 * (a as u64 + 1) / 2).sum()
}

/// Castelnuovo–Mumford regularity of the curve's ideal, from the tuple alone.
pub fn regularity_closed_form(t: &TetTuple) -> Result<u32> {
    if t.is_trivial() {
        return Err(Error::TrivialCurve);
    }
    if let Some(r) = ci_power_form(t) {
        return Ok(2 * r + 1);
    }
    if is_minimal(t) {
        let (u, _) = max_last_forms(t)[0];
        return Ok(u.get(0) + u.get(5));
    }
    Ok(max_facet_weight(t))
}
