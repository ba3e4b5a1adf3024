//! Corona-family graphs and their matchings.
//!
//! A corona graph `C_p` is the complete graph on core vertices `v_i` with one
//! pendant vertex `w_i` hung off each `v_i`. The double corona doubles every
//! core edge (two channels per pair). The signed variants relabel the core by
//! `±1, …, ±r` (and `0` for odd `p`) so that the index-negation automorphism,
//! the minus involution, is visible on labels.
//!
//! Edges are ordered pendants first, then by `(min index, max index, channel)`,
//! with signed indices in their natural integer order.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Double,
    Signed,
    Signed0,
}

impl Variant {
    pub fn is_signed(self) -> bool {
        matches!(self, Variant::Signed | Variant::Signed0)
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "double" => Ok(Variant::Double),
            "signed" => Ok(Variant::Signed),
            "signed0" => Ok(Variant::Signed0),
            _ => Err(Error::Invalid(format!("unknown graph variant {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
struct RawSpec {
    variant: Variant,
    p: usize,
}

/// Which corona graph, and how many core vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct GraphSpec {
    variant: Variant,
    p: usize,
}

impl TryFrom<RawSpec> for GraphSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        GraphSpec::new(raw.variant, raw.p)
    }
}

impl GraphSpec {
    pub fn new(variant: Variant, p: usize) -> Result<Self> {
        match variant {
            Variant::Signed if p % 2 == 1 => Err(Error::OddSignedCorona(p)),
            Variant::Signed0 if p % 2 == 0 => Err(Error::EvenSigned0Corona(p)),
            _ => Ok(GraphSpec { variant, p }),
        }
    }

    pub fn plain(p: usize) -> Self {
        GraphSpec { variant: Variant::Plain, p }
    }

    pub fn double(p: usize) -> Self {
        GraphSpec { variant: Variant::Double, p }
    }

    /// Signed labeling for `p` core vertices: `Signed` for even `p`, `Signed0` for odd.
    pub fn signed_for(p: usize) -> Self {
        if p % 2 == 0 {
            GraphSpec { variant: Variant::Signed, p }
        } else {
            GraphSpec { variant: Variant::Signed0, p }
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Largest absolute label for signed variants.
    pub fn r(&self) -> usize {
        self.p / 2
    }

    pub fn channels(&self) -> u8 {
        if self.variant == Variant::Double {
            2
        } else {
            1
        }
    }

    /// Core labels in flag order.
    pub fn labels(&self) -> Vec<i32> {
        let r = self.r() as i32;
        match self.variant {
            Variant::Plain | Variant::Double => (1..=self.p as i32).collect(),
            Variant::Signed => (-r..=-1).chain(1..=r).collect(),
            Variant::Signed0 => (-r..=r).collect(),
        }
    }

    pub fn has_label(&self, l: i32) -> bool {
        let r = self.r() as i32;
        match self.variant {
            Variant::Plain | Variant::Double => l >= 1 && l <= self.p as i32,
            Variant::Signed => l != 0 && l.abs() <= r,
            Variant::Signed0 => l.abs() <= r,
        }
    }

    /// 0-based flag position of a core label.
    pub fn position(&self, l: i32) -> usize {
        debug_assert!(self.has_label(l));
        let r = self.r() as i32;
        match self.variant {
            Variant::Plain | Variant::Double => (l - 1) as usize,
            Variant::Signed => {
                if l < 0 {
                    (l + r) as usize
                } else {
                    (l + r - 1) as usize
                }
            }
            Variant::Signed0 => (l + r) as usize,
        }
    }

    /// Inverse of [`GraphSpec::position`].
    pub fn label_at(&self, pos: usize) -> i32 {
        let r = self.r() as i32;
        let pos = pos as i32;
        match self.variant {
            Variant::Plain | Variant::Double => pos + 1,
            Variant::Signed => {
                if pos < r {
                    pos - r
                } else {
                    pos - r + 1
                }
            }
            Variant::Signed0 => pos - r,
        }
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        match *e {
            Edge::Pendant { i } => self.has_label(i),
            Edge::Internal { i, j, channel } => {
                i < j
                    && self.has_label(i)
                    && self.has_label(j)
                    && channel >= 1
                    && channel <= self.channels()
            }
        }
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let labels = self.labels();
        let mut out: Vec<Edge> = labels.iter().map(|&i| Edge::Pendant { i }).collect();
        for (a, &i) in labels.iter().enumerate() {
            for &j in &labels[a + 1..] {
                for channel in 1..=self.channels() {
                    out.push(Edge::Internal { i, j, channel });
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let p = self.p;
        p + self.channels() as usize * p * p.saturating_sub(1) / 2
    }
}

/// A vertex of a corona graph: core `v_i` or pendant `w_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Core(i32),
    Pendant(i32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Core(i) => write!(f, "v{i}"),
            Vertex::Pendant(i) => write!(f, "w{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Edge {
    Pendant { i: i32 },
    Internal { i: i32, j: i32, channel: u8 },
}

impl Edge {
    pub fn pendant(i: i32) -> Edge {
        Edge::Pendant { i }
    }

    /// Core edge between `a` and `b` with indices put in canonical order.
    pub fn internal(a: i32, b: i32, channel: u8) -> Edge {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        Edge::Internal { i, j, channel }
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        match *self {
            Edge::Pendant { i } => [Vertex::Core(i), Vertex::Pendant(i)],
            Edge::Internal { i, j, .. } => [Vertex::Core(i), Vertex::Core(j)],
        }
    }

    pub fn core_labels(&self) -> Vec<i32> {
        match *self {
            Edge::Pendant { i } => vec![i],
            Edge::Internal { i, j, .. } => vec![i, j],
        }
    }

    /// Image under index negation.
    pub fn negate(&self) -> Edge {
        match *self {
            Edge::Pendant { i } => Edge::Pendant { i: -i },
            Edge::Internal { i, j, channel } => Edge::internal(-i, -j, channel),
        }
    }

    /// Joins `v_i` and `v_{-i}`.
    pub fn is_horizontal(&self) -> bool {
        matches!(*self, Edge::Internal { i, j, .. } if i == -j)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Edge::Pendant { i } => write!(f, "(v{i},w{i})"),
            Edge::Internal { i, j, channel: 1 } => write!(f, "(v{i},v{j})"),
            Edge::Internal { i, j, channel } => write!(f, "(v{i},v{j})#{channel}"),
        }
    }
}

/// Explicit vertex and edge lists of a corona graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub spec: GraphSpec,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

pub fn build_graph(spec: GraphSpec) -> Graph {
    let labels = spec.labels();
    let vertices = labels
        .iter()
        .map(|&i| Vertex::Core(i))
        .chain(labels.iter().map(|&i| Vertex::Pendant(i)))
        .collect();
    Graph { spec, vertices, edges: spec.edges() }
}

#[derive(Serialize, Deserialize)]
struct RawMatching {
    graph: GraphSpec,
    edges: Vec<Edge>,
}

/// A set of pairwise vertex-disjoint edges of a corona graph, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching", into = "RawMatching")]
pub struct Matching {
    spec: GraphSpec,
    edges: Vec<Edge>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;
    fn try_from(raw: RawMatching) -> Result<Self> {
        Matching::new(raw.graph, raw.edges)
    }
}

impl From<Matching> for RawMatching {
    fn from(m: Matching) -> Self {
        RawMatching { graph: m.spec, edges: m.edges }
    }
}

impl Matching {
    pub fn new(spec: GraphSpec, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        let mut seen = BTreeSet::new();
        for e in &edges {
            if !spec.has_edge(e) {
                return Err(Error::NoSuchEdge(e.to_string()));
            }
            for v in e.endpoints() {
                if !seen.insert(v) {
                    return Err(Error::NotAMatching(v.to_string()));
                }
            }
        }
        Ok(Matching { spec, edges })
    }

    pub fn empty(spec: GraphSpec) -> Self {
        Matching { spec, edges: Vec::new() }
    }

    pub fn spec(&self) -> GraphSpec {
        self.spec
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether core vertex `v_i` is an endpoint of some edge.
    pub fn touches(&self, i: i32) -> bool {
        self.edges.iter().any(|e| e.core_labels().contains(&i))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matching serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))
    }

    /// Same matching with core labels replaced by 1-based flag positions.
    pub fn to_positions(&self) -> Matching {
        let plain = GraphSpec::plain(self.spec.p);
        let pos = |l: i32| self.spec.position(l) as i32 + 1;
        let edges = self.edges.iter().map(|e| match *e {
            Edge::Pendant { i } => Edge::pendant(pos(i)),
            Edge::Internal { i, j, channel } => Edge::internal(pos(i), pos(j), channel),
        });
        let spec = if self.spec.variant == Variant::Double { GraphSpec::double(self.spec.p) } else { plain };
        Matching::new(spec, edges).expect("relabeling preserves matchings")
    }

    /// Relabels a position-labeled (plain) matching into `target`'s labels.
    pub fn relabel(&self, target: GraphSpec) -> Result<Matching> {
        if self.spec.variant != Variant::Plain {
            return Err(Error::WrongVariant { expected: "plain", got: self.spec.variant });
        }
        if target.p != self.spec.p || target.variant == Variant::Double {
            return Err(Error::Invalid(format!("cannot relabel onto {target:?}")));
        }
        let lab = |i: i32| target.label_at((i - 1) as usize);
        let edges = self.edges.iter().map(|e| match *e {
            Edge::Pendant { i } => Edge::pendant(lab(i)),
            Edge::Internal { i, j, channel } => Edge::internal(lab(i), lab(j), channel),
        });
        Matching::new(target, edges)
    }

    pub fn is_minus_invariant(&self) -> bool {
        self.spec.variant.is_signed() && self.edges.iter().all(|e| self.edges.binary_search(&e.negate()).is_ok())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn vertex_masks(spec: &GraphSpec, edges: &[Edge]) -> Vec<u128> {
    assert!(spec.p <= 64, "enumeration supports at most 64 core vertices");
    let p = spec.p;
    edges
        .iter()
        .map(|e| match *e {
            Edge::Pendant { i } => {
                let a = spec.position(i);
                (1u128 << a) | (1u128 << (p + a))
            }
            Edge::Internal { i, j, .. } => (1u128 << spec.position(i)) | (1u128 << spec.position(j)),
        })
        .collect()
}

/// Lazy stream of all `k`-matchings in lexicographic order of their sorted
/// edge lists.
pub struct Matchings {
    spec: GraphSpec,
    edges: Vec<Edge>,
    masks: Vec<u128>,
    k: usize,
    stack: Vec<usize>,
    used: Vec<u128>,
    next_start: usize,
    finished: bool,
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.finished {
            return None;
        }
        loop {
            if self.stack.len() == self.k {
                let edges = self.stack.iter().map(|&e| self.edges[e]).collect();
                let out = Matching { spec: self.spec, edges };
                match self.stack.pop() {
                    None => self.finished = true,
                    Some(last) => {
                        self.used.pop();
                        self.next_start = last + 1;
                    }
                }
                return Some(out);
            }
            let level = self.stack.len();
            let used = self.used[level];
            let remaining = self.k - level;
            let limit = self.edges.len().saturating_sub(remaining - 1);
            match (self.next_start..limit).find(|&e| self.masks[e] & used == 0) {
                Some(e) => {
                    self.stack.push(e);
                    self.used.push(used | self.masks[e]);
                    self.next_start = e + 1;
                }
                None => match self.stack.pop() {
                    None => {
                        self.finished = true;
                        return None;
                    }
                    Some(last) => {
                        self.used.pop();
                        self.next_start = last + 1;
                    }
                },
            }
        }
    }
}

pub fn enumerate_matchings(spec: GraphSpec, k: usize) -> Matchings {
    let edges = spec.edges();
    let masks = vertex_masks(&spec, &edges);
    Matchings { spec, edges, masks, k, stack: Vec::new(), used: vec![0], next_start: 0, finished: false }
}

/// Number of `k`-matchings, by deleting the highest remaining core vertex:
/// it is unmatched, takes its pendant, or pairs with one of the other core
/// vertices (through any of the channels). The core is complete, so the
/// count depends only on how many core vertices remain.
pub fn count_matchings(spec: GraphSpec, k: usize) -> BigUint {
    let p = spec.p;
    if k > p {
        return BigUint::zero();
    }
    let mult = BigUint::from(spec.channels());
    // rows[v][j]: j-matchings with v core vertices
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(p + 1);
    for v in 0..=p {
        let mut row = vec![BigUint::zero(); k + 1];
        row[0] = BigUint::one();
        for j in 1..=k.min(v) {
            let mut t = &rows[v - 1][j] + &rows[v - 1][j - 1];
            if v >= 2 {
                t += &mult * BigUint::from(v - 1) * &rows[v - 2][j - 1];
            }
            row[j] = t;
        }
        rows.push(row);
    }
    rows[p][k].clone()
}

/// The duality: core edges are kept, pendant edges dropped, and a pendant
/// edge is added at every core vertex that `S` leaves untouched.
pub fn dual_matching(s: &Matching) -> Result<Matching> {
    if s.spec.variant != Variant::Plain {
        return Err(Error::WrongVariant { expected: "plain", got: s.spec.variant });
    }
    let mut edges: Vec<Edge> = s.edges.iter().filter(|e| matches!(e, Edge::Internal { .. })).copied().collect();
    for i in s.spec.labels() {
        if !s.touches(i) {
            edges.push(Edge::pendant(i));
        }
    }
    Matching::new(s.spec, edges)
}

/// Image under `v_i ↔ v_{-i}`, `w_i ↔ w_{-i}`.
pub fn minus_matching(s: &Matching) -> Result<Matching> {
    if !s.spec.variant.is_signed() {
        return Err(Error::WrongVariant { expected: "signed or signed0", got: s.spec.variant });
    }
    Matching::new(s.spec, s.edges.iter().map(Edge::negate))
}

/// Edges `{v_i, v_{-i}}` of `S`.
pub fn horizontal_edges(s: &Matching) -> Vec<Edge> {
    s.edges.iter().filter(|e| e.is_horizontal()).copied().collect()
}

/// The minus-fixed center pendant `{v_0, w_0}` on signed0 graphs, if chosen.
pub fn center_edge(s: &Matching) -> Option<Edge> {
    let c = Edge::pendant(0);
    (s.spec.variant == Variant::Signed0 && s.edges.contains(&c)).then_some(c)
}

/// Folds a minus-invariant, horizontal-free matching of signed `C_{2r}` onto
/// the double corona `C_r^{(2)}`, one quotient edge per pair `{e, -e}`.
pub fn quotient_matching(s: &Matching) -> Result<Matching> {
    if s.spec.variant != Variant::Signed {
        return Err(Error::WrongVariant { expected: "signed", got: s.spec.variant });
    }
    if s.len() % 2 == 1 {
        return Err(Error::OddMatchingSize(s.len()));
    }
    if !s.is_minus_invariant() {
        return Err(Error::NotMinusInvariant);
    }
    if let Some(h) = horizontal_edges(s).first() {
        return Err(Error::HorizontalEdge(h.to_string()));
    }
    let folded: BTreeSet<Edge> = s
        .edges
        .iter()
        .map(|e| match *e {
            Edge::Pendant { i } => Edge::pendant(i.abs()),
            Edge::Internal { i, j, .. } => {
                let channel = if (i < 0) == (j < 0) { 1 } else { 2 };
                Edge::internal(i.abs(), j.abs(), channel)
            }
        })
        .collect();
    Matching::new(GraphSpec::double(s.spec.r()), folded)
}

/// Inverse of [`quotient_matching`].
pub fn lift_matching(q: &Matching) -> Result<Matching> {
    if q.spec.variant != Variant::Double {
        return Err(Error::WrongVariant { expected: "double", got: q.spec.variant });
    }
    let target = GraphSpec::new(Variant::Signed, 2 * q.spec.p)?;
    let mut edges = Vec::with_capacity(2 * q.len());
    for e in &q.edges {
        match *e {
            Edge::Pendant { i } => edges.extend([Edge::pendant(i), Edge::pendant(-i)]),
            Edge::Internal { i, j, channel: 1 } => edges.extend([Edge::internal(i, j, 1), Edge::internal(-i, -j, 1)]),
            Edge::Internal { i, j, .. } => edges.extend([Edge::internal(i, -j, 1), Edge::internal(-i, j, 1)]),
        }
    }
    Matching::new(target, edges)
}

/// Negation orbits `{e, −e}` (or `{e}` when `e = −e`) whose edges are
/// pairwise disjoint, with their combined vertex masks.
fn minus_orbits(spec: &GraphSpec) -> Vec<(Vec<Edge>, u128)> {
    let edges = spec.edges();
    let masks = vertex_masks(spec, &edges);
    let mut out = Vec::new();
    for (a, e) in edges.iter().enumerate() {
        let ne = e.negate();
        if ne < *e {
            continue;
        }
        if ne == *e {
            out.push((vec![*e], masks[a]));
            continue;
        }
        let b = edges.binary_search(&ne).expect("negation stays in the graph");
        if masks[a] & masks[b] == 0 {
            out.push((vec![*e, ne], masks[a] | masks[b]));
        }
    }
    out
}

/// Calls `visit` on the edge list of every minus-invariant `k`-matching of a
/// signed corona, built as unions of disjoint negation orbits.
pub fn for_each_minus_invariant(spec: GraphSpec, k: usize, mut visit: impl FnMut(&[Edge])) -> Result<()> {
    if !spec.variant.is_signed() {
        return Err(Error::WrongVariant { expected: "signed or signed0", got: spec.variant });
    }
    fn go(orbits: &[(Vec<Edge>, u128)], from: usize, used: u128, left: usize, cur: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge])) {
        if left == 0 {
            visit(cur);
            return;
        }
        for o in from..orbits.len() {
            let (es, mask) = &orbits[o];
            if es.len() <= left && mask & used == 0 {
                cur.extend_from_slice(es);
                go(orbits, o + 1, used | mask, left - es.len(), cur, visit);
                cur.truncate(cur.len() - es.len());
            }
        }
    }
    go(&minus_orbits(&spec), 0, 0, k, &mut Vec::with_capacity(k), &mut visit);
    Ok(())
}

pub fn minus_invariant_matchings(spec: GraphSpec, k: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_minus_invariant(spec, k, |es| out.push(Matching::new(spec, es.iter().copied()).expect("disjoint orbits")))?;
    out.sort();
    Ok(out)
}

/// Number of minus-invariant `k`-matchings, by exhaustive visiting.
pub fn count_minus_invariant(spec: GraphSpec, k: usize) -> Result<BigUint> {
    let mut total = 0u64;
    for_each_minus_invariant(spec, k, |_| total += 1)?;
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed(p: usize) -> GraphSpec {
        GraphSpec::new(Variant::Signed, p).unwrap()
    }

    #[test]
    fn invariant_enumeration_matches_filter() {
        for p in 1..=7 {
            let spec = GraphSpec::signed_for(p);
            for k in 0..=p {
                let filtered: Vec<Matching> = enumerate_matchings(spec, k).filter(|s| s.is_minus_invariant()).collect();
                assert_eq!(minus_invariant_matchings(spec, k).unwrap(), filtered, "p={p} k={k}");
                assert_eq!(count_minus_invariant(spec, k).unwrap(), BigUint::from(filtered.len()));
            }
        }
        assert!(count_minus_invariant(GraphSpec::plain(3), 1).is_err());
    }

    #[test]
    fn graph_sizes() {
        let g = build_graph(GraphSpec::plain(6));
        assert_eq!((g.vertices.len(), g.edges.len()), (12, 21));
        let g = build_graph(GraphSpec::double(4));
        assert_eq!((g.vertices.len(), g.edges.len()), (8, 16));
        let g = build_graph(GraphSpec::plain(0));
        assert!(g.vertices.is_empty() && g.edges.is_empty());
        for p in 0..9 {
            for spec in [GraphSpec::plain(p), GraphSpec::double(p), GraphSpec::signed_for(p)] {
                assert_eq!(spec.edges().len(), spec.edge_count());
            }
        }
    }

    #[test]
    fn rejects_bad_signed_sizes() {
        assert_eq!(GraphSpec::new(Variant::Signed, 3), Err(Error::OddSignedCorona(3)));
        assert_eq!(GraphSpec::new(Variant::Signed0, 4), Err(Error::EvenSigned0Corona(4)));
        assert!(GraphSpec::new(Variant::Signed0, 1).is_ok());
    }

    #[test]
    fn label_positions_roundtrip() {
        for spec in [GraphSpec::plain(5), signed(6), GraphSpec::signed_for(7)] {
            let labels = spec.labels();
            for (pos, &l) in labels.iter().enumerate() {
                assert_eq!(spec.position(l), pos);
                assert_eq!(spec.label_at(pos), l);
            }
        }
        assert_eq!(signed(4).labels(), vec![-2, -1, 1, 2]);
    }

    #[test]
    fn one_matchings_of_c2() {
        let all: Vec<String> = enumerate_matchings(GraphSpec::plain(2), 1).map(|m| m.to_string()).collect();
        assert_eq!(all, vec!["{(v1,w1)}", "{(v2,w2)}", "{(v1,v2)}"]);
    }

    #[test]
    fn zero_matching_is_unique() {
        let all: Vec<Matching> = enumerate_matchings(GraphSpec::double(3), 0).collect();
        assert_eq!(all, vec![Matching::empty(GraphSpec::double(3))]);
        assert_eq!(enumerate_matchings(GraphSpec::plain(2), 3).count(), 0);
        let c1: Vec<Matching> = enumerate_matchings(GraphSpec::plain(1), 1).collect();
        assert_eq!(c1, vec![Matching::new(GraphSpec::plain(1), [Edge::pendant(1)]).unwrap()]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_matchings(GraphSpec::plain(2), 1), 3u32.into());
        assert_eq!(count_matchings(GraphSpec::double(2), 1), 4u32.into());
        assert_eq!(count_matchings(GraphSpec::plain(6), 3), 215u32.into());
        for p in 0..6 {
            assert_eq!(count_matchings(GraphSpec::plain(p), 0), BigUint::one());
        }
    }

    #[test]
    fn large_counts_and_symmetry() {
        for p in [20usize, 40, 70] {
            for k in 0..=p {
                assert_eq!(count_matchings(GraphSpec::plain(p), k), count_matchings(GraphSpec::plain(p), p - k));
            }
        }
        assert_eq!(count_matchings(GraphSpec::plain(3), 4), BigUint::zero());
    }

    #[test]
    fn dual_of_sample_matching() {
        let spec = GraphSpec::plain(6);
        let s = Matching::new(spec, [Edge::internal(2, 4, 1), Edge::pendant(1)]).unwrap();
        let d = dual_matching(&s).unwrap();
        let expected =
            Matching::new(spec, [Edge::internal(2, 4, 1), Edge::pendant(3), Edge::pendant(5), Edge::pendant(6)])
                .unwrap();
        assert_eq!(d, expected);
        assert_eq!(dual_matching(&d).unwrap(), s);
        let all = dual_matching(&Matching::empty(spec)).unwrap();
        assert_eq!(all.len(), 6);
        assert!(dual_matching(&Matching::empty(GraphSpec::double(2))).is_err());
    }

    #[test]
    fn minus_of_sample_matching() {
        let spec = signed(6);
        let s = Matching::new(spec, [Edge::pendant(1), Edge::internal(2, -3, 1)]).unwrap();
        let expected = Matching::new(spec, [Edge::pendant(-1), Edge::internal(-2, 3, 1)]).unwrap();
        assert_eq!(minus_matching(&s).unwrap(), expected);
        assert_eq!(minus_matching(&Matching::empty(spec)).unwrap(), Matching::empty(spec));
        let h = Matching::new(spec, [Edge::internal(1, -1, 1)]).unwrap();
        assert_eq!(minus_matching(&h).unwrap(), h);
        assert!(minus_matching(&Matching::empty(GraphSpec::plain(2))).is_err());
    }

    #[test]
    fn horizontal_detection() {
        let spec = signed(4);
        let s = Matching::new(spec, [Edge::internal(1, -1, 1), Edge::pendant(2)]).unwrap();
        assert_eq!(horizontal_edges(&s), vec![Edge::internal(-1, 1, 1)]);
        let t = Matching::new(signed(6), [Edge::internal(2, -3, 1)]).unwrap();
        assert!(horizontal_edges(&t).is_empty());
        let inv = Matching::new(spec, [Edge::pendant(1), Edge::pendant(-1)]).unwrap();
        assert!(horizontal_edges(&inv).is_empty());
        let s0 = GraphSpec::signed_for(3);
        let c = Matching::new(s0, [Edge::pendant(0)]).unwrap();
        assert_eq!(center_edge(&c), Some(Edge::pendant(0)));
        assert!(horizontal_edges(&c).is_empty());
    }

    #[test]
    fn quotient_pair_rules() {
        let s = Matching::new(signed(2), [Edge::pendant(1), Edge::pendant(-1)]).unwrap();
        assert_eq!(quotient_matching(&s).unwrap().edges(), &[Edge::pendant(1)]);
        let s = Matching::new(signed(4), [Edge::internal(1, 2, 1), Edge::internal(-1, -2, 1)]).unwrap();
        assert_eq!(quotient_matching(&s).unwrap().edges(), &[Edge::internal(1, 2, 1)]);
        let s = Matching::new(signed(4), [Edge::internal(1, -2, 1), Edge::internal(-1, 2, 1)]).unwrap();
        let q = quotient_matching(&s).unwrap();
        assert_eq!(q.edges(), &[Edge::internal(1, 2, 2)]);
        assert_eq!(lift_matching(&q).unwrap(), s);
    }

    #[test]
    fn quotient_precondition_errors() {
        let spec = signed(4);
        let odd = Matching::new(spec, [Edge::pendant(1)]).unwrap();
        assert_eq!(quotient_matching(&odd), Err(Error::OddMatchingSize(1)));
        let skew = Matching::new(spec, [Edge::pendant(1), Edge::pendant(2)]).unwrap();
        assert_eq!(quotient_matching(&skew), Err(Error::NotMinusInvariant));
        let h = Matching::new(spec, [Edge::internal(1, -1, 1), Edge::internal(2, -2, 1)]).unwrap();
        assert!(matches!(quotient_matching(&h), Err(Error::HorizontalEdge(_))));
    }

    #[test]
    fn matching_validation() {
        let spec = GraphSpec::plain(3);
        assert!(matches!(
            Matching::new(spec, [Edge::pendant(1), Edge::internal(1, 2, 1)]),
            Err(Error::NotAMatching(_))
        ));
        assert!(matches!(Matching::new(spec, [Edge::pendant(4)]), Err(Error::NoSuchEdge(_))));
        assert!(matches!(Matching::new(spec, [Edge::internal(1, 2, 2)]), Err(Error::NoSuchEdge(_))));
    }

    #[test]
    fn json_format() {
        let spec = GraphSpec::double(2);
        let m = Matching::new(spec, [Edge::internal(1, 2, 2)]).unwrap();
        assert_eq!(
            m.to_json(),
            r#"{"graph":{"variant":"double","p":2},"edges":[{"kind":"internal","i":1,"j":2,"channel":2}]}"#
        );
        assert_eq!(Matching::from_json(&m.to_json()).unwrap(), m);
        let s = Matching::new(signed(2), [Edge::pendant(-1)]).unwrap();
        assert_eq!(s.to_json(), r#"{"graph":{"variant":"signed","p":2},"edges":[{"kind":"pendant","i":-1}]}"#);
        assert!(Matching::from_json(r#"{"graph":{"variant":"signed","p":3},"edges":[]}"#).is_err());
        assert!(Matching::from_json(
            r#"{"graph":{"variant":"plain","p":2},"edges":[{"kind":"pendant","i":1},{"kind":"internal","i":1,"j":2,"channel":1}]}"#
        )
        .is_err());
    }

    #[test]
    fn relabel_roundtrip() {
        let spec = signed(6);
        for m in enumerate_matchings(spec, 2).take(40) {
            assert_eq!(m.to_positions().relabel(spec).unwrap(), m);
        }
    }
}
