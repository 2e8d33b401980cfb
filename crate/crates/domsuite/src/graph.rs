//! Simple undirected graphs on vertex set 0..n-1 with bit-packed adjacency rows,
//! plus the closed-neighborhood algebra everything else is built on.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("vertex set over universe {set} used with a graph of order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("vertex {0} is not a member of the given set")]
    NotAMember(usize),
    #[error("set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("induced subgraph needs a nonempty vertex set")]
    EmptySelection,
    #[error("order {order} exceeds the isomorphism cap {cap}")]
    IsomorphismCap { order: usize, cap: usize },
    #[error("{family} requires {requirement}")]
    BadFamilyParameter {
        family: &'static str,
        requirement: &'static str,
    },
}

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// Subset of the vertex range 0..universe of a host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.mask_tail();
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(
        universe: usize,
        members: I,
    ) -> Result<Self, GraphError> {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(universe));
        let mut s = VertexSet { universe, words };
        s.mask_tail();
        s
    }

    fn mask_tail(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.universe == 0 {
            self.words.clear();
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v >= self.universe {
            return Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.universe,
            });
        }
        self.words[v / WORD] |= 1u64 << (v % WORD);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD] &= !(1u64 << (v % WORD));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_member(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets from different hosts"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet::from_words(self.universe, words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.universe, words)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet::from_words(self.universe, words)
    }

    pub fn complement(&self) -> Self {
        let words = self.words.iter().map(|a| !a).collect();
        VertexSet::from_words(self.universe, words)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    // Debug mirrors Display: sets print as `{0, 2, 4}` everywhere
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Undirected simple graph; one bit-packed row of adjacency per vertex.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    pub name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        // the name is a label, not structure
        self.order == other.order && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        match &self.name {
            Some(n) => write!(f, "Graph({n}, n={}, E={edges:?})", self.order),
            None => write!(f, "Graph(n={}, E={edges:?})", self.order),
        }
    }
}

impl Graph {
    pub fn new(order: usize) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let words = words_for(order);
        Ok(Graph {
            order,
            words,
            bits: vec![0; order * words],
            name: None,
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn size(&self) -> usize {
        let deg_sum: usize = self.vertices().map(|v| self.degree(v)).sum();
        deg_sum / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() != self.order {
            Err(GraphError::UniverseMismatch {
                set: s.universe(),
                graph: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.bits[u * self.words + v / WORD] |= 1u64 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1u64 << (u % WORD);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.row(u)[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.order, "vertex {v} out of range");
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.order, "vertex {v} out of range");
        VertexSet::from_words(self.order, self.row(v).to_vec())
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v).expect("vertex in range");
        s
    }

    /// N(A) or N[A]: union of (closed) neighborhoods over the members of A.
    pub fn neighborhood(&self, a: &VertexSet, closed: bool) -> Result<VertexSet, GraphError> {
        self.check_set(a)?;
        let mut acc = vec![0u64; self.words];
        for v in a.iter() {
            for (w, r) in acc.iter_mut().zip(self.row(v)) {
                *w |= r;
            }
        }
        let mut out = VertexSet::from_words(self.order, acc);
        if closed {
            out = out.union(a);
        }
        Ok(out)
    }

    /// pn[u, A] = { x in V : N[x] ∩ A = {u} }. Requires u ∈ A.
    pub fn private_neighborhood(
        &self,
        a: &VertexSet,
        u: usize,
    ) -> Result<VertexSet, GraphError> {
        self.check_set(a)?;
        self.check_vertex(u)?;
        if !a.contains(u) {
            return Err(GraphError::NotAMember(u));
        }
        let mut out = VertexSet::empty(self.order);
        for x in self.vertices() {
            let hit = self.closed_neighbors(x).intersection(a);
            if hit.len() == 1 && hit.contains(u) {
                out.insert(x).expect("vertex in range");
            }
        }
        Ok(out)
    }

    /// epn[u, A] = pn[u, A] − {u}.
    pub fn external_private_neighborhood(
        &self,
        a: &VertexSet,
        u: usize,
    ) -> Result<VertexSet, GraphError> {
        let mut pn = self.private_neighborhood(a, u)?;
        pn.remove(u);
        Ok(pn)
    }

    /// Owners of singleton hits: for each x with |N[x] ∩ A| = 1 the unique member is
    /// marked; `external` skips the x = owner case (so membership means epn ≠ ∅).
    fn private_owners(&self, a: &VertexSet, external: bool) -> VertexSet {
        let mut owners = VertexSet::empty(self.order);
        for x in self.vertices() {
            let hit = self.closed_neighbors(x).intersection(a);
            if hit.len() == 1 {
                let u = hit.min_member().expect("nonempty");
                if !(external && u == x) {
                    owners.insert(u).expect("vertex in range");
                }
            }
        }
        owners
    }

    /// Every member of A has a nonempty private neighborhood.
    pub fn is_irredundant(&self, a: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(a)?;
        Ok(a.is_subset_of(&self.private_owners(a, false)))
    }

    /// Every member of A has a nonempty *external* private neighborhood.
    pub fn is_open_irredundant(&self, a: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(a)?;
        Ok(a.is_subset_of(&self.private_owners(a, true)))
    }

    /// No two members of S are adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        Ok(s.iter().all(|u| self.neighbors(u).intersection(s).is_empty()))
    }

    /// G − N[M] for independent M. `None` when N[M] swallows every vertex.
    pub fn remove_closed_neighborhood(
        &self,
        m: &VertexSet,
    ) -> Result<Option<Induced>, GraphError> {
        self.check_set(m)?;
        for u in m.iter() {
            let shared = self.neighbors(u).intersection(m);
            if let Some(v) = shared.min_member() {
                return Err(GraphError::NotIndependent(u, v));
            }
        }
        let survivors = self.neighborhood(m, true)?.complement();
        if survivors.is_empty() {
            return Ok(None);
        }
        Ok(Some(self.induced_subgraph(&survivors)?))
    }

    /// Induced subgraph on S, relabeled 0..|S|-1 in ascending order of the originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Induced, GraphError> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(GraphError::EmptySelection);
        }
        let original = s.members();
        let mut graph = Graph::new(original.len())?;
        for (i, &u) in original.iter().enumerate() {
            for (j, &v) in original.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    graph.add_edge(i, j)?;
                }
            }
        }
        Ok(Induced {
            graph,
            original,
            parent_order: self.order,
        })
    }

    /// Components as vertex sets, sorted by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.order);
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.order);
            let mut stack = vec![start];
            comp.insert(start).expect("vertex in range");
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v).iter() {
                    if !comp.contains(w) {
                        comp.insert(w).expect("vertex in range");
                        stack.push(w);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// (δ, Δ): minimum and maximum degree.
    pub fn degree_bounds(&self) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for v in self.vertices() {
            let d = self.degree(v);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        (lo, hi)
    }
}

/// An induced subgraph together with the relabeling back to the parent.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// original[new] = old vertex id; ascending.
    pub original: Vec<usize>,
    parent_order: usize,
}

impl Induced {
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Map a set over the subgraph back into the parent's vertex range.
    pub fn to_original(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.universe(), self.graph.order(), "set not over subgraph");
        let mut out = VertexSet::empty(self.parent_order);
        for v in s.iter() {
            out.insert(self.original[v]).expect("original id in range");
        }
        out
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Star,
}

/// Complete/path/cycle on n vertices, or a star with n leaves (center 0).
pub fn make_named(family: Family, n: usize) -> Result<Graph, GraphError> {
    match family {
        Family::Complete => {
            let mut g = Graph::new(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g.with_name(format!("K{n}")))
        }
        Family::Path => {
            let mut g = Graph::new(n)?;
            for u in 1..n {
                g.add_edge(u - 1, u)?;
            }
            Ok(g.with_name(format!("P{n}")))
        }
        Family::Cycle => {
            if n < 3 {
                return Err(GraphError::BadFamilyParameter {
                    family: "cycle",
                    requirement: "order at least 3",
                });
            }
            let mut g = Graph::new(n)?;
            for u in 1..n {
                g.add_edge(u - 1, u)?;
            }
            g.add_edge(0, n - 1)?;
            Ok(g.with_name(format!("C{n}")))
        }
        Family::Star => {
            if n < 1 {
                return Err(GraphError::BadFamilyParameter {
                    family: "star",
                    requirement: "at least one leaf",
                });
            }
            let mut g = Graph::new(n + 1)?;
            for leaf in 1..=n {
                g.add_edge(0, leaf)?;
            }
            Ok(g.with_name(format!("K1,{n}")))
        }
    }
}

pub fn complete(n: usize) -> Graph {
    make_named(Family::Complete, n).expect("valid complete graph order")
}

pub fn path(n: usize) -> Graph {
    make_named(Family::Path, n).expect("valid path order")
}

pub fn cycle(n: usize) -> Graph {
    make_named(Family::Cycle, n).expect("valid cycle order")
}

pub fn star(leaves: usize) -> Graph {
    make_named(Family::Star, leaves).expect("valid star leaf count")
}
