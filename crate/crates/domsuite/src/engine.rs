//! Exact domination machinery: predicates that work at any order, and
//! capped searches (branch and bound for γ, minimal-transversal enumeration of
//! the closed-neighborhood hypergraph for Γ and set listings, maximal
//! independent set enumeration for i and α).
//!
//! All witnesses are deterministic: among qualifying sets the lexicographically
//! least (as an ascending member list) is returned. Invariants are computed per
//! connected component and combined; the numbers are additive and the
//! lexicographically least witness of the whole graph is the union of the
//! per-component ones (member lists over disjoint vertex pools with fixed
//! per-pool sizes concatenate monotonically).

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Induced, VertexSet};

pub const DEFAULT_EXACT_CAP: usize = 25;
/// Search state lives in u128 masks, so no exact search runs past this order
/// regardless of the configured cap.
pub const SEARCH_ORDER_LIMIT: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("order {order} exceeds the exact-search cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("set does not dominate the graph (vertex {0} uncovered)")]
    NotDominating(usize),
    #[error("removal order must be a permutation of the set")]
    BadRemovalOrder,
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Uncapped predicates (word-based, any order)
// ---------------------------------------------------------------------------

/// N[D] = V?
pub fn is_dominating(g: &Graph, d: &VertexSet) -> Result<bool, EngineError> {
    Ok(g.neighborhood(d, true)?.len() == g.order())
}

/// Dominating and irredundant, i.e. no member can be dropped.
pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> Result<bool, EngineError> {
    Ok(is_dominating(g, d)? && g.is_irredundant(d)?)
}

/// Scan `order` once, dropping each vertex whose removal keeps D dominating.
/// `order` must be a permutation of D; the result is minimal dominating.
pub fn greedy_minimalize(
    g: &Graph,
    d: &VertexSet,
    order: &[usize],
) -> Result<VertexSet, EngineError> {
    g.check_set(d)?;
    let covered = g.neighborhood(d, true)?;
    if covered.len() != g.order() {
        let missing = covered.complement().min_member().expect("uncovered vertex");
        return Err(EngineError::NotDominating(missing));
    }
    if order.len() != d.len() {
        return Err(EngineError::BadRemovalOrder);
    }
    let mut seen = VertexSet::empty(g.order());
    for &v in order {
        if v >= g.order() || !d.contains(v) || seen.contains(v) {
            return Err(EngineError::BadRemovalOrder);
        }
        seen.insert(v).expect("vertex in range");
    }

    // cover[x] = |N[x] ∩ D|; v is droppable iff every x in N[v] keeps a cover
    let mut cover = vec![0usize; g.order()];
    for u in d.iter() {
        for x in g.closed_neighbors(u).iter() {
            cover[x] += 1;
        }
    }
    let mut current = d.clone();
    for &v in order {
        let nv = g.closed_neighbors(v);
        if nv.iter().all(|x| cover[x] >= 2) {
            current.remove(v);
            for x in nv.iter() {
                cover[x] -= 1;
            }
        }
    }
    Ok(current)
}

/// c(D) = members of a dominating set D whose only private neighbor is
/// themselves.
pub fn c_set(g: &Graph, d: &VertexSet) -> Result<VertexSet, EngineError> {
    g.check_set(d)?;
    let covered = g.neighborhood(d, true)?;
    if covered.len() != g.order() {
        let missing = covered.complement().min_member().expect("uncovered vertex");
        return Err(EngineError::NotDominating(missing));
    }
    let mut self_private = VertexSet::empty(g.order());
    let mut other_private = VertexSet::empty(g.order());
    for z in g.vertices() {
        let hit = g.closed_neighbors(z).intersection(d);
        if hit.len() == 1 {
            let owner = hit.min_member().expect("nonempty");
            if owner == z {
                self_private.insert(owner).expect("vertex in range");
            } else {
                other_private.insert(owner).expect("vertex in range");
            }
        }
    }
    Ok(self_private.difference(&other_private))
}

// ---------------------------------------------------------------------------
// Dense search core (u128 masks)
// ---------------------------------------------------------------------------

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn popcount(m: u128) -> usize {
    m.count_ones() as usize
}

/// Order masks as ascending member lists: {0,5} < {1,2}.
fn lex_cmp(mut a: u128, mut b: u128) -> Ordering {
    while a != 0 && b != 0 {
        let ta = a.trailing_zeros();
        let tb = b.trailing_zeros();
        match ta.cmp(&tb) {
            Ordering::Equal => {
                a &= a - 1;
                b &= b - 1;
            }
            other => return other,
        }
    }
    match (a == 0, b == 0) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

#[derive(Clone, Copy)]
struct Best {
    size: usize,
    mask: u128,
    any: bool,
}

impl Best {
    fn none() -> Self {
        Best {
            size: 0,
            mask: 0,
            any: false,
        }
    }

    fn seeded(mask: u128) -> Self {
        Best {
            size: popcount(mask),
            mask,
            any: true,
        }
    }

    fn offer_min(&mut self, m: u128) {
        let k = popcount(m);
        if !self.any
            || k < self.size
            || (k == self.size && lex_cmp(m, self.mask) == Ordering::Less)
        {
            self.size = k;
            self.mask = m;
            self.any = true;
        }
    }

    fn offer_max(&mut self, m: u128) {
        let k = popcount(m);
        if !self.any
            || k > self.size
            || (k == self.size && lex_cmp(m, self.mask) == Ordering::Less)
        {
            self.size = k;
            self.mask = m;
            self.any = true;
        }
    }
}

struct Dense {
    n: usize,
    all: u128,
    closed: Vec<u128>,
    open: Vec<u128>,
}

impl Dense {
    fn build(g: &Graph) -> Dense {
        let n = g.order();
        debug_assert!(n <= SEARCH_ORDER_LIMIT);
        let mut closed = vec![0u128; n];
        let mut open = vec![0u128; n];
        for v in 0..n {
            let mut row = 0u128;
            for u in g.neighbors(v).iter() {
                row |= 1 << u;
            }
            open[v] = row;
            closed[v] = row | 1 << v;
        }
        let all = if n == 128 { !0 } else { (1u128 << n) - 1 };
        Dense {
            n,
            all,
            closed,
            open,
        }
    }

    fn coverage(&self, s: u128) -> u128 {
        bits(s).fold(0, |acc, v| acc | self.closed[v])
    }

    /// Every member of `d` has an external private neighbor.
    fn is_open_irredundant(&self, d: u128) -> bool {
        let mut marked = 0u128;
        for z in 0..self.n {
            let hit = self.closed[z] & d;
            if popcount(hit) == 1 {
                let owner = hit.trailing_zeros() as usize;
                if owner != z {
                    marked |= hit;
                }
            }
        }
        d & !marked == 0
    }

    // --- maximal independent sets (Bron–Kerbosch with pivot on the complement)

    fn for_each_maximal_independent(&self, f: &mut impl FnMut(u128)) {
        let non: Vec<u128> = (0..self.n).map(|v| self.all & !self.closed[v]).collect();
        self.bk(0, self.all, 0, &non, f);
    }

    fn bk(&self, r: u128, p: u128, x: u128, non: &[u128], f: &mut impl FnMut(u128)) {
        if p == 0 && x == 0 {
            f(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| popcount(p & non[u]))
            .expect("p | x nonempty");
        let mut p = p;
        let mut x = x;
        let cand = p & !non[pivot];
        for v in bits(cand) {
            let vb = 1u128 << v;
            self.bk(r | vb, p & non[v], x & non[v], non, f);
            p &= !vb;
            x |= vb;
        }
    }

    // --- γ branch and bound

    fn greedy_dominating(&self) -> u128 {
        let mut s = 0u128;
        let mut covered = 0u128;
        while covered != self.all {
            let v = (0..self.n)
                .max_by_key(|&v| (popcount(self.closed[v] & !covered), usize::MAX - v))
                .expect("order at least 1");
            s |= 1 << v;
            covered |= self.closed[v];
        }
        self.minimalize(s)
    }

    fn minimalize(&self, mut s: u128) -> u128 {
        for v in bits(s) {
            let without = s & !(1u128 << v);
            if self.coverage(without) == self.all {
                s = without;
            }
        }
        s
    }

    fn gamma(&self) -> (usize, u128) {
        let seed = self.greedy_dominating();
        let mut best = Best::seeded(seed);
        self.gamma_rec(0, 0, self.all, &mut best);
        (best.size, best.mask)
    }

    fn gamma_rec(&self, s: u128, covered: u128, mut cand: u128, best: &mut Best) {
        if covered == self.all {
            best.offer_min(s);
            return;
        }
        let size = popcount(s);
        let uncovered = self.all & !covered;
        let maxcov = bits(cand)
            .map(|v| popcount(self.closed[v] & uncovered))
            .max()
            .unwrap_or(0);
        if maxcov == 0 {
            return;
        }
        let lb = popcount(uncovered).div_ceil(maxcov);
        if size + lb >= best.size {
            return; // only strictly smaller dominating sets matter here
        }
        // branch on the uncovered vertex with the fewest available dominators
        let (_, branch) = bits(uncovered)
            .map(|x| (popcount(self.closed[x] & cand), x))
            .min()
            .expect("uncovered vertex exists");
        let options = self.closed[branch] & cand;
        for v in bits(options) {
            let vb = 1u128 << v;
            cand &= !vb; // later branches must avoid v
            self.gamma_rec(s | vb, covered | self.closed[v], cand, best);
        }
    }

    /// Is there a dominating set of size exactly `budget + |chosen|` extending
    /// the coverage, with all further members drawn from `cand`?
    fn exists_completion(&self, covered: u128, mut cand: u128, budget: usize) -> bool {
        if covered == self.all {
            return popcount(cand) >= budget; // pad freely to the exact size
        }
        if budget == 0 {
            return false;
        }
        let uncovered = self.all & !covered;
        let maxcov = bits(cand)
            .map(|v| popcount(self.closed[v] & uncovered))
            .max()
            .unwrap_or(0);
        if maxcov == 0 || popcount(uncovered).div_ceil(maxcov) > budget {
            return false;
        }
        let (_, branch) = bits(uncovered)
            .map(|x| (popcount(self.closed[x] & cand), x))
            .min()
            .expect("uncovered vertex exists");
        let options = self.closed[branch] & cand;
        for v in bits(options) {
            let vb = 1u128 << v;
            cand &= !vb;
            if self.exists_completion(covered | self.closed[v], cand, budget - 1) {
                return true;
            }
        }
        false
    }

    /// Lexicographically least dominating set of size exactly `gamma`.
    fn gamma_witness(&self, gamma: usize) -> u128 {
        let mut prefix = 0u128;
        let mut size = 0usize;
        let mut from = 0usize;
        while size < gamma {
            let mut advanced = false;
            for v in from..self.n {
                let vb = 1u128 << v;
                let cand = if v + 1 >= self.n {
                    0
                } else {
                    self.all & !((1u128 << (v + 1)) - 1)
                };
                if self.exists_completion(
                    self.coverage(prefix | vb),
                    cand,
                    gamma - size - 1,
                ) {
                    prefix |= vb;
                    size += 1;
                    from = v + 1;
                    advanced = true;
                    break;
                }
            }
            assert!(advanced, "lex completion must make progress");
        }
        prefix
    }

    // --- minimal dominating sets = minimal transversals of {N[x]}

    fn transversal(&self) -> Transversal<'_> {
        Transversal::new(self)
    }
}

/// Search goals for the minimal-transversal walk.
enum Goal<'v> {
    /// Collect every minimal dominating set.
    EnumerateAll { out: &'v mut Vec<u128> },
    /// Collect the minimal dominating sets of one exact size.
    ExactSize { size: usize, out: &'v mut Vec<u128> },
    /// Track the maximum (Γ); ties resolved lexicographically.
    Max { best: &'v mut Best },
    /// Early-exit existence test for a minimal dominating set above `floor`.
    ExceedsFloor { floor: usize, found: &'v mut bool },
}

/// Incremental state over the closed-neighborhood hypergraph: hit counts,
/// sole hitters and per-member critical-edge counts, so we can walk minimal
/// transversals (= minimal dominating sets) without duplicates.
struct Transversal<'a> {
    d: &'a Dense,
    hit: Vec<u8>,
    sole: Vec<u8>,
    crit: Vec<u16>,
    uncov: usize,
    s: u128,
    size: usize,
}

impl<'a> Transversal<'a> {
    fn new(d: &'a Dense) -> Self {
        Transversal {
            hit: vec![0; d.n],
            sole: vec![0; d.n],
            crit: vec![0; d.n],
            uncov: d.n,
            s: 0,
            size: 0,
            d,
        }
    }

    fn add(&mut self, v: usize) {
        self.s |= 1 << v;
        self.size += 1;
        for x in bits(self.d.closed[v]) {
            match self.hit[x] {
                0 => {
                    self.sole[x] = v as u8;
                    self.crit[v] += 1;
                    self.uncov -= 1;
                }
                1 => {
                    self.crit[self.sole[x] as usize] -= 1;
                }
                _ => {}
            }
            self.hit[x] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.s &= !(1u128 << v);
        self.size -= 1;
        for x in bits(self.d.closed[v]) {
            self.hit[x] -= 1;
            match self.hit[x] {
                0 => {
                    self.crit[v] -= 1;
                    self.uncov += 1;
                }
                1 => {
                    let owner = (self.d.closed[x] & self.s).trailing_zeros() as usize;
                    self.sole[x] = owner as u8;
                    self.crit[owner] += 1;
                }
                _ => {}
            }
        }
    }

    fn all_members_critical(&self) -> bool {
        bits(self.s).all(|u| self.crit[u] > 0)
    }

    /// Walk minimal transversals containing the current set, drawing new
    /// members from `cand`. Returns false to abort the whole search.
    fn walk(&mut self, mut cand: u128, goal: &mut Goal) -> bool {
        if self.uncov == 0 {
            match goal {
                Goal::EnumerateAll { out } => out.push(self.s),
                Goal::ExactSize { size, out } => {
                    if self.size == *size {
                        out.push(self.s);
                    }
                }
                Goal::Max { best } => best.offer_max(self.s),
                Goal::ExceedsFloor { floor, found } => {
                    if self.size > *floor {
                        **found = true;
                        return false;
                    }
                }
            }
            return true;
        }
        // every future member needs a currently-uncovered edge as its final
        // private edge, so at most `uncov` more vertices can join
        match goal {
            Goal::EnumerateAll { .. } => {}
            Goal::ExactSize { size, .. } => {
                if self.size >= *size {
                    return true;
                }
            }
            Goal::Max { best } => {
                if best.any && self.size + self.uncov < best.size {
                    return true;
                }
            }
            Goal::ExceedsFloor { floor, .. } => {
                if self.size + self.uncov <= *floor {
                    return true;
                }
            }
        }
        // branch on the uncovered vertex with the fewest candidate dominators
        let mut branch_options = 0u128;
        let mut branch_count = usize::MAX;
        for x in 0..self.d.n {
            if self.hit[x] == 0 {
                let opts = self.d.closed[x] & cand;
                let k = popcount(opts);
                if k < branch_count {
                    branch_count = k;
                    branch_options = opts;
                    if k == 0 {
                        return true; // dead end: x can no longer be covered
                    }
                }
            }
        }
        for v in bits(branch_options) {
            cand &= !(1u128 << v); // later branches must avoid v
            self.add(v);
            let viable = self.all_members_critical();
            let keep_going = !viable || self.walk(cand, goal);
            self.remove(v);
            if !keep_going {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Public engine
// ---------------------------------------------------------------------------

/// Full invariant sweep of one graph: the four classical numbers of the
/// domination chain γ ≤ i ≤ α ≤ Γ, deterministic witnesses, and the two
/// equality flags.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: usize,
    pub gamma: usize,
    pub independent_domination: usize,
    pub independence: usize,
    pub upper_domination: usize,
    pub gamma_witness: VertexSet,
    pub independent_domination_witness: VertexSet,
    pub independence_witness: VertexSet,
    pub upper_domination_witness: VertexSet,
    pub well_dominated: bool,
    pub well_covered: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ExactEngine {
    cap: usize,
}

impl Default for ExactEngine {
    fn default() -> Self {
        ExactEngine {
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

impl ExactEngine {
    pub fn with_cap(cap: usize) -> Self {
        ExactEngine { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap.min(SEARCH_ORDER_LIMIT)
    }

    fn admit(&self, g: &Graph) -> Result<(), EngineError> {
        let cap = self.cap();
        if g.order() > cap {
            return Err(EngineError::TooLarge {
                order: g.order(),
                cap,
            });
        }
        Ok(())
    }

    fn pieces(&self, g: &Graph) -> Result<Vec<Induced>, EngineError> {
        g.connected_components()
            .iter()
            .map(|comp| g.induced_subgraph(comp).map_err(EngineError::from))
            .collect()
    }

    /// All minimal dominating sets, sorted by (size, members lexicographically).
    pub fn enumerate_minimal_dominating_sets(
        &self,
        g: &Graph,
    ) -> Result<Vec<VertexSet>, EngineError> {
        self.admit(g)?;
        let dense = Dense::build(g);
        let mut masks = Vec::new();
        let mut t = dense.transversal();
        t.walk(dense.all, &mut Goal::EnumerateAll { out: &mut masks });
        masks.sort_by(|&a, &b| popcount(a).cmp(&popcount(b)).then_with(|| lex_cmp(a, b)));
        Ok(masks.into_iter().map(|m| mask_to_set(g.order(), m)).collect())
    }

    /// All minimum dominating sets (size γ), sorted lexicographically.
    pub fn minimum_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>, EngineError> {
        self.admit(g)?;
        let dense = Dense::build(g);
        let (gamma, _) = dense.gamma();
        let mut masks = Vec::new();
        let mut t = dense.transversal();
        t.walk(
            dense.all,
            &mut Goal::ExactSize {
                size: gamma,
                out: &mut masks,
            },
        );
        masks.sort_by(|&a, &b| lex_cmp(a, b));
        Ok(masks.into_iter().map(|m| mask_to_set(g.order(), m)).collect())
    }

    /// (γ, lexicographically least minimum dominating set).
    pub fn domination_number(&self, g: &Graph) -> Result<(usize, VertexSet), EngineError> {
        self.admit(g)?;
        let mut total = 0usize;
        let mut witness = VertexSet::empty(g.order());
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (gamma, _) = dense.gamma();
            let local = dense.gamma_witness(gamma);
            total += gamma;
            witness = witness.union(&piece.to_original(&mask_to_set(dense.n, local)));
        }
        Ok((total, witness))
    }

    /// (Γ, lexicographically least maximum minimal dominating set).
    pub fn upper_domination_number(&self, g: &Graph) -> Result<(usize, VertexSet), EngineError> {
        self.admit(g)?;
        let mut total = 0usize;
        let mut witness = VertexSet::empty(g.order());
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (size, local) = upper_domination_dense(&dense);
            total += size;
            witness = witness.union(&piece.to_original(&mask_to_set(dense.n, local)));
        }
        Ok((total, witness))
    }

    /// ((i, witness), (α, witness)): minimum and maximum maximal independent sets.
    #[allow(clippy::type_complexity)]
    pub fn independence_numbers(
        &self,
        g: &Graph,
    ) -> Result<((usize, VertexSet), (usize, VertexSet)), EngineError> {
        self.admit(g)?;
        let mut itotal = 0usize;
        let mut atotal = 0usize;
        let mut iwitness = VertexSet::empty(g.order());
        let mut awitness = VertexSet::empty(g.order());
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (imin, imax) = independence_dense(&dense);
            itotal += imin.size;
            atotal += imax.size;
            iwitness = iwitness.union(&piece.to_original(&mask_to_set(dense.n, imin.mask)));
            awitness = awitness.union(&piece.to_original(&mask_to_set(dense.n, imax.mask)));
        }
        Ok(((itotal, iwitness), (atotal, awitness)))
    }

    pub fn domination_chain(&self, g: &Graph) -> Result<InvariantReport, EngineError> {
        self.admit(g)?;
        let (gamma, gamma_witness) = self.domination_number(g)?;
        let ((ind_dom, ind_dom_witness), (alpha, alpha_witness)) =
            self.independence_numbers(g)?;
        let (upper, upper_witness) = self.upper_domination_number(g)?;
        assert!(
            gamma <= ind_dom && ind_dom <= alpha && alpha <= upper,
            "domination chain violated: {gamma} {ind_dom} {alpha} {upper}"
        );
        Ok(InvariantReport {
            order: g.order(),
            gamma,
            independent_domination: ind_dom,
            independence: alpha,
            upper_domination: upper,
            gamma_witness,
            independent_domination_witness: ind_dom_witness,
            independence_witness: alpha_witness,
            upper_domination_witness: upper_witness,
            well_dominated: gamma == upper,
            well_covered: ind_dom == alpha,
        })
    }

    /// γ = Γ? Decided per component with early exits (i ≠ α, then γ ≠ i, then
    /// a search for any minimal dominating set larger than γ).
    pub fn is_well_dominated(&self, g: &Graph) -> Result<bool, EngineError> {
        self.admit(g)?;
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (imin, imax) = independence_dense(&dense);
            if imin.size != imax.size {
                return Ok(false);
            }
            let (gamma, _) = dense.gamma();
            if gamma != imin.size {
                return Ok(false);
            }
            let mut found = false;
            let mut t = dense.transversal();
            t.walk(
                dense.all,
                &mut Goal::ExceedsFloor {
                    floor: gamma,
                    found: &mut found,
                },
            );
            if found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// i = α?
    pub fn is_well_covered(&self, g: &Graph) -> Result<bool, EngineError> {
        self.admit(g)?;
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (imin, imax) = independence_dense(&dense);
            if imin.size != imax.size {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Vertices x for which some independent set I (disjoint from N[x]) has
    /// N(x) ⊆ N[I], leaving x isolated in G − N[I].
    pub fn isolatable_vertices(&self, g: &Graph) -> Result<VertexSet, EngineError> {
        self.admit(g)?;
        let dense = Dense::build(g);
        let mut out = VertexSet::empty(g.order());
        for x in 0..dense.n {
            if isolatable(&dense, x) {
                out.insert(x).expect("vertex in range");
            }
        }
        Ok(out)
    }

    /// Lexicographically least minimum dominating set in which every member
    /// has an external private neighbor. Exists whenever δ(G) ≥ 1.
    pub fn open_irredundant_minimum_dominating_set(
        &self,
        g: &Graph,
    ) -> Result<VertexSet, EngineError> {
        self.admit(g)?;
        if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
            return Err(EngineError::IsolatedVertex(v));
        }
        let mut witness = VertexSet::empty(g.order());
        for piece in self.pieces(g)? {
            let dense = Dense::build(&piece.graph);
            let (gamma, _) = dense.gamma();
            let mut masks = Vec::new();
            let mut t = dense.transversal();
            t.walk(
                dense.all,
                &mut Goal::ExactSize {
                    size: gamma,
                    out: &mut masks,
                },
            );
            let local = masks
                .into_iter()
                .filter(|&m| dense.is_open_irredundant(m))
                .min_by(|&a, &b| lex_cmp(a, b))
                .expect("an isolate-free graph has an open irredundant minimum dominating set");
            witness = witness.union(&piece.to_original(&mask_to_set(dense.n, local)));
        }
        Ok(witness)
    }
}

fn mask_to_set(universe: usize, mask: u128) -> VertexSet {
    VertexSet::from_members(universe, bits(mask)).expect("mask within universe")
}

fn upper_domination_dense(dense: &Dense) -> (usize, u128) {
    // a maximum maximal independent set is a minimal dominating set: seed the
    // bound at α so the walk can prune early
    let (_, imax) = independence_dense(dense);
    let mut best = Best::seeded(imax.mask);
    let mut t = dense.transversal();
    t.walk(dense.all, &mut Goal::Max { best: &mut best });
    (best.size, best.mask)
}

struct SizedMask {
    size: usize,
    mask: u128,
}

fn independence_dense(dense: &Dense) -> (SizedMask, SizedMask) {
    let mut min = Best::none();
    let mut max = Best::none();
    dense.for_each_maximal_independent(&mut |m| {
        min.offer_min(m);
        max.offer_max(m);
    });
    (
        SizedMask {
            size: min.size,
            mask: min.mask,
        },
        SizedMask {
            size: max.size,
            mask: max.mask,
        },
    )
}

/// Is x isolated in G − N[I] for some independent I? Candidates only need to
/// come from outside N[x] and be adjacent to N(x): any solution shrinks to one
/// of that form.
fn isolatable(dense: &Dense, x: usize) -> bool {
    let targets = dense.open[x];
    if targets == 0 {
        return true; // already isolated (I = ∅)
    }
    let mut cands = 0u128;
    for v in bits(dense.all & !dense.closed[x]) {
        if dense.open[v] & targets != 0 {
            cands |= 1 << v;
        }
    }
    cover_targets(dense, targets, cands)
}

fn cover_targets(dense: &Dense, targets: u128, allowed: u128) -> bool {
    if targets == 0 {
        return true;
    }
    let y = targets.trailing_zeros() as usize;
    let options = dense.open[y] & allowed;
    let mut rest = allowed;
    for v in bits(options) {
        rest &= !(1u128 << v); // later branches must avoid v
        let next_allowed = rest & !dense.closed[v]; // keep I independent
        if cover_targets(dense, targets & !dense.open[v], next_allowed) {
            return true;
        }
    }
    false
}
