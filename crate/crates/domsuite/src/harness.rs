//! Check harness: theorem-shaped claims swept over graph corpora, producing
//! deterministic, sorted `CheckRecord` lists. Every check is a pure function
//! of its scope, so reruns are byte-identical and worker counts never change
//! the records.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::engine::{
    c_set, is_dominating, is_minimal_dominating, EngineError, ExactEngine,
};
use crate::graph::{complete, path, Graph, GraphError, VertexSet};
use crate::io::{emit_graph6, Corpus, IoError, ReportHeader};
use crate::iso::are_isomorphic;
use crate::products::{
    cartesian_product, corona_k1, direct_product, pair_index, strong_product, ProductError,
};
use crate::recognize::{
    cartesian_necessary_conditions, cartesian_with_complete_well_dominated, classify_structure,
    direct_product_well_dominated, strong_with_complete_well_dominated, RecognizeError,
    StructureClass, Verdict,
};

/// Strong products grow quadratically and upper-domination enumeration is the
/// most expensive kernel, so the bounds sweep stays below the general cap.
const STRONG_BOUNDS_PRODUCT_CAP: usize = 20;
/// Hereditary sweeps enumerate all 2^n vertex subsets of each graph.
const HEREDITARY_ORDER_CAP: usize = 12;
/// Fraction of filtered-out pairs re-checked exactly during a hunt.
const HUNT_AUDIT_RATE: f64 = 0.05;
/// Fixed audit seed: hunts are reproducible end to end.
const HUNT_AUDIT_SEED: u64 = 0xd0b0_5eed_0001;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(
        "unknown suite {0:?} (known: chain, hereditary, strong-bounds, direct-lemmas, \
         cartesian-constructions, corona-identity, recognizers-direct, recognizers-cartesian, \
         recognizers-strong, hunt, self-test-violation, all)"
    )]
    UnknownSuite(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
    #[error(transparent)]
    Report(#[from] IoError),
    #[error(transparent)]
    File(#[from] std::io::Error),
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    fn ok(check: &str, instance: String) -> Self {
        CheckRecord {
            check: check.to_string(),
            instance,
            pass: true,
            witness: None,
        }
    }

    fn fail(check: &str, instance: String, witness: String) -> Self {
        CheckRecord {
            check: check.to_string(),
            instance,
            pass: false,
            witness: Some(witness),
        }
    }

    fn from_problems(check: &str, instance: String, problems: Vec<String>) -> Self {
        if problems.is_empty() {
            CheckRecord::ok(check, instance)
        } else {
            CheckRecord::fail(check, instance, problems.join("; "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteId {
    Chain,
    Hereditary,
    StrongBounds,
    DirectLemmas,
    CartesianConstructions,
    CoronaIdentity,
    RecognizersDirect,
    RecognizersCartesian,
    RecognizersStrong,
    Hunt,
    SelfTestViolation,
}

impl SuiteId {
    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteId::Chain => "chain",
            SuiteId::Hereditary => "hereditary",
            SuiteId::StrongBounds => "strong-bounds",
            SuiteId::DirectLemmas => "direct-lemmas",
            SuiteId::CartesianConstructions => "cartesian-constructions",
            SuiteId::CoronaIdentity => "corona-identity",
            SuiteId::RecognizersDirect => "recognizers-direct",
            SuiteId::RecognizersCartesian => "recognizers-cartesian",
            SuiteId::RecognizersStrong => "recognizers-strong",
            SuiteId::Hunt => "hunt",
            SuiteId::SelfTestViolation => "self-test-violation",
        }
    }
}

impl FromStr for SuiteId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s {
            "chain" => Ok(SuiteId::Chain),
            "hereditary" => Ok(SuiteId::Hereditary),
            "strong-bounds" => Ok(SuiteId::StrongBounds),
            "direct-lemmas" => Ok(SuiteId::DirectLemmas),
            "cartesian-constructions" => Ok(SuiteId::CartesianConstructions),
            "corona-identity" => Ok(SuiteId::CoronaIdentity),
            "recognizers-direct" => Ok(SuiteId::RecognizersDirect),
            "recognizers-cartesian" => Ok(SuiteId::RecognizersCartesian),
            "recognizers-strong" => Ok(SuiteId::RecognizersStrong),
            "hunt" => Ok(SuiteId::Hunt),
            "self-test-violation" => Ok(SuiteId::SelfTestViolation),
            other => Err(HarnessError::UnknownSuite(other.to_string())),
        }
    }
}

/// Parse a comma-separated suite list; `all` means every suite except the
/// deliberately failing negative control.
pub fn parse_suites(spec: &str) -> Result<Vec<SuiteId>, HarnessError> {
    if spec.trim() == "all" {
        return Ok(vec![
            SuiteId::Chain,
            SuiteId::Hereditary,
            SuiteId::StrongBounds,
            SuiteId::DirectLemmas,
            SuiteId::CartesianConstructions,
            SuiteId::CoronaIdentity,
            SuiteId::RecognizersDirect,
            SuiteId::RecognizersCartesian,
            SuiteId::RecognizersStrong,
            SuiteId::Hunt,
        ]);
    }
    let mut out = Vec::new();
    for part in spec.split(',') {
        let id = SuiteId::from_str(part.trim())?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    if out.is_empty() {
        return Err(HarnessError::UnknownSuite(spec.to_string()));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct HarnessConfig {
    /// Order cap for exact searches (graphs and products alike).
    pub exact_cap: usize,
    /// Order cap for isomorphism tests.
    pub iso_cap: usize,
    /// Worker threads: 0 lets the runtime decide, 1 forces sequential.
    pub jobs: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            exact_cap: crate::engine::DEFAULT_EXACT_CAP,
            iso_cap: 32,
            jobs: 0,
        }
    }
}

impl HarnessConfig {
    fn engine(&self) -> ExactEngine {
        ExactEngine::with_cap(self.exact_cap)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub header: ReportHeader,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failing(&self) -> usize {
        self.records.iter().filter(|r| !r.pass).count()
    }
}

// ---------------------------------------------------------------------------
// parallel map
// ---------------------------------------------------------------------------

/// Map a fallible producer over items, in parallel when the `parallel`
/// feature is on and `jobs != 1`. Output order always matches input order, so
/// the worker count can never change a report.
#[cfg(feature = "parallel")]
fn try_par_map<T, U, F>(jobs: usize, items: &[T], f: F) -> Result<Vec<U>, HarnessError>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U, HarnessError> + Sync,
{
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    pool.install(|| {
        use rayon::prelude::*;
        items.par_iter().map(|t| f(t)).collect()
    })
}

#[cfg(not(feature = "parallel"))]
fn try_par_map<T, U, F>(_jobs: usize, items: &[T], f: F) -> Result<Vec<U>, HarnessError>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U, HarnessError> + Sync,
{
    items.iter().map(&f).collect()
}

fn flatten(nested: Vec<Vec<CheckRecord>>) -> Vec<CheckRecord> {
    nested.into_iter().flatten().collect()
}

// ---------------------------------------------------------------------------
// scopes
// ---------------------------------------------------------------------------

fn graph_id(g: &Graph) -> String {
    emit_graph6(g)
}

fn pair_id(g: &Graph, h: &Graph) -> String {
    format!("{}|{}", emit_graph6(g), emit_graph6(h))
}

/// All unordered pairs (repeats allowed) whose product order fits the cap and
/// whose members satisfy `keep`.
fn unordered_pairs(
    graphs: &[Graph],
    product_cap: usize,
    keep: impl Fn(&Graph) -> bool,
) -> Vec<(Graph, Graph)> {
    let kept: Vec<&Graph> = graphs.iter().filter(|g| keep(g)).collect();
    let mut pairs = Vec::new();
    for (i, &g) in kept.iter().enumerate() {
        for &h in &kept[i..] {
            if g.order() * h.order() <= product_cap {
                pairs.push((g.clone(), h.clone()));
            }
        }
    }
    pairs
}

fn connected_nontrivial(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected()
}

/// Lift a set of G-vertices to the product layer D × V(H).
fn lift_left(d: &VertexSet, g: &Graph, h: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.order() * h.order());
    for u in d.iter() {
        for w in h.vertices() {
            out.insert(pair_index(h.order(), u, w)).expect("in range");
        }
    }
    out
}

/// Lift a set of H-vertices to the product layer V(G) × D.
fn lift_right(d: &VertexSet, g: &Graph, h: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.order() * h.order());
    for u in g.vertices() {
        for w in d.iter() {
            out.insert(pair_index(h.order(), u, w)).expect("in range");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

/// `eq-domination-chain`: the chain inequality plus full witness validation
/// for all four invariants.
pub fn check_chain(
    graphs: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let nested = try_par_map(config.jobs, graphs, |g| {
        let r = engine.domination_chain(g)?;
        let mut problems = Vec::new();
        if !(r.gamma <= r.independent_domination
            && r.independent_domination <= r.independence
            && r.independence <= r.upper_domination)
        {
            problems.push(format!(
                "chain violated: ({}, {}, {}, {})",
                r.gamma, r.independent_domination, r.independence, r.upper_domination
            ));
        }
        if r.gamma_witness.len() != r.gamma || !is_minimal_dominating(g, &r.gamma_witness)? {
            problems.push(format!("bad gamma witness {}", r.gamma_witness));
        }
        let iw = &r.independent_domination_witness;
        if iw.len() != r.independent_domination
            || !g.is_independent(iw)?
            || !is_dominating(g, iw)?
        {
            problems.push(format!("bad independent-domination witness {iw}"));
        }
        let aw = &r.independence_witness;
        if aw.len() != r.independence || !g.is_independent(aw)? || !is_dominating(g, aw)? {
            problems.push(format!("bad independence witness {aw}"));
        }
        let uw = &r.upper_domination_witness;
        if uw.len() != r.upper_domination || !is_minimal_dominating(g, uw)? {
            problems.push(format!("bad upper-domination witness {uw}"));
        }
        if r.well_dominated != (r.gamma == r.upper_domination) {
            problems.push("well-dominated flag inconsistent".to_string());
        }
        if r.well_covered != (r.independent_domination == r.independence) {
            problems.push("well-covered flag inconsistent".to_string());
        }
        Ok(vec![CheckRecord::from_problems(
            "eq-domination-chain",
            graph_id(g),
            problems,
        )])
    })?;
    Ok(flatten(nested))
}

/// `obs-hereditary`: removing the closed neighborhood of any nonempty
/// independent set from a well-dominated graph leaves a well-dominated graph.
/// Graphs that are not well-dominated contribute one vacuous record.
pub fn check_hereditary(
    graphs: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    const CHECK: &str = "obs-hereditary";
    let engine = config.engine();
    let nested = try_par_map(config.jobs, graphs, |g| {
        let id = graph_id(g);
        if g.order() > HEREDITARY_ORDER_CAP {
            return Ok(Vec::new());
        }
        if !engine.is_well_dominated(g)? {
            return Ok(vec![CheckRecord::ok(CHECK, format!("{id};vacuous"))]);
        }
        let mut records = Vec::new();
        for mask in 1u32..(1 << g.order()) {
            let m = VertexSet::from_members(
                g.order(),
                (0..g.order()).filter(|&v| mask & (1 << v) != 0),
            )?;
            if !g.is_independent(&m)? {
                continue;
            }
            let instance = format!("{id};M={m}");
            let still = match g.remove_closed_neighborhood(&m)? {
                None => true, // nothing left; vacuously well-dominated
                Some(rest) => engine.is_well_dominated(&rest.graph)?,
            };
            records.push(if still {
                CheckRecord::ok(CHECK, instance)
            } else {
                CheckRecord::fail(
                    CHECK,
                    instance,
                    "residual graph is not well-dominated".to_string(),
                )
            });
        }
        Ok(records)
    })?;
    Ok(flatten(nested))
}

/// `prop-strong-bounds`: γ(G ⊠ H) ≤ γ(G)γ(H), Γ(G ⊠ H) ≥ Γ(G)Γ(H), and
/// γ(G ⊠ H) ≥ max(γ(G), γ(H)).
pub fn check_strong_bounds(
    pairs: &[(Graph, Graph)],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let nested = try_par_map(config.jobs, pairs, |(g, h)| {
        let p = strong_product(g, h)?;
        let (gg, _) = engine.domination_number(g)?;
        let (gh, _) = engine.domination_number(h)?;
        let (gp, _) = engine.domination_number(&p)?;
        let (ug, _) = engine.upper_domination_number(g)?;
        let (uh, _) = engine.upper_domination_number(h)?;
        let (up, _) = engine.upper_domination_number(&p)?;
        let mut problems = Vec::new();
        if gp > gg * gh {
            problems.push(format!("gamma {gp} exceeds factor product {gg}*{gh}"));
        }
        if up < ug * uh {
            problems.push(format!("upper {up} below factor product {ug}*{uh}"));
        }
        if gp < gg.max(gh) {
            problems.push(format!("gamma {gp} below max({gg}, {gh})"));
        }
        Ok(vec![CheckRecord::from_problems(
            "prop-strong-bounds",
            pair_id(g, h),
            problems,
        )])
    })?;
    Ok(flatten(nested))
}

/// Direct-product lemma suite over connected factors of order ≥ 3:
/// `lem-direct-wd-identities` and `cor-direct-minimum-independent` apply when
/// the product is well-dominated; `lem-direct-minimal-iff-independent` is
/// unconditional and checked in both orientations.
pub fn check_direct_lemmas(
    pairs: &[(Graph, Graph)],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let nested = try_par_map(config.jobs, pairs, |(g, h)| {
        let id = pair_id(g, h);
        let p = direct_product(g, h)?;
        let wd = engine.is_well_dominated(&p)?;
        let mut records = Vec::new();

        if wd {
            let (gp, _) = engine.domination_number(&p)?;
            let (gg, _) = engine.domination_number(g)?;
            let (gh, _) = engine.domination_number(h)?;
            let (_, (ag, _)) = engine.independence_numbers(g)?;
            let (_, (ah, _)) = engine.independence_numbers(h)?;
            let mut problems = Vec::new();
            if gp != gg * h.order() || gp != gh * g.order() {
                problems.push(format!(
                    "gamma {gp} vs {gg}*{} and {gh}*{}",
                    h.order(),
                    g.order()
                ));
            }
            if gg != ag {
                problems.push(format!("left factor gamma {gg} != independence {ag}"));
            }
            if gh != ah {
                problems.push(format!("right factor gamma {gh} != independence {ah}"));
            }
            records.push(CheckRecord::from_problems(
                "lem-direct-wd-identities",
                id.clone(),
                problems,
            ));

            let mut problems = Vec::new();
            for (side, f) in [("left", g), ("right", h)] {
                for d in engine.minimum_dominating_sets(f)? {
                    if !f.is_independent(&d)? {
                        problems.push(format!("{side} minimum dominating set {d} not independent"));
                    }
                }
            }
            records.push(CheckRecord::from_problems(
                "cor-direct-minimum-independent",
                id.clone(),
                problems,
            ));
        } else {
            records.push(CheckRecord::ok(
                "lem-direct-wd-identities",
                format!("{id};vacuous"),
            ));
            records.push(CheckRecord::ok(
                "cor-direct-minimum-independent",
                format!("{id};vacuous"),
            ));
        }

        for (side, f) in [("left", g), ("right", h)] {
            let mut problems = Vec::new();
            for d in engine.enumerate_minimal_dominating_sets(f)? {
                let lifted = if side == "left" {
                    lift_left(&d, g, h)
                } else {
                    lift_right(&d, g, h)
                };
                let minimal = is_minimal_dominating(&p, &lifted)?;
                let independent = f.is_independent(&d)?;
                if minimal != independent {
                    problems.push(format!(
                        "D={d}: lifted minimality {minimal} but independence {independent}"
                    ));
                }
            }
            records.push(CheckRecord::from_problems(
                "lem-direct-minimal-iff-independent",
                format!("{id};{side}"),
                problems,
            ));
        }
        Ok(records)
    })?;
    Ok(flatten(nested))
}

/// Cartesian construction lemmas: `lem-minimalconstruction` lifts every
/// open-irredundant minimal dominating set of G to an open-irredundant minimal
/// dominating set of G □ H; `lem-cd-construction` mixes one critical vertex
/// layer with full layers and checks domination (and minimality when the
/// critical set is a singleton).
pub fn check_cartesian_constructions(
    gs: &[Graph],
    hs: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let mut items = Vec::new();
    for g in gs {
        for h in hs {
            if g.order() * h.order() <= config.exact_cap {
                items.push((g.clone(), h.clone()));
            }
        }
    }
    let nested = try_par_map(config.jobs, &items, |(g, h)| {
        let id = pair_id(g, h);
        let p = cartesian_product(g, h)?;
        let mut records = Vec::new();

        let minimal_sets = engine.enumerate_minimal_dominating_sets(g)?;

        let mut problems = Vec::new();
        let mut applied = false;
        for d in &minimal_sets {
            if !g.is_open_irredundant(d)? {
                continue;
            }
            applied = true;
            let lifted = lift_left(d, g, h);
            if !is_minimal_dominating(&p, &lifted)? {
                problems.push(format!("D={d}: lift is not minimal dominating"));
            } else if !p.is_open_irredundant(&lifted)? {
                problems.push(format!("D={d}: lift is not open irredundant"));
            }
        }
        records.push(CheckRecord::from_problems(
            "lem-minimalconstruction",
            if applied { id.clone() } else { format!("{id};vacuous") },
            problems,
        ));

        let h_minimal = engine.enumerate_minimal_dominating_sets(h)?;
        let mut problems = Vec::new();
        let mut applied = false;
        for d in &minimal_sets {
            let c = c_set(g, d)?;
            if c.is_empty() {
                continue;
            }
            applied = true;
            for u in c.iter() {
                let mut rest = d.clone();
                rest.remove(u);
                let base = lift_left(&rest, g, h);
                for s in &h_minimal {
                    let mut t = base.clone();
                    for w in s.iter() {
                        t.insert(pair_index(h.order(), u, w)).expect("in range");
                    }
                    if !is_dominating(&p, &t)? {
                        problems.push(format!("D={d}, u={u}, S={s}: mix does not dominate"));
                    } else if c.len() == 1 && !is_minimal_dominating(&p, &t)? {
                        problems.push(format!("D={d}, u={u}, S={s}: mix not minimal"));
                    }
                }
            }
        }
        records.push(CheckRecord::from_problems(
            "lem-cd-construction",
            if applied { id.clone() } else { format!("{id};vacuous") },
            problems,
        ));
        Ok(records)
    })?;
    Ok(flatten(nested))
}

/// `identity-corona-k2`: (F ⊙ K1) × K2 ≅ (F × K2) ⊙ K1.
pub fn check_corona_direct_identity(
    bases: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let k2 = complete(2);
    let nested = try_par_map(config.jobs, bases, |f| {
        let lhs = direct_product(&corona_k1(f)?, &k2)?;
        let rhs = corona_k1(&direct_product(f, &k2)?)?;
        let same = are_isomorphic(&lhs, &rhs, config.iso_cap)?;
        Ok(vec![if same {
            CheckRecord::ok("identity-corona-k2", graph_id(f))
        } else {
            CheckRecord::fail(
                "identity-corona-k2",
                graph_id(f),
                "the two corona/product compositions are not isomorphic".to_string(),
            )
        }])
    })?;
    Ok(flatten(nested))
}

/// `thm-direct-characterization`: structural verdict vs exact engine answer.
pub fn cross_validate_direct(
    pairs: &[(Graph, Graph)],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let nested = try_par_map(config.jobs, pairs, |(g, h)| {
        let verdict = direct_product_well_dominated(g, h);
        let exact = engine.is_well_dominated(&direct_product(g, h)?)?;
        let agree = match verdict.verdict {
            Verdict::WellDominated => exact,
            Verdict::NotWellDominated => !exact,
            Verdict::OutOfTheoremScope => false,
        };
        Ok(vec![if agree {
            CheckRecord::ok("thm-direct-characterization", pair_id(g, h))
        } else {
            CheckRecord::fail(
                "thm-direct-characterization",
                pair_id(g, h),
                format!(
                    "recognizer verdict {:?} (rule {}) but exact answer {exact}",
                    verdict.verdict, verdict.rule
                ),
            )
        }])
    })?;
    Ok(flatten(nested))
}

/// `thm-cartesian-characterization`: K_m □ H verdict vs exact engine answer.
pub fn cross_validate_cartesian(
    ms: &[usize],
    hs: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let mut items = Vec::new();
    for &m in ms {
        for h in hs {
            if m * h.order() <= config.exact_cap.min(STRONG_BOUNDS_PRODUCT_CAP) {
                items.push((m, h.clone()));
            }
        }
    }
    let nested = try_par_map(config.jobs, &items, |(m, h)| {
        let verdict = cartesian_with_complete_well_dominated(*m, h)?;
        let exact = engine.is_well_dominated(&cartesian_product(&complete(*m), h)?)?;
        let agree = match verdict.verdict {
            Verdict::WellDominated => exact,
            Verdict::NotWellDominated => !exact,
            Verdict::OutOfTheoremScope => false,
        };
        let instance = format!("m={m};h={}", emit_graph6(h));
        Ok(vec![if agree {
            CheckRecord::ok("thm-cartesian-characterization", instance)
        } else {
            CheckRecord::fail(
                "thm-cartesian-characterization",
                instance,
                format!(
                    "recognizer verdict {:?} (rule {}) but exact answer {exact}",
                    verdict.verdict, verdict.rule
                ),
            )
        }])
    })?;
    Ok(flatten(nested))
}

/// `thm-strong-complete-factor`: K_n ⊠ H verdict vs exact engine answer.
pub fn cross_validate_strong(
    ns: &[usize],
    hs: &[Graph],
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let mut items = Vec::new();
    for &n in ns {
        for h in hs {
            if n * h.order() <= config.exact_cap {
                items.push((n, h.clone()));
            }
        }
    }
    let nested = try_par_map(config.jobs, &items, |(n, h)| {
        let verdict = strong_with_complete_well_dominated(*n, h, &engine)?;
        let exact = engine.is_well_dominated(&strong_product(&complete(*n), h)?)?;
        let agree = match verdict.verdict {
            Verdict::WellDominated => exact,
            Verdict::NotWellDominated => !exact,
            Verdict::OutOfTheoremScope => false,
        };
        let instance = format!("n={n};h={}", emit_graph6(h));
        Ok(vec![if agree {
            CheckRecord::ok("thm-strong-complete-factor", instance)
        } else {
            CheckRecord::fail(
                "thm-strong-complete-factor",
                instance,
                format!(
                    "recognizer verdict {:?} (rule {}) but exact answer {exact}",
                    verdict.verdict, verdict.rule
                ),
            )
        }])
    })?;
    Ok(flatten(nested))
}

// ---------------------------------------------------------------------------
// hunt
// ---------------------------------------------------------------------------

enum PairOutcome {
    Pruned,
    WellDominated,
    NotWellDominated,
}

/// Sweep unordered pairs of connected nontrivial factors for well-dominated
/// Cartesian products. Pairs failing the necessary conditions are pruned (a
/// fixed-seed 5% sample of them is re-checked exactly as `hunt-filter-audit`);
/// survivors are decided exactly. Each well-dominated product yields a
/// `conj-cartesian-complete-factor` record that passes iff a factor is
/// complete, and one summary record reports the overall outcome.
///
/// `resume_log`, when given, names an append-only file of finished pair ids:
/// already-listed pairs are skipped on the next run and newly finished ones
/// are appended.
pub fn hunt_conjecture(
    graphs: &[Graph],
    config: &HarnessConfig,
    resume_log: Option<&Path>,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let done: BTreeSet<String> = match resume_log {
        Some(path) if path.exists() => fs::read_to_string(path)?
            .lines()
            .map(|l| l.to_string())
            .collect(),
        _ => BTreeSet::new(),
    };

    let pairs: Vec<(Graph, Graph)> = unordered_pairs(graphs, config.exact_cap, |g| {
        connected_nontrivial(g)
    })
    .into_iter()
    .filter(|(g, h)| !done.contains(&pair_id(g, h)))
    .collect();

    let outcomes: Vec<PairOutcome> = try_par_map(config.jobs, &pairs, |(g, h)| {
        let audit = cartesian_necessary_conditions(g, h, &engine)?;
        Ok(if audit.ruled_out {
            PairOutcome::Pruned
        } else if engine.is_well_dominated(&cartesian_product(g, h)?)? {
            PairOutcome::WellDominated
        } else {
            PairOutcome::NotWellDominated
        })
    })?;

    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    for ((g, h), outcome) in pairs.iter().zip(&outcomes) {
        if let PairOutcome::WellDominated = outcome {
            let id = pair_id(g, h);
            let complete_factor = classify_structure(g) == StructureClass::Complete
                || classify_structure(h) == StructureClass::Complete;
            records.push(if complete_factor {
                CheckRecord::ok("conj-cartesian-complete-factor", id)
            } else {
                counterexamples.push(id.clone());
                CheckRecord::fail(
                    "conj-cartesian-complete-factor",
                    id,
                    "well-dominated product with no complete factor".to_string(),
                )
            });
        }
    }

    // soundness audit of the filter on a fixed-seed sample of pruned pairs
    let mut rng = StdRng::seed_from_u64(HUNT_AUDIT_SEED);
    let sampled: Vec<(Graph, Graph)> = pairs
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| matches!(o, PairOutcome::Pruned))
        .filter(|_| rng.gen_bool(HUNT_AUDIT_RATE))
        .map(|(pair, _)| pair.clone())
        .collect();
    let audited = try_par_map(config.jobs, &sampled, |(g, h)| {
        let wd = engine.is_well_dominated(&cartesian_product(g, h)?)?;
        Ok(vec![if wd {
            CheckRecord::fail(
                "hunt-filter-audit",
                pair_id(g, h),
                "filter pruned a well-dominated product".to_string(),
            )
        } else {
            CheckRecord::ok("hunt-filter-audit", pair_id(g, h))
        }])
    })?;
    records.extend(flatten(audited));

    records.push(if counterexamples.is_empty() {
        CheckRecord::ok(
            "conj-cartesian-complete-factor-summary",
            "sweep".to_string(),
        )
    } else {
        CheckRecord::fail(
            "conj-cartesian-complete-factor-summary",
            "sweep".to_string(),
            format!("counterexamples: {}", counterexamples.join(", ")),
        )
    });

    if let Some(path) = resume_log {
        let mut text = String::new();
        for (g, h) in &pairs {
            text.push_str(&pair_id(g, h));
            text.push('\n');
        }
        let mut log = fs::OpenOptions::new().create(true).append(true).open(path)?;
        use std::io::Write as _;
        log.write_all(text.as_bytes())?;
    }

    Ok(records)
}

/// `self-test-violation`: a deliberately false claim (P3 is well-dominated)
/// proving that failures surface as failing records and a failing exit.
pub fn check_self_test_violation(
    config: &HarnessConfig,
) -> Result<Vec<CheckRecord>, HarnessError> {
    let engine = config.engine();
    let p3 = path(3);
    let wd = engine.is_well_dominated(&p3)?;
    Ok(vec![if wd {
        CheckRecord::ok("self-test-violation", graph_id(&p3))
    } else {
        CheckRecord::fail(
            "self-test-violation",
            graph_id(&p3),
            "deliberate negative control: P3 is not well-dominated (chain 1, 1, 2, 2)".to_string(),
        )
    }])
}

// ---------------------------------------------------------------------------
// suite runner
// ---------------------------------------------------------------------------

/// Run the named suites over a corpus and return the sorted report. `started`
/// is caller-supplied so replays can be byte-identical.
pub fn run_suites(
    suite_spec: &str,
    corpus: &Corpus,
    corpus_label: &str,
    config: &HarnessConfig,
    started: u64,
    resume_log: Option<&Path>,
) -> Result<SuiteReport, HarnessError> {
    let suites = parse_suites(suite_spec)?;
    let graphs: Vec<Graph> = corpus.entries.iter().map(|e| e.graph.clone()).collect();
    let trio = vec![complete(2), complete(3), path(3)];

    let mut records = Vec::new();
    for suite in &suites {
        let batch = match suite {
            SuiteId::Chain => {
                let scope: Vec<Graph> = graphs
                    .iter()
                    .filter(|g| g.order() <= config.exact_cap)
                    .cloned()
                    .collect();
                check_chain(&scope, config)?
            }
            SuiteId::Hereditary => {
                let scope: Vec<Graph> = graphs
                    .iter()
                    .filter(|g| g.order() <= HEREDITARY_ORDER_CAP.min(config.exact_cap))
                    .cloned()
                    .collect();
                check_hereditary(&scope, config)?
            }
            SuiteId::StrongBounds => {
                let pairs = unordered_pairs(
                    &graphs,
                    STRONG_BOUNDS_PRODUCT_CAP.min(config.exact_cap),
                    connected_nontrivial,
                );
                check_strong_bounds(&pairs, config)?
            }
            SuiteId::DirectLemmas => {
                let pairs = unordered_pairs(&graphs, config.exact_cap, |g| {
                    g.order() >= 3 && g.is_connected()
                });
                check_direct_lemmas(&pairs, config)?
            }
            SuiteId::CartesianConstructions => {
                let gs: Vec<Graph> = graphs
                    .iter()
                    .filter(|g| connected_nontrivial(g))
                    .cloned()
                    .collect();
                check_cartesian_constructions(&gs, &trio, config)?
            }
            SuiteId::CoronaIdentity => {
                let bases: Vec<Graph> = graphs
                    .iter()
                    .filter(|g| g.is_connected() && 4 * g.order() <= config.iso_cap)
                    .cloned()
                    .collect();
                check_corona_direct_identity(&bases, config)?
            }
            SuiteId::RecognizersDirect => {
                let pairs = unordered_pairs(&graphs, config.exact_cap, connected_nontrivial);
                cross_validate_direct(&pairs, config)?
            }
            SuiteId::RecognizersCartesian => {
                let hs: Vec<Graph> = graphs
                    .iter()
                    .filter(|g| connected_nontrivial(g))
                    .cloned()
                    .collect();
                cross_validate_cartesian(&[2, 3, 4], &hs, config)?
            }
            SuiteId::RecognizersStrong => {
                cross_validate_strong(&[2, 3], &graphs, config)?
            }
            SuiteId::Hunt => hunt_conjecture(&graphs, config, resume_log)?,
            SuiteId::SelfTestViolation => check_self_test_violation(config)?,
        };
        records.extend(batch);
    }

    records.sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
    let suite_name = if suite_spec.trim() == "all" {
        "all".to_string()
    } else {
        suites
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>()
            .join(",")
    };
    Ok(SuiteReport {
        header: ReportHeader {
            suite: suite_name,
            corpus: corpus_label.to_string(),
            started,
        },
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, star};
    use crate::io::CorpusEntry;

    fn mini_corpus() -> Corpus {
        let graphs = vec![
            complete(2),
            complete(3),
            path(3),
            path(4),
            cycle(4),
            cycle(5),
            star(3),
        ];
        Corpus {
            entries: graphs
                .into_iter()
                .map(|g| CorpusEntry {
                    source_id: emit_graph6(&g),
                    graph: g,
                })
                .collect(),
        }
    }

    #[test]
    fn chain_and_hereditary_pass_on_the_mini_corpus() {
        let corpus = mini_corpus();
        let config = HarnessConfig::default();
        let report = run_suites("chain,hereditary", &corpus, "mini", &config, 0, None).unwrap();
        assert!(report.passed(), "failures: {:?}", report.records);
        assert_eq!(report.header.suite, "chain,hereditary");
        // every graph appears in the chain records
        let chain = report
            .records
            .iter()
            .filter(|r| r.check == "eq-domination-chain")
            .count();
        assert_eq!(chain, corpus.len());
    }

    #[test]
    fn reruns_are_byte_identical_and_worker_count_invariant() {
        let corpus = mini_corpus();
        let seq = HarnessConfig {
            jobs: 1,
            ..HarnessConfig::default()
        };
        let par = HarnessConfig {
            jobs: 0,
            ..HarnessConfig::default()
        };
        let spec = "strong-bounds,direct-lemmas,recognizers-direct,hunt";
        let a = run_suites(spec, &corpus, "mini", &seq, 7, None).unwrap();
        let b = run_suites(spec, &corpus, "mini", &seq, 7, None).unwrap();
        let c = run_suites(spec, &corpus, "mini", &par, 7, None).unwrap();
        let render = |r: &SuiteReport| {
            let mut buf = Vec::new();
            crate::io::write_json_lines(&mut buf, &r.header, &r.records).unwrap();
            String::from_utf8(buf).unwrap()
        };
        assert_eq!(render(&a), render(&b));
        assert_eq!(render(&a), render(&c));
        assert!(a.passed(), "failures: {:?}", a.records);
    }

    #[test]
    fn negative_control_yields_exactly_one_failing_record() {
        let corpus = mini_corpus();
        let config = HarnessConfig::default();
        let report =
            run_suites("self-test-violation", &corpus, "mini", &config, 0, None).unwrap();
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.failing(), 1);
        assert_eq!(report.records[0].check, "self-test-violation");
        assert!(report.records[0].witness.is_some());
    }

    #[test]
    fn all_excludes_the_negative_control() {
        let suites = parse_suites("all").unwrap();
        assert!(!suites.contains(&SuiteId::SelfTestViolation));
        assert_eq!(suites.len(), 10);
        assert!(matches!(
            parse_suites("bogus"),
            Err(HarnessError::UnknownSuite(_))
        ));
    }

    #[test]
    fn suites_pass_on_the_mini_corpus() {
        let corpus = mini_corpus();
        let config = HarnessConfig::default();
        for spec in [
            "cartesian-constructions",
            "corona-identity",
            "recognizers-cartesian",
            "recognizers-strong",
        ] {
            let report = run_suites(spec, &corpus, "mini", &config, 0, None).unwrap();
            assert!(report.passed(), "{spec} failures: {:?}", report.records);
            assert!(!report.records.is_empty());
        }
    }

    #[test]
    fn hunt_resume_log_skips_finished_pairs() {
        let corpus = mini_corpus();
        let config = HarnessConfig::default();
        let dir = std::env::temp_dir().join(format!("hunt-resume-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let log = dir.join("resume.log");
        let _ = std::fs::remove_file(&log);

        let graphs: Vec<Graph> = corpus.entries.iter().map(|e| e.graph.clone()).collect();
        let first = hunt_conjecture(&graphs, &config, Some(&log)).unwrap();
        assert!(first.iter().all(|r| r.pass));
        let logged = std::fs::read_to_string(&log).unwrap();
        assert!(logged.lines().count() > 0);

        // a second run over the same corpus has nothing left to do
        let second = hunt_conjecture(&graphs, &config, Some(&log)).unwrap();
        let summary_only: Vec<_> = second
            .iter()
            .filter(|r| r.check != "conj-cartesian-complete-factor-summary")
            .collect();
        assert!(summary_only.is_empty(), "unexpected: {summary_only:?}");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn hunt_finds_the_known_products_on_a_seeded_corpus() {
        let graphs = vec![
            complete(2),
            complete(3),
            complete(4),
            path(3),
            path(4),
            cycle(4),
            cycle(5),
        ];
        let config = HarnessConfig::default();
        let records = hunt_conjecture(&graphs, &config, None).unwrap();
        let found: Vec<&str> = records
            .iter()
            .filter(|r| r.check == "conj-cartesian-complete-factor")
            .map(|r| r.instance.as_str())
            .collect();
        let k2 = emit_graph6(&complete(2));
        let k3 = emit_graph6(&complete(3));
        let k4 = emit_graph6(&complete(4));
        let p3 = emit_graph6(&path(3));
        let expected: BTreeSet<String> = [
            format!("{k2}|{k2}"),
            format!("{k3}|{k3}"),
            format!("{k3}|{p3}"),
            format!("{k4}|{k4}"),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<String> = found.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, expected);
        assert!(records.iter().all(|r| r.pass));
    }
}
