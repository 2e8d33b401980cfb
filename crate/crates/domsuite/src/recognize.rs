//! Structural verdicts that avoid exponential search wherever the
//! characterizations allow it: shape classification, corona recognition, the
//! three product characterizations, and the necessary-condition audit used to
//! prune Cartesian-product candidate pairs.

use serde::Serialize;
use thiserror::Error;

use crate::engine::{c_set, EngineError, ExactEngine};
use crate::graph::{Graph, GraphError, Induced, VertexSet};
use crate::io::emit_graph6;

#[derive(Debug, Error)]
pub enum RecognizeError {
    #[error("parameter {param} must satisfy {requirement}")]
    BadParameter {
        param: &'static str,
        requirement: &'static str,
    },
    #[error("factor must be connected")]
    DisconnectedFactor,
    #[error("factor must have at least 2 vertices")]
    TrivialFactor,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClass {
    Complete,
    Cycle,
    Path,
    Star,
    Other,
}

impl StructureClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            StructureClass::Complete => "complete",
            StructureClass::Cycle => "cycle",
            StructureClass::Path => "path",
            StructureClass::Star => "star",
            StructureClass::Other => "other",
        }
    }
}

/// Fixed priority complete > cycle > path > star, so overlapping shapes (K3 is
/// both complete and a cycle, P3 is both a path and a star) classify
/// deterministically.
pub fn classify_structure(g: &Graph) -> StructureClass {
    let n = g.order();
    if g.size() == n * (n - 1) / 2 {
        return StructureClass::Complete; // includes K1 and K2
    }
    if n >= 3 && g.is_connected() {
        let ones = g.vertices().filter(|&v| g.degree(v) == 1).count();
        let (min_deg, max_deg) = g.degree_bounds();
        if (min_deg, max_deg) == (2, 2) {
            return StructureClass::Cycle;
        }
        if (min_deg, max_deg) == (1, 2) && ones == 2 {
            return StructureClass::Path;
        }
        if min_deg == 1 && max_deg == n - 1 && ones == n - 1 {
            return StructureClass::Star;
        }
    }
    StructureClass::Other
}

/// If H is F ⊙ K1 for a connected F, recover F (with its original labels).
/// H must have even order 2k with exactly k leaves on distinct supports, every
/// support carrying exactly one leaf, and the supports inducing a connected
/// graph. K2 = K1 ⊙ K1 is the one shape where the leaf/support split is
/// ambiguous; the lower-numbered vertex is taken as the base.
pub fn recognize_corona(h: &Graph) -> Option<Induced> {
    let n = h.order();
    if n == 2 && h.size() == 1 {
        let base = VertexSet::from_members(2, [0]).expect("vertex 0 of K2");
        return Some(h.induced_subgraph(&base).expect("nonempty selection"));
    }
    if n < 4 || n % 2 != 0 {
        return None;
    }
    let mut leaves = VertexSet::empty(n);
    for v in g_vertices_with_degree(h, 1) {
        leaves.insert(v).expect("vertex in range");
    }
    if leaves.len() != n / 2 {
        return None;
    }
    for leaf in leaves.iter() {
        let support = h.neighbors(leaf).min_member().expect("degree 1");
        if leaves.contains(support) {
            return None; // a K2 component, not a pendant on a base vertex
        }
    }
    let base = leaves.complement();
    for u in base.iter() {
        if h.neighbors(u).intersection(&leaves).len() != 1 {
            return None;
        }
    }
    let f = h.induced_subgraph(&base).expect("nonempty selection");
    if !f.graph.is_connected() {
        return None;
    }
    Some(f)
}

fn g_vertices_with_degree(g: &Graph, d: usize) -> impl Iterator<Item = usize> + '_ {
    g.vertices().filter(move |&v| g.degree(v) == d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    WellDominated,
    NotWellDominated,
    OutOfTheoremScope,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecognitionVerdict {
    pub verdict: Verdict,
    /// Deciding rule, nonempty unless the verdict is OutOfTheoremScope.
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl RecognitionVerdict {
    fn new(verdict: Verdict, rule: &str, witness: Option<String>) -> Self {
        RecognitionVerdict {
            verdict,
            rule: rule.to_string(),
            witness,
        }
    }
}

fn is_k(g: &Graph, n: usize) -> bool {
    g.order() == n && classify_structure(g) == StructureClass::Complete
}

fn is_c4(g: &Graph) -> bool {
    g.order() == 4 && classify_structure(g) == StructureClass::Cycle
}

/// Is G × H well-dominated? Decided purely structurally: the well-dominated
/// direct products of connected nontrivial factors are exactly K3 × K3,
/// K2 × C4, and K2 × (F ⊙ K1) for connected F.
pub fn direct_product_well_dominated(g: &Graph, h: &Graph) -> RecognitionVerdict {
    if g.order() < 2 || h.order() < 2 || !g.is_connected() || !h.is_connected() {
        return RecognitionVerdict::new(
            Verdict::OutOfTheoremScope,
            "factors-not-connected-nontrivial",
            None,
        );
    }
    if is_k(g, 3) && is_k(h, 3) {
        return RecognitionVerdict::new(Verdict::WellDominated, "factors-k3-k3", None);
    }
    for (k2, other) in [(g, h), (h, g)] {
        if !is_k(k2, 2) {
            continue;
        }
        if is_c4(other) {
            return RecognitionVerdict::new(Verdict::WellDominated, "k2-with-c4", None);
        }
        if let Some(f) = recognize_corona(other) {
            let note = if f.graph.order() == 1 {
                "corona base @ (single-vertex base)".to_string()
            } else {
                format!("corona base {}", emit_graph6(&f.graph))
            };
            return RecognitionVerdict::new(Verdict::WellDominated, "k2-with-corona", Some(note));
        }
    }
    RecognitionVerdict::new(Verdict::NotWellDominated, "no-matching-shape", None)
}

/// Is K_m □ H well-dominated (m ≥ 2)? Yes exactly when H ≅ K_m, except that
/// m = 3 also admits H ≅ P3.
pub fn cartesian_with_complete_well_dominated(
    m: usize,
    h: &Graph,
) -> Result<RecognitionVerdict, RecognizeError> {
    if m < 2 {
        return Err(RecognizeError::BadParameter {
            param: "m",
            requirement: "m >= 2",
        });
    }
    if h.order() < 2 || !h.is_connected() {
        return Ok(RecognitionVerdict::new(
            Verdict::OutOfTheoremScope,
            "factor-not-connected-nontrivial",
            None,
        ));
    }
    let class = classify_structure(h);
    let well = if m == 3 {
        is_k(h, 3) || (h.order() == 3 && class == StructureClass::Path)
    } else {
        is_k(h, m)
    };
    let rule = match (m, well) {
        (3, true) => "h-is-k3-or-p3",
        (3, false) => "h-not-k3-or-p3",
        (_, true) => "h-is-km",
        (_, false) => "h-not-km",
    };
    Ok(RecognitionVerdict::new(
        if well {
            Verdict::WellDominated
        } else {
            Verdict::NotWellDominated
        },
        rule,
        None,
    ))
}

/// Is K_n ⊠ H well-dominated (n ≥ 1)? Exactly when H is; the statement holds
/// for any H, so trivial and disconnected factors are in scope (noted in the
/// witness).
pub fn strong_with_complete_well_dominated(
    n: usize,
    h: &Graph,
    engine: &ExactEngine,
) -> Result<RecognitionVerdict, RecognizeError> {
    if n < 1 {
        return Err(RecognizeError::BadParameter {
            param: "n",
            requirement: "n >= 1",
        });
    }
    let well = engine.is_well_dominated(h)?;
    let mut notes = Vec::new();
    if n == 1 {
        notes.push("n=1: the product equals the factor");
    }
    if h.order() == 1 {
        notes.push("trivial factor accepted: the statement covers any H");
    } else if !h.is_connected() {
        notes.push("disconnected factor accepted: the statement covers any H");
    }
    Ok(RecognitionVerdict::new(
        if well {
            Verdict::WellDominated
        } else {
            Verdict::NotWellDominated
        },
        if well {
            "h-well-dominated"
        } else {
            "h-not-well-dominated"
        },
        if notes.is_empty() {
            None
        } else {
            Some(notes.join("; "))
        },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionStatus {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionOutcome {
    pub condition: &'static str,
    /// "pair", "left", or "right".
    pub scope: &'static str,
    pub status: ConditionStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionAudit {
    pub outcomes: Vec<ConditionOutcome>,
    /// True iff any condition is violated; a false value is inconclusive —
    /// the audit is a filter, not a decider.
    pub ruled_out: bool,
}

struct FactorFacts {
    order: usize,
    gamma: usize,
    well_dominated: bool,
    isolatable: VertexSet,
    critical_min_set: Option<(VertexSet, VertexSet)>, // (D, c(D))
    min_degree_vertex: (usize, usize),                // (vertex, degree)
}

fn factor_facts(g: &Graph, engine: &ExactEngine) -> Result<FactorFacts, RecognizeError> {
    let (gamma, _) = engine.domination_number(g)?;
    let well_dominated = engine.is_well_dominated(g)?;
    let isolatable = engine.isolatable_vertices(g)?;
    let mut critical_min_set = None;
    for d in engine.minimum_dominating_sets(g)? {
        let c = c_set(g, &d)?;
        if !c.is_empty() {
            critical_min_set = Some((d, c));
            break;
        }
    }
    let min_degree_vertex = g
        .vertices()
        .map(|v| (v, g.degree(v)))
        .min_by_key(|&(v, d)| (d, v))
        .expect("order at least 1");
    Ok(FactorFacts {
        order: g.order(),
        gamma,
        well_dominated,
        isolatable,
        critical_min_set,
        min_degree_vertex,
    })
}

/// Necessary conditions for G □ H to be well-dominated, evaluated on both
/// factors. Any violation rules the pair out; no violation is inconclusive.
pub fn cartesian_necessary_conditions(
    g: &Graph,
    h: &Graph,
    engine: &ExactEngine,
) -> Result<ConditionAudit, RecognizeError> {
    for factor in [g, h] {
        if factor.order() < 2 {
            return Err(RecognizeError::TrivialFactor);
        }
        if !factor.is_connected() {
            return Err(RecognizeError::DisconnectedFactor);
        }
    }
    let left = factor_facts(g, engine)?;
    let right = factor_facts(h, engine)?;
    let mut outcomes = Vec::new();

    // at least one factor must be well-dominated
    outcomes.push(ConditionOutcome {
        condition: "factor-well-dominated",
        scope: "pair",
        status: if left.well_dominated || right.well_dominated {
            ConditionStatus::Holds
        } else {
            ConditionStatus::Violated
        },
        witness: (!left.well_dominated && !right.well_dominated)
            .then(|| "neither factor is well-dominated".to_string()),
    });

    // γ(G)·n(H) must equal γ(H)·n(G)
    let lhs = left.gamma * right.order;
    let rhs = right.gamma * left.order;
    outcomes.push(ConditionOutcome {
        condition: "gamma-order-identity",
        scope: "pair",
        status: if lhs == rhs {
            ConditionStatus::Holds
        } else {
            ConditionStatus::Violated
        },
        witness: (lhs != rhs).then(|| {
            format!(
                "{}*{} = {} but {}*{} = {}",
                left.gamma, right.order, lhs, right.gamma, left.order, rhs
            )
        }),
    });

    for (facts, scope) in [(&left, "left"), (&right, "right")] {
        // no minimum dominating set may have a self-only-private member
        outcomes.push(ConditionOutcome {
            condition: "no-critical-minimum-set",
            scope,
            status: if facts.critical_min_set.is_none() {
                ConditionStatus::Holds
            } else {
                ConditionStatus::Violated
            },
            witness: facts
                .critical_min_set
                .as_ref()
                .map(|(d, c)| format!("minimum dominating set {d} has c(D) = {c}")),
        });

        // a well-dominated factor may not have an isolatable vertex
        outcomes.push(ConditionOutcome {
            condition: "well-dominated-factor-has-no-isolatable-vertex",
            scope,
            status: if !facts.well_dominated {
                ConditionStatus::NotApplicable
            } else if facts.isolatable.is_empty() {
                ConditionStatus::Holds
            } else {
                ConditionStatus::Violated
            },
            witness: (facts.well_dominated && !facts.isolatable.is_empty())
                .then(|| format!("isolatable vertices {}", facts.isolatable)),
        });

        // a well-dominated factor of order >= 3 needs minimum degree >= 2
        let (v, d) = facts.min_degree_vertex;
        let applicable = facts.well_dominated && facts.order >= 3;
        outcomes.push(ConditionOutcome {
            condition: "well-dominated-factor-min-degree",
            scope,
            status: if !applicable {
                ConditionStatus::NotApplicable
            } else if d >= 2 {
                ConditionStatus::Holds
            } else {
                ConditionStatus::Violated
            },
            witness: (applicable && d < 2).then(|| format!("vertex {v} has degree {d}")),
        });
    }

    let ruled_out = outcomes
        .iter()
        .any(|o| o.status == ConditionStatus::Violated);
    Ok(ConditionAudit {
        outcomes,
        ruled_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Graph};
    use crate::iso::are_isomorphic;
    use crate::products::{corona_k1, direct_product};

    fn bull() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn classification_follows_the_priority_order() {
        assert_eq!(classify_structure(&complete(1)), StructureClass::Complete);
        assert_eq!(classify_structure(&complete(2)), StructureClass::Complete);
        assert_eq!(classify_structure(&complete(3)), StructureClass::Complete); // not cycle
        assert_eq!(classify_structure(&complete(4)), StructureClass::Complete);
        assert_eq!(classify_structure(&cycle(4)), StructureClass::Cycle);
        assert_eq!(classify_structure(&cycle(5)), StructureClass::Cycle);
        assert_eq!(classify_structure(&path(3)), StructureClass::Path); // not star
        assert_eq!(classify_structure(&path(6)), StructureClass::Path);
        assert_eq!(classify_structure(&star(3)), StructureClass::Star);
        assert_eq!(classify_structure(&star(5)), StructureClass::Star);
        assert_eq!(classify_structure(&bull()), StructureClass::Other);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(classify_structure(&two_k2), StructureClass::Other);
    }

    #[test]
    fn corona_recognition_round_trips() {
        let bases = vec![
            complete(1),
            complete(2),
            complete(3),
            path(3),
            path(4),
            cycle(4),
            cycle(5),
            star(3),
            bull(),
        ];
        for f in bases {
            let h = corona_k1(&f).unwrap();
            let got = recognize_corona(&h).expect("corona recognized");
            assert!(
                are_isomorphic(&got.graph, &f, 32).unwrap(),
                "base mismatch for {f:?}"
            );
        }
    }

    #[test]
    fn corona_recognition_frozen_cases() {
        let p4 = path(4);
        let f = recognize_corona(&p4).unwrap();
        assert_eq!(f.original, vec![1, 2]);
        assert_eq!(f.graph, complete(2));

        let k2 = complete(2);
        let f = recognize_corona(&k2).unwrap();
        assert_eq!(f.original, vec![0]);
        assert_eq!(f.graph.order(), 1);

        assert!(recognize_corona(&cycle(4)).is_none());
        assert!(recognize_corona(&path(3)).is_none());
        assert!(recognize_corona(&path(6)).is_none()); // P6 is not P3 ⊙ K1
        assert!(recognize_corona(&complete(4)).is_none());
        // corona of a disconnected base is rejected
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(recognize_corona(&two_k2).is_none());
    }

    #[test]
    fn direct_verdicts_frozen() {
        let wd = |g: &Graph, h: &Graph| direct_product_well_dominated(g, h).verdict;
        assert_eq!(wd(&complete(3), &complete(3)), Verdict::WellDominated);
        assert_eq!(wd(&complete(2), &cycle(4)), Verdict::WellDominated);
        assert_eq!(wd(&cycle(4), &complete(2)), Verdict::WellDominated);
        assert_eq!(wd(&complete(2), &path(4)), Verdict::WellDominated); // P4 = K2 ⊙ K1
        assert_eq!(wd(&complete(2), &complete(2)), Verdict::WellDominated); // K2 = K1 ⊙ K1
        assert_eq!(wd(&complete(2), &path(3)), Verdict::NotWellDominated);
        assert_eq!(wd(&cycle(4), &cycle(4)), Verdict::NotWellDominated);
        assert_eq!(wd(&path(3), &complete(3)), Verdict::NotWellDominated);
        assert_eq!(wd(&complete(1), &complete(3)), Verdict::OutOfTheoremScope);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(wd(&complete(3), &two_k2), Verdict::OutOfTheoremScope);
    }

    #[test]
    fn cartesian_verdicts_frozen() {
        let wd = |m: usize, h: &Graph| {
            cartesian_with_complete_well_dominated(m, h)
                .unwrap()
                .verdict
        };
        assert_eq!(wd(2, &complete(2)), Verdict::WellDominated);
        assert_eq!(wd(3, &complete(3)), Verdict::WellDominated);
        assert_eq!(wd(3, &path(3)), Verdict::WellDominated);
        assert_eq!(wd(4, &complete(4)), Verdict::WellDominated);
        assert_eq!(wd(5, &complete(5)), Verdict::WellDominated);
        assert_eq!(wd(2, &complete(3)), Verdict::NotWellDominated);
        assert_eq!(wd(4, &complete(3)), Verdict::NotWellDominated);
        assert_eq!(wd(3, &path(4)), Verdict::NotWellDominated);
        assert_eq!(wd(2, &path(2)), Verdict::WellDominated); // P2 = K2
        assert_eq!(wd(3, &complete(1)), Verdict::OutOfTheoremScope);
        assert!(matches!(
            cartesian_with_complete_well_dominated(1, &complete(2)),
            Err(RecognizeError::BadParameter { param: "m", .. })
        ));
    }

    #[test]
    fn strong_verdicts_frozen() {
        let engine = ExactEngine::default();
        let wd = |n: usize, h: &Graph| {
            strong_with_complete_well_dominated(n, h, &engine)
                .unwrap()
                .verdict
        };
        assert_eq!(wd(2, &cycle(5)), Verdict::WellDominated);
        assert_eq!(wd(4, &star(3)), Verdict::NotWellDominated);
        assert_eq!(wd(1, &path(3)), Verdict::NotWellDominated);
        assert_eq!(wd(1, &cycle(5)), Verdict::WellDominated);
        assert_eq!(wd(3, &complete(1)), Verdict::WellDominated);
        // disconnected factors are in scope for this statement
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let v = strong_with_complete_well_dominated(2, &two_k2, &engine).unwrap();
        assert_eq!(v.verdict, Verdict::WellDominated);
        assert!(v.witness.unwrap().contains("disconnected"));
        assert!(matches!(
            strong_with_complete_well_dominated(0, &complete(2), &engine),
            Err(RecognizeError::BadParameter { param: "n", .. })
        ));
    }

    #[test]
    fn direct_verdicts_match_the_engine_on_a_sweep() {
        let engine = ExactEngine::default();
        let pool = vec![
            complete(2),
            complete(3),
            path(3),
            path(4),
            cycle(4),
            cycle(5),
            star(3),
        ];
        for g in &pool {
            for h in &pool {
                let verdict = direct_product_well_dominated(g, h).verdict;
                let exact = engine
                    .is_well_dominated(&direct_product(g, h).unwrap())
                    .unwrap();
                assert_eq!(
                    verdict == Verdict::WellDominated,
                    exact,
                    "mismatch on {g:?} x {h:?}"
                );
            }
        }
    }

    #[test]
    fn condition_audit_frozen_cases() {
        let engine = ExactEngine::default();
        let audit = |g: &Graph, h: &Graph| cartesian_necessary_conditions(g, h, &engine).unwrap();

        // neither factor well-dominated
        let a = audit(&path(3), &path(3));
        assert!(a.ruled_out);
        assert!(a.outcomes.iter().any(|o| o.condition == "factor-well-dominated"
            && o.status == ConditionStatus::Violated));

        // γ·order mismatch, plus a well-dominated factor with isolatable vertices
        let a = audit(&cycle(4), &cycle(5));
        assert!(a.ruled_out);
        assert!(a.outcomes.iter().any(|o| o.condition == "gamma-order-identity"
            && o.status == ConditionStatus::Violated));
        assert!(a.outcomes.iter().any(|o| {
            o.condition == "well-dominated-factor-has-no-isolatable-vertex"
                && o.scope == "left"
                && o.status == ConditionStatus::Violated
        }));

        // P4 has the minimum dominating set {0,2} with c(D) = {0}
        let a = audit(&complete(2), &path(4));
        assert!(a.ruled_out);
        assert!(a.outcomes.iter().any(|o| o.condition == "no-critical-minimum-set"
            && o.scope == "right"
            && o.status == ConditionStatus::Violated));

        // inconclusive pairs — including every known well-dominated product
        for (g, h) in [
            (cycle(5), cycle(5)),
            (complete(2), complete(2)),
            (complete(3), complete(3)),
            (complete(3), path(3)),
            (complete(4), complete(4)),
        ] {
            let a = audit(&g, &h);
            assert!(!a.ruled_out, "filter must not rule out {g:?} x {h:?}");
        }
    }

    #[test]
    fn condition_audit_preconditions() {
        let engine = ExactEngine::default();
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            cartesian_necessary_conditions(&two_k2, &complete(2), &engine),
            Err(RecognizeError::DisconnectedFactor)
        ));
        assert!(matches!(
            cartesian_necessary_conditions(&complete(1), &complete(2), &engine),
            Err(RecognizeError::TrivialFactor)
        ));
    }
}
