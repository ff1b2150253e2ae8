//! Semicompleteness and completeness verdicts for a labeled graph, with
//! per-condition evidence.
//!
//! Semicompleteness: reduce away the abelian central clique, then decide
//! by the separating-star criterion when all labels are finitely
//! generated abelian, with short-circuits for vertex groups known not to
//! be semicomplete and for non-abelian labels off a star. Completeness:
//! all conditions of the order-two criterion, checked on the clique
//! expansion so every factor is directly indecomposable.

use serde::Serialize;

use crate::abelian::{expand_graph, AbelianError, ExpandedGraph, GroupLabel, Known};
use crate::graph::{SimplicialGraph, VertexSet};
use crate::symmetry::is_asymmetric;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
            Verdict::Undetermined => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Undetermined => "Undetermined",
        }
    }
}

/// One condition checked on the way to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub condition: String,
    pub holds: bool,
    /// Quoted condition text identifying the statement relied on.
    pub citation: &'static str,
    pub witness: Option<String>,
}

impl Evidence {
    fn new(condition: impl Into<String>, holds: bool, citation: &'static str) -> Evidence {
        Evidence {
            condition: condition.into(),
            holds,
            citation,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: impl Into<String>) -> Evidence {
        self.witness = Some(witness.into());
        self
    }
}

const CIT_SUBGROUP: &str = "all vertex groups are semicomplete";
const CIT_SEP_STAR: &str = "if the graph has a separating star, the graph product is not semicomplete";
const CIT_ABELIAN: &str =
    "if semicomplete and the vertex set is not a star of a vertex, all vertex groups are abelian";
const CIT_FGABELIAN: &str =
    "for finitely generated abelian vertex groups: semicomplete iff no separating star";
const CIT_CENTER: &str = "the center is generated by the vertices whose star is the whole graph";
const CIT_DIRECT_PRODUCT: &str =
    "a star of a vertex with a non-abelian tip can be semicomplete (e.g. Sym(5) x Z); no general criterion";
const CIT_LINK_CONDITION: &str =
    "if no link is contained in another star: semicomplete iff all vertex groups abelian and no separating star";
const CIT_COMPLETE: &str =
    "complete iff all vertex groups are Z/2, no separating star, asymmetric, no star containment, connected, at least 7 vertices";
const CIT_INDECOMPOSABLE: &str =
    "the completeness criterion assumes directly indecomposable vertex groups with non-trivial center";

/// The central clique restricted to abelian labels: for all-abelian
/// inputs this is exactly the set of full-star vertices.
pub fn center_delta(g: &SimplicialGraph, labels: &[GroupLabel]) -> VertexSet {
    VertexSet::from_iter(
        g.full_star_vertices()
            .iter()
            .filter(|&v| labels[v].is_abelian()),
    )
}

fn restrict_labels(labels: &[GroupLabel], keep: VertexSet) -> Vec<GroupLabel> {
    keep.iter().map(|v| labels[v].clone()).collect()
}

pub fn classify_semicomplete(
    g: &SimplicialGraph,
    labels: &[GroupLabel],
) -> (Verdict, Vec<Evidence>) {
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    let mut evidence = Vec::new();

    // extra certification for the abelian case, stated on the original graph
    if g.n() > 0 && g.link_condition_violation().is_none() {
        evidence.push(Evidence::new(
            "link condition holds (no link inside another star): verdict additionally certified without the finitely-generated hypothesis",
            true,
            CIT_LINK_CONDITION,
        ));
    }

    // reduce away the abelian central clique
    let mut g = g.clone();
    let mut labels = labels.to_vec();
    loop {
        let delta = center_delta(&g, &labels);
        if delta.is_empty() {
            break;
        }
        evidence.push(
            Evidence::new(
                "abelian central clique removed; verdict is decided on the remainder",
                true,
                CIT_CENTER,
            )
            .with_witness(g.set_names(delta).join(",")),
        );
        let keep = g.vertex_set().minus(delta);
        labels = restrict_labels(&labels, keep);
        g = g.induced_subgraph(keep);
    }

    // rule 1: empty remainder means the group is (trivial or) abelian
    if g.n() == 0 {
        evidence.push(Evidence::new(
            "remainder is empty: the group is abelian, hence semicomplete",
            true,
            CIT_FGABELIAN,
        ));
        return (Verdict::Yes, evidence);
    }

    // rule 2: a vertex group known not to be semicomplete
    for v in 0..g.n() {
        if let GroupLabel::NonAbelian {
            known_semicomplete: Known::No,
            ..
        } = labels[v]
        {
            evidence.push(
                Evidence::new(
                    "a vertex group is not semicomplete",
                    false,
                    CIT_SUBGROUP,
                )
                .with_witness(g.name(v).to_string()),
            );
            return (Verdict::No, evidence);
        }
    }

    // rule 3: single vertex
    if g.n() == 1 {
        return match &labels[0] {
            GroupLabel::FgAbelian { .. } => {
                evidence.push(Evidence::new(
                    "single abelian vertex group",
                    true,
                    CIT_FGABELIAN,
                ));
                (Verdict::Yes, evidence)
            }
            GroupLabel::NonAbelian {
                known_semicomplete: Known::Yes,
                ..
            } => {
                evidence.push(
                    Evidence::new("single vertex group known to be semicomplete", true, CIT_SUBGROUP)
                        .with_witness(g.name(0).to_string()),
                );
                (Verdict::Yes, evidence)
            }
            GroupLabel::NonAbelian { .. } => {
                evidence.push(
                    Evidence::new(
                        "single non-abelian vertex group of unknown semicompleteness",
                        false,
                        CIT_SUBGROUP,
                    )
                    .with_witness(g.name(0).to_string()),
                );
                (Verdict::Undetermined, evidence)
            }
        };
    }

    // rule 4: separating star
    if let Some(v) = g.has_separating_star() {
        evidence.push(
            Evidence::new("the graph has a separating star", false, CIT_SEP_STAR)
                .with_witness(g.name(v).to_string()),
        );
        return (Verdict::No, evidence);
    }

    // rule 5: non-abelian label off a star of a vertex
    let is_star_of_vertex = !g.full_star_vertices().is_empty();
    if let Some(v) = (0..g.n()).find(|&v| !labels[v].is_abelian()) {
        if !is_star_of_vertex {
            evidence.push(
                Evidence::new(
                    "a non-abelian vertex group on a graph that is not a star of a vertex",
                    false,
                    CIT_ABELIAN,
                )
                .with_witness(g.name(v).to_string()),
            );
            return (Verdict::No, evidence);
        }
        // rule 7: non-abelian tip on a star of a vertex; no criterion applies
        evidence.push(
            Evidence::new(
                "non-abelian vertex group on a star of a vertex: no general criterion",
                false,
                CIT_DIRECT_PRODUCT,
            )
            .with_witness(g.name(v).to_string()),
        );
        return (Verdict::Undetermined, evidence);
    }

    // rule 6: all finitely generated abelian, no separating star
    evidence.push(Evidence::new(
        "all vertex groups finitely generated abelian and no separating star",
        true,
        CIT_FGABELIAN,
    ));
    (Verdict::Yes, evidence)
}

pub fn classify_complete(
    g: &SimplicialGraph,
    labels: &[GroupLabel],
) -> (Verdict, Vec<Evidence>, Option<ExpandedGraph>) {
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    let mut evidence = Vec::new();

    if let Some(v) = (0..g.n()).find(|&v| !labels[v].is_abelian()) {
        evidence.push(
            Evidence::new(
                "a non-abelian vertex group: the completeness criterion does not apply",
                false,
                CIT_INDECOMPOSABLE,
            )
            .with_witness(g.name(v).to_string()),
        );
        return (Verdict::Undetermined, evidence, None);
    }

    let eg = match expand_graph(g, labels) {
        Ok(eg) => eg,
        Err(AbelianError::ExpandedIdCollision(id)) => {
            evidence.push(
                Evidence::new("expansion failed: vertex id collision", false, CIT_COMPLETE)
                    .with_witness(id),
            );
            return (Verdict::Undetermined, evidence, None);
        }
        Err(e) => panic!("abelian labels were validated: {e}"),
    };
    let eh = &eg.graph;
    evidence.push(Evidence::new(
        format!(
            "labels expanded to {} cyclic prime-power factors; conditions are checked on the expansion",
            eh.n()
        ),
        true,
        CIT_INDECOMPOSABLE,
    ));

    let mut all = true;
    let mut push = |cond: String, holds: bool, witness: Option<String>| {
        let mut e = Evidence::new(cond, holds, CIT_COMPLETE);
        if let Some(w) = witness {
            e = e.with_witness(w);
        }
        all &= holds;
        evidence.push(e);
    };

    let bad_order = (0..eh.n()).find(|&v| eg.orders[v] != 2);
    push(
        "all vertex groups are Z/2".into(),
        bad_order.is_none(),
        bad_order.map(|v| eh.name(v).to_string()),
    );
    push("the graph is connected".into(), eh.is_connected(), None);
    push(
        format!("the graph has at least 7 vertices (found {})", eh.n()),
        eh.n() >= 7,
        None,
    );
    let sep = eh.has_separating_star();
    push(
        "the graph has no separating star".into(),
        sep.is_none(),
        sep.map(|v| eh.name(v).to_string()),
    );
    push("the graph is asymmetric".into(), is_asymmetric(eh), None);
    let containments = eh.star_containments();
    push(
        "no star is contained in another star".into(),
        containments.is_empty(),
        containments
            .first()
            .map(|&(v, w)| format!("({},{})", eh.name(v), eh.name(w))),
    );

    let verdict = if all { Verdict::Yes } else { Verdict::No };
    (verdict, evidence, Some(eg))
}

/// Verdicts, center and per-condition evidence for one labeled graph.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub semicomplete: Verdict,
    pub complete: Verdict,
    pub center: Vec<String>,
    pub semicomplete_evidence: Vec<Evidence>,
    pub complete_evidence: Vec<Evidence>,
    pub expansion: Option<ExpandedGraph>,
}

pub fn classify(g: &SimplicialGraph, labels: &[GroupLabel]) -> ClassificationReport {
    let (semicomplete, semicomplete_evidence) = classify_semicomplete(g, labels);
    let (complete, complete_evidence, expansion) = classify_complete(g, labels);
    ClassificationReport {
        semicomplete,
        complete,
        center: g.set_names(center_delta(g, labels)),
        semicomplete_evidence,
        complete_evidence,
        expansion,
    }
}

impl ClassificationReport {
    /// Deterministic one-condition-per-line rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("semicomplete: {}\n", self.semicomplete.as_str()));
        out.push_str(&format!("complete: {}\n", self.complete.as_str()));
        out.push_str(&format!(
            "center: {}\n",
            if self.center.is_empty() {
                "(trivial)".to_string()
            } else {
                self.center.join(",")
            }
        ));
        for (section, items) in [
            ("semicomplete", &self.semicomplete_evidence),
            ("complete", &self.complete_evidence),
        ] {
            for e in items {
                let witness = e
                    .witness
                    .as_ref()
                    .map(|w| format!(" witness={w}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{section}: [{}] {}{} ({})\n",
                    if e.holds { "ok" } else { "fail" },
                    e.condition,
                    witness,
                    e.citation
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sym5(known: Known) -> GroupLabel {
        GroupLabel::NonAbelian {
            non_abelian: "Sym(5)".into(),
            known_semicomplete: known,
        }
    }

    fn c5() -> SimplicialGraph {
        SimplicialGraph::unlabeled(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn center_examples() {
        let g1 = fixtures::gamma1();
        let labels = vec![GroupLabel::z2(); 4];
        assert_eq!(g1.set_names(center_delta(&g1, &labels)), vec!["c"]);
        assert!(center_delta(&c5(), &vec![GroupLabel::z2(); 5]).is_empty());

        // Sym(5) — Z/2 — Z/2 path: the middle vertex is central and abelian
        let path = SimplicialGraph::new(
            vec!["a".into(), "b".into(), "s".into()],
            &[("s".into(), "a".into()), ("a".into(), "b".into())],
        )
        .unwrap();
        let labels = vec![GroupLabel::z2(), GroupLabel::z2(), sym5(Known::Yes)];
        assert_eq!(path.set_names(center_delta(&path, &labels)), vec!["a"]);
    }

    #[test]
    fn semicomplete_sym5_path() {
        // Sym(5) — Z/2 — Z/2: reduces to two isolated vertices, one
        // non-abelian, not a star of a vertex
        let path = SimplicialGraph::new(
            vec!["a".into(), "b".into(), "s".into()],
            &[("s".into(), "a".into()), ("a".into(), "b".into())],
        )
        .unwrap();
        let labels = vec![GroupLabel::z2(), GroupLabel::z2(), sym5(Known::Yes)];
        let (verdict, evidence) = classify_semicomplete(&path, &labels);
        assert_eq!(verdict, Verdict::No);
        assert!(evidence.iter().any(|e| e.citation == CIT_ABELIAN));
    }

    #[test]
    fn semicomplete_sym5_edge() {
        // Sym(5) — Z with the Sym(5) factor known semicomplete
        let edge = SimplicialGraph::new(
            vec!["a".into(), "s".into()],
            &[("a".into(), "s".into())],
        )
        .unwrap();
        let labels = vec![GroupLabel::free(1), sym5(Known::Yes)];
        let (verdict, _) = classify_semicomplete(&edge, &labels);
        assert_eq!(verdict, Verdict::Yes);

        // with the flag unknown the classifier refuses to guess
        let labels = vec![GroupLabel::free(1), sym5(Known::Unknown)];
        let (verdict, _) = classify_semicomplete(&edge, &labels);
        assert_eq!(verdict, Verdict::Undetermined);

        // a vertex group known not to be semicomplete decides immediately
        let labels = vec![GroupLabel::free(1), sym5(Known::No)];
        let (verdict, _) = classify_semicomplete(&edge, &labels);
        assert_eq!(verdict, Verdict::No);
    }

    #[test]
    fn semicomplete_abelian_cases() {
        let (verdict, _) = classify_semicomplete(&c5(), &vec![GroupLabel::z2(); 5]);
        assert_eq!(verdict, Verdict::Yes);

        let g1 = fixtures::gamma1();
        let (verdict, evidence) = classify_semicomplete(&g1, &vec![GroupLabel::z2(); 4]);
        assert_eq!(verdict, Verdict::No);
        let sep = evidence.iter().find(|e| e.citation == CIT_SEP_STAR).unwrap();
        assert_eq!(sep.witness.as_deref(), Some("x"));
    }

    #[test]
    fn semicomplete_empty_graph() {
        let g = SimplicialGraph::new(vec![], &[]).unwrap();
        let (verdict, _) = classify_semicomplete(&g, &[]);
        assert_eq!(verdict, Verdict::Yes);
        let (complete, _, _) = classify_complete(&g, &[]);
        assert_eq!(complete, Verdict::No);
    }

    #[test]
    fn semicomplete_never_undetermined_on_abelian_labels() {
        // spot-check across all graphs on 4 vertices with mixed abelian labels
        for mask in 0u64..64 {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if mask >> k & 1 != 0 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = SimplicialGraph::unlabeled(4, &edges);
            let labels = vec![
                GroupLabel::z2(),
                GroupLabel::free(1),
                GroupLabel::cyclic(6),
                GroupLabel::FgAbelian { free_rank: 1, torsion: vec![4] },
            ];
            let (verdict, _) = classify_semicomplete(&g, &labels);
            assert_ne!(verdict, Verdict::Undetermined, "mask={mask}");
        }
    }

    #[test]
    fn complete_frucht() {
        let g = fixtures::frucht();
        let (verdict, _, _) = classify_complete(&g, &vec![GroupLabel::z2(); 12]);
        assert_eq!(verdict, Verdict::Yes);
        let report = classify(&g, &vec![GroupLabel::z2(); 12]);
        assert_eq!(report.semicomplete, Verdict::Yes);
        assert_eq!(report.complete, Verdict::Yes);
    }

    #[test]
    fn complete_frucht_one_z3() {
        let g = fixtures::frucht();
        let mut labels = vec![GroupLabel::z2(); 12];
        labels[0] = GroupLabel::cyclic(3);
        let (verdict, evidence, _) = classify_complete(&g, &labels);
        assert_eq!(verdict, Verdict::No);
        let failing: Vec<&Evidence> = evidence.iter().filter(|e| !e.holds).collect();
        assert_eq!(failing.len(), 1);
        assert!(failing[0].condition.contains("Z/2"));
    }

    #[test]
    fn complete_c5() {
        let (verdict, evidence, _) = classify_complete(&c5(), &vec![GroupLabel::z2(); 5]);
        assert_eq!(verdict, Verdict::No);
        assert!(evidence
            .iter()
            .any(|e| !e.holds && e.condition.contains("7 vertices")));
        assert!(evidence
            .iter()
            .any(|e| !e.holds && e.condition.contains("asymmetric")));
    }

    #[test]
    fn complete_implies_semicomplete() {
        for (g, labels) in [
            (fixtures::frucht(), vec![GroupLabel::z2(); 12]),
            (fixtures::gamma1(), vec![GroupLabel::z2(); 4]),
            (c5(), vec![GroupLabel::z2(); 5]),
            (fixtures::gamma2(), vec![GroupLabel::z2(); 10]),
        ] {
            let report = classify(&g, &labels);
            if report.complete == Verdict::Yes {
                assert_eq!(report.semicomplete, Verdict::Yes);
            }
        }
    }
}
