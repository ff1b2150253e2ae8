//! The worked example graphs: the Frucht graph, the star Γ1, and the
//! 2×5 ladder Γ2.

use crate::graph::SimplicialGraph;

/// The Frucht graph: the standard 12-vertex cubic asymmetric graph, from
/// its LCF description [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2].
pub fn frucht() -> SimplicialGraph {
    let lcf: [i64; 12] = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2];
    let mut edges = Vec::new();
    for i in 0..12usize {
        edges.push((i, (i + 1) % 12));
        let j = ((i as i64 + lcf[i]).rem_euclid(12)) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    edges.sort();
    edges.dedup();
    SimplicialGraph::unlabeled(12, &edges)
}

/// Γ1: the 3-star with center `c` and leaves `x`, `y`, `z`. Has the SIL
/// (x, y | z) and a separating star at `x`.
pub fn gamma1() -> SimplicialGraph {
    SimplicialGraph::new(
        vec!["c".into(), "x".into(), "y".into(), "z".into()],
        &[
            ("c".into(), "x".into()),
            ("c".into(), "y".into()),
            ("c".into(), "z".into()),
        ],
    )
    .unwrap()
}

/// Γ2: the 2×5 ladder. Bottom row w1—w2—v—w3—w4, top row x1—…—x5, with
/// rungs in between. No SIL, but a separating star at the middle bottom
/// vertex `v` (named so it is the least witness).
pub fn gamma2() -> SimplicialGraph {
    let names: Vec<String> = ["v", "w1", "w2", "w3", "w4", "x1", "x2", "x3", "x4", "x5"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let e = |a: &str, b: &str| (a.to_string(), b.to_string());
    SimplicialGraph::new(
        names,
        &[
            // bottom path
            e("w1", "w2"),
            e("w2", "v"),
            e("v", "w3"),
            e("w3", "w4"),
            // top path
            e("x1", "x2"),
            e("x2", "x3"),
            e("x3", "x4"),
            e("x4", "x5"),
            // rungs
            e("w1", "x1"),
            e("w2", "x2"),
            e("v", "x3"),
            e("w3", "x4"),
            e("w4", "x5"),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frucht_is_cubic() {
        let g = frucht();
        assert_eq!(g.n(), 12);
        assert_eq!(g.edges().len(), 18);
        for v in 0..12 {
            assert_eq!(g.degree(v), 3);
        }
        assert!(g.is_connected());
    }

    #[test]
    fn gamma1_witnesses() {
        let g = gamma1();
        assert_eq!(g.has_separating_star().map(|v| g.name(v)), Some("x"));
        let w = g.has_sil().unwrap();
        assert_eq!((g.name(w.x), g.name(w.y), g.name(w.z)), ("x", "y", "z"));
    }

    #[test]
    fn gamma2_witnesses() {
        let g = gamma2();
        assert_eq!(g.n(), 10);
        assert_eq!(g.has_separating_star().map(|v| g.name(v)), Some("v"));
        assert_eq!(g.has_sil(), None);
    }
}
