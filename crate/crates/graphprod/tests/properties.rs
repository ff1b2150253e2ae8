//! Randomized invariants of the word engine, the expansion and the
//! canonical form, driven by proptest.

use proptest::prelude::*;

use graphprod::abelian::{expand_graph, GroupLabel};
use graphprod::graph::SimplicialGraph;
use graphprod::symmetry::canonical_form;
use graphprod::words::{equals, invert, multiply, normalize, Presentation, Syllable, Word};

/// Strategy: a presentation on 2–5 vertices with random edges and orders
/// drawn from {∞, 2, 3, 4}.
fn presentations() -> impl Strategy<Value = Presentation> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            (
                Just(pairs),
                proptest::bits::u16::between(0, m),
                proptest::collection::vec(prop_oneof![Just(0u64), Just(2), Just(3), Just(4)], n),
            )
                .prop_map(move |(pairs, mask, orders)| {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    Presentation::new(SimplicialGraph::unlabeled(n, &edges), orders)
                        .expect("orders are prime powers")
                })
        })
        .no_shrink()
}

fn words_over(p: &Presentation) -> impl Strategy<Value = Word> {
    let n = p.n();
    proptest::collection::vec((0..n, prop_oneof![-3i64..0, 1i64..4]), 0..8).prop_map(|syl| {
        Word::from_syllables(
            syl.into_iter()
                .map(|(vertex, exponent)| Syllable { vertex, exponent })
                .collect(),
        )
    })
}

fn word_pairs() -> impl Strategy<Value = (Presentation, Word, Word)> {
    presentations().prop_flat_map(|p| {
        let a = words_over(&p);
        let b = words_over(&p);
        (Just(p), a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normalize_is_idempotent((p, a, _b) in word_pairs()) {
        let nf = normalize(&p, &a).unwrap();
        prop_assert_eq!(normalize(&p, &nf).unwrap(), nf);
    }

    #[test]
    fn inverse_cancels((p, a, _b) in word_pairs()) {
        let inv = invert(&p, &a).unwrap();
        prop_assert!(multiply(&p, &a, &inv).unwrap().is_identity());
        prop_assert!(multiply(&p, &inv, &a).unwrap().is_identity());
    }

    #[test]
    fn multiplication_respects_equality((p, a, b) in word_pairs()) {
        // (ab)b⁻¹ = a
        let ab = multiply(&p, &a, &b).unwrap();
        let back = multiply(&p, &ab, &invert(&p, &b).unwrap()).unwrap();
        prop_assert!(equals(&p, &back, &a).unwrap());
    }

    #[test]
    fn commuting_swap_preserves_normal_form((p, a, _b) in word_pairs()) {
        // swapping any adjacent commuting pair does not change the element
        let syl = a.syllables();
        for i in 0..syl.len().saturating_sub(1) {
            let (u, v) = (syl[i].vertex, syl[i + 1].vertex);
            if u != v && p.commute(u, v) {
                let mut other = syl.to_vec();
                other.swap(i, i + 1);
                let other = Word::from_syllables(other);
                prop_assert_eq!(
                    normalize(&p, &a).unwrap(),
                    normalize(&p, &other).unwrap()
                );
            }
        }
    }
}

/// Strategy: an unlabeled graph on 2–6 vertices plus a permutation seed.
fn graphs_with_perm() -> impl Strategy<Value = (SimplicialGraph, Vec<usize>)> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        (
            Just(pairs),
            proptest::bits::u16::between(0, m),
            Just(()).prop_perturb(move |_, mut rng| {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, rng.random_range(0..=i));
                }
                perm
            }),
        )
            .prop_map(move |(pairs, mask, perm)| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let n = perm.len();
                (SimplicialGraph::unlabeled(n, &edges), perm)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_permutation_invariant((g, perm) in graphs_with_perm()) {
        let relabeled: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let h = SimplicialGraph::unlabeled(g.n(), &relabeled);
        prop_assert_eq!(
            canonical_form(&g, 10).unwrap(),
            canonical_form(&h, 10).unwrap()
        );
    }

    #[test]
    fn expansion_preserves_graph_predicates((g, _perm) in graphs_with_perm()) {
        // labels expand each vertex into a clique joined to its old
        // neighbors, which changes neither separating stars nor SILs
        let labels: Vec<GroupLabel> = (0..g.n())
            .map(|v| match v % 3 {
                0 => GroupLabel::z2(),
                1 => GroupLabel::free(1),
                _ => GroupLabel::FgAbelian { free_rank: 1, torsion: vec![2] },
            })
            .collect();
        let eg = expand_graph(&g, &labels).unwrap();
        prop_assert_eq!(
            g.has_separating_star().is_some(),
            eg.graph.has_separating_star().is_some()
        );
        prop_assert_eq!(g.has_sil().is_some(), eg.graph.has_sil().is_some());
    }
}
