//! Graph automorphisms, asymmetry testing, canonical forms and the small
//! graph census.
//!
//! The automorphism search is a backtracking over vertex images pruned by
//! iterated neighborhood color refinement (initial colors: optional label
//! plus degree). That is exact and fast enough for everything this crate
//! handles (the 12-vertex cubic Frucht graph resolves in well under a
//! second). The census enumerates all labeled graphs on `n` vertices and
//! deduplicates by canonical form.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{SimplicialGraph, VertexSet};

/// Default vertex bound for canonical forms.
pub const CANONICAL_BOUND: usize = 10;
/// Census bound: `census(n)` enumerates 2^(n(n-1)/2) graphs.
pub const CENSUS_MAX: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("canonical form bound exceeded: {0} vertices (limit {1})")]
    CanonicalBoundExceeded(usize, usize),
    #[error("census size {0} out of range 1..={CENSUS_MAX}")]
    CensusOutOfRange(usize),
    #[error("labels must cover every vertex: got {0} labels for {1} vertices")]
    LabelCountMismatch(usize, usize),
}

/// Iterated neighborhood color refinement. Colors are dense ranks of
/// invariant keys, so they agree across isomorphic graphs.
fn refine_colors(adj: &[VertexSet], initial: &[usize]) -> Vec<usize> {
    let n = adj.len();
    let mut colors = initial.to_vec();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = adj[v].iter().map(|w| colors[w]).collect();
            nb.sort_unstable();
            keys.push((colors[v], nb));
        }
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap())
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn initial_colors<L: Ord>(adj: &[VertexSet], labels: Option<&[L]>) -> Vec<usize> {
    let n = adj.len();
    let mut keys: Vec<(usize, usize)> = Vec::with_capacity(n);
    for v in 0..n {
        let label_rank = match labels {
            Some(ls) => {
                let mut order: Vec<&L> = ls.iter().collect();
                order.sort();
                order.dedup();
                order.binary_search(&&ls[v]).unwrap()
            }
            None => 0,
        };
        keys.push((label_rank, adj[v].len()));
    }
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

fn search_automorphisms(adj: &[VertexSet], colors: &[usize], out: &mut Vec<Vec<usize>>) {
    let n = adj.len();
    let mut image: Vec<usize> = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;

    fn rec(
        adj: &[VertexSet],
        colors: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = adj.len();
        if depth == n {
            out.push(image.clone());
            return;
        }
        'cand: for w in 0..n {
            if used.contains(w) || colors[w] != colors[depth] {
                continue;
            }
            for u in 0..depth {
                if adj[depth].contains(u) != adj[w].contains(image[u]) {
                    continue 'cand;
                }
            }
            image[depth] = w;
            used.insert(w);
            rec(adj, colors, depth + 1, image, used, out);
            used.remove(w);
            image[depth] = usize::MAX;
        }
    }

    rec(adj, colors, 0, &mut image, &mut used, out);
}

pub(crate) fn automorphisms_adj<L: Ord>(
    adj: &[VertexSet],
    labels: Option<&[L]>,
) -> Vec<Vec<usize>> {
    let colors = refine_colors(adj, &initial_colors(adj, labels));
    let mut out = Vec::new();
    search_automorphisms(adj, &colors, &mut out);
    out.sort();
    out
}

/// The full automorphism group as explicit permutations (index -> index),
/// identity first, the rest in lexicographic order. When labels are given
/// they must match the graph's vertex order, and only label-preserving
/// permutations are returned.
pub fn automorphisms<L: Ord>(
    g: &SimplicialGraph,
    labels: Option<&[L]>,
) -> Result<Vec<Vec<usize>>, SymmetryError> {
    if let Some(ls) = labels {
        if ls.len() != g.n() {
            return Err(SymmetryError::LabelCountMismatch(ls.len(), g.n()));
        }
    }
    Ok(automorphisms_adj(g.adjacency(), labels))
}

pub fn is_asymmetric(g: &SimplicialGraph) -> bool {
    automorphisms_adj::<()>(g.adjacency(), None).len() == 1
}

/// Canonical encoding of the isomorphism class: the minimum upper-triangle
/// adjacency bitstring over all color-respecting relabelings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

fn pair_bit(n: usize, i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    let idx = i * n - i * (i + 1) / 2 + (j - i - 1);
    1u64 << idx
}

fn encode(adj: &[VertexSet], perm: &[usize]) -> u64 {
    // perm[v] = position of vertex v in the encoding
    let n = adj.len();
    let mut bits = 0u64;
    for v in 0..n {
        for w in adj[v].iter() {
            if perm[v] < perm[w] {
                bits |= pair_bit(n, perm[v], perm[w]);
            }
        }
    }
    bits
}

pub(crate) fn canonical_form_adj(adj: &[VertexSet]) -> CanonicalForm {
    let n = adj.len();
    let colors = refine_colors(adj, &initial_colors::<()>(adj, None));
    // vertices grouped by color; each color class owns a contiguous
    // position block, which is invariant data
    let mut by_color: Vec<Vec<usize>> = Vec::new();
    let ncolors = colors.iter().max().map_or(0, |&c| c + 1);
    by_color.resize(ncolors, Vec::new());
    for v in 0..n {
        by_color[colors[v]].push(v);
    }
    let mut base = Vec::new(); // first position of each color block
    let mut pos = 0;
    for cell in &by_color {
        base.push(pos);
        pos += cell.len();
    }

    let mut best = u64::MAX;
    let mut perm = vec![0usize; n];

    // assign positions within each color block in every order, take the
    // minimum encoding
    fn rec(
        adj: &[VertexSet],
        by_color: &[Vec<usize>],
        base: &[usize],
        cell: usize,
        perm: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if cell == by_color.len() {
            let bits = encode(adj, perm);
            if bits < *best {
                *best = bits;
            }
            return;
        }
        let members = &by_color[cell];
        let mut taken = vec![false; members.len()];
        assign(adj, by_color, base, cell, 0, &mut taken, perm, best);

        fn assign(
            adj: &[VertexSet],
            by_color: &[Vec<usize>],
            base: &[usize],
            cell: usize,
            slot: usize,
            taken: &mut [bool],
            perm: &mut Vec<usize>,
            best: &mut u64,
        ) {
            let members = &by_color[cell];
            if slot == members.len() {
                rec(adj, by_color, base, cell + 1, perm, best);
                return;
            }
            for (k, &v) in members.iter().enumerate() {
                if taken[k] {
                    continue;
                }
                taken[k] = true;
                perm[v] = base[cell] + slot;
                assign(adj, by_color, base, cell, slot + 1, taken, perm, best);
                taken[k] = false;
            }
        }
    }

    rec(adj, &by_color, &base, 0, &mut perm, &mut best);
    CanonicalForm { n, bits: best }
}

pub fn canonical_form(
    g: &SimplicialGraph,
    bound: usize,
) -> Result<CanonicalForm, SymmetryError> {
    if g.n() > bound {
        return Err(SymmetryError::CanonicalBoundExceeded(g.n(), bound));
    }
    Ok(canonical_form_adj(g.adjacency()))
}

/// Census of all graphs on `n` vertices up to isomorphism.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub total_classes: usize,
    pub asymmetric_classes: usize,
    pub asymmetric_with_separating_star: usize,
    /// One representative per asymmetric class, sorted by canonical form.
    pub representatives: Vec<SimplicialGraph>,
}

/// Enumerates all 2^(n(n-1)/2) labeled graphs and groups them by
/// canonical form.
pub fn census(n: usize) -> Result<CensusReport, SymmetryError> {
    if n < 1 || n > CENSUS_MAX {
        return Err(SymmetryError::CensusOutOfRange(n));
    }
    let npairs = n * (n - 1) / 2;
    let mut classes: HashMap<u64, u64> = HashMap::new(); // canon bits -> rep mask
    for mask in 0u64..1u64 << npairs {
        let adj = adjacency_from_mask(n, mask);
        let canon = canonical_form_adj(&adj);
        classes.entry(canon.bits).or_insert(mask);
    }
    let total_classes = classes.len();
    let mut asym: Vec<(u64, SimplicialGraph)> = Vec::new();
    let mut with_sep = 0;
    for (&canon, &mask) in &classes {
        let g = SimplicialGraph::from_adjacency(adjacency_from_mask(n, mask));
        if is_asymmetric(&g) {
            if g.has_separating_star().is_some() {
                with_sep += 1;
            }
            asym.push((canon, g));
        }
    }
    asym.sort_by_key(|(c, _)| *c);
    Ok(CensusReport {
        n,
        total_classes,
        asymmetric_classes: asym.len(),
        asymmetric_with_separating_star: with_sep,
        representatives: asym.into_iter().map(|(_, g)| g).collect(),
    })
}

fn adjacency_from_mask(n: usize, mask: u64) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    adj
}
