//! Finitely generated abelian group labels, their primary (prime-power
//! cyclic) decomposition, and the clique expansion of a labeled graph
//! into one with cyclic prime-power vertex groups.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SimplicialGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("torsion order {0} is below 2")]
    TorsionTooSmall(u64),
    #[error("torsion order {0} exceeds the supported bound 2^31")]
    TorsionTooLarge(u64),
    #[error("trivial vertex group: free rank 0 with no torsion")]
    TrivialGroup,
    #[error("vertex `{0}` carries a non-abelian label; expansion needs all labels abelian")]
    NonAbelianLabel(String),
    #[error("expanded vertex id `{0}` collides with another vertex id")]
    ExpandedIdCollision(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Known {
    Yes,
    No,
    Unknown,
}

impl Default for Known {
    fn default() -> Self {
        Known::Unknown
    }
}

/// A vertex group: a finitely generated abelian group given by free rank
/// and torsion orders, or an opaque non-abelian marker.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupLabel {
    FgAbelian {
        free_rank: u32,
        #[serde(default)]
        torsion: Vec<u64>,
    },
    NonAbelian {
        non_abelian: String,
        #[serde(default)]
        known_semicomplete: Known,
    },
}

impl GroupLabel {
    pub fn free(rank: u32) -> GroupLabel {
        GroupLabel::FgAbelian {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> GroupLabel {
        GroupLabel::FgAbelian {
            free_rank: 0,
            torsion: vec![order],
        }
    }

    pub fn z2() -> GroupLabel {
        GroupLabel::cyclic(2)
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupLabel::FgAbelian { .. })
    }

    pub fn validate(&self) -> Result<(), AbelianError> {
        match self {
            GroupLabel::FgAbelian { free_rank, torsion } => {
                for &t in torsion {
                    if t < 2 {
                        return Err(AbelianError::TorsionTooSmall(t));
                    }
                    if t >= 1 << 31 {
                        return Err(AbelianError::TorsionTooLarge(t));
                    }
                }
                if *free_rank == 0 && torsion.is_empty() {
                    return Err(AbelianError::TrivialGroup);
                }
                Ok(())
            }
            GroupLabel::NonAbelian { .. } => Ok(()),
        }
    }

    pub fn display(&self) -> String {
        match self {
            GroupLabel::FgAbelian { free_rank, torsion } => {
                let mut parts: Vec<String> = Vec::new();
                if *free_rank == 1 {
                    parts.push("Z".into());
                } else if *free_rank > 1 {
                    parts.push(format!("Z^{free_rank}"));
                }
                for t in torsion {
                    parts.push(format!("Z/{t}"));
                }
                parts.join(" x ")
            }
            GroupLabel::NonAbelian { non_abelian, .. } => non_abelian.clone(),
        }
    }
}

/// A cyclic direct factor: order 0 means infinite cyclic, any other value
/// is a prime power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicFactor(pub u64);

impl CyclicFactor {
    pub fn is_infinite(self) -> bool {
        self.0 == 0
    }
}

fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1u64;
            while n % p == 0 {
                q *= p;
                n /= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primary decomposition: free factors first, then the prime-power cyclic
/// factors of every torsion order, ascending by order.
pub fn primary_decomposition(
    free_rank: u32,
    torsion: &[u64],
) -> Result<Vec<CyclicFactor>, AbelianError> {
    GroupLabel::FgAbelian {
        free_rank,
        torsion: torsion.to_vec(),
    }
    .validate()?;
    let mut out: Vec<CyclicFactor> =
        (0..free_rank).map(|_| CyclicFactor(0)).collect();
    let mut finite: Vec<u64> = torsion
        .iter()
        .flat_map(|&t| prime_power_factors(t))
        .collect();
    finite.sort_unstable();
    out.extend(finite.into_iter().map(CyclicFactor));
    Ok(out)
}

pub fn primary_decomposition_of(label: &GroupLabel) -> Result<Vec<CyclicFactor>, AbelianError> {
    match label {
        GroupLabel::FgAbelian { free_rank, torsion } => primary_decomposition(*free_rank, torsion),
        GroupLabel::NonAbelian { non_abelian, .. } => {
            Err(AbelianError::NonAbelianLabel(non_abelian.clone()))
        }
    }
}

/// The clique expansion of a labeled graph: every vertex is replaced by a
/// clique of cyclic prime-power (or infinite) generators, and original
/// edges become complete joins between the cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedGraph {
    pub graph: SimplicialGraph,
    /// Cyclic order per expanded vertex (0 = infinite), in graph order.
    pub orders: Vec<u64>,
    /// (original vertex index, factor index) per expanded vertex.
    pub origin: Vec<(usize, usize)>,
}

impl ExpandedGraph {
    /// Per-expanded-vertex cyclic orders; this indexes the exponent
    /// vectors of the abelianization.
    pub fn abelianization_signature(&self) -> &[u64] {
        &self.orders
    }
}

/// Expands `g` with one label per vertex (in the graph's vertex order).
/// A vertex with a single cyclic factor keeps its id; otherwise the
/// factors are named `id.0`, `id.1`, ... in decomposition order.
pub fn expand_graph(
    g: &SimplicialGraph,
    labels: &[GroupLabel],
) -> Result<ExpandedGraph, AbelianError> {
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    let mut factors_per_vertex: Vec<Vec<CyclicFactor>> = Vec::with_capacity(g.n());
    for (v, label) in labels.iter().enumerate() {
        match label {
            GroupLabel::FgAbelian { free_rank, torsion } => {
                let _ = v;
                factors_per_vertex.push(primary_decomposition(*free_rank, torsion)?);
            }
            GroupLabel::NonAbelian { .. } => {
                return Err(AbelianError::NonAbelianLabel(g.name(v).to_string()));
            }
        }
    }

    let mut names: Vec<String> = Vec::new();
    let mut meta: Vec<(String, u64, usize, usize)> = Vec::new();
    for (v, factors) in factors_per_vertex.iter().enumerate() {
        for (k, f) in factors.iter().enumerate() {
            let name = if factors.len() == 1 {
                g.name(v).to_string()
            } else {
                format!("{}.{}", g.name(v), k)
            };
            names.push(name.clone());
            meta.push((name, f.0, v, k));
        }
    }
    {
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            let mut seen = std::collections::HashSet::new();
            for n in &names {
                if !seen.insert(n) {
                    return Err(AbelianError::ExpandedIdCollision(n.clone()));
                }
            }
        }
    }

    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 0..meta.len() {
        for j in i + 1..meta.len() {
            let (ref ni, _, vi, _) = meta[i];
            let (ref nj, _, vj, _) = meta[j];
            if vi == vj || g.is_edge(vi, vj) {
                edges.push((ni.clone(), nj.clone()));
            }
        }
    }

    let graph = SimplicialGraph::new(names, &edges)?;
    let mut orders = vec![0u64; graph.n()];
    let mut origin = vec![(0usize, 0usize); graph.n()];
    for (name, order, v, k) in meta {
        let idx = graph.index(&name).expect("expanded vertex present");
        orders[idx] = order;
        origin[idx] = (v, k);
    }
    Ok(ExpandedGraph {
        graph,
        orders,
        origin,
    })
}
