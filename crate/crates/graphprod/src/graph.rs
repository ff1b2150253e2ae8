//! Finite simplicial graphs and the combinatorial predicates on them:
//! links, stars, induced components, separating stars, SILs, star
//! containments and the link condition.
//!
//! Graphs are immutable after construction. Vertices carry string ids and
//! are totally ordered lexicographically; all search operations return the
//! least witness under that order. Adjacency is stored in 64-bit masks, so
//! graphs are limited to [`MAX_VERTICES`] vertices.

use std::fmt;
use thiserror::Error;

/// Hard cap on vertex count (adjacency lives in a `u64` mask).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("too many vertices: {0} (limit {MAX_VERTICES})")]
    TooManyVertices(usize),
}

/// A subset of the vertices of a host graph, as a bitmask over vertex
/// indices. Indices are an implementation detail of one host graph; the
/// host maps them back to vertex ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least vertex index, if any.
    pub fn least(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A SIL witness: pairwise non-adjacent vertices `x < y` and `z` whose
/// component in the complement of `lk(x) ∩ lk(y)` contains neither `x`
/// nor `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SilWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// A finite simplicial graph: unique string vertex ids (lexicographically
/// ordered), undirected edges, no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl SimplicialGraph {
    pub fn new(
        vertices: Vec<String>,
        edges: &[(String, String)],
    ) -> Result<SimplicialGraph, GraphError> {
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut names = vertices;
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].clone()));
            }
        }
        let mut g = SimplicialGraph {
            adj: vec![VertexSet::EMPTY; names.len()],
            names,
        };
        for (a, b) in edges {
            let i = g.index(a).ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let j = g.index(b).ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            if i == j {
                return Err(GraphError::SelfLoop(a.clone()));
            }
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// Graph on `n` anonymous vertices given by index pairs. Generated ids
    /// are zero-padded so lexicographic and numeric order agree.
    pub fn unlabeled(n: usize, edges: &[(usize, usize)]) -> SimplicialGraph {
        let names = (0..n).map(|i| format!("v{i:02}")).collect();
        let mut g = SimplicialGraph {
            names,
            adj: vec![VertexSet::EMPTY; n],
        };
        for &(i, j) in edges {
            assert!(i < n && j < n && i != j);
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        g
    }

    /// Graph from a precomputed adjacency table (masks must be symmetric
    /// and loop-free); used by the census hot loop.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> SimplicialGraph {
        let names = (0..adj.len()).map(|i| format!("v{i:02}")).collect();
        SimplicialGraph { names, adj }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Sorted index pairs (u < v).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn link(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn star(&self, v: usize) -> VertexSet {
        self.adj[v].union(VertexSet::singleton(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Connected components of the subgraph induced on `s`, ordered by
    /// least vertex index. The empty set yields no components.
    pub fn induced_components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s;
        let mut out = Vec::new();
        while let Some(start) = remaining.least() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersect(s).minus(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.minus(comp);
            out.push(comp);
        }
        out
    }

    /// Components of `s` given by vertex ids; checks membership.
    pub fn induced_components_by_name(
        &self,
        ids: &[String],
    ) -> Result<Vec<VertexSet>, GraphError> {
        let mut s = VertexSet::EMPTY;
        for id in ids {
            let v = self
                .index(id)
                .ok_or_else(|| GraphError::UnknownVertex(id.clone()))?;
            s.insert(v);
        }
        Ok(self.induced_components(s))
    }

    pub fn is_connected(&self) -> bool {
        self.induced_components(self.vertex_set()).len() <= 1
    }

    /// Least vertex `v` whose star's removal leaves a disconnected graph.
    /// An empty or connected complement does not count.
    pub fn has_separating_star(&self) -> Option<usize> {
        let full = self.vertex_set();
        (0..self.n()).find(|&v| {
            self.induced_components(full.minus(self.star(v))).len() >= 2
        })
    }

    /// Lexicographically least SIL witness `(x, y | z)`, if any.
    pub fn has_sil(&self) -> Option<SilWitness> {
        let full = self.vertex_set();
        for x in 0..self.n() {
            for y in x + 1..self.n() {
                if self.is_edge(x, y) {
                    continue;
                }
                let cut = self.link(x).intersect(self.link(y));
                let comps = self.induced_components(full.minus(cut));
                for z in 0..self.n() {
                    if z == x || z == y || self.is_edge(x, z) || self.is_edge(y, z) {
                        continue;
                    }
                    let comp = comps
                        .iter()
                        .find(|c| c.contains(z))
                        .expect("z is outside lk(x) ∩ lk(y)");
                    if !comp.contains(x) && !comp.contains(y) {
                        return Some(SilWitness { x, y, z });
                    }
                }
            }
        }
        None
    }

    /// All ordered pairs `(v, w)`, `v != w`, with `st(v) ⊆ st(w)`,
    /// lexicographically sorted.
    pub fn star_containments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n() {
            for w in 0..self.n() {
                if v != w && self.star(v).is_subset_of(self.star(w)) {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// First ordered pair `(v, w)`, `v != w`, with `lk(v) ⊆ st(w)`; `None`
    /// means the link condition holds.
    pub fn link_condition_violation(&self) -> Option<(usize, usize)> {
        for v in 0..self.n() {
            for w in 0..self.n() {
                if v != w && self.link(v).is_subset_of(self.star(w)) {
                    return Some((v, w));
                }
            }
        }
        None
    }

    /// The central clique Δ: vertices whose star is the whole vertex set.
    pub fn full_star_vertices(&self) -> VertexSet {
        let full = self.vertex_set();
        VertexSet::from_iter((0..self.n()).filter(|&v| self.star(v) == full))
    }

    /// Subgraph induced on `s`, with vertex ids carried over.
    pub fn induced_subgraph(&self, s: VertexSet) -> SimplicialGraph {
        let keep: Vec<usize> = s.iter().collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i < j && self.is_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        // keep is sorted, so names stay sorted and indices are stable
        let mut g = SimplicialGraph {
            names,
            adj: vec![VertexSet::EMPTY; keep.len()],
        };
        for (i, j) in edges {
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        g
    }

    pub fn set_names(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_c() -> SimplicialGraph {
        // Γ1: c is the center of a 3-star with leaves x, y, z
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

    fn c5() -> SimplicialGraph {
        SimplicialGraph::unlabeled(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimplicialGraph::new(vec!["a".into(), "a".into()], &[]),
            Err(GraphError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            SimplicialGraph::new(vec!["a".into()], &[("a".into(), "a".into())]),
            Err(GraphError::SelfLoop("a".into()))
        );
        assert_eq!(
            SimplicialGraph::new(vec!["a".into()], &[("a".into(), "b".into())]),
            Err(GraphError::UnknownVertex("b".into()))
        );
    }

    #[test]
    fn link_star_degree() {
        let g = star_c();
        let c = g.index("c").unwrap();
        for v in 0..g.n() {
            assert!(!g.link(v).contains(v));
            assert_eq!(g.star(v), g.link(v).union(VertexSet::singleton(v)));
            assert_eq!(g.star(v).len(), g.degree(v) + 1);
        }
        assert_eq!(g.star(c), g.vertex_set());
    }

    #[test]
    fn components_of_star_leaves() {
        let g = star_c();
        let s = VertexSet::from_iter(["x", "y", "z"].iter().map(|n| g.index(n).unwrap()));
        let comps = g.induced_components(s);
        assert_eq!(comps.len(), 3);
        for c in &comps {
            assert_eq!(c.len(), 1);
        }
    }

    #[test]
    fn components_connected_and_empty() {
        let g = c5();
        assert_eq!(g.induced_components(g.vertex_set()), vec![g.vertex_set()]);
        assert_eq!(g.induced_components(VertexSet::EMPTY), Vec::<VertexSet>::new());
        let edge = VertexSet::from_iter([2, 3]);
        assert_eq!(g.induced_components(edge), vec![edge]);
    }

    #[test]
    fn components_unknown_vertex() {
        let g = c5();
        assert!(matches!(
            g.induced_components_by_name(&["nope".into()]),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn separating_star_examples() {
        let g = star_c();
        assert_eq!(g.has_separating_star(), Some(g.index("x").unwrap()));
        assert_eq!(c5().has_separating_star(), None);
        // cliques never have one: the complement of every star is empty
        for n in 1..=5 {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            assert_eq!(SimplicialGraph::unlabeled(n, &edges).has_separating_star(), None);
        }
    }

    #[test]
    fn three_components_force_separating_star() {
        let g = SimplicialGraph::unlabeled(3, &[]);
        assert!(g.has_separating_star().is_some());
    }

    #[test]
    fn sil_examples() {
        let g = star_c();
        let w = g.has_sil().unwrap();
        assert_eq!(
            (g.name(w.x), g.name(w.y), g.name(w.z)),
            ("x", "y", "z")
        );
        // witness re-validates
        assert!(!g.is_edge(w.x, w.y) && !g.is_edge(w.x, w.z) && !g.is_edge(w.y, w.z));

        let k3 = SimplicialGraph::unlabeled(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(k3.has_sil(), None);
    }

    #[test]
    fn star_containment_examples() {
        let g = star_c();
        let x = g.index("x").unwrap();
        let c = g.index("c").unwrap();
        assert!(g.star_containments().contains(&(x, c)));

        let iso2 = SimplicialGraph::unlabeled(2, &[]);
        assert!(iso2.star_containments().is_empty());
    }

    #[test]
    fn link_condition_examples() {
        let g = star_c();
        let x = g.index("x").unwrap();
        let c = g.index("c").unwrap();
        // lk(x) = {c} ⊆ st(c), and (x,c) is the least ordered violation
        assert_eq!(g.link_condition_violation(), Some((x, c)));
        assert_eq!(c5().link_condition_violation(), None);
        assert_eq!(SimplicialGraph::unlabeled(1, &[]).link_condition_violation(), None);
    }

    #[test]
    fn full_star_examples() {
        let g = star_c();
        assert_eq!(g.set_names(g.full_star_vertices()), vec!["c"]);
        assert_eq!(c5().full_star_vertices(), VertexSet::EMPTY);
        let k4 = SimplicialGraph::unlabeled(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.full_star_vertices(), k4.vertex_set());
    }

    #[test]
    fn component_partition_invariants() {
        let g = SimplicialGraph::unlabeled(
            6,
            &[(0, 1), (1, 2), (3, 4)],
        );
        let s = VertexSet::from_iter([0, 1, 2, 3, 4, 5]);
        let comps = g.induced_components(s);
        let mut union = VertexSet::EMPTY;
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                assert!(a.intersect(*b).is_empty());
            }
            union = union.union(*a);
            // internally connected
            assert_eq!(g.induced_components(*a).len(), 1);
        }
        assert_eq!(union, s);
    }
}
