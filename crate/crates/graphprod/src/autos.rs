//! The automorphism families of graph products of cyclic groups: partial
//! conjugations, factor automorphisms, dominated and commutator
//! transvections, graph automorphisms and inner automorphisms — all as
//! generator maps, with homomorphism validation, exact IA membership via
//! the abelianization, and bounded conjugator search.

use thiserror::Error;

use crate::graph::VertexSet;
use crate::words::{
    ab_vector, concat, enumerate_ball, invert, multiply, normalize, Presentation,
    Syllable, Word, WordError,
};

/// Cap on exponent magnitudes accepted by [`apply`].
pub const MAX_APPLY_EXPONENT: i64 = 1 << 16;
/// Default search radius for [`find_conjugator`].
pub const DEFAULT_CONJUGATOR_RADIUS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutosError {
    #[error("`{0}` is not a connected component of the complement of st(`{1}`)")]
    NotAComponent(String, String),
    #[error("exponent {0} is illegal for generator `{1}` of order {2}")]
    IllegalExponent(i64, String, u64),
    #[error("multiplier {0} is not a unit mod {1}")]
    NotAUnit(i64, u64),
    #[error("multiplier {0} is not a unit of the infinite cyclic group")]
    NotAnInfiniteUnit(i64),
    #[error("st(`{0}`) is not contained in st(`{1}`)")]
    DominationFails(String, String),
    #[error("vertices `{0}`, `{1}`, `{2}` are not pairwise distinct")]
    NotDistinct(String, String, String),
    #[error("generator `{0}` is not infinite cyclic")]
    NotInfiniteCyclic(String),
    #[error("vertices `{0}` and `{1}` are adjacent")]
    Adjacent(String, String),
    #[error("lk(`{0}`) is not contained in st(`{1}`)")]
    LinkNotInStar(String, String),
    #[error("permutation does not preserve adjacency at (`{0}`, `{1}`)")]
    NotAdjacencyPreserving(String, String),
    #[error("permutation does not preserve generator orders at `{0}`")]
    NotOrderPreserving(String),
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("map is not a homomorphism: {0}")]
    InvalidHomomorphism(RelationViolation),
    #[error("exponent {0} exceeds the bound {MAX_APPLY_EXPONENT}")]
    ExponentTooLarge(i64),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which defining relation a candidate map breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationViolation {
    /// f(v)^order != 1
    Torsion { vertex: usize },
    /// [f(u), f(v)] != 1 for an edge {u, v}
    Commutation { u: usize, v: usize },
}

impl std::fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationViolation::Torsion { vertex } => {
                write!(f, "torsion relation fails at generator #{vertex}")
            }
            RelationViolation::Commutation { u, v } => {
                write!(f, "commutation relation fails on edge ({u}, {v})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    PartialConjugation,
    Factor,
    DominatedTransvection,
    CommutatorTransvection,
    Graph,
    Inner,
    Composite,
    Custom,
}

impl MapKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MapKind::PartialConjugation => "partial_conjugation",
            MapKind::Factor => "factor",
            MapKind::DominatedTransvection => "dominated_transvection",
            MapKind::CommutatorTransvection => "commutator_transvection",
            MapKind::Graph => "graph",
            MapKind::Inner => "inner",
            MapKind::Composite => "composite",
            MapKind::Custom => "custom",
        }
    }
}

/// An endomorphism candidate given by normalized images of the vertex
/// generators. Equality is generator-by-generator on the images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub images: Vec<Word>,
    pub kind: MapKind,
    /// Human-readable construction data.
    pub params: String,
}

impl GeneratorMap {
    pub fn identity(p: &Presentation) -> GeneratorMap {
        GeneratorMap {
            images: (0..p.n()).map(Word::generator).collect(),
            kind: MapKind::Custom,
            params: "identity".into(),
        }
    }

    pub fn image(&self, v: usize) -> &Word {
        &self.images[v]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_exponent(p: &Presentation, v: usize, exponent: i64) -> Result<(), AutosError> {
    let o = p.order(v);
    let bad = exponent == 0 || (o != 0 && exponent.rem_euclid(o as i64) == 0);
    if bad {
        return Err(AutosError::IllegalExponent(
            exponent,
            p.graph().name(v).to_string(),
            o,
        ));
    }
    Ok(())
}

/// Partial conjugation: conjugate the generators of one component `c` of
/// the complement of `st(v)` by `v^exponent`, fix everything else.
pub fn make_partial_conjugation(
    p: &Presentation,
    v: usize,
    exponent: i64,
    c: VertexSet,
) -> Result<GeneratorMap, AutosError> {
    check_exponent(p, v, exponent)?;
    let g = p.graph();
    let rest = g.vertex_set().minus(g.star(v));
    if !g.induced_components(rest).contains(&c) {
        return Err(AutosError::NotAComponent(
            format!("{:?}", g.set_names(c)),
            g.name(v).to_string(),
        ));
    }
    let x = Word(vec![Syllable { vertex: v, exponent }]);
    let x_inv = invert(p, &x)?;
    let mut images = Vec::with_capacity(p.n());
    for w in 0..p.n() {
        if c.contains(w) {
            let conj = concat(&concat(&x, &Word::generator(w)), &x_inv);
            images.push(normalize(p, &conj)?);
        } else {
            images.push(Word::generator(w));
        }
    }
    Ok(GeneratorMap {
        images,
        kind: MapKind::PartialConjugation,
        params: format!(
            "v={} exponent={} component={:?}",
            g.name(v),
            exponent,
            g.set_names(c)
        ),
    })
}

/// Factor automorphism of a cyclic vertex group: `v -> v^multiplier` for a
/// unit multiplier, everything else fixed.
pub fn make_factor_automorphism(
    p: &Presentation,
    v: usize,
    multiplier: i64,
) -> Result<GeneratorMap, AutosError> {
    let o = p.order(v);
    if o == 0 {
        if multiplier != 1 && multiplier != -1 {
            return Err(AutosError::NotAnInfiniteUnit(multiplier));
        }
    } else {
        let m = multiplier.rem_euclid(o as i64) as u64;
        if gcd(m, o) != 1 {
            return Err(AutosError::NotAUnit(multiplier, o));
        }
    }
    let mut images: Vec<Word> = (0..p.n()).map(Word::generator).collect();
    images[v] = normalize(p, &Word(vec![Syllable { vertex: v, exponent: multiplier }]))?;
    Ok(GeneratorMap {
        images,
        kind: MapKind::Factor,
        params: format!("v={} multiplier={}", p.graph().name(v), multiplier),
    })
}

/// Dominated transvection `u -> u v`, available when `st(u) ⊆ st(v)`.
pub fn make_dominated_transvection(
    p: &Presentation,
    u: usize,
    v: usize,
) -> Result<GeneratorMap, AutosError> {
    let g = p.graph();
    if u == v || !g.star(u).is_subset_of(g.star(v)) {
        return Err(AutosError::DominationFails(
            g.name(u).to_string(),
            g.name(v).to_string(),
        ));
    }
    let mut images: Vec<Word> = (0..p.n()).map(Word::generator).collect();
    images[u] = normalize(p, &concat(&Word::generator(u), &Word::generator(v)))?;
    Ok(GeneratorMap {
        images,
        kind: MapKind::DominatedTransvection,
        params: format!("u={} v={}", g.name(u), g.name(v)),
    })
}

/// Commutator transvection `u -> u [v, w]` for infinite-cyclic `u` with
/// non-adjacent `v, w` and `lk(u) ⊆ st(v) ∩ st(w)`.
pub fn make_commutator_transvection(
    p: &Presentation,
    u: usize,
    v: usize,
    w: usize,
) -> Result<GeneratorMap, AutosError> {
    let g = p.graph();
    let name = |x: usize| g.name(x).to_string();
    if u == v || u == w || v == w {
        return Err(AutosError::NotDistinct(name(u), name(v), name(w)));
    }
    if p.order(u) != 0 {
        return Err(AutosError::NotInfiniteCyclic(name(u)));
    }
    if g.is_edge(v, w) {
        return Err(AutosError::Adjacent(name(v), name(w)));
    }
    if !g.link(u).is_subset_of(g.star(v)) {
        return Err(AutosError::LinkNotInStar(name(u), name(v)));
    }
    if !g.link(u).is_subset_of(g.star(w)) {
        return Err(AutosError::LinkNotInStar(name(u), name(w)));
    }
    let commutator = concat(
        &concat(&Word::generator(v), &Word::generator(w)),
        &concat(
            &invert(p, &Word::generator(v))?,
            &invert(p, &Word::generator(w))?,
        ),
    );
    let mut images: Vec<Word> = (0..p.n()).map(Word::generator).collect();
    images[u] = normalize(p, &concat(&Word::generator(u), &commutator))?;
    Ok(GeneratorMap {
        images,
        kind: MapKind::CommutatorTransvection,
        params: format!("u={} v={} w={}", name(u), name(v), name(w)),
    })
}

/// Graph automorphism induced by a label- and adjacency-preserving vertex
/// permutation (`perm[v]` is the image of `v`).
pub fn make_graph_automorphism(
    p: &Presentation,
    perm: &[usize],
) -> Result<GeneratorMap, AutosError> {
    let g = p.graph();
    let n = p.n();
    if perm.len() != n {
        return Err(AutosError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &w in perm {
        if w >= n || seen[w] {
            return Err(AutosError::NotAPermutation);
        }
        seen[w] = true;
    }
    for v in 0..n {
        if p.order(v) != p.order(perm[v]) {
            return Err(AutosError::NotOrderPreserving(g.name(v).to_string()));
        }
        for w in 0..n {
            if v != w && g.is_edge(v, w) != g.is_edge(perm[v], perm[w]) {
                return Err(AutosError::NotAdjacencyPreserving(
                    g.name(v).to_string(),
                    g.name(w).to_string(),
                ));
            }
        }
    }
    let images = perm.iter().map(|&w| Word::generator(w)).collect();
    let shown: Vec<String> = (0..n)
        .map(|v| format!("{}->{}", g.name(v), g.name(perm[v])))
        .collect();
    Ok(GeneratorMap {
        images,
        kind: MapKind::Graph,
        params: shown.join(","),
    })
}

/// Inner automorphism: conjugation by `a`.
pub fn inner(p: &Presentation, a: &Word) -> Result<GeneratorMap, AutosError> {
    let a_inv = invert(p, a)?;
    let mut images = Vec::with_capacity(p.n());
    for v in 0..p.n() {
        let conj = concat(&concat(a, &Word::generator(v)), &a_inv);
        images.push(normalize(p, &conj)?);
    }
    Ok(GeneratorMap {
        images,
        kind: MapKind::Inner,
        params: format!("conjugator={:?}", a),
    })
}

/// Applies a generator map to a word: syllable-wise substitution with
/// exponents distributed over the images.
pub fn apply(p: &Presentation, f: &GeneratorMap, w: &Word) -> Result<Word, AutosError> {
    let mut acc = Word::identity();
    for s in w.syllables() {
        if s.exponent.abs() > MAX_APPLY_EXPONENT {
            return Err(AutosError::ExponentTooLarge(s.exponent));
        }
        if s.vertex >= p.n() {
            return Err(AutosError::Word(WordError::GeneratorOutOfRange(s.vertex)));
        }
        let base = if s.exponent >= 0 {
            f.images[s.vertex].clone()
        } else {
            invert(p, &f.images[s.vertex])?
        };
        for _ in 0..s.exponent.unsigned_abs() {
            acc = multiply(p, &acc, &base)?;
        }
    }
    Ok(acc)
}

/// Composition `f ∘ g` (apply `g` first).
pub fn compose(
    p: &Presentation,
    f: &GeneratorMap,
    g: &GeneratorMap,
) -> Result<GeneratorMap, AutosError> {
    let mut images = Vec::with_capacity(p.n());
    for v in 0..p.n() {
        images.push(apply(p, f, &g.images[v])?);
    }
    Ok(GeneratorMap {
        images,
        kind: MapKind::Composite,
        params: format!("({}) o ({})", f.params, g.params),
    })
}

/// Checks the defining relations: torsion of each finite generator and
/// commutation along each edge. `Ok(())` means the map extends to an
/// endomorphism.
pub fn validate_homomorphism(
    p: &Presentation,
    f: &GeneratorMap,
) -> Result<Result<(), RelationViolation>, AutosError> {
    for v in 0..p.n() {
        let o = p.order(v);
        if o == 0 {
            continue;
        }
        let mut power = Word::identity();
        for _ in 0..o {
            power = multiply(p, &power, &f.images[v])?;
        }
        if !power.is_identity() {
            return Ok(Err(RelationViolation::Torsion { vertex: v }));
        }
    }
    for (u, v) in p.graph().edges() {
        let uv = multiply(p, &f.images[u], &f.images[v])?;
        let vu = multiply(p, &f.images[v], &f.images[u])?;
        if uv != vu {
            return Ok(Err(RelationViolation::Commutation { u, v }));
        }
    }
    Ok(Ok(()))
}

/// IA verdict: does the map act as the identity on the abelianization?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IaVerdict {
    pub in_ia: bool,
    /// First generator whose abelianized image differs, if any.
    pub witness: Option<usize>,
}

pub fn is_ia(p: &Presentation, f: &GeneratorMap) -> Result<IaVerdict, AutosError> {
    if let Err(violation) = validate_homomorphism(p, f)? {
        return Err(AutosError::InvalidHomomorphism(violation));
    }
    for v in 0..p.n() {
        let vec = ab_vector(p, &f.images[v])?;
        let unit = ab_vector(p, &Word::generator(v))?;
        if vec != unit {
            return Ok(IaVerdict {
                in_ia: false,
                witness: Some(v),
            });
        }
    }
    Ok(IaVerdict {
        in_ia: true,
        witness: None,
    })
}

/// Outcome of a bounded conjugator search. `NoneUpTo` is explicitly not a
/// proof of non-innerness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugatorSearch {
    Found(Word),
    NoneUpTo(usize),
}

/// Searches the ball of the given radius, in shortlex order, for a
/// conjugator realizing `f`.
pub fn find_conjugator(
    p: &Presentation,
    f: &GeneratorMap,
    max_radius: usize,
) -> Result<ConjugatorSearch, AutosError> {
    if let Err(violation) = validate_homomorphism(p, f)? {
        return Err(AutosError::InvalidHomomorphism(violation));
    }
    let targets: Vec<Word> = f
        .images
        .iter()
        .map(|w| normalize(p, w))
        .collect::<Result<_, _>>()?;
    for a in enumerate_ball(p, max_radius)? {
        let a_inv = invert(p, &a)?;
        let mut all = true;
        for v in 0..p.n() {
            let conj = normalize(p, &concat(&concat(&a, &Word::generator(v)), &a_inv))?;
            if conj != targets[v] {
                all = false;
                break;
            }
        }
        if all {
            return Ok(ConjugatorSearch::Found(a));
        }
    }
    Ok(ConjugatorSearch::NoneUpTo(max_radius))
}
