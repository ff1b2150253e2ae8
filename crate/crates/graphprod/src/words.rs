//! Elements of graph products of cyclic groups as syllable words with a
//! canonical normal form.
//!
//! A reduced word is unique only up to shuffles of commuting syllables;
//! we pick the shortlex-least representative. Normalization first merges
//! syllables of the same vertex separated only by syllables commuting
//! with it (reducing exponents mod the vertex order), then orders the
//! reduced word by repeatedly extracting the least front-movable
//! syllable. Extraction, rather than local bubble swaps, is what makes
//! the result independent of the input shuffle: local swap rules admit
//! distinct fixed points on words like c·a·b over a path a—b—c.

use std::fmt::Write as _;

use thiserror::Error;

use crate::abelian::ExpandedGraph;
use crate::graph::SimplicialGraph;

/// Hard cap for `enumerate_ball`.
pub const MAX_BALL_RADIUS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("malformed word token `{0}` (expected `vertex` or `vertex^exp`)")]
    MalformedToken(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
    #[error("ball radius {0} exceeds the bound {MAX_BALL_RADIUS}")]
    RadiusTooLarge(usize),
    #[error("order {0} of generator `{1}` is not 0 or a prime power")]
    BadOrder(u64, String),
}

/// A graph product of cyclic groups: one generator per vertex, finite
/// generators of prime-power order, adjacent generators commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    graph: SimplicialGraph,
    orders: Vec<u64>,
}

impl Presentation {
    pub fn new(graph: SimplicialGraph, orders: Vec<u64>) -> Result<Presentation, WordError> {
        assert_eq!(orders.len(), graph.n(), "one order per vertex");
        for (v, &o) in orders.iter().enumerate() {
            if o != 0 && !is_prime_power(o) {
                return Err(WordError::BadOrder(o, graph.name(v).to_string()));
            }
        }
        Ok(Presentation { graph, orders })
    }

    pub fn from_expanded(eg: &ExpandedGraph) -> Presentation {
        Presentation {
            graph: eg.graph.clone(),
            orders: eg.orders.clone(),
        }
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn order(&self, v: usize) -> u64 {
        self.orders[v]
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn commute(&self, u: usize, v: usize) -> bool {
        u == v || self.graph.is_edge(u, v)
    }
}

fn is_prime_power(n: u64) -> bool {
    let mut n = n;
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    true // prime
}

/// One syllable: a generator with a nonzero exponent. For finite order
/// `o` the exponent of a normalized syllable lies in `1..o`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: i64,
}

/// A word over a presentation. Construction via [`Word::from_syllables`]
/// does not normalize; all algebraic operations return normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Syllable>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(v: usize) -> Word {
        Word(vec![Syllable { vertex: v, exponent: 1 }])
    }

    pub fn from_syllables(syllables: Vec<Syllable>) -> Word {
        Word(syllables)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Shortlex key: syllable length first, then per-syllable
    /// (vertex, |exponent|, sign) so `v` precedes `v^-1` precedes `v^2`.
    pub fn shortlex_key(&self) -> (usize, Vec<(usize, u64, bool)>) {
        (
            self.0.len(),
            self.0
                .iter()
                .map(|s| (s.vertex, s.exponent.unsigned_abs(), s.exponent < 0))
                .collect(),
        )
    }

    pub fn display(&self, p: &Presentation) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            if s.exponent == 1 {
                let _ = write!(out, "{}", p.graph.name(s.vertex));
            } else {
                let _ = write!(out, "{}^{}", p.graph.name(s.vertex), s.exponent);
            }
        }
        out
    }
}

/// Parses whitespace-separated `vertex` / `vertex^exp` tokens.
pub fn parse_word(p: &Presentation, text: &str) -> Result<Word, WordError> {
    let mut syllables = Vec::new();
    for token in text.split_whitespace() {
        let (name, exp) = match token.rsplit_once('^') {
            Some((name, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| WordError::MalformedToken(token.to_string()))?;
                (name, exp)
            }
            None => (token, 1),
        };
        if name.is_empty() {
            return Err(WordError::MalformedToken(token.to_string()));
        }
        if exp == 0 {
            return Err(WordError::ZeroExponent(token.to_string()));
        }
        let vertex = p
            .graph
            .index(name)
            .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
        syllables.push(Syllable { vertex, exponent: exp });
    }
    Ok(Word(syllables))
}

fn reduce_exponent(order: u64, e: i64) -> i64 {
    if order == 0 {
        e
    } else {
        e.rem_euclid(order as i64)
    }
}

fn check_range(p: &Presentation, w: &Word) -> Result<(), WordError> {
    for s in &w.0 {
        if s.vertex >= p.n() {
            return Err(WordError::GeneratorOutOfRange(s.vertex));
        }
    }
    Ok(())
}

/// Canonical normal form: reduce, then order shuffles shortlex-least.
pub fn normalize(p: &Presentation, w: &Word) -> Result<Word, WordError> {
    check_range(p, w)?;
    let mut syls: Vec<Syllable> = Vec::with_capacity(w.0.len());
    for s in &w.0 {
        let e = reduce_exponent(p.order(s.vertex), s.exponent);
        if e != 0 {
            syls.push(Syllable { vertex: s.vertex, exponent: e });
        }
    }

    // merge any two same-vertex syllables separated only by syllables
    // commuting with that vertex, to a fixed point
    'merge: loop {
        for i in 0..syls.len() {
            let v = syls[i].vertex;
            for j in i + 1..syls.len() {
                if syls[j].vertex == v {
                    let e = reduce_exponent(p.order(v), syls[i].exponent + syls[j].exponent);
                    syls.remove(j);
                    if e == 0 {
                        syls.remove(i);
                    } else {
                        syls[i].exponent = e;
                    }
                    continue 'merge;
                }
                if !p.commute(v, syls[j].vertex) {
                    break;
                }
            }
        }
        break;
    }

    // shortlex-least shuffle of the reduced word: repeatedly extract the
    // least syllable that can commute to the front
    let mut out = Vec::with_capacity(syls.len());
    while !syls.is_empty() {
        let mut best: Option<usize> = None;
        'pos: for i in 0..syls.len() {
            for k in 0..i {
                if !p.commute(syls[k].vertex, syls[i].vertex) {
                    continue 'pos;
                }
            }
            match best {
                None => best = Some(i),
                Some(b) if syls[i].vertex < syls[b].vertex => best = Some(i),
                _ => {}
            }
        }
        let i = best.expect("front-movable syllable exists");
        out.push(syls.remove(i));
    }
    Ok(Word(out))
}

pub fn concat(a: &Word, b: &Word) -> Word {
    let mut syls = a.0.clone();
    syls.extend_from_slice(&b.0);
    Word(syls)
}

pub fn multiply(p: &Presentation, a: &Word, b: &Word) -> Result<Word, WordError> {
    normalize(p, &concat(a, b))
}

pub fn invert(p: &Presentation, a: &Word) -> Result<Word, WordError> {
    let syls = a
        .0
        .iter()
        .rev()
        .map(|s| Syllable {
            vertex: s.vertex,
            exponent: -s.exponent,
        })
        .collect();
    normalize(p, &Word(syls))
}

pub fn equals(p: &Presentation, a: &Word, b: &Word) -> Result<bool, WordError> {
    Ok(normalize(p, a)? == normalize(p, b)?)
}

/// Exponent sums per generator, reduced mod the generator order (entries
/// of infinite-order generators are plain integers).
pub fn ab_vector(p: &Presentation, w: &Word) -> Result<Vec<i64>, WordError> {
    check_range(p, w)?;
    let mut out = vec![0i64; p.n()];
    for s in &w.0 {
        out[s.vertex] = reduce_exponent(p.order(s.vertex), out[s.vertex] + s.exponent);
    }
    Ok(out)
}

/// All distinct elements whose normal form has at most `radius` syllables,
/// in shortlex order. Exponents of infinite-order generators are windowed
/// to `[-radius, radius]`, which makes the ball finite; this is an
/// under-approximation used for bounded searches only.
pub fn enumerate_ball(p: &Presentation, radius: usize) -> Result<Vec<Word>, WordError> {
    if radius > MAX_BALL_RADIUS {
        return Err(WordError::RadiusTooLarge(radius));
    }
    let mut candidates: Vec<Syllable> = Vec::new();
    for v in 0..p.n() {
        let o = p.order(v);
        if o == 0 {
            for e in 1..=radius as i64 {
                candidates.push(Syllable { vertex: v, exponent: e });
                candidates.push(Syllable { vertex: v, exponent: -e });
            }
        } else {
            for e in 1..o as i64 {
                candidates.push(Syllable { vertex: v, exponent: e });
            }
        }
    }

    let in_window = |w: &Word| {
        w.0.iter()
            .all(|s| p.order(s.vertex) != 0 || s.exponent.unsigned_abs() as usize <= radius)
    };

    let mut seen = std::collections::HashSet::new();
    seen.insert(Word::identity());
    let mut frontier = vec![Word::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &candidates {
                let product = multiply(p, w, &Word(vec![*s]))?;
                if product.len() <= radius && in_window(&product) && seen.insert(product.clone()) {
                    next.push(product);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort_by_key(|w| w.shortlex_key());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimplicialGraph;

    fn presentation(n: usize, edges: &[(usize, usize)], orders: &[u64]) -> Presentation {
        Presentation::new(SimplicialGraph::unlabeled(n, edges), orders.to_vec()).unwrap()
    }

    fn syl(v: usize, e: i64) -> Syllable {
        Syllable { vertex: v, exponent: e }
    }

    #[test]
    fn order_validation() {
        let g = SimplicialGraph::unlabeled(1, &[]);
        assert!(Presentation::new(g.clone(), vec![6]).is_err());
        assert!(Presentation::new(g.clone(), vec![8]).is_ok());
        assert!(Presentation::new(g, vec![0]).is_ok());
    }

    #[test]
    fn normalize_examples() {
        // two non-adjacent order-2 generators: u·u = 1
        let p = presentation(2, &[], &[2, 2]);
        assert_eq!(
            normalize(&p, &Word(vec![syl(0, 1), syl(0, 1)])).unwrap(),
            Word::identity()
        );
        // commuting swap w·u -> u·w
        let p = presentation(2, &[(0, 1)], &[2, 2]);
        assert_eq!(
            normalize(&p, &Word(vec![syl(1, 1), syl(0, 1)])).unwrap(),
            Word(vec![syl(0, 1), syl(1, 1)])
        );
        // infinite order merge u^3·u^-1 = u^2
        let p = presentation(1, &[], &[0]);
        assert_eq!(
            normalize(&p, &Word(vec![syl(0, 3), syl(0, -1)])).unwrap(),
            Word(vec![syl(0, 2)])
        );
    }

    #[test]
    fn normalize_merges_across_commuting_separator() {
        // u and s commute, u has order 2: u·s·u = s
        let p = presentation(2, &[(0, 1)], &[2, 2]);
        assert_eq!(
            normalize(&p, &Word(vec![syl(0, 1), syl(1, 1), syl(0, 1)])).unwrap(),
            Word(vec![syl(1, 1)])
        );
    }

    #[test]
    fn normalize_is_shuffle_canonical_on_path() {
        // path a—b—c: c·a·b, c·b·a and b·c·a are the same element; the
        // shortlex-least shuffle is b·c·a (a commutes only with b)
        let p = presentation(3, &[(0, 1), (1, 2)], &[2, 2, 2]);
        let w1 = Word(vec![syl(2, 1), syl(0, 1), syl(1, 1)]);
        let w2 = Word(vec![syl(2, 1), syl(1, 1), syl(0, 1)]);
        let n1 = normalize(&p, &w1).unwrap();
        let n2 = normalize(&p, &w2).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(n1, Word(vec![syl(1, 1), syl(2, 1), syl(0, 1)]));
    }

    #[test]
    fn normalize_unknown_vertex() {
        let p = presentation(1, &[], &[2]);
        assert!(matches!(
            normalize(&p, &Word(vec![syl(3, 1)])),
            Err(WordError::GeneratorOutOfRange(3))
        ));
    }

    #[test]
    fn multiply_examples() {
        let p = presentation(2, &[], &[2, 2]);
        let u = Word::generator(0);
        let w = Word::generator(1);
        assert_eq!(multiply(&p, &u, &u).unwrap(), Word::identity());
        assert_eq!(
            multiply(&p, &Word::identity(), &w).unwrap(),
            Word(vec![syl(1, 1)])
        );
        // infinite dihedral: (uw)(uw) has length 4
        let uw = multiply(&p, &u, &w).unwrap();
        let sq = multiply(&p, &uw, &uw).unwrap();
        assert_eq!(sq.len(), 4);
    }

    #[test]
    fn invert_examples() {
        let p = presentation(2, &[], &[2, 2]);
        let u = Word::generator(0);
        assert_eq!(invert(&p, &u).unwrap(), u);
        let uw = Word(vec![syl(0, 1), syl(1, 1)]);
        assert_eq!(invert(&p, &uw).unwrap(), Word(vec![syl(1, 1), syl(0, 1)]));
        assert_eq!(multiply(&p, &uw, &invert(&p, &uw).unwrap()).unwrap(), Word::identity());

        let pz = presentation(1, &[], &[0]);
        assert_eq!(
            invert(&pz, &Word(vec![syl(0, 2)])).unwrap(),
            Word(vec![syl(0, -2)])
        );
    }

    #[test]
    fn equals_examples() {
        let adjacent = presentation(2, &[(0, 1)], &[2, 2]);
        let free = presentation(2, &[], &[2, 2]);
        let uw = Word(vec![syl(0, 1), syl(1, 1)]);
        let wu = Word(vec![syl(1, 1), syl(0, 1)]);
        assert!(equals(&adjacent, &uw, &wu).unwrap());
        assert!(!equals(&free, &uw, &wu).unwrap());
        let a = Word(vec![syl(1, 1)]);
        let auu = Word(vec![syl(1, 1), syl(0, 1), syl(0, 1)]);
        assert!(equals(&free, &a, &auu).unwrap());
    }

    #[test]
    fn ball_infinite_dihedral() {
        let p = presentation(2, &[], &[2, 2]);
        for k in 0..=6usize {
            let ball = enumerate_ball(&p, k).unwrap();
            assert_eq!(ball.len(), 2 * k + 1, "radius {k}");
        }
        let ball3 = enumerate_ball(&p, 3).unwrap();
        let shown: Vec<String> = ball3.iter().map(|w| w.display(&p)).collect();
        assert_eq!(
            shown,
            vec!["1", "v00", "v01", "v00 v01", "v01 v00", "v00 v01 v00", "v01 v00 v01"]
        );
    }

    #[test]
    fn ball_clique_stabilizes() {
        let p = presentation(3, &[(0, 1), (0, 2), (1, 2)], &[2, 2, 2]);
        assert_eq!(enumerate_ball(&p, 3).unwrap().len(), 8);
        assert_eq!(enumerate_ball(&p, 5).unwrap().len(), 8);
        assert_eq!(enumerate_ball(&p, 0).unwrap(), vec![Word::identity()]);
    }

    #[test]
    fn ball_radius_bound() {
        let p = presentation(1, &[], &[2]);
        assert!(enumerate_ball(&p, MAX_BALL_RADIUS + 1).is_err());
    }

    #[test]
    fn ab_vector_examples() {
        let p = presentation(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], &[2; 5]);
        let w = Word(vec![syl(0, 1), syl(1, 1), syl(0, 1)]);
        assert_eq!(ab_vector(&p, &w).unwrap(), vec![0, 1, 0, 0, 0]);
        assert_eq!(ab_vector(&p, &Word::identity()).unwrap(), vec![0; 5]);
        // commutators die in the abelianization
        let y = Word::generator(1);
        let z = Word::generator(3);
        let mut comm = concat(&y, &z);
        comm = concat(&comm, &invert(&p, &y).unwrap());
        comm = concat(&comm, &invert(&p, &z).unwrap());
        assert_eq!(ab_vector(&p, &comm).unwrap(), vec![0; 5]);
    }

    #[test]
    fn word_parsing() {
        let p = Presentation::new(
            SimplicialGraph::new(vec!["a".into(), "b".into()], &[]).unwrap(),
            vec![0, 2],
        )
        .unwrap();
        let w = parse_word(&p, "a^2 b a^-1").unwrap();
        assert_eq!(w.0, vec![syl(0, 2), syl(1, 1), syl(0, -1)]);
        assert!(matches!(
            parse_word(&p, "c"),
            Err(WordError::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_word(&p, "a^0"),
            Err(WordError::ZeroExponent(_))
        ));
        assert!(matches!(
            parse_word(&p, "a^x"),
            Err(WordError::MalformedToken(_))
        ));
        // nothing commutes, so the parsed word is already reduced
        assert_eq!(normalize(&p, &w).unwrap().display(&p), "a^2 b a^-1");
    }
}
