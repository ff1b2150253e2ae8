//! Graph products of finitely generated abelian groups: decide
//! semicompleteness and completeness from the defining labeled graph, and
//! verify the structural facts behind those decisions with a normal-form
//! word engine and explicit automorphism families.
//!
//! The layers, bottom up:
//!
//! - [`graph`]: finite simplicial graphs with links, stars, induced
//!   components, separating stars and SILs.
//! - [`symmetry`]: automorphism search, asymmetry, canonical forms and
//!   the small-graph census.
//! - [`abelian`]: finitely generated abelian labels, primary
//!   decomposition and the clique expansion into cyclic prime-power
//!   vertex groups.
//! - [`words`]: graph-product elements as syllable words with a shortlex
//!   canonical normal form.
//! - [`autos`]: partial conjugations, factor automorphisms,
//!   transvections, graph and inner automorphisms as generator maps,
//!   with IA membership and bounded conjugator search.
//! - [`classify`]: the semicompleteness / completeness verdicts with
//!   per-condition evidence.
//! - [`input`]: the JSON input document used by the CLI.

pub mod abelian;
pub mod autos;
pub mod classify;
pub mod fixtures;
pub mod graph;
pub mod input;
pub mod symmetry;
pub mod words;
