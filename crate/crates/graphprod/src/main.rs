//! Command-line front end: parse a labeled-graph file, run analyses,
//! print deterministic reports.
//!
//! Exit codes: 0 = Yes/true/ok, 1 = No/false, 2 = Undetermined,
//! 3 = input error.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graphprod::abelian::expand_graph;
use graphprod::autos::{self, ConjugatorSearch, GeneratorMap};
use graphprod::classify::{classify, Evidence, Verdict};
use graphprod::graph::{SimplicialGraph, VertexSet};
use graphprod::input::InputDocument;
use graphprod::symmetry::{automorphisms, census, is_asymmetric};
use graphprod::words::{equals, normalize, parse_word, Presentation};

const EXIT_TRUE: i32 = 0;
const EXIT_FALSE: i32 = 1;
const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Parser)]
#[command(name = "graphprod", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification: semicompleteness, completeness, center.
    Classify {
        file: String,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Run one graph predicate and print its witness.
    Check {
        what: CheckKind,
        file: String,
    },
    /// Print the clique expansion as an input document.
    Expand { file: String },
    /// List the label-respecting graph automorphisms.
    Autgroup { file: String },
    /// Census of all graphs on n vertices up to isomorphism.
    Census { n: usize },
    /// Normal form of a word over the expanded presentation.
    Nf { file: String, word: String },
    /// Word equality over the expanded presentation.
    Eq {
        file: String,
        word1: String,
        word2: String,
    },
    /// Build an automorphism from a constructor and analyze it.
    ///
    /// Constructors (over the expanded presentation):
    ///   partial-conjugation <v> <exponent> <c1,c2,...>
    ///   factor <v> <multiplier>
    ///   dominated-transvection <u> <v>
    ///   commutator-transvection <u> <v> <w>
    ///   graph <a:b,b:a,...>
    ///   inner <word>
    Aut {
        file: String,
        /// Constructor name followed by its parameters.
        #[arg(num_args = 1.., required = true)]
        constructor: Vec<String>,
        /// Report whether the map is an IA-automorphism.
        #[arg(long)]
        check_ia: bool,
        /// Search for a conjugator up to the given syllable radius.
        #[arg(long, value_name = "R", num_args = 0..=1, default_missing_value = "8")]
        find_conjugator: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    /// Separating star.
    SepStar,
    /// Separating intersection of links.
    Sil,
    /// Star containments st(v) ⊆ st(w).
    StarContainment,
    /// Link condition lk(v) ⊄ st(w) for all pairs.
    LinkCondition,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version go to stdout with exit 0; real errors exit 3
            if err.use_stderr() {
                eprintln!("{err}");
                std::process::exit(EXIT_INPUT_ERROR);
            }
            err.print().expect("write to stdout");
            std::process::exit(0);
        }
    };
    std::process::exit(run(cli));
}

fn load(file: &str) -> Result<(SimplicialGraph, Vec<graphprod::abelian::GroupLabel>), i32> {
    let doc = InputDocument::from_file(file).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT_ERROR
    })?;
    doc.build().map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT_ERROR
    })
}

fn load_presentation(file: &str) -> Result<Presentation, i32> {
    let (g, labels) = load(file)?;
    let eg = expand_graph(&g, &labels).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT_ERROR
    })?;
    Ok(Presentation::from_expanded(&eg))
}

#[derive(Serialize)]
struct JsonReport {
    semicomplete: Verdict,
    complete: Verdict,
    center: Vec<String>,
    semicomplete_evidence: Vec<Evidence>,
    complete_evidence: Vec<Evidence>,
    expansion: Option<InputDocument>,
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Classify { file, json } => {
            let (g, labels) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let report = classify(&g, &labels);
            if json {
                let view = JsonReport {
                    semicomplete: report.semicomplete,
                    complete: report.complete,
                    center: report.center.clone(),
                    semicomplete_evidence: report.semicomplete_evidence.clone(),
                    complete_evidence: report.complete_evidence.clone(),
                    expansion: report.expansion.as_ref().map(InputDocument::from_expanded),
                };
                println!("{}", serde_json::to_string_pretty(&view).expect("serializes"));
            } else {
                print!("{}", report.render_text());
            }
            report.semicomplete.exit_code()
        }
        Command::Check { what, file } => {
            let (g, _labels) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            match what {
                CheckKind::SepStar => match g.has_separating_star() {
                    Some(v) => {
                        println!("separating star: true witness={}", g.name(v));
                        EXIT_TRUE
                    }
                    None => {
                        println!("separating star: false");
                        EXIT_FALSE
                    }
                },
                CheckKind::Sil => match g.has_sil() {
                    Some(w) => {
                        println!(
                            "sil: true witness=({},{}|{})",
                            g.name(w.x),
                            g.name(w.y),
                            g.name(w.z)
                        );
                        EXIT_TRUE
                    }
                    None => {
                        println!("sil: false");
                        EXIT_FALSE
                    }
                },
                CheckKind::StarContainment => {
                    let pairs = g.star_containments();
                    if pairs.is_empty() {
                        println!("star containment: false");
                        EXIT_FALSE
                    } else {
                        let shown: Vec<String> = pairs
                            .iter()
                            .map(|&(v, w)| format!("({},{})", g.name(v), g.name(w)))
                            .collect();
                        println!("star containment: true pairs={}", shown.join(" "));
                        EXIT_TRUE
                    }
                }
                CheckKind::LinkCondition => match g.link_condition_violation() {
                    None => {
                        println!("link condition: true");
                        EXIT_TRUE
                    }
                    Some((v, w)) => {
                        println!(
                            "link condition: false witness=({},{})",
                            g.name(v),
                            g.name(w)
                        );
                        EXIT_FALSE
                    }
                },
            }
        }
        Command::Expand { file } => {
            let (g, labels) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            match expand_graph(&g, &labels) {
                Ok(eg) => {
                    println!("{}", InputDocument::from_expanded(&eg).to_json());
                    EXIT_TRUE
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT_ERROR
                }
            }
        }
        Command::Autgroup { file } => {
            let (g, labels) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let autos = automorphisms(&g, Some(&labels)).expect("label count matches");
            println!("labeled automorphisms: {}", autos.len());
            for a in &autos {
                let shown: Vec<String> = (0..g.n())
                    .map(|v| format!("{}->{}", g.name(v), g.name(a[v])))
                    .collect();
                println!("  {}", shown.join(","));
            }
            println!("asymmetric: {}", is_asymmetric(&g));
            EXIT_TRUE
        }
        Command::Census { n } => match census(n) {
            Ok(report) => {
                println!("n: {}", report.n);
                println!("total_classes: {}", report.total_classes);
                println!("asymmetric_classes: {}", report.asymmetric_classes);
                println!(
                    "asymmetric_with_separating_star: {}",
                    report.asymmetric_with_separating_star
                );
                for g in &report.representatives {
                    let edges: Vec<String> = g
                        .edges()
                        .iter()
                        .map(|&(u, v)| format!("{}-{}", g.name(u), g.name(v)))
                        .collect();
                    println!("  asymmetric representative: {}", edges.join(" "));
                }
                EXIT_TRUE
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT_ERROR
            }
        },
        Command::Nf { file, word } => {
            let p = match load_presentation(&file) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match parse_word(&p, &word).and_then(|w| normalize(&p, &w)) {
                Ok(nf) => {
                    println!("{}", nf.display(&p));
                    EXIT_TRUE
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT_ERROR
                }
            }
        }
        Command::Eq { file, word1, word2 } => {
            let p = match load_presentation(&file) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let parsed = parse_word(&p, &word1)
                .and_then(|a| parse_word(&p, &word2).map(|b| (a, b)))
                .and_then(|(a, b)| equals(&p, &a, &b).map(|e| (a, b, e)));
            match parsed {
                Ok((_, _, true)) => {
                    println!("equal: true");
                    EXIT_TRUE
                }
                Ok((_, _, false)) => {
                    println!("equal: false");
                    EXIT_FALSE
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT_ERROR
                }
            }
        }
        Command::Aut {
            file,
            constructor,
            check_ia,
            find_conjugator,
        } => {
            let p = match load_presentation(&file) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let f = match build_map(&p, &constructor) {
                Ok(f) => f,
                Err(BuildError::Usage(msg)) => {
                    eprintln!("error: {msg}");
                    return EXIT_INPUT_ERROR;
                }
                Err(BuildError::Rejected(msg)) => {
                    println!("rejected: {msg}");
                    return EXIT_FALSE;
                }
            };
            println!("kind: {}", f.kind.as_str());
            println!("params: {}", f.params);
            for v in 0..p.n() {
                println!("  {} -> {}", p.graph().name(v), f.image(v).display(&p));
            }
            let mut code = EXIT_TRUE;
            if check_ia {
                match autos::is_ia(&p, &f) {
                    Ok(verdict) => {
                        match verdict.witness {
                            Some(v) => println!(
                                "ia: false witness={}",
                                p.graph().name(v)
                            ),
                            None => println!("ia: true"),
                        }
                        if !verdict.in_ia {
                            code = EXIT_FALSE;
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_INPUT_ERROR;
                    }
                }
            }
            if let Some(radius) = find_conjugator {
                match autos::find_conjugator(&p, &f, radius) {
                    Ok(ConjugatorSearch::Found(a)) => {
                        println!("found {}", a.display(&p));
                    }
                    Ok(ConjugatorSearch::NoneUpTo(r)) => {
                        println!("none up to radius {r}");
                        code = EXIT_FALSE;
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_INPUT_ERROR;
                    }
                }
            }
            code
        }
    }
}

enum BuildError {
    /// Malformed invocation: wrong arity, unknown name, unknown vertex.
    Usage(String),
    /// Well-formed but the construction's preconditions fail.
    Rejected(String),
}

fn vertex(p: &Presentation, name: &str) -> Result<usize, BuildError> {
    p.graph()
        .index(name)
        .ok_or_else(|| BuildError::Usage(format!("unknown vertex `{name}`")))
}

fn build_map(p: &Presentation, args: &[String]) -> Result<GeneratorMap, BuildError> {
    let usage = |msg: &str| BuildError::Usage(msg.to_string());
    let reject = |e: autos::AutosError| BuildError::Rejected(e.to_string());
    match args[0].as_str() {
        "partial-conjugation" => {
            let [_, v, exp, comp] = args else {
                return Err(usage("partial-conjugation <v> <exponent> <c1,c2,...>"));
            };
            let v = vertex(p, v)?;
            let exp: i64 = exp
                .parse()
                .map_err(|_| usage("exponent must be an integer"))?;
            let mut c = VertexSet::EMPTY;
            for name in comp.split(',') {
                c.insert(vertex(p, name)?);
            }
            autos::make_partial_conjugation(p, v, exp, c).map_err(reject)
        }
        "factor" => {
            let [_, v, m] = args else {
                return Err(usage("factor <v> <multiplier>"));
            };
            let v = vertex(p, v)?;
            let m: i64 = m
                .parse()
                .map_err(|_| usage("multiplier must be an integer"))?;
            autos::make_factor_automorphism(p, v, m).map_err(reject)
        }
        "dominated-transvection" => {
            let [_, u, v] = args else {
                return Err(usage("dominated-transvection <u> <v>"));
            };
            let (u, v) = (vertex(p, u)?, vertex(p, v)?);
            autos::make_dominated_transvection(p, u, v).map_err(reject)
        }
        "commutator-transvection" => {
            let [_, u, v, w] = args else {
                return Err(usage("commutator-transvection <u> <v> <w>"));
            };
            let (u, v, w) = (vertex(p, u)?, vertex(p, v)?, vertex(p, w)?);
            autos::make_commutator_transvection(p, u, v, w).map_err(reject)
        }
        "graph" => {
            let [_, mapping] = args else {
                return Err(usage("graph <a:b,b:a,...>"));
            };
            let mut perm: Vec<usize> = (0..p.n()).collect();
            for part in mapping.split(',') {
                let Some((from, to)) = part.split_once(':') else {
                    return Err(usage("graph mapping entries look like `a:b`"));
                };
                perm[vertex(p, from)?] = vertex(p, to)?;
            }
            autos::make_graph_automorphism(p, &perm).map_err(reject)
        }
        "inner" => {
            let [_, word] = args else {
                return Err(usage("inner <word>"));
            };
            let a = parse_word(p, word).map_err(|e| usage(&e.to_string()))?;
            autos::inner(p, &a).map_err(reject)
        }
        other => Err(usage(&format!(
            "unknown constructor `{other}`; see `graphprod aut --help`"
        ))),
    }
}
