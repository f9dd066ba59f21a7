//! Command-line front end: exposes the library to scripts and CI.
//!
//! One verb per invocation; results go to standard output (or --out) as
//! JSON with a "schema":1 field.  Exit status: 0 on success, 1 on domain
//! errors (with a JSON error object naming the violated precondition),
//! 2 on verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use biclosed::affine::{closure, closure_window, Window};
use biclosed::braid::{build_braid_graph, connect, realize, Budget, Realization};
use biclosed::canonical::{generators, is_finitely_generated};
use biclosed::error::Error;
use biclosed::lattice::{join, meet_b, quasi_positive_counterexample};
use biclosed::oracle;
use biclosed::roots::{system, RootSystemType};
use biclosed::wire;
use biclosed::words::{join_bounded, maximal_elements, meet};

#[derive(Parser)]
#[command(name = "biclosed", about = "Exact biclosed-set calculus for rank-3 affine Weyl groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Root system type.
    #[arg(long = "type", global = true, default_value = "A2")]
    ty: String,
    /// Level window for brute-force cross-checks.
    #[arg(long, global = true)]
    window: Option<i32>,
    /// Word-length budget for witness searches.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Output format where applicable.
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Input file (defaults to standard input when a verb needs input).
    #[arg(long = "in", global = true)]
    input: Option<String>,
    /// Output file (defaults to standard output).
    #[arg(long = "out", global = true)]
    output: Option<String>,
    /// Seed for sampled verifier suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system data: roots, positive system, simple roots, highest root, Cartan matrix.
    Roots,
    /// Exact closure of a generator list (JSON list of affine roots).
    Closure,
    /// Canonical biclosed forms w·Φ̂⁺_{L,K}.
    Biclosed {
        #[command(subcommand)]
        op: BiclosedOp,
    },
    /// Finite and infinite reduced words under weak order.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// The ortholattice of biclosed sets.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// The braid graph on restrictions of reflection orders.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// Brute-force verifier suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum BiclosedOp {
    /// Input {"set": {w,L,K}, "root": {"dir":[a,b],"level":n}} → membership.
    Membership,
    /// Input {w,L,K} (any representative) → minimal canonical form.
    Canonicalize,
    /// Input {w,L,K} → finite generating set, or a domain error.
    Generators,
}

#[derive(Subcommand)]
enum WordOp {
    /// Input: word JSON (finite, canonical infinite, or periodic) → inversion set.
    Inversions,
    /// Input {"x":…,"y":…} → greatest lower bound.
    Meet,
    /// Input {"x":…,"y":…} or {"elements":[…]} → least upper bound if bounded.
    Join,
    /// The finitely many maximal elements of W̄.
    Maximal,
}

#[derive(Subcommand)]
enum LatticeOp {
    /// Input {"b1":…,"b2":…} → join in the ortholattice.
    Join,
    /// Input {"b1":…,"b2":…} → meet in the ortholattice.
    Meet,
    /// Input {"b":…} → ortho-complement.
    Complement,
    /// The quasi-positive counterexample verdicts (Ã₂ only).
    QuasiPositive,
}

#[derive(Subcommand)]
enum BraidOp {
    /// Input {"R":[affine roots]} → the braid graph (JSON or DOT).
    Graph,
    /// Input {"order1":[…],"order2":[…]} → a certified reversal path.
    Connect,
    /// Input {"order":[…]} → realizability verdict with pivot witnesses.
    Realize,
}

fn read_input(cli: &Cli) -> Result<Value, Error> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("cannot read {path}: {e}")))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Malformed(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("malformed JSON input: {e}")))
}

fn need(v: &Value, key: &str) -> Result<Value, Error> {
    v.get(key).cloned().ok_or_else(|| Error::Malformed(format!("input needs a {key:?} field")))
}

fn run(cli: &Cli) -> Result<(Value, Option<String>), Error> {
    let ty = RootSystemType::parse(&cli.ty)?;
    let budget = Budget { word_len: cli.budget.unwrap_or(oracle::braid_budget(ty).word_len) };
    let out = match &cli.cmd {
        Cmd::Roots => {
            let sys = system(ty);
            json!({
                "type": ty.name(),
                "roots": sys.roots.iter().map(|&r| wire::root_to_json(r)).collect::<Vec<_>>(),
                "positive": sys.positive().iter().map(|&r| wire::root_to_json(r)).collect::<Vec<_>>(),
                "simple": sys.simple.iter().map(|&r| wire::root_to_json(r)).collect::<Vec<_>>(),
                "highest": wire::root_to_json(sys.highest),
                "cartan": sys.cartan,
            })
        }
        Cmd::Closure => {
            let gens = wire::affine_roots_from_json(&read_input(cli)?)?;
            let c = closure(ty, &gens)?;
            let mut result = json!({
                "type": ty.name(),
                "closure": wire::epset_to_json(&c)?,
            });
            if let Some(n) = cli.window {
                let w = Window::new(n)?;
                let win = closure_window(ty, &gens, w)?;
                let agrees = win == c.truncate(n);
                result["window"] = json!(n);
                result["window_agrees"] = json!(agrees);
                result["window_set"] =
                    Value::Array(win.iter().map(|&r| wire::affine_root_to_json(r)).collect());
                if !agrees {
                    return Err(Error::Verification("windowed closure disagrees with the engine".into()));
                }
            }
            result
        }
        Cmd::Biclosed { op } => {
            let input = read_input(cli)?;
            match op {
                BiclosedOp::Membership => {
                    let c = wire::canonical_from_json(ty, &need(&input, "set")?)?;
                    let r = wire::affine_root_from_json(&need(&input, "root")?)?;
                    json!({"type": ty.name(), "member": c.member(r)})
                }
                BiclosedOp::Canonicalize => {
                    let c = wire::canonical_from_json(ty, &input)?;
                    json!({
                        "type": ty.name(),
                        "canonical": wire::canonical_to_json(&c),
                        "epset": wire::epset_to_json(c.epset())?,
                        "finitely_generated": is_finitely_generated(&c),
                    })
                }
                BiclosedOp::Generators => {
                    let c = wire::canonical_from_json(ty, &input)?;
                    let gens = generators(&c)?;
                    json!({
                        "type": ty.name(),
                        "generators": gens.iter().map(|&r| wire::affine_root_to_json(r)).collect::<Vec<_>>(),
                    })
                }
            }
        }
        Cmd::Word { op } => match op {
            WordOp::Inversions => {
                let w = wire::wbar_from_json(ty, &read_input(cli)?)?;
                json!({
                    "type": ty.name(),
                    "word": wire::wbar_to_json(&w),
                    "inversions": wire::epset_to_json(&w.epset())?,
                })
            }
            WordOp::Meet => {
                let input = read_input(cli)?;
                let x = wire::wbar_from_json(ty, &need(&input, "x")?)?;
                let y = wire::wbar_from_json(ty, &need(&input, "y")?)?;
                let m = meet(&x, &y)?;
                json!({"type": ty.name(), "meet": wire::wbar_to_json(&m)})
            }
            WordOp::Join => {
                let input = read_input(cli)?;
                let elems: Vec<_> = if let Some(list) = input.get("elements") {
                    list.as_array()
                        .ok_or_else(|| Error::Malformed("\"elements\" must be a list".into()))?
                        .iter()
                        .map(|v| wire::wbar_from_json(ty, v))
                        .collect::<Result<_, _>>()?
                } else {
                    vec![
                        wire::wbar_from_json(ty, &need(&input, "x")?)?,
                        wire::wbar_from_json(ty, &need(&input, "y")?)?,
                    ]
                };
                let j = join_bounded(&elems)?;
                json!({"type": ty.name(), "join": wire::wbar_to_json(&j)})
            }
            WordOp::Maximal => {
                let maxes = maximal_elements(ty);
                json!({
                    "type": ty.name(),
                    "count": maxes.len(),
                    "maximal": maxes
                        .iter()
                        .map(|u| json!({
                            "word": wire::wbar_to_json(&biclosed::words::WBarElement::Infinite(u.clone())),
                            "inversions": wire::epset_to_json(u.epset()).unwrap(),
                        }))
                        .collect::<Vec<_>>(),
                })
            }
        },
        Cmd::Lattice { op } => match op {
            LatticeOp::Join | LatticeOp::Meet => {
                let input = read_input(cli)?;
                let b1 = wire::belement_from_json(ty, &need(&input, "b1")?)?;
                let b2 = wire::belement_from_json(ty, &need(&input, "b2")?)?;
                let r = match op {
                    LatticeOp::Join => join(&b1, &b2)?,
                    _ => meet_b(&b1, &b2)?,
                };
                json!({
                    "type": ty.name(),
                    "result": wire::belement_to_json(&r),
                    "epset": wire::epset_to_json(r.epset())?,
                })
            }
            LatticeOp::Complement => {
                let input = read_input(cli)?;
                let b = wire::belement_from_json(ty, &need(&input, "b")?)?;
                let c = b.complement();
                json!({"type": ty.name(), "result": wire::belement_to_json(&c)})
            }
            LatticeOp::QuasiPositive => {
                let n = cli.window.unwrap_or(6);
                let r1 = quasi_positive_counterexample(n);
                let r2 = quasi_positive_counterexample(n + 4);
                json!({
                    "window": n,
                    "lower_bounds_contained": r1.lower_bounds_contained,
                    "closure_fills_intersection": r1.closure_fills_intersection,
                    "not_coclosed": r1.not_coclosed,
                    "windows_agree": r1 == r2,
                })
            }
        },
        Cmd::Braid { op } => match op {
            BraidOp::Graph => {
                let input = read_input(cli)?;
                let r = wire::affine_roots_from_json(&need(&input, "R")?)?;
                let g = build_braid_graph(ty, &r, budget)?;
                match cli.format {
                    Format::Dot => return Ok((Value::Null, Some(wire::graph_to_dot(&g)))),
                    Format::Json => wire::graph_to_json(&g),
                }
            }
            BraidOp::Connect => {
                let input = read_input(cli)?;
                let v1 = wire::vertex_from_json(ty, &need(&input, "order1")?)?;
                let v2 = wire::vertex_from_json(ty, &need(&input, "order2")?)?;
                let moves = connect(&v1, &v2, budget)?;
                json!({
                    "type": ty.name(),
                    "moves": wire::moves_to_json(&moves),
                    "length": moves.len(),
                })
            }
            BraidOp::Realize => {
                let input = read_input(cli)?;
                let v = wire::vertex_from_json(ty, &need(&input, "order")?)?;
                match realize(&v, budget) {
                    Realization::Realizable(ws) => json!({
                        "realizable": true,
                        "pivots": ws
                            .iter()
                            .map(|w| json!({
                                "pivot": w.pivot.iter().map(|&r| wire::root_to_json(r)).collect::<Vec<_>>(),
                                "lower_word": w.lower.letters,
                                "upper_word": w.upper.letters,
                            }))
                            .collect::<Vec<_>>(),
                    }),
                    Realization::NotRealizable => json!({"realizable": false}),
                    Realization::Unknown => json!({"realizable": "unknown", "budget": budget.word_len}),
                }
            }
        },
        Cmd::Verify { suite } => {
            let window = cli.window.unwrap_or(8);
            let suites: Vec<&str> = if suite == "all" {
                oracle::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            let mut failed = false;
            for s in suites {
                let rep = oracle::run_suite(s, ty, window, cli.seed)?;
                failed |= !rep.passed();
                reports.push(serde_json::to_value(&rep).unwrap());
            }
            let out = json!({"schema": 1, "reports": reports, "passed": !failed});
            if failed {
                emit(cli, &out, None)?;
                std::process::exit(2);
            }
            return Ok((out, None));
        }
    };
    Ok((out, None))
}

fn emit(cli: &Cli, v: &Value, raw: Option<&str>) -> Result<(), Error> {
    let text = match raw {
        Some(t) => t.to_string(),
        None => {
            let mut v = v.clone();
            if v.get("schema").is_none() {
                v["schema"] = json!(1);
            }
            serde_json::to_string_pretty(&v).unwrap()
        }
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| Error::Malformed(format!("cannot write {path}: {e}")))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, raw)) => {
            if emit(&cli, &v, raw.as_deref()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = match e {
                Error::Verification(_) => 2,
                _ => 1,
            };
            let obj = json!({
                "schema": 1,
                "error": {"violated": e.to_string()},
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            ExitCode::from(code)
        }
    }
}
