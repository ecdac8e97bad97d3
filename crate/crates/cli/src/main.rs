//! CLI surface: formula tables, lower-bound breakdowns, layout
//! certification, exact/heuristic search, verification sweeps, and SVG
//! output.
//!
//! Exit codes: 0 success / all rows pass, 1 verification mismatch, 2
//! usage or precondition error (with a JSON error object on stderr).

mod svg;
mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use convex_crossings::bounds::total_lower_bound;
use convex_crossings::formulas::{nu1_balanced, nu1_bipartite, nu1_special, nu1_theorem1, nu1_theorem2};
use convex_crossings::layout::certify;
use convex_crossings::search::{exact_min, heuristic_min, ExactSearch};
use convex_crossings::{ConvexDrawing, PartitionSpec};

use verify::{Format, Mode};

#[derive(Parser)]
#[command(name = "convex-crossings", version, about = "Convex crossing numbers of complete multipartite graphs K(p^(1), m^(n))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Pick the applicable case from the divisibility of p and mn.
    Auto,
    /// p | mn
    T1,
    /// mn | p
    T2,
    /// nu1(K_{m,n}) for m | n (p is ignored)
    Bipartite,
    /// nu1(K_{m^(n)}) (p is ignored)
    Balanced,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form crossing number.
    Formula {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
        #[arg(short, default_value_t = 1)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Which::Auto)]
        which: Which,
    },
    /// Run the lower-bound pipeline and print its breakdown.
    Bound {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
        #[arg(short)]
        p: u64,
    },
    /// Build the evenly distributed drawing and certify it against the
    /// closed form.
    Construct {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
        #[arg(short)]
        p: u64,
        /// Also write the drawing JSON to this file (feed it to `svg`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum over circular orderings.
    Exact {
        /// Partite-set sizes as a JSON array, e.g. [2,2,2].
        #[arg(long)]
        sizes: String,
        /// Cap on enumerated class sequences.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Allow instances with more than 12 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Hill-climbing heuristic with random restarts.
    Heuristic {
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        restarts: u32,
        /// Improving moves allowed per restart.
        #[arg(long, default_value_t = 10_000)]
        iters: u32,
    },
    /// Sweep instances and check them against the closed forms.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Upper bound on m and n in formula/bound sweeps.
        #[arg(long, default_value_t = 8)]
        max_mn: u64,
        /// Upper bound on p + mn in construct/exact sweeps.
        #[arg(long, default_value_t = 20)]
        max_vertices: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Render a drawing JSON file as an SVG chord diagram.
    Svg {
        /// Drawing JSON ({"sizes":[...],"order":[...]}); "-" reads stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{}", json!({ "error": format!("{err:#}") }));
            ExitCode::from(2)
        }
    }
}

// CONVEX_CROSSINGS_THREADS limits worker count; 0 or unset means auto.
fn configure_threads() {
    if let Ok(v) = std::env::var("CONVEX_CROSSINGS_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn parse_sizes(raw: &str) -> Result<PartitionSpec> {
    let spec: PartitionSpec =
        serde_json::from_str(raw).with_context(|| format!("invalid sizes {raw:?}"))?;
    Ok(spec)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Formula { m, n, p, which } => {
            let (theorem, value) = match which {
                Which::Auto => {
                    let (t, v) = nu1_special(m, n, p).map_err(|e| anyhow!("{e}: no applicable theorem for m={m} n={n} p={p}"))?;
                    (t.as_str(), v)
                }
                Which::T1 => ("t1", nu1_theorem1(m, n, p)?),
                Which::T2 => ("t2", nu1_theorem2(m, n, p)?),
                Which::Bipartite => ("bipartite", nu1_bipartite(m, n)?),
                Which::Balanced => ("balanced", nu1_balanced(m, n)?),
            };
            println!(
                "{}",
                json!({ "m": m, "n": n, "p": p, "theorem": theorem, "value": value.to_string() })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { m, n, p } => {
            let b = total_lower_bound(m, n, p)?;
            println!(
                "{}",
                json!({
                    "m": m, "n": n, "p": p,
                    "fulek_term": b.fulek_term.to_string(),
                    "c2_term": b.c2_term.to_string(),
                    "per_edge_bounds": b.per_edge_bounds.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "c3_term": b.c3_term.to_string(),
                    "total": b.total.to_string(),
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { m, n, p, out } => {
            let report = certify(m, n, p)?;
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report.drawing)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!(
                "{}",
                json!({
                    "m": m, "n": n, "p": p,
                    "theorem": report.theorem.as_str(),
                    "sizes": report.drawing.spec().sizes(),
                    "order": report.drawing.order(),
                    "crossings": report.counted.to_string(),
                    "formula_value": report.formula_value.to_string(),
                    "offset": report.offset,
                    "pass": report.pass,
                })
            );
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Exact { sizes, budget, force } => {
            let spec = parse_sizes(&sizes)?;
            if spec.total_vertices() > 12 && !force {
                bail!(
                    "instance has {} vertices; exhaustive search above 12 needs --force",
                    spec.total_vertices()
                );
            }
            let result = exact_min(&spec, budget);
            let out = match result {
                ExactSearch::Minimum { min, witness, nodes } => json!({
                    "sizes": spec.sizes(),
                    "min": min.to_string(),
                    "witness_order": witness.order(),
                    "nodes_explored": nodes,
                    "exact": true,
                }),
                ExactSearch::BudgetExhausted { nodes } => json!({
                    "sizes": spec.sizes(),
                    "min": serde_json::Value::Null,
                    "witness_order": serde_json::Value::Null,
                    "nodes_explored": nodes,
                    "exact": false,
                }),
            };
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Heuristic { sizes, seed, restarts, iters } => {
            let spec = parse_sizes(&sizes)?;
            let (min, witness) = heuristic_min(&spec, seed, restarts, iters);
            println!(
                "{}",
                json!({
                    "sizes": spec.sizes(),
                    "min": min.to_string(),
                    "witness_order": witness.order(),
                    "seed": seed,
                    "restarts": restarts,
                    "iters": iters,
                    "exact": false,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { mode, max_mn, max_vertices, format } => {
            verify::run(mode, max_mn, max_vertices, format)
        }
        Command::Svg { input, out } => {
            let raw = if input == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
                buf
            } else {
                std::fs::read_to_string(&input).with_context(|| format!("reading {input}"))?
            };
            let drawing: ConvexDrawing =
                serde_json::from_str(&raw).context("invalid drawing JSON")?;
            let rendered = svg::render(&drawing);
            match out {
                Some(path) => std::fs::write(&path, rendered)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
