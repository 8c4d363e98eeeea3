//! `kdefect`: k-defect polynomials, numbers and claim checks from the
//! command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when `verify`
//! finds counterexamples.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kdefect::engine::{
    brute_force_vector, defect_poly_flats, defect_table_with, defect_vector_subset,
    flats_of_size, witness_coloring, DcEngine, EngineKind, TableOptions,
};
use kdefect::families::{self, FamilySpec};
use kdefect::format::parse_graph;
use kdefect::verifier::{self, ClaimReport, Outcome, VerifyOptions};
use kdefect::{Graph, Poly};

#[derive(Parser)]
#[command(name = "kdefect", version, about = "k-defect polynomials and numbers of small multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// φ_k(G; λ) for one k, or its value at --lambda
    Poly {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long, default_value = "dc")]
        engine: EngineKind,
        #[command(flatten)]
        out: Output,
    },
    /// φ_k(G), the least number of colors giving exactly k bad edges
    Number {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        no_cache: bool,
    },
    /// Every φ_k(G; λ) and φ_k(G), cross-checked across engines
    Table {
        #[command(flatten)]
        input: Input,
        /// Restrict the cross-check to these engines (dc always runs)
        #[arg(long, value_delimiter = ',')]
        engine: Vec<EngineKind>,
        #[arg(long)]
        no_cache: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Flats (closed edge sets) of size k
    Flats {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// A coloring with exactly k bad edges using φ_k(G) colors
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Print the graphs of a family spec or range
    Family {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Replay claims C1..C14 over corpora
    Verify {
        /// Claim id, or `all`
        #[arg(long, default_value = "all")]
        claim: String,
        /// Corpus override; repeat or use ranges such as wheel:4..8
        #[arg(long)]
        family: Vec<String>,
        #[arg(long, default_value_t = 25)]
        max_counterexamples: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Time engines over a corpus (CSV)
    Bench {
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "dc")]
        engine: Vec<EngineKind>,
        #[arg(long)]
        no_cache: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list or graph6 file, `-` for stdin
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    input: Option<String>,
    /// Family spec such as wheel:6, kbipartite:3,4 or randomtree:10
    #[arg(long)]
    family: Option<String>,
    /// Seed for randomtree specs given without one
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reject loops and parallel edges in edge-list input
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Serialize)]
struct Witness {
    k: usize,
    colors: usize,
    assignment: Vec<usize>,
    bad_edges: Vec<usize>,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn family_specs(spec: &str, seed: u64) -> CliResult<Vec<FamilySpec>> {
    let spec = match spec.strip_prefix("randomtree:") {
        Some(rest) if !rest.contains(',') => format!("{spec},{seed}"),
        _ => spec.to_string(),
    };
    families::parse_corpus(&spec).map_err(err)
}

impl Input {
    fn graphs(&self) -> CliResult<Vec<(String, Graph)>> {
        if let Some(spec) = &self.family {
            let mut out = Vec::new();
            for s in family_specs(spec, self.seed)? {
                for g in s.generate().map_err(err)? {
                    out.push((s.to_string(), g));
                }
            }
            return Ok(out);
        }
        let path = self.input.as_deref().expect("clap enforces one input");
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(err)?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        };
        let g = parse_graph(&text, self.strict).map_err(|e| format!("{path}: {e}"))?;
        Ok(vec![(path.to_string(), g)])
    }

    fn graph(&self) -> CliResult<Graph> {
        let mut graphs = self.graphs()?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap().1),
            n => Err(format!("this command needs exactly one graph, the input gives {n}")),
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(value).map_err(err)?);
    Ok(())
}

fn coeff_field(p: &Poly) -> String {
    p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Poly {
            input,
            k,
            lambda,
            engine,
            out,
        } => {
            let g = input.graph()?;
            if k > g.m() {
                return Err(format!("k = {k} exceeds the edge count {}", g.m()));
            }
            if let Some(lambda) = lambda {
                let value = match engine {
                    EngineKind::Brute => brute_force_vector(&g, lambda).map_err(err)?[k] as i128,
                    _ => defect_poly(&g, k, engine)?.eval(lambda as i128),
                };
                return match out.format {
                    Format::Json => print_json(&serde_json::json!({"k": k, "lambda": lambda, "value": value})),
                    Format::Csv => {
                        println!("k,lambda,value\n{k},{lambda},{value}");
                        Ok(())
                    }
                    Format::Latex => {
                        println!("{value}");
                        Ok(())
                    }
                }
                .map(|_| 0);
            }
            if engine == EngineKind::Brute {
                return Err("the brute engine counts colorings at a fixed λ; pass --lambda".into());
            }
            let p = defect_poly(&g, k, engine)?;
            match out.format {
                Format::Json => print_json(&serde_json::json!({"k": k, "poly": p}))?,
                Format::Csv => {
                    println!("degree,coefficient");
                    for (d, c) in p.coeffs().iter().enumerate() {
                        println!("{d},{c}");
                    }
                }
                Format::Latex => println!("{}", p.to_latex()),
            }
            Ok(0)
        }
        Command::Number { input, k, no_cache } => {
            let g = input.graph()?;
            let number = if k > g.m() {
                0
            } else {
                let t = defect_table_with(&mut DcEngine::with_cache(!no_cache), &g, &TableOptions::fast())
                    .map_err(err)?;
                t.rows[k].number
            };
            println!("{number}");
            Ok(0)
        }
        Command::Table {
            input,
            engine,
            no_cache,
            out,
        } => {
            let g = input.graph()?;
            let mut opts = if engine.is_empty() {
                TableOptions::default()
            } else {
                TableOptions::engines(&engine)
            };
            opts.cache = !no_cache;
            let t = defect_table_with(&mut DcEngine::with_cache(!no_cache), &g, &opts).map_err(err)?;
            match out.format {
                Format::Json => print_json(&t)?,
                Format::Csv => {
                    println!("k,number,feasible,coefficients");
                    for r in &t.rows {
                        println!("{},{},{},{}", r.k, r.number, r.feasible, coeff_field(&r.poly));
                    }
                }
                Format::Latex => {
                    println!("\\begin{{tabular}}{{rrl}}");
                    println!("$k$ & $\\varphi_k(G)$ & $\\varphi_k(G;\\lambda)$ \\\\");
                    println!("\\hline");
                    for r in &t.rows {
                        println!("{} & {} & ${}$ \\\\", r.k, r.number, r.poly.to_latex());
                    }
                    println!("\\end{{tabular}}");
                }
            }
            Ok(0)
        }
        Command::Flats { input, k, out } => {
            let g = input.graph()?;
            let flats = flats_of_size(&g, k).map_err(err)?;
            match out.format {
                Format::Csv => {
                    println!("index,edges,parts");
                    for (i, f) in flats.iter().enumerate() {
                        println!("{i},{},{}", join(&f.edges), blocks_field(&f.parts.blocks()));
                    }
                }
                _ => {
                    let rows: Vec<_> = flats
                        .iter()
                        .map(|f| serde_json::json!({"edges": f.edges, "parts": f.parts.blocks()}))
                        .collect();
                    print_json(&rows)?;
                }
            }
            Ok(0)
        }
        Command::Witness { input, k } => {
            let g = input.graph()?;
            match witness_coloring(&g, k).map_err(err)? {
                Some(c) => print_json(&Witness {
                    k,
                    colors: c.colors,
                    bad_edges: c.bad_edges(&g),
                    assignment: c.assignment,
                })?,
                None => print_json(&serde_json::Value::Null)?,
            }
            Ok(0)
        }
        Command::Family { input, out } => {
            let graphs = input.graphs()?;
            match out.format {
                Format::Csv => {
                    println!("family,n,m,edges");
                    for (spec, g) in &graphs {
                        let edges: Vec<String> =
                            g.endpoints().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        println!("{spec},{},{},{}", g.n(), g.m(), edges.join(" "));
                    }
                }
                _ => {
                    let rows: Vec<_> = graphs
                        .iter()
                        .map(|(spec, g)| serde_json::json!({"family": spec, "n": g.n(), "edges": g.endpoints()}))
                        .collect();
                    print_json(&rows)?;
                }
            }
            Ok(0)
        }
        Command::Verify {
            claim,
            family,
            max_counterexamples,
            out,
        } => {
            let ids: Vec<&str> = if claim.eq_ignore_ascii_case("all") {
                verifier::list_claims().iter().map(|c| c.id).collect()
            } else {
                vec![claim.as_str()]
            };
            let mut corpus_override = Vec::new();
            for f in &family {
                corpus_override.extend(family_specs(f, 0)?);
            }
            let opts = VerifyOptions { max_counterexamples };
            let mut reports: Vec<ClaimReport> = Vec::new();
            for id in ids {
                let report = if corpus_override.is_empty() {
                    verifier::run_claim_default(id, &opts)
                } else {
                    verifier::run_claim(id, &corpus_override, &opts)
                }
                .map_err(err)?;
                reports.push(report);
            }
            match out.format {
                Format::Csv => {
                    println!("claim,outcome,checked,skipped,failures,ms");
                    for r in &reports {
                        let outcome = if r.outcome == Outcome::Pass { "pass" } else { "counterexamples" };
                        println!("{},{outcome},{},{},{},{}", r.claim, r.checked, r.skipped, r.failures, r.ms);
                    }
                }
                _ if reports.len() == 1 => print_json(&reports[0])?,
                _ => print_json(&reports)?,
            }
            let failed = reports.iter().any(|r| r.outcome == Outcome::Counterexamples);
            Ok(if failed { 2 } else { 0 })
        }
        Command::Bench {
            family,
            engine,
            no_cache,
            seed,
        } => {
            println!("family,engine,instances,ms,cache_hits,cache_misses");
            for f in &family {
                for spec in family_specs(f, seed.unwrap_or(0))? {
                    let graphs = spec.generate().map_err(err)?;
                    for &kind in &engine {
                        let (ms, hits, misses) = bench(&graphs, kind, !no_cache)?;
                        println!("{spec},{},{},{ms:.3},{hits},{misses}", kind.name(), graphs.len());
                    }
                }
            }
            Ok(0)
        }
    }
}

fn defect_poly(g: &Graph, k: usize, engine: EngineKind) -> CliResult<Poly> {
    let p = match engine {
        EngineKind::Dc => DcEngine::new().defect_vector(g).map_err(err)?.swap_remove(k),
        EngineKind::Subset => defect_vector_subset(g).map_err(err)?.swap_remove(k),
        EngineKind::Flats => defect_poly_flats(g, k).map_err(err)?,
        EngineKind::Brute => unreachable!("handled by the caller"),
    };
    Ok(p)
}

fn bench(graphs: &[Graph], kind: EngineKind, cache: bool) -> CliResult<(f64, u64, u64)> {
    let mut dc = DcEngine::with_cache(cache);
    let start = Instant::now();
    for g in graphs {
        match kind {
            EngineKind::Dc => {
                dc.defect_vector(g).map_err(err)?;
            }
            EngineKind::Subset => {
                defect_vector_subset(g).map_err(err)?;
            }
            EngineKind::Flats => {
                for k in 0..=g.m() {
                    defect_poly_flats(g, k).map_err(err)?;
                }
            }
            EngineKind::Brute => {
                brute_force_vector(g, 3).map_err(err)?;
            }
        }
    }
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    let stats = dc.stats();
    Ok((ms, stats.hits, stats.misses))
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn blocks_field(blocks: &[Vec<usize>]) -> String {
    blocks.iter().map(|b| join(b)).collect::<Vec<_>>().join("|")
}
