mod manifest;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tightcycle::extremal::probe_csv;
use tightcycle::random::random_with_min_codegree;
use tightcycle::{
    classify_pairs, count_closed_tight_walks, digraph_two_cycles, exhaustive_small,
    find_closed_tight_walk, find_tight_cycle, find_vstar, local_search_max_codegree,
    mod3_construction, parse, probe_constant_c, prove_pipeline, serialize, tight_cycle,
    AnnealConfig, CertificateFile, Epsilon, Hypergraph3, PipelineOutcome, SearchReport, StartState,
};

use manifest::Run;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format h3/1)");

#[derive(Parser)]
#[command(name = "tightcycle", version = VERSION, about = "Tight cycles in 3-uniform hypergraphs")]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a hypergraph to an .h3 file
    #[command(subcommand)]
    Gen(Gen),
    /// Print n, m, minimum codegree and the codegree histogram
    Stats { file: PathBuf },
    #[command(subcommand)]
    Find(Find),
    #[command(subcommand)]
    Count(Count),
    /// Classify vertex pairs as K4- base pairs and apex arcs
    Classify {
        file: PathBuf,
        /// Write the apex digraph in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Extract a verified closed tight 10-walk under the codegree hypothesis
    Prove {
        /// Slack above one third, as P/Q
        #[arg(long)]
        epsilon: Epsilon,
        file: PathBuf,
        /// Write the certificate as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    #[command(subcommand)]
    Extremal(Extremal),
}

#[derive(Subcommand)]
enum Gen {
    /// The mod-3 partition construction on n vertices
    Construction {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The tight cycle C_len
    Cycle {
        #[arg(long)]
        len: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The complete 3-graph on n vertices
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A random 3-graph, optionally lifted to a minimum codegree
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        min_codegree: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Find {
    /// A tight cycle, or with --hom a closed tight walk
    Cycle {
        #[arg(long)]
        len: usize,
        /// Accept homomorphic images (closed walks) instead of copies
        #[arg(long)]
        hom: bool,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum Count {
    /// Number of closed tight walks of the given length
    Walks {
        #[arg(long)]
        len: usize,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Start {
    Auto,
    Construction,
    Empty,
}

#[derive(Args)]
struct ReportOut {
    /// Write the witness hypergraph
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the full report as JSON
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Extremal {
    /// Exact maximum codegree without a closed tight walk, n <= 6
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Simulated annealing lower bound
    Anneal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        iters: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        restarts: u64,
        #[arg(long, value_enum, default_value_t = Start::Auto)]
        start: Start,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Best codegree found for several n, as CSV, with witness files alongside
    ProbeC {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        len: usize,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn load(run: &mut Run, path: &Path) -> Result<Hypergraph3> {
    let text = run.read(path)?;
    parse(&text).with_context(|| format!("{}", path.display()))
}

fn gen(run: &mut Run, g: Gen) -> Result<ExitCode> {
    let (h, output) = match g {
        Gen::Construction { n, output } => (mod3_construction(n)?, output),
        Gen::Cycle { len, output } => (tight_cycle(len)?, output),
        Gen::Complete { n, output } => (Hypergraph3::complete(n)?, output),
        Gen::Random {
            n,
            p,
            seed,
            min_codegree,
            output,
        } => {
            run.seed(seed);
            (random_with_min_codegree(n, p, min_codegree, seed)?, output)
        }
    };
    run.write(&output, &serialize(&h))?;
    println!(
        "wrote {} (n = {}, m = {})",
        output.display(),
        h.n(),
        h.edge_count()
    );
    Ok(ExitCode::SUCCESS)
}

fn stats(h: &Hypergraph3) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "n: {}", h.n())?;
    writeln!(out, "m: {}", h.edge_count())?;
    match h.worst_pair() {
        Some((u, v, d)) => writeln!(out, "delta2: {d} (pair {u} {v})")?,
        None => writeln!(out, "delta2: undefined (fewer than 2 vertices)")?,
    }
    writeln!(out, "codegree histogram:")?;
    for (d, count) in h
        .codegree_histogram()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
    {
        writeln!(out, "  {d}: {count}")?;
    }
    Ok(out)
}

fn find(run: &mut Run, f: Find) -> Result<ExitCode> {
    let Find::Cycle { len, hom, file } = f;
    let h = load(run, &file)?;
    let found = if hom {
        find_closed_tight_walk(&h, len)?
    } else {
        find_tight_cycle(&h, len)?
    };
    let what = if hom {
        "closed tight walk"
    } else {
        "tight cycle"
    };
    Ok(match found {
        Some(cert) => {
            println!("{cert}");
            ExitCode::SUCCESS
        }
        None => {
            println!("no {what} of length {len}");
            ExitCode::from(1)
        }
    })
}

fn classify(run: &mut Run, file: &Path, dot: Option<PathBuf>) -> Result<ExitCode> {
    let h = load(run, file)?;
    let pc = classify_pairs(&h);
    println!("base pairs: {}", pc.base_pairs().len());
    println!("apex arcs: {}", pc.arcs().len());
    println!("pairs both base and apex: {}", pc.conflicting_pairs().len());
    println!(
        "2-cycles in apex digraph: {}",
        digraph_two_cycles(&pc).len()
    );
    println!("unclassified pairs: {}", pc.unclassified_pairs().len());
    match find_vstar(&pc) {
        Some(v) => println!("first vertex with base, out and in degree: {v}"),
        None => println!("first vertex with base, out and in degree: none"),
    }
    println!("vertex base out in");
    for t in pc.tallies() {
        println!("{} {} {} {}", t.vertex, t.base, t.out, t.inn);
    }
    if let Some(path) = dot {
        run.write(&path, &pc.to_dot())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn prove(run: &mut Run, eps: Epsilon, file: &Path, json: Option<PathBuf>) -> Result<ExitCode> {
    let h = load(run, file)?;
    let outcome = prove_pipeline(&h, eps);
    match &outcome {
        PipelineOutcome::WalkFound { cert, provenance } => {
            println!("closed tight 10-walk {cert} (via {provenance}), verified");
            if let Some(path) = json {
                let body = serde_json::to_string(&CertificateFile::new(cert, *provenance))? + "\n";
                run.write(&path, &body)?;
            }
        }
        PipelineOutcome::HypothesisNotMet { pair, codegree, threshold } => match pair {
            Some((u, v)) => println!(
                "hypothesis not met: pair {u} {v} has codegree {codegree} < {threshold} = ⌈(1/3 + {eps}) n⌉"
            ),
            None => println!("hypothesis not met: fewer than two vertices"),
        },
        PipelineOutcome::TheoremViolation { classification } => {
            eprintln!("SOUNDNESS ALARM: hypothesis holds but no closed tight 10-walk was found");
            eprintln!("vertex base out in");
            for t in classification.tallies() {
                eprintln!("{} {} {} {}", t.vertex, t.base, t.out, t.inn);
            }
            eprint!("{}", classification.to_dot());
        }
    }
    Ok(ExitCode::from(outcome.exit_code() as u8))
}

fn emit_report(run: &mut Run, r: &SearchReport, out: &ReportOut) -> Result<()> {
    println!("n: {}", r.n);
    println!("len: {}", r.len);
    println!("mode: {}", r.mode.as_str());
    println!(
        "delta2: {}{}",
        r.delta2,
        if r.exact {
            " (exact)"
        } else {
            " (lower bound)"
        }
    );
    println!("gap: {}", r.gap());
    println!("edges: {}", r.witness.edge_count());
    println!("states visited: {}", r.stats.states_visited);
    println!("{}", r.freeness);
    if let Some(path) = &out.output {
        run.write(path, &serialize(&r.witness))?;
    }
    if let Some(path) = &out.json {
        run.write(path, &(serde_json::to_string_pretty(r)? + "\n"))?;
    }
    Ok(())
}

fn extremal(run: &mut Run, e: Extremal) -> Result<ExitCode> {
    match e {
        Extremal::Exhaustive { n, len, out } => {
            let r = exhaustive_small(n, len)?;
            emit_report(run, &r, &out)?;
        }
        Extremal::Anneal {
            n,
            len,
            iters,
            seed,
            restarts,
            start,
            out,
        } => {
            run.seed(seed);
            let start = match start {
                Start::Auto => StartState::best_for(len),
                Start::Construction => StartState::Construction,
                Start::Empty => StartState::Empty,
            };
            let cfg = AnnealConfig {
                restarts,
                ..AnnealConfig::new(iters, seed, start)
            };
            let r = local_search_max_codegree(n, len, &cfg)?;
            emit_report(run, &r, &out)?;
        }
        Extremal::ProbeC {
            n,
            len,
            budget,
            seed,
            output,
        } => {
            run.seed(seed);
            let rows = probe_constant_c(&n, len, budget, seed)?;
            let csv = probe_csv(&rows);
            run.write(&output, &csv)?;
            let dir = output.parent().unwrap_or(Path::new(""));
            for r in &rows {
                run.write(&dir.join(&r.witness_file), &serialize(&r.witness))?;
            }
            print!("{csv}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: Cli, run: &mut Run) -> Result<ExitCode> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?;
    }
    match cli.command {
        Command::Gen(g) => gen(run, g),
        Command::Stats { file } => {
            let h = load(run, &file)?;
            print!("{}", stats(&h)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Find(f) => find(run, f),
        Command::Count(Count::Walks { len, file }) => {
            let h = load(run, &file)?;
            let c = count_closed_tight_walks(&h, len)?;
            if c.saturated {
                println!("> {} (saturated)", u128::MAX);
            } else {
                println!("{}", c.count);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file, dot } => classify(run, &file, dot),
        Command::Prove {
            epsilon,
            file,
            json,
        } => prove(run, epsilon, &file, json),
        Command::Extremal(e) => extremal(run, e),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::iter::once("tightcycle".to_string())
        .chain(std::env::args().skip(1))
        .collect();
    let cli = Cli::parse();
    let mut run = Run::new(argv);
    match dispatch(cli, &mut run).and_then(|code| run.finish().map(|()| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
