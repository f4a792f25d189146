//! Command-line front end: analyze / pack / generate / verify / reduce /
//! hunt over the cyclepack library. JSON goes to stdout, human diagnostics
//! to stderr. `pack` exit codes: 0 packing found, 1 input error,
//! 2 proved non-existent, 3 budget exhausted.

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use cyclepack::classify;
use cyclepack::extremal::{self, Family, FamilySpec};
use cyclepack::harness::{
    self, EnumMode, EnumerationSpec, RandomModel, TheoremId, VerificationReport, EXHAUSTIVE_MAX_N,
};
use cyclepack::packing::{self, SearchOutcome};
use cyclepack::reduce::{reduce_step, ReductionState, StepOutcome};
use cyclepack::{Graph, SearchLimits};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclepack", version, about = "Vertex-disjoint cycle packing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Limits {
    /// Largest n for which exact c(G)/t(G) computations run.
    #[arg(long, default_value_t = 40)]
    exact_limit: usize,
    /// Work-unit budget per exact search.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

impl Limits {
    fn to_search_limits(&self) -> SearchLimits {
        SearchLimits {
            exact_limit: self.exact_limit,
            node_budget: self.budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Degree profile, 2-core, and packing bounds of an edge-list file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Search for k disjoint cycles; prints a certificate on success.
    Pack {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Skip the heuristic-first pipeline and run the exact search only.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Emit a named construction in edge-list format.
    Generate {
        /// One of: clique_minus g0 g1 bipartite_sharp kky_exception wheel
        /// sk complete complete_bipartite cycle
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a theorem over enumerated graphs; JSON report on stdout.
    Verify {
        /// One of: CH DE H3K MAIN2K INDUCT T2KPLUST COR9 ONETRI LEM10
        theorem: String,
        #[arg(long)]
        k: usize,
        /// Induction parameter (INDUCT only).
        #[arg(long)]
        i: Option<i64>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        /// Random samples per n; exhaustive enumeration when omitted.
        #[arg(long)]
        samples: Option<u64>,
        /// Master seed (required; all randomness flows from it).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where counterexample graphs are written, if any turn up.
        #[arg(long, default_value = "counterexamples")]
        output_dir: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run the reduction pipeline, printing one line per applied rule.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Bookkeeping parameter (defaults to k).
        #[arg(long)]
        i: Option<i64>,
    },
    /// Sample the open range [4k+1, 19k-1] for counterexample candidates.
    Hunt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "counterexamples")]
        output_dir: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Graph::parse_edge_list(&text).map_err(|e| anyhow!("{}:{}", path.display(), e))
}

fn cmd_analyze(file: &Path, k: usize, limits: &SearchLimits) -> anyhow::Result<()> {
    let g = read_graph(file)?;
    let profile = classify::classify(&g, k)?;
    let (core, _, _) = g.two_core();
    let grown = cyclepack::augment::grow_good_packing(&g, k)?;
    let within_limit = g.n() <= limits.exact_limit;
    let t = if within_limit {
        Some(packing::max_triangle_count(&g, limits)?)
    } else {
        None
    };
    let heuristic = packing::heuristic_cycle_packing(&g, k, g.n() / 3 + 1)?;
    let c_exact = if within_limit {
        Some(packing::max_cycle_packing(&g, limits)?)
    } else {
        None
    };

    #[derive(serde::Serialize)]
    struct Report {
        n: usize,
        m: usize,
        delta: usize,
        h: usize,
        ell: usize,
        h_minus_ell: i64,
        two_core_size: usize,
        good_triangle_packing: usize,
        t: Option<usize>,
        c_lower: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        c_exact: Option<usize>,
    }
    let report = Report {
        n: g.n(),
        m: g.edge_count(),
        delta: g.min_degree(),
        h: profile.h,
        ell: profile.ell,
        h_minus_ell: profile.h_minus_ell(),
        two_core_size: core.n(),
        good_triangle_packing: grown.len(),
        t,
        c_lower: heuristic.len().max(c_exact.unwrap_or(0)),
        c_exact,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn cmd_pack(file: &Path, k: usize, exact: bool, limits: &SearchLimits) -> anyhow::Result<u8> {
    let g = read_graph(file)?;
    let outcome = if exact {
        packing::find_disjoint_cycles(&g, k, limits)
    } else {
        cyclepack::reduce::solve_with_reduction(&g, k, limits)?
    };
    match outcome {
        SearchOutcome::Found(p) => {
            assert!(p.verify(&g), "certificate must verify before printing");
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "cycles": p.cycles, "verified": true }))?
            );
            Ok(0)
        }
        SearchOutcome::NotExist => {
            println!("{}", serde_json::to_string_pretty(&json!({ "result": "not_exist" }))?);
            eprintln!("complete search: no {k} disjoint cycles exist");
            Ok(2)
        }
        SearchOutcome::Exhausted => {
            println!("{}", serde_json::to_string_pretty(&json!({ "result": "exhausted" }))?);
            eprintln!("search budget exhausted before an answer was proved");
            Ok(3)
        }
    }
}

fn cmd_generate(
    family: &str,
    k: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    output: Option<&Path>,
) -> anyhow::Result<()> {
    let family: Family = family.parse()?;
    let g = extremal::generate(&FamilySpec::new(family, k, n, m))?;
    let text = g.to_edge_list();
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn dump_counterexamples(
    report: &VerificationReport,
    dir: &Path,
) -> anyhow::Result<()> {
    if report.counterexamples.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for (idx, ce) in report.counterexamples.iter().enumerate() {
        let path = dir.join(format!(
            "{}_k{}_n{}_{}.edges",
            report.theorem, report.k, ce.n, idx
        ));
        fs::write(&path, &ce.graph)
            .with_context(|| format!("cannot write {}", path.display()))?;
        eprintln!("counterexample written to {}", path.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    k: usize,
    i: Option<i64>,
    min_n: usize,
    max_n: usize,
    samples: Option<u64>,
    seed: Option<u64>,
    jobs: usize,
    output_dir: &Path,
    limits: &SearchLimits,
) -> anyhow::Result<()> {
    let id: TheoremId = theorem.parse()?;
    let seed = seed.ok_or_else(|| anyhow!("verify requires --seed"))?;
    if min_n > max_n {
        return Err(anyhow!("--min-n {min_n} exceeds --max-n {max_n}"));
    }
    if samples.is_none() && max_n > EXHAUSTIVE_MAX_N {
        return Err(anyhow!(
            "exhaustive enumeration stops at n = {EXHAUSTIVE_MAX_N}; pass --samples for larger n"
        ));
    }
    let mut merged: Option<VerificationReport> = None;
    for n in min_n..=max_n {
        let mode = match samples {
            None => EnumMode::ExhaustiveLabeled,
            Some(count) => EnumMode::Random {
                count,
                model: RandomModel::DegreeTargeted {
                    k,
                    min_h_minus_ell: 2 * k as i64,
                },
                seed,
            },
        };
        let spec = EnumerationSpec { n, mode };
        let report = harness::verify_theorem(id, k, i, &spec, limits, jobs)?;
        merged = Some(match merged {
            None => report,
            Some(mut acc) => {
                acc.n_min = acc.n_min.min(report.n_min);
                acc.n_max = acc.n_max.max(report.n_max);
                acc.graphs_tested += report.graphs_tested;
                acc.hypothesis_satisfying += report.hypothesis_satisfying;
                acc.inconclusive += report.inconclusive;
                acc.counterexamples.extend(report.counterexamples);
                acc.wall_time_ms += report.wall_time_ms;
                acc
            }
        });
    }
    let report = merged.expect("at least one n");
    println!("{}", report.to_json());
    eprintln!(
        "{}: {} graphs, {} satisfied the hypothesis, {} counterexamples ({} ms)",
        report.theorem,
        report.graphs_tested,
        report.hypothesis_satisfying,
        report.counterexamples.len(),
        report.wall_time_ms
    );
    dump_counterexamples(&report, output_dir)?;
    Ok(())
}

fn cmd_reduce(file: &Path, k: usize, i: Option<i64>) -> anyhow::Result<()> {
    let g = read_graph(file)?;
    let max_steps = g.n() + g.edge_count() + k + 8;
    let mut state = ReductionState::new(g, k, i.unwrap_or(k as i64))?;
    for _ in 0..max_steps {
        match reduce_step(state) {
            StepOutcome::Applied(next) => {
                let rec = next.trace.records.last().expect("just applied");
                println!(
                    "{} | k={} i={} n={} m={}",
                    rec.describe(),
                    next.k,
                    next.i,
                    next.graph.n(),
                    next.graph.edge_count()
                );
                state = next;
            }
            StepOutcome::NoRuleApplies(s) => {
                eprintln!(
                    "fixed point: k={} i={} n={} m={}",
                    s.k,
                    s.i,
                    s.graph.n(),
                    s.graph.edge_count()
                );
                return Ok(());
            }
            StepOutcome::Stuck { state: s, rule } => {
                eprintln!("stuck: {rule} would push i below -3k (i={}, k={})", s.i, s.k);
                return Ok(());
            }
        }
    }
    eprintln!("step limit reached");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_hunt(
    k: usize,
    min_n: usize,
    max_n: usize,
    samples: u64,
    seed: Option<u64>,
    jobs: usize,
    output_dir: &Path,
    limits: &SearchLimits,
) -> anyhow::Result<()> {
    let seed = seed.ok_or_else(|| anyhow!("hunt requires --seed"))?;
    let report = harness::hunt_gap(k, (min_n, max_n), samples, seed, limits, jobs)?;
    println!("{}", report.to_json());
    eprintln!(
        "hunt k={k} n=[{min_n},{max_n}]: {} graphs, {} candidates, {} hits ({} ms)",
        report.graphs_tested,
        report.hypothesis_satisfying,
        report.counterexamples.len(),
        report.wall_time_ms
    );
    dump_counterexamples(&report, output_dir)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Analyze { file, k, limits } => {
            cmd_analyze(&file, k, &limits.to_search_limits())?;
            Ok(0)
        }
        Command::Pack { file, k, exact, limits } => {
            cmd_pack(&file, k, exact, &limits.to_search_limits())
        }
        Command::Generate { family, k, n, m, output } => {
            cmd_generate(&family, k, n, m, output.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            k,
            i,
            max_n,
            min_n,
            samples,
            seed,
            jobs,
            output_dir,
            limits,
        } => {
            cmd_verify(
                &theorem,
                k,
                i,
                min_n,
                max_n,
                samples,
                seed,
                jobs,
                &output_dir,
                &limits.to_search_limits(),
            )?;
            Ok(0)
        }
        Command::Reduce { file, k, i } => {
            cmd_reduce(&file, k, i)?;
            Ok(0)
        }
        Command::Hunt {
            k,
            min_n,
            max_n,
            samples,
            seed,
            jobs,
            output_dir,
            limits,
        } => {
            cmd_hunt(
                k,
                min_n,
                max_n,
                samples,
                seed,
                jobs,
                &output_dir,
                &limits.to_search_limits(),
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
