//! Command-line front end: packing, decisions, generators, verification.
//!
//! Exit codes: 0 success or "has k cycles", 1 "no" or a certificate or a
//! counterexample, 2 usage or input error, 3 undetermined within budget.
//! With several input graphs the largest code wins.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cyclepack::budget::SearchBudget;
use cyclepack::characterizer::{decide_with, DecideConfig, Verdict};
use cyclepack::graph::{
    degree_stats, independence_number, named_family, parse_edge_list, parse_graph6, FamilySpec,
    Graph,
};
use cyclepack::packer::{oracle_max_packing, Packer, PackerConfig, PackerResult};
use cyclepack::verifier::{
    enumerate_graphs, random_graphs, verify_with, GraphFilter, Mode, TheoremCheck, TheoremId,
    DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cyclepack",
    version,
    about = "Vertex-disjoint cycle packing toolkit"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Read graphs from this file instead of standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Node limit applied to every exact search.
    #[arg(long, global = true, env = cyclepack::budget::BUDGET_ENV)]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One graph6 string per line.
    Graph6,
    /// One `u v` pair per line; the whole input is one graph.
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find k disjoint cycles or print a certificate.
    Pack {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Decide whether k disjoint cycles exist, with a justification.
    Decide {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Print graphs in graph6.
    Gen(GenArgs),
    /// Check a theorem on the input graphs or an internal enumeration.
    Verify(VerifyArgs),
    /// Maximum number of disjoint cycles by exact search.
    Oracle {
        #[arg(long)]
        stop_at: Option<usize>,
    },
    /// Degree and independence statistics.
    Stats,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Named family, e.g. Y1, Y2, Gk, complete, wheel, petersen.
    #[arg(long, conflicts_with_all = ["enumerate", "random"])]
    family: Option<String>,
    /// All isomorphism classes on N vertices.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// COUNT seeded random graphs.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    k: Option<usize>,
    #[arg(short)]
    r: Option<usize>,
    #[arg(short)]
    s: Option<usize>,
    #[arg(short)]
    t: Option<usize>,
    #[command(flatten)]
    filter: FilterArgs,
    /// Edge probability for random graphs.
    #[arg(short, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct FilterArgs {
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    min_sigma2: Option<usize>,
}

impl FilterArgs {
    fn filter(&self) -> GraphFilter {
        GraphFilter {
            min_degree: self.min_degree,
            min_sigma2: self.min_sigma2,
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(short, default_value_t = 2)]
    k: usize,
    /// Check all isomorphism classes on N vertices instead of the input.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    #[command(flatten)]
    filter: FilterArgs,
    /// Check a seeded sample of this many graphs.
    #[arg(long, value_name = "COUNT")]
    sample: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn budget(global: &Global) -> SearchBudget {
    global
        .budget
        .map_or_else(SearchBudget::default, SearchBudget::uniform)
}

fn execute(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = &cli.global;
    let budget = budget(g);
    match &cli.command {
        Command::Gen(args) => generate(args, out),
        Command::Verify(args) => {
            let graphs = match args.enumerate {
                Some(n) => enumerate_graphs(n, &args.filter.filter())?,
                None => {
                    let filter = args.filter.filter();
                    read_graphs(g, input)?
                        .into_iter()
                        .filter(|h| filter.accepts(h))
                        .collect()
                }
            };
            let mode = match args.sample {
                Some(count) => Mode::Sampled {
                    seed: args.seed,
                    count,
                },
                None => Mode::Exhaustive,
            };
            let check = TheoremCheck {
                theorem: args.theorem,
                k: args.k,
            };
            let report = verify_with(graphs, check, mode, &budget);
            match g.output {
                Output::Text => write!(out, "{report}")?,
                Output::Machine => {
                    for line in report.machine_lines() {
                        writeln!(out, "{line}")?;
                    }
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_NO })
        }
        Command::Pack { k } => per_graph(g, input, out, |h| pack(h, *k as usize, budget, g.output)),
        Command::Decide { k } => {
            per_graph(g, input, out, |h| decide(h, *k as usize, budget, g.output))
        }
        Command::Oracle { stop_at } => {
            per_graph(g, input, out, |h| oracle(h, *stop_at, budget, g.output))
        }
        Command::Stats => per_graph(g, input, out, |h| stats(h, budget, g.output)),
    }
}

fn read_graphs(g: &Global, input: &mut dyn Read) -> anyhow::Result<Vec<Graph>> {
    let text = match &g.input {
        Some(path) => {
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
        }
        None => {
            let mut s = String::new();
            input
                .read_to_string(&mut s)
                .context("cannot read standard input")?;
            s
        }
    };
    match g.format {
        Format::Edgelist => Ok(vec![parse_edge_list(&text)?]),
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(i, line)| parse_graph6(line.trim()).with_context(|| format!("line {}", i + 1)))
            .collect(),
    }
}

/// Runs `f` on every input graph in parallel and prints the results in
/// input order. Text blocks for several graphs are separated by blank lines.
fn per_graph<F>(g: &Global, input: &mut dyn Read, out: &mut dyn Write, f: F) -> anyhow::Result<i32>
where
    F: Fn(&Graph) -> (i32, String) + Sync + Send,
{
    let graphs = read_graphs(g, input)?;
    if graphs.is_empty() {
        bail!("no input graphs");
    }
    let results: Vec<(i32, String)> = graphs.par_iter().map(f).collect();
    let mut code = EXIT_OK;
    for (i, (c, text)) in results.iter().enumerate() {
        if i > 0 && g.output == Output::Text {
            writeln!(out)?;
        }
        write!(out, "{text}")?;
        code = code.max(*c);
    }
    Ok(code)
}

fn join_cycle(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn pack(g: &Graph, k: usize, budget: SearchBudget, output: Output) -> (i32, String) {
    let packer = Packer::new(PackerConfig {
        budget,
        ..PackerConfig::default()
    });
    let (result, diagnostics) = match packer.run(g, k) {
        Ok(r) => r,
        Err(e) => return (EXIT_USAGE, format!("error: {e}\n")),
    };
    let machine = output == Output::Machine;
    match result {
        PackerResult::Packing(p) => {
            let text = if machine {
                let cycles: Vec<String> = p.cycles().iter().map(|c| join_cycle(c)).collect();
                format!("packing\t{}\n", cycles.join(","))
            } else {
                p.cycles()
                    .iter()
                    .map(|c| format!("{}\n", join_cycle(c)))
                    .collect()
            };
            (EXIT_OK, text)
        }
        PackerResult::IndependentSet(s) => {
            let sep = if machine { "\t" } else { ": " };
            (
                EXIT_NO,
                format!("independent-set{sep}{}\n", join_cycle(&s.to_vec())),
            )
        }
        PackerResult::Exceptional(kind) => {
            let sep = if machine { "\t" } else { ": " };
            (EXIT_NO, format!("exceptional{sep}{kind}\n"))
        }
        PackerResult::HypothesisViolation(v) => {
            let sep = if machine { "\t" } else { ": " };
            (EXIT_NO, format!("hypothesis-violation{sep}{v}\n"))
        }
        PackerResult::CandidateCounterexample { packing, .. } => {
            let code = if diagnostics.budget_hits.is_empty() && !diagnostics.cap_reached {
                EXIT_NO
            } else {
                EXIT_UNDETERMINED
            };
            let cycles: Vec<String> = packing.cycles().iter().map(|c| join_cycle(c)).collect();
            let text = if machine {
                format!(
                    "candidate-counterexample\t{}\t{diagnostics}\n",
                    cycles.join(",")
                )
            } else {
                format!(
                    "candidate-counterexample: {} of {k} cycles found\n{}diagnostics: {diagnostics}\n",
                    packing.len(),
                    cycles.iter().map(|c| format!("{c}\n")).collect::<String>()
                )
            };
            (code, text)
        }
    }
}

fn decide(g: &Graph, k: usize, budget: SearchBudget, output: Output) -> (i32, String) {
    let config = DecideConfig {
        budget,
        ..DecideConfig::default()
    };
    let d = decide_with(g, k, &config);
    let code = match d.verdict {
        Verdict::HasKCycles => EXIT_OK,
        Verdict::NoKCycles => EXIT_NO,
        Verdict::Unknown => EXIT_UNDETERMINED,
    };
    let steps: Vec<String> = d.justification.iter().map(ToString::to_string).collect();
    let text = match output {
        Output::Machine => {
            let rule = d
                .deciding_rule()
                .map_or("none".to_string(), |r| r.to_string());
            format!("{}\t{rule}\t{}\n", d.verdict, steps.join("; "))
        }
        Output::Text => {
            let mut s = format!("{}\n", d.verdict);
            for step in &d.justification {
                s.push_str(&format!(
                    "  {}{step}\n",
                    if step.applies { "=> " } else { "   " }
                ));
            }
            s
        }
    };
    (code, text)
}

fn oracle(
    g: &Graph,
    stop_at: Option<usize>,
    budget: SearchBudget,
    output: Output,
) -> (i32, String) {
    match oracle_max_packing(g, stop_at, budget.oracle) {
        Ok(m) => {
            let cycles: Vec<String> = m.cycles.iter().map(|c| join_cycle(c)).collect();
            let text = match output {
                Output::Machine => format!("{}\t{}\n", m.count, cycles.join(",")),
                Output::Text => format!(
                    "max disjoint cycles: {}{}\n{}",
                    m.count,
                    if stop_at.is_some_and(|s| m.count >= s) {
                        " (stopped early)"
                    } else {
                        ""
                    },
                    cycles.iter().map(|c| format!("{c}\n")).collect::<String>()
                ),
            };
            (EXIT_OK, text)
        }
        Err(e) => (EXIT_UNDETERMINED, format!("undetermined: {e}\n")),
    }
}

fn stats(g: &Graph, budget: SearchBudget, output: Output) -> (i32, String) {
    let s = degree_stats(g);
    let (alpha, code) = match independence_number(g, budget.independence) {
        Ok(set) => (set.size().to_string(), EXIT_OK),
        Err(_) => ("undetermined".to_string(), EXIT_UNDETERMINED),
    };
    let fields = [
        ("n", g.n().to_string()),
        ("m", g.edge_count().to_string()),
        ("delta", s.delta.to_string()),
        ("max_degree", s.max_degree.to_string()),
        ("sigma2", s.sigma2.to_string()),
        ("theta", s.theta.to_string()),
        ("alpha", alpha),
        ("canonical", g.canonical_code().to_string()),
    ];
    let text = match output {
        Output::Machine => {
            let parts: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}\n", parts.join("\t"))
        }
        Output::Text => fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    };
    (code, text)
}

fn generate(args: &GenArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let graphs = if let Some(name) = &args.family {
        vec![named_family(&family_spec(name, args)?)?]
    } else if let Some(n) = args.enumerate {
        enumerate_graphs(n, &args.filter.filter())?
    } else if let Some(count) = args.random {
        let n = args.n.ok_or_else(|| anyhow!("--random needs -n"))?;
        if !(0.0..=1.0).contains(&args.p) {
            bail!("edge probability must lie in [0, 1]");
        }
        let filter = args.filter.filter();
        random_graphs(args.seed, count, n..=n, args.p..=args.p)
            .into_iter()
            .filter(|g| filter.accepts(g))
            .collect()
    } else {
        bail!("one of --family, --enumerate or --random is required");
    };
    for g in graphs {
        writeln!(out, "{}", g.to_graph6())?;
    }
    Ok(EXIT_OK)
}

fn family_spec(name: &str, args: &GenArgs) -> anyhow::Result<FamilySpec> {
    let need =
        |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("family {name} needs -{flag}"));
    let spec = match name.to_ascii_lowercase().as_str() {
        "y1" => FamilySpec::Y1,
        "y2" => FamilySpec::Y2,
        "gk" => FamilySpec::Gk(need(args.k, "k")?),
        "gk-extended" => FamilySpec::GkExtended {
            r: need(args.r, "r")?,
            t: need(args.t, "t")?,
        },
        "c5-blowup" => FamilySpec::C5BlowupK3bar,
        "c5-blowup-extended" => FamilySpec::C5BlowupExtended(need(args.k, "k")?),
        "h-sharp" => FamilySpec::Hsharp(need(args.k, "k")?),
        "2kk-join-kk-bar" => FamilySpec::TwoKkJoinKkBar(need(args.k, "k")?),
        "wheel" => FamilySpec::Wheel(need(args.n, "n")?),
        "complete" => FamilySpec::CompleteK(need(args.n, "n")?),
        "complete-bipartite" => {
            FamilySpec::CompleteBipartite(need(args.s, "s")?, need(args.t, "t")?)
        }
        "cycle" => FamilySpec::Cycle(need(args.n, "n")?),
        "kkk-plus-kk" => FamilySpec::KkkPlusKk(need(args.k, "k")?),
        "empty" => FamilySpec::Empty(need(args.n, "n")?),
        "petersen" => FamilySpec::Petersen,
        _ => bail!("unknown family {name}"),
    };
    Ok(spec)
}
