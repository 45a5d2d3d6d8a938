//! Command-line front end.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generators::{
    cages, gen_girth_lowerbound, gen_random, gen_setcover_gadget, RandomMetric,
    DEFAULT_GADGET_EPSILON,
};
use crate::greedy::{
    greedy_t_spanner, search_with_limit, BicriteriaParams, DEFAULT_DELTA, DEFAULT_T_LIMIT,
};
use crate::instance::Instance;
use crate::metric::{approx_le, Edge, MetricGraph};
use crate::oracle::{
    brute_force_with_limit, check_girth_lemma, verify_main_lemma, OptimalSolution, UGraph,
    COMBINATION_LIMIT,
};
use crate::setcover::setcover_search_with_limit;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spanner-augment",
    version,
    about = "Add edges to a metric graph to lower its dilation"
)]
pub struct Cli {
    /// Worker threads for brute force and instance building.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report or instance here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Greedy bicriteria augmentation.
    AugmentGreedy(GreedyArgs),
    /// Set-cover augmentation.
    AugmentSetcover(SetCoverArgs),
    /// Dilation of the input graph.
    Dilation(InputArgs),
    /// Exhaustive optimum over k-edge augmentations.
    Oracle(OracleArgs),
    /// Greedy run, oracle, girth graph and the t ≤ |I| t* check in one report.
    Analyze(AnalyzeArgs),
    /// Write a generated instance.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Sample dense random graphs and check their girth.
    CheckGirthLemma(GirthLemmaArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct GreedyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Trade-off parameter; omit with --log-preset.
    #[arg(
        long,
        required_unless_present = "log_preset",
        conflicts_with = "log_preset"
    )]
    pub r: Option<f64>,
    /// Use r = log2(2k), giving f = 4.
    #[arg(long)]
    pub log_preset: bool,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    pub delta: f64,
    /// Override the sparsity factor f.
    #[arg(long)]
    pub f: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_T_LIMIT)]
    pub t_limit: f64,
}

#[derive(Debug, Args)]
pub struct SetCoverArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    pub delta: f64,
    #[arg(long, default_value_t = DEFAULT_T_LIMIT)]
    pub t_limit: f64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Refuse searches over more subsets than this.
    #[arg(long, default_value_t = COMBINATION_LIMIT)]
    pub limit: u128,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    pub delta: f64,
    /// Sparsity factor; defaults to the instance's annotation, then to the r-schedule.
    #[arg(long)]
    pub f: Option<f64>,
    /// Level to analyse; defaults to the largest level the search saw over the cap.
    #[arg(long)]
    pub t: Option<f64>,
    #[arg(long, default_value_t = COMBINATION_LIMIT)]
    pub limit: u128,
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Lower-bound instance from a high-girth cage.
    GirthLb {
        #[arg(long, value_parser = ["k33", "petersen", "heawood", "tutte-coxeter"])]
        cage: String,
        #[arg(long)]
        r: u32,
    },
    /// Set-cover reduction gadget.
    SetcoverGadget {
        /// Number of elements, named 1..=m in --sets.
        #[arg(long)]
        elements: usize,
        /// Sets separated by ';', elements by ',', e.g. "1;2,3".
        #[arg(long)]
        sets: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_GADGET_EPSILON)]
        epsilon: f64,
    },
    /// Random instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, value_enum, default_value_t = MetricKind::Euclidean)]
        metric: MetricKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricKind {
    Euclidean,
    HostGraph,
}

#[derive(Debug, Args)]
pub struct GirthLemmaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Post-hoc dilation of `G ∪ added`, computed from scratch.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verification {
    pub recomputed_dilation: Option<f64>,
    pub witness: Option<Edge>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: Option<String>,
    pub added_edges: Option<Vec<Edge>>,
    /// `null` when infinite.
    pub t_achieved: Option<f64>,
    pub parameters: Value,
    pub probes: Value,
    pub wall_time_s: f64,
    pub verification: Option<Verification>,
    pub details: Value,
}

pub enum Output {
    Report(Box<RunReport>),
    Instance(Instance),
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn verify(g: &MetricGraph, added: &[Edge], claimed: f64) -> Result<Verification> {
    let rep = g.with_edges(added).dilation();
    let matches = approx_le(rep.dilation, claimed) && approx_le(claimed, rep.dilation);
    if !matches {
        return Err(Error::VerificationFailure(format!(
            "recomputed dilation {} differs from reported {claimed}",
            rep.dilation
        )));
    }
    Ok(Verification {
        recomputed_dilation: finite(rep.dilation),
        witness: rep.witness,
        matches,
    })
}

fn load(path: &Path) -> Result<(Instance, String)> {
    let bytes = std::fs::read(path)?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|e| Error::Instance(e.to_string()))?;
    Ok((Instance::from_json(&text)?, digest))
}

fn parse_sets(spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split(';')
        .map(|set| {
            set.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(e) if e >= 1 => Ok(e - 1),
                    _ => Err(Error::InvalidParam(format!("--sets: bad element \"{s}\""))),
                })
                .collect()
        })
        .collect()
}

fn optimum(inst: &Instance, k: usize, limit: u128) -> Result<OptimalSolution> {
    match brute_force_with_limit(&inst.graph, k, limit) {
        Err(Error::TooLarge {
            combinations,
            limit,
        }) => {
            let reference = inst
                .annotations
                .as_ref()
                .and_then(|a| a.reference_edges.clone())
                .filter(|r| r.len() <= k)
                .ok_or(Error::TooLarge {
                    combinations,
                    limit,
                })?;
            info!(
                "exhaustive search too large ({combinations} subsets); using the reference edges"
            );
            OptimalSolution::from_reference(&inst.graph, reference)
        }
        other => other,
    }
}

fn report(command: &[String], digest: Option<String>, started: Instant) -> RunReport {
    RunReport {
        command: command.to_vec(),
        input_digest: digest,
        added_edges: None,
        t_achieved: None,
        parameters: Value::Null,
        probes: Value::Array(Vec::new()),
        wall_time_s: 0.0,
        verification: None,
        details: Value::Null,
    }
    .timed(started)
}

impl RunReport {
    fn timed(mut self, started: Instant) -> Self {
        self.wall_time_s = started.elapsed().as_secs_f64();
        self
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

pub fn execute(cli: &Cli, argv: &[String]) -> Result<Output> {
    let started = Instant::now();
    let out = match &cli.command {
        Command::AugmentGreedy(a) => {
            let (inst, digest) = load(&a.input)?;
            let mut params = match a.r {
                Some(r) => BicriteriaParams::new(r, a.k, a.delta)?,
                None => BicriteriaParams::log_preset(a.k, a.delta)?,
            };
            if let Some(f) = a.f {
                params = params.with_sparsity(f)?;
            }
            let res = search_with_limit(&inst.graph, &params, a.t_limit)?;
            let verification = verify(&inst.graph, &res.added, res.t_achieved)?;
            let mut rep = report(argv, Some(digest), started);
            rep.added_edges = Some(res.added.clone());
            rep.t_achieved = finite(res.t_achieved);
            rep.parameters = json!({
                "r": params.r, "k": params.k, "delta": params.delta, "f": params.f, "g": params.g,
                "edge_cap": params.edge_cap, "grid_g": params.grid_g(),
            });
            rep.probes = to_value(&res.probes);
            rep.verification = Some(verification);
            rep.details = json!({"t_level": res.t_level, "t_bracket": res.t_bracket});
            Output::Report(Box::new(rep.timed(started)))
        }
        Command::AugmentSetcover(a) => {
            let (inst, digest) = load(&a.input)?;
            let res = setcover_search_with_limit(&inst.graph, a.k, a.delta, a.t_limit)?;
            let verification = verify(&inst.graph, &res.added, res.t_achieved)?;
            let mut rep = report(argv, Some(digest), started);
            rep.added_edges = Some(res.added.clone());
            rep.t_achieved = finite(res.t_achieved);
            rep.parameters = json!({"k": res.k, "delta": res.delta, "threshold": res.threshold});
            rep.probes = to_value(&res.probes);
            rep.verification = Some(verification);
            rep.details = json!({
                "cover_size": res.cover_size, "threshold": res.threshold,
                "t_level": res.t_level, "t_bracket": res.t_bracket,
            });
            Output::Report(Box::new(rep.timed(started)))
        }
        Command::Dilation(a) => {
            let (inst, digest) = load(&a.input)?;
            let d = inst.graph.dilation();
            let mut rep = report(argv, Some(digest), started);
            rep.t_achieved = finite(d.dilation);
            rep.details = json!({
                "dilation": finite(d.dilation),
                "connected": d.is_finite(),
                "witness": d.witness,
                "n": inst.graph.n(),
                "edges": inst.graph.edges().len(),
            });
            Output::Report(Box::new(rep.timed(started)))
        }
        Command::Oracle(a) => {
            let (inst, digest) = load(&a.input)?;
            let opt = brute_force_with_limit(&inst.graph, a.k, a.limit)?;
            let verification = verify(&inst.graph, &opt.s_star, opt.t_star)?;
            let mut rep = report(argv, Some(digest), started);
            rep.added_edges = Some(opt.s_star.clone());
            rep.t_achieved = finite(opt.t_star);
            rep.parameters = json!({"k": a.k, "limit": a.limit.to_string()});
            rep.verification = Some(verification);
            rep.details = to_value(&opt.summary());
            Output::Report(Box::new(rep.timed(started)))
        }
        Command::Analyze(a) => analyze(a, argv, started)?,
        Command::Generate(g) => Output::Instance(generate(g)?),
        Command::CheckGirthLemma(a) => {
            let res = check_girth_lemma(a.n, a.r, a.trials, a.seed)?;
            let mut rep = report(argv, None, started);
            rep.parameters = json!({"n": a.n, "r": a.r, "trials": a.trials, "seed": a.seed});
            rep.details = to_value(&res);
            Output::Report(Box::new(rep.timed(started)))
        }
    };
    Ok(out)
}

fn analyze(a: &AnalyzeArgs, argv: &[String], started: Instant) -> Result<Output> {
    let (inst, digest) = load(&a.input)?;
    let g = &inst.graph;
    let mut params = BicriteriaParams::new(a.r, a.k, a.delta)?;
    if let Some(f) = a.f.or(inst.annotations.as_ref().and_then(|x| x.sparsity)) {
        params = params.with_sparsity(f)?;
    }
    let res = search_with_limit(g, &params, DEFAULT_T_LIMIT)?;
    let verification = verify(g, &res.added, res.t_achieved)?;
    let opt = optimum(&inst, a.k, a.limit)?;

    let mut rep = report(argv, Some(digest), started);
    rep.added_edges = Some(res.added.clone());
    rep.t_achieved = finite(res.t_achieved);
    rep.parameters = json!({
        "r": params.r, "k": params.k, "delta": params.delta, "f": params.f, "g": params.g,
        "edge_cap": params.edge_cap,
    });
    rep.probes = to_value(&res.probes);
    rep.verification = Some(verification);

    let t = a.t.or(res.t_bracket);
    let lemma = match t {
        Some(t) => {
            let trace = greedy_t_spanner(g, t, Some(params.edge_cap));
            let (h, lemma) = verify_main_lemma(g, &opt, &trace, params.edge_cap)?;
            json!({
                "t": t,
                "girth_graph": {
                    "vertices": h.vertex_count(),
                    "edges": h.edges,
                    "missing": h.missing,
                    "girth": h.girth(),
                },
                "report": lemma,
                "passes": true,
            })
        }
        None => json!({"t": null, "note": "the greedy 1-spanner already fits the cap"}),
    };
    rep.details = json!({
        "t_level": res.t_level,
        "t_bracket": res.t_bracket,
        "optimum": opt.summary(),
        "bracket_within_g": res.t_bracket.map(|t| approx_le(t, params.g * opt.t_star)),
        "achieved_within_grid_g": approx_le(res.t_achieved, params.grid_g() * opt.t_star),
        "lemma": lemma,
    });
    Ok(Output::Report(Box::new(rep.timed(started))))
}

fn generate(cmd: &GenerateCommand) -> Result<Instance> {
    match cmd {
        GenerateCommand::GirthLb { cage, r } => {
            let h: UGraph = cages::by_name(cage)
                .ok_or_else(|| Error::InvalidParam(format!("--cage: unknown graph \"{cage}\"")))?;
            Ok(gen_girth_lowerbound(&h, *r)?.to_instance())
        }
        GenerateCommand::SetcoverGadget {
            elements,
            sets,
            k,
            epsilon,
        } => Ok(gen_setcover_gadget(*elements, &parse_sets(sets)?, *k, *epsilon)?.to_instance()),
        GenerateCommand::Random {
            n,
            density,
            metric,
            seed,
        } => {
            let kind = match metric {
                MetricKind::Euclidean => RandomMetric::Euclidean,
                MetricKind::HostGraph => RandomMetric::HostGraph,
            };
            let mut inst = Instance::new(gen_random(*n, *density, kind, *seed)?);
            inst.annotations = Some(crate::instance::Annotations {
                family: Some("random".into()),
                ..Default::default()
            });
            Ok(inst)
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NoFeasibleT { .. } | Error::TooLarge { .. } => EXIT_INFEASIBLE,
        Error::VerificationFailure(_) | Error::LemmaViolation { .. } => EXIT_FAILURE,
        _ => EXIT_INVALID,
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}

/// Parse `argv`, run, print, and return the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: --threads: {e}");
            return EXIT_INVALID;
        }
    }
    let result = execute(&cli, &argv).and_then(|out| {
        let text = match out {
            Output::Report(rep) => serde_json::to_string_pretty(&rep)?,
            Output::Instance(inst) => inst.to_json(),
        };
        emit(&text, cli.output.as_deref())
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_parse_one_based() {
        assert_eq!(parse_sets("1;2,3").unwrap(), vec![vec![0], vec![1, 2]]);
        assert_eq!(parse_sets("1;").unwrap(), vec![vec![0], vec![]]);
        assert!(parse_sets("0").is_err());
        assert!(parse_sets("a").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::NoFeasibleT { limit: 1.0 }), 3);
        assert_eq!(
            exit_code(&Error::TooLarge {
                combinations: 2,
                limit: 1
            }),
            3
        );
        assert_eq!(exit_code(&Error::InvalidParam("x".into())), 2);
        assert_eq!(exit_code(&Error::VerificationFailure("x".into())), 1);
    }

    #[test]
    fn usage_errors_exit_two() {
        let argv = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
        assert_eq!(run(argv("spanner-augment frobnicate")), 2);
        assert_eq!(run(argv("spanner-augment oracle --k 2")), 2);
        assert_eq!(
            run(argv("spanner-augment augment-greedy --input x.json --k 1")),
            2
        );
    }
}
