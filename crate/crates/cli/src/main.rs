use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use multisat::report::{graph_from_json, graph_to_json, ReportJson};
use multisat::{
    brute_force_sat, build, decode_graph6, density_profile, encode_graph6, general_bound_formula,
    random_greedy_upper_bound, sat_k3_formula, size_formula, verify_saturated, ConstructionKind,
    ConstructionSpec, Error, Host, SaturationReport, SearchBudget, Subgraph,
};

mod grid;

use grid::IntList;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Exit {
    Ok = 0,
    NotSaturated = 1,
    ContainsKt = 2,
    Parameter = 3,
    Budget = 4,
    Io = 5,
}

impl Exit {
    fn of_report(r: &SaturationReport) -> Self {
        if !r.kt_free {
            Exit::ContainsKt
        } else if !r.is_saturated {
            Exit::NotSaturated
        } else {
            Exit::Ok
        }
    }

    fn worst(self, other: Exit) -> Exit {
        // freeness failures outrank maximality failures
        let rank = |e: Exit| match e {
            Exit::Ok => 0,
            Exit::NotSaturated => 1,
            Exit::ContainsKt => 2,
            _ => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: Exit,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::MultipartiteViolation(..) => Exit::Io,
            _ => Exit::Parameter,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: Exit::Io,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<Exit, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "multisat", version, about = "K_t-saturated subgraphs of K_k^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction, print it, and self-verify it.
    Build(BuildArgs),
    /// Verify a graph (graph6 or edge-list JSON) against a host and t.
    Verify(VerifyArgs),
    /// Evaluate the closed-form size formulas.
    Formulas(FormulaArgs),
    /// CSV comparison of formula values, built sizes and verdicts over a grid.
    Table(TableArgs),
    /// Exact sat(K_t, K_k^n) by exhaustive search on a tiny host.
    Exact(ExactArgs),
    /// Randomized greedy upper bound on sat(K_t, K_k^n).
    Heuristic(HeuristicArgs),
    /// Part-pair edge counts and densities.
    Density(DensityArgs),
}

#[derive(Args, Debug)]
struct Jobs {
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: ConstructionKind,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Clique order; fixed at 3 for g1 and g2.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    #[arg(long)]
    no_verify: bool,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Input file; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Also evaluate the K_t constructions for this t.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Comma-separated kinds; defaults to all six.
    #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
    kind: Vec<ConstructionKind>,
    /// Values or inclusive ranges, e.g. `3..10` or `3,5,7`.
    #[arg(long, default_value = "3..10")]
    k: IntList,
    #[arg(long, default_value = "2..6")]
    n: IntList,
    #[arg(long, default_value = "3..6")]
    t: IntList,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    no_verify: bool,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    max_subsets: Option<u64>,
    #[arg(long)]
    max_seconds: Option<f64>,
    /// Largest host edge count accepted for enumeration.
    #[arg(long, default_value_t = 30)]
    edge_cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args, Debug)]
struct HeuristicArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 64)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args, Debug)]
struct DensityArgs {
    /// Construction to profile; omit to read a graph with --input.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<ConstructionKind>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, conflicts_with = "kind")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    no_verify: bool,
}

fn parse_kind(s: &str) -> Result<ConstructionKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Parameter } else { Exit::Ok };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}

fn run(cmd: Command, out: &mut dyn Write) -> CliResult {
    let jobs = match &cmd {
        Command::Build(a) => a.jobs.jobs,
        Command::Verify(a) => a.jobs.jobs,
        Command::Table(a) => a.jobs.jobs,
        Command::Exact(a) => a.jobs.jobs,
        Command::Heuristic(a) => a.jobs.jobs,
        Command::Formulas(_) | Command::Density(_) => None,
    };
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Error::ParameterDomain {
                name: "jobs",
                value: 0,
                bound: "jobs >= 1".into(),
            }
            .into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure {
                code: Exit::Io,
                message: e.to_string(),
            })?;
    }
    match cmd {
        Command::Build(a) => cmd_build(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Formulas(a) => cmd_formulas(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Exact(a) => cmd_exact(a, out),
        Command::Heuristic(a) => cmd_heuristic(a, out),
        Command::Density(a) => cmd_density(a, out),
    }
}

fn spec_from(kind: ConstructionKind, k: usize, n: usize, t: Option<usize>) -> Result<ConstructionSpec, Failure> {
    let t = match (kind.fixed_t(), t) {
        (Some(ft), None) => ft,
        (_, Some(t)) => t,
        (None, None) => {
            return Err(Failure {
                code: Exit::Parameter,
                message: format!("--t is required for {kind}"),
            })
        }
    };
    Ok(ConstructionSpec::new(kind, k, n, t)?)
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p)?,
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Accepts a graph6 line or an edge-list JSON document.
fn parse_graph(text: &str, host: Host) -> Result<Subgraph, Failure> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(graph_from_json(trimmed, Some(host))?)
    } else {
        let line = trimmed.lines().next().unwrap_or("");
        Ok(decode_graph6(line, host)?)
    }
}

fn write_edges_csv(g: &Subgraph, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "u,v")?;
    for e in g.edges() {
        writeln!(out, "{},{}", e.u(), e.v())?;
    }
    Ok(())
}

fn cmd_build(a: BuildArgs, out: &mut dyn Write) -> CliResult {
    let spec = spec_from(a.kind, a.k, a.n, a.t)?;
    let art = build(&spec)?;
    let formula = size_formula(&spec).ok();
    let report = if a.no_verify {
        None
    } else {
        Some(verify_saturated(&art.graph, spec.t)?)
    };
    let g = &art.graph;
    match a.format {
        Format::Graph6 | Format::Csv => {
            if a.format == Format::Graph6 {
                writeln!(out, "{}", encode_graph6(g))?;
            } else {
                write_edges_csv(g, out)?;
            }
            eprintln!(
                "{spec}: |E| = {}, |S| = {}, formula = {}, saturated = {}",
                g.edge_count(),
                art.hubs.len(),
                formula.map_or("n/a".to_string(), |f| f.to_string()),
                report.as_ref().map_or("unchecked".to_string(), |r| r.is_saturated.to_string())
            );
        }
        Format::Json => {
            let doc = json!({
                "spec": spec,
                "edge_count": g.edge_count(),
                "hub_count": art.hubs.len(),
                "hubs": art.hubs,
                "formula": formula,
                "removed": art.removed,
                "completion_edges": art.completion_edges,
                "notes": art.notes,
                "graph6": encode_graph6(g),
                "graph": graph_to_json(g),
                "report": report.as_ref().map(|r| ReportJson::new(g, r)),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Text => {
            let h = g.host();
            writeln!(out, "construction  {spec}")?;
            writeln!(out, "edges         {}", g.edge_count())?;
            if let Some(f) = formula {
                writeln!(out, "formula       {f}")?;
            }
            let hubs: Vec<String> = art.hubs.iter().map(|&v| h.label(v)).collect();
            writeln!(out, "hubs ({})      {}", art.hubs.len(), hubs.join(" "))?;
            if !art.completion_edges.is_empty() {
                writeln!(out, "completion    {} edges", art.completion_edges.len())?;
            }
            for note in &art.notes {
                writeln!(out, "note          {note}")?;
            }
            if let Some(r) = &report {
                writeln!(out, "saturated     {}", r.is_saturated)?;
            }
            writeln!(out, "graph6        {}", encode_graph6(g))?;
        }
    }
    Ok(report.as_ref().map_or(Exit::Ok, Exit::of_report))
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult {
    let host = Host::new(a.k, a.n)?;
    let text = read_input(a.input.as_ref())?;
    let g = parse_graph(&text, host)?;
    let report = verify_saturated(&g, a.t)?;
    match a.format {
        Format::Text => {
            writeln!(out, "host          K_{}^{}", a.k, a.n)?;
            writeln!(out, "t             {}", report.t)?;
            writeln!(out, "edges         {}", g.edge_count())?;
            writeln!(out, "kt_free       {}", report.kt_free)?;
            if let Some(w) = &report.witness {
                let labels: Vec<String> = w.vertices.iter().map(|&v| host.label(v)).collect();
                writeln!(out, "witness       {}", labels.join(" "))?;
            }
            writeln!(out, "checked       {}", report.missing_checked)?;
            writeln!(out, "non-completing {}", report.non_completing.len())?;
            for e in &report.non_completing {
                writeln!(out, "  {} {}", host.label(e.u()), host.label(e.v()))?;
            }
            writeln!(out, "saturated     {}", report.is_saturated)?;
        }
        _ => {
            let doc = ReportJson::new(&g, &report);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
    }
    Ok(Exit::of_report(&report))
}

fn cmd_formulas(a: FormulaArgs, out: &mut dyn Write) -> CliResult {
    let (value, argmin) = sat_k3_formula(a.k, a.n)?;
    let g1 = size_formula(&ConstructionSpec::g1(a.k, a.n)?)?;
    let g2 = size_formula(&ConstructionSpec::g2(a.k, a.n)?)?;
    let mut doc = json!({
        "k": a.k,
        "n": a.n,
        "g1": g1,
        "g2": g2,
        "sat_k3": { "value": value, "argmin": argmin },
    });
    if let Some(t) = a.t {
        let gk = ConstructionSpec::new(ConstructionKind::Gknt, a.k, a.n, t)
            .and_then(|s| size_formula(&s))
            .ok();
        let hk = ConstructionSpec::new(ConstructionKind::Hknt, a.k, a.n, t)
            .and_then(|s| size_formula(&s))
            .ok();
        doc["t"] = json!(t);
        doc["gknt"] = json!(gk);
        doc["hknt"] = json!(hk);
        doc["general_bound"] = json!(general_bound_formula(a.k, a.n, t).ok());
    }
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?,
        _ => {
            writeln!(out, "|G1| = 2kn + n^2 - 4n - 1 = {g1}")?;
            writeln!(out, "|G2| = 3kn - 3n - 6     = {g2}")?;
            writeln!(out, "sat(K3) formula = {value} (argmin {argmin:?})")?;
            if let Some(t) = a.t {
                let show = |v: &serde_json::Value| {
                    v.as_u64().map_or("inadmissible".to_string(), |x| x.to_string())
                };
                writeln!(out, "|G_{{k,n,{t}}}| = {}", show(&doc["gknt"]))?;
                writeln!(out, "|H_{{k,n,{t}}}| = {}", show(&doc["hknt"]))?;
                writeln!(out, "general bound = {}", show(&doc["general_bound"]))?;
            }
        }
    }
    Ok(Exit::Ok)
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> CliResult {
    let kinds = if a.kind.is_empty() {
        ConstructionKind::ALL.to_vec()
    } else {
        a.kind.clone()
    };
    let rows = grid::table_rows(&kinds, &a.k.0, &a.n.0, &a.t.0, !a.no_verify)?;
    let mut exit = Exit::Ok;
    for r in &rows {
        exit = exit.worst(match r.verdict {
            None | Some((_, true)) => Exit::Ok,
            Some((false, _)) => Exit::ContainsKt,
            Some((true, false)) => Exit::NotSaturated,
        });
    }
    match a.format {
        Format::Json => {
            let docs: Vec<_> = rows.iter().map(grid::Row::to_json).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&docs).expect("json"))?;
        }
        _ => {
            writeln!(out, "kind,k,n,t,formula,built,verified")?;
            for r in &rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
    }
    Ok(exit)
}

fn cmd_exact(a: ExactArgs, out: &mut dyn Write) -> CliResult {
    let host = Host::new(a.k, a.n)?;
    let budget = SearchBudget {
        edge_cap: a.edge_cap,
        max_subsets: a.max_subsets,
        max_seconds: a.max_seconds,
        prune: true,
    };
    let r = brute_force_sat(&host, a.t, &budget)?;
    match a.format {
        Format::Json => {
            let doc = json!({
                "host": { "k": a.k, "n": a.n },
                "t": a.t,
                "min_size": r.min_size,
                "witness": r.witness.as_ref().map(graph_to_json),
                "witness_graph6": r.witness.as_ref().map(encode_graph6),
                "subsets_examined": r.subsets_examined,
                "sizes_exhausted": r.sizes_exhausted,
                "wall_budget_hit": r.wall_budget_hit,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Graph6 => {
            if let Some(w) = &r.witness {
                writeln!(out, "{}", encode_graph6(w))?;
            }
        }
        _ => {
            let show = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
            writeln!(out, "host              K_{}^{}", a.k, a.n)?;
            writeln!(out, "t                 {}", a.t)?;
            writeln!(out, "min_size          {}", show(r.min_size))?;
            writeln!(out, "subsets_examined  {}", r.subsets_examined)?;
            writeln!(out, "sizes_exhausted   {}", show(r.sizes_exhausted))?;
            writeln!(out, "budget_hit        {}", r.wall_budget_hit)?;
            if let Some(w) = &r.witness {
                writeln!(out, "witness           {}", encode_graph6(w))?;
            }
        }
    }
    Ok(if r.wall_budget_hit { Exit::Budget } else { Exit::Ok })
}

fn cmd_heuristic(a: HeuristicArgs, out: &mut dyn Write) -> CliResult {
    let host = Host::new(a.k, a.n)?;
    let r = random_greedy_upper_bound(&host, a.t, a.trials, a.seed)?;
    match a.format {
        Format::Json => {
            let doc = json!({
                "host": { "k": a.k, "n": a.n },
                "t": a.t,
                "trials": a.trials,
                "seed": a.seed,
                "best_size": r.best_size,
                "best_trial": r.best_trial,
                "best_graph6": encode_graph6(&r.best_graph),
                "per_trial_sizes": r.per_trial_sizes,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Graph6 => writeln!(out, "{}", encode_graph6(&r.best_graph))?,
        Format::Csv => {
            writeln!(out, "trial,size")?;
            for (i, s) in r.per_trial_sizes.iter().enumerate() {
                writeln!(out, "{i},{s}")?;
            }
        }
        Format::Text => {
            let min = r.best_size;
            let max = r.per_trial_sizes.iter().max().copied().unwrap_or(min);
            let mean = r.per_trial_sizes.iter().sum::<usize>() as f64 / r.per_trial_sizes.len() as f64;
            writeln!(out, "host        K_{}^{}", a.k, a.n)?;
            writeln!(out, "t           {}", a.t)?;
            writeln!(out, "trials      {} (seed {})", a.trials, a.seed)?;
            writeln!(out, "best        {min} (trial {})", r.best_trial)?;
            writeln!(out, "worst       {max}")?;
            writeln!(out, "mean        {mean:.2}")?;
            writeln!(out, "per kn      {:.4}", min as f64 / (a.k * a.n) as f64)?;
            writeln!(out, "graph6      {}", encode_graph6(&r.best_graph))?;
        }
    }
    Ok(Exit::Ok)
}

fn cmd_density(a: DensityArgs, out: &mut dyn Write) -> CliResult {
    let host = Host::new(a.k, a.n)?;
    let mut exit = Exit::Ok;
    let g = match a.kind {
        Some(kind) => {
            let spec = spec_from(kind, a.k, a.n, a.t)?;
            let art = build(&spec)?;
            if !a.no_verify {
                exit = Exit::of_report(&verify_saturated(&art.graph, spec.t)?);
            }
            art.graph
        }
        None => parse_graph(&read_input(a.input.as_ref())?, host)?,
    };
    let rows = density_profile(&g);
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json"))?,
        _ => {
            writeln!(out, "i,j,edges,density")?;
            for r in &rows {
                writeln!(out, "{},{},{},{:.6}", r.i, r.j, r.edges, r.density)?;
            }
        }
    }
    Ok(exit)
}
