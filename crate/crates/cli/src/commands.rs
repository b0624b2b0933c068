use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use facolor_core::claims::{run_all, HarnessOptions};
use facolor_core::constructions::{bouquet_two_c5, cycle, theta, worm_gadget, ConstructionError};
use facolor_core::format::{check_result, read_graph, write_dot, write_graph, CheckOutcome, DotColoring};
use facolor_core::solver::{solve_fp_edge_min, solve_fp_vertex_min, solve_worm};
use facolor_core::{PlaneGraph, Problem, ResultDocument, SearchConfig, SolveError, SolveResult, ThetaSpec};

use crate::args::{
    CheckArgs, Command, ExportCommand, GenCommand, InputArgs, MinArgs, OutputArgs, SearchArgs, SolveCommand,
    VerifyCommand,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_BUDGET: u8 = 70;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }

    fn data(message: impl ToString) -> Self {
        Failure { code: EXIT_DATA, message: message.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::BudgetExhausted { .. } => EXIT_BUDGET,
            SolveError::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::data(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|e| Failure::data(format!("stdin: {e}")))?;
    Ok(s)
}

fn load_graph(input: &InputArgs) -> Result<PlaneGraph, Failure> {
    let text = read_text(input.input.as_deref())?;
    let name = input.input.as_ref().map_or("stdin".into(), |p| p.display().to_string());
    read_graph(&text).map_err(|e| Failure::data(format!("{name}: {e}")))
}

fn load_result(path: &Path) -> Result<ResultDocument, Failure> {
    let text = read_text(Some(path))?;
    ResultDocument::parse(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::data(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::data(format!("stdout: {e}"))),
    }
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Gen(cmd) => generate(cmd),
        Command::Info(input) => info(&input),
        Command::Solve(cmd) => solve(cmd),
        Command::Check(args) => check(&args),
        Command::Export(ExportCommand::Dot { input, result, out }) => export_dot(&input, result.as_deref(), &out),
        Command::Verify(VerifyCommand::Paper { fast, workers }) => reproduce(fast, workers),
    }
}

fn generate(cmd: GenCommand) -> Outcome {
    let (g, out) = match cmd {
        GenCommand::Theta { i, j, k, multigraph, out } => {
            let spec = ThetaSpec::new(i, j, k);
            (theta(if multigraph { spec.multigraph() } else { spec })?, out)
        }
        GenCommand::BouquetC5 { out } => (bouquet_two_c5(), out),
        GenCommand::Cycle { n, out } => (cycle(n)?, out),
        GenCommand::WormGadget { n, out } => (worm_gadget(n)?, out),
        GenCommand::LineGraph { input, out } => {
            let host = load_graph(&input)?;
            (host.line_graph().map_err(Failure::data)?.graph, out)
        }
    };
    emit(&out, &write_graph(&g))?;
    Ok(EXIT_OK)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(input: &InputArgs) -> Outcome {
    let g = load_graph(input)?;
    let profile = g.connectivity_profile();
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", g.vertex_count());
    let _ = writeln!(s, "edges: {}", g.edge_count());
    let _ = writeln!(s, "faces: {}", g.face_count());
    let _ = writeln!(s, "euler: {} (genus {})", g.euler_characteristic(), g.genus());
    let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *degrees.entry(g.degree(v)).or_default() += 1;
    }
    let _ = writeln!(s, "max degree: {}", profile.max_degree);
    let _ = writeln!(s, "degrees: {}", histogram(&degrees));
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for f in g.faces() {
        *sizes.entry(f.darts.len()).or_default() += 1;
    }
    let _ = writeln!(s, "face sizes: {}", histogram(&sizes));
    let _ = writeln!(
        s,
        "connected: {}, 2-edge-connected: {}, 2-connected: {}",
        yes(profile.connected),
        yes(profile.two_edge_connected),
        yes(profile.two_connected)
    );
    for f in g.faces() {
        let walk: Vec<String> = f.vertices.iter().map(|&v| g.vertex_label(v)).collect();
        let _ = writeln!(s, "face {}: {}", f.id, walk.join(" "));
    }
    print!("{s}");
    Ok(EXIT_OK)
}

fn histogram(h: &BTreeMap<usize, usize>) -> String {
    h.iter().map(|(k, n)| format!("{k}x{n}")).collect::<Vec<_>>().join(" ")
}

fn search_config(search: &SearchArgs, cap: Option<usize>) -> SearchConfig {
    let mut cfg = SearchConfig::default().with_workers(search.workers).with_budget(search.budget);
    if let Some(c) = cap {
        cfg = cfg.with_cap(c);
    }
    if search.extended {
        cfg = cfg.extended();
    }
    cfg
}

fn report(g: &PlaneGraph, r: &SolveResult, out: &OutputArgs) -> Outcome {
    emit(out, &ResultDocument::from_result(g, r).to_json())?;
    Ok(if r.status.is_success() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn solve(cmd: SolveCommand) -> Outcome {
    match cmd {
        SolveCommand::FpEdge(args) => solve_min(&args, Problem::FpEdge),
        SolveCommand::FpVertex(args) => solve_min(&args, Problem::FpVertex),
        SolveCommand::Worm { input, rainbow, mono, colors, search, out } => {
            let g = load_graph(&input)?;
            let r = solve_worm(&g, rainbow, mono, &search_config(&search, colors))?;
            report(&g, &r, &out)
        }
    }
}

fn solve_min(args: &MinArgs, problem: Problem) -> Outcome {
    let g = load_graph(&args.input)?;
    let cfg = search_config(&args.search, args.max_k);
    let r = match problem {
        Problem::FpEdge => solve_fp_edge_min(&g, &cfg)?,
        _ => solve_fp_vertex_min(&g, &cfg)?,
    };
    report(&g, &r, &args.out)
}

fn check(args: &CheckArgs) -> Outcome {
    let g = load_graph(&args.input)?;
    let doc = load_result(&args.result)?;
    let outcome = check_result(&g, &doc, Some(args.problem.name())).map_err(Failure::data)?;
    match outcome {
        CheckOutcome::Valid => {
            println!("valid: {} coloring with {} colors", doc.problem, distinct(doc.witness.as_deref()));
            Ok(EXIT_OK)
        }
        CheckOutcome::Invalid(violations) => {
            println!("invalid: {} violation(s)", violations.len());
            for v in violations {
                println!("  {v}");
            }
            Ok(EXIT_NEGATIVE)
        }
        CheckOutcome::NoWitness(status) => {
            println!("no witness to check (status {status})");
            Ok(EXIT_NEGATIVE)
        }
        CheckOutcome::DigestMismatch { expected, found } => {
            Err(Failure::data(format!("result refers to graph {found}, but the input graph is {expected}")))
        }
        CheckOutcome::ProblemMismatch { expected, found } => {
            Err(Failure::data(format!("result is for {found}, not {}", expected.name())))
        }
    }
}

fn distinct(w: Option<&[u32]>) -> usize {
    let mut c = w.unwrap_or_default().to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn export_dot(input: &InputArgs, result: Option<&Path>, out: &OutputArgs) -> Outcome {
    let g = load_graph(input)?;
    let doc = result.map(load_result).transpose()?;
    let witness = doc.as_ref().and_then(|d| d.witness.as_deref().map(|w| (d.elements.as_str(), w)));
    let coloring = match witness {
        Some(("edges", w)) if w.len() == g.edge_count() => Some(DotColoring::Edges(w)),
        Some(("vertices", w)) if w.len() == g.vertex_count() => Some(DotColoring::Vertices(w)),
        Some(_) => return Err(Failure::data("result witness does not fit this graph")),
        None => None,
    };
    emit(out, &write_dot(&g, coloring))?;
    Ok(EXIT_OK)
}

fn reproduce(fast: bool, workers: usize) -> Outcome {
    if workers == 0 {
        return Err(Failure::usage("--workers must be at least 1"));
    }
    let opts = HarnessOptions { fast, workers, ..Default::default() };
    let reports = run_all(&opts);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", reports.len() - failed, reports.len());
    Ok(if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE })
}
