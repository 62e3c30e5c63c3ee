//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a checked solution is infeasible or a
//! lemma check is not verified, 2 on input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::geometry::{SegmentSet, Subdivision};
use crate::io::{
    format_segments, from_json, generate, instance_hash, parse_formula, parse_segments, render_svg, to_pretty_json,
    GeneratorSpec, Overlay, ReductionReport, SolutionDocument,
};
use crate::reductions::{build_reduction, verify_lemma, ConverseStatus};
use crate::solvers::{
    exact_mds, exact_mis, exact_stab, greedy_mds, greedy_mis, greedy_stab, local_search_stab, verify_solution,
    FaceFilter, LocalSearchConfig, Problem, SearchBudget, Solution,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rectsub", version, about = "Stabbing, independent and dominating face sets of rectilinear subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the subdivision of a .segs file and print a summary.
    Build(InputArgs),
    /// Stab faces with vertices.
    Stab(SolveArgs),
    /// Maximum independent set of faces.
    Mis(SolveArgs),
    /// Minimum dominating set of faces.
    Mds(SolveArgs),
    /// Compile a formula into a hardness instance.
    Reduce(ReduceArgs),
    /// Check the satisfiable-iff-target-size correspondence exhaustively.
    VerifyLemma(LemmaArgs),
    /// Render a subdivision, optionally with a solution, as SVG.
    Render(RenderArgs),
    /// Generate an instance.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Segment file.
    input: PathBuf,
    /// Write output here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Greedy,
    Exact,
    Local,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Filter {
    All,
    Rect,
}

impl From<Filter> for FaceFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::All => FaceFilter::All,
            Filter::Rect => FaceFilter::Rect,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProblemArg {
    Stab,
    Mis,
    Mds,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Stab => Problem::Stab,
            ProblemArg::Mis => Problem::Mis,
            ProblemArg::Mds => Problem::Mds,
        }
    }
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Branch-and-bound node limit.
    #[arg(long, default_value_t = 5_000_000)]
    node_limit: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 30.0)]
    time_limit: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, String> {
        if self.node_limit == 0 || !self.time_limit.is_finite() || self.time_limit <= 0.0 {
            return Err("budget limits must be positive".into());
        }
        Ok(SearchBudget::new(self.node_limit, Duration::from_secs_f64(self.time_limit)))
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, value_enum, default_value = "greedy")]
    algo: Algo,
    /// Which bounded faces the problem ranges over.
    #[arg(long, value_enum, default_value = "all")]
    faces: Filter,
    /// Swap size for local search.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Check this solution document instead of solving.
    #[arg(long, value_name = "SOLUTION")]
    verify: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// Formula document.
    input: PathBuf,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long, value_enum, default_value = "all")]
    variant: Filter,
    /// Segment file to write; stdout if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the manifest/target report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long, value_enum, default_value = "all")]
    variant: Filter,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(flatten)]
    io: InputArgs,
    /// Solution document to overlay.
    #[arg(long)]
    solution: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random guillotine partition of a square.
    Guillotine {
        #[arg(long)]
        rooms: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lattice of unit squares.
    Grid {
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        rows: usize,
    },
    /// Isolated variable gadget.
    Gadget {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "rect")]
        variant: Filter,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_segments(path: &Path) -> Result<(SegmentSet, Subdivision), Failure> {
    let set = parse_segments(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let sub = Subdivision::build(&set).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Ok((set, sub))
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(input),
    }
}

#[derive(Serialize)]
struct FaceSummary {
    id: usize,
    cells: usize,
    rectangle: bool,
    bounds: [i64; 4],
}

#[derive(Serialize)]
struct BuildSummary {
    instance_hash: String,
    segments: usize,
    vertices: usize,
    faces: usize,
    rectangular_faces: usize,
    euler_edges: usize,
    euler_components: usize,
    euler_bounded_faces: usize,
    adjacent_pairs: usize,
    face_list: Vec<FaceSummary>,
}

fn build_cmd(a: &InputArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (set, sub) = load_segments(&a.input)?;
    let e = sub.euler_counts();
    let summary = BuildSummary {
        instance_hash: instance_hash(&set),
        segments: set.len(),
        vertices: sub.vertices().len(),
        faces: sub.face_count(),
        rectangular_faces: sub.rectangular_faces().len(),
        euler_edges: e.edges,
        euler_components: e.components,
        euler_bounded_faces: e.bounded_faces(),
        adjacent_pairs: sub.face_adjacency().len(),
        face_list: sub
            .faces()
            .iter()
            .map(|f| {
                let (x0, y0, x1, y1) = sub.face_bounds(f.id);
                FaceSummary { id: f.id, cells: f.cells.len(), rectangle: f.is_rectangle, bounds: [x0, y0, x1, y1] }
            })
            .collect(),
    };
    emit(&to_pretty_json(&summary), a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn solve_cmd(problem: Problem, a: &SolveArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (set, sub) = load_segments(&a.io.input)?;
    let filter = FaceFilter::from(a.faces);
    if let Some(path) = &a.verify {
        let doc: SolutionDocument = from_json(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
        doc.check_instance(&set).map_err(input)?;
        let sol = doc.solution().map_err(input)?;
        let report = verify_solution(&sub, problem, &sol, filter).map_err(input)?;
        emit(&to_pretty_json(&report), a.io.output.as_deref(), out)?;
        return Ok(if report.feasible { EXIT_OK } else { EXIT_FAILED_CHECK });
    }
    let budget = a.budget.budget().map_err(input)?;
    let doc = match (problem, a.algo) {
        (Problem::Stab, Algo::Greedy) => SolutionDocument::from_points(&set, filter, &greedy_stab(&sub, filter)),
        (Problem::Stab, Algo::Exact) => SolutionDocument::from_points(&set, filter, &exact_stab(&sub, filter, &budget)),
        (Problem::Stab, Algo::Local) => {
            let cfg = LocalSearchConfig::new(a.k, filter).map_err(input)?;
            SolutionDocument::from_points(&set, filter, &local_search_stab(&sub, &cfg))
        }
        (Problem::Mis, Algo::Greedy) => SolutionDocument::from_faces(&set, problem, filter, &greedy_mis(&sub, filter)),
        (Problem::Mis, Algo::Exact) => {
            SolutionDocument::from_faces(&set, problem, filter, &exact_mis(&sub, filter, &budget))
        }
        (Problem::Mds, Algo::Greedy) => SolutionDocument::from_faces(&set, problem, filter, &greedy_mds(&sub, filter)),
        (Problem::Mds, Algo::Exact) => {
            SolutionDocument::from_faces(&set, problem, filter, &exact_mds(&sub, filter, &budget))
        }
        (_, Algo::Local) => return Err(input("local search is only available for stab")),
    };
    emit(&to_pretty_json(&doc), a.io.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn reduce_cmd(a: &ReduceArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let inst = parse_formula(&read(&a.input)?).map_err(|e| input(format!("{}: {e}", a.input.display())))?;
    let red = build_reduction(&inst, a.problem.into(), a.variant.into()).map_err(input)?;
    emit(&format_segments(&red.segments), a.output.as_deref(), out)?;
    let report = to_pretty_json(&ReductionReport::new(&red));
    match &a.report {
        Some(p) => emit(&report, Some(p), out)?,
        None if a.output.is_some() => emit(&report, None, out)?,
        None => {}
    }
    Ok(EXIT_OK)
}

fn lemma_cmd(a: &LemmaArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let inst = parse_formula(&read(&a.input)?).map_err(|e| input(format!("{}: {e}", a.input.display())))?;
    let budget = a.budget.budget().map_err(input)?;
    let report = verify_lemma(&inst, a.problem.into(), a.variant.into(), &budget).map_err(input)?;
    emit(&to_pretty_json(&report), a.output.as_deref(), out)?;
    let ok = report.forward_check && report.converse_check == ConverseStatus::Verified;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED_CHECK })
}

fn render_cmd(a: &RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (set, sub) = load_segments(&a.io.input)?;
    let mut overlay = Overlay::default();
    if let Some(path) = &a.solution {
        let doc: SolutionDocument = from_json(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
        doc.check_instance(&set).map_err(input)?;
        match doc.solution().map_err(input)? {
            Solution::Points(p) => overlay.points = p,
            Solution::Faces(f) => overlay.faces = f,
        }
    }
    emit(&render_svg(&sub, &overlay), a.io.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn gen_cmd(a: &GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = match a.kind {
        GenKind::Guillotine { rooms, seed } => GeneratorSpec::Guillotine { rooms, seed },
        GenKind::Grid { cols, rows } => GeneratorSpec::Grid { cols, rows },
        GenKind::Gadget { problem, m, variant } => {
            GeneratorSpec::Gadget { problem: problem.into(), m, variant: variant.into() }
        }
    };
    let set = generate(&spec).map_err(input)?;
    emit(&format_segments(&set), a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `argv` (including the program name), writing documents to
/// `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Build(a) => build_cmd(a, stdout),
        Command::Stab(a) => solve_cmd(Problem::Stab, a, stdout),
        Command::Mis(a) => solve_cmd(Problem::Mis, a, stdout),
        Command::Mds(a) => solve_cmd(Problem::Mds, a, stdout),
        Command::Reduce(a) => reduce_cmd(a, stdout),
        Command::VerifyLemma(a) => lemma_cmd(a, stdout),
        Command::Render(a) => render_cmd(a, stdout),
        Command::Gen(a) => gen_cmd(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// [`run`] against the process's standard streams.
pub fn cli_dispatch(argv: &[String]) -> i32 {
    run(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
