use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nonobtuse::classification::classify;
use nonobtuse::io::{from_json, to_json, to_off};
use nonobtuse::registry::{counters, families, frontier_policies, root_strategies};
use nonobtuse::search::{collect_simplices, exhaustive_search, Budget, SearchOptions, SimplexFilter};
use nonobtuse::validator::{perturbation_check, validate, DEFAULT_SEED};
use nonobtuse::{BinarySimplex, Error};

/// Nonobtuse triangulations of the unit n-cube by 0/1 simplices.
#[derive(Parser)]
#[command(name = "nonobtuse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a triangulation family and write it as JSON or OFF.
    Build {
        #[arg(long, default_value = "standard")]
        family: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a triangulation document.
    Verify {
        path: PathBuf,
        #[arg(long)]
        require_nonobtuse: bool,
        /// Also run this many random single-simplex replacements.
        #[arg(long, value_name = "TRIALS")]
        perturb: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print an exact count: N, sigma, beta or nu.
    Count {
        what: String,
        #[arg(long)]
        dim: usize,
        /// Allow the expensive dimensions.
        #[arg(long)]
        budget: bool,
    },
    /// Exhaustively search for all nonobtuse triangulations.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        budget: bool,
        /// Directory for one JSON file per class representative.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "lex-min")]
        frontier: String,
        #[arg(long, default_value = "orbit")]
        roots: String,
    },
    /// Classify a simplex given by its vertex strings (x_1 first).
    Classify {
        #[arg(required = true, num_args = 1..)]
        vertices: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Off,
}

/// Exit status classes.
enum Failure {
    Domain(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Domain(format!("{}: {e}", path.display()))
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Self { color: std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal() }
    }

    fn status(&self, ok: bool, text: &str) -> String {
        match (self.color, ok) {
            (false, _) => text.to_string(),
            (true, true) => format!("\x1b[32m{text}\x1b[0m"),
            (true, false) => format!("\x1b[31m{text}\x1b[0m"),
        }
    }
}

fn budget(flag: bool) -> Budget {
    if flag {
        Budget::Extended
    } else {
        Budget::Standard
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Domain(e.to_string())),
    }
}

fn cmd_build(family: &str, dim: usize, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let family = families().get(family)?;
    if dim < family.min_dim() {
        return Err(Failure::Usage(format!("family `{}` needs dimension at least {}", family.name(), family.min_dim())));
    }
    let t = family.build(dim)?;
    let text = match format {
        Format::Json => to_json(&t),
        Format::Off => to_off(&t).map_err(|_| Failure::Usage("OFF output is only available for dimension 3".into()))?,
    };
    emit(&text, out)
}

fn describe(s: &BinarySimplex) -> String {
    s.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_verify(path: &Path, require_nonobtuse: bool, perturb: Option<usize>, seed: u64, style: &Style) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let t = from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let report = validate(&t, require_nonobtuse);
    println!("dimension {}, {} simplices", t.dim(), t.len());
    println!("volume: {}", style.status(report.volume_ok, if report.volume_ok { "ok" } else { "FAIL" }));
    println!("face-to-face: {}", style.status(report.pairwise_ok, if report.pairwise_ok { "ok" } else { "FAIL" }));
    for failure in &report.failures {
        println!("{} {failure}", style.status(false, "FAIL"));
        for &i in &failure.simplices {
            println!("    #{i}: {}", describe(&t.simplices()[i]));
        }
    }
    if let Some(trials) = perturb {
        if !report.passed() {
            return Err(Failure::Domain("perturbation test needs a valid triangulation".into()));
        }
        let pool = collect_simplices(t.dim(), SimplexFilter::Nonobtuse, Budget::Standard)?;
        let summary = perturbation_check(&t, &pool, trials, seed);
        let ok = summary.detected == summary.trials;
        println!("perturbations rejected: {}", style.status(ok, &format!("{}/{}", summary.detected, summary.trials)));
        if !ok {
            return Err(Failure::Domain("some perturbations were accepted".into()));
        }
    }
    if report.passed() {
        println!("{}", style.status(true, "valid"));
        Ok(())
    } else {
        Err(Failure::Domain(format!("{} failure(s)", report.failures.len())))
    }
}

fn cmd_count(what: &str, dim: usize, flag: bool) -> Result<(), Failure> {
    let counter = counters().get(what)?;
    let values = counter.values(dim, budget(flag))?;
    let (_, first) = &values[0];
    if values.iter().any(|(_, v)| v != first) {
        let detail: Vec<String> = values.iter().map(|(name, v)| format!("{name} {v}")).collect();
        return Err(Failure::Domain(format!("evaluations disagree: {}", detail.join(", "))));
    }
    if values.len() > 1 {
        let names: Vec<&str> = values.iter().map(|(name, _)| *name).collect();
        println!("{}({dim}) = {first} ({} agree)", counter.name(), names.join(", "));
    } else {
        println!("{}({dim}) = {first}", counter.name());
    }
    Ok(())
}

fn cmd_search(dim: usize, flag: bool, out: Option<&Path>, frontier: &str, roots: &str) -> Result<(), Failure> {
    let options = SearchOptions {
        budget: budget(flag),
        frontier: frontier_policies().get(frontier)?,
        roots: root_strategies().get(roots)?,
    };
    let outcome = exhaustive_search(dim, &options)?;
    println!("dimension: {dim}");
    println!("labeled: {}", outcome.total_complete);
    println!("classes: {}", outcome.classes);
    for (i, rep) in outcome.class_representatives.iter().enumerate() {
        println!("class {i}: {} simplices", rep.len());
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        for (i, rep) in outcome.class_representatives.iter().enumerate() {
            let path = dir.join(format!("class_{i}.json"));
            fs::write(&path, to_json(rep)).map_err(|e| io_failure(&path, e))?;
        }
    }
    Ok(())
}

fn cmd_classify(vertices: &[String]) -> Result<(), Failure> {
    let s = BinarySimplex::parse(&vertices.join(" "))?;
    let r = classify(&s);
    println!("simplex: {}", describe(&s));
    println!("determinant: {}", s.determinant());
    let mut angle = format!("{:?}", r.angle.tag);
    if !r.angle.right_pairs.is_empty() {
        angle.push_str(&format!(" ({} right pairs)", r.angle.right_pairs.len()));
    }
    println!("angle: {angle}");
    println!("label: {}", r.label());
    match &r.shape {
        Some(shape) => println!("tree: {:?}, degrees {:?}, {} leaves", shape.tag, shape.degree_sequence, shape.leaf_count),
        None => println!("tree: none (not orthogonal)"),
    }
    println!("path simplex: {}", yes_no(r.is_path));
    println!("cube corner: {}", yes_no(r.is_cube_corner));
    println!("fake path: {}", yes_no(r.is_fake_path));
    println!("fake cube corner: {}", yes_no(r.is_fake_cube_corner));
    println!("exterior facets: {}", r.exterior_facets.len());
    for f in &r.exterior_facets {
        println!("    x_{} = {}: {}", f.axis, f.value, describe(&f.facet));
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli, style: &Style) -> Result<(), Failure> {
    match cli.command {
        Command::Build { family, dim, format, out } => cmd_build(&family, dim, format, out.as_deref()),
        Command::Verify { path, require_nonobtuse, perturb, seed } => cmd_verify(&path, require_nonobtuse, perturb, seed, style),
        Command::Count { what, dim, budget } => cmd_count(&what, dim, budget),
        Command::Search { dim, budget, out, frontier, roots } => cmd_search(dim, budget, out.as_deref(), &frontier, &roots),
        Command::Classify { vertices } => cmd_classify(&vertices),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let style = Style::detect();
    match run(cli, &style) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
