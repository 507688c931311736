//! The `tpkit` command line.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 invalid input, 3 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use tpkit::generators::{generate, Bias, GenerateError, GeneratorSpec, Preset, DEFAULT_BUDGET};
use tpkit::io::{
    check, export_dot, human_summary, parse, report_json, serialize_complex, CheckOptions, Complex,
    ComplexDocument, DocumentError, DotError, DotOptions, Highlight,
};
use tpkit::{subdivide, CellComplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tpkit", version, about = "Checks triangle-pentagon complexes and their star subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a document.
    Validate { file: PathBuf },
    /// Write the star subdivision of a tpc-1 document as tps-1.
    Subdivide {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run curvature checks; with no check flags, runs all of them.
    Check(CheckArgs),
    /// Write a generated complex.
    Generate(GenerateArgs),
    /// Export the 1-skeleton as Graphviz DOT.
    Export {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        /// centers, girth:V or dwheel:I
        #[arg(long, value_parser = parse_highlight)]
        highlight: Option<Highlight>,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    link_condition: bool,
    #[arg(long, value_name = "K")]
    locally_large: Option<usize>,
    #[arg(long, value_name = "M")]
    located: Option<usize>,
    #[arg(long)]
    five_eight: bool,
    #[arg(long)]
    girth: bool,
    #[arg(long)]
    all: bool,
    /// Write the full JSON report here.
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Spread per-vertex work over threads; the report is unchanged.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(value_parser = parse_preset)]
    preset: Preset,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 60)]
    cells: usize,
    /// Pentagon probability, as p/q or a decimal.
    #[arg(long, default_value = "1/2", value_parser = parse_bias)]
    bias: Bias,
    #[arg(long, default_value_t = 2)]
    radius: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(short, long)]
    output: PathBuf,
}

fn parse_highlight(s: &str) -> Result<Highlight, String> {
    s.parse().map_err(|e: DotError| e.to_string())
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: GenerateError| e.to_string())
}

fn parse_bias(s: &str) -> Result<Bias, String> {
    s.parse().map_err(|e: GenerateError| e.to_string())
}

/// A failure carrying its exit code and one structured line for standard error.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(kind: &'static str, message: impl ToString) -> Self {
        Failure { code: EXIT_INVALID_INPUT, kind, message: message.to_string() }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let kind = match e {
            DocumentError::Utf8 { .. } => "utf8",
            DocumentError::Json { .. } => "json",
            DocumentError::Schema { .. } => "schema",
            DocumentError::Validation(_) => "validation",
        };
        Failure::input(kind, e)
    }
}

impl From<tpkit::TopologyError> for Failure {
    fn from(e: tpkit::TopologyError) -> Self {
        Failure::input("validation", e)
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            } else {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error[{}]: {}", f.kind, f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let doc = read_document(&file)?;
            let summary = match &doc.complex {
                Complex::Tp(x) => {
                    format!("{} vertices, {} triangles, {} pentagons", x.vertex_count(), x.triangles().len(), x.pentagons().len())
                }
                Complex::Star(x) => {
                    format!("{} vertices, {} triangles, {} centers", x.vertex_count(), x.triangles().len(), x.center_of().len())
                }
            };
            say(stdout, &format!("valid {}: {summary}\n", doc.complex.format()))?;
            Ok(EXIT_OK)
        }
        Command::Subdivide { input, output } => {
            let doc = read_document(&input)?;
            let Complex::Tp(x) = doc.complex else {
                return Err(Failure::input("validation", "input is already a tps-1 document"));
            };
            let star = subdivide(&x)?;
            write_output(&output, &serialize_complex(star), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Check(args) => run_check(args, stdout),
        Command::Generate(args) => {
            let spec = GeneratorSpec {
                preset: args.preset,
                seed: args.seed,
                target_cells: args.cells,
                pentagon_bias: args.bias,
                radius: args.radius,
                budget: args.budget,
            };
            let x = generate(&spec).map_err(|e| match e {
                GenerateError::InvalidParameter(_) | GenerateError::RadiusTooLarge { .. } => {
                    Failure { code: EXIT_USAGE, kind: "usage", message: e.to_string() }
                }
                _ => Failure { code: EXIT_CHECK_FAILED, kind: "generate", message: e.to_string() },
            })?;
            write_output(&args.output, &serialize_complex(x), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Export { file, dot, highlight } => {
            let doc = read_document(&file)?;
            let options = DotOptions { highlight: highlight.unwrap_or_default(), labels: doc.labels.clone() };
            let text = export_dot(&doc.complex, &options).map_err(|e| match e {
                DotError::UnknownWitnessReference { .. } => Failure::input("witness", e),
                _ => Failure::input("validation", e),
            })?;
            write_output(&dot, &text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

fn run_check(args: CheckArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let doc = read_document(&args.file)?;
    let mut options = CheckOptions {
        link_condition: args.link_condition,
        locally_large: args.locally_large,
        located: args.located,
        five_eight: args.five_eight,
        girth: args.girth,
        parallel: args.parallel,
    };
    let nothing_requested = options == CheckOptions { parallel: args.parallel, ..CheckOptions::default() };
    if args.all || nothing_requested {
        let all = CheckOptions::all();
        options = CheckOptions {
            link_condition: true,
            locally_large: options.locally_large.or(all.locally_large),
            located: options.located.or(all.located),
            five_eight: true,
            girth: true,
            parallel: args.parallel,
        };
    }
    let report = check(&doc.complex, &options)?;
    say(stdout, &human_summary(&report))?;
    if let Some(path) = &args.json {
        write_output(path, &report_json(&report), stdout)?;
    }
    Ok(if report.verdict.is_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn read_document(path: &Path) -> Result<ComplexDocument, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))?;
    Ok(parse(&bytes)?)
}

/// Writes to `path`, or to standard output when `path` is `-`.
fn write_output(path: &Path, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    if path == Path::new("-") {
        return say(stdout, text);
    }
    fs::write(path, text).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
}

fn say(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout.write_all(text.as_bytes()).map_err(|e| Failure::input("io", e))
}
