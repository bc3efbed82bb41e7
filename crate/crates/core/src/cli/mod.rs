//! The `lcscount` command line.
//!
//! ```text
//! lcscount [--text S | --file PATH]... [--mode length,distinct,embeddings|all]
//!          [--algorithm linear|full] [--tokenize bytes|codepoints|lines]
//!          [--format plain|json]
//! lcscount oracle <same flags>
//! lcscount bench --len N [--alphabet K] [--seed S]
//! ```
//!
//! Exactly two inputs are given, in order, by any mix of `--text` and
//! `--file`. `--file -` reads standard input and may appear once.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 I/O error,
//! 3 input too large for the oracle.

pub mod bench;
pub mod tokenize;

use std::ffi::OsString;
use std::hash::Hash;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::oracle::{oracle_distinct, oracle_embeddings, OracleError};
use crate::{Algorithm, Count, LcsSummary, Selection};
use bench::BenchArgs;
use tokenize::Tokenization;

#[derive(Parser, Debug)]
#[command(
    name = "lcscount",
    version,
    about = "LCS length, distinct-LCS count and LCS-embedding count of two inputs",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    compare: CompareArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Same as the default command but computed by brute-force enumeration.
    Oracle(CompareArgs),
    /// Time every algorithm on two seeded random sequences.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Inline input.
    #[arg(long, value_name = "STRING", allow_hyphen_values = true)]
    text: Vec<String>,
    /// Input file, or `-` for standard input.
    #[arg(long, value_name = "PATH")]
    file: Vec<PathBuf>,
    /// Comma-separated subset of length, distinct, embeddings, or `all`.
    #[arg(long, value_name = "MODES", default_value = "all")]
    mode: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    algorithm: AlgorithmArg,
    #[arg(long, alias = "tokenization", value_enum, default_value_t)]
    tokenize: Tokenization,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Full,
    #[default]
    Linear,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(arg: AlgorithmArg) -> Self {
        match arg {
            AlgorithmArg::Full => Algorithm::Full,
            AlgorithmArg::Linear => Algorithm::Linear,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

/// Where one input sequence comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Text(String),
    File(PathBuf),
    Stdin,
}

/// Quantities to report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Modes {
    pub length: bool,
    pub distinct: bool,
    pub embeddings: bool,
}

impl Modes {
    pub const ALL: Modes = Modes {
        length: true,
        distinct: true,
        embeddings: true,
    };

    /// Parses comma-separated mode lists such as `length,distinct` or `all`.
    pub fn parse<'a>(lists: impl IntoIterator<Item = &'a str>) -> Result<Modes, CliError> {
        let mut modes = Modes::default();
        for item in lists.into_iter().flat_map(|l| l.split(',')) {
            match item.trim() {
                "" => {}
                "all" => modes = Modes::ALL,
                "length" => modes.length = true,
                "distinct" => modes.distinct = true,
                "embeddings" => modes.embeddings = true,
                other => return Err(CliError::Usage(format!("unknown mode `{other}`"))),
            }
        }
        if modes == Modes::default() {
            return Err(CliError::Usage("--mode selects nothing".into()));
        }
        Ok(modes)
    }
}

/// Which engine answers a request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Dp(Algorithm),
    Oracle,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Dp(algorithm) => algorithm.name(),
            Engine::Oracle => "oracle",
        }
    }
}

/// A fully validated comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRequest {
    pub input_a: Source,
    pub input_b: Source,
    pub tokenization: Tokenization,
    pub modes: Modes,
    pub engine: Engine,
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Clap(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Oracle(_) => 3,
        }
    }
}

impl ComparisonRequest {
    fn from_matches(
        args: CompareArgs,
        matches: &ArgMatches,
        engine: Engine,
    ) -> Result<Self, CliError> {
        // Restore command-line order across --text and --file.
        let mut sources: Vec<(usize, Source)> = Vec::new();
        if let Some(indices) = matches.indices_of("text") {
            sources.extend(indices.zip(args.text).map(|(i, t)| (i, Source::Text(t))));
        }
        if let Some(indices) = matches.indices_of("file") {
            sources.extend(indices.zip(args.file).map(|(i, p)| {
                let source = if p.as_os_str() == "-" {
                    Source::Stdin
                } else {
                    Source::File(p)
                };
                (i, source)
            }));
        }
        sources.sort_by_key(|(i, _)| *i);
        if sources.len() != 2 {
            return Err(CliError::Usage(format!(
                "expected exactly two inputs (--text or --file), got {}",
                sources.len()
            )));
        }
        let mut sources = sources.into_iter().map(|(_, s)| s);
        let (input_a, input_b) = (sources.next().unwrap(), sources.next().unwrap());
        if input_a == Source::Stdin && input_b == Source::Stdin {
            return Err(CliError::Usage(
                "only one input may come from standard input".into(),
            ));
        }
        Ok(ComparisonRequest {
            input_a,
            input_b,
            tokenization: args.tokenize,
            modes: Modes::parse(args.mode.iter().map(String::as_str))?,
            engine,
            format: args.format,
        })
    }
}

fn load(source: &Source, stdin: &mut dyn Read) -> Result<Vec<u8>, CliError> {
    match source {
        Source::Text(text) => Ok(text.clone().into_bytes()),
        Source::File(path) => std::fs::read(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        Source::Stdin => {
            let mut data = Vec::new();
            stdin
                .read_to_end(&mut data)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(data)
        }
    }
}

/// Result of one comparison, ready to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub m: usize,
    pub n: usize,
    pub summary: LcsSummary,
}

fn compare<T: Eq + Hash>(
    a: &[T],
    b: &[T],
    modes: Modes,
    engine: Engine,
) -> Result<Report, CliError> {
    let summary = match engine {
        Engine::Dp(algorithm) => LcsSummary::compute(
            a,
            b,
            algorithm,
            Selection {
                distinct: modes.distinct,
                embeddings: modes.embeddings,
            },
        ),
        Engine::Oracle => {
            let distinct = if modes.distinct || !modes.embeddings {
                Some(oracle_distinct(a, b)?)
            } else {
                None
            };
            let embeddings = modes
                .embeddings
                .then(|| oracle_embeddings(a, b))
                .transpose()?;
            let lcs_length = distinct
                .as_ref()
                .or(embeddings.as_ref())
                .map(|(l, _)| *l)
                .unwrap_or(0);
            LcsSummary {
                lcs_length,
                distinct_count: distinct.filter(|_| modes.distinct).map(|(_, c)| c),
                embedding_count: embeddings.map(|(_, c)| c),
            }
        }
    };
    Ok(Report {
        m: a.len(),
        n: b.len(),
        summary,
    })
}

/// Loads, tokenizes and compares both inputs of `request`.
pub fn execute(request: &ComparisonRequest, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let data_a = load(&request.input_a, stdin)?;
    let data_b = load(&request.input_b, stdin)?;
    let (modes, engine) = (request.modes, request.engine);
    match request.tokenization {
        Tokenization::Bytes => compare(&data_a, &data_b, modes, engine),
        Tokenization::Codepoints => {
            let decode = |data: &[u8], source: &Source| {
                tokenize::codepoints(data).map_err(|e| {
                    CliError::Usage(format!("{} is not valid UTF-8: {e}", describe(source)))
                })
            };
            let a = decode(&data_a, &request.input_a)?;
            let b = decode(&data_b, &request.input_b)?;
            compare(&a, &b, modes, engine)
        }
        Tokenization::Lines => compare(
            &tokenize::lines(&data_a),
            &tokenize::lines(&data_b),
            modes,
            engine,
        ),
    }
}

fn describe(source: &Source) -> String {
    match source {
        Source::Text(_) => "--text input".into(),
        Source::File(path) => path.display().to_string(),
        Source::Stdin => "standard input".into(),
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    m: usize,
    n: usize,
    lcs_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    distinct_lcs_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding_count: Option<String>,
    algorithm: &'a str,
    tokenization: &'a str,
}

/// Renders `report` in the requested format, newline-terminated.
pub fn render(request: &ComparisonRequest, report: &Report) -> String {
    let summary = &report.summary;
    match request.format {
        Format::Plain => {
            let mut out = String::new();
            if request.modes.length {
                out += &format!("length: {}\n", summary.lcs_length);
            }
            if let Some(count) = summary
                .distinct_count
                .as_ref()
                .filter(|_| request.modes.distinct)
            {
                out += &format!("distinct: {count}\n");
            }
            if let Some(count) = summary
                .embedding_count
                .as_ref()
                .filter(|_| request.modes.embeddings)
            {
                out += &format!("embeddings: {count}\n");
            }
            out
        }
        Format::Json => {
            let json = JsonReport {
                m: report.m,
                n: report.n,
                lcs_length: summary.lcs_length,
                distinct_lcs_count: summary.distinct_count.as_ref().map(Count::to_string),
                embedding_count: summary.embedding_count.as_ref().map(Count::to_string),
                algorithm: request.engine.name(),
                tokenization: request.tokenization.name(),
            };
            serde_json::to_string(&json).expect("report serializes") + "\n"
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns
/// the process exit status. Results go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match dispatch(argv, stdin, stdout) {
        Ok(()) => 0,
        Err(CliError::Clap(e))
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) =>
        {
            let _ = write!(stdout, "{}", e.render());
            0
        }
        Err(CliError::Clap(e)) => {
            let _ = write!(stderr, "{}", e.render());
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "lcscount: {e}");
            e.exit_code()
        }
    }
}

fn dispatch<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = Cli::command().try_get_matches_from(argv)?;
    let cli = Cli::from_arg_matches(&matches)?;
    let write_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    let request = match cli.command {
        Some(Command::Bench(args)) => return bench::run(&args, stdout).map_err(write_err),
        Some(Command::Oracle(args)) => {
            let sub = matches
                .subcommand_matches("oracle")
                .expect("oracle matches");
            ComparisonRequest::from_matches(args, sub, Engine::Oracle)?
        }
        None => {
            let algorithm = cli.compare.algorithm.into();
            ComparisonRequest::from_matches(cli.compare, &matches, Engine::Dp(algorithm))?
        }
    };
    let report = execute(&request, stdin)?;
    stdout
        .write_all(render(&request, &report).as_bytes())
        .map_err(write_err)
}
