//! Command-line front end for the skew tableau bijections.
//!
//! Tableau documents travel on files or standard streams; subcommands with
//! two outputs (`split`, `map`) concatenate both documents on standard
//! output when no `--out-r`/`--out-t` paths are given, and their inverses
//! accept the same concatenation on standard input. Exit codes: 0 success,
//! 1 a verification command found a mismatch, 2 usage, parse, or
//! precondition errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewjdt_core::io::{
    compact, format_shape, parse_shape, parse_structured, parse_tableau, render_bijection_report,
    render_identity_report, render_matchup, render_trace, report_json,
    serialize_structured_tabloid, serialize_tabloid,
};
use skewjdt_core::{
    evacuate, map_full, matchup, split, unevacuate, unmap_full, unsplit,
    verify_bijection_exhaustive, verify_identity, BijectionTrace, Error, Tabloid, TabloidPair,
};

#[derive(Parser)]
#[command(
    name = "skewjdt",
    version,
    about = "Bijections and identity checks on skew tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Turn a semistandard tableau into its reverse semistandard image.
    Evacuate(SingleArgs),
    /// Invert evacuation: reverse semistandard in, semistandard out.
    Unevacuate(SingleArgs),
    /// Split a reverse semistandard tableau into a row-bounded tableau R and a tabloid T.
    Split(SplitArgs),
    /// Invert split: rebuild the reverse semistandard tableau from (R, T).
    Unsplit(UnsplitArgs),
    /// Full composition: semistandard tableau straight to (R, T).
    Map(SplitArgs),
    /// Full inverse: (R, T) straight back to the semistandard tableau.
    Unmap(UnsplitArgs),
    /// Compare the norm series against its product form, coefficient by coefficient.
    Verify(VerifyArgs),
    /// Exhaustively round-trip every tableau up to a norm and compare counts.
    CheckBijection(CheckArgs),
    /// Tabulate P, Q, R, T for every semistandard tableau of one norm.
    Matchup(MatchupArgs),
}

#[derive(Args)]
struct SingleArgs {
    /// Input document path; standard input when omitted.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output document path; standard output when omitted.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// Print the step table on standard output.
    #[arg(long)]
    trace: bool,
    /// Output document format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SplitArgs {
    /// Input document path; standard input when omitted.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Offset added to cell contents; a + content must be positive everywhere.
    #[arg(long)]
    a: i64,
    /// Output path for R; standard output when omitted.
    #[arg(long = "out-r")]
    out_r: Option<PathBuf>,
    /// Output path for T; standard output when omitted.
    #[arg(long = "out-t")]
    out_t: Option<PathBuf>,
    /// Print the step table on standard output.
    #[arg(long)]
    trace: bool,
    /// Output document format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct UnsplitArgs {
    /// Input path for R; with --in-t omitted too, both documents come from standard input.
    #[arg(long = "in-r")]
    in_r: Option<PathBuf>,
    /// Input path for T.
    #[arg(long = "in-t")]
    in_t: Option<PathBuf>,
    /// Offset added to cell contents; a + content must be positive everywhere.
    #[arg(long)]
    a: i64,
    /// Output document path; standard output when omitted.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// Print the step table on standard output.
    #[arg(long)]
    trace: bool,
    /// Re-run the forward direction and fail unless it reproduces the input pair.
    #[arg(long)]
    strict: bool,
    /// Output document format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Skew shape, e.g. "3,2/1".
    #[arg(long)]
    shape: String,
    /// Offset added to cell contents; a + content must be positive everywhere.
    #[arg(long)]
    a: i64,
    /// Highest q power compared.
    #[arg(long = "max-degree")]
    max_degree: usize,
    /// Report path; standard output when omitted.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Skew shape, e.g. "3,2/1".
    #[arg(long)]
    shape: String,
    /// Offset added to cell contents; a + content must be positive everywhere.
    #[arg(long)]
    a: i64,
    /// Highest tableau norm enumerated.
    #[arg(long = "max-norm")]
    max_norm: u64,
    /// Report path; standard output when omitted.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MatchupArgs {
    /// Skew shape, e.g. "3,2/1".
    #[arg(long)]
    shape: String,
    /// Offset added to cell contents; a + content must be positive everywhere.
    #[arg(long)]
    a: i64,
    /// Tableau norm tabulated.
    #[arg(long)]
    norm: u64,
    /// Table path; standard output when omitted.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    /// Table format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<ExitCode, String> {
    match command {
        Command::Evacuate(args) => single(args, evacuate),
        Command::Unevacuate(args) => single(args, unevacuate),
        Command::Split(args) => splitting(args, |q, a| {
            split(q, a).map(|(pair, trace)| (pair, vec![trace]))
        }),
        Command::Map(args) => splitting(args, |p, a| {
            map_full(p, a).map(|(pair, trace)| (pair, vec![trace.evacuation, trace.splitting]))
        }),
        Command::Unsplit(args) => unsplitting(
            args,
            |pair, a| unsplit(pair, a).map(|(q, trace)| (q, vec![trace])),
            |q, a, pair| split(q, a).map(|(again, _)| &again == pair),
        ),
        Command::Unmap(args) => unsplitting(
            args,
            |pair, a| {
                unmap_full(pair, a)
                    .map(|(p, trace)| (p, vec![trace.unsplitting, trace.unevacuation]))
            },
            |p, a, pair| map_full(p, a).map(|(again, _)| &again == pair),
        ),
        Command::Verify(args) => verify_cmd(args),
        Command::CheckBijection(args) => check_cmd(args),
        Command::Matchup(args) => matchup_cmd(args),
    }
}

fn read_source(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("standard input: {e}"))?;
            Ok(buffer)
        }
    }
}

fn parse_total(text: &str) -> Result<Tabloid, String> {
    let parsed = if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        parse_tableau(text)
    };
    parsed
        .and_then(|doc| doc.into_total())
        .map_err(|e| e.to_string())
}

fn render_doc(t: &Tabloid, format: Format) -> String {
    match format {
        Format::Text => serialize_tabloid(t),
        Format::Structured => serialize_structured_tabloid(t),
    }
}

fn write_or_print(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn single(
    args: &SingleArgs,
    operation: impl Fn(&Tabloid) -> Result<(Tabloid, BijectionTrace), Error>,
) -> Result<ExitCode, String> {
    let input = parse_total(&read_source(args.input.as_deref())?)?;
    let (result, trace) = operation(&input).map_err(|e| e.to_string())?;
    let mut stdout = String::new();
    if args.trace {
        stdout.push_str(&render_trace(&trace));
    }
    let doc = render_doc(&result, args.format);
    match &args.output {
        Some(path) => fs::write(path, &doc).map_err(|e| format!("{}: {e}", path.display()))?,
        None => stdout.push_str(&doc),
    }
    print!("{stdout}");
    Ok(ExitCode::SUCCESS)
}

fn splitting(
    args: &SplitArgs,
    operation: impl Fn(&Tabloid, i64) -> Result<(TabloidPair, Vec<BijectionTrace>), Error>,
) -> Result<ExitCode, String> {
    let input = parse_total(&read_source(args.input.as_deref())?)?;
    let (pair, traces) = operation(&input, args.a).map_err(|e| e.to_string())?;
    let mut stdout = String::new();
    if args.trace {
        for trace in &traces {
            stdout.push_str(&render_trace(trace));
        }
    }
    let r_doc = render_doc(pair.r(), args.format);
    match &args.out_r {
        Some(path) => fs::write(path, &r_doc).map_err(|e| format!("{}: {e}", path.display()))?,
        None => stdout.push_str(&r_doc),
    }
    let t_doc = render_doc(pair.t(), args.format);
    match &args.out_t {
        Some(path) => fs::write(path, &t_doc).map_err(|e| format!("{}: {e}", path.display()))?,
        None => stdout.push_str(&t_doc),
    }
    print!("{stdout}");
    Ok(ExitCode::SUCCESS)
}

fn split_documents(text: &str) -> Result<(String, String), String> {
    if text.trim_start().starts_with('{') {
        let mut docs = text.lines().filter(|line| !line.trim().is_empty());
        match (docs.next(), docs.next()) {
            (Some(first), Some(second)) => Ok((format!("{first}\n"), format!("{second}\n"))),
            _ => Err("expected two structured documents on standard input".into()),
        }
    } else {
        let lines: Vec<&str> = text.lines().collect();
        let boundary = lines
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, line)| line.trim_start().starts_with("shape:"))
            .map(|(i, _)| i);
        match boundary {
            Some(i) => Ok((lines[..i].join("\n") + "\n", lines[i..].join("\n") + "\n")),
            None => {
                Err("expected two documents on standard input (second shape header missing)".into())
            }
        }
    }
}

fn read_pair(args: &UnsplitArgs) -> Result<TabloidPair, String> {
    let (r, t) = match (&args.in_r, &args.in_t) {
        (Some(r_path), Some(t_path)) => (
            parse_total(&read_source(Some(r_path))?)?,
            parse_total(&read_source(Some(t_path))?)?,
        ),
        (None, None) => {
            let text = read_source(None)?;
            let (first, second) = split_documents(&text)?;
            (parse_total(&first)?, parse_total(&second)?)
        }
        _ => return Err(
            "give both --in-r and --in-t, or neither to read both documents from standard input"
                .into(),
        ),
    };
    TabloidPair::new(r, t).map_err(|e| e.to_string())
}

fn unsplitting(
    args: &UnsplitArgs,
    operation: impl Fn(&TabloidPair, i64) -> Result<(Tabloid, Vec<BijectionTrace>), Error>,
    forward_again: impl Fn(&Tabloid, i64, &TabloidPair) -> Result<bool, Error>,
) -> Result<ExitCode, String> {
    let pair = read_pair(args)?;
    let (result, traces) = operation(&pair, args.a).map_err(|e| e.to_string())?;
    if args.strict {
        let reproduced = forward_again(&result, args.a, &pair).map_err(|e| e.to_string())?;
        if !reproduced {
            return Err(Error::StrictRoundTrip.to_string());
        }
    }
    let mut stdout = String::new();
    if args.trace {
        for trace in &traces {
            stdout.push_str(&render_trace(trace));
        }
    }
    let doc = render_doc(&result, args.format);
    match &args.output {
        Some(path) => fs::write(path, &doc).map_err(|e| format!("{}: {e}", path.display()))?,
        None => stdout.push_str(&doc),
    }
    print!("{stdout}");
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: &VerifyArgs) -> Result<ExitCode, String> {
    let shape = parse_shape(&args.shape).map_err(|e| e.to_string())?;
    let report = verify_identity(&shape, args.a, args.max_degree).map_err(|e| e.to_string())?;
    let rendered = match args.format {
        Format::Text => render_identity_report(&report),
        Format::Structured => report_json(&report),
    };
    write_or_print(args.output.as_deref(), &rendered)?;
    Ok(if report.identity_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check_cmd(args: &CheckArgs) -> Result<ExitCode, String> {
    let shape = parse_shape(&args.shape).map_err(|e| e.to_string())?;
    let report =
        verify_bijection_exhaustive(&shape, args.a, args.max_norm).map_err(|e| e.to_string())?;
    let rendered = match args.format {
        Format::Text => render_bijection_report(&report),
        Format::Structured => report_json(&report),
    };
    write_or_print(args.output.as_deref(), &rendered)?;
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn matchup_cmd(args: &MatchupArgs) -> Result<ExitCode, String> {
    let shape = parse_shape(&args.shape).map_err(|e| e.to_string())?;
    let rows = matchup(&shape, args.a, args.norm).map_err(|e| e.to_string())?;
    let rendered = match args.format {
        Format::Text => render_matchup(&rows),
        Format::Structured => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "p": compact(&row.p),
                        "q": compact(&row.q),
                        "r": compact(&row.r),
                        "t": compact(&row.t),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "kind": "matchup",
                "shape": format_shape(&shape),
                "a": args.a,
                "norm": args.norm,
                "rows": items,
            });
            serde_json::to_string_pretty(&doc).expect("serializable report") + "\n"
        }
    };
    write_or_print(args.output.as_deref(), &rendered)?;
    Ok(ExitCode::SUCCESS)
}
