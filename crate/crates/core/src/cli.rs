//! The `qbal` command line.
//!
//! Data goes to stdout and diagnostics to stderr. Exit codes: 0 success,
//! 2 parameters that no code supports (or an injected index that does not
//! balance the word), 3 malformed input, 4 a codeword that fails to decode.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{BalanceKind, Word};
use crate::asymptotics;
use crate::codecs::{Codec, Codeword, Construction, Injection};
use crate::counting;
use crate::error::Error;
use crate::prefix::{Side, SideInfo};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DECODE: i32 = 4;

/// Block lengths of the CPB redundancy table for `q = 4`.
pub const TABLE1_LENGTHS: [usize; 11] = [10, 20, 40, 60, 80, 100, 200, 400, 600, 800, 1000];

#[derive(Debug, Parser)]
#[command(name = "qbal", version, about = "Balanced q-ary block codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode data words into balanced codewords.
    Encode(EncodeArgs),
    /// Recover data words from codewords written as `prefix|payload`.
    Decode(DecodeArgs),
    /// Number of balanced words of length n.
    Count(QueryArgs),
    /// Minimum redundancy of balanced words of length n.
    Redundancy(QueryArgs),
    /// Exact and approximate CPB redundancy for q = 4 at the standard lengths.
    Table1(FormatArg),
    /// Asymptotic normalized redundancy for each balance kind.
    Table2(Table2Args),
    /// Exact and approximate redundancy over a range of lengths.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
struct Input {
    /// A single word.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// A file with one word per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[arg(long, value_parser = parse_construction)]
    kind: Construction,
    #[arg(long)]
    q: u32,
    /// Data length; defaults to the length of the input words.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    input: Input,
    /// Balancing parameters to use instead of the smallest valid ones,
    /// e.g. `a=-2,z=6`.
    #[arg(long, allow_hyphen_values = true)]
    inject: Option<String>,
    /// Also print the side information.
    #[arg(long)]
    emit_sideinfo: bool,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct DecodeArgs {
    #[arg(long, value_parser = parse_construction)]
    kind: Construction,
    #[arg(long)]
    q: u32,
    /// Data length; defaults to the payload length of the input.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: BalanceKind,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    /// Exact enumeration (the default).
    #[arg(long, conflicts_with = "approx")]
    exact: bool,
    /// Closed-form Gaussian approximation.
    #[arg(long)]
    approx: bool,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct Table2Args {
    /// Alphabet sizes to tabulate.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 4, 5, 6, 7])]
    q: Vec<u32>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: BalanceKind,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    /// Defaults to the spacing of feasible lengths.
    #[arg(long)]
    step: Option<usize>,
    #[command(flatten)]
    format: FormatArg,
}

fn parse_construction(s: &str) -> Result<Construction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<BalanceKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl ToString) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.to_string(),
        }
    }

    fn decode(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::from(e),
            e => Failure {
                code: EXIT_DECODE,
                message: e.to_string(),
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::SymbolOutOfAlphabet { .. } | Error::LengthMismatch { .. } => EXIT_PARSE,
            Error::NotBalanced { .. } | Error::OutOfRange { .. } => EXIT_DECODE,
            _ => EXIT_INFEASIBLE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::parse(e)
    }
}

type CliResult<T> = Result<T, Failure>;

/// Runs the command line with `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Encode(a) => encode(a, out),
        Command::Decode(a) => decode(a, out),
        Command::Count(a) => count(a, out),
        Command::Redundancy(a) => redundancy(a, out),
        Command::Table1(a) => table1(a, out),
        Command::Table2(a) => table2(a, out),
        Command::Sweep(a) => sweep(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_lines(input: &Input) -> CliResult<Vec<String>> {
    match (&input.word, &input.file) {
        (Some(w), _) => Ok(vec![w.clone()]),
        (None, Some(path)) => Ok(std::fs::read_to_string(path)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()),
        (None, None) => Err(Failure::parse("either --word or --file is required")),
    }
}

/// Side information as `key=value` pairs, in the injection syntax where one
/// exists.
pub fn side_info_fields(side: &SideInfo) -> Vec<(String, String)> {
    let mut fields = Vec::new();
    let mut push = |k: &str, v: String| fields.push((k.to_string(), v));
    let symbol = |s: i32| if s > 0 { format!("+{s}") } else { s.to_string() };
    match side {
        SideInfo::Knuth { flip } => push("z", flip.to_string()),
        SideInfo::Pb { offset, flip } => {
            if let Some(a) = offset {
                push("a", symbol(*a));
            }
            push("z", flip.to_string());
        }
        SideInfo::Cb { shift } => push("z", shift.to_string()),
        SideInfo::Cpb {
            offset,
            flip,
            mirrored,
            side,
            shift,
        } => {
            if let Some(a) = offset {
                push("a", symbol(*a));
            }
            push("z", flip.to_string());
            push("xi", (*mirrored as u8).to_string());
            push("nu", match side {
                Side::Plus => "+".into(),
                Side::Minus => "-".into(),
            });
            push("w", shift.to_string());
        }
        SideInfo::Sb { rounds } => {
            for (v, r) in (1..).zip(rounds) {
                push(&format!("i{v}"), r.split.to_string());
                push(&format!("m{v}"), symbol(r.least));
                push(&format!("M{v}"), symbol(r.most));
            }
        }
    }
    fields
}

fn side_info_text(side: &SideInfo) -> String {
    side_info_fields(side)
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn write_csv<S: AsRef<[u8]>>(out: &mut dyn Write, header: &[&str], rows: &[Vec<S>]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let failed = |e: csv::Error| Failure::parse(e);
    w.write_record(header).map_err(failed)?;
    for row in rows {
        w.write_record(row).map_err(failed)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::parse(e.to_string()))?;
    out.write_all(&bytes)?;
    Ok(())
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(Failure::parse)?;
    writeln!(out)?;
    Ok(())
}

fn encode(a: EncodeArgs, out: &mut dyn Write) -> CliResult<()> {
    let lines = read_lines(&a.input)?;
    let words = lines
        .iter()
        .map(|l| l.parse::<Word>().map_err(Failure::from))
        .collect::<CliResult<Vec<_>>>()?;
    let injection: Injection = match &a.inject {
        Some(s) => s.parse()?,
        None => Injection::default(),
    };
    let k = a.k.or_else(|| words.first().map(|w| w.len())).unwrap_or(0);
    let codec = Codec::new(a.kind, a.q, k)?;
    let encoded = words
        .iter()
        .map(|w| codec.encode_with(w, &injection))
        .collect::<Result<Vec<_>, _>>()?;
    match a.format.format {
        Format::Text => {
            for e in &encoded {
                if a.emit_sideinfo {
                    writeln!(out, "{} {}", e.codeword, side_info_text(&e.side_info))?;
                } else {
                    writeln!(out, "{}", e.codeword)?;
                }
            }
        }
        Format::Json => {
            let items: Vec<Value> = encoded
                .iter()
                .map(|e| {
                    let mut v = json!({
                        "prefix": Word::from(e.codeword.prefix.as_slice()).to_string(),
                        "payload": Word::from(e.codeword.payload.as_slice()).to_string(),
                    });
                    if a.emit_sideinfo {
                        v["side_info"] = serde_json::to_value(&e.side_info).unwrap();
                    }
                    v
                })
                .collect();
            write_json(out, &items)?;
        }
        Format::Csv => {
            let mut header = vec!["prefix", "payload"];
            if a.emit_sideinfo {
                header.push("side_info");
            }
            let rows: Vec<Vec<String>> = encoded
                .iter()
                .map(|e| {
                    let mut row = vec![
                        Word::from(e.codeword.prefix.as_slice()).to_string(),
                        Word::from(e.codeword.payload.as_slice()).to_string(),
                    ];
                    if a.emit_sideinfo {
                        row.push(side_info_text(&e.side_info));
                    }
                    row
                })
                .collect();
            write_csv(out, &header, &rows)?;
        }
    }
    Ok(())
}

fn decode(a: DecodeArgs, out: &mut dyn Write) -> CliResult<()> {
    let codewords = read_lines(&a.input)?
        .iter()
        .map(|l| l.parse::<Codeword>().map_err(Failure::from))
        .collect::<CliResult<Vec<_>>>()?;
    let k = a.k.or_else(|| codewords.first().map(|c| c.payload.len())).unwrap_or(0);
    let codec = Codec::new(a.kind, a.q, k)?;
    let data = codewords
        .iter()
        .map(|c| codec.decode(c).map(Word::from).map_err(Failure::decode))
        .collect::<CliResult<Vec<_>>>()?;
    match a.format.format {
        Format::Text => {
            for d in &data {
                writeln!(out, "{d}")?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = data.iter().map(|d| json!({ "data": d.to_string() })).collect();
            write_json(out, &items)?;
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = data.iter().map(|d| vec![d.to_string()]).collect();
            write_csv(out, &["data"], &rows)?;
        }
    }
    Ok(())
}

fn method(approx: bool) -> &'static str {
    if approx {
        "approx"
    } else {
        "exact"
    }
}

fn count(a: QueryArgs, out: &mut dyn Write) -> CliResult<()> {
    let value = if a.approx {
        format!("{:.6e}", asymptotics::approx_count(a.kind, a.n, a.q)?)
    } else {
        crate::alphabet::Alphabet::new(a.q)?;
        counting::count(a.kind, a.n, a.q).to_string()
    };
    query_output(&a, "count", value, out)
}

fn redundancy(a: QueryArgs, out: &mut dyn Write) -> CliResult<()> {
    let r = if a.approx {
        asymptotics::approx_redundancy(a.kind, a.n, a.q)?
    } else {
        counting::exact_redundancy(a.kind, a.n, a.q)?
    };
    query_output(&a, "redundancy", format!("{r:.4}"), out)
}

fn query_output(a: &QueryArgs, field: &str, value: String, out: &mut dyn Write) -> CliResult<()> {
    let kind = a.kind.to_string();
    let (q, n) = (a.q.to_string(), a.n.to_string());
    match a.format.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => {
            let mut v = json!({ "kind": kind, "q": a.q, "n": a.n, "method": method(a.approx) });
            v[field] = Value::String(value);
            write_json(out, &v)?;
        }
        Format::Csv => write_csv(
            out,
            &["kind", "q", "n", "method", field],
            &[vec![kind.as_str(), &q, &n, method(a.approx), &value]],
        )?,
    }
    Ok(())
}

fn four_places(x: f64) -> String {
    format!("{x:.4}")
}

/// Writes `(n, exact, approx)` redundancy rows.
fn redundancy_rows(rows: &[(usize, f64, f64)], format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Text => {
            writeln!(out, "{:>6}  {:>8}  {:>8}", "n", "exact", "approx")?;
            for (n, e, a) in rows {
                writeln!(out, "{n:>6}  {e:>8.4}  {a:>8.4}")?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(n, e, a)| {
                    json!({
                        "n": n,
                        "exact": four_places(*e).parse::<f64>().unwrap(),
                        "approx": four_places(*a).parse::<f64>().unwrap(),
                    })
                })
                .collect();
            write_json(out, &items)?;
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, e, a)| vec![n.to_string(), four_places(*e), four_places(*a)])
                .collect();
            write_csv(out, &["n", "exact", "approx"], &rows)?;
        }
    }
    Ok(())
}

/// Rows of the CPB, `q = 4` redundancy table.
pub fn table1_rows() -> crate::Result<Vec<(usize, f64, f64)>> {
    TABLE1_LENGTHS
        .iter()
        .map(|&n| {
            Ok((
                n,
                counting::exact_redundancy(BalanceKind::Cpb, n, 4)?,
                asymptotics::approx_redundancy(BalanceKind::Cpb, n, 4)?,
            ))
        })
        .collect()
}

fn table1(format: FormatArg, out: &mut dyn Write) -> CliResult<()> {
    redundancy_rows(&table1_rows()?, format.format, out)
}

fn table2(a: Table2Args, out: &mut dyn Write) -> CliResult<()> {
    for &q in &a.q {
        crate::alphabet::Alphabet::new(q)?;
    }
    let rows: Vec<Vec<String>> = a
        .q
        .iter()
        .map(|&q| {
            let mut row = vec![q.to_string()];
            row.extend(BalanceKind::ALL.iter().map(|&k| asymptotics::anr(k, q).to_string()));
            row
        })
        .collect();
    let header = ["q", "SB", "CB", "PB", "CPB"];
    match a.format.format {
        Format::Text => {
            writeln!(out, "{:>3}  {:>5}  {:>5}  {:>5}  {:>5}", header[0], header[1], header[2], header[3], header[4])?;
            for r in &rows {
                writeln!(out, "{:>3}  {:>5}  {:>5}  {:>5}  {:>5}", r[0], r[1], r[2], r[3], r[4])?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "q": r[0].parse::<u32>().unwrap(), "SB": r[1], "CB": r[2], "PB": r[3], "CPB": r[4] }))
                .collect();
            write_json(out, &items)?;
        }
        Format::Csv => write_csv(out, &header, &rows)?,
    }
    Ok(())
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    crate::alphabet::Alphabet::new(a.q)?;
    let step = a.step.unwrap_or_else(|| a.kind.length_step(a.q));
    if step == 0 {
        return Err(Failure::parse("--step must be positive"));
    }
    let rows = (a.from.max(1)..=a.to)
        .step_by(step)
        .filter(|&n| a.kind.admits_length(n, a.q))
        .map(|n| {
            Ok((
                n,
                counting::exact_redundancy(a.kind, n, a.q)?,
                asymptotics::approx_redundancy(a.kind, n, a.q)?,
            ))
        })
        .collect::<crate::Result<Vec<_>>>()?;
    redundancy_rows(&rows, a.format.format, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("qbal").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_examples() {
        assert_eq!(run_str(&["count", "--kind", "cpb", "--q", "4", "--n", "10"]).1, "63504\n");
        assert_eq!(run_str(&["count", "--kind", "sb", "--q", "2", "--n", "5", "--exact"]).1, "0\n");
        assert_eq!(run_str(&["count", "--kind", "sb", "--q", "2", "--n", "5", "--approx"]).0, 2);
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(run_str(&["count", "--kind", "xx", "--q", "4", "--n", "10"]).0, 3);
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["encode", "--kind", "cpb", "--q", "3", "--word", "0,0"]).0, 2);
        assert_eq!(run_str(&["encode", "--kind", "cb", "--q", "3", "--word", "0,1"]).0, 3);
    }

    #[test]
    fn side_info_text_replays() {
        let (code, out, _) = run_str(&[
            "encode", "--kind", "pb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--emit-sideinfo",
        ]);
        assert_eq!(code, 0);
        let fields = out.trim().split(' ').nth(1).unwrap();
        assert_eq!(fields, "a=-2,z=6");
    }
}
