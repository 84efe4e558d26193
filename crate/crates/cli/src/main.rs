//! `circomp`: count, list, convert, draw, and verify.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage or
//! parse errors.

mod export;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use circomp::bijection::{
    aperiodic_palindrome_of, composition_of, connected_set_of, connection_set_of,
};
use circomp::circulant::parse_members;
use circomp::enumeration::{self, members, CountRow, CountTable, Family};
use circomp::verify::{self, GcdRule, VerifyConfig};
use circomp::{BigCount, Composition, ConnectionSet};

#[derive(Parser, Debug)]
#[command(
    name = "circomp",
    version,
    about = "Compositions of n and circulant digraphs of order n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an exact count.
    ///
    /// FAMILY is one of compositions, prime-compositions, disconnected,
    /// palindromes, aperiodic-palindromes.
    Count { family: String, n: usize },
    /// List every member of a family in ascending bitmask order.
    ///
    /// FAMILY is one of compositions, prime-compositions, palindromes,
    /// aperiodic-palindromes, connection-sets, symmetric-connection-sets.
    List {
        family: String,
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert between compositions and connection sets.
    ///
    /// Compositions are comma separated (`2,1,2`); connection sets are
    /// written `n: a_1,a_2,...`.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        payload: Vec<String>,
    },
    /// Emit the circulant digraph or graph of a connection set.
    Graph {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        members: String,
        #[arg(long, value_enum, default_value_t = Mode::Digraph)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Print the five count families for n = 1..=MAX_N.
    Table {
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exhaustive self-check suites.
    Verify {
        /// Run every suite up to this n instead of the per-suite defaults.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        /// Swap in a known-bad criterion to see the suites catch it.
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    ToSet,
    ToComposition,
    Tau,
    TauInv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Digraph,
    Graph,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fault {
    /// gcd of the set's elements without the modulus
    LiteralGcd,
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<circomp::Error> for Failure {
    fn from(e: circomp::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            drop(out);
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CmdResult {
    match command {
        Command::Count { family, n } => cmd_count(&family, n, out),
        Command::List {
            family,
            n,
            limit,
            format,
        } => cmd_list(&family, n, limit, format, out),
        Command::Convert { direction, payload } => cmd_convert(direction, &payload.join(" "), out),
        Command::Graph {
            n,
            members,
            mode,
            format,
        } => cmd_graph(n, &members, mode, format, out),
        Command::Table { max_n, format } => cmd_table(max_n, format, out),
        Command::Verify {
            max_n,
            workers,
            inject_fault,
        } => cmd_verify(max_n, workers, inject_fault, out),
    }
}

fn cmd_count(family: &str, n: usize, out: &mut impl Write) -> CmdResult {
    let count = match family.replace('_', "-").as_str() {
        "compositions" => enumeration::count_compositions(n)?,
        "prime-compositions" => enumeration::count_prime_compositions(n)?,
        "disconnected" => enumeration::count_disconnected_compositions(n)?,
        "palindromes" => enumeration::count_palindromes(n)?,
        "aperiodic-palindromes" => enumeration::count_aperiodic_palindromes(n)?,
        _ => {
            return Err(Failure::Usage(format!(
                "unknown family `{family}` (expected compositions, prime-compositions, \
                 disconnected, palindromes, or aperiodic-palindromes)"
            )))
        }
    };
    writeln!(out, "{count}")?;
    Ok(())
}

const TRUNCATED: &str = "…truncated";

fn cmd_list(
    family: &str,
    n: usize,
    limit: Option<usize>,
    format: Format,
    out: &mut impl Write,
) -> CmdResult {
    let family: Family = family.parse()?;
    if limit == Some(0) {
        return Err(Failure::Usage("--limit must be at least 1".into()));
    }
    let stream = members(n, family)?;
    let limit = limit.unwrap_or(usize::MAX);
    let mut truncated = false;
    if let Format::Json = format {
        out.write_all(b"[")?;
    }
    for (emitted, m) in stream.enumerate() {
        if emitted == limit {
            truncated = true;
            break;
        }
        match format {
            Format::Text => writeln!(out, "{m}")?,
            Format::Json => {
                if emitted > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "{}", json!(m.values()))?;
            }
        }
    }
    match format {
        Format::Text => {
            if truncated {
                writeln!(out, "{TRUNCATED}")?;
            }
        }
        Format::Json => {
            writeln!(out, "]")?;
            if truncated {
                // keep stdout valid JSON
                out.flush()?;
                eprintln!("{TRUNCATED}");
            }
        }
    }
    Ok(())
}

fn parse_composition(s: &str) -> Result<Composition, Failure> {
    Ok(s.parse::<Composition>()?)
}

fn parse_set(s: &str) -> Result<ConnectionSet, Failure> {
    Ok(s.parse::<ConnectionSet>()?)
}

fn cmd_convert(direction: Direction, payload: &str, out: &mut impl Write) -> CmdResult {
    let text = match direction {
        Direction::ToSet => connection_set_of(&parse_composition(payload)?).to_string(),
        Direction::ToComposition => composition_of(&parse_set(payload)?).to_string(),
        Direction::Tau => connected_set_of(&parse_composition(payload)?)?.to_string(),
        Direction::TauInv => aperiodic_palindrome_of(&parse_set(payload)?)?.to_string(),
    };
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_graph(
    n: usize,
    members_text: &str,
    mode: Mode,
    format: GraphFormat,
    out: &mut impl Write,
) -> CmdResult {
    let values = parse_members(members_text)
        .map_err(|reason| Failure::Usage(format!("cannot parse `{members_text}`: {reason}")))?;
    let set = ConnectionSet::from_signed(n, values)?;
    let text = match (mode, format) {
        (Mode::Digraph, GraphFormat::Dot) => export::digraph_dot(&set.digraph()),
        (Mode::Digraph, GraphFormat::Edgelist) => export::edge_list(&set.digraph().arcs()),
        (Mode::Graph, GraphFormat::Dot) => export::graph_dot(&set.graph()?),
        (Mode::Graph, GraphFormat::Edgelist) => export::edge_list(&set.graph()?.edges()),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_table(max_n: usize, format: Format, out: &mut impl Write) -> CmdResult {
    let table = CountTable::build(max_n)?;
    match format {
        Format::Text => write_text_table(table.rows(), out)?,
        Format::Json => {
            let rows: Vec<_> = table.rows().iter().map(row_json).collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
    }
    Ok(())
}

fn row_json(r: &CountRow) -> serde_json::Value {
    // counts exceed 64 bits quickly, so they travel as decimal strings
    json!({
        "n": r.n,
        "total_compositions": r.total_compositions.to_string(),
        "prime_compositions": r.prime_compositions.to_string(),
        "disconnected": r.disconnected.to_string(),
        "palindromes": r.palindromes.to_string(),
        "aperiodic_palindromes": r.aperiodic_palindromes.as_ref().map(BigCount::to_string),
    })
}

fn write_text_table(rows: &[CountRow], out: &mut impl Write) -> io::Result<()> {
    const HEADER: [&str; 6] = [
        "n",
        "compositions",
        "prime",
        "disconnected",
        "palindromes",
        "aperiodic_palindromes",
    ];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.total_compositions.to_string(),
                r.prime_compositions.to_string(),
                r.disconnected.to_string(),
                r.palindromes.to_string(),
                r.aperiodic_palindromes
                    .as_ref()
                    .map_or_else(|| "-".to_string(), BigCount::to_string),
            ]
        })
        .collect();
    let mut widths = HEADER.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cols: &[&str]| {
        cols.iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&HEADER))?;
    for row in &cells {
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&refs))?;
    }
    Ok(())
}

fn cmd_verify(
    max_n: Option<usize>,
    workers: Option<usize>,
    fault: Option<Fault>,
    out: &mut impl Write,
) -> CmdResult {
    let mut config = match max_n {
        Some(m) if m < 2 => return Err(Failure::Usage("--max-n must be at least 2".into())),
        Some(m) => VerifyConfig::uniform(m),
        None => VerifyConfig::default(),
    };
    if workers == Some(0) {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    config.workers = workers;
    if let Some(Fault::LiteralGcd) = fault {
        config.gcd_rule = GcdRule::Elementwise;
    }
    let reports = verify::run(&config);
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "all {} suites passed", reports.len())?;
        Ok(())
    } else {
        writeln!(out, "{failed} of {} suites failed", reports.len())?;
        out.flush()?;
        Err(Failure::Verification)
    }
}
