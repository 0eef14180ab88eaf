//! The `nilchain` command line.
//!
//! Exit status: 0 on success, 1 when an identity or law fails (or output
//! cannot be written), 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chain::{Budget, ChainComplex, ComplexKind};
use crate::error::Error;
use crate::ideal::IdealTable;
use crate::literal::parse_chain;
use crate::pairing::Pairing;
use crate::root_system::{RootSystem, RootSystemSpec};
use crate::sums::{verify, VerificationReport, VerifyOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub const DEFAULT_MAX_CHAINS: u64 = 100_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "nilchain",
    version,
    about = "Chains of ad-nilpotent ideals and their alternating sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical positive-root table.
    Roots {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// List all ideals of the Borel with abelian/radical flags and normalizer types.
    Ideals {
        #[command(flatten)]
        system: SystemArgs,
        /// Only abelian ideals.
        #[arg(long)]
        abelian: bool,
        /// Only nonzero parabolic nilradicals.
        #[arg(long)]
        radical: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Stream the chains of one complex with lengths and stabilizer types.
    Chains {
        #[command(flatten)]
        system: SystemArgs,
        /// ci, ca, cr or cp.
        #[arg(long)]
        complex: String,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Apply a pairing involution to one chain and check its laws.
    Pair {
        #[command(flatten)]
        system: SystemArgs,
        /// ci-minus-ca or ci-minus-cr.
        #[arg(long)]
        complex: String,
        /// Chain literal such as "[{2} < {0,1,2}]".
        #[arg(long)]
        chain: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Check every identity and law for one root system.
    Verify {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        limits: LimitArgs,
        /// Worker threads for the chain folds.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// Cartan family: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Allow systems with more than 64 positive roots, and E7/E8.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Abort an enumeration after this many chains.
    #[arg(long, env = "NILCHAIN_MAX_CHAINS", default_value_t = DEFAULT_MAX_CHAINS)]
    max_chains: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Failed(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Failed(format!("write error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Failed(format!("write error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Failed(format!("write error: {e}"))
    }
}

type CliResult = std::result::Result<u8, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Roots { system, format } => roots(&system, format, out),
        Command::Ideals {
            system,
            abelian,
            radical,
            format,
        } => ideals(&system, abelian, radical, format, out),
        Command::Chains {
            system,
            complex,
            limits,
            format,
        } => chains(&system, &complex, &limits, format, out),
        Command::Pair {
            system,
            complex,
            chain,
            format,
        } => pair(&system, &complex, &chain, format, out),
        Command::Verify {
            system,
            limits,
            threads,
            format,
        } => verify_cmd(&system, &limits, threads, format, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn build_system(args: &SystemArgs) -> std::result::Result<RootSystem, Failure> {
    let spec = RootSystemSpec::parse(&args.family, args.rank)?;
    let rs = if args.allow_large {
        RootSystem::build_unrestricted(spec)?
    } else {
        RootSystem::build(spec)?
    };
    Ok(rs)
}

fn roots(args: &SystemArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let rs = build_system(args)?;
    match format {
        Format::Human => {
            writeln!(out, "{}: {} positive roots", rs.spec(), rs.len())?;
            writeln!(out, "{:>5}  {:>6}  coefficients", "index", "height")?;
            for (k, r) in rs.roots().iter().enumerate() {
                writeln!(out, "{:>5}  {:>6}  {}", k, r.height(), r)?;
            }
        }
        Format::Json => {
            let roots: Vec<_> = rs
                .roots()
                .iter()
                .enumerate()
                .map(|(k, r)| json!({ "index": k, "height": r.height(), "coeffs": r.coeffs() }))
                .collect();
            let doc = json!({
                "type": rs.spec().family().to_string(),
                "rank": rs.rank(),
                "cartan": rs.cartan(),
                "roots": roots,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["index".to_string(), "height".to_string()];
            header.extend((1..=rs.rank()).map(|i| format!("c{i}")));
            w.write_record(&header)?;
            for (k, r) in rs.roots().iter().enumerate() {
                let mut row = vec![k.to_string(), r.height().to_string()];
                row.extend(r.coeffs().iter().map(|c| c.to_string()));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn ideals(args: &SystemArgs, only_abelian: bool, only_radical: bool, format: Format, out: &mut dyn Write) -> CliResult {
    let rs = build_system(args)?;
    let table = IdealTable::new(&rs);
    // The radical flag marks possible CR chain members, so the zero ideal is
    // not flagged.
    let rows: Vec<usize> = (0..table.len())
        .filter(|&k| !only_abelian || table.is_abelian(k))
        .filter(|&k| !only_radical || radical_flag(&table, k))
        .collect();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    match format {
        Format::Human => {
            writeln!(out, "{}: {} ideals", rs.spec(), table.len())?;
            writeln!(
                out,
                "{:>5}  {:>3}  {:<7}  {:<7}  {:<10}  roots",
                "index", "dim", "abelian", "radical", "normalizer"
            )?;
            for k in rows {
                let n = table.ideal(k);
                writeln!(
                    out,
                    "{:>5}  {:>3}  {:<7}  {:<7}  {:<10}  {}  {}",
                    k,
                    n.dim(),
                    yes_no(table.is_abelian(k)),
                    yes_no(radical_flag(&table, k)),
                    table.normalizer_type(k).to_string(),
                    n,
                    n.expanded(&rs)
                )?;
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .into_iter()
                .map(|k| {
                    let n = table.ideal(k);
                    let expanded: Vec<&[i32]> = n.roots().iter().map(|i| rs.roots()[i].coeffs()).collect();
                    json!({
                        "index": k,
                        "roots": n.indices(),
                        "expanded": expanded,
                        "abelian": table.is_abelian(k),
                        "radical": radical_flag(&table, k),
                        "normalizer": table.normalizer_type(k).labels(),
                    })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &items)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["index", "dim", "abelian", "radical", "normalizer", "roots"])?;
            for k in rows {
                let n = table.ideal(k);
                w.write_record([
                    k.to_string(),
                    n.dim().to_string(),
                    table.is_abelian(k).to_string(),
                    radical_flag(&table, k).to_string(),
                    table.normalizer_type(k).to_string(),
                    n.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn radical_flag(table: &IdealTable, k: usize) -> bool {
    !table.ideal(k).is_zero() && table.is_radical(k)
}

fn chains(args: &SystemArgs, complex: &str, limits: &LimitArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let kind = ComplexKind::parse(complex)
        .ok_or_else(|| Failure::Usage(format!("unknown complex '{complex}' (expected ci, ca, cr or cp)")))?;
    if format == Format::Csv {
        return Err(Failure::Usage("chains are nested; use --format human or json".into()));
    }
    let rs = build_system(args)?;
    let cx = ChainComplex::new(&rs, kind);
    let budget = Budget::limited(limits.max_chains);
    let mut first = true;
    if format == Format::Json {
        writeln!(out, "[")?;
    } else {
        writeln!(out, "# {} chains of {}", kind, rs.spec())?;
        writeln!(out, "length\tstabilizer\tchain")?;
    }
    let visited = cx.for_each::<Failure, _>(&budget, |view| {
        let (members, text): (serde_json::Value, String) = match view.to_chain() {
            Some(c) => (json!(c.to_index_lists()), c.to_string()),
            None => {
                let d = view.to_parabolic_chain().expect("parabolic complex");
                (json!(d.to_label_lists()), d.to_string())
            }
        };
        if format == Format::Json {
            let sep = if first { "" } else { ",\n" };
            let item = json!({
                "length": view.len(),
                "stabilizer": view.stabilizer_type().labels(),
                "members": members,
            });
            write!(out, "{sep}  {item}")?;
        } else {
            writeln!(out, "{}\t{}\t{}", view.len(), view.stabilizer_type(), text)?;
        }
        first = false;
        Ok(())
    })?;
    if format == Format::Json {
        writeln!(out, "\n]")?;
    } else {
        writeln!(out, "# total {visited}")?;
    }
    Ok(EXIT_OK)
}

fn pair(args: &SystemArgs, complex: &str, literal: &str, format: Format, out: &mut dyn Write) -> CliResult {
    let pairing = Pairing::parse(complex).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown pairing domain '{complex}' (expected ci-minus-ca or ci-minus-cr)"
        ))
    })?;
    let rs = build_system(args)?;
    let chain = parse_chain(&rs, literal)?;
    if !pairing.in_domain(&rs, &chain) {
        let why = match pairing {
            Pairing::NonAbelian => "requires a chain with a nonabelian member",
            Pairing::NonRadical => "requires a chain with a member that is not a parabolic nilradical",
        };
        return Err(Failure::Usage(format!(
            "chain {chain} is not in {}: the pairing {why}",
            pairing.domain_name()
        )));
    }
    let report = pairing.check_laws(&rs, &chain)?;
    let stab = crate::chain::chain_stabilizer_type(&rs, &chain);
    let paired_stab = crate::chain::chain_stabilizer_type(&rs, &report.paired);
    match format {
        Format::Human => {
            writeln!(out, "input:  {chain}  (length {}, stabilizer {stab})", chain.len())?;
            writeln!(
                out,
                "paired: {}  (length {}, stabilizer {paired_stab})",
                report.paired,
                report.paired.len()
            )?;
            writeln!(out, "laws:")?;
            write!(out, "{report}")?;
        }
        Format::Json => {
            let laws: serde_json::Map<String, serde_json::Value> = report
                .laws()
                .iter()
                .map(|(name, ok)| (name.to_string(), json!(ok)))
                .collect();
            let doc = json!({
                "domain": pairing.domain_name(),
                "input": chain.to_index_lists(),
                "paired": report.paired.to_index_lists(),
                "input_stabilizer": stab.labels(),
                "paired_stabilizer": paired_stab.labels(),
                "laws": laws,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            return Err(Failure::Usage(
                "pair output is nested; use --format human or json".into(),
            ))
        }
    }
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_FAILED })
}

fn verify_cmd(args: &SystemArgs, limits: &LimitArgs, threads: usize, format: Format, out: &mut dyn Write) -> CliResult {
    let rs = build_system(args)?;
    let opts = VerifyOptions {
        parallel: threads > 1,
        max_chains: Some(limits.max_chains),
    };
    let report = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::Usage(format!("cannot start {threads} threads: {e}")))?;
        pool.install(|| verify(&rs, &opts))?
    } else {
        verify(&rs, &opts)?
    };
    match format {
        Format::Human => write_report(&rs, &report, out)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["complex", "length", "count"])?;
            for c in &report.complexes {
                for (len, count) in c.chain_counts.by_length.iter().enumerate() {
                    w.write_record([c.complex.name().to_string(), len.to_string(), count.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(if report.verified() { EXIT_OK } else { EXIT_FAILED })
}

fn write_report(rs: &RootSystem, report: &VerificationReport, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{}: {} positive roots", rs.spec(), rs.len())?;
    writeln!(out)?;
    writeln!(
        out,
        "{:<7}  {:>8}  {:>12}  alternating sum",
        "complex", "vertices", "chains"
    )?;
    for c in &report.complexes {
        writeln!(
            out,
            "{:<7}  {:>8}  {:>12}  {}",
            c.complex.name(),
            c.vertices,
            c.chain_counts.total,
            c.sum
        )?;
    }
    writeln!(out, "{:<7}  {:>8}  {:>12}  {}", "closed", "", "", report.closed_form)?;
    writeln!(out)?;
    writeln!(out, "chains by length:")?;
    for c in &report.complexes {
        let hist: Vec<String> = c.chain_counts.by_length.iter().map(u64::to_string).collect();
        writeln!(out, "  {:<3} {}", c.complex.name(), hist.join(" "))?;
    }
    writeln!(out)?;
    for s in &report.involutions {
        writeln!(
            out,
            "pairing on {}: {} chains checked, {} failures, domain sum {}",
            s.domain, s.chains_checked, s.failures, s.domain_sum
        )?;
        if let Some(f) = &s.first_failure {
            writeln!(out, "  first failure: {f}")?;
        }
    }
    writeln!(
        out,
        "CR <-> CP: {} + {} chains checked, {} failures",
        report.bijection.radical_chains_checked, report.bijection.parabolic_chains_checked, report.bijection.failures
    )?;
    if let Some(f) = &report.bijection.first_failure {
        writeln!(out, "  first failure: {f}")?;
    }
    writeln!(out)?;
    writeln!(out, "verdicts:")?;
    for (name, ok) in report.verdicts.iter() {
        writeln!(out, "  {:<28} {}", name, if ok { "PASS" } else { "FAIL" })?;
    }
    writeln!(out)?;
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    writeln!(out, "elapsed: {} ms", report.elapsed_ms)?;
    Ok(())
}
