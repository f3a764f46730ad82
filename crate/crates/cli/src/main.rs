use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ppsearch::iblast::{brute_force, search, SearchOptions, SearchReport, DEFAULT_BRUTE_BUDGET};
use ppsearch::pa::{bound_rows, m_lower_bound, write_bounds_csv, CountTable};
use ppsearch::registry::{default_field, prime_power};
use ppsearch::{Field, FieldSpec};

#[derive(Parser)]
#[command(name = "ppsearch", version, about = "Enumerate normalized permutation polynomials over GF(p^m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long)]
    q: u32,
    /// Primitive polynomial coefficients from degree m down to 0, e.g. 1,3,3.
    #[arg(long, value_delimiter = ',')]
    prim: Option<Vec<u32>>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field> {
        match &self.prim {
            Some(prim) => {
                let (p, m) = prime_power(self.q).with_context(|| format!("{} is not a prime power", self.q))?;
                Ok(Field::new(FieldSpec::new(p, m, prim.clone()))?)
            }
            None => Ok(default_field(self.q)?),
        }
    }
}

#[derive(clap::Args)]
struct SearchArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Degree, or an inclusive range such as 1..9.
    #[arg(long)]
    d: String,
    /// Output file; nothing but the summary is printed without it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for the mask search.
    #[arg(long)]
    workers: Option<usize>,
    /// Progress file for resuming an interrupted run (single degree only).
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Include every class member in JSON output.
    #[arg(long)]
    members: bool,
}

impl SearchArgs {
    fn degrees(&self) -> Result<Vec<usize>> {
        parse_degrees(&self.d)
    }

    fn options(&self) -> SearchOptions {
        SearchOptions { workers: self.workers, checkpoint: self.checkpoint.clone(), keep_members: self.members }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find all nPPs of the given degree(s) and report counts.
    Search(SearchArgs),
    /// Search, then write one CSV row per equivalence class.
    Classes(SearchArgs),
    /// Compare an exhaustive count against the search.
    Oracle {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: usize,
        /// Largest q^(d+1) the exhaustive count may take on.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET)]
        budget: u128,
    },
    /// Sum N_1..N_d into lower bounds on M(q, q-d).
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        /// CSV of known counts with columns q,d,total,provenance.
        #[arg(long)]
        counts: Option<PathBuf>,
        /// Search for any count the file lacks.
        #[arg(long)]
        compute: bool,
        #[arg(long, value_delimiter = ',')]
        prim: Option<Vec<u32>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the power table of a field.
    Field {
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn parse_degrees(text: &str) -> Result<Vec<usize>> {
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo: usize = lo.trim().parse().context("bad degree range start")?;
            let hi: usize = hi.trim().trim_start_matches('=').parse().context("bad degree range end")?;
            if lo > hi {
                bail!("empty degree range {text}");
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![text.trim().parse().context("bad degree")?]),
    }
}

fn write_out(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn summary_csv(reports: &[SearchReport]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "d", "npps", "classes", "total"])?;
    for r in reports {
        w.write_record([r.q.to_string(), r.d.to_string(), r.npps.to_string(), r.class_count().to_string(), r.total.to_string()])?;
    }
    Ok(w.into_inner()?)
}

fn classes_csv(report: &SearchReport) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["representative", "size", "f_len", "g_len"])?;
    for c in &report.classes {
        w.write_record([c.representative.to_text(), c.size.to_string(), c.f_len.to_string(), c.g_len.to_string()])?;
    }
    Ok(w.into_inner()?)
}

fn counts_of(reports: &[SearchReport]) -> Result<Vec<u8>> {
    let mut table = CountTable::default();
    for r in reports {
        table.insert(r.q, r.d, r.total, "computed");
    }
    let mut buf = Vec::new();
    table.write_csv(&mut buf)?;
    Ok(buf)
}

/// `quiet_stdout` moves the summary lines to stderr when stdout carries the table.
fn run_searches(args: &SearchArgs, quiet_stdout: bool) -> Result<Vec<SearchReport>> {
    let field = args.field.field()?;
    let degrees = args.degrees()?;
    if degrees.len() > 1 && args.checkpoint.is_some() {
        bail!("--checkpoint needs a single degree");
    }
    let mut reports = Vec::new();
    for d in degrees {
        let r = search(&field, d, &args.options())?;
        if quiet_stdout {
            eprintln!("{}", r.summary_line());
        } else {
            println!("{}", r.summary_line());
        }
        eprintln!("q={} d={}: {} candidates in {:.2?}", r.q, r.d, r.candidates, r.elapsed);
        reports.push(r);
    }
    Ok(reports)
}

fn cmd_search(args: &SearchArgs) -> Result<()> {
    let reports = run_searches(args, false)?;
    let Some(out) = &args.out else { return Ok(()) };
    let bytes = match (args.format, reports.as_slice()) {
        (Format::Json, [single]) => single.to_json().into_bytes(),
        // a degree range yields a counts file that `bounds --counts` reads back
        (Format::Json, _) => counts_of(&reports)?,
        (Format::Csv, _) => summary_csv(&reports)?,
    };
    write_out(out, &bytes)
}

fn cmd_classes(args: &SearchArgs) -> Result<()> {
    let reports = run_searches(args, args.out.is_none())?;
    let [report] = reports.as_slice() else { bail!("classes takes a single degree") };
    let bytes = match args.format {
        Format::Csv => classes_csv(report)?,
        Format::Json => report.to_json().into_bytes(),
    };
    match &args.out {
        Some(out) => write_out(out, &bytes),
        None => Ok(std::io::stdout().write_all(&bytes)?),
    }
}

fn cmd_oracle(field: &FieldArgs, d: usize, budget: u128) -> Result<bool> {
    let f = field.field()?;
    let brute = brute_force(&f, d, budget, false)?;
    let found = search(&f, d, &SearchOptions::default())?;
    let verdict = if brute.count == found.total { "MATCH" } else { "MISMATCH" };
    println!("{verdict} q={} d={d} brute_force={} search={}", f.q(), brute.count, found.total);
    Ok(brute.count == found.total)
}

fn cmd_bounds(q: u32, d: usize, counts: Option<&Path>, compute: bool, prim: Option<Vec<u32>>, out: Option<&Path>) -> Result<()> {
    let mut table = match counts {
        Some(path) => CountTable::load(path)?,
        None => CountTable::default(),
    };
    if compute {
        let field = FieldArgs { q, prim }.field()?;
        for k in 1..=d {
            if table.get(q, k).is_none() {
                let r = search(&field, k, &SearchOptions::default())?;
                table.insert(q, k, r.total, "computed");
            }
        }
    }
    let bound = m_lower_bound(q, d, &table)?;
    let rows = bound_rows(q, d, &table);
    for r in &rows {
        println!("M({},{}) >= {}", r.n, r.distance, r.bound);
    }
    debug_assert_eq!(rows.last().map(|r| r.bound), Some(bound));
    if let Some(out) = out {
        let mut buf = Vec::new();
        write_bounds_csv(&rows, &mut buf)?;
        write_out(out, &buf)?;
    }
    Ok(())
}

fn cmd_field(args: &FieldArgs) -> Result<()> {
    let f = args.field()?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "# GF({}) p={} m={} prim={}", f.q(), f.p(), f.m(), f.spec().poly_string())?;
    writeln!(out, "# index exponent basis(low..high) frobenius")?;
    for x in f.nonzero_elements() {
        let basis: Vec<String> = f.poly_basis(x).iter().map(u32::to_string).collect();
        let e = f.exponent(x).expect("nonzero");
        writeln!(out, "{} {} {} {}", x, e, basis.join(","), f.frobenius(x))?;
    }
    let mut seen = vec![false; f.q() as usize];
    let mut orbits = Vec::new();
    for x in f.elements() {
        if seen[x.index()] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut y = x;
        while !seen[y.index()] {
            seen[y.index()] = true;
            orbit.push(y.to_string());
            y = f.frobenius(y);
        }
        orbits.push(format!("{{{}}}", orbit.join(",")));
    }
    writeln!(out, "# frobenius orbits: {}", orbits.join(" "))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Search(args) => cmd_search(args).map(|_| true),
        Command::Classes(args) => cmd_classes(args).map(|_| true),
        Command::Oracle { field, d, budget } => cmd_oracle(field, *d, *budget),
        Command::Bounds { q, d, counts, compute, prim, out } => {
            cmd_bounds(*q, *d, counts.as_deref(), *compute, prim.clone(), out.as_deref()).map(|_| true)
        }
        Command::Field { field } => cmd_field(field).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
