//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.
//!
//! Exit codes: `0` success, `1` closed form and brute force disagree,
//! `2` usage error.

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, closed_form, representatives_symbolic, ClassificationResult};
use crate::error::Error;
use crate::kgroups::{check_k, Notation, K_RANGE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default `n` range for each `k`; `SPHEREFIB_N_RANGE_K<k>` overrides it.
pub fn default_range(k: u32) -> NRange {
    let env = format!("SPHEREFIB_N_RANGE_K{k}");
    if let Some(r) = std::env::var(&env).ok().and_then(|v| v.parse().ok()) {
        return r;
    }
    let hi = match k {
        2 | 3 => 500,
        4 | 5 => 300,
        _ => 150,
    };
    NRange { lo: 2, hi }
}

/// Inclusive range `lo..hi`, or a single `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

impl NRange {
    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad n `{t}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo < 2 {
            return Err(format!("n must be at least 2, got {lo}"));
        }
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `all` or a comma-separated list of `k` values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KList(pub Vec<u32>);

impl FromStr for KList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "all" {
            return Ok(KList(K_RANGE.collect()));
        }
        let mut ks = Vec::new();
        for part in s.split(',') {
            let k: u32 = part.trim().parse().map_err(|e| format!("bad k `{part}`: {e}"))?;
            check_k(k).map_err(|e| e.to_string())?;
            if !ks.contains(&k) {
                ks.push(k);
            }
        }
        Ok(KList(ks))
    }
}

fn parse_k(s: &str) -> Result<u32, String> {
    let k: u32 = s.parse().map_err(|e| format!("bad k `{s}`: {e}"))?;
    check_k(k).map_err(|e| e.to_string())?;
    Ok(k)
}

fn parse_n(s: &str) -> Result<u64, String> {
    let n: u64 = s.parse().map_err(|e| format!("bad n `{s}`: {e}"))?;
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "spherefib", version, about = "Count homotopy types of sphere fibrations over spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Use Greek glyphs for generator names.
    #[arg(long)]
    pub unicode: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a single (k, n): count, case and representatives.
    Classify {
        #[arg(long, value_parser = parse_k)]
        k: u32,
        #[arg(long, value_parser = parse_n)]
        n: u64,
        /// Include elapsed time in the output.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check closed form against brute force over a range.
    Verify {
        #[arg(long, default_value = "all")]
        k: KList,
        /// `lo..hi` (inclusive) or a single n; defaults depend on k.
        #[arg(long)]
        n: Option<NRange>,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long, env = "SPHEREFIB_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate the closed-form count with the invariants it depends on.
    Table {
        #[arg(long)]
        k: KList,
        #[arg(long)]
        n: Option<NRange>,
        #[command(flatten)]
        common: Common,
    },
}

/// Machine-readable result of `classify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub k: u32,
    pub n: u64,
    pub branch: String,
    #[serde(rename = "G")]
    pub g: u64,
    pub closed_form_g: u64,
    pub brute_force_g: u64,
    pub representatives: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl OutputRecord {
    pub fn from_result(r: &ClassificationResult, notation: Notation) -> Self {
        Self {
            k: r.k,
            n: r.n,
            branch: r.branch.label().to_string(),
            g: r.brute_force_g,
            closed_form_g: r.closed_form_g,
            brute_force_g: r.brute_force_g,
            representatives: representatives_symbolic(r, notation),
            timing_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: u32,
    pub n: u64,
    pub branch: String,
    pub star: bool,
    pub rho3: u64,
    pub rho5: u64,
    pub rho7: u64,
    pub rho9: u64,
    #[serde(rename = "G")]
    pub g: u64,
}

pub fn table_rows(k: u32, range: NRange) -> crate::error::Result<Vec<TableRow>> {
    range
        .iter()
        .map(|n| {
            let cf = closed_form(k, n)?;
            let v = cf.invariants;
            Ok(TableRow {
                k,
                n,
                branch: cf.branch.label().to_string(),
                star: v.star,
                rho3: v.rho3,
                rho5: v.rho5,
                rho7: v.rho7,
                rho9: v.rho9,
                g: cf.g,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: u64,
    pub closed_form_g: u64,
    pub brute_force_g: u64,
    pub partition: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub k: u32,
    pub lo: u64,
    pub hi: u64,
    pub pass: u64,
    pub fail: u64,
    pub failures: Vec<Failure>,
}

/// Cross-validates every `n` in `range` on `jobs` threads. The summary does
/// not depend on `jobs`.
pub fn verify_range(k: u32, range: NRange, jobs: Option<usize>) -> crate::error::Result<VerifySummary> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");
    let results: Vec<crate::error::Result<ClassificationResult>> =
        pool.install(|| range.iter().collect::<Vec<_>>().into_par_iter().map(|n| classify(k, n)).collect());
    let mut summary = VerifySummary {
        k,
        lo: range.lo,
        hi: range.hi,
        pass: 0,
        fail: 0,
        failures: Vec::new(),
    };
    for r in results {
        let r = r?;
        if r.is_consistent() {
            summary.pass += 1;
        } else {
            summary.fail += 1;
            summary.failures.push(Failure {
                n: r.n,
                closed_form_g: r.closed_form_g,
                brute_force_g: r.brute_force_g,
                partition: r.partition.to_string(),
            });
        }
    }
    Ok(summary)
}

enum Failed {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failed {
    fn from(e: io::Error) -> Self {
        Failed::Io(e)
    }
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failed {
    fn from(e: csv::Error) -> Self {
        Failed::Io(io::Error::other(e))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let common = match &cli.command {
        Command::Classify { common, .. } | Command::Verify { common, .. } | Command::Table { common, .. } => common,
    };
    let mut file;
    let out: &mut dyn Write = match &common.out {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot create {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => stdout,
    };
    let result = execute(&cli.command, out, stderr).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failed::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failed::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failed::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn notation(common: &Common) -> Notation {
    if common.unicode {
        Notation::Unicode
    } else {
        Notation::Ascii
    }
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failed> {
    match cmd {
        Command::Classify { k, n, timing, common } => {
            let start = Instant::now();
            let result = classify(*k, *n)?;
            let mut record = OutputRecord::from_result(&result, notation(common));
            if *timing {
                record.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            write_classify(&record, common.format, out)?;
            if result.is_consistent() {
                Ok(EXIT_OK)
            } else {
                writeln!(
                    err,
                    "mismatch: closed form {} vs brute force {}\n{}",
                    result.closed_form_g, result.brute_force_g, result.partition
                )?;
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Verify { k, n, jobs, common } => {
            let mut summaries = Vec::new();
            for &k in &k.0 {
                let range = n.unwrap_or_else(|| default_range(k));
                summaries.push(verify_range(k, range, *jobs)?);
            }
            write_verify(&summaries, common.format, out)?;
            let failed = summaries.iter().any(|s| s.fail > 0);
            Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Table { k, n, common } => {
            let mut rows = Vec::new();
            for &k in &k.0 {
                rows.extend(table_rows(k, n.unwrap_or_else(|| default_range(k)))?);
            }
            write_table(&rows, common.format, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_classify(r: &OutputRecord, format: Format, out: &mut dyn Write) -> Result<(), Failed> {
    match format {
        Format::Text => {
            writeln!(out, "k = {}, n = {}", r.k, r.n)?;
            writeln!(out, "case: {}", r.branch)?;
            writeln!(out, "G = {} (closed form {}, brute force {})", r.g, r.closed_form_g, r.brute_force_g)?;
            if let Some(ms) = r.timing_ms {
                writeln!(out, "time: {ms} ms")?;
            }
            writeln!(out, "representatives:")?;
            let width = r.representatives.len().to_string().len();
            for (i, rep) in r.representatives.iter().enumerate() {
                writeln!(out, "  {:>width$}  {rep}", i + 1)?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, r).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["k", "n", "branch", "G", "index", "representative"])?;
            for (i, rep) in r.representatives.iter().enumerate() {
                w.write_record([
                    r.k.to_string(),
                    r.n.to_string(),
                    r.branch.clone(),
                    r.g.to_string(),
                    (i + 1).to_string(),
                    rep.clone(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_verify(summaries: &[VerifySummary], format: Format, out: &mut dyn Write) -> Result<(), Failed> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, summaries).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["k", "lo", "hi", "pass", "fail"])?;
            for s in summaries {
                w.write_record([s.k.to_string(), s.lo.to_string(), s.hi.to_string(), s.pass.to_string(), s.fail.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for s in summaries {
                writeln!(out, "k={} n={}..{}: {} pass / {} fail", s.k, s.lo, s.hi, s.pass, s.fail)?;
                for f in &s.failures {
                    writeln!(
                        out,
                        "  n={}: closed form {} vs brute force {}",
                        f.n, f.closed_form_g, f.brute_force_g
                    )?;
                    for line in f.partition.lines() {
                        writeln!(out, "    {line}")?;
                    }
                }
            }
            if summaries.len() > 1 {
                let pass: u64 = summaries.iter().map(|s| s.pass).sum();
                let fail: u64 = summaries.iter().map(|s| s.fail).sum();
                writeln!(out, "total: {pass} pass / {fail} fail")?;
            }
        }
    }
    Ok(())
}

fn write_table(rows: &[TableRow], format: Format, out: &mut dyn Write) -> Result<(), Failed> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let bw = rows.iter().map(|r| r.branch.len()).max().unwrap_or(0).max("case".len());
            writeln!(out, "{:>2} {:>6}  {:<bw$}  star rho3 rho5 rho7 rho9 {:>4}", "k", "n", "case", "G")?;
            for r in rows {
                writeln!(
                    out,
                    "{:>2} {:>6}  {:<bw$}  {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}",
                    r.k,
                    r.n,
                    r.branch,
                    if r.star { "yes" } else { "no" },
                    r.rho3,
                    r.rho5,
                    r.rho7,
                    r.rho9,
                    r.g
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("spherefib").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn range_parsing() {
        assert_eq!("2..500".parse::<NRange>(), Ok(NRange { lo: 2, hi: 500 }));
        assert_eq!("2..=7".parse::<NRange>(), Ok(NRange { lo: 2, hi: 7 }));
        assert_eq!("63".parse::<NRange>(), Ok(NRange { lo: 63, hi: 63 }));
        assert!("1..5".parse::<NRange>().is_err());
        assert!("9..5".parse::<NRange>().is_err());
        assert_eq!("all".parse::<KList>(), Ok(KList(vec![2, 3, 4, 5, 6])));
        assert_eq!("4,2,4".parse::<KList>(), Ok(KList(vec![4, 2])));
        assert!("2,7".parse::<KList>().is_err());
    }

    #[test]
    fn classify_text() {
        let (code, out, _) = run_str(&["classify", "--k", "2", "--n", "12"]);
        assert_eq!(code, 0);
        assert!(out.contains("G = 6"), "{out}");
        assert_eq!(out.lines().skip_while(|l| *l != "representatives:").count(), 7);
    }

    #[test]
    fn classify_json() {
        let (code, out, _) = run_str(&["classify", "--k", "5", "--n", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let r: OutputRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(r.g, 1);
        assert_eq!(r.representatives, vec!["(1/2)θ"]);
        assert_eq!(r.timing_ms, None);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["classify", "--k", "7", "--n", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["classify", "--k", "2", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["table", "--k", "2", "--n", "5..3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_summary_line() {
        let (code, out, _) = run_str(&["verify", "--k", "3", "--n", "2..60"]);
        assert_eq!(code, 0);
        assert_eq!(out, "k=3 n=2..60: 59 pass / 0 fail\n");
    }

    #[test]
    fn table_csv() {
        let (code, out, _) = run_str(&["table", "--k", "2", "--n", "3..3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "k,n,branch,star,rho3,rho5,rho7,rho9,G\n2,3,n odd,false,1,0,0,0,2\n");
    }

    #[test]
    fn record_round_trip() {
        let r = classify(4, 24).unwrap();
        let mut rec = OutputRecord::from_result(&r, Notation::Unicode);
        rec.timing_ms = Some(12);
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&text).unwrap(), rec);
    }
}
