//! The `altcoinv` command line.
//!
//! Exit codes: 0 on success, 1 on usage or resource errors, 2 when a
//! computation contradicts the claim being checked.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coinvariants::{
    alternating_hilbert_series_with, hilbert_series_with, qt_catalan_combinatorial,
    verify_main_theorem_with, HilbertReport, Options,
};
use crate::error::{Error, Result};
use crate::fuss::{
    area_generating_function, decomposition_explorer, enumerate_filtered_chains,
    fuss_hilbert_report, q_fuss_catalan,
};
use crate::harmonics::{change_of_basis_report, gz_selection_all, mn_expansion};
use crate::linalg::{is_prime, Mode};
use crate::parking::{enumerate_parking, permutation_table};
use crate::partition::Partition;
use crate::paths::{binomial, enumerate_dyck, enumerate_m_dyck, stats_table, DyckPath, MDyckPath};
use crate::qtpoly::QtPolynomial;
use crate::selftest;
use crate::vandermonde::{delta, x_of_path};

pub const SCHEMA: &str = "altcoinv/1";
pub const THREADS_ENV: &str = "ALTCOINV_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "altcoinv",
    version,
    about = "Alternating diagonal coinvariants: exact computations and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    /// Include wall-clock times (output is then no longer byte-stable).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct RankArgs {
    /// Exact rational elimination (the default).
    #[arg(long, conflicts_with = "modular")]
    exact: bool,
    /// Elimination modulo the prime P; results are labelled probabilistic.
    #[arg(long, value_name = "P")]
    modular: Option<u64>,
    /// Re-check modular ranks exactly.
    #[arg(long, requires = "modular")]
    confirm: bool,
    #[arg(long, value_name = "SECONDS")]
    budget_seconds: Option<f64>,
    /// Raise the full-quotient cap from n = 4 to n = 5.
    #[arg(long)]
    extended: bool,
}

impl RankArgs {
    fn options(&self) -> Result<Options> {
        let mode = match self.modular {
            Some(p) if !is_prime(p) || p < 3 => {
                return Err(Error::Invalid(format!("--modular {p} is not an odd prime")))
            }
            Some(p) if p >= 1 << 62 => {
                return Err(Error::Invalid(format!("--modular {p} must be below 2^62")))
            }
            Some(p) => Mode::Modular(p),
            None => Mode::Exact,
        };
        let budget = match self.budget_seconds {
            Some(s) if !(s.is_finite() && s > 0.0) => {
                return Err(Error::Invalid("--budget-seconds must be positive".into()))
            }
            s => s.map(Duration::from_secs_f64),
        };
        Ok(Options {
            mode,
            confirm: self.confirm,
            budget,
            extended: self.extended,
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Dyck paths, m-Dyck paths or parking functions.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        parking: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Path statistics: area, dinv and bounce.
    Stats {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "WORD")]
        path: Option<String>,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// One row per path.
        #[arg(long)]
        table: bool,
        /// Major index tables and schedules for every permutation.
        #[arg(long)]
        permutations: bool,
        #[command(flatten)]
        output: Output,
    },
    /// The bivariate Vandermonde determinant of a path.
    Vandermonde {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "WORD")]
        path: String,
        /// Also write the polynomial as JSON to FILE.
        #[arg(long, value_name = "FILE")]
        emit: Option<std::path::PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Check that the path determinants form a basis of the alternating component.
    VerifyBasis {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        rank: RankArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Bigraded Hilbert series of the diagonal coinvariants.
    Hilbert {
        #[arg(long)]
        n: usize,
        /// Only the alternating component.
        #[arg(long)]
        alternating: bool,
        #[command(flatten)]
        rank: RankArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Σ q^dinv t^area over Dyck paths.
    QtCatalan {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Diagonal harmonics: Schur expansions, selections, change of basis.
    Harmonics {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "change-of-basis")]
        report: HarmonicsReport,
        #[command(flatten)]
        output: Output,
    },
    /// Fuss generalisation: Hilbert series, chains, decompositions.
    Fuss {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "hilbert")]
        report: FussReport,
        /// Allow the decomposition explorer at m = 3.
        #[arg(long)]
        allow_m3: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Run a single criterion.
        #[arg(long, value_name = "ID")]
        criterion: Option<u8>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HarmonicsReport {
    Expansions,
    Selection,
    ChangeOfBasis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FussReport {
    Hilbert,
    Chains,
    Decompositions,
}

/// A rendered report plus whether it records a falsified claim.
struct Report {
    body: String,
    falsified: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report {
            body,
            falsified: false,
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    let target = output_of(&cli.command).out.clone();
    match execute(&cli.command) {
        Ok(report) => {
            let written = match &target {
                Some(path) => std::fs::write(path, &report.body),
                None => out.write_all(report.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            if report.falsified {
                let _ = writeln!(err, "falsified: see report");
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Falsified(_) => 2,
        _ => 1,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let k: usize = v
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("{THREADS_ENV}={v} is not a thread count")))?;
    // Fails only if a pool already exists, e.g. when called twice in one process.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global();
    Ok(())
}

fn output_of(c: &Command) -> &Output {
    match c {
        Command::Enumerate { output, .. }
        | Command::Stats { output, .. }
        | Command::Vandermonde { output, .. }
        | Command::VerifyBasis { output, .. }
        | Command::Hilbert { output, .. }
        | Command::QtCatalan { output, .. }
        | Command::Harmonics { output, .. }
        | Command::Fuss { output, .. }
        | Command::Selftest { output, .. } => output,
    }
}

fn envelope(command: &str, body: Value) -> String {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn no_csv(command: &str) -> Error {
    Error::Invalid(format!("--format csv is not available for {command}"))
}

fn execute(c: &Command) -> Result<Report> {
    let fmt = output_of(c).format;
    let timings = output_of(c).timings;
    match c {
        Command::Enumerate { n, m, parking, .. } => {
            enumerate(*n, *m, *parking, fmt).map(Report::ok)
        }
        Command::Stats {
            n,
            path,
            m,
            table,
            permutations,
            ..
        } => stats(*n, path.as_deref(), *m, *table, *permutations, fmt).map(Report::ok),
        Command::Vandermonde { n, path, emit, .. } => {
            vandermonde(*n, path, emit.as_deref(), fmt).map(Report::ok)
        }
        Command::VerifyBasis { n, rank, .. } => verify_basis(*n, &rank.options()?, fmt, timings),
        Command::Hilbert {
            n,
            alternating,
            rank,
            ..
        } => hilbert(*n, *alternating, &rank.options()?, fmt, timings),
        Command::QtCatalan { n, .. } => qt_catalan(*n, fmt).map(Report::ok),
        Command::Harmonics { n, report, .. } => harmonics(*n, *report, fmt),
        Command::Fuss {
            n,
            m,
            report,
            allow_m3,
            ..
        } => fuss(*n, *m, *report, *allow_m3, fmt),
        Command::Selftest { criterion, .. } => run_selftest(*criterion, fmt, timings),
    }
}

fn enumerate(n: usize, m: usize, parking: bool, fmt: Format) -> Result<String> {
    let (kind, rows): (&str, Vec<(String, Value, String)>) = if parking {
        if m != 1 {
            return Err(Error::Invalid("--parking requires m = 1".into()));
        }
        let pfs = enumerate_parking(n)?;
        let rows = pfs
            .iter()
            .map(|p| (p.to_string(), p.to_json(), p.area_sequence().to_string()))
            .collect();
        ("parking", rows)
    } else if m == 1 {
        let rows = enumerate_dyck(n)?
            .iter()
            .map(|p| (p.to_string(), p.to_json(), p.area_sequence().to_string()))
            .collect();
        ("dyck", rows)
    } else {
        let rows = enumerate_m_dyck(n, m)?
            .iter()
            .map(|p| (p.to_string(), p.to_json(), p.area_sequence().to_string()))
            .collect();
        ("m-dyck", rows)
    };
    Ok(match fmt {
        Format::Text => rows.iter().map(|r| format!("{}\n", r.0)).collect(),
        Format::Csv => {
            let mut s = String::from("object,area_sequence\n");
            for r in &rows {
                let _ = writeln!(s, "{},{}", r.0, r.2);
            }
            s
        }
        Format::Json => envelope(
            "enumerate",
            json!({
                "n": n,
                "m": m,
                "kind": kind,
                "count": rows.len(),
                "objects": rows.into_iter().map(|r| r.1).collect::<Vec<_>>(),
            }),
        ),
    })
}

fn seq(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect()
}

fn stats(
    n: Option<usize>,
    path: Option<&str>,
    m: usize,
    table: bool,
    permutations: bool,
    fmt: Format,
) -> Result<String> {
    if let Some(word) = path {
        return single_path_stats(word, n, m, fmt);
    }
    let n = n.ok_or_else(|| Error::Invalid("stats needs --n or --path".into()))?;
    if permutations {
        let rows = permutation_table(n)?;
        return Ok(match fmt {
            Format::Text | Format::Csv => {
                let sep = if fmt == Format::Csv { "," } else { " " };
                let mut s = ["sigma", "maj", "sch", "cars"].join(sep) + "\n";
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{}",
                        [
                            seq(&r.sigma.one_line()),
                            seq(&r.maj),
                            seq(&r.schedule),
                            r.cars.to_string()
                        ]
                        .join(sep)
                    );
                }
                s
            }
            Format::Json => envelope(
                "stats",
                json!({
                    "n": n,
                    "permutations": rows.iter().map(|r| json!({
                        "sigma": r.sigma.one_line(),
                        "maj": r.maj,
                        "sch": r.schedule,
                        "cars": r.cars,
                    })).collect::<Vec<_>>(),
                }),
            ),
        });
    }
    let rows = stats_table(n)?;
    if table || fmt != Format::Text {
        return Ok(match fmt {
            Format::Text | Format::Csv => {
                let sep = if fmt == Format::Csv { "," } else { " " };
                let mut s =
                    ["word", "area", "dinv", "area_seq", "dinv_seq", "bounce"].join(sep) + "\n";
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{}",
                        [
                            r.path.to_string(),
                            r.area.total().to_string(),
                            r.dinv.total().to_string(),
                            seq(&r.area.0),
                            seq(&r.dinv.0),
                            r.bounce.to_string(),
                        ]
                        .join(sep)
                    );
                }
                s
            }
            Format::Json => envelope(
                "stats",
                json!({
                    "n": n,
                    "count": rows.len(),
                    "paths": rows.iter().map(|r| json!({
                        "word": r.path.to_string(),
                        "area_sequence": r.area.0,
                        "dinv_sequence": r.dinv.0,
                        "area": r.area.total(),
                        "dinv": r.dinv.total(),
                        "bounce": r.bounce,
                    })).collect::<Vec<_>>(),
                }),
            ),
        });
    }
    let mut s = format!("n = {n}: {} Dyck paths\n", rows.len());
    let _ = writeln!(s, "area/dinv: {}", qt_catalan_combinatorial(n)?);
    let mut bounce = QtPolynomial::zero();
    for r in &rows {
        bounce.add_term(r.area.total() as u32, r.bounce as u32, 1);
    }
    let _ = writeln!(s, "area/bounce: {bounce}");
    Ok(s)
}

fn single_path_stats(word: &str, n: Option<usize>, m: usize, fmt: Format) -> Result<String> {
    let p = MDyckPath::parse(word, m)?;
    if let Some(n) = n {
        if n != p.n() {
            return Err(Error::Dimension {
                expected: n,
                found: p.n(),
            });
        }
    }
    let area = p.area_sequence();
    let (dinv, bounce) = match p.to_dyck() {
        Some(d) => (Some(d.dinv_sequence()), d.bounce()),
        None => (None, p.loehr_bounce()),
    };
    Ok(match fmt {
        Format::Json => envelope(
            "stats",
            json!({
                "word": p.to_string(),
                "n": p.n(),
                "m": m,
                "area_sequence": area.0,
                "area": area.total(),
                "dinv_sequence": dinv.as_ref().map(|d| d.0.clone()),
                "dinv": dinv.as_ref().map(|d| d.total()),
                "bounce": bounce,
            }),
        ),
        Format::Text => {
            let mut s = format!("word {p}\narea {} ({})\n", area.total(), seq(&area.0));
            if let Some(d) = &dinv {
                let _ = writeln!(s, "dinv {} ({})", d.total(), seq(&d.0));
            }
            let _ = writeln!(s, "bounce {bounce}");
            s
        }
        Format::Csv => return Err(no_csv("stats --path")),
    })
}

fn vandermonde(
    n: Option<usize>,
    word: &str,
    emit: Option<&std::path::Path>,
    fmt: Format,
) -> Result<String> {
    let p = DyckPath::parse(word)?;
    if let Some(n) = n {
        if n != p.n() {
            return Err(Error::Dimension {
                expected: n,
                found: p.n(),
            });
        }
    }
    let x = x_of_path(&p);
    let f = delta(&x, p.n())?;
    if let Some(file) = emit {
        let mut body = serde_json::to_string_pretty(&f.to_json()).expect("JSON values serialize");
        body.push('\n');
        std::fs::write(file, body)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", file.display())))?;
    }
    let bd = x.bidegree();
    Ok(match fmt {
        Format::Text => format!("{}\n", f.to_text()),
        Format::Json => envelope(
            "vandermonde",
            json!({
                "path": p.to_string(),
                "exponents": x.to_json(),
                "bidegree": [bd.xdeg, bd.ydeg],
                "terms": f.len(),
                "poly": f.to_json(),
            }),
        ),
        Format::Csv => return Err(no_csv("vandermonde")),
    })
}

fn verify_basis(n: usize, opts: &Options, fmt: Format, timings: bool) -> Result<Report> {
    let r = verify_main_theorem_with(n, opts)?;
    let falsified = !r.verified();
    let body = match fmt {
        Format::Json => envelope("verify-basis", r.to_json(timings)),
        Format::Text => {
            let mut s = format!(
                "n = {n}: {} classes, {} expected; {}\n",
                r.classes,
                r.catalan,
                if r.verified() {
                    "basis verified"
                } else {
                    "NOT a basis"
                }
            );
            let method = r.checks.first().map(|c| c.certificate.method.to_string());
            let _ = writeln!(s, "method: {}", method.unwrap_or_else(|| "none".into()));
            for c in r.checks.iter().filter(|c| !c.paths.is_empty()) {
                let d = c.certificate.bidegree;
                let _ = writeln!(
                    s,
                    "({}, {}): quotient {} paths {} [{}] {}",
                    d.xdeg,
                    d.ydeg,
                    c.certificate.quotient_dim,
                    c.paths.len(),
                    c.paths.join(" "),
                    if c.ok() { "full rank" } else { "DEFICIENT" }
                );
            }
            for f in &r.failures {
                let _ = writeln!(s, "failure: {f}");
            }
            if timings {
                let _ = writeln!(s, "elapsed {} ms", r.elapsed.as_millis());
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("q,t,ambient,ideal_rank,quotient,paths,full_rank\n");
            for c in &r.checks {
                let d = c.certificate.bidegree;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    d.xdeg,
                    d.ydeg,
                    c.certificate.ambient_dim,
                    c.certificate.ideal_rank,
                    c.certificate.quotient_dim,
                    c.paths.len(),
                    c.ok()
                );
            }
            s
        }
    };
    Ok(Report { body, falsified })
}

fn hilbert(
    n: usize,
    alternating: bool,
    opts: &Options,
    fmt: Format,
    timings: bool,
) -> Result<Report> {
    let r: HilbertReport = if alternating {
        alternating_hilbert_series_with(n, opts)?
    } else {
        hilbert_series_with(n, opts)?
    };
    let expected = if alternating {
        crate::paths::catalan(n)
    } else {
        r.expected_total
    };
    let falsified = r.total() != expected;
    let body = match fmt {
        Format::Text => {
            let method = r
                .certificates
                .first()
                .map(|c| c.method.to_string())
                .unwrap_or_default();
            format!(
                "{}\ntotal {} (expected {expected}); {method}\n",
                r.series,
                r.total()
            )
        }
        Format::Csv => r.series.to_csv(),
        Format::Json => {
            let mut v = r.to_json(timings);
            v["alternating"] = json!(alternating);
            v["expected_total"] = json!(expected.to_string());
            envelope("hilbert", v)
        }
    };
    Ok(Report { body, falsified })
}

fn qt_catalan(n: usize, fmt: Format) -> Result<String> {
    let s = qt_catalan_combinatorial(n)?;
    Ok(match fmt {
        Format::Text => format!("{s}\n"),
        Format::Csv => s.to_csv(),
        Format::Json => {
            let mut v = s.to_json();
            v["n"] = json!(n);
            v["symmetric"] = json!(s.is_qt_symmetric());
            envelope("qt-catalan", v)
        }
    })
}

fn harmonics(n: usize, report: HarmonicsReport, fmt: Format) -> Result<Report> {
    if fmt == Format::Csv {
        return Err(no_csv("harmonics"));
    }
    match report {
        HarmonicsReport::Expansions => {
            let mut items = Vec::new();
            let mut text = String::new();
            for lambda in Partition::all(n) {
                let e = mn_expansion(&lambda)?;
                let _ = writeln!(text, "s_{lambda} = {}", expansion_text(&e));
                items.push(json!({ "lambda": lambda.parts(), "power_sums": e.to_json() }));
            }
            Ok(Report::ok(match fmt {
                Format::Json => envelope(
                    "harmonics",
                    json!({ "report": "expansions", "n": n, "schur": items }),
                ),
                _ => text,
            }))
        }
        HarmonicsReport::Selection => {
            let sel = gz_selection_all(n)?;
            let falsified = !sel.iter().all(|s| s.matches_census());
            let body = match fmt {
                Format::Json => envelope(
                    "harmonics",
                    json!({
                        "report": "selection",
                        "n": n,
                        "blocks": sel.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    }),
                ),
                _ => {
                    let mut s = String::new();
                    for b in sel
                        .iter()
                        .filter(|b| b.census > 0 || !b.selected.is_empty())
                    {
                        let parts: Vec<String> = b
                            .selected_partitions()
                            .iter()
                            .map(|p| p.to_string())
                            .collect();
                        let _ = writeln!(
                            s,
                            "area {} dinv {}: {} path(s), selected {}",
                            b.area,
                            b.dinv,
                            b.census,
                            if parts.is_empty() {
                                "-".into()
                            } else {
                                parts.join(" ")
                            }
                        );
                    }
                    s
                }
            };
            Ok(Report { body, falsified })
        }
        HarmonicsReport::ChangeOfBasis => {
            let r = change_of_basis_report(n)?;
            Ok(Report::ok(match fmt {
                Format::Json => {
                    let mut v = r.to_json();
                    v["report"] = json!("change-of-basis");
                    envelope("harmonics", v)
                }
                _ => {
                    let mut s = String::new();
                    for b in &r.blocks {
                        let _ = writeln!(
                            s,
                            "area {}: {} path(s) x {} column(s), rank {}, {}",
                            b.area,
                            b.paths.len(),
                            b.basis.len(),
                            b.rank,
                            if b.invertible() {
                                "invertible"
                            } else {
                                "not invertible"
                            }
                        );
                    }
                    s
                }
            }))
        }
    }
}

fn expansion_text(e: &crate::harmonics::PowerSumExpansion) -> String {
    let terms: Vec<String> = e
        .coeffs
        .iter()
        .rev()
        .map(|(mu, c)| format!("({c})*p_{mu}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn fuss(n: usize, m: usize, report: FussReport, allow_m3: bool, fmt: Format) -> Result<Report> {
    match report {
        FussReport::Hilbert => {
            let r = fuss_hilbert_report(n, m)?;
            let shift = (m * binomial(n, 2) as usize) as u32;
            let at_t_one = r.series.at_t_one() == area_generating_function(n, m)?;
            let principal = r.series.principal_specialization(shift) == Some(q_fuss_catalan(n, m)?);
            let falsified = !(at_t_one && principal);
            let body = match fmt {
                Format::Csv => r.series.to_csv(),
                Format::Text => format!(
                    "{}\nt = 1 gives the area generating function: {at_t_one}\nprincipal specialization gives the q-Fuss-Catalan number: {principal}\n",
                    r.series
                ),
                Format::Json => {
                    let mut v = r.to_json();
                    v["t_one_matches_area"] = json!(at_t_one);
                    v["principal_matches_q_fuss_catalan"] = json!(principal);
                    envelope("fuss", v)
                }
            };
            Ok(Report { body, falsified })
        }
        FussReport::Chains => {
            let chains = enumerate_filtered_chains(n, m)?;
            Ok(Report::ok(match fmt {
                Format::Json => envelope(
                    "fuss",
                    json!({
                        "report": "chains",
                        "n": n,
                        "m": m,
                        "count": chains.len(),
                        "chains": chains.iter().map(|c| json!({
                            "ideals": c.ideals().iter().map(|i| i.to_json()).collect::<Vec<_>>(),
                            "summed_area": c.summed_area().0,
                        })).collect::<Vec<_>>(),
                    }),
                ),
                Format::Text | Format::Csv => {
                    let mut s = if fmt == Format::Csv {
                        String::from("chain,summed_area\n")
                    } else {
                        String::new()
                    };
                    for c in &chains {
                        let ideals: Vec<String> =
                            c.ideals().iter().map(|i| i.to_string()).collect();
                        let sep = if fmt == Format::Csv { ";" } else { " < " };
                        let mid = if fmt == Format::Csv { "," } else { "  area " };
                        let _ = writeln!(s, "{}{mid}{}", ideals.join(sep), seq(&c.summed_area().0));
                    }
                    s
                }
            }))
        }
        FussReport::Decompositions => {
            if fmt == Format::Csv {
                return Err(no_csv("fuss --report decompositions"));
            }
            let r = decomposition_explorer(n, m, allow_m3)?;
            Ok(Report::ok(match fmt {
                Format::Json => {
                    let mut v = r.to_json();
                    v["report"] = json!("decompositions");
                    envelope("fuss", v)
                }
                _ => {
                    let mut s = String::new();
                    for p in &r.paths {
                        let _ = writeln!(
                            s,
                            "{} area {} bounce {}: {} area-additive, {} area-and-bounce-additive",
                            p.word,
                            seq(&p.area.0),
                            p.bounce,
                            p.area_additive_unordered(),
                            p.bi_additive_unordered().len()
                        );
                    }
                    for v in [&r.tuple_matching, &r.chain_matching] {
                        let _ = writeln!(
                            s,
                            "matching over {}: {} of {} paths matched ({} candidates)",
                            v.domain, v.matched, v.paths, v.domain_size
                        );
                    }
                    for (label, count) in &r.chain_counts {
                        let _ = writeln!(s, "chains under {label}: {count}");
                    }
                    s
                }
            }))
        }
    }
}

fn run_selftest(criterion: Option<u8>, fmt: Format, timings: bool) -> Result<Report> {
    let results = match criterion {
        Some(id) => vec![selftest::run_criterion(id)],
        None => selftest::run_all(),
    };
    let falsified = results.iter().any(|r| !r.passed);
    let body = match fmt {
        Format::Json => envelope(
            "selftest",
            json!({
                "passed": !falsified,
                "criteria": results.iter().map(|r| r.to_json(timings)).collect::<Vec<_>>(),
            }),
        ),
        Format::Text => results.iter().map(|r| r.line() + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("id,passed\n");
            for r in &results {
                let _ = writeln!(s, "{},{}", r.id, r.passed);
            }
            s
        }
    };
    Ok(Report { body, falsified })
}
