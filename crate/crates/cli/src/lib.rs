//! The `ellgcd` command-line interface.

pub mod config;
pub mod corpus;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use ellgcd_core::*;
use serde_json::json;

use config::{Params, RunConfig, SchemaError};
use report::{digest, opt, sig12, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "ellgcd", version, about = "GCD divisors of multiples of sections on elliptic surfaces over Q(t)")]
struct Cli {
    /// Worker threads; 0 or unset uses every core. Output does not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Source {
    /// TOML run configuration.
    #[arg(long, conflicts_with = "builtin")]
    config: Option<PathBuf>,
    /// Name of a built-in configuration (see `ellgcd corpus`).
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degrees of GCD([n1]P1 - Q1, [n2]P2 - Q2).
    GcdTable {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        diagonal: bool,
    },
    /// Minimal exponents n_gamma, the divisibility law and prime stability.
    Stability {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        prime_max: Option<u32>,
    },
    /// Per-place maximum multiplicity of [n]P meeting Q.
    MultBound {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        side: Option<u8>,
    },
    /// Relation loci [m]P = Q and root height statistics.
    Locus {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        m: Vec<i64>,
        #[arg(long)]
        side: Option<u8>,
    },
    /// Canonical height on the generic fiber and along fibers t.
    Heights {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        fiber_depth: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t: Vec<String>,
        #[arg(long)]
        side: Option<u8>,
    },
    /// Fibers, points, torsion orders and heights at rational t.
    Specialize {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t: Vec<String>,
        #[arg(long)]
        fiber_depth: Option<u32>,
        #[arg(long)]
        side: Option<u8>,
    },
    /// Rational t where both [m_i]P_i = Q_i hold.
    Relations {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        t_height_cap: Option<f64>,
    },
    /// gcd(a^n - 1, b^n - 1) and its lcm bound.
    Ar {
        #[command(flatten)]
        src: Source,
        /// Coefficients of a, lowest degree first, e.g. "0,1".
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// List built-in configurations, or print one as TOML.
    Corpus { name: Option<String> },
}

enum Failure {
    Schema(String),
    /// Partial report after a resource cap.
    Cap(Box<Report>),
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::Schema(e.0)
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return EXIT_OK;
                }
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_SCHEMA,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    if let Command::Corpus { name } = &cli.command {
        return corpus_command(name.as_deref(), stdout, stderr);
    }
    match execute(&cli) {
        Ok((text, code)) => {
            if let Err(e) = emit(&cli, &text, stdout) {
                let _ = writeln!(stderr, "ellgcd: cannot write output: {e}");
                return EXIT_SCHEMA;
            }
            if code == EXIT_CAP {
                let _ = writeln!(stderr, "ellgcd: resource cap reached; partial output written");
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(stderr, "ellgcd: {msg}");
            EXIT_SCHEMA
        }
    }
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn corpus_command(name: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match name {
        None => {
            for n in corpus::names() {
                let _ = writeln!(stdout, "{n}");
            }
            EXIT_OK
        }
        Some(n) => match corpus::get(n) {
            Some(text) => {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            }
            None => {
                let _ = writeln!(stderr, "ellgcd: unknown built-in config {n:?}");
                EXIT_SCHEMA
            }
        },
    }
}

/// Loads, validates and runs; returns rendered text and exit code, or a
/// schema message with nothing to write.
fn execute(cli: &Cli) -> std::result::Result<(String, i32), String> {
    let src = source_of(&cli.command);
    let cfg = load(src, matches!(cli.command, Command::Ar { .. })).map_err(|e| e.0)?;
    let format = match (cli.format, cfg.params.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::parse(s).ok_or_else(|| format!("params.format must be csv or json, got {s:?}"))?,
        (None, None) => Format::Csv,
    };
    let workers = cli.workers.or(cfg.params.workers).unwrap_or(0);
    let limits = limits_from_env()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| format!("worker pool: {e}"))?;
    match pool.install(|| dispatch(&cli.command, &cfg, &limits)) {
        Ok(r) => Ok((r.render(format), EXIT_OK)),
        Err(Failure::Cap(r)) => Ok((r.render(format), EXIT_CAP)),
        Err(Failure::Schema(msg)) => Err(msg),
    }
}

fn source_of(cmd: &Command) -> &Source {
    match cmd {
        Command::GcdTable { src, .. }
        | Command::Stability { src, .. }
        | Command::MultBound { src, .. }
        | Command::Locus { src, .. }
        | Command::Heights { src, .. }
        | Command::Specialize { src, .. }
        | Command::Relations { src, .. }
        | Command::Ar { src, .. } => src,
        Command::Corpus { .. } => unreachable!("handled before dispatch"),
    }
}

fn load(src: &Source, optional: bool) -> std::result::Result<RunConfig, SchemaError> {
    match (&src.config, &src.builtin) {
        (Some(path), _) => RunConfig::load(path),
        (None, Some(name)) => RunConfig::builtin(name),
        (None, None) if optional => Ok(RunConfig::default()),
        (None, None) => Err(SchemaError("one of --config or --builtin is required".into())),
    }
}

fn limits_from_env() -> std::result::Result<Limits, String> {
    match std::env::var(limits::DEGREE_CAP_ENV) {
        Ok(v) if v.trim().parse::<u64>().is_err() => {
            Err(format!("{} must be a non-negative integer, got {v:?}", limits::DEGREE_CAP_ENV))
        }
        _ => Ok(Limits::from_env()),
    }
}

/// Everything that determines a report's content, hashed into its header.
fn fingerprint(command: &str, cfg: &RunConfig, resolved: &Params, limits: &Limits) -> String {
    let mut base = cfg.clone();
    base.params = Params::default();
    digest(&json!({
        "command": command,
        "config": base,
        "params": resolved,
        "limits": limits,
    }))
}

fn core_failure(report: Report, err: Error) -> Failure {
    match err {
        Error::ResourceCap { .. } => {
            let mut r = report;
            r.partial = Some(err.to_string());
            Failure::Cap(Box::new(r))
        }
        other => Failure::Schema(other.to_string()),
    }
}

fn side_of(flag: Option<u8>, params: &Params) -> std::result::Result<u8, Failure> {
    match flag.or(params.side).unwrap_or(1) {
        s @ (1 | 2) => Ok(s),
        s => Err(Failure::Schema(format!("side must be 1 or 2, got {s}"))),
    }
}

fn parse_ts(items: &[String]) -> std::result::Result<Vec<Rational>, Failure> {
    items
        .iter()
        .map(|s| parse_rational(s).map_err(|e| Failure::Schema(format!("t: {e}"))))
        .collect()
}

fn dispatch(cmd: &Command, cfg: &RunConfig, limits: &Limits) -> Outcome {
    let p = &cfg.params;
    match cmd {
        Command::GcdTable { n_max, diagonal, .. } => {
            let resolved = Params {
                n_max: Some(n_max.or(p.n_max).unwrap_or(10)),
                diagonal: Some(*diagonal || p.diagonal.unwrap_or(false)),
                ..Params::default()
            };
            gcd_table(cfg, &resolved, limits)
        }
        Command::Stability { n_max, prime_max, .. } => {
            let resolved = Params {
                n_max: Some(n_max.or(p.n_max).unwrap_or(10)),
                prime_max: Some(prime_max.or(p.prime_max).unwrap_or(31)),
                ..Params::default()
            };
            stability(cfg, &resolved, limits)
        }
        Command::MultBound { n_max, n_min, side, .. } => {
            let resolved = Params {
                n_max: Some(n_max.or(p.n_max).unwrap_or(10)),
                n_min: Some(n_min.or(p.n_min).unwrap_or(1)),
                side: Some(side_of(*side, p)?),
                ..Params::default()
            };
            mult_bound(cfg, &resolved, limits)
        }
        Command::Locus { m, side, .. } => {
            let ms = if m.is_empty() { p.m.clone().unwrap_or_else(|| vec![2]) } else { m.clone() };
            let resolved = Params {
                m: Some(ms),
                side: Some(side_of(*side, p)?),
                ..Params::default()
            };
            locus(cfg, &resolved)
        }
        Command::Heights { depth, fiber_depth, t, side, .. } => {
            let resolved = Params {
                depth: Some(depth.or(p.depth).unwrap_or(4)),
                fiber_depth: Some(fiber_depth.or(p.fiber_depth).unwrap_or(DEFAULT_Q_DEPTH)),
                t: Some(if t.is_empty() { p.t.clone().unwrap_or_default() } else { t.clone() }),
                side: Some(side_of(*side, p)?),
                ..Params::default()
            };
            heights(cfg, &resolved, limits)
        }
        Command::Specialize { t, fiber_depth, side, .. } => {
            let resolved = Params {
                t: Some(if t.is_empty() { p.t.clone().unwrap_or_default() } else { t.clone() }),
                fiber_depth: Some(fiber_depth.or(p.fiber_depth).unwrap_or(DEFAULT_Q_DEPTH)),
                side: side.or(p.side),
                ..Params::default()
            };
            specialize(cfg, &resolved, limits)
        }
        Command::Relations { t_height_cap, .. } => {
            let resolved = Params {
                t_height_cap: Some(t_height_cap.or(p.t_height_cap).unwrap_or(10f64.ln())),
                ..Params::default()
            };
            relations(cfg, &resolved, limits)
        }
        Command::Ar { a, b, n_max, .. } => {
            let mut cfg = cfg.clone();
            match (a, b) {
                (Some(a), Some(b)) => {
                    let parse = |s: &str| Poly::parse_list(s).map_err(|e| Failure::Schema(format!("ar: {e}")));
                    cfg.ar = Some(config::ArSection { a: parse(a)?, b: parse(b)? });
                }
                (None, None) => {}
                _ => return Err(Failure::Schema("--a and --b must be given together".into())),
            }
            let resolved = Params {
                n_max: Some(n_max.or(p.n_max).unwrap_or(10)),
                ..Params::default()
            };
            ar(&cfg, &resolved)
        }
        Command::Corpus { .. } => unreachable!("handled before dispatch"),
    }
}

fn gcd_table(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let pair = cfg.pair()?;
    let (n_max, diagonal) = (rp.n_max.unwrap(), rp.diagonal.unwrap());
    if n_max == 0 {
        return Err(Failure::Schema("n_max must be at least 1".into()));
    }
    let mut r = Report::new("gcd-table", fingerprint("gcd-table", cfg, rp, limits));
    r.header = vec!["n1", "n2", "degree", "divisor", "zero_section"];
    let (rep, err) = match gcd_degree_table(&pair, n_max, diagonal, limits) {
        Ok(rep) => (rep, None),
        Err(p) => (p.partial, Some(p.error)),
    };
    r.meta("independence_asserted", pair.independence_asserted);
    r.meta("bad_places", &rep.bad_places);
    r.meta("degree_growth_flag", rep.degree_growth_flag());
    r.rows = rep
        .rows
        .iter()
        .map(|row| {
            vec![
                row.n1.to_string(),
                row.n2.to_string(),
                opt(&row.degree),
                opt(&row.divisor),
                opt(&row.zero_section),
            ]
        })
        .collect();
    r.payload = serde_json::to_value(&rep).expect("report serializes");
    match err {
        None => Ok(r),
        Some(e) => Err(core_failure(r, e)),
    }
}

fn stability(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let pair = cfg.pair()?;
    let mut r = Report::new("stability", fingerprint("stability", cfg, rp, limits));
    let (rep, err) = match stability_scan(&pair, rp.n_max.unwrap(), rp.prime_max.unwrap(), limits) {
        Ok(rep) => (rep, None),
        Err(p) => (p.partial, Some(p.error)),
    };
    let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    r.meta("base_gcd", &rep.base_gcd);
    r.meta("density_lower_bound", format_rational(&rep.density_lower_bound));
    r.meta("stable_primes", join(&rep.stable_primes));
    r.meta("exceptional_primes", join(&rep.exceptional_primes));
    r.meta("bad_places", &rep.bad_places);
    r.meta("violations", rep.violations.len());
    for v in &rep.violations {
        r.meta("violation", format!("place={} n={} n_gamma={} in_support={}", v.place, v.n, v.n_gamma, v.in_support));
    }
    r.header = vec!["place", "place_degree", "n_gamma"];
    r.rows = rep
        .n_gamma
        .iter()
        .map(|(place, n)| vec![place.to_string(), place.degree().to_string(), n.to_string()])
        .collect();
    r.payload = serde_json::to_value(&rep).expect("report serializes");
    match err {
        None => Ok(r),
        Some(e) => Err(core_failure(r, e)),
    }
}

fn mult_bound(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let (e, pt, q) = cfg.side(rp.side.unwrap())?;
    let mut r = Report::new("mult-bound", fingerprint("mult-bound", cfg, rp, limits));
    r.header = vec!["place", "place_degree", "max_mult", "argmax_n"];
    match multiplicity_bound_scan_range(&e, &pt, &q, rp.n_min.unwrap(), rp.n_max.unwrap(), limits) {
        Ok(scan) => {
            r.rows = scan
                .iter()
                .map(|b| {
                    vec![
                        b.place.to_string(),
                        b.place.degree().to_string(),
                        b.max_mult.to_string(),
                        b.argmax_n.to_string(),
                    ]
                })
                .collect();
            r.payload = serde_json::to_value(&scan).expect("scan serializes");
            Ok(r)
        }
        Err(err) => Err(core_failure(r, err)),
    }
}

fn locus(cfg: &RunConfig, rp: &Params) -> Outcome {
    let (e, pt, q) = cfg.side(rp.side.unwrap())?;
    let mut r = Report::new("locus", fingerprint("locus", cfg, rp, &Limits::default()));
    r.header = vec![
        "m", "degree", "divisor", "polynomial", "mean_height", "max_height", "mean_error", "max_error", "converged",
        "marker",
    ];
    let mut payload = Vec::new();
    for &m in rp.m.as_ref().unwrap() {
        match relation_locus(&e, &pt, &q, m) {
            Ok(l) => {
                let s = locus_height_stats(&l.polynomial).map_err(|e| Failure::Schema(e.to_string()))?;
                r.rows.push(vec![
                    m.to_string(),
                    s.degree.to_string(),
                    l.divisor.to_string(),
                    l.polynomial.to_strings().join(","),
                    sig12(s.mean_height),
                    sig12(s.max_height),
                    sig12(s.mean_error),
                    sig12(s.max_error),
                    s.converged.to_string(),
                    String::new(),
                ]);
                payload.push(json!({"m": m, "locus": l, "stats": s}));
            }
            Err(Error::IdenticallyZeroSection { .. }) => {
                let mut row = vec![m.to_string()];
                row.extend(std::iter::repeat(String::new()).take(8));
                row.push("identically_zero".into());
                r.rows.push(row);
                payload.push(json!({"m": m, "marker": "identically_zero"}));
            }
            Err(err) => return Err(Failure::Schema(err.to_string())),
        }
    }
    r.payload = json!(payload);
    Ok(r)
}

fn heights(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let (e, pt, _) = cfg.side(rp.side.unwrap())?;
    let ts = parse_ts(rp.t.as_ref().unwrap())?;
    let mut r = Report::new("heights", fingerprint("heights", cfg, rp, limits));
    r.header = vec!["kind", "t", "h_base", "value", "error", "ratio", "marker"];
    let generic = match canonical_height_ff(&e, &pt, rp.depth.unwrap(), limits) {
        Ok(h) => h,
        Err(err) => return Err(core_failure(r, err)),
    };
    r.meta("torsion_order", opt(&generic.torsion_order));
    r.rows.push(vec![
        "generic".into(),
        String::new(),
        String::new(),
        sig12(generic.value),
        sig12(generic.error),
        String::new(),
        String::new(),
    ]);
    let trace = match fiber_height_trace(&e, &pt, &ts, rp.fiber_depth.unwrap(), limits) {
        Ok(t) => t,
        Err(err) => {
            r.payload = json!({"generic": generic});
            return Err(core_failure(r, err));
        }
    };
    for row in &trace {
        r.rows.push(vec![
            "fiber".into(),
            format_rational(&row.t),
            sig12(row.h_base),
            row.fiber_height.map(sig12).unwrap_or_default(),
            row.fiber_error.map(sig12).unwrap_or_default(),
            row.ratio.map(sig12).unwrap_or_default(),
            opt(&row.marker),
        ]);
    }
    r.payload = json!({"generic": generic, "fibers": trace});
    Ok(r)
}

fn specialize(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let ts = parse_ts(rp.t.as_ref().unwrap())?;
    if ts.is_empty() {
        return Err(Failure::Schema("specialize needs at least one t".into()));
    }
    let sides: Vec<u8> = match rp.side {
        Some(s) => vec![side_of(Some(s), &Params::default())?],
        None => [1u8, 2].into_iter().filter(|&s| cfg.side(s).is_ok()).collect(),
    };
    if sides.is_empty() {
        return Err(Failure::Schema("config has no surface".into()));
    }
    let mut r = Report::new("specialize", fingerprint("specialize", cfg, rp, limits));
    r.header = vec!["side", "t", "A", "B", "point", "torsion_order", "height", "height_error", "marker"];
    let mut payload = Vec::new();
    for s in sides {
        let (e, pt, _) = cfg.side(s)?;
        for t in &ts {
            let tr = format_rational(t);
            let curve = match specialize_curve(&e, t) {
                Ok(c) => c,
                Err(Error::BadFiber(_)) => {
                    r.rows.push(vec![
                        s.to_string(),
                        tr,
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        "bad_fiber".into(),
                    ]);
                    payload.push(json!({"side": s, "t": format_rational(t), "marker": "bad_fiber"}));
                    continue;
                }
                Err(err) => return Err(Failure::Schema(err.to_string())),
            };
            let (point, marker) = match specialize_point(&pt, t) {
                Ok(q) => (q, String::new()),
                Err(Error::SectionPole(_)) => (QPoint::Identity, "section_pole".to_string()),
                Err(err) => return Err(Failure::Schema(err.to_string())),
            };
            let order = torsion_order(&curve, &point).map_err(|e| Failure::Schema(e.to_string()))?;
            let h = match canonical_height_q(&curve, &point, rp.fiber_depth.unwrap(), limits) {
                Ok(h) => h,
                Err(err) => {
                    r.payload = json!(payload);
                    return Err(core_failure(r, err));
                }
            };
            r.rows.push(vec![
                s.to_string(),
                tr,
                format_rational(&curve.a),
                format_rational(&curve.b),
                point.to_string(),
                opt(&order),
                sig12(h.value),
                sig12(h.error),
                marker.clone(),
            ]);
            payload.push(json!({
                "side": s, "t": format_rational(t), "curve": curve, "point": point,
                "torsion_order": order, "height": h, "marker": (!marker.is_empty()).then_some(marker),
            }));
        }
    }
    r.payload = json!(payload);
    Ok(r)
}

fn relations(cfg: &RunConfig, rp: &Params, limits: &Limits) -> Outcome {
    let pair = cfg.pair()?;
    let cap = rp.t_height_cap.unwrap();
    if !(cap >= 0.0 && cap.is_finite()) {
        return Err(Failure::Schema("t_height_cap must be a finite non-negative number".into()));
    }
    let mut r = Report::new("relations", fingerprint("relations", cfg, rp, limits));
    r.header = vec!["t", "m1", "m2", "h_base", "h1", "h2"];
    match simultaneous_relation_scan(&pair, cap, limits) {
        Ok(ws) => {
            r.meta("witnesses", ws.len());
            r.rows = ws
                .iter()
                .map(|w| {
                    vec![
                        format_rational(&w.t),
                        w.m1.to_string(),
                        w.m2.to_string(),
                        sig12(w.h_base),
                        sig12(w.fiber_heights.0),
                        sig12(w.fiber_heights.1),
                    ]
                })
                .collect();
            r.payload = serde_json::to_value(&ws).expect("witnesses serialize");
            Ok(r)
        }
        Err(err) => Err(core_failure(r, err)),
    }
}

fn ar(cfg: &RunConfig, rp: &Params) -> Outcome {
    let arc = cfg.ar_config()?;
    let mut r = Report::new("ar", fingerprint("ar", cfg, rp, &Limits::default()));
    let n_max = rp.n_max.unwrap();
    if n_max == 0 {
        return Err(Failure::Schema("n_max must be at least 1".into()));
    }
    let scan = match ar_bound_scan(&arc, n_max) {
        Ok(s) => s,
        Err(Error::DependentInputs { i, j }) => {
            return Err(Failure::Schema(format!(
                "a and b are multiplicatively dependent: a^{i} b^{j} is constant"
            )))
        }
        Err(err) => return Err(Failure::Schema(err.to_string())),
    };
    r.meta("h_candidate", scan.h_candidate.to_strings().join(","));
    r.meta("dependence", "independent");
    r.header = vec!["n1", "n2", "degree"];
    r.rows = scan
        .rows
        .iter()
        .map(|row| vec![row.n1.to_string(), row.n2.to_string(), row.degree.to_string()])
        .collect();
    r.payload = serde_json::to_value(&scan).expect("scan serializes");
    Ok(r)
}
