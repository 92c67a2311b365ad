mod args;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Map, Value};

use isogroth::basisexp::{expand_in_gp, expand_in_gq, ExpansionResult};
use isogroth::genfun::{gp_symmetrizer, gt_coeff};
use isogroth::localization::{gkm_check, psi_n, GkmReport};
use isogroth::pfaffengine::{gx_lambda, kernel_coeffs};
use isogroth::weylcomb::{enumerate_sp_k, partition_to_w};
use isogroth::{Error, KStrictPartition, LieType, LocalizationTable, Series, SeriesJson, TruncationContext};

use args::{BasisArg, Cli, Command, Common, Format, TypeArg};

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ContextMismatch { .. } | Error::NotInvertible | Error::OddPfaffian(_) | Error::NonzeroRemainder(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// What a subcommand produced: a JSON document, its text rendering, and
/// whether the exit status should flag violations.
struct Report {
    json: Value,
    text: String,
    violations: bool,
}

/// Resolved run configuration.
struct Config {
    k: u32,
    ty: LieType,
    ctx: TruncationContext,
    format: Format,
    out: Option<PathBuf>,
}

impl Config {
    fn new(c: &Common, n: Option<u32>) -> Run<Self> {
        let wide = n.unwrap_or(0).max(3);
        let ctx = TruncationContext::new(
            c.degree,
            c.num_x.unwrap_or(wide),
            c.num_a.unwrap_or(c.k),
            c.num_b.unwrap_or(wide),
        );
        if ctx.num_a < c.k {
            return Err(Failure::Usage(format!("--num-a {} is smaller than --k {}", ctx.num_a, c.k)));
        }
        if let Some(n) = n {
            if ctx.num_b < n || ctx.num_x < n {
                return Err(Failure::Usage(format!("--num-x and --num-b must be at least --n {n}")));
            }
        }
        Ok(Config {
            k: c.k,
            ty: match c.ty {
                TypeArg::B => LieType::B,
                TypeArg::C => LieType::C,
            },
            ctx,
            format: c.format,
            out: c.out.clone(),
        })
    }

    fn metadata(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("k".into(), json!(self.k));
        m.insert("type".into(), json!(self.ty.to_string()));
        m.insert("maxDeg".into(), json!(self.ctx.max_deg));
        m.insert("numX".into(), json!(self.ctx.num_x));
        m.insert("numA".into(), json!(self.ctx.num_a));
        m.insert("numB".into(), json!(self.ctx.num_b));
        m
    }

    fn partition(&self, s: &str) -> Run<KStrictPartition> {
        let l = KStrictPartition::parse(s, self.k)?;
        if l.size() > self.ctx.max_deg {
            eprintln!(
                "warning: |λ| = {} exceeds --degree {}; the class truncates to zero",
                l.size(),
                self.ctx.max_deg
            );
        }
        Ok(l)
    }
}

fn show_partition(l: &KStrictPartition) -> String {
    if l.is_empty() {
        "()".into()
    } else {
        l.to_string()
    }
}

fn header(command: &str, config: &Map<String, Value>) -> String {
    let fields: Vec<String> = config
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect();
    format!("# {command} {}\n", fields.join(" "))
}

fn envelope(command: &str, config: Map<String, Value>, result: Value) -> Value {
    json!({ "command": command, "config": config, "result": result })
}

fn to_value<T: serde::Serialize>(v: &T) -> Run<Value> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

/// Reads a JSON file; if it is an envelope written by this tool, returns its result.
fn read_payload(path: &Path) -> Run<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(match doc {
        Value::Object(mut m) if m.contains_key("result") && m.contains_key("command") => m.remove("result").unwrap(),
        other => other,
    })
}

fn read_series(path: &Path) -> Run<Series> {
    let j: SeriesJson =
        serde_json::from_value(read_payload(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(Series::try_from(&j)?)
}

fn series_report(command: &str, cfg: &Config, mut meta: Map<String, Value>, s: &Series) -> Run<Report> {
    meta.extend(cfg.metadata());
    let text = format!("{}{s}\n", header(command, &meta));
    Ok(Report {
        json: envelope(command, meta, to_value(&SeriesJson::from(s))?),
        text,
        violations: false,
    })
}

fn table_text(t: &LocalizationTable) -> String {
    let mut out = String::new();
    for (mu, v) in &t.entries {
        let _ = writeln!(out, "{}\t{v}", show_partition(mu));
    }
    out
}

fn gkm_text(r: &GkmReport) -> String {
    let mut out = format!("edges checked: {}\nviolations: {}\n", r.edges_checked, r.violations.len());
    for v in &r.violations {
        let residue = Series::try_from(&v.residue).map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{}\t{}\t{}\t{residue}", v.partition, v.root, v.neighbor);
    }
    out
}

fn expansion_text(r: &ExpansionResult) -> String {
    let mut out = String::new();
    for (l, c) in &r.coeffs {
        let _ = writeln!(out, "{}\t{c}", show_partition(l));
    }
    let _ = writeln!(out, "remainder\t{}", r.remainder);
    let _ = writeln!(out, "integral\t{}", r.is_integral());
    out
}

fn execute(command: Command) -> Run<(Report, Format, Option<PathBuf>)> {
    let (report, format, out) = match command {
        Command::Gx { common, partition } => {
            let cfg = Config::new(&common, None)?;
            let l = cfg.partition(&partition)?;
            let s = gx_lambda(&l, cfg.ty, cfg.ctx)?;
            let meta = Map::from_iter([("partition".to_string(), json!(l.to_string()))]);
            (series_report("gx", &cfg, meta, &s)?, cfg.format, cfg.out)
        }
        Command::Gp { common, partition } => {
            let cfg = Config::new(&common, None)?;
            let l = KStrictPartition::parse(&partition, 0)?;
            if !l.is_strict() {
                return Err(Failure::Usage(format!("{partition} is not a strict partition")));
            }
            if l.len() > cfg.ctx.num_x as usize {
                return Err(Failure::Usage(format!("{partition} has more parts than --num-x")));
            }
            let s = gp_symmetrizer(&l, cfg.ctx.num_x, cfg.ctx)?;
            let meta = Map::from_iter([("partition".to_string(), json!(l.to_string()))]);
            (series_report("gp", &cfg, meta, &s)?, cfg.format, cfg.out)
        }
        Command::Gtcoeff { common, m, ell } => {
            let cfg = Config::new(&common, None)?;
            let s = gt_coeff(m, ell, cfg.k, cfg.ty, cfg.ctx)?;
            let meta = Map::from_iter([("m".to_string(), json!(m)), ("ell".to_string(), json!(ell))]);
            (series_report("gtcoeff", &cfg, meta, &s)?, cfg.format, cfg.out)
        }
        Command::Localize { common, n, partition, input } => {
            let cfg = Config::new(&common, Some(n))?;
            let mut meta = cfg.metadata();
            meta.insert("n".into(), json!(n));
            let f = match (partition, input) {
                (Some(p), None) => {
                    let l = cfg.partition(&p)?;
                    meta.insert("partition".into(), json!(l.to_string()));
                    gx_lambda(&l, cfg.ty, cfg.ctx)?
                }
                (None, Some(path)) => {
                    meta.insert("input".into(), json!(path.display().to_string()));
                    read_series(&path)?
                }
                _ => return Err(Failure::Usage("localize needs exactly one of --partition or --input".into())),
            };
            let table = psi_n(&f, n, cfg.k)?;
            let text = format!("{}{}", header("localize", &meta), table_text(&table));
            let report = Report {
                json: envelope("localize", meta, to_value(&table)?),
                text,
                violations: false,
            };
            (report, cfg.format, cfg.out)
        }
        Command::GkmCheck { common, input, partition, n } => {
            let cfg = Config::new(&common, n)?;
            let mut meta = cfg.metadata();
            let table = match (input, partition) {
                (Some(path), None) => {
                    let t = serde_json::from_value::<LocalizationTable>(read_payload(&path)?)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    // the table fixes everything but the type
                    meta = Map::from_iter([
                        ("type".to_string(), json!(cfg.ty.to_string())),
                        ("input".to_string(), json!(path.display().to_string())),
                        ("n".to_string(), json!(t.n)),
                        ("k".to_string(), json!(t.k)),
                    ]);
                    t
                }
                (None, Some(p)) => {
                    let n = n.expect("clap enforces --n");
                    let l = cfg.partition(&p)?;
                    meta.insert("partition".into(), json!(l.to_string()));
                    meta.insert("n".into(), json!(n));
                    psi_n(&gx_lambda(&l, cfg.ty, cfg.ctx)?, n, cfg.k)?
                }
                _ => return Err(Failure::Usage("gkm-check needs exactly one of --input or --partition".into())),
            };
            let report = gkm_check(&table, cfg.ty)?;
            let text = format!("{}{}", header("gkm-check", &meta), gkm_text(&report));
            let out = Report {
                json: envelope("gkm-check", meta, to_value(&report)?),
                text,
                violations: !report.is_clean(),
            };
            (out, cfg.format, cfg.out)
        }
        Command::Expand { common, partition, input, basis } => {
            let cfg = Config::new(&common, None)?;
            let basis = basis.unwrap_or(match cfg.ty {
                LieType::B => BasisArg::Gp,
                LieType::C => BasisArg::Gq,
            });
            let mut meta = cfg.metadata();
            meta.insert("basis".into(), json!(if basis == BasisArg::Gp { "GP" } else { "GQ" }));
            let f = match (partition, input) {
                (Some(p), None) => {
                    let l = cfg.partition(&p)?;
                    meta.insert("partition".into(), json!(l.to_string()));
                    gx_lambda(&l, cfg.ty, cfg.ctx)?
                }
                (None, Some(path)) => {
                    meta.insert("input".into(), json!(path.display().to_string()));
                    read_series(&path)?
                }
                _ => return Err(Failure::Usage("expand needs exactly one of --partition or --input".into())),
            };
            let r = match basis {
                BasisArg::Gp => expand_in_gp(&f)?,
                BasisArg::Gq => expand_in_gq(&f)?,
            };
            let text = format!("{}{}", header("expand", &meta), expansion_text(&r));
            let report = Report {
                json: envelope("expand", meta, to_value(&r.to_json())?),
                text,
                violations: false,
            };
            (report, cfg.format, cfg.out)
        }
        Command::Enumerate { n, k, format, out } => {
            let meta = Map::from_iter([("n".to_string(), json!(n)), ("k".to_string(), json!(k))]);
            let mut rows = Vec::new();
            let mut text = header("enumerate", &meta);
            for l in enumerate_sp_k(n, k) {
                let w = partition_to_w(&l, n)?;
                let window: Vec<String> = w.window(n as usize).iter().map(|v| v.to_string()).collect();
                let _ = writeln!(text, "{}\t{}", show_partition(&l), window.join(","));
                rows.push(json!({ "partition": l.to_string(), "w": window.join(",") }));
            }
            let report = Report {
                json: envelope("enumerate", meta, Value::Array(rows)),
                text,
                violations: false,
            };
            (report, format, out)
        }
        Command::Kernel { i, j, m, ci, cj, pmax, qmax, format, out } => {
            if !(1 <= i && i < j && j <= m) {
                return Err(Failure::Usage(format!("need 1 <= i < j <= m, got i={i} j={j} m={m}")));
            }
            let meta = Map::from_iter(
                [
                    ("i", json!(i)),
                    ("j", json!(j)),
                    ("m", json!(m)),
                    ("ci", json!(ci)),
                    ("cj", json!(cj)),
                    ("pmax", json!(pmax)),
                    ("qmax", json!(qmax)),
                ]
                .map(|(k, v)| (k.to_string(), v)),
            );
            let t = kernel_coeffs(i, j, m, ci, cj, pmax, qmax);
            let entries = t.to_json();
            let mut text = header("kernel", &meta);
            let bare = TruncationContext::new(0, 0, 0, 0);
            for (p, q, _) in t.entries() {
                let _ = writeln!(text, "{p}\t{q}\t{}", t.term(p, q, bare));
            }
            let report = Report {
                json: envelope("kernel", meta, to_value(&entries)?),
                text,
                violations: false,
            };
            (report, format, out)
        }
    };
    Ok((report, format, out))
}

fn configure_threads() -> Run<()> {
    let Ok(raw) = std::env::var("GROTH_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("GROTH_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn run(cli: Cli) -> Run<bool> {
    configure_threads()?;
    let (report, format, out) = execute(cli.command)?;
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).map_err(|e| Failure::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => report.text,
    };
    match out {
        Some(path) => {
            std::fs::write(&path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => print!("{body}"),
    }
    Ok(report.violations)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(false)) => ExitCode::SUCCESS,
        Ok(Ok(true)) => ExitCode::from(1),
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}
