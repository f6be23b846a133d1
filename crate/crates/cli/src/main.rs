//! Deterministic CLI over the trislope engine: bounds, coefficient tables,
//! verification suites, witness families, tree-file evaluation and Maroni
//! reports, as TSV (default) or JSON. Rationals print as `p/q`; identical
//! inputs produce byte-identical output.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::process::ExitCode;

use trislope::boundary::{
    coeff_table_symbolic, decompose_special_fiber, tree_contribution, BoundaryFamily,
    ContributionMode,
};
use trislope::invariants::{general_invariants, hyperelliptic_invariants, Adjustments};
use trislope::maroni::{admissible_invariants, maroni_locus_dimension};
use trislope::poly::{var, MPoly};
use trislope::rational::Rat;
use trislope::slopes::{
    bound, family, slope_report, BoundExtra, BoundName, FamilyName, FamilyParams,
};
use trislope::trees::parse_tree_file;
use trislope::verify::run_suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "trislope",
    about = "Exact slope invariants of trigonal and hyperelliptic fibrations",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the slope-bound table row at a genus.
    Bounds {
        #[arg(long)]
        genus: i64,
        /// Gonality for the conjectural d-gonal bound.
        #[arg(long)]
        d: Option<i64>,
        /// The free factor f_d of the conjectural bound (rational, e.g. 5/7).
        #[arg(long)]
        fd: Option<String>,
        /// Clifford index for the Clifford-index bound.
        #[arg(long)]
        cliff: Option<i64>,
    },
    /// Print the boundary coefficient tables.
    Coeffs {
        /// Integer genus; exclusive with --symbolic.
        #[arg(long, conflicts_with = "symbolic")]
        genus: Option<i64>,
        /// Print the closed forms in (g, i) instead of numbers.
        #[arg(long)]
        symbolic: bool,
    },
    /// Run a verification suite and report pass/fail per assertion.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Construct a witness family and report its invariants and slope.
    Family {
        /// ex71 | ex72 | hyper-pencil | pencil
        #[arg(long)]
        name: String,
        /// Comma-separated k=v pairs, e.g. e=2 or d=3,g=5.
        #[arg(long, default_value = "")]
        param: String,
    },
    /// Evaluate a special-fiber tree description file.
    Tree {
        #[arg(long)]
        input: String,
        /// Treat the fiber as hyperelliptic (double cover).
        #[arg(long)]
        hyper: bool,
        /// Boundary decomposition degrees, e.g. 1:2=1,3:1=2 for
        /// alpha_{1,2} = 1 and alpha_{3,1} = 2.
        #[arg(long, default_value = "")]
        alpha: String,
    },
    /// Maroni invariant admissibility and locus dimensions.
    Maroni {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        k: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Bounds {
            genus,
            d,
            fd,
            cliff,
        } => cmd_bounds(cli.format, *genus, *d, fd.as_deref(), *cliff),
        Command::Coeffs { genus, symbolic } => cmd_coeffs(cli.format, *genus, *symbolic),
        Command::Verify { suite } => cmd_verify(cli.format, suite),
        Command::Family { name, param } => cmd_family(cli.format, name, param),
        Command::Tree {
            input,
            hyper,
            alpha,
        } => cmd_tree(cli.format, input, *hyper, alpha),
        Command::Maroni { genus, k } => cmd_maroni(cli.format, *genus, *k),
    }
}

/// Writes a block of output, exiting quietly when the consumer closed the
/// pipe (e.g. `trislope coeffs | head`).
fn write_out(text: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if lock.write_all(text.as_bytes()).is_err() || lock.flush().is_err() {
        std::process::exit(0);
    }
}

/// Renders rows (all sharing one header) as TSV or as a JSON array of
/// objects. JSON keys serialize in sorted order, so parse + re-serialize
/// is the identity.
fn emit(format: Format, header: &[&str], rows: &[Vec<String>]) {
    let mut text = String::new();
    match format {
        Format::Tsv => {
            text.push_str(&header.join("\t"));
            text.push('\n');
            for row in rows {
                text.push_str(&row.join("\t"));
                text.push('\n');
            }
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (key, value) in header.iter().zip(row) {
                        obj.insert((*key).to_string(), Value::String(value.clone()));
                    }
                    Value::Object(obj)
                })
                .collect();
            text.push_str(&serde_json::to_string(&json!(array)).expect("serialize"));
            text.push('\n');
        }
    }
    write_out(&text);
}

/// Renders a single key/value record.
fn emit_record(format: Format, rows: &[Vec<String>]) {
    let mut text = String::new();
    match format {
        Format::Tsv => {
            for row in rows {
                text.push_str(&row.join("\t"));
                text.push('\n');
            }
        }
        Format::Json => {
            let mut obj = Map::new();
            for row in rows {
                obj.insert(row[0].clone(), Value::String(row[1].clone()));
            }
            text.push_str(&serde_json::to_string(&Value::Object(obj)).expect("serialize"));
            text.push('\n');
        }
    }
    write_out(&text);
}

fn cmd_bounds(
    format: Format,
    genus: i64,
    d: Option<i64>,
    fd: Option<&str>,
    cliff: Option<i64>,
) -> Result<ExitCode, String> {
    let fd = match fd {
        Some(s) => Some(Rat::parse(s).ok_or_else(|| format!("invalid rational `{s}` for --fd"))?),
        None => None,
    };
    let extra = BoundExtra { d, fd, cliff };
    let mut names = vec![
        BoundName::General,
        BoundName::Hyperelliptic,
        BoundName::TrigonalMax,
        BoundName::TrigonalSemistable,
        BoundName::Tetragonal,
    ];
    if extra.d.is_some() {
        names.push(BoundName::ConjectureFd);
    }
    if extra.cliff.is_some() {
        names.push(BoundName::Clifford);
    }
    let mut header = vec!["genus"];
    let mut row = vec![genus.to_string()];
    for name in names {
        let spec = bound(name, genus, &extra).map_err(|e| e.to_string())?;
        let value = spec
            .value
            .value(&BTreeMap::new())
            .ok_or("bound did not evaluate")?;
        header.push(name.label());
        row.push(value.to_string());
    }
    emit(format, &header, &[row]);
    Ok(ExitCode::SUCCESS)
}

fn cmd_coeffs(format: Format, genus: Option<i64>, symbolic: bool) -> Result<ExitCode, String> {
    let header = ["k", "i", "c", "c_tilde", "d", "d_tilde"];
    let mut rows: Vec<Vec<String>> = Vec::new();
    match genus {
        Some(g) if !symbolic => {
            let numeric = trislope::boundary::coeff_table_numeric(g).map_err(|e| e.to_string())?;
            for row in numeric {
                rows.push(vec![
                    row.family.label().to_string(),
                    row.i.to_string(),
                    row.c.to_string(),
                    row.c_tilde.to_string(),
                    row.d.map(|r| r.to_string()).unwrap_or_default(),
                    row.d_tilde.map(|r| r.to_string()).unwrap_or_default(),
                ]);
            }
        }
        _ => {
            let table = coeff_table_symbolic().map_err(|e| e.to_string())?;
            for row in table.trigonal.iter().chain(table.hyperelliptic.iter()) {
                rows.push(vec![
                    row.family.label().to_string(),
                    "i".to_string(),
                    row.c.to_string(),
                    row.c_tilde.to_string(),
                    row.d.as_ref().map(|p| p.to_string()).unwrap_or_default(),
                    row.d_tilde
                        .as_ref()
                        .map(|p| p.to_string())
                        .unwrap_or_default(),
                ]);
            }
        }
    }
    emit(format, &header, &rows);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(format: Format, suite: &str) -> Result<ExitCode, String> {
    let checks = run_suite(suite).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let mut failures = 0usize;
    for check in &checks {
        let (status, detail) = match &check.result {
            Ok(()) => ("PASS", String::new()),
            Err(msg) => {
                failures += 1;
                ("FAIL", msg.clone())
            }
        };
        rows.push(vec![status.to_string(), check.name.clone(), detail]);
    }
    emit(format, &["status", "check", "detail"], &rows);
    if failures > 0 {
        eprintln!("{failures} of {} checks failed", checks.len());
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn parse_params(param: &str) -> Result<FamilyParams, String> {
    let mut out = FamilyParams::default();
    for pair in param.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected k=v, got `{pair}`"))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| format!("invalid integer `{value}` for `{key}`"))?;
        match key.trim() {
            "g" => out.g = Some(value),
            "e" => out.e = Some(value),
            "f" => out.f = Some(value),
            "d" => out.d = Some(value),
            "k" => out.k = Some(value),
            other => return Err(format!("unknown parameter `{other}`")),
        }
    }
    Ok(out)
}

fn cmd_family(format: Format, name: &str, param: &str) -> Result<ExitCode, String> {
    let fam_name = FamilyName::parse(name).ok_or_else(|| {
        format!("unknown family `{name}`; expected ex71|ex72|hyper-pencil|pencil")
    })?;
    let params = parse_params(param)?;
    let fam = family(fam_name, &params).map_err(|e| e.to_string())?;
    let slope = slope_report(&fam.report, fam.genus).map_err(|e| e.to_string())?;
    let mut rows = vec![
        vec!["family".to_string(), fam.name.label().to_string()],
        vec!["genus".to_string(), fam.genus.to_string()],
    ];
    for (k, v) in &fam.params {
        rows.push(vec![format!("param_{k}"), v.to_string()]);
    }
    rows.push(vec!["lambda".to_string(), fam.report.lambda.to_string()]);
    rows.push(vec!["kappa".to_string(), fam.report.kappa.to_string()]);
    rows.push(vec!["delta".to_string(), fam.report.delta.to_string()]);
    rows.push(vec!["d_inv".to_string(), fam.report.d_inv.to_string()]);
    rows.push(vec![
        "bogomolov".to_string(),
        fam.report.bogomolov.to_string(),
    ]);
    rows.push(vec!["index_q".to_string(), fam.report.index_q.to_string()]);
    rows.push(vec!["slope".to_string(), slope.slope.to_string()]);
    rows.push(vec!["in_range".to_string(), slope.in_range.to_string()]);
    rows.push(vec![
        "semistable".to_string(),
        slope
            .semistable_applicable
            .map(|b| b.to_string())
            .unwrap_or_default(),
    ]);
    rows.push(vec!["maximal".to_string(), slope.maximal.to_string()]);
    rows.push(vec![
        "hyperelliptic_maximal".to_string(),
        slope.hyperelliptic_maximal.to_string(),
    ]);
    emit_record(format, &rows);
    Ok(ExitCode::SUCCESS)
}

fn parse_alphas(alpha: &str) -> Result<Vec<(BoundaryFamily, MPoly, i64)>, String> {
    let mut out = Vec::new();
    for chunk in alpha.split(',').filter(|s| !s.is_empty()) {
        // k:i=count
        let (ki, count) = chunk
            .split_once('=')
            .ok_or_else(|| format!("expected k:i=count, got `{chunk}`"))?;
        let (k, i) = ki
            .split_once(':')
            .ok_or_else(|| format!("expected k:i=count, got `{chunk}`"))?;
        let family = match k.trim() {
            "1" => BoundaryFamily::T1,
            "2" => BoundaryFamily::T2,
            "3" => BoundaryFamily::T3,
            "4" => BoundaryFamily::T4,
            "5" => BoundaryFamily::T5,
            "6" => BoundaryFamily::T6,
            other => return Err(format!("unknown boundary type `{other}`")),
        };
        let i: i64 = i
            .trim()
            .parse()
            .map_err(|_| format!("invalid index in `{chunk}`"))?;
        let count: i64 = count
            .trim()
            .parse()
            .map_err(|_| format!("invalid count in `{chunk}`"))?;
        out.push((family, MPoly::int(i), count));
    }
    Ok(out)
}

fn cmd_tree(format: Format, input: &str, hyper: bool, alpha: &str) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?;
    let file = parse_tree_file(&text).map_err(|e| e.to_string())?;
    let g = file
        .genus
        .to_i64()
        .ok_or("the genus header must be an integer")?;
    let adj = Adjustments {
        mu_total: file.mu,
        ram1: file.ram1,
        ram2: file.ram2,
    };
    let trees = vec![file.tree.clone()];
    let report = if hyper {
        hyperelliptic_invariants(&trees, &var("d"), &MPoly::int(g), file.ram1)
    } else {
        general_invariants(&trees, &MPoly::int(g + 2), &var("d"), &var("c2"), adj)
    }
    .map_err(|e| e.to_string())?;
    let mut rows = vec![
        vec!["genus".to_string(), g.to_string()],
        vec![
            "components".to_string(),
            file.tree.components.len().to_string(),
        ],
        vec!["lambda".to_string(), report.lambda.to_string()],
        vec!["kappa".to_string(), report.kappa.to_string()],
        vec!["delta".to_string(), report.delta.to_string()],
    ];
    let gp = MPoly::int(g);
    if hyper {
        let c_t = tree_contribution(&file.tree, adj, ContributionMode::Sh, &gp)
            .map_err(|e| e.to_string())?;
        rows.push(vec!["contribution_sh".to_string(), c_t.to_string()]);
    } else {
        let c_t = tree_contribution(&file.tree, adj, ContributionMode::S, &gp)
            .map_err(|e| e.to_string())?;
        let d_t = tree_contribution(&file.tree, adj, ContributionMode::Sprime, &gp)
            .map_err(|e| e.to_string())?;
        rows.push(vec!["contribution_c".to_string(), c_t.to_string()]);
        rows.push(vec!["contribution_d".to_string(), d_t.to_string()]);
        let alphas = parse_alphas(alpha)?;
        if !alphas.is_empty() {
            let (c_dec, d_dec) = decompose_special_fiber(&alphas).map_err(|e| e.to_string())?;
            let c_dec = c_dec.eval_at("g", Rat::from_int(g));
            let d_dec = d_dec.eval_at("g", Rat::from_int(g));
            rows.push(vec!["decomposed_c".to_string(), c_dec.to_string()]);
            rows.push(vec!["decomposed_d".to_string(), d_dec.to_string()]);
            let matches = (&c_dec - &c_t).is_zero() && (&d_dec - &d_t).is_zero();
            rows.push(vec![
                "decomposition_matches".to_string(),
                matches.to_string(),
            ]);
        }
    }
    emit_record(format, &rows);
    Ok(ExitCode::SUCCESS)
}

fn cmd_maroni(format: Format, genus: i64, k: Option<i64>) -> Result<ExitCode, String> {
    let header = [
        "genus",
        "k",
        "admissible",
        "dimension",
        "codim",
        "is_divisor",
    ];
    let mut rows = Vec::new();
    let ks = match k {
        Some(k) => vec![k],
        None => admissible_invariants(genus),
    };
    for k in ks {
        match maroni_locus_dimension(genus, k) {
            Ok(report) => rows.push(vec![
                genus.to_string(),
                k.to_string(),
                "true".to_string(),
                report.locus_dimension.to_string(),
                report.codim.to_string(),
                (report.codim == MPoly::one()).to_string(),
            ]),
            Err(_) => rows.push(vec![
                genus.to_string(),
                k.to_string(),
                "false".to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]),
        }
    }
    emit(format, &header, &rows);
    Ok(ExitCode::SUCCESS)
}
