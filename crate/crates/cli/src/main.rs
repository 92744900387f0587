//! Command line interface: build quandles, decompose regular representations,
//! verify the closed-form decomposition over a range, and print the
//! irreducible catalog of a dihedral group.
//!
//! Exit codes: 0 success, 1 verification or axiom failure, 2 usage error.

use clap::{Args, Parser, Subcommand};
use quandle_rep::dihedral::{
    canonicalize_w, hat_one, irrep_catalog, theorem_decomposition, u_vector, verify_theorem,
    IrrepLabel, Orbit,
};
use quandle_rep::linalg::Scalar;
use quandle_rep::quandle::{
    alexander, check_axioms, dihedral, inner_group, is_connected, orbits, parse_table_entries,
    FiniteQuandle,
};
use quandle_rep::rep::{decompose, regular_representation};
use quandle_rep::report::{ComponentEntry, ReportDocument, SCHEMA_VERSION};
use quandle_rep::Tol;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quandle-rep", version, about = "Finite quandle representation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, axiom report, inner group order, orbits, connectivity.
    Info(InfoArgs),
    /// Decompose the regular representation into irreducible components.
    Decompose(DecomposeArgs),
    /// Check decompositions against the closed form for a range of orders.
    Verify(VerifyArgs),
    /// List the irreducible representations of the dihedral group D_m.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct InfoArgs {
    /// Dihedral quandle of this order.
    #[arg(long, value_name = "N", conflicts_with_all = ["alexander", "table"])]
    dihedral: Option<usize>,
    /// Alexander quandle on Z_N with multiplier U, written N,U.
    #[arg(long, value_name = "N,U", conflicts_with = "table")]
    alexander: Option<String>,
    /// Quandle operation table file (first line n, then n rows, 1-indexed).
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Dihedral quandle of this order.
    #[arg(long, value_name = "N", conflicts_with = "table")]
    dihedral: Option<usize>,
    /// Quandle operation table file.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
    /// PRNG seed for the random commutant splitting.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base tolerance (overrides QUANDLE_REP_TOL).
    #[arg(long, value_name = "T")]
    tol: Option<f64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Inclusive order range, written A..B.
    #[arg(long, value_name = "A..B")]
    range: String,
    /// PRNG seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base tolerance (overrides QUANDLE_REP_TOL).
    #[arg(long, value_name = "T")]
    tol: Option<f64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogArgs {
    /// Dihedral group parameter (group order 2m).
    #[arg(long)]
    m: u32,
}

/// Usage-level failure (exit 2) vs mathematical failure (exit 1).
enum Failure {
    Usage(String),
    Math(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Math(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog(args) => cmd_catalog(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => failure.report(),
    }
}

/// Tolerance resolution: flag, then QUANDLE_REP_TOL, then the default.
fn resolve_tol(flag: Option<f64>) -> Result<Tol, Failure> {
    if let Some(eps) = flag {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Failure::Usage(format!("invalid tolerance {eps}")));
        }
        return Ok(Tol::with_eps(eps));
    }
    match std::env::var("QUANDLE_REP_TOL") {
        Ok(text) => {
            let eps: f64 = text
                .parse()
                .map_err(|_| Failure::Usage(format!("QUANDLE_REP_TOL is not a number: {text}")))?;
            if !(eps.is_finite() && eps > 0.0) {
                return Err(Failure::Usage(format!("QUANDLE_REP_TOL out of range: {eps}")));
            }
            Ok(Tol::with_eps(eps))
        }
        Err(_) => Ok(Tol::default()),
    }
}

fn parse_alexander_arg(text: &str) -> Result<(usize, i64), Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!(
            "--alexander expects N,U (got '{text}')"
        )));
    }
    let n = parts[0]
        .trim()
        .parse::<usize>()
        .map_err(|_| Failure::Usage(format!("bad order in --alexander: '{}'", parts[0])))?;
    let u = parts[1]
        .trim()
        .parse::<i64>()
        .map_err(|_| Failure::Usage(format!("bad multiplier in --alexander: '{}'", parts[1])))?;
    Ok((n, u))
}

/// Loads a table file into raw entries (for axiom reporting).
fn load_table(path: &PathBuf) -> Result<Vec<Vec<usize>>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_table_entries(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn orbit_display(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|block| {
            let inner: Vec<String> = block.iter().map(|e| (e + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_info(args: InfoArgs) -> Result<(), Failure> {
    let (kind, table): (String, Vec<Vec<usize>>) = if let Some(n) = args.dihedral {
        let q = dihedral(n).map_err(|e| Failure::Usage(e.to_string()))?;
        (format!("dihedral({n})"), q.table().to_vec())
    } else if let Some(arg) = &args.alexander {
        let (n, u) = parse_alexander_arg(arg)?;
        let q = alexander(n, u).map_err(|e| Failure::Usage(e.to_string()))?;
        (format!("alexander({n},{u})"), q.table().to_vec())
    } else if let Some(path) = &args.table {
        (format!("table:{}", path.display()), load_table(path)?)
    } else {
        return Err(Failure::Usage(
            "one of --dihedral, --alexander, --table is required".into(),
        ));
    };

    let report = check_axioms(&table).map_err(|e| Failure::Usage(e.to_string()))?;
    if !report.all_hold() {
        if args.json {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "quandle_kind": kind,
                "n": table.len(),
                "axioms": {
                    "bijective_columns": report.bijective_columns,
                    "right_distributive": report.right_distributive,
                    "idempotent": report.idempotent,
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        } else {
            println!("quandle: {kind}  order {}", table.len());
            print_axioms(&report);
        }
        return Err(Failure::Math("table fails the quandle axioms".into()));
    }
    let q = FiniteQuandle::from_table(table).map_err(|e| Failure::Math(e.to_string()))?;
    let inner = inner_group(&q);
    let blocks = orbits(&q);
    let connected = is_connected(&q);
    if args.json {
        let doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "quandle_kind": kind,
            "n": q.order(),
            "axioms": {
                "bijective_columns": true,
                "right_distributive": true,
                "idempotent": true,
            },
            "inner_group_order": inner.order(),
            "orbits": blocks.iter().map(|b| b.iter().map(|e| e + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "connected": connected,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("quandle: {kind}  order {}", q.order());
        print_axioms(&check_axioms(q.table()).unwrap());
        println!("inner group order: {}", inner.order());
        println!("orbits: {}", orbit_display(&blocks));
        println!("connected: {}", if connected { "yes" } else { "no" });
    }
    Ok(())
}

fn print_axioms(report: &quandle_rep::quandle::AxiomReport) {
    let flag = |b: bool| if b { "yes" } else { "no" };
    println!(
        "axioms: bijective columns {}, right distributive {}, idempotent {}",
        flag(report.bijective_columns),
        flag(report.right_distributive),
        flag(report.idempotent)
    );
}

fn format_scalar(z: &Scalar) -> String {
    let (re, im) = (z.re, z.im);
    if im.abs() < 5e-5 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

fn format_vector(v: &[Scalar]) -> String {
    let inner: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", inner.join(", "))
}

fn vector_to_pairs(v: &[Scalar]) -> Vec<(f64, f64)> {
    v.iter().map(|z| (z.re, z.im)).collect()
}

/// One display row of a decomposition table.
struct Row {
    name: String,
    label: Option<IrrepLabel>,
    generator: Vec<Scalar>,
    dimension: usize,
}

/// Canonical presentation rows for the regular representation of the
/// dihedral quandle: the constant function, the alternating function (even
/// orders), and the u-generated planes, as in the worked example tables.
fn dihedral_rows(n: usize) -> Vec<Row> {
    let one = IrrepLabel::C { lambda: 1, mu: 1 };
    let ones = vec![Scalar::new(1.0, 0.0); n];
    let mut rows = vec![Row {
        name: "1".into(),
        label: Some(one),
        generator: ones,
        dimension: 1,
    }];
    if n.is_multiple_of(2) {
        let r = n / 2;
        rows.push(Row {
            name: "1\u{0302}".into(),
            label: Some(one),
            generator: hat_one(n).unwrap(),
            dimension: 1,
        });
        for (orbit, index) in [(Orbit::Even, 0usize), (Orbit::Odd, 1usize)] {
            for s in 1..=r / 2 {
                let generator = u_vector(n, s, orbit).unwrap();
                let (label, dimension) = if r.is_multiple_of(2) && s == r / 2 {
                    let label = if index == 0 {
                        IrrepLabel::C { lambda: -1, mu: 1 }
                    } else {
                        IrrepLabel::C { lambda: 1, mu: -1 }
                    };
                    (label, 1)
                } else {
                    (canonicalize_w(r as u32, s as i64).unwrap(), 2)
                };
                rows.push(Row {
                    name: format!("U_{{{s},{index}}}"),
                    label: Some(label),
                    generator,
                    dimension,
                });
            }
        }
    } else {
        for s in 1..=(n - 1) / 2 {
            rows.push(Row {
                name: format!("U_{s}"),
                label: Some(canonicalize_w(n as u32, 2 * s as i64).unwrap()),
                generator: u_vector(n, 2 * s % n, Orbit::Full).unwrap(),
                dimension: 2,
            });
        }
    }
    rows
}

fn rows_to_entries(rows: &[Row]) -> Vec<ComponentEntry> {
    let mut grouped: BTreeMap<Option<IrrepLabel>, ComponentEntry> = BTreeMap::new();
    for row in rows {
        grouped
            .entry(row.label)
            .and_modify(|entry| entry.multiplicity += 1)
            .or_insert_with(|| ComponentEntry {
                label: row.label,
                dimension: row.dimension,
                multiplicity: 1,
                generator_vector: vector_to_pairs(&row.generator),
            });
    }
    grouped.into_values().collect()
}

fn print_rows(rows: &[Row]) {
    let name_width = rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(6).max(6);
    let label_width = rows
        .iter()
        .map(|r| r.label.map_or(1, |l| l.to_string().chars().count()))
        .max()
        .unwrap_or(5)
        .max(5);
    println!(
        "{:<name_width$}  {:<label_width$}  {:>3}  generated by",
        "subrep", "irrep", "dim"
    );
    for row in rows {
        let label = row.label.map_or("-".to_string(), |l| l.to_string());
        println!(
            "{:<name_width$}  {:<label_width$}  {:>3}  {}",
            row.name,
            label,
            row.dimension,
            format_vector(&row.generator)
        );
    }
}

fn cmd_decompose(args: DecomposeArgs) -> Result<(), Failure> {
    let tol = resolve_tol(args.tol)?;
    if let Some(n) = args.dihedral {
        if n < 3 {
            return Err(Failure::Usage(format!(
                "--dihedral expects n >= 3 for decomposition (got {n})"
            )));
        }
        // Numerical decomposition, labeled and checked against the closed
        // form; the table is then presented with the canonical generators.
        let verification =
            verify_theorem(n, args.seed, &tol).map_err(|e| Failure::Math(e.to_string()))?;
        if !verification.passed {
            eprintln!(
                "numerical decomposition does not match the closed form:\n  expected {:?}\n  found  {:?}",
                verification.expected.labels, verification.found.labels
            );
            return Err(Failure::Math("decomposition mismatch".into()));
        }
        let rows = dihedral_rows(n);
        let entries = rows_to_entries(&rows);
        let doc = ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            n,
            quandle_kind: "dihedral".into(),
            components: entries,
            residual_max: verification.residual_max,
            seed: args.seed,
        };
        doc.validate().map_err(|e| Failure::Math(e.to_string()))?;
        if args.json {
            println!("{}", doc.to_json().map_err(|e| Failure::Math(e.to_string()))?);
        } else {
            println!(
                "Regular representation of dihedral({n}): {} components, seed {}, max residual {:.2e}",
                rows.len(),
                args.seed,
                verification.residual_max
            );
            print_rows(&rows);
        }
        Ok(())
    } else if let Some(path) = &args.table {
        let table = load_table(path)?;
        let q = FiniteQuandle::from_table(table).map_err(|e| Failure::Math(e.to_string()))?;
        let n = q.order();
        let rep = regular_representation(&q);
        let report = decompose(&rep, args.seed, &tol).map_err(|e| Failure::Math(e.to_string()))?;
        let residual = report
            .max_invariance_residual()
            .map_err(|e| Failure::Math(e.to_string()))?
            .max(report.max_orthonormality_residual());
        let rows: Vec<Row> = report
            .components
            .iter()
            .enumerate()
            .map(|(i, comp)| Row {
                name: format!("V{}", i + 1),
                label: None,
                generator: comp.subspace.basis().col(0),
                dimension: comp.dimension,
            })
            .collect();
        let doc = ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            n,
            quandle_kind: format!("table:{}", path.display()),
            components: rows
                .iter()
                .map(|row| ComponentEntry {
                    label: None,
                    dimension: row.dimension,
                    multiplicity: 1,
                    generator_vector: vector_to_pairs(&row.generator),
                })
                .collect(),
            residual_max: residual,
            seed: args.seed,
        };
        doc.validate().map_err(|e| Failure::Math(e.to_string()))?;
        if args.json {
            println!("{}", doc.to_json().map_err(|e| Failure::Math(e.to_string()))?);
        } else {
            println!(
                "Regular representation of {}: {} components (unlabeled), seed {}, max residual {:.2e}",
                doc.quandle_kind,
                rows.len(),
                args.seed,
                residual
            );
            print_rows(&rows);
        }
        Ok(())
    } else {
        Err(Failure::Usage("one of --dihedral, --table is required".into()))
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = text.split("..").collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!("--range expects A..B (got '{text}')")));
    }
    let a = parts[0]
        .trim()
        .parse::<usize>()
        .map_err(|_| Failure::Usage(format!("bad range start '{}'", parts[0])))?;
    let b = parts[1]
        .trim()
        .parse::<usize>()
        .map_err(|_| Failure::Usage(format!("bad range end '{}'", parts[1])))?;
    if a < 3 || b < a {
        return Err(Failure::Usage(format!(
            "range must satisfy 3 <= A <= B (got {a}..{b})"
        )));
    }
    Ok((a, b))
}

fn multiset_display(labels: &[(IrrepLabel, usize)]) -> String {
    labels
        .iter()
        .map(|(label, mult)| {
            if *mult == 1 {
                label.to_string()
            } else {
                format!("{label} x{mult}")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let tol = resolve_tol(args.tol)?;
    let (a, b) = parse_range(&args.range)?;
    let mut all_passed = true;
    let mut json_results = Vec::new();
    for n in a..=b {
        let report = verify_theorem(n, args.seed, &tol).map_err(|e| Failure::Math(e.to_string()))?;
        all_passed &= report.passed;
        if args.json {
            json_results.push(serde_json::json!({
                "n": n,
                "passed": report.passed,
                "residual_max": report.residual_max,
                "expected": report.expected.labels,
                "found": report.found.labels,
            }));
        } else {
            println!(
                "n={n}: {} [{}] residual_max {:.2e}",
                if report.passed { "pass" } else { "FAIL" },
                multiset_display(&report.found.labels),
                report.residual_max
            );
        }
    }
    if args.json {
        let doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "seed": args.seed,
            "range": [a, b],
            "all_passed": all_passed,
            "results": json_results,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "{}: {} orders checked",
            if all_passed { "all passed" } else { "FAILURES" },
            b - a + 1
        );
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Math("verification failed for at least one order".into()))
    }
}

fn cmd_catalog(args: CatalogArgs) -> Result<(), Failure> {
    let labels = irrep_catalog(args.m).map_err(|e| Failure::Usage(e.to_string()))?;
    println!(
        "Irreducible representations of the dihedral group of order {} (m = {})",
        2 * args.m,
        args.m
    );
    for label in &labels {
        println!("  {:<12} dim {}", label.to_string(), label.dimension());
    }
    let sum_sq: usize = labels.iter().map(|l| l.dimension() * l.dimension()).sum();
    println!("classes: {}   sum of squared dimensions: {sum_sq} = 2m", labels.len());
    // Cross-check against the group order identity.
    if sum_sq != 2 * args.m as usize {
        return Err(Failure::Math("catalog dimension identity failed".into()));
    }
    // The expected decomposition realizes these labels for order 2m.
    let _ = theorem_decomposition(2 * args.m as usize).map_err(|e| Failure::Math(e.to_string()))?;
    Ok(())
}
