//! `saito`: exact computations and theorem verification for invertible
//! polynomials and their enhanced Burnside-ring duality.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::Report;
use saito_core::abelian::{minimal_generators, AmbientGroup, GroupElement, IntMat, Subgroup};
use saito_core::fuzz::{run_fuzz, FuzzConfig};
use saito_core::invertible::{
    build_dual_pair, enhanced_euler, parse_generator_list, parse_poly_file,
    reduced_enhanced_euler, reduced_orbifold_zeta, symmetry_data, verify_all, verify_duality,
    PolyFile, SymmetryData, Theorem,
};
use saito_core::report::Check;
use serde_json::{Map, Value};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "saito", version, about = "Exact Saito duality for invertible polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Size guard for group enumeration
    #[arg(long, global = true, env = "SAITO_MAX_ORDER", default_value_t = saito_core::DEFAULT_MAX_ORDER)]
    max_order: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exponent matrix, determinant, weights and symmetry group of a polynomial
    Info { input: PathBuf },
    /// The reduced (default) or full enhanced Euler characteristic
    Euler {
        input: PathBuf,
        /// Print the unreduced characteristic
        #[arg(long)]
        full: bool,
    },
    /// Reduced orbifold zeta function for a subgroup of G_f
    Zeta {
        input: PathBuf,
        /// `trivial`, `full`, `all`, or a generator list like "(1/2,0) (0,1/3)"
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// The Berglund-Hübsch transpose and the dual of the selected subgroup
    Dual {
        input: PathBuf,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Check the duality statements on a polynomial
    Verify {
        input: PathBuf,
        /// `prop_dual`, `thm1`, `thm2`, `corollary` or `all`
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Restrict subgroup-quantified statements to one subgroup
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Randomized checking of the structural laws (seeded, reproducible)
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        iterations: u64,
        /// Cap on the orders of the sampled ambient groups
        #[arg(long, default_value_t = 24)]
        group_order: u64,
    },
    /// Verify every .poly file in a directory, writing per-input result files
    Batch {
        dir: PathBuf,
        /// Output directory (default: <dir>/results)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        theorem: String,
    },
}

enum CliError {
    Core(saito_core::Error),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        use saito_core::Error::*;
        match self {
            CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Parse { .. } | NotSquare { .. } | Degenerate | DomainMismatch(_)
                | GroupTooLarge { .. } => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(msg) => msg.fmt(f),
        }
    }
}

impl From<saito_core::Error> for CliError {
    fn from(e: saito_core::Error) -> CliError {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rep, code)) => {
            let text = rep.emit(cli.format == Format::Json);
            if cli.format == Format::Json {
                println!("{text}");
            } else {
                print!("{text}");
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: &Cli) -> CliResult<(Report, i32)> {
    match &cli.cmd {
        Cmd::Info { input } => {
            let (pf, sym) = load(input, cli.max_order)?;
            let rep = info_report(&pf, &sym);
            Ok((rep, 0))
        }
        Cmd::Euler { input, full } => {
            let (_, sym) = load(input, cli.max_order)?;
            let chi = if *full {
                enhanced_euler(&sym)?
            } else {
                reduced_enhanced_euler(&sym)?
            };
            let mut rep = Report::new();
            rep.bare();
            rep.row("euler", chi.to_string(), Value::from(chi.to_string()));
            rep.json_only("augmentation", Value::from(chi.augmentation()));
            Ok((rep, 0))
        }
        Cmd::Zeta { input, subgroup } => {
            let (pf, sym) = load(input, cli.max_order)?;
            let mut rep = Report::new();
            rep.bare();
            match select(&sym, subgroup.as_deref(), pf.subgroup.as_deref(), false)? {
                Sel::One(sub) => {
                    let z = reduced_orbifold_zeta(&sym, &sub)?;
                    rep.row("zeta", z.to_string(), Value::from(z.to_string()));
                    rep.json_only("subgroup", Value::from(label(&sub)));
                }
                Sel::All => {
                    let mut items = Vec::new();
                    for sub in sym.group().subgroups() {
                        let z = reduced_orbifold_zeta(&sym, &sub)?;
                        rep.line(format!("G={}: {}", label(&sub), z));
                        let mut m = Map::new();
                        m.insert("subgroup".into(), Value::from(label(&sub)));
                        m.insert("zeta".into(), Value::from(z.to_string()));
                        items.push(Value::Object(m));
                    }
                    rep.json_only("zeta", Value::from(items));
                }
            }
            Ok((rep, 0))
        }
        Cmd::Dual { input, subgroup } => {
            let (pf, sym) = load(input, cli.max_order)?;
            let pair = build_dual_pair(sym.poly(), cli.max_order)?;
            let mut rep = Report::new();
            rep.row(
                "transpose",
                pair.ft().poly().to_string(),
                Value::from(pair.ft().poly().to_string()),
            );
            let et = matrix_text(pair.ft().poly().matrix());
            rep.row("E_t", et.clone(), Value::from(et));
            match select(&sym, subgroup.as_deref(), pf.subgroup.as_deref(), false)? {
                Sel::One(sub) => {
                    let dual = pair.pairing().dual_subgroup(&sub)?;
                    rep.row("subgroup", label(&sub), Value::from(label(&sub)));
                    rep.row(
                        "dual_subgroup",
                        format!("{} (order {})", label(&dual), dual.order()),
                        Value::from(label(&dual)),
                    );
                }
                Sel::All => {
                    for sub in pair.pairing().g().subgroups() {
                        let dual = pair.pairing().dual_subgroup(&sub)?;
                        rep.row(
                            &format!("dual of {}", label(&sub)),
                            label(&dual),
                            Value::from(label(&dual)),
                        );
                    }
                }
            }
            Ok((rep, 0))
        }
        Cmd::Verify {
            input,
            theorem,
            subgroup,
        } => {
            let (pf, sym) = load(input, cli.max_order)?;
            let checks = run_verify(
                &sym,
                theorem,
                subgroup.as_deref(),
                pf.subgroup.as_deref(),
                cli.max_order,
            )?;
            let mut rep = Report::new();
            rep.checks(checks);
            let code = if rep.passed() { 0 } else { 1 };
            Ok((rep, code))
        }
        Cmd::Fuzz {
            seed,
            iterations,
            group_order,
        } => {
            let cfg = FuzzConfig {
                seed: *seed,
                iterations: *iterations,
                max_group_order: *group_order,
            };
            let mut rep = Report::new();
            rep.row("seed", seed.to_string(), Value::from(*seed));
            rep.row("iterations", iterations.to_string(), Value::from(*iterations));
            rep.checks(run_fuzz(&cfg)?);
            let code = if rep.passed() { 0 } else { 1 };
            Ok((rep, code))
        }
        Cmd::Batch { dir, out, theorem } => run_batch(cli, dir, out.as_deref(), theorem),
    }
}

fn load(input: &Path, max_order: u64) -> CliResult<(PolyFile, SymmetryData)> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
    let pf = parse_poly_file(&text)?;
    let sym = symmetry_data(&pf.poly, max_order)?;
    Ok((pf, sym))
}

fn info_report(pf: &PolyFile, sym: &SymmetryData) -> Report {
    let mut rep = Report::new();
    let poly = sym.poly();
    rep.row("f", poly.to_string(), Value::from(poly.to_string()));
    let e = matrix_text(poly.matrix());
    rep.row("E", e.clone(), Value::from(e));
    rep.row("det", sym.det().to_string(), json_int(sym.det()));
    let weights: Vec<String> = sym.weights().iter().map(|q| q.to_string()).collect();
    rep.row(
        "weights",
        weights.join(", "),
        Value::from(weights.clone()),
    );
    let ct: Vec<u64> = sym.group().cyclic_type().to_vec();
    rep.row(
        "cyclic_type",
        format!("{ct:?}"),
        Value::from(ct.clone()),
    );
    rep.row("hf", sym.hf().to_string(), Value::from(sym.hf().to_string()));
    let kernel = label(&sym.alphaf().kernel());
    rep.row("alpha_kernel", kernel.clone(), Value::from(kernel));
    if let Some(gens) = &pf.subgroup {
        let rendered: Vec<String> = gens.iter().map(GroupElement::to_string).collect();
        rep.row(
            "subgroup",
            rendered.join(" "),
            Value::from(rendered.clone()),
        );
    }
    rep.checks(sym.warnings().iter().map(|w| Check::info("warning", w.clone())));
    rep
}

fn run_verify(
    sym: &SymmetryData,
    theorem: &str,
    flag: Option<&str>,
    file_gens: Option<&[GroupElement]>,
    max_order: u64,
) -> CliResult<Vec<Check>> {
    let sub = match select(sym, flag, file_gens, true)? {
        Sel::One(sub) => Some(sub),
        Sel::All => None,
    };
    let checks = if theorem == "all" {
        match &sub {
            None => verify_all(sym.poly(), max_order)?,
            Some(s) => {
                let mut checks = Vec::new();
                for which in Theorem::ALL {
                    checks.extend(verify_duality(sym.poly(), which, Some(s), max_order)?);
                }
                checks
            }
        }
    } else {
        let which: Theorem = theorem.parse()?;
        verify_duality(sym.poly(), which, sub.as_ref(), max_order)?
    };
    Ok(checks)
}

fn run_batch(
    cli: &Cli,
    dir: &Path,
    out: Option<&Path>,
    theorem: &str,
) -> CliResult<(Report, i32)> {
    let out_dir = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| dir.join("results"));
    std::fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", out_dir.display())))?;

    let mut inputs: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "poly"))
        .collect();
    inputs.sort();
    if inputs.is_empty() {
        return Err(CliError::Io(format!(
            "{}: no .poly files found",
            dir.display()
        )));
    }

    let json = cli.format == Format::Json;
    let mut summary = Report::new();
    let mut items = Vec::new();
    let mut any_parse_error = false;
    let mut any_fail = false;
    for input in &inputs {
        let name = input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let outcome = load(input, cli.max_order).and_then(|(pf, sym)| {
            let checks = run_verify(&sym, theorem, None, pf.subgroup.as_deref(), cli.max_order)?;
            let mut rep = info_report(&pf, &sym);
            rep.checks(checks);
            Ok(rep)
        });
        let (status, detail) = match outcome {
            Ok(rep) => {
                let path = out_dir.join(format!("{name}.{}", if json { "json" } else { "txt" }));
                std::fs::write(&path, rep.emit(json))
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                if rep.passed() {
                    ("PASS", format!("{} checks", rep.check_count()))
                } else {
                    any_fail = true;
                    ("FAIL", format!("{} checks", rep.check_count()))
                }
            }
            Err(e) => {
                if e.exit_code() == 2 {
                    any_parse_error = true;
                } else {
                    any_fail = true;
                }
                ("ERROR", format!("{e}"))
            }
        };
        summary.row(
            &name,
            format!("{status} ({detail})"),
            Value::from(status),
        );
        let mut m = Map::new();
        m.insert("input".into(), Value::from(name.clone()));
        m.insert("status".into(), Value::from(status));
        m.insert("detail".into(), Value::from(detail));
        items.push(Value::Object(m));
    }
    summary.json_only("summary", Value::from(items));

    let summary_path = out_dir.join(if json { "summary.json" } else { "summary.txt" });
    std::fs::write(&summary_path, summary.emit(json))
        .map_err(|e| CliError::Io(format!("{}: {e}", summary_path.display())))?;

    let code = if any_parse_error {
        2
    } else if any_fail {
        1
    } else {
        0
    };
    Ok((summary, code))
}

enum Sel {
    One(Subgroup),
    All,
}

/// Resolve the subgroup selector: explicit flag first, then the file's
/// `subgroup:` line, then the verb default (trivial, or the whole lattice
/// for verification).
fn select(
    sym: &SymmetryData,
    flag: Option<&str>,
    file_gens: Option<&[GroupElement]>,
    default_all: bool,
) -> CliResult<Sel> {
    let gf: &Arc<AmbientGroup> = sym.group();
    match flag {
        Some("all") => Ok(Sel::All),
        Some("trivial") => Ok(Sel::One(gf.trivial_subgroup())),
        Some("full") => Ok(Sel::One(gf.full_subgroup())),
        Some(text) => {
            let gens = parse_generator_list(text, 0, gf.dim())?;
            Ok(Sel::One(gf.subgroup(&gens)?))
        }
        None => match file_gens {
            Some(gens) => Ok(Sel::One(gf.subgroup(gens)?)),
            None if default_all => Ok(Sel::All),
            None => Ok(Sel::One(gf.trivial_subgroup())),
        },
    }
}

fn label(h: &Subgroup) -> String {
    if h.is_trivial() {
        return "<0>".into();
    }
    let gens: Vec<String> = minimal_generators(h.elements())
        .iter()
        .map(GroupElement::to_string)
        .collect();
    format!("<{}>", gens.join(", "))
}

fn matrix_text(e: &IntMat) -> String {
    let rows: Vec<String> = (0..e.rows())
        .map(|i| {
            let row: Vec<String> = (0..e.cols()).map(|j| e[(i, j)].to_string()).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn json_int(v: i128) -> Value {
    match i64::try_from(v) {
        Ok(n) => Value::from(n),
        Err(_) => Value::from(v.to_string()),
    }
}
