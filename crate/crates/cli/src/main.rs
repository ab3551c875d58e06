//! Command-line front end: classification of primitive isotropic classes,
//! exhaustive enumeration, Beauville–Mukai witnesses, verification suites and
//! the canonical embedding, all with machine-readable JSON on stdout.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or domain errors,
//! 3 vacuous verification (no classes at the bound).
//!
//! Vector coordinates are always given in the documented ordered basis
//! `e1, f1, e2, f2, e3, f3, δ` of the generalized Kummer lattice.

use clap::{Args, Parser, Subcommand};
use genkummer::invariant::{self, theta};
use genkummer::lattice::{int_json, IntLattice, LatticeVector};
use genkummer::mukai::{bm_witness, kummer_fibration_poltype};
use genkummer::oracle::{self, EnumerationConfig, Report};
use genkummer::PrimEmbedding;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "genkummer",
    about = "Monodromy invariants and polarization types on generalized Kummer lattices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polarization types of Lagrangian fibrations over P^n
    Poltype(PoltypeArgs),
    /// Classify a primitive isotropic class: divisibility, invariant, poltype
    Classify(ClassifyArgs),
    /// Enumerate primitive isotropic classes with bounded coordinates
    Enumerate(EnumerateArgs),
    /// Build the Beauville-Mukai witness for a class (n, d, b)
    Witness(WitnessArgs),
    /// Run the brute-force verification suites
    Verify(VerifyArgs),
    /// Print the canonical embedding of the Kummer lattice into the Mukai lattice
    Embed(EmbedArgs),
}

#[derive(Args)]
struct PoltypeArgs {
    /// half-dimension of the fibration total space, n >= 2
    #[arg(long)]
    n: i64,
    /// divisibility of the fiber class; all admissible values when omitted
    #[arg(long)]
    d: Option<i64>,
    /// render a table instead of JSON
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: i64,
    /// seven comma-separated coordinates in the basis e1,f1,e2,f2,e3,f3,δ
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    vector: Vec<i64>,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: i64,
    /// maximum coordinate magnitude (defaults to a bound that realizes
    /// every admissible divisibility)
    #[arg(long)]
    bound: Option<i64>,
    /// keep only classes of this exact divisibility
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: i64,
    /// lemmas | faithful | surjective | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    human: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Poltype(a) => cmd_poltype(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Embed(a) => cmd_embed(a),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn cmd_poltype(a: PoltypeArgs) -> CmdResult {
    if a.n < 2 {
        return Err(format!("poltype needs n >= 2, got {}", a.n));
    }
    let rows: Vec<(i64, genkummer::PolType)> = match a.d {
        Some(d) => vec![(d, kummer_fibration_poltype(a.n, d).map_err(|e| e.to_string())?)],
        None => invariant::admissible_divisibilities(a.n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|d| kummer_fibration_poltype(a.n, d).map(|p| (d, p)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?,
    };
    if a.human {
        println!("polarization types of Lagrangian fibrations, n = {}", a.n);
        for (d, p) in &rows {
            println!("  d = {d}: {p}");
        }
    } else {
        let rows: Vec<_> = rows.iter().map(|(d, p)| json!({"d": d, "poltype": p})).collect();
        println!("{}", json!({"n": a.n, "rows": rows}));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(a: ClassifyArgs) -> CmdResult {
    if a.n < 2 {
        return Err(format!("classify needs n >= 2, got {}", a.n));
    }
    if a.vector.len() != 7 {
        return Err(format!("--vector needs 7 coordinates, got {}", a.vector.len()));
    }
    let home = IntLattice::kummer(a.n).map_err(|e| e.to_string())?;
    let alpha = LatticeVector::from_i64(&home, &a.vector).map_err(|e| e.to_string())?;
    let inv = theta(&alpha, a.n).map_err(|e| e.to_string())?;
    let emb = PrimEmbedding::canonical(a.n).map_err(|e| e.to_string())?;
    let h = invariant::h_lattice(&alpha, &emb).map_err(|e| e.to_string())?;
    let gram = h.gram();
    let b_exhibited = invariant::find_b(&alpha, &emb).map_err(|e| e.to_string())?;
    let poltype = kummer_fibration_poltype(a.n, inv.d).map_err(|e| e.to_string())?;
    if a.human {
        println!("class {:?} in Λ_{}", a.vector, a.n);
        println!("  divisibility d = {}", inv.d);
        println!("  residue b = {b_exhibited}");
        println!("  invariant = {inv}");
        println!(
            "  H(α,ι) gram = [[{}, {}], [{}, {}]]",
            gram[(0, 0)],
            gram[(0, 1)],
            gram[(1, 0)],
            gram[(1, 1)]
        );
        println!("  poltype = {poltype}");
    } else {
        println!(
            "{}",
            json!({
                "d": inv.d,
                "b": int_json(&b_exhibited),
                "invariant": inv,
                "h_gram": [
                    [int_json(&gram[(0, 0)]), int_json(&gram[(0, 1)])],
                    [int_json(&gram[(1, 0)]), int_json(&gram[(1, 1)])],
                ],
                "poltype": poltype,
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(a: EnumerateArgs) -> CmdResult {
    let bound = a.bound.unwrap_or_else(|| oracle::default_bound(a.n));
    let cfg = match a.d {
        Some(d) => EnumerationConfig::with_divisibility(a.n, bound, d),
        None => EnumerationConfig::new(a.n, bound),
    };
    let classes = oracle::enumerate_isotropic(&cfg).map_err(|e| e.to_string())?;
    let mut census: std::collections::BTreeMap<(i64, i64), u64> = std::collections::BTreeMap::new();
    let mut lines = Vec::with_capacity(classes.len());
    for alpha in &classes {
        let inv = theta(alpha, a.n).map_err(|e| e.to_string())?;
        *census.entry((inv.d, inv.b)).or_insert(0) += 1;
        lines.push((alpha, inv));
    }
    if a.human {
        println!("classes of Λ_{} with coordinates bounded by {bound}", a.n);
        for (alpha, inv) in &lines {
            println!("  {:?}  ϑ = {inv}", alpha.coords_i64().unwrap_or_default());
        }
        println!("census by (d, b):");
        for ((d, b), count) in &census {
            println!("  (d={d}, b={b}): {count}");
        }
    } else {
        for (alpha, inv) in &lines {
            println!("{}", json!({"vector": alpha.to_json(), "d": inv.d, "b": inv.b, "invariant": inv}));
        }
        let census: Vec<_> = census
            .iter()
            .map(|((d, b), count)| json!({"d": d, "b": b, "count": count}))
            .collect();
        println!("{}", json!({"n": a.n, "bound": bound, "classes": classes.len(), "census": census}));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(a: WitnessArgs) -> CmdResult {
    let w = bm_witness(a.n, a.d, a.b).map_err(|e| e.to_string())?;
    if a.human {
        println!("Beauville-Mukai witness for (n, d, b) = ({}, {}, {})", a.n, a.d, a.b);
        println!("  s = {} (least positive with s b ≡ 1 mod d)", w.s);
        println!("  v = (0, {:?}, {})", w.v.c.iter().map(|c| c.to_string()).collect::<Vec<_>>(), w.v.s);
        println!("  (v, v) = {}", w.vv);
        println!("  Div(α) in v⊥ = {}", w.alpha_divisibility);
        println!("  invariant = {}", w.invariant);
        println!("  poltype = {}", w.poltype);
        println!("  (ι(α) - b v)/d integral: {}", w.quotient_integral);
    } else {
        println!("{}", w.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

fn print_reports(reports: &[Report], human: bool) {
    if human {
        for r in reports {
            println!(
                "suite {:<11} n={:<3} bound={:<3} classes={:<8} failures={:<3} vacuous={} elapsed={}ms",
                r.suite, r.n, r.bound, r.classes_checked, r.failures.len(), r.vacuous, r.elapsed_ms
            );
            for f in &r.failures {
                println!("    FAIL {f}");
            }
        }
    } else {
        println!("{}", serde_json::to_string(reports).expect("reports serialize"));
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let bound = a.bound.unwrap_or_else(|| oracle::default_bound(a.n));
    let cfg = EnumerationConfig::new(a.n, bound);
    let mut reports: Vec<Report> = Vec::new();
    let run_surjective = |reports: &mut Vec<Report>| -> Result<(), String> {
        for d in invariant::admissible_divisibilities(a.n).map_err(|e| e.to_string())? {
            reports.push(oracle::verify_surjective(a.n, d).map_err(|e| e.to_string())?);
        }
        Ok(())
    };
    match a.suite.as_str() {
        "lemmas" => reports.push(oracle::verify_lemmas(&cfg).map_err(|e| e.to_string())?),
        "faithful" => reports.push(oracle::verify_faithful(&cfg).map_err(|e| e.to_string())?),
        "surjective" => run_surjective(&mut reports)?,
        "all" => {
            reports.push(oracle::verify_lemmas(&cfg).map_err(|e| e.to_string())?);
            reports.push(oracle::verify_faithful(&cfg).map_err(|e| e.to_string())?);
            run_surjective(&mut reports)?;
        }
        other => return Err(format!("unknown suite '{other}' (lemmas|faithful|surjective|all)")),
    }
    print_reports(&reports, a.human);
    if reports.iter().any(|r| r.vacuous) {
        eprintln!("no classes at bound {bound}");
        return Ok(ExitCode::from(3));
    }
    if reports.iter().any(|r| !r.failures.is_empty()) {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_embed(a: EmbedArgs) -> CmdResult {
    let emb = PrimEmbedding::canonical(a.n).map_err(|e| e.to_string())?;
    let m = emb.matrix();
    let vv = emb.v().norm();
    // ι(Λ) ⟂ v and the image is saturated, rechecked here for the report
    let image = genkummer::Sublattice::from_rows(emb.target(), &m.transpose());
    let orthogonal = image
        .generators()
        .iter()
        .all(|g| g.pair(emb.v()).map(|p| p == 0.into()).unwrap_or(false));
    let saturated = image.is_saturated();
    if a.human {
        println!("canonical embedding Λ_{} ↪ Λ~", a.n);
        for i in 0..m.nrows() {
            println!("  {:?}", (0..m.ncols()).map(|j| m[(i, j)].to_string()).collect::<Vec<_>>());
        }
        println!("  v = {:?}, (v,v) = {vv}", emb.v().coords_i64().unwrap_or_default());
        println!("  image ⟂ v: {orthogonal}, image saturated: {saturated}");
    } else {
        let rows: Vec<Vec<serde_json::Value>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| int_json(&m[(i, j)])).collect())
            .collect();
        println!(
            "{}",
            json!({
                "n": a.n,
                "iota": rows,
                "v": emb.v().to_json(),
                "vv": int_json(&vv),
                "image_orthogonal_to_v": orthogonal,
                "image_saturated": saturated,
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}
