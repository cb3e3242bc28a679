//! `eqp` — exact computer algebra for 2-equipped posets and their
//! corepresentations over a quadratic field extension.
//!
//! Subcommands print a human-readable summary to stdout and, with `--out`,
//! a machine TSV report. Exit codes: 0 success/pass, 1 verification failure,
//! 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use eqposet::catalog::{self, K8Variant};
use eqposet::corep::{
    dim_vector_of_spaces, direct_sum, dual_corep, is_reduced, matrix_of, spaces_of,
    support_flags, MatrixCorep,
};
use eqposet::fields::{frobenius_companion, GMat, Tower};
use eqposet::homalg::{are_isomorphic, decompose, Certainty, IsoStatus};
use eqposet::poset::{
    critical_occurrences, one_parameter_criterion, sincere_class, EquippedPoset, IsoKind,
};
use eqposet::textio::{self, parse_dim_vector, parse_poset, print_corep, print_poset};
use eqposet::tits::{
    classify_vector, enumerate_admissible_roots, minimal_imaginary_root, tits_form, DimVector,
};
use eqposet::verify::{self, Report};

#[derive(Parser)]
#[command(name = "eqp", version, about = "2-equipped posets and their corepresentations")]
struct Cli {
    /// Field preset: gf2, qsqrt2 or gf3
    #[arg(long, global = true, default_value = "gf2")]
    field: String,
    /// Write the machine TSV report here
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Poset ingestion and the one-parameter decision
    Poset {
        #[command(subcommand)]
        cmd: PosetCmd,
    },
    /// Tits form evaluation, classification and root enumeration
    Tits {
        #[command(subcommand)]
        cmd: TitsCmd,
    },
    /// Corepresentation operations
    Corep {
        #[command(subcommand)]
        cmd: CorepCmd,
    },
    /// Catalog emission
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Verification suites (exit 1 on failure)
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Validate a poset file and echo the closed relation
    Check { file: PathBuf },
    /// Decide the one-parameter criterion
    Criterion { file: PathBuf },
    /// Identify the poset among the 28 sincere one-parameter posets
    Sincere { file: PathBuf },
}

#[derive(Subcommand)]
enum TitsCmd {
    /// Evaluate the Tits form at a dimension vector
    Eval {
        file: PathBuf,
        #[arg(long)]
        d: String,
    },
    /// Classify a vector (admissible root / imaginary root / special / other)
    Classify {
        file: PathBuf,
        #[arg(long)]
        d: String,
    },
    /// Enumerate admissible roots inside a coordinate box
    Roots {
        file: PathBuf,
        #[arg(long = "box")]
        bounds: String,
    },
    /// Recompute a minimal-dimension table with per-row classification
    Table {
        /// Table id: A25..A40 and duals, K7, K9
        id: String,
    },
}

#[derive(Args)]
struct CorepInput {
    file: PathBuf,
    /// Poset file, when the corep header names a non-catalog poset
    #[arg(long)]
    poset: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CorepCmd {
    /// Dimension vectors of the matrix and of its spaces
    Dim(CorepInput),
    /// Krull–Schmidt decomposition into indecomposable summands
    Decompose(CorepInput),
    /// Isomorphism test for two corepresentations
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        poset: Option<PathBuf>,
    },
    /// Dual corepresentation over the dual poset
    Dual(CorepInput),
    /// Direct sum of two corepresentations
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        poset: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Emit a catalog poset, canonical matrix or series instance
    Emit {
        /// Poset id (K6..K9, A25..A48, F13..F18, X*), matrix id (F15-G,
        /// K6-4, A25-5, A25s-5) or series id (K6-5, K6-6, K7-S, K8-S)
        id: String,
        /// Canonical-matrix type selector, e.g. `--type G` for F15-G or
        /// `--type 5` for A25-5 (bare id for the posets with one matrix)
        #[arg(long = "type")]
        type_sel: Option<String>,
        /// Block size for series
        #[arg(long)]
        n: Option<usize>,
        /// Companion-block coefficients a0,a1,... (monic, low to high)
        #[arg(long)]
        x: Option<String>,
        /// K8 variant: char2, separable or inseparable
        #[arg(long)]
        variant: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Recompute every dimension-table row and parametric family
    Tables,
    /// Validate every catalog matrix and the structural lemmas
    Catalog,
    /// Brute-force Theorem D inside a box
    TheoremD {
        #[arg(long, default_value = "K6")]
        poset: String,
        #[arg(long = "box")]
        bounds: Option<String>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Series separation S(X) ≅ S(X') ⟺ X ~ X'
    Series {
        #[arg(long, default_value = "K6")]
        id: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Duality suite on brute-forced indecomposables
    Duality {
        #[arg(long, default_value = "K6")]
        poset: String,
        #[arg(long = "box")]
        bounds: Option<String>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    // EQP_THREADS caps internal parallelism; the engine is deterministic and
    // runs on one worker, which satisfies any positive cap
    if let Ok(v) = std::env::var("EQP_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n >= 1 => {}
            _ => {
                eprintln!("error: EQP_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_poset(path: &PathBuf) -> eqposet::Result<EquippedPoset> {
    let text = fs::read_to_string(path).map_err(|e| eqposet::Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_poset(&text)
}

fn load_corep(
    path: &PathBuf,
    poset_file: &Option<PathBuf>,
    tower: &Tower,
) -> eqposet::Result<MatrixCorep> {
    let text = fs::read_to_string(path).map_err(|e| eqposet::Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let extra = match poset_file {
        Some(p) => Some(load_poset(p)?),
        None => None,
    };
    let resolve = move |name: &str| -> eqposet::Result<EquippedPoset> {
        if let Some(p) = &extra {
            if p.name() == name {
                return Ok(p.clone());
            }
        }
        catalog::catalog_poset(name)
    };
    let (m, _) = textio::parse_corep(&text, &resolve, Some(tower))?;
    Ok(m)
}

fn write_out(out: &Option<PathBuf>, tsv: &str) -> eqposet::Result<()> {
    if let Some(path) = out {
        fs::write(path, tsv).map_err(|e| eqposet::Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
    }
    Ok(())
}

fn simple_tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join("\t");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join("\t"));
        s.push('\n');
    }
    s
}

fn report_exit(rep: &Report, out: &Option<PathBuf>) -> eqposet::Result<ExitCode> {
    println!("{}", rep.summary());
    for row in &rep.rows {
        if !matches!(row.status, verify::RowStatus::Pass | verify::RowStatus::Info) {
            println!(
                "  {}: expected {}, computed {} [{}]",
                row.case_id,
                row.expected,
                row.computed,
                row.status.as_str()
            );
        }
    }
    write_out(out, &rep.to_tsv())?;
    Ok(if rep.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> eqposet::Result<ExitCode> {
    let tower = Tower::preset(&cli.field)?;
    match cli.cmd {
        Cmd::Poset { cmd } => run_poset(cmd, &cli.out),
        Cmd::Tits { cmd } => run_tits(cmd, &cli.out),
        Cmd::Corep { cmd } => run_corep(cmd, &tower, &cli.field, &cli.out),
        Cmd::Catalog { cmd } => run_catalog(cmd, &tower, &cli.field, &cli.out),
        Cmd::Verify { cmd } => run_verify(cmd, &tower, &cli.out),
    }
}

fn run_poset(cmd: PosetCmd, out: &Option<PathBuf>) -> eqposet::Result<ExitCode> {
    match cmd {
        PosetCmd::Check { file } => {
            let p = load_poset(&file)?;
            println!(
                "poset {}: {} points, weight {}",
                p.name(),
                p.n(),
                p.weight(None)?
            );
            print!("{}", textio::relation_matrix(&p));
            write_out(out, &print_poset(&p))?;
            Ok(ExitCode::SUCCESS)
        }
        PosetCmd::Criterion { file } => {
            let p = load_poset(&file)?;
            let occ = critical_occurrences(&p);
            let status = one_parameter_criterion(&p);
            let mut types: Vec<&str> = occ.iter().map(|(id, _)| id.as_str()).collect();
            types.sort_unstable();
            types.dedup();
            let detail: Vec<String> = occ
                .iter()
                .map(|(id, set)| {
                    let names: Vec<&str> =
                        set.iter().map(|&i| p.point_ids()[i].as_str()).collect();
                    format!("{} {{{}}}", id.as_str(), names.join(","))
                })
                .collect();
            println!(
                "{status} ({} critical occurrence(s), {} type(s){}{})",
                occ.len(),
                types.len(),
                if detail.is_empty() { "" } else { ": " },
                detail.join("; ")
            );
            let rows: Vec<Vec<String>> = occ
                .iter()
                .map(|(id, set)| {
                    vec![
                        p.name().to_string(),
                        status.to_string(),
                        id.as_str().to_string(),
                        set.iter()
                            .map(|&i| p.point_ids()[i].clone())
                            .collect::<Vec<_>>()
                            .join(","),
                    ]
                })
                .collect();
            write_out(out, &simple_tsv(&["poset", "status", "critical", "points"], &rows))?;
            Ok(ExitCode::SUCCESS)
        }
        PosetCmd::Sincere { file } => {
            let p = load_poset(&file)?;
            match sincere_class(&p)? {
                Some((id, kind)) => {
                    let k = match kind {
                        IsoKind::Iso => "iso",
                        IsoKind::Anti => "anti",
                    };
                    println!("{id} ({k})");
                    write_out(
                        out,
                        &simple_tsv(
                            &["poset", "catalog", "kind"],
                            &[vec![p.name().to_string(), id, k.to_string()]],
                        ),
                    )?;
                }
                None => {
                    println!("not a sincere one-parameter poset");
                    write_out(
                        out,
                        &simple_tsv(
                            &["poset", "catalog", "kind"],
                            &[vec![p.name().to_string(), "-".into(), "-".into()]],
                        ),
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_tits(cmd: TitsCmd, out: &Option<PathBuf>) -> eqposet::Result<ExitCode> {
    match cmd {
        TitsCmd::Eval { file, d } => {
            let p = load_poset(&file)?;
            let dv = parse_dim_vector(&p, &d)?;
            let f = tits_form(&p, &dv)?;
            println!("{f}");
            write_out(
                out,
                &simple_tsv(
                    &["poset", "d", "f"],
                    &[vec![p.name().to_string(), dv.render(&p), f.to_string()]],
                ),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        TitsCmd::Classify { file, d } => {
            let p = load_poset(&file)?;
            let dv = parse_dim_vector(&p, &d)?;
            let f = tits_form(&p, &dv)?;
            let class = classify_vector(&p, &dv)?;
            println!("{class} (f = {f})");
            write_out(
                out,
                &simple_tsv(
                    &["poset", "d", "f", "class"],
                    &[vec![
                        p.name().to_string(),
                        dv.render(&p),
                        f.to_string(),
                        class.to_string(),
                    ]],
                ),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        TitsCmd::Table { id } => {
            let p = catalog::catalog_poset(&id)?;
            let (rows, mu) = catalog::dim_table(&id)?;
            let mut out_rows = Vec::new();
            let mut mismatches = 0;
            for r in &rows {
                let f = tits_form(&p, &r.d)?;
                if f != r.f {
                    mismatches += 1;
                }
                let class = classify_vector(&p, &r.d)?;
                println!(
                    "T{}	d={}	f={} (tabled {})	{}",
                    r.type_label,
                    r.d.render(&p),
                    f,
                    r.f,
                    class
                );
                out_rows.push(vec![
                    id.clone(),
                    r.type_label.clone(),
                    r.d.render(&p),
                    r.f.to_string(),
                    f.to_string(),
                    class.to_string(),
                ]);
            }
            if let Some(mu) = &mu {
                let f = tits_form(&p, mu)?;
                println!("mu	d={}	f={}", mu.render(&p), f);
                out_rows.push(vec![
                    id.clone(),
                    "mu".into(),
                    mu.render(&p),
                    "0".into(),
                    f.to_string(),
                    classify_vector(&p, mu)?.to_string(),
                ]);
            }
            write_out(
                out,
                &simple_tsv(
                    &["poset", "type", "d", "f_expected", "f_computed", "class"],
                    &out_rows,
                ),
            )?;
            println!("{} rows, {} mismatches", rows.len(), mismatches);
            Ok(if mismatches == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        TitsCmd::Roots { file, bounds } => {
            let p = load_poset(&file)?;
            let bv = parse_dim_vector(&p, &bounds)?;
            let roots = enumerate_admissible_roots(&p, &bv)?;
            let mu = minimal_imaginary_root(&p, &bv).unwrap_or(None);
            println!("{} admissible roots inside {}", roots.len(), bv.render(&p));
            for r in &roots {
                println!("  {}  f = {}", r.render(&p), tits_form(&p, r)?);
            }
            if let Some(mu) = &mu {
                println!("minimal imaginary root: {}", mu.render(&p));
            }
            let rows: Vec<Vec<String>> = roots
                .iter()
                .map(|r| {
                    vec![
                        p.name().to_string(),
                        r.render(&p),
                        tits_form(&p, r).unwrap().to_string(),
                    ]
                })
                .collect();
            write_out(out, &simple_tsv(&["poset", "root", "f"], &rows))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_corep(
    cmd: CorepCmd,
    tower: &Tower,
    field: &str,
    out: &Option<PathBuf>,
) -> eqposet::Result<ExitCode> {
    match cmd {
        CorepCmd::Dim(input) => {
            let m = load_corep(&input.file, &input.poset, tower)?;
            let u = spaces_of(tower, &m);
            let md = m.dim_vector();
            let sd = dim_vector_of_spaces(tower, &u);
            let (supp, sincere, trivial) = support_flags(tower, &u);
            println!("matrix dim: {}", md.render(&m.poset));
            println!("spaces dim: {}", sd.render(&m.poset));
            println!("reduced: {}", is_reduced(tower, &m));
            let names: Vec<&str> = supp.iter().map(|&i| m.poset.point_ids()[i].as_str()).collect();
            println!("supp = {{{}}}, sincere: {sincere}, trivial: {trivial}", names.join(","));
            write_out(
                out,
                &simple_tsv(
                    &["poset", "matrix_dim", "spaces_dim", "reduced", "sincere"],
                    &[vec![
                        m.poset.name().to_string(),
                        md.render(&m.poset),
                        sd.render(&m.poset),
                        is_reduced(tower, &m).to_string(),
                        sincere.to_string(),
                    ]],
                ),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        CorepCmd::Decompose(input) => {
            let m = load_corep(&input.file, &input.poset, tower)?;
            let u = spaces_of(tower, &m);
            let dec = decompose(tower, &u)?;
            let certainty = match dec.certainty {
                Certainty::GroundTruth => "ground-truth",
                Certainty::FittingComplete => "fitting-complete",
            };
            println!(
                "{} indecomposable summand(s) [{}{}]",
                dec.summands.len(),
                certainty,
                if dec.undecided { ", undecided leaves" } else { "" }
            );
            let mut rows = Vec::new();
            for (i, s) in dec.summands.iter().enumerate() {
                let d = dim_vector_of_spaces(tower, s);
                println!("summand {}: dim {}", i + 1, d.render(&m.poset));
                print!("{}", print_corep(tower, &matrix_of(tower, s), field));
                rows.push(vec![
                    m.poset.name().to_string(),
                    (i + 1).to_string(),
                    d.render(&m.poset),
                ]);
            }
            write_out(out, &simple_tsv(&["poset", "summand", "dim"], &rows))?;
            Ok(ExitCode::SUCCESS)
        }
        CorepCmd::Iso { a, b, poset } => {
            let ma = load_corep(&a, &poset, tower)?;
            let mb = load_corep(&b, &poset, tower)?;
            let ua = spaces_of(tower, &ma);
            let ub = spaces_of(tower, &mb);
            let status = are_isomorphic(tower, &ua, &ub)?;
            let s = match status {
                IsoStatus::Iso => "isomorphic",
                IsoStatus::NotIso => "not isomorphic",
                IsoStatus::Undecided => "undecided",
            };
            println!("{s}");
            write_out(
                out,
                &simple_tsv(&["poset", "result"], &[vec![ma.poset.name().to_string(), s.into()]]),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        CorepCmd::Dual(input) => {
            let m = load_corep(&input.file, &input.poset, tower)?;
            let u = spaces_of(tower, &m);
            let d = dual_corep(tower, &u)?;
            let md = matrix_of(tower, &d);
            print!("{}", print_corep(tower, &md, field));
            write_out(out, &print_corep(tower, &md, field))?;
            Ok(ExitCode::SUCCESS)
        }
        CorepCmd::Sum { a, b, poset } => {
            let ma = load_corep(&a, &poset, tower)?;
            let mb = load_corep(&b, &poset, tower)?;
            let s = direct_sum(tower, &ma, &mb)?;
            print!("{}", print_corep(tower, &s, field));
            write_out(out, &print_corep(tower, &s, field))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_block(tower: &Tower, x: &Option<String>, f_only: bool) -> eqposet::Result<GMat> {
    let coeffs: Vec<_> = match x {
        Some(s) => s
            .split(',')
            .map(|e| tower.parse_g(e.trim()))
            .collect::<eqposet::Result<Vec<_>>>()?,
        None => vec![tower.g_zero()],
    };
    frobenius_companion(tower, &coeffs, f_only)
}

fn run_catalog(
    cmd: CatalogCmd,
    tower: &Tower,
    field: &str,
    out: &Option<PathBuf>,
) -> eqposet::Result<ExitCode> {
    let CatalogCmd::Emit { id, type_sel, n, x, variant } = cmd;
    // --type selects a printed canonical matrix of the poset
    if let Some(t) = &type_sel {
        let base = id.replace('*', "s");
        let candidates = [format!("{base}-{t}"), base];
        for name in &candidates {
            if catalog::FINITE_TYPE_MATRICES.iter().any(|(n2, _)| n2 == name) {
                let m = catalog::finite_type_corep(tower, name)?;
                let text = print_corep(tower, &m, field);
                print!("{text}");
                write_out(out, &text)?;
                return Ok(ExitCode::SUCCESS);
            }
            if catalog::TABLE2_MATRICES.iter().any(|(n2, _)| n2 == name) {
                let [k64, a255, a25s5] = catalog::table2_coreps(tower)?;
                let m = match name.as_str() {
                    "K6-4" => k64,
                    "A25-5" => a255,
                    _ => a25s5,
                };
                let text = print_corep(tower, &m, field);
                print!("{text}");
                write_out(out, &text)?;
                return Ok(ExitCode::SUCCESS);
            }
        }
        return Err(eqposet::Error::UnknownCatalogId(format!("{id} --type {t}")));
    }
    // poset ids
    if let Ok(p) = catalog::catalog_poset(&id) {
        print!("{}", print_poset(&p));
        write_out(out, &print_poset(&p))?;
        return Ok(ExitCode::SUCCESS);
    }
    // series ids
    let emit = |m: MatrixCorep| -> eqposet::Result<ExitCode> {
        let text = print_corep(tower, &m, field);
        print!("{text}");
        write_out(out, &text)?;
        Ok(ExitCode::SUCCESS)
    };
    match id.as_str() {
        "K6-5" => {
            let n = n.unwrap_or(1);
            return emit(catalog::k6_discrete(tower, n)?);
        }
        "K6-6" => {
            let xm = parse_block(tower, &x, true)?;
            return emit(catalog::k6_series(tower, xm.rows, &xm)?);
        }
        "K7-S" => {
            let xm = parse_block(tower, &x, true)?;
            return emit(catalog::k7_series(tower, xm.rows, &xm)?);
        }
        "K8-S" => {
            let xm = parse_block(tower, &x, false)?;
            let v = match variant.as_deref() {
                Some("char2") => K8Variant::Char2,
                Some("separable") => K8Variant::Separable,
                Some("inseparable") => K8Variant::Inseparable,
                None => {
                    if tower.char() == 2 {
                        K8Variant::Char2
                    } else {
                        K8Variant::Separable
                    }
                }
                Some(other) => {
                    return Err(eqposet::Error::UnknownCatalogId(format!(
                        "K8 variant {other}"
                    )))
                }
            };
            return emit(catalog::k8_series(tower, v, xm.rows, &xm)?);
        }
        _ => {}
    }
    // table 2 matrices
    if catalog::TABLE2_MATRICES.iter().any(|(name, _)| *name == id) {
        let [k64, a255, a25s5] = catalog::table2_coreps(tower)?;
        let m = match id.as_str() {
            "K6-4" => k64,
            "A25-5" => a255,
            _ => a25s5,
        };
        return emit(m);
    }
    // finite-type matrices
    if catalog::FINITE_TYPE_MATRICES.iter().any(|(name, _)| *name == id) {
        return emit(catalog::finite_type_corep(tower, &id)?);
    }
    Err(eqposet::Error::UnknownCatalogId(id))
}

fn resolve_verify_poset(name: &str) -> eqposet::Result<EquippedPoset> {
    if let Ok(p) = catalog::catalog_poset(name) {
        return Ok(p);
    }
    load_poset(&PathBuf::from(name))
}

fn run_verify(cmd: VerifyCmd, tower: &Tower, out: &Option<PathBuf>) -> eqposet::Result<ExitCode> {
    let rep = match cmd {
        VerifyCmd::Tables => verify::verify_tits_tables()?,
        VerifyCmd::Catalog => verify::verify_catalog(tower)?,
        VerifyCmd::TheoremD { poset, bounds, budget } => {
            let p = resolve_verify_poset(&poset)?;
            let dmax = match bounds {
                Some(b) => parse_dim_vector(&p, &b)?,
                None => DimVector::new(2, vec![2; p.n()]),
            };
            verify::verify_theorem_d(tower, &p, &dmax, budget)?
        }
        VerifyCmd::Series { id, n } => verify::verify_series_separation(tower, &id, n)?,
        VerifyCmd::Duality { poset, bounds, budget } => {
            let p = resolve_verify_poset(&poset)?;
            let dmax = match bounds {
                Some(b) => parse_dim_vector(&p, &b)?,
                None => DimVector::new(2, vec![2; p.n()]),
            };
            verify::verify_duality_suite(tower, &p, &dmax, budget)?
        }
    };
    report_exit(&rep, out)
}
