use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use glap_core::analysis::analyze;
use glap_core::families::{build, FamilySpec};
use glap_core::gla::{check_fundamental, check_gla, GradedAlgebra, SymBilinearForm};
use glap_core::io::{read_json, to_json_string, write_json, AlgebraFile, FormFile};
use glap_core::prolongation::{
    conformal_g0, full_prolongation_with, grading_split, ProlongationFile, ProlongationOptions,
    STEP_LIMIT_ENV,
};
use glap_core::roots::{graded_dims, positive_roots, CartanType};
use glap_core::verify::verify_table;
use glap_core::GlaError;

#[derive(Parser)]
#[command(
    name = "glap",
    version,
    about = "Graded Lie algebras with a conformal structure on degree -1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family and write m.json, form.json and (when known) ambient.json.
    Build {
        /// hc, hc-split, hh, hh-split, ho, ho-split, bi, g2, counterexample
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check grading and Jacobi identity, and fundamentality of the negative part.
    Check { path: PathBuf },
    /// Conformal derivations of degree 0.
    Derivations {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        form: PathBuf,
    },
    /// Compute the full prolongation.
    Prolong {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Highest positive degree attempted; GLAP_STEP_LIMIT takes precedence.
        #[arg(long, default_value_t = 64)]
        max_degree: usize,
    },
    /// Structural report of a prolongation file.
    Analyze {
        path: PathBuf,
        /// Form file, required when the prolongation file carries none.
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// Graded dimensions from a root system with crossed nodes.
    Oracle {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        crossed: Vec<usize>,
    },
    /// Reproduce the classification table.
    VerifyTable {
        /// One line per row instead of JSON.
        #[arg(long)]
        summary: bool,
    },
}

enum Failure {
    Check(String),
    Input(GlaError),
    Other(GlaError),
}

impl From<GlaError> for Failure {
    fn from(e: GlaError) -> Self {
        match e {
            GlaError::Parse { .. }
            | GlaError::Io(_)
            | GlaError::InvalidAlgebra(_)
            | GlaError::BadParameters(_)
            | GlaError::UnsupportedType(_)
            | GlaError::DimensionMismatch { .. }
            | GlaError::NotSymmetric
            | GlaError::DegenerateForm
            | GlaError::NonNegativeDegreePresent { .. }
            | GlaError::NotFundamental
            | GlaError::AlgebraMismatch => Failure::Input(e),
            _ => Failure::Other(e),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn print_json(v: &impl serde::Serialize) {
    println!("{}", to_json_string(v));
}

fn read_m(path: &Path) -> Result<GradedAlgebra, Failure> {
    Ok(read_json::<AlgebraFile>(path)?.into_algebra()?)
}

fn read_form(path: &Path, m: &GradedAlgebra) -> Result<SymBilinearForm, Failure> {
    Ok(read_json::<FormFile>(path)?.into_form_for(m)?)
}

fn cmd_build(
    family: &str,
    p: Option<usize>,
    q: Option<usize>,
    l: Option<usize>,
    out: &Path,
) -> CmdResult {
    let spec = FamilySpec::from_cli(family, p, q, l)?;
    let b = build(&spec)?;
    fs::create_dir_all(out).map_err(GlaError::from)?;
    write_json(&out.join("m.json"), &AlgebraFile::from(&b.m))?;
    write_json(&out.join("form.json"), &FormFile::from(&b.form))?;
    let mut files = vec!["m.json", "form.json"];
    if let Some(a) = &b.ambient {
        write_json(&out.join("ambient.json"), &AlgebraFile::from(a))?;
        files.push("ambient.json");
    }
    print_json(&json!({
        "family": spec.to_string(),
        "params": spec,
        "dims": b.m.dims_by_degree(),
        "files": files,
    }));
    Ok(())
}

fn cmd_check(path: &Path) -> CmdResult {
    let text = fs::read_to_string(path).map_err(GlaError::from)?;
    let a = match glap_core::io::from_json_str::<AlgebraFile>(&text) {
        Ok(f) => f.into_algebra()?,
        Err(e) => match glap_core::io::from_json_str::<ProlongationFile>(&text) {
            Ok(f) => f.algebra()?,
            Err(_) => return Err(e.into()),
        },
    };
    let report = check_gla(&a);
    let negative = a.negative_part()?;
    let fundamental = check_fundamental(&negative);
    let (is_fgla, kind) = match &fundamental {
        Ok(f) => (f.is_fgla, Some(f.kind)),
        Err(_) => (false, None),
    };
    print_json(&json!({
        "name": a.name(),
        "grading_ok": report.grading_ok,
        "jacobi_ok": report.jacobi_ok,
        "violations": report.violations,
        "fundamental": is_fgla,
        "kind": kind,
    }));
    if report.is_ok() && is_fgla {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} is not a valid fundamental graded Lie algebra",
            a.name()
        )))
    }
}

fn cmd_derivations(m_path: &Path, form_path: &Path) -> CmdResult {
    let m = read_m(m_path)?;
    let g = read_form(form_path, &m)?;
    let d = conformal_g0(&m, &g)?;
    let split = grading_split(&d)?;
    print_json(&json!({
        "dim": d.dim(),
        "matrices": d.matrices(),
        "eta": d.etas(),
        "characteristic_coords": split.e_coords,
        "eta_of_characteristic": split.eta_e,
        "eta_kernel_basis": split.hat_basis,
    }));
    Ok(())
}

fn cmd_prolong(m_path: &Path, form_path: &Path, out: &Path, max_degree: usize) -> CmdResult {
    let m = read_m(m_path)?;
    let g = read_form(form_path, &m)?;
    let step_limit = std::env::var(STEP_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(max_degree);
    let r = full_prolongation_with(&m, &g, &ProlongationOptions { step_limit })?;
    write_json(out, &r.to_file())?;
    print_json(&json!({
        "name": r.full.name(),
        "dims": r.dims_by_degree(),
        "total_dim": r.total_dim(),
        "step_dims": r.step_dims,
    }));
    Ok(())
}

fn cmd_analyze(path: &Path, form: Option<&Path>) -> CmdResult {
    let file: ProlongationFile = read_json(path)?;
    let full = file.algebra()?;
    let g = match (form, file.form) {
        (Some(p), _) => read_json::<FormFile>(p)?.into_form()?,
        (None, Some(f)) => f.into_form()?,
        (None, None) => {
            return Err(Failure::Input(GlaError::InvalidAlgebra(
                "no form in the file and no --form given".into(),
            )))
        }
    };
    g.validate(&full.negative_part()?)?;
    print_json(&analyze(&full, &g)?);
    Ok(())
}

fn cmd_oracle(t: &str, rank: Option<usize>, crossed: &[usize]) -> CmdResult {
    let t: CartanType = t.parse()?;
    let rank = match (t, rank) {
        (_, Some(r)) => r,
        (CartanType::F4, None) => 4,
        (CartanType::G2, None) => 2,
        (_, None) => {
            return Err(Failure::Input(GlaError::BadParameters(format!(
                "--rank is required for type {t}"
            ))))
        }
    };
    let rs = positive_roots(t, rank)?;
    print_json(&graded_dims(&rs, crossed)?.dims);
    Ok(())
}

fn cmd_verify_table(summary: bool) -> CmdResult {
    let rows = verify_table();
    if summary {
        for r in &rows {
            println!("{}", r.summary_line());
        }
    } else {
        print_json(&rows);
    }
    let failing: Vec<&str> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.family.as_str())
        .collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "failing rows: {}",
            failing.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build {
            family,
            p,
            q,
            l,
            out,
        } => cmd_build(family, *p, *q, *l, out),
        Command::Check { path } => cmd_check(path),
        Command::Derivations { m, form } => cmd_derivations(m, form),
        Command::Prolong {
            m,
            form,
            out,
            max_degree,
        } => cmd_prolong(m, form, out, *max_degree),
        Command::Analyze { path, form } => cmd_analyze(path, form.as_deref()),
        Command::Oracle {
            cartan_type,
            rank,
            crossed,
        } => cmd_oracle(cartan_type, *rank, crossed),
        Command::VerifyTable { summary } => cmd_verify_table(*summary),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
