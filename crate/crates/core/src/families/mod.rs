//! Builders for the negative parts, forms and (where available) ambient
//! graded algebras of the families handled by this crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::AlgebraTag;
use crate::error::{GlaError, Result};
use crate::gla::{GradedAlgebra, SymBilinearForm};
use crate::linalg::{kernel_of_rows, sparse, RationalMatrix, SparseVec};
use crate::rational::Rational;

mod bi;
mod counterexample;
mod g2;
mod hk;
pub mod matrix;
mod octonionic;

pub use bi::build_bi;
pub use counterexample::build_counterexample;
pub use g2::{build_g2_example, invariant_symplectic_form};
pub use hk::build_hk;
pub use octonionic::build_octonionic;

/// Largest matrix size `2p + q` accepted for the matrix families.
pub const MAX_MATRIX_SIZE: usize = 8;
/// Largest `l` accepted for the orthogonal family.
pub const MAX_BI_RANK: usize = 6;

/// A family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Hk {
        algebra: AlgebraTag,
        p: usize,
        q: usize,
    },
    Bi {
        l: usize,
    },
    Octonionic {
        split: bool,
    },
    G2,
    Counterexample,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Hk { algebra, p, q } => {
                if !matches!(
                    algebra,
                    AlgebraTag::Complex
                        | AlgebraTag::SplitComplex
                        | AlgebraTag::Quaternion
                        | AlgebraTag::SplitQuaternion
                ) {
                    return Err(GlaError::BadParameters(format!(
                        "matrix families take C, C', H or H'; got {algebra}"
                    )));
                }
                if p < 1 {
                    return Err(GlaError::BadParameters(format!(
                        "p ≥ 1 required, got p = {p}"
                    )));
                }
                let n = 2 * p + q;
                if n < 3 {
                    return Err(GlaError::BadParameters(format!(
                        "2p + q ≥ 3 required, got {n}"
                    )));
                }
                if n > MAX_MATRIX_SIZE {
                    return Err(GlaError::BadParameters(format!(
                        "2p + q ≤ {MAX_MATRIX_SIZE} required, got {n}"
                    )));
                }
                Ok(())
            }
            FamilySpec::Bi { l } => {
                if l < 2 {
                    return Err(GlaError::BadParameters(format!(
                        "l ≥ 2 required, got l = {l}"
                    )));
                }
                if l > MAX_BI_RANK {
                    return Err(GlaError::BadParameters(format!(
                        "l ≤ {MAX_BI_RANK} required, got l = {l}"
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Parses a CLI family tag with optional parameters.
    pub fn from_cli(
        tag: &str,
        p: Option<usize>,
        q: Option<usize>,
        l: Option<usize>,
    ) -> Result<Self> {
        let hk = |algebra| -> Result<FamilySpec> {
            let p =
                p.ok_or_else(|| GlaError::BadParameters(format!("--p is required for {tag}")))?;
            let q =
                q.ok_or_else(|| GlaError::BadParameters(format!("--q is required for {tag}")))?;
            Ok(FamilySpec::Hk { algebra, p, q })
        };
        let spec = match tag {
            "hc" => hk(AlgebraTag::Complex)?,
            "hc-split" => hk(AlgebraTag::SplitComplex)?,
            "hh" => hk(AlgebraTag::Quaternion)?,
            "hh-split" => hk(AlgebraTag::SplitQuaternion)?,
            "ho" => FamilySpec::Octonionic { split: false },
            "ho-split" => FamilySpec::Octonionic { split: true },
            "bi" => FamilySpec::Bi {
                l: l.ok_or_else(|| GlaError::BadParameters("--l is required for bi".into()))?,
            },
            "g2" => FamilySpec::G2,
            "counterexample" => FamilySpec::Counterexample,
            other => return Err(GlaError::BadParameters(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn cli_tag(&self) -> &'static str {
        match self {
            FamilySpec::Hk {
                algebra: AlgebraTag::Complex,
                ..
            } => "hc",
            FamilySpec::Hk {
                algebra: AlgebraTag::SplitComplex,
                ..
            } => "hc-split",
            FamilySpec::Hk {
                algebra: AlgebraTag::Quaternion,
                ..
            } => "hh",
            FamilySpec::Hk { .. } => "hh-split",
            FamilySpec::Octonionic { split: false } => "ho",
            FamilySpec::Octonionic { split: true } => "ho-split",
            FamilySpec::Bi { .. } => "bi",
            FamilySpec::G2 => "g2",
            FamilySpec::Counterexample => "counterexample",
        }
    }

    /// Whether the family is one of the split real forms carrying a diagonal
    /// Cartan tag.
    pub fn is_split(&self) -> bool {
        match self {
            FamilySpec::Hk { algebra, .. } => algebra.is_split(),
            FamilySpec::Bi { .. } | FamilySpec::G2 => true,
            _ => false,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Hk { algebra, p, q } => write!(f, "(H{algebra}){p},{q}"),
            FamilySpec::Bi { l } => write!(f, "(BI){l}"),
            FamilySpec::Octonionic { split: false } => f.write_str("(HO)"),
            FamilySpec::Octonionic { split: true } => f.write_str("(HO')"),
            FamilySpec::G2 => f.write_str("(G)"),
            FamilySpec::Counterexample => f.write_str("counterexample"),
        }
    }
}

/// Degree-0 derivations of the negative part spanning a diagonal subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanTag {
    pub derivations: Vec<RationalMatrix>,
}

/// Output of a family builder.
#[derive(Clone, Debug)]
pub struct FamilyBuild {
    pub spec: FamilySpec,
    pub m: GradedAlgebra,
    pub form: SymBilinearForm,
    pub ambient: Option<GradedAlgebra>,
    pub cartan: Option<CartanTag>,
}

pub fn build(spec: &FamilySpec) -> Result<FamilyBuild> {
    spec.validate()?;
    match *spec {
        FamilySpec::Hk { algebra, p, q } => build_hk(algebra, p, q),
        FamilySpec::Bi { l } => build_bi(l),
        FamilySpec::Octonionic { split } => build_octonionic(split),
        FamilySpec::G2 => build_g2_example(),
        FamilySpec::Counterexample => build_counterexample(),
    }
}

/// `ad(t)` restricted to the first `dim_m` basis elements, which must span
/// the negative part and be preserved by `t`.
pub(crate) fn restricted_ad(
    ambient: &GradedAlgebra,
    t: &[(usize, Rational)],
    dim_m: usize,
) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(dim_m, dim_m);
    for x in 0..dim_m {
        for (k, v) in ambient.bracket_sparse(t, &[(x, Rational::one())]) {
            assert!(k < dim_m, "restricted map leaves the negative part");
            out.set(k, x, v);
        }
    }
    out
}

/// Degree-0 elements of a matrix algebra supported on the diagonal with
/// components in `allowed`, as derivations of the negative part.
pub(crate) fn diagonal_cartan(
    ma: &matrix::MatrixAlgebra,
    allowed: &[usize],
    dim_m: usize,
) -> CartanTag {
    let g0: Vec<usize> = ma.algebra.indices_of_degree(0);
    let total = ma.n * ma.n * ma.k;
    let mut bad_rows: Vec<sparse::Accumulator> =
        (0..total).map(|_| sparse::Accumulator::new()).collect();
    for (slot, &e) in g0.iter().enumerate() {
        for (idx, v) in &ma.elements[e] {
            let (i, j, c) = ma.decode(*idx);
            if i != j || !allowed.contains(&c) {
                bad_rows[*idx].add(slot, v);
            }
        }
    }
    let kernel = kernel_of_rows(g0.len(), bad_rows.into_iter().map(|a| a.finish()));
    let derivations = kernel
        .iter()
        .map(|v| {
            let t: SparseVec = v.iter().map(|(slot, x)| (g0[*slot], x.clone())).collect();
            restricted_ad(&ma.algebra, &t, dim_m)
        })
        .collect();
    CartanTag { derivations }
}

/// Form on `g_{-1}` from a function of two basis indices.
pub(crate) fn form_from(
    m: &GradedAlgebra,
    f: impl Fn(usize, usize) -> Rational,
) -> Result<SymBilinearForm> {
    let idx = m.indices_of_degree(-1);
    let mut s = RationalMatrix::zeros(idx.len(), idx.len());
    for (a, &x) in idx.iter().enumerate() {
        for (b, &y) in idx.iter().enumerate() {
            s.set(a, b, f(x, y));
        }
    }
    SymBilinearForm::new(m, s)
}
