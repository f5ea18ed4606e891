//! Structural analysis of prolongations: Killing form, simplicity, the
//! degree −1 module and signatures.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::families::CartanTag;
use crate::gla::{check_fundamental, GradedAlgebra, SymBilinearForm};
use crate::linalg::{
    kernel_of_rows, rational_eigensplit, solve_in_span, sparse, RationalMatrix, RowReducer,
    SparseVec,
};
use crate::prolongation::{conformal_g0, DerivationBasis};
use crate::rational::Rational;
use crate::roots::{match_table_row, ModuleClass};

/// `B(x, y) = tr(ad x ∘ ad y)` on the basis.
pub fn killing_form(a: &GradedAlgebra) -> RationalMatrix {
    let n = a.dim();
    // ad[i][l] = [e_i, e_l]
    let ad: Vec<Vec<SparseVec>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|l| a.bracket_basis(i, l)).collect())
        .collect();
    let rows: Vec<Vec<Rational>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Rational::zero();
                    for l in 0..n {
                        for (k, c) in &ad[i][l] {
                            let d = sparse::get(&ad[j][*k], l);
                            if !d.is_zero() {
                                s += &(c * &d);
                            }
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows)
}

pub fn is_semisimple(a: &GradedAlgebra) -> bool {
    killing_form(a).rank() == a.dim()
}

/// An element of degree 0 whose adjoint action is the degree map, if any.
pub fn inner_grading_element(a: &GradedAlgebra) -> Option<SparseVec> {
    let n = a.dim();
    let g0 = a.indices_of_degree(0);
    let flat = |m: &RationalMatrix| -> SparseVec {
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let x = m.get(i, j);
                if !x.is_zero() {
                    v.push((i * n + j, x.clone()));
                }
            }
        }
        v
    };
    let vectors: Vec<SparseVec> = g0.iter().map(|&i| flat(&a.ad_matrix(i))).collect();
    let degrees: Vec<Rational> = a
        .degrees()
        .iter()
        .map(|&d| Rational::from_integer(d as i64))
        .collect();
    let target = flat(&RationalMatrix::diagonal(&degrees));
    let c = solve_in_span(&vectors, &target, n * n)?;
    Some(
        g0.iter()
            .zip(c)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&i, x)| (i, x))
            .collect(),
    )
}

/// True if the basis elements in `gens` generate the whole algebra.
fn generates(a: &GradedAlgebra, gens: &[usize]) -> bool {
    let n = a.dim();
    let mut red = RowReducer::new(n);
    let mut span: Vec<SparseVec> = Vec::new();
    for &g in gens {
        let v = vec![(g, Rational::one())];
        if red.push(v.clone()) {
            span.push(v);
        }
    }
    let mut frontier = span.clone();
    while !frontier.is_empty() && red.rank() < n {
        let mut next = Vec::new();
        for &g in gens {
            for f in &frontier {
                let b = a.bracket_sparse(&[(g, Rational::one())], f);
                if !b.is_empty() && red.push(b.clone()) {
                    next.push(b);
                }
            }
        }
        frontier = next;
    }
    red.rank() == n
}

/// Basis of the centroid: maps commuting with every `ad x`.
///
/// When the grading is inner, only degree-preserving maps are considered,
/// and when the basis elements of degree ±1 generate, only their adjoint
/// actions are imposed.
pub fn centroid(a: &GradedAlgebra) -> Vec<RationalMatrix> {
    let n = a.dim();
    let block_diagonal = inner_grading_element(a).is_some();
    // unknown φ_{tk} (φ e_k has component t)
    let mut col_of = vec![vec![usize::MAX; n]; n];
    let mut entry_of = Vec::new();
    for k in 0..n {
        for t in 0..n {
            if !block_diagonal || a.degree(t) == a.degree(k) {
                col_of[t][k] = entry_of.len();
                entry_of.push((t, k));
            }
        }
    }
    let ncols = entry_of.len();
    let pm1: Vec<usize> = (0..n).filter(|&i| a.degree(i).abs() == 1).collect();
    let with0: Vec<usize> = (0..n).filter(|&i| a.degree(i).abs() <= 1).collect();
    let gens: Vec<usize> = if generates(a, &pm1) {
        pm1
    } else if generates(a, &with0) {
        with0
    } else {
        (0..n).collect()
    };
    let ads: Vec<RationalMatrix> = gens.iter().map(|&g| a.ad_matrix(g)).collect();
    let rows: Vec<SparseVec> = ads
        .par_iter()
        .flat_map_iter(|ad| {
            let mut out = Vec::new();
            // (φ ad − ad φ)_{ab} = Σ_t φ_{at} ad_{tb} − ad_{at} φ_{tb}
            for a_ in 0..n {
                for b in 0..n {
                    let mut acc = sparse::Accumulator::new();
                    for t in 0..n {
                        let x = ad.get(t, b);
                        if !x.is_zero() && col_of[a_][t] != usize::MAX {
                            acc.add(col_of[a_][t], x);
                        }
                        let y = ad.get(a_, t);
                        if !y.is_zero() && col_of[t][b] != usize::MAX {
                            acc.add(col_of[t][b], &-y);
                        }
                    }
                    let r = acc.finish();
                    if !r.is_empty() {
                        out.push(r);
                    }
                }
            }
            out
        })
        .collect();
    kernel_of_rows(ncols, rows)
        .into_iter()
        .map(|v| {
            let mut m = RationalMatrix::zeros(n, n);
            for (c, x) in v {
                let (t, k) = entry_of[c];
                m.set(t, k, x);
            }
            m
        })
        .collect()
}

/// Simplicity decided from the centroid of a semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityReport {
    pub centroid_dim: usize,
    pub simple: bool,
}

pub fn simplicity(a: &GradedAlgebra) -> Result<SimplicityReport> {
    if !is_semisimple(a) {
        return Err(GlaError::NotSemisimple);
    }
    let c = centroid(a);
    let n = a.dim();
    let simple = match c.len() {
        1 => true,
        2 => {
            let id = RationalMatrix::identity(n);
            let j = c
                .iter()
                .find(|m| **m != id.scale(m.get(0, 0)))
                .expect("two independent elements")
                .clone();
            // J² = αI + βJ, then K = J − β/2 satisfies K² = (α + β²/4) I
            let flat = |m: &RationalMatrix| sparse::from_dense(&m.to_rows().concat());
            let sq = j.mul(&j);
            match solve_in_span(&[flat(&id), flat(&j)], &flat(&sq), n * n) {
                Some(ab) => {
                    let disc = &ab[0] + &(&(&ab[1] * &ab[1]) / &Rational::from_integer(4));
                    disc.is_negative()
                }
                None => false,
            }
        }
        _ => false,
    };
    Ok(SimplicityReport {
        centroid_dim: c.len(),
        simple,
    })
}

pub fn is_simple(a: &GradedAlgebra) -> Result<bool> {
    Ok(simplicity(a)?.simple)
}

/// Maps on `g_{-1}` commuting with the degree −1 action of every element of `g0`.
pub fn commutant(g0: &DerivationBasis) -> Vec<RationalMatrix> {
    let d = g0.form().dim();
    let col = |i: usize, j: usize| i * d + j;
    let mut rows = Vec::new();
    for k in 0..g0.dim() {
        let r = g0.block_minus1(k);
        for a in 0..d {
            for b in 0..d {
                let mut acc = sparse::Accumulator::new();
                for t in 0..d {
                    acc.add(col(a, t), r.get(t, b));
                    acc.add(col(t, b), &-r.get(a, t));
                }
                let row = acc.finish();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    kernel_of_rows(d * d, rows)
        .into_iter()
        .map(|v| {
            let mut m = RationalMatrix::zeros(d, d);
            for (c, x) in v {
                m.set(c / d, c % d, x);
            }
            m
        })
        .collect()
}

/// Invariant decomposition `g_{-1} = V1 ⊕ V2`, in local coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSplit {
    pub first: Vec<Vec<Rational>>,
    pub second: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleClassification {
    pub class: ModuleClass,
    pub commutant_dim: usize,
    pub split: Option<ModuleSplit>,
    pub warnings: Vec<String>,
}

fn split_of(m: &RationalMatrix) -> Option<ModuleSplit> {
    let es = rational_eigensplit(m);
    if !es.is_complete(m.rows()) || es.eigenspaces.len() < 2 {
        return None;
    }
    let mut spaces = es.eigenspaces.into_iter().map(|(_, b)| b);
    let first = spaces.next()?;
    let second = spaces.flatten().collect();
    Some(ModuleSplit { first, second })
}

pub fn classify_module(g0: &DerivationBasis) -> ModuleClassification {
    let c = commutant(g0);
    let d = g0.form().dim();
    let mut candidates: Vec<RationalMatrix> = c.clone();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            candidates.push(c[i].add(&c[j]));
        }
    }
    if let Some(split) = candidates.iter().find_map(split_of) {
        return ModuleClassification {
            class: ModuleClass::SIII,
            commutant_dim: c.len(),
            split: Some(split),
            warnings: vec![],
        };
    }
    if !c.is_empty() {
        let mut generic = RationalMatrix::zeros(d, d);
        for (k, m) in c.iter().enumerate() {
            generic = generic.add(&m.scale(&Rational::from_integer(k as i64 + 1)));
        }
        let shift = &generic.trace() / &Rational::from_integer(d as i64);
        let j = generic.sub(&RationalMatrix::identity(d).scale(&shift));
        let sq = j.mul(&j);
        let c0 = -sq.get(0, 0);
        if !j.is_zero() && c0.is_positive() && sq == RationalMatrix::identity(d).scale(&-&c0) {
            return ModuleClassification {
                class: ModuleClass::SII,
                commutant_dim: c.len(),
                split: None,
                warnings: vec![],
            };
        }
    }
    match c.len() {
        1 => ModuleClassification {
            class: ModuleClass::SI,
            commutant_dim: 1,
            split: None,
            warnings: vec![],
        },
        4 => ModuleClassification {
            class: ModuleClass::SI,
            commutant_dim: 4,
            split: None,
            warnings: vec![
                "commutant of dimension 4 accepted as quaternionic without further checks".into(),
            ],
        },
        k => ModuleClassification {
            class: ModuleClass::Unclassified,
            commutant_dim: k,
            split: None,
            warnings: vec![],
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropicSplitReport {
    pub dims: (usize, usize),
    pub pairing_rank: usize,
}

/// Both parts totally isotropic and nondegenerately paired.
pub fn isotropic_split_check(
    g: &SymBilinearForm,
    split: &ModuleSplit,
) -> Result<IsotropicSplitReport> {
    let gram = |u: &[Vec<Rational>], v: &[Vec<Rational>]| -> RationalMatrix {
        RationalMatrix::from_rows(
            u.iter()
                .map(|x| v.iter().map(|y| g.eval(x, y)).collect())
                .collect(),
        )
    };
    if !gram(&split.first, &split.first).is_zero() {
        return Err(GlaError::NotIsotropic(1));
    }
    if !gram(&split.second, &split.second).is_zero() {
        return Err(GlaError::NotIsotropic(2));
    }
    let p = gram(&split.first, &split.second);
    let rank = p.rank();
    if split.first.len() != split.second.len() || rank != split.first.len() {
        return Err(GlaError::DegeneratePairing);
    }
    Ok(IsotropicSplitReport {
        dims: (split.first.len(), split.second.len()),
        pairing_rank: rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBoundReport {
    pub rank: usize,
    pub bound: usize,
    /// Tag elements are independent, commuting, rationally diagonalizable,
    /// degree-preserving derivations.
    pub tag_valid: bool,
    pub holds: bool,
}

fn is_degree_preserving_derivation(m: &GradedAlgebra, d: &RationalMatrix) -> bool {
    let n = m.dim();
    let col = |x: usize| sparse::from_dense(&d.column(x));
    let preserves = (0..n).all(|x| col(x).iter().all(|(t, _)| m.degree(*t) == m.degree(x)));
    preserves
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs =
                    sparse::from_dense(&d.mul_vec(&sparse::to_dense(&m.bracket_basis(i, j), n)));
                let rhs = sparse::add(
                    &m.bracket_sparse(&col(i), &[(j, Rational::one())]),
                    &m.bracket_sparse(&[(i, Rational::one())], &col(j)),
                );
                lhs == rhs
            })
        })
}

/// Size of the tagged diagonal subspace against `min(r, s) + 1`.
pub fn rank_bound_check_split(
    m: &GradedAlgebra,
    tag: Option<&CartanTag>,
    signature: (usize, usize),
) -> Result<RankBoundReport> {
    let tag = tag.ok_or(GlaError::NoCartanTag)?;
    let ds = &tag.derivations;
    let n = m.dim();
    let derivations = ds
        .iter()
        .all(|d| d.rows() == n && d.cols() == n && is_degree_preserving_derivation(m, d));
    let commuting = ds
        .iter()
        .enumerate()
        .all(|(i, a)| ds[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)));
    let diagonalizable = ds.iter().all(|d| rational_eigensplit(d).is_complete(n));
    let mut red = RowReducer::new(n * n);
    let independent = ds
        .iter()
        .all(|d| red.push(sparse::from_dense(&d.to_rows().concat())));
    let tag_valid = derivations && commuting && diagonalizable && independent;
    let bound = signature.0.min(signature.1) + 1;
    Ok(RankBoundReport {
        rank: ds.len(),
        bound,
        tag_valid,
        holds: tag_valid && ds.len() <= bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTransport {
    pub phi: RationalMatrix,
    /// `Some(λ)` iff `g2 = λ g1`.
    pub proportional: Option<Rational>,
}

/// `φ = g1♯ ∘ g2♭`.
pub fn form_transport(g1: &SymBilinearForm, g2: &SymBilinearForm) -> Result<FormTransport> {
    if g1.dim() != g2.dim() || g1.indices() != g2.indices() {
        return Err(GlaError::DimensionMismatch {
            expected: g1.dim(),
            got: g2.dim(),
        });
    }
    let inv = g1.matrix().inverse().ok_or(GlaError::DegenerateForm)?;
    let phi = inv.mul(g2.matrix());
    let n = phi.rows();
    let lambda = if n == 0 {
        None
    } else {
        Some(phi.get(0, 0).clone())
    };
    let proportional = lambda.filter(|l| phi == RationalMatrix::identity(n).scale(l));
    Ok(FormTransport { phi, proportional })
}

/// The report printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub dims: BTreeMap<i32, usize>,
    pub kind: i32,
    pub semisimple: bool,
    pub simple: bool,
    pub signature: (usize, usize),
    pub module_class: ModuleClass,
    pub matched_table_row: Option<String>,
    pub centroid_dim: usize,
}

/// Full analysis of an algebra with nonnegative part and the form on its
/// degree −1 part.
pub fn analyze(full: &GradedAlgebra, g: &SymBilinearForm) -> Result<AnalysisReport> {
    let m = full.negative_part()?;
    let kind = check_fundamental(&m)?.kind;
    let semisimple = is_semisimple(full);
    let (centroid_dim, simple) = if semisimple {
        let s = simplicity(full)?;
        (s.centroid_dim, s.simple)
    } else {
        (centroid(full).len(), false)
    };
    let sig = g.signature();
    let signature = (sig.positive, sig.negative);
    let module_class = classify_module(&conformal_g0(&m, g)?).class;
    let dims = full.dims_by_degree();
    let matched_table_row = if simple {
        match_table_row(&dims, signature, module_class).map(|s| s.to_string())
    } else {
        None
    };
    Ok(AnalysisReport {
        dims,
        kind,
        semisimple,
        simple,
        signature,
        module_class,
        matched_table_row,
        centroid_dim,
    })
}
