//! Semidirect product of `sl(3, ℝ)` (graded by blocks `(1, 2)`) with a
//! regraded abelian copy of its adjoint module.

use crate::composition::CompositionAlgebra;
use crate::error::Result;
use crate::families::matrix::{build_matrix_algebra, MatrixSpec, TraceCondition};
use crate::families::{form_from, FamilyBuild, FamilySpec};
use crate::gla::GradedAlgebra;
use crate::rational::Rational;

/// Copies of `l` sit in degree `deg − 2`.
const SHIFT: i32 = 2;

pub fn build_counterexample() -> Result<FamilyBuild> {
    let spec = FamilySpec::Counterexample;
    let l = build_matrix_algebra(&MatrixSpec {
        name: "sl3".into(),
        algebra: CompositionAlgebra::real(),
        block_sizes: vec![1, 2],
        form: None,
        trace: TraceCondition::Full,
    })?
    .algebra;
    let ln = l.dim();
    let l_minus: Vec<usize> = l.indices_of_degree(-1);
    let copy_deg = |i: usize| l.degree(i) - SHIFT;

    // basis: copies and l_{-1}, sorted by degree; l_{-1} before copies of l_1
    let mut entries: Vec<(i32, usize, bool)> = (0..ln).map(|i| (copy_deg(i), i, true)).collect();
    entries.extend(l_minus.iter().map(|&i| (-1, i, false)));
    entries.sort_by_key(|&(d, i, is_copy)| (d, is_copy, i));
    let index_of = |i: usize, is_copy: bool| {
        entries
            .iter()
            .position(|&(_, j, c)| j == i && c == is_copy)
            .unwrap()
    };

    let labels = entries
        .iter()
        .map(|&(d, i, c)| {
            let base = l.labels()[i].split('[').next().unwrap().to_string();
            if c {
                format!("S({base})[{d}]")
            } else {
                format!("{base}[{d}]")
            }
        })
        .collect();
    let mut m = GradedAlgebra::new(
        spec.to_string(),
        labels,
        entries.iter().map(|e| e.0).collect(),
    )?;
    for &x in &l_minus {
        for y in 0..ln {
            let v: Vec<(usize, Rational)> = l
                .bracket_basis(x, y)
                .into_iter()
                .map(|(k, c)| (index_of(k, true), c))
                .collect();
            m.set_bracket(index_of(x, false), index_of(y, true), v)?;
        }
        for &y in &l_minus {
            if x < y {
                debug_assert!(l.bracket_basis(x, y).is_empty());
            }
        }
    }

    // pair l_{-1} with the copy of l_1 through the Killing form of l
    let ads: Vec<_> = (0..ln).map(|i| l.ad_matrix(i)).collect();
    let killing = |a: usize, b: usize| ads[a].mul(&ads[b]).trace();
    let form = form_from(&m, |x, y| {
        let (_, i, ci) = entries[x];
        let (_, j, cj) = entries[y];
        if ci == cj {
            Rational::zero()
        } else {
            killing(i, j)
        }
    })?;
    Ok(FamilyBuild {
        spec,
        m,
        form,
        ambient: None,
        cartan: None,
    })
}
