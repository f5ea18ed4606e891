//! Graded Lie algebras given by structure constants.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::linalg::{
    signature_of_symmetric, sparse, Inertia, RationalMatrix, RowReducer, SparseVec,
};
use crate::rational::Rational;

/// A finite-dimensional graded algebra with an antisymmetric bracket.
///
/// Only `[e_i, e_j]` with `i < j` is stored; `[e_j, e_i]` is its negative and
/// `[e_i, e_i] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    name: String,
    labels: Vec<String>,
    degrees: Vec<i32>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
}

impl GradedAlgebra {
    pub fn new(name: impl Into<String>, labels: Vec<String>, degrees: Vec<i32>) -> Result<Self> {
        if labels.len() != degrees.len() {
            return Err(GlaError::DimensionMismatch {
                expected: degrees.len(),
                got: labels.len(),
            });
        }
        Ok(Self {
            name: name.into(),
            labels,
            degrees,
            brackets: BTreeMap::new(),
        })
    }

    /// Sets `[e_i, e_j] = value` (and hence `[e_j, e_i] = -value`).
    pub fn set_bracket(&mut self, i: usize, j: usize, value: SparseVec) -> Result<()> {
        let n = self.dim();
        if i >= n || j >= n || value.iter().any(|(k, _)| *k >= n) {
            return Err(GlaError::InvalidAlgebra(format!(
                "bracket index out of range in [{i},{j}]"
            )));
        }
        if i == j {
            if value.is_empty() {
                return Ok(());
            }
            return Err(GlaError::InvalidAlgebra(format!("[e{i},e{i}] must vanish")));
        }
        let value: SparseVec = value.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), sparse::scale(&value, &Rational::from_integer(-1)))
        };
        if value.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    /// Stored brackets `(i, j) ↦ [e_i, e_j]` with `i < j`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.brackets
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| sparse::scale(v, &Rational::from_integer(-1)))
                .unwrap_or_default(),
        }
    }

    pub fn bracket_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut acc = sparse::Accumulator::new();
        for (i, a) in x {
            for (j, b) in y {
                if i == j {
                    continue;
                }
                let v = self.bracket_basis(*i, *j);
                if !v.is_empty() {
                    acc.add_scaled(&(a * b), &v);
                }
            }
        }
        acc.finish()
    }

    /// `[x, y]` for dense coordinate vectors.
    pub fn bracket_eval(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(GlaError::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let r = self.bracket_sparse(&sparse::from_dense(x), &sparse::from_dense(y));
        Ok(sparse::to_dense(&r, n))
    }

    pub fn dims_by_degree(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.degrees {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    pub fn indices_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Matrix of `ad(e_i)`; column `j` holds `[e_i, e_j]`.
    pub fn ad_matrix(&self, i: usize) -> RationalMatrix {
        let n = self.dim();
        let mut m = RationalMatrix::zeros(n, n);
        for j in 0..n {
            for (k, v) in self.bracket_basis(i, j) {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Subalgebra spanned by the basis elements of negative degree, reindexed
    /// in their original order. Fails if the span is not closed.
    pub fn negative_part(&self) -> Result<GradedAlgebra> {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] < 0).collect();
        self.sub_by_indices(&keep, format!("{}/negative", self.name))
    }

    /// Span of the given basis elements as an algebra; fails if not closed.
    pub fn sub_by_indices(&self, keep: &[usize], name: String) -> Result<GradedAlgebra> {
        let mut new_index = vec![usize::MAX; self.dim()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let mut out = GradedAlgebra::new(
            name,
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            keep.iter().map(|&i| self.degrees[i]).collect(),
        )?;
        for (&(i, j), v) in &self.brackets {
            if new_index[i] == usize::MAX || new_index[j] == usize::MAX {
                continue;
            }
            let mut mapped = Vec::with_capacity(v.len());
            for (k, c) in v {
                if new_index[*k] == usize::MAX {
                    return Err(GlaError::InvalidAlgebra(
                        "selected subspace is not a subalgebra".into(),
                    ));
                }
                mapped.push((new_index[*k], c.clone()));
            }
            mapped.sort_by_key(|e| e.0);
            out.set_bracket(new_index[i], new_index[j], mapped)?;
        }
        Ok(out)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().max()
    }
}

/// A single failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `[e_i, e_j]` has a component along `e_k` of the wrong degree.
    Grading { i: usize, j: usize, k: usize },
    /// The Jacobi sum on `(e_i, e_j, e_k)` is nonzero.
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlaReport {
    pub grading_ok: bool,
    pub jacobi_ok: bool,
    pub violations: Vec<Violation>,
}

impl GlaReport {
    pub fn is_ok(&self) -> bool {
        self.grading_ok && self.jacobi_ok
    }
}

fn jacobi_sum(a: &GradedAlgebra, i: usize, j: usize, k: usize) -> SparseVec {
    let mut acc = sparse::Accumulator::new();
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        let xy = a.bracket_basis(x, y);
        for (t, c) in &xy {
            acc.add_scaled(c, &a.bracket_basis(*t, z));
        }
    }
    acc.finish()
}

/// Exhaustive grading and Jacobi check over basis pairs and triples.
pub fn check_gla(a: &GradedAlgebra) -> GlaReport {
    let mut violations = Vec::new();
    for (&(i, j), v) in a.brackets() {
        for (k, _) in v {
            if a.degree(*k) != a.degree(i) + a.degree(j) {
                violations.push(Violation::Grading { i, j, k: *k });
            }
        }
    }
    let grading_ok = violations.is_empty();
    let n = a.dim();
    let jacobi: Vec<Violation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for j in i + 1..n {
                for k in j + 1..n {
                    if !jacobi_sum(a, i, j, k).is_empty() {
                        out.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
            out
        })
        .collect();
    let jacobi_ok = jacobi.is_empty();
    violations.extend(jacobi);
    GlaReport {
        grading_ok,
        jacobi_ok,
        violations,
    }
}

/// Fundamentality and kind of a negatively graded algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fundamentality {
    pub is_fgla: bool,
    pub kind: i32,
}

/// `is_fgla` iff `g_{-1} ≠ 0` and `g_p = [g_{-1}, g_{p+1}]` for all `p ≤ -2`.
pub fn check_fundamental(a: &GradedAlgebra) -> Result<Fundamentality> {
    if let Some(index) = (0..a.dim()).find(|&i| a.degree(i) >= 0) {
        return Err(GlaError::NonNegativeDegreePresent {
            index,
            degree: a.degree(index),
        });
    }
    let dims = a.dims_by_degree();
    let kind = dims.keys().next().map_or(0, |d| -d);
    let minus_one = a.indices_of_degree(-1);
    let mut is_fgla = !minus_one.is_empty();
    let mut p = -2;
    while is_fgla && p >= -kind {
        let target = a.indices_of_degree(p);
        let prev = a.indices_of_degree(p + 1);
        let mut red = RowReducer::new(a.dim());
        for &x in &minus_one {
            for &y in &prev {
                let v = a.bracket_basis(x, y);
                if !v.is_empty() {
                    red.push(v);
                }
            }
        }
        is_fgla = red.rank() == target.len();
        p -= 1;
    }
    Ok(Fundamentality { is_fgla, kind })
}

/// A symmetric bilinear form on the degree −1 subspace of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBilinearForm {
    algebra: String,
    indices: Vec<usize>,
    matrix: RationalMatrix,
}

impl SymBilinearForm {
    /// Validates symmetry, shape against `g_{-1}` of `a` and nondegeneracy.
    pub fn new(a: &GradedAlgebra, matrix: RationalMatrix) -> Result<Self> {
        let form = Self {
            algebra: a.name().to_string(),
            indices: a.indices_of_degree(-1),
            matrix,
        };
        form.validate(a)?;
        Ok(form)
    }

    /// Unvalidated constructor used by deserialization.
    pub fn from_parts(algebra: String, indices: Vec<usize>, matrix: RationalMatrix) -> Self {
        Self {
            algebra,
            indices,
            matrix,
        }
    }

    pub fn validate(&self, a: &GradedAlgebra) -> Result<()> {
        let expected = a.indices_of_degree(-1);
        if self.indices != expected {
            return Err(GlaError::InvalidAlgebra(format!(
                "form indices {:?} do not match degree -1 basis {:?}",
                self.indices, expected
            )));
        }
        if self.matrix.rows() != expected.len() || self.matrix.cols() != expected.len() {
            return Err(GlaError::DimensionMismatch {
                expected: expected.len(),
                got: self.matrix.rows(),
            });
        }
        if !self.matrix.is_symmetric() {
            return Err(GlaError::NotSymmetric);
        }
        if self.matrix.rank() != expected.len() {
            return Err(GlaError::DegenerateForm);
        }
        Ok(())
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    /// `λ g`.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        Self {
            algebra: self.algebra.clone(),
            indices: self.indices.clone(),
            matrix: self.matrix.scale(lambda),
        }
    }

    /// Value on local coordinates of `g_{-1}`.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let my = self.matrix.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn signature(&self) -> Inertia {
        signature_of_symmetric(&self.matrix).expect("form matrices are symmetric")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// Heisenberg algebra: X, Y in degree -1, Z in degree -2, [X, Y] = Z.
    pub(crate) fn heisenberg() -> GradedAlgebra {
        let mut h = GradedAlgebra::new(
            "h3",
            vec!["X[-1]".into(), "Y[-1]".into(), "Z[-2]".into()],
            vec![-1, -1, -2],
        )
        .unwrap();
        h.set_bracket(0, 1, vec![(2, q(1))]).unwrap();
        h
    }

    #[test]
    fn heisenberg_brackets() {
        let h = heisenberg();
        let x = [q(1), q(0), q(0)];
        let y = [q(0), q(1), q(0)];
        assert_eq!(h.bracket_eval(&x, &y).unwrap(), vec![q(0), q(0), q(1)]);
        let s = [q(1), q(1), q(0)];
        let d = [q(1), q(-1), q(0)];
        assert_eq!(h.bracket_eval(&s, &d).unwrap(), vec![q(0), q(0), q(-2)]);
        let r = [Rational::new(3, 7), q(-2), q(5)];
        assert!(h
            .bracket_eval(&r, &r)
            .unwrap()
            .iter()
            .all(Rational::is_zero));
        assert!(matches!(
            h.bracket_eval(&[q(1)], &y),
            Err(GlaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn heisenberg_is_fundamental_of_kind_two() {
        let h = heisenberg();
        assert!(check_gla(&h).is_ok());
        assert_eq!(
            check_fundamental(&h).unwrap(),
            Fundamentality {
                is_fgla: true,
                kind: 2
            }
        );
        assert_eq!(h.dims_by_degree(), BTreeMap::from([(-2, 1), (-1, 2)]));
    }

    #[test]
    fn grading_violation_detected() {
        let mut h = heisenberg();
        h.set_bracket(0, 2, vec![(0, q(1))]).unwrap();
        let rep = check_gla(&h);
        assert!(!rep.grading_ok);
        assert!(rep
            .violations
            .contains(&Violation::Grading { i: 0, j: 2, k: 0 }));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [a,b]=c, [a,c]=d, [b,d]=a
        let mut a = GradedAlgebra::new(
            "bad",
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![0, 0, 0, 0],
        )
        .unwrap();
        a.set_bracket(0, 1, vec![(2, q(1))]).unwrap();
        a.set_bracket(0, 2, vec![(3, q(1))]).unwrap();
        a.set_bracket(1, 3, vec![(0, q(1))]).unwrap();
        let rep = check_gla(&a);
        assert!(rep.grading_ok);
        assert!(!rep.jacobi_ok);
        assert!(rep
            .violations
            .contains(&Violation::Jacobi { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn abelian_is_not_fundamental() {
        let a = GradedAlgebra::new("ab", vec!["x".into(), "z".into()], vec![-1, -2]).unwrap();
        assert_eq!(
            check_fundamental(&a).unwrap(),
            Fundamentality {
                is_fgla: false,
                kind: 2
            }
        );
    }

    #[test]
    fn nonnegative_degree_rejected() {
        let a = GradedAlgebra::new("g", vec!["x".into(), "e".into()], vec![-1, 0]).unwrap();
        assert!(matches!(
            check_fundamental(&a),
            Err(GlaError::NonNegativeDegreePresent {
                index: 1,
                degree: 0
            })
        ));
    }

    #[test]
    fn form_validation() {
        let h = heisenberg();
        assert!(SymBilinearForm::new(&h, RationalMatrix::identity(2)).is_ok());
        let degenerate = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            SymBilinearForm::new(&h, degenerate),
            Err(GlaError::DegenerateForm)
        ));
        let asym = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert!(matches!(
            SymBilinearForm::new(&h, asym),
            Err(GlaError::NotSymmetric)
        ));
        assert!(SymBilinearForm::new(&h, RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn set_bracket_antisymmetry() {
        let mut h = heisenberg();
        h.set_bracket(1, 0, vec![(2, q(3))]).unwrap();
        assert_eq!(h.bracket_basis(0, 1), vec![(2, q(-3))]);
        assert!(h.set_bracket(0, 0, vec![(2, q(1))]).is_err());
    }
}
