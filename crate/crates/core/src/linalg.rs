//! Exact linear algebra over the rationals.
//!
//! Everything here is built on one primitive, [`RowReducer`], an incremental
//! sparse row-echelon accumulator. The reduced row echelon form of a matrix is
//! unique, so kernel bases extracted from it (free variable set to 1, other
//! free variables 0) are canonical whatever order rows were fed in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::rational::{big_gcd, big_lcm, Rational};

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Operations on [`SparseVec`].
pub mod sparse {
    use super::SparseVec;
    use crate::rational::Rational;
    use std::collections::BTreeMap;

    /// `a + f * b`.
    pub fn axpy(a: &[(usize, Rational)], f: &Rational, b: &[(usize, Rational)]) -> SparseVec {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, f * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(f * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    pub fn add(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
        axpy(a, &Rational::one(), b)
    }

    pub fn sub(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
        axpy(a, &Rational::from_integer(-1), b)
    }

    pub fn scale(a: &[(usize, Rational)], f: &Rational) -> SparseVec {
        if f.is_zero() {
            return Vec::new();
        }
        a.iter().map(|(i, v)| (*i, v * f)).collect()
    }

    pub fn get(a: &[(usize, Rational)], idx: usize) -> Rational {
        match a.binary_search_by_key(&idx, |(i, _)| *i) {
            Ok(p) => a[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn to_dense(a: &[(usize, Rational)], n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, v) in a {
            out[*i] = v.clone();
        }
        out
    }

    pub fn from_dense(v: &[Rational]) -> SparseVec {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect()
    }

    /// Accumulator for building sparse vectors out of order.
    #[derive(Default, Debug, Clone)]
    pub struct Accumulator(BTreeMap<usize, Rational>);

    impl Accumulator {
        pub fn new() -> Self {
            Self(BTreeMap::new())
        }

        pub fn add(&mut self, idx: usize, v: &Rational) {
            if v.is_zero() {
                return;
            }
            let e = self.0.entry(idx).or_default();
            *e += v;
        }

        pub fn add_scaled(&mut self, f: &Rational, vec: &[(usize, Rational)]) {
            if f.is_zero() {
                return;
            }
            for (i, v) in vec {
                self.add(*i, &(f * v));
            }
        }

        pub fn is_empty(&self) -> bool {
            self.0.values().all(|v| v.is_zero())
        }

        pub fn finish(self) -> SparseVec {
            self.0.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn scale(&self, f: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Rows as sparse vectors.
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows)
            .map(|i| sparse::from_dense(self.row(i)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for r in self.sparse_rows() {
            red.push(r);
        }
        red.rank()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut red = RowReducer::new(2 * n);
        for i in 0..n {
            let mut row = sparse::from_dense(self.row(i));
            row.push((n + i, Rational::one()));
            red.push(row);
        }
        let rref = red.into_rref();
        if rref.pivots.len() != n || rref.pivots.last().is_some_and(|&p| p >= n) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            for (c, v) in row {
                if *c >= n {
                    inv.set(p, c - n, v.clone());
                }
            }
        }
        Some(inv)
    }
}

/// Incremental sparse Gaussian elimination.
///
/// Stored rows are in echelon form with leading coefficient 1; each column has
/// at most one stored row leading there.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows and returns the remainder.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut pos = 0;
        while pos < row.len() {
            let c = row[pos].0;
            match self.pivot_row[c] {
                Some(p) => {
                    let f = -&row[pos].1;
                    let tail = sparse::axpy(&row[pos..], &f, &self.rows[p]);
                    row.truncate(pos);
                    row.extend(tail);
                }
                None => pos += 1,
            }
        }
        row
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn push(&mut self, row: SparseVec) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let rem = self.reduce(row);
        if rem.is_empty() {
            return false;
        }
        let lead = rem[0].0;
        let inv = rem[0].1.recip();
        let normalized = if inv.is_one() {
            rem
        } else {
            sparse::scale(&rem, &inv)
        };
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(normalized);
        true
    }

    /// True if `row` lies in the span of the pushed rows.
    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Finishes elimination into reduced row echelon form.
    pub fn into_rref(self) -> Rref {
        let RowReducer {
            ncols,
            rows,
            pivot_row,
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| rows[r].first().map(|e| e.0).unwrap_or(usize::MAX));
        let mut reduced: Vec<Option<SparseVec>> = vec![None; rows.len()];
        for &r in order.iter().rev() {
            let row = &rows[r];
            let mut acc = vec![row[0].clone()];
            let mut out = row[1..].to_vec();
            // every other pivot column in `out` is cleared using already reduced rows
            let pivots_here: Vec<(usize, Rational)> = out
                .iter()
                .filter(|(c, _)| pivot_row[*c].is_some())
                .cloned()
                .collect();
            for (c, v) in pivots_here {
                let p = pivot_row[c].unwrap();
                let prow = reduced[p].as_ref().expect("higher pivots reduced first");
                out = sparse::axpy(&out, &-&v, prow);
            }
            acc.extend(out);
            reduced[r] = Some(acc);
        }
        let mut rows: Vec<SparseVec> = order
            .into_iter()
            .map(|r| reduced[r].take().unwrap())
            .collect();
        rows.retain(|r| !r.is_empty());
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free = (0..ncols).filter(|c| !is_pivot[*c]).collect();
        Rref {
            ncols,
            pivots,
            rows,
            free,
        }
    }
}

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    /// Leading column of each row, ascending.
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
    /// Non-pivot columns, ascending.
    pub free: Vec<usize>,
}

impl Rref {
    /// Canonical kernel basis: one vector per free column, that column set to 1.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut pos_of_free = vec![usize::MAX; self.ncols];
        for (k, &f) in self.free.iter().enumerate() {
            pos_of_free[f] = k;
        }
        let mut acc: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.free.len()];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in &row[1..] {
                let k = pos_of_free[*c];
                debug_assert!(k != usize::MAX, "RREF row has entry in a pivot column");
                acc[k].push((p, -v));
            }
        }
        acc.into_iter()
            .zip(&self.free)
            .map(|(mut v, &f)| {
                v.push((f, Rational::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

/// Kernel of a system given by sparse rows over `ncols` unknowns.
pub fn kernel_of_rows<I: IntoIterator<Item = SparseVec>>(ncols: usize, rows: I) -> Vec<SparseVec> {
    let mut red = RowReducer::new(ncols);
    for r in rows {
        if !r.is_empty() {
            red.push(r);
        }
    }
    red.into_rref().kernel_basis()
}

/// Basis of `{v : Mv = 0}` in canonical RREF form.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    kernel_of_rows(m.cols(), m.sparse_rows())
        .iter()
        .map(|v| sparse::to_dense(v, m.cols()))
        .collect()
}

/// Coordinates of `target` in the span of `vectors` (the unique solution when
/// the vectors are independent), or `None` if `target` is outside the span.
pub fn solve_in_span(
    vectors: &[SparseVec],
    target: &SparseVec,
    dim: usize,
) -> Option<Vec<Rational>> {
    let k = vectors.len();
    // rows indexed by coordinate, columns = coefficients + rhs
    let mut cols: Vec<sparse::Accumulator> = (0..dim).map(|_| sparse::Accumulator::new()).collect();
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v {
            cols[*i].add(j, x);
        }
    }
    for (i, x) in target {
        cols[*i].add(k, x);
    }
    let mut red = RowReducer::new(k + 1);
    for c in cols {
        let row = c.finish();
        if !row.is_empty() {
            red.push(row);
        }
    }
    let rref = red.into_rref();
    if rref.pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        sol[p] = sparse::get(row, k);
    }
    Some(sol)
}

/// Inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// `(#positive, #negative, #zero)` after exact congruence diagonalization.
pub fn signature_of_symmetric(s: &RationalMatrix) -> Result<Inertia> {
    if !s.is_symmetric() {
        return Err(GlaError::NotSymmetric);
    }
    let n = s.rows();
    let mut a: Vec<Vec<Rational>> = s.to_rows();
    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                // row_i += row_j, col_i += col_j; new a_ii = 2 a_ij
                for c in 0..n {
                    let v = &a[i][c] + &a[j][c];
                    a[i][c] = v;
                }
                for row in a.iter_mut() {
                    let v = &row[i] + &row[j];
                    row[i] = v;
                }
            }
        }
        let pivot = a[i][i].clone();
        if pivot.is_zero() {
            // the whole row/column vanishes on the remaining block
            inertia.zero += 1;
            continue;
        }
        if pivot.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        for k in i + 1..n {
            if a[k][i].is_zero() {
                continue;
            }
            let f = &a[k][i] / &pivot;
            for l in i + 1..n {
                if !a[i][l].is_zero() {
                    let v = &a[k][l] - &(&f * &a[i][l]);
                    a[k][l] = v;
                }
            }
            a[k][i] = Rational::zero();
        }
        for l in i + 1..n {
            a[i][l] = Rational::zero();
        }
    }
    Ok(inertia)
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(Rational::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Divides by `(x - r)`; returns the quotient, assuming `r` is a root.
    pub fn deflate(&self, r: &Rational) -> Poly {
        let n = self.degree();
        let mut q = vec![Rational::zero(); n];
        let mut carry = Rational::zero();
        for k in (1..=n).rev() {
            carry = &self.0[k] + &(&carry * r);
            q[k - 1] = carry.clone();
        }
        Poly(q).trim()
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &RationalMatrix) -> RationalMatrix {
        let n = m.rows();
        let mut acc = RationalMatrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(m).add(&RationalMatrix::identity(n).scale(c));
        }
        acc
    }
}

/// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier.
pub fn characteristic_polynomial(m: &RationalMatrix) -> Poly {
    assert!(
        m.is_square(),
        "characteristic polynomial of a non-square matrix"
    );
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let shift = RationalMatrix::identity(n).scale(&coeffs[n - k + 1]);
        mk = m.mul(&mk).add(&shift);
        let amk = m.mul(&mk);
        coeffs[n - k] = -(amk.trace() / Rational::from_integer(k as i64));
    }
    Poly(coeffs)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(cur.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let p = p.clone().trim();
    if p.degree() == 0 {
        return Vec::new();
    }
    // clear denominators and content
    let lcm =
        p.0.iter()
            .fold(BigInt::one(), |acc, c| big_lcm(&acc, &c.denom()));
    let mut ints: Vec<BigInt> = p.0.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| big_gcd(&acc, c));
    if !content.is_zero() {
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
    }
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[lowest..];
    if ints.len() > 1 {
        let poly = Poly(ints.iter().map(|c| Rational::from(c.clone())).collect());
        let num_divs = divisors(&ints[0]);
        let den_divs = divisors(ints.last().unwrap());
        let mut cands: Vec<Rational> = Vec::new();
        for a in &num_divs {
            for b in &den_divs {
                if a.gcd(b) != BigInt::one() {
                    continue;
                }
                let r = Rational::from_bigints(a.clone(), b.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        roots.extend(cands.into_iter().filter(|c| poly.eval(c).is_zero()));
    }
    roots.sort();
    roots
}

/// Rational eigenspaces of a square matrix plus an invariant complement.
#[derive(Clone, Debug)]
pub struct EigenSplit {
    pub eigenspaces: Vec<(Rational, Vec<Vec<Rational>>)>,
    /// Basis of `ker r(M)`, where `r` is the factor of the characteristic
    /// polynomial with no rational roots.
    pub residual: Vec<Vec<Rational>>,
}

impl EigenSplit {
    /// True if the eigenspaces alone span the whole space.
    pub fn is_complete(&self, n: usize) -> bool {
        self.residual.is_empty()
            && self.eigenspaces.iter().map(|(_, b)| b.len()).sum::<usize>() == n
    }
}

pub fn rational_eigensplit(m: &RationalMatrix) -> EigenSplit {
    assert!(m.is_square(), "eigensplit of a non-square matrix");
    let n = m.rows();
    let chi = characteristic_polynomial(m);
    let roots = rational_roots(&chi);
    let mut rest = chi;
    let mut eigenspaces = Vec::new();
    for r in &roots {
        while rest.degree() > 0 && rest.eval(r).is_zero() {
            rest = rest.deflate(r);
        }
        let shifted = m.sub(&RationalMatrix::identity(n).scale(r));
        eigenspaces.push((r.clone(), kernel_basis(&shifted)));
    }
    let residual = if rest.degree() == 0 {
        Vec::new()
    } else {
        kernel_basis(&rest.eval_matrix(m))
    };
    EigenSplit {
        eigenspaces,
        residual,
    }
}
