//! Graded matrix Lie algebras over an associative composition algebra,
//! flattened to real structure constants.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::composition::CompositionAlgebra;
use crate::error::{GlaError, Result};
use crate::gla::GradedAlgebra;
use crate::linalg::{sparse, RationalMatrix, RowReducer, SparseVec};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceCondition {
    None,
    /// `tr X = 0` in the algebra.
    Full,
    /// `Re tr X = 0`.
    Real,
}

/// Description of `{X ∈ M(n, K) : X*S + SX = 0, trace condition}` graded by
/// block position: entry `(i, j)` has degree `block[j] − block[i]`.
#[derive(Clone, Debug)]
pub struct MatrixSpec {
    pub name: String,
    pub algebra: CompositionAlgebra,
    pub block_sizes: Vec<usize>,
    pub form: Option<RationalMatrix>,
    pub trace: TraceCondition,
}

/// A built matrix algebra together with the matrices of its basis.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub algebra: GradedAlgebra,
    /// Real coordinates of each basis matrix, indexed by [`MatrixAlgebra::coord`].
    pub elements: Vec<SparseVec>,
    pub n: usize,
    pub k: usize,
    pub block_of: Vec<usize>,
}

impl MatrixAlgebra {
    /// Real coordinate index of component `c` of entry `(i, j)`.
    pub fn coord(&self, i: usize, j: usize, c: usize) -> usize {
        (i * self.n + j) * self.k + c
    }

    pub fn decode(&self, idx: usize) -> (usize, usize, usize) {
        (idx / self.k / self.n, idx / self.k % self.n, idx % self.k)
    }

    /// Component `c` of entry `(i, j)` of basis element `e`.
    pub fn entry(&self, e: usize, i: usize, j: usize, c: usize) -> Rational {
        sparse::get(&self.elements[e], self.coord(i, j, c))
    }

    /// First index of each block.
    pub fn block_start(&self, b: usize) -> usize {
        self.block_of
            .iter()
            .position(|&x| x == b)
            .expect("block exists")
    }
}

fn product(
    a: &CompositionAlgebra,
    n: usize,
    x: &[(usize, Rational)],
    y: &[(usize, Rational)],
) -> SparseVec {
    let k = a.dim();
    let decode = |idx: usize| (idx / k / n, idx / k % n, idx % k);
    let mut by_row: BTreeMap<usize, Vec<(usize, usize, &Rational)>> = BTreeMap::new();
    for (idx, v) in y {
        let (r, c, comp) = decode(*idx);
        by_row.entry(r).or_default().push((c, comp, v));
    }
    let mut acc = sparse::Accumulator::new();
    for (idx, v) in x {
        let (i, kk, c1) = decode(*idx);
        let Some(row) = by_row.get(&kk) else { continue };
        for &(j, c2, w) in row {
            let vw = v * w;
            for (c, t) in a.basis_product(c1, c2).iter().enumerate() {
                if !t.is_zero() {
                    acc.add((i * n + j) * k + c, &(&vw * t));
                }
            }
        }
    }
    acc.finish()
}

struct DegreeBlock {
    degree: i32,
    cols: Vec<usize>,
    free: Vec<usize>,
    basis: Vec<SparseVec>,
    first: usize,
}

impl DegreeBlock {
    fn coords(&self, w: &SparseVec, local_of: &[usize]) -> Option<Vec<Rational>> {
        let local: SparseVec = {
            let mut v: SparseVec = w.iter().map(|(g, x)| (local_of[*g], x.clone())).collect();
            v.sort_by_key(|e| e.0);
            v
        };
        let c: Vec<Rational> = self.free.iter().map(|&f| sparse::get(&local, f)).collect();
        let mut acc = sparse::Accumulator::new();
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                acc.add_scaled(x, &self.basis[i]);
            }
        }
        (acc.finish() == local).then_some(c)
    }
}

pub fn build_matrix_algebra(spec: &MatrixSpec) -> Result<MatrixAlgebra> {
    let a = &spec.algebra;
    if !a.is_associative() {
        return Err(GlaError::BadParameters(
            "matrix algebras need an associative composition algebra".into(),
        ));
    }
    let k = a.dim();
    let block_of: Vec<usize> = spec
        .block_sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect();
    let n = block_of.len();
    let total = n * n * k;
    let coord = |i: usize, j: usize, c: usize| (i * n + j) * k + c;
    let degree_of = |idx: usize| block_of[idx / k % n] as i32 - block_of[idx / k / n] as i32;

    let mut rows: Vec<SparseVec> = Vec::new();
    if let Some(s) = &spec.form {
        if s.rows() != n || !s.is_symmetric() {
            return Err(GlaError::InvalidAlgebra(
                "matrix form must be symmetric of size n".into(),
            ));
        }
        let conj = a.conj_matrix();
        // (X*S + SX)_{ij} = Σ_t conj(X_{ti}) S_{tj} + S_{it} X_{tj}
        for i in 0..n {
            for j in 0..n {
                for c in 0..k {
                    let mut acc = sparse::Accumulator::new();
                    for t in 0..n {
                        let stj = s.get(t, j);
                        if !stj.is_zero() {
                            for c2 in 0..k {
                                let f = conj.get(c, c2);
                                if !f.is_zero() {
                                    acc.add(coord(t, i, c2), &(stj * f));
                                }
                            }
                        }
                        let sit = s.get(i, t);
                        if !sit.is_zero() {
                            acc.add(coord(t, j, c), sit);
                        }
                    }
                    let r = acc.finish();
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
    }
    let trace_components: Vec<usize> = match spec.trace {
        TraceCondition::None => vec![],
        TraceCondition::Full => (0..k).collect(),
        TraceCondition::Real => vec![0],
    };
    for c in trace_components {
        rows.push((0..n).map(|i| (coord(i, i, c), Rational::one())).collect());
    }

    let mut by_degree: BTreeMap<i32, Vec<SparseVec>> = BTreeMap::new();
    for r in rows {
        let d = degree_of(r[0].0);
        debug_assert!(
            r.iter().all(|(c, _)| degree_of(*c) == d),
            "constraints are homogeneous"
        );
        by_degree.entry(d).or_default().push(r);
    }
    let mut cols_of: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for idx in 0..total {
        cols_of.entry(degree_of(idx)).or_default().push(idx);
    }
    let mut local_of = vec![0; total];
    for cols in cols_of.values() {
        for (p, &c) in cols.iter().enumerate() {
            local_of[c] = p;
        }
    }

    let mut blocks: Vec<DegreeBlock> = Vec::new();
    let mut first = 0;
    for (&d, cols) in &cols_of {
        let mut red = RowReducer::new(cols.len());
        for r in by_degree.remove(&d).unwrap_or_default() {
            let mut local: SparseVec = r.into_iter().map(|(g, v)| (local_of[g], v)).collect();
            local.sort_by_key(|e| e.0);
            red.push(local);
        }
        let rref = red.into_rref();
        let basis = rref.kernel_basis();
        if basis.is_empty() {
            continue;
        }
        let len = basis.len();
        blocks.push(DegreeBlock {
            degree: d,
            cols: cols.clone(),
            free: rref.free,
            basis,
            first,
        });
        first += len;
    }

    let mut elements = Vec::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for b in &blocks {
        for (v, &f) in b.basis.iter().zip(&b.free) {
            let mut global: SparseVec = v.iter().map(|(l, x)| (b.cols[*l], x.clone())).collect();
            global.sort_by_key(|e| e.0);
            elements.push(global);
            let (i, j, c) = {
                let g = b.cols[f];
                (g / k / n, g / k % n, g % k)
            };
            let unit = if k == 1 {
                String::new()
            } else {
                a.labels()[c].clone()
            };
            labels.push(format!("{unit}E{},{}[{}]", i + 1, j + 1, b.degree));
            degrees.push(b.degree);
        }
    }
    let block_index: BTreeMap<i32, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b.degree, i))
        .collect();

    let dim = elements.len();
    let brackets: Vec<Result<Vec<(usize, usize, SparseVec)>>> = (0..dim)
        .into_par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for y in x + 1..dim {
                let xy = product(a, n, &elements[x], &elements[y]);
                let yx = product(a, n, &elements[y], &elements[x]);
                let c = sparse::sub(&xy, &yx);
                if c.is_empty() {
                    continue;
                }
                let d = degrees[x] + degrees[y];
                let missing =
                    || GlaError::Internal(format!("{}: commutator leaves the algebra", spec.name));
                let b = &blocks[*block_index.get(&d).ok_or_else(missing)?];
                let coords = b.coords(&c, &local_of).ok_or_else(missing)?;
                let v: SparseVec = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, t)| !t.is_zero())
                    .map(|(i, t)| (b.first + i, t))
                    .collect();
                out.push((x, y, v));
            }
            Ok(out)
        })
        .collect();

    let mut alg = GradedAlgebra::new(spec.name.clone(), labels, degrees)?;
    for r in brackets {
        for (x, y, v) in r? {
            alg.set_bracket(x, y, v)?;
        }
    }
    Ok(MatrixAlgebra {
        algebra: alg,
        elements,
        n,
        k,
        block_of,
    })
}

/// `S_{p,q}`: corners `K_p`, identity `1_q` in the middle.
pub fn s_matrix(p: usize, q: usize) -> RationalMatrix {
    let n = 2 * p + q;
    let mut s = RationalMatrix::zeros(n, n);
    for i in 0..p {
        s.set(i, n - 1 - i, Rational::one());
        s.set(n - 1 - i, i, Rational::one());
    }
    for i in p..p + q {
        s.set(i, i, Rational::one());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::AlgebraTag;
    use crate::gla::check_gla;
    use crate::linalg::signature_of_symmetric;

    #[test]
    fn s_matrix_signature_and_idempotence() {
        let s = s_matrix(1, 1);
        assert_eq!(
            s,
            RationalMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
        );
        let sig = signature_of_symmetric(&s).unwrap();
        assert_eq!((sig.positive, sig.negative), (2, 1));
        for (p, q) in [(1, 1), (2, 1), (2, 0), (3, 2)] {
            let s = s_matrix(p, q);
            let sig = signature_of_symmetric(&s).unwrap();
            assert_eq!((sig.positive, sig.negative), (p + q, p));
            assert_eq!(s.mul(&s), RationalMatrix::identity(2 * p + q));
        }
    }

    #[test]
    fn sl3_real() {
        let spec = MatrixSpec {
            name: "sl3".into(),
            algebra: CompositionAlgebra::real(),
            block_sizes: vec![1, 1, 1],
            form: None,
            trace: TraceCondition::Full,
        };
        let m = build_matrix_algebra(&spec).unwrap();
        assert_eq!(m.algebra.dim(), 8);
        assert!(check_gla(&m.algebra).is_ok());
        assert_eq!(
            m.algebra.dims_by_degree(),
            BTreeMap::from([(-2, 1), (-1, 2), (0, 2), (1, 2), (2, 1)])
        );
    }

    #[test]
    fn su21_dimension() {
        let spec = MatrixSpec {
            name: "su21".into(),
            algebra: CompositionAlgebra::from_tag(AlgebraTag::Complex),
            block_sizes: vec![1, 1, 1],
            form: Some(s_matrix(1, 1)),
            trace: TraceCondition::Full,
        };
        let m = build_matrix_algebra(&spec).unwrap();
        assert_eq!(m.algebra.dim(), 8);
        assert!(check_gla(&m.algebra).is_ok());
    }

    #[test]
    fn octonions_rejected() {
        let spec = MatrixSpec {
            name: "bad".into(),
            algebra: CompositionAlgebra::from_tag(AlgebraTag::Octonion),
            block_sizes: vec![1],
            form: None,
            trace: TraceCondition::None,
        };
        assert!(build_matrix_algebra(&spec).is_err());
    }
}
