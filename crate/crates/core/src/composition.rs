//! Composition algebras over ℚ built by Cayley–Dickson doubling.
//!
//! Basis order is the iterated-pair order: index 0 is the unit and the
//! doubling unit of the last step sits at index `dim / 2`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// CLI tags: `C`, `C'`, `H`, `H'`, `O`, `O'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraTag {
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "C'")]
    SplitComplex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "H'")]
    SplitQuaternion,
    #[serde(rename = "O")]
    Octonion,
    #[serde(rename = "O'")]
    SplitOctonion,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 6] = [
        AlgebraTag::Complex,
        AlgebraTag::SplitComplex,
        AlgebraTag::Quaternion,
        AlgebraTag::SplitQuaternion,
        AlgebraTag::Octonion,
        AlgebraTag::SplitOctonion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraTag::Complex => "C",
            AlgebraTag::SplitComplex => "C'",
            AlgebraTag::Quaternion => "H",
            AlgebraTag::SplitQuaternion => "H'",
            AlgebraTag::Octonion => "O",
            AlgebraTag::SplitOctonion => "O'",
        }
    }

    pub fn is_split(self) -> bool {
        matches!(
            self,
            AlgebraTag::SplitComplex | AlgebraTag::SplitQuaternion | AlgebraTag::SplitOctonion
        )
    }

    /// Doubling parameters from ℝ, outermost last.
    pub fn gamma_chain(self) -> Vec<i64> {
        match self {
            AlgebraTag::Complex => vec![-1],
            AlgebraTag::SplitComplex => vec![1],
            AlgebraTag::Quaternion => vec![-1, -1],
            AlgebraTag::SplitQuaternion => vec![-1, 1],
            AlgebraTag::Octonion => vec![-1, -1, -1],
            AlgebraTag::SplitOctonion => vec![-1, -1, 1],
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraTag {
    type Err = GlaError;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| GlaError::BadParameters(format!("unknown composition algebra `{s}`")))
    }
}

/// A real algebra of dimension 1, 2, 4 or 8 with conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAlgebra {
    dim: usize,
    gamma_chain: Vec<i64>,
    /// `mul_table[a][b]` = coordinates of `e_a e_b`.
    mul_table: Vec<Vec<Vec<Rational>>>,
    conj_matrix: RationalMatrix,
    labels: Vec<String>,
}

const LABELS_1: [&str; 1] = ["1"];
const LABELS_2: [&str; 2] = ["1", "i"];
const LABELS_4: [&str; 4] = ["1", "i", "j", "k"];
const LABELS_8: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

impl CompositionAlgebra {
    /// ℝ itself, the start of every doubling chain.
    pub fn real() -> Self {
        Self {
            dim: 1,
            gamma_chain: Vec::new(),
            mul_table: vec![vec![vec![Rational::one()]]],
            conj_matrix: RationalMatrix::identity(1),
            labels: vec!["1".into()],
        }
    }

    pub fn from_tag(tag: AlgebraTag) -> Self {
        tag.gamma_chain().into_iter().fold(Self::real(), |a, g| {
            cayley_dickson(&a, g).expect("chain stays within dim 8")
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma_chain(&self) -> &[i64] {
        &self.gamma_chain
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn conj_matrix(&self) -> &RationalMatrix {
        &self.conj_matrix
    }

    /// Coordinates of `e_a e_b`.
    pub fn basis_product(&self, a: usize, b: usize) -> &[Rational] {
        &self.mul_table[a][b]
    }

    /// Index of the doubling unit of the outermost step (0 for ℝ).
    pub fn doubling_unit(&self) -> usize {
        self.dim / 2
    }

    pub fn is_associative(&self) -> bool {
        self.dim <= 4
    }

    pub fn is_commutative(&self) -> bool {
        self.dim <= 2
    }

    /// Product of coordinate vectors.
    pub fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa * yb;
                for (c, t) in self.mul_table[a][b].iter().enumerate() {
                    if !t.is_zero() {
                        out[c] += &(&f * t);
                    }
                }
            }
        }
        out
    }

    pub fn conj_coords(&self, x: &[Rational]) -> Vec<Rational> {
        self.conj_matrix.mul_vec(x)
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<CAElement> {
        if coords.len() != self.dim {
            return Err(GlaError::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        Ok(CAElement {
            algebra: Arc::clone(self),
            coords,
        })
    }

    pub fn basis_element(self: &Arc<Self>, a: usize) -> CAElement {
        let mut coords = vec![Rational::zero(); self.dim];
        coords[a] = Rational::one();
        CAElement {
            algebra: Arc::clone(self),
            coords,
        }
    }
}

/// `(a,b)(c,d) = (ac + γ d̄b, da + bc̄)`, `conj(a,b) = (ā, −b)`.
pub fn cayley_dickson(base: &CompositionAlgebra, gamma: i64) -> Result<CompositionAlgebra> {
    if base.dim >= 8 {
        return Err(GlaError::DimTooLarge);
    }
    assert!(gamma == 1 || gamma == -1, "doubling parameter must be ±1");
    let n = base.dim;
    let dim = 2 * n;
    let g = Rational::from_integer(gamma);
    let unit = |k: usize| {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::one();
        v
    };
    let zero = vec![Rational::zero(); n];
    // basis e_k = (u_k, 0) for k < n, e_{n+k} = (0, u_k)
    let pair = |k: usize| {
        if k < n {
            (unit(k), zero.clone())
        } else {
            (zero.clone(), unit(k - n))
        }
    };
    let add = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    };
    let mut mul_table = vec![vec![Vec::new(); dim]; dim];
    for (i, row) in mul_table.iter_mut().enumerate() {
        let (a, b) = pair(i);
        for (j, slot) in row.iter_mut().enumerate() {
            let (c, d) = pair(j);
            let ac = base.mul_coords(&a, &c);
            let dbar_b: Vec<Rational> = base
                .mul_coords(&base.conj_coords(&d), &b)
                .iter()
                .map(|x| x * &g)
                .collect();
            let da = base.mul_coords(&d, &a);
            let b_cbar = base.mul_coords(&b, &base.conj_coords(&c));
            let mut prod = add(&ac, &dbar_b);
            prod.extend(add(&da, &b_cbar));
            *slot = prod;
        }
    }
    let mut conj = RationalMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            conj.set(i, j, base.conj_matrix.get(i, j).clone());
        }
        conj.set(n + i, n + i, Rational::from_integer(-1));
    }
    let labels = match dim {
        2 => LABELS_2.iter(),
        4 => LABELS_4.iter(),
        8 => LABELS_8.iter(),
        _ => LABELS_1.iter(),
    }
    .map(|s| s.to_string())
    .collect();
    let mut gamma_chain = base.gamma_chain.clone();
    gamma_chain.push(gamma);
    Ok(CompositionAlgebra {
        dim,
        gamma_chain,
        mul_table,
        conj_matrix: conj,
        labels,
    })
}

/// An element of a composition algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CAElement {
    algebra: Arc<CompositionAlgebra>,
    coords: Vec<Rational>,
}

impl CAElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn algebra(&self) -> &Arc<CompositionAlgebra> {
        &self.algebra
    }

    fn check_same(&self, other: &CAElement) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(GlaError::AlgebraMismatch)
        }
    }

    pub fn multiply(&self, other: &CAElement) -> Result<CAElement> {
        self.check_same(other)?;
        Ok(CAElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.algebra.mul_coords(&self.coords, &other.coords),
        })
    }

    pub fn add(&self, other: &CAElement) -> Result<CAElement> {
        self.check_same(other)?;
        Ok(CAElement {
            algebra: Arc::clone(&self.algebra),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CAElement) -> Result<CAElement> {
        self.check_same(other)?;
        Ok(CAElement {
            algebra: Arc::clone(&self.algebra),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, f: &Rational) -> CAElement {
        CAElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|x| x * f).collect(),
        }
    }

    pub fn conjugate(&self) -> CAElement {
        CAElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.algebra.conj_coords(&self.coords),
        }
    }

    pub fn re(&self) -> Rational {
        self.coords[0].clone()
    }

    pub fn im(&self) -> CAElement {
        let mut coords = self.coords.clone();
        coords[0] = Rational::zero();
        CAElement {
            algebra: Arc::clone(&self.algebra),
            coords,
        }
    }

    /// `N(x)`, defined by `x x̄ = N(x)·1`.
    pub fn norm(&self) -> Rational {
        self.algebra
            .mul_coords(&self.coords, &self.algebra.conj_coords(&self.coords))[0]
            .clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }
}

/// Gram matrix of `g(x,y) = Re ½(x̄y + ȳx)` in the doubling basis.
pub fn norm_form(a: &CompositionAlgebra) -> RationalMatrix {
    let n = a.dim();
    let half = Rational::new(1, 2);
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let ei = unit(n, i);
            let ej = unit(n, j);
            let xy = a.mul_coords(&a.conj_coords(&ei), &ej);
            let yx = a.mul_coords(&a.conj_coords(&ej), &ei);
            m.set(i, j, &(&xy[0] + &yx[0]) * &half);
        }
    }
    m
}

fn unit(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{signature_of_symmetric, Inertia};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn alg(tag: AlgebraTag) -> Arc<CompositionAlgebra> {
        Arc::new(CompositionAlgebra::from_tag(tag))
    }

    #[test]
    fn quaternion_relations() {
        let h = alg(AlgebraTag::Quaternion);
        let (i, j, k) = (h.basis_element(1), h.basis_element(2), h.basis_element(3));
        assert_eq!(i.multiply(&j).unwrap(), k);
        assert_eq!(j.multiply(&i).unwrap(), k.scale(&q(-1)));
        let minus_one = h.basis_element(0).scale(&q(-1));
        for x in [&i, &j, &k] {
            assert_eq!(x.multiply(x).unwrap(), minus_one);
        }
    }

    #[test]
    fn split_complex_unit_squares_to_one() {
        let c = alg(AlgebraTag::SplitComplex);
        let j = c.basis_element(1);
        assert_eq!(j.multiply(&j).unwrap(), c.basis_element(0));
    }

    #[test]
    fn octonions_are_not_associative() {
        let o = alg(AlgebraTag::Octonion);
        let (i, j, l) = (
            o.basis_element(1),
            o.basis_element(2),
            o.basis_element(o.doubling_unit()),
        );
        let lhs = i.multiply(&j).unwrap().multiply(&l).unwrap();
        let rhs = i.multiply(&j.multiply(&l).unwrap()).unwrap();
        assert!(!lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn quaternion_product_example() {
        let h = alg(AlgebraTag::Quaternion);
        let one = h.basis_element(0);
        let a = one.add(&h.basis_element(1)).unwrap();
        let b = one.add(&h.basis_element(2)).unwrap();
        let expected = h.element(vec![q(1), q(1), q(1), q(1)]).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expected);
    }

    #[test]
    fn split_octonions_have_null_vectors() {
        let o = alg(AlgebraTag::SplitOctonion);
        // search small integer vectors with x̄x = 0
        let mut found = None;
        'outer: for a in -1i64..=1 {
            for b in 0..8 {
                let mut c = vec![q(0); 8];
                c[0] = q(1);
                c[b] += &q(a);
                let x = o.element(c).unwrap();
                if !x.is_zero() && x.conjugate().multiply(&x).unwrap().is_zero() {
                    found = Some(x);
                    break 'outer;
                }
            }
        }
        let x = found.expect("split octonions contain null vectors");
        assert_eq!(x.norm(), q(0));
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let h = alg(AlgebraTag::Quaternion);
        let c = alg(AlgebraTag::Complex);
        assert!(matches!(
            h.basis_element(1).multiply(&c.basis_element(1)),
            Err(GlaError::AlgebraMismatch)
        ));
        assert!(matches!(
            h.element(vec![q(1)]),
            Err(GlaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn doubling_octonions_fails() {
        let o = CompositionAlgebra::from_tag(AlgebraTag::Octonion);
        assert!(matches!(cayley_dickson(&o, -1), Err(GlaError::DimTooLarge)));
    }

    #[test]
    fn norm_form_signatures() {
        let sig = |t| signature_of_symmetric(&norm_form(&CompositionAlgebra::from_tag(t))).unwrap();
        assert_eq!(
            sig(AlgebraTag::Octonion),
            Inertia {
                positive: 8,
                negative: 0,
                zero: 0
            }
        );
        assert_eq!(
            sig(AlgebraTag::SplitOctonion),
            Inertia {
                positive: 4,
                negative: 4,
                zero: 0
            }
        );
        assert_eq!(
            sig(AlgebraTag::SplitComplex),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        assert_eq!(
            sig(AlgebraTag::SplitQuaternion),
            Inertia {
                positive: 2,
                negative: 2,
                zero: 0
            }
        );
        for t in AlgebraTag::ALL {
            let m = norm_form(&CompositionAlgebra::from_tag(t));
            assert!(m.is_symmetric());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    assert!(i == j || m.get(i, j).is_zero(), "norm form is diagonal");
                }
            }
        }
    }

    fn random_element(rng: &mut ChaCha8Rng, a: &Arc<CompositionAlgebra>) -> CAElement {
        let coords = (0..a.dim())
            .map(|_| Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect();
        a.element(coords).unwrap()
    }

    #[test]
    fn composition_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for t in AlgebraTag::ALL {
            let a = alg(t);
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (x, y) = (a.basis_element(i), a.basis_element(j));
                    let xy = x.multiply(&y).unwrap();
                    assert_eq!(xy.norm(), &x.norm() * &y.norm());
                    // conjugation is an anti-automorphism
                    assert_eq!(
                        xy.conjugate(),
                        y.conjugate().multiply(&x.conjugate()).unwrap()
                    );
                }
            }
            if a.is_associative() {
                for _ in 0..100 {
                    let (x, y) = (random_element(&mut rng, &a), random_element(&mut rng, &a));
                    assert_eq!(x.multiply(&y).unwrap().norm(), &x.norm() * &y.norm());
                }
            }
        }
    }

    #[test]
    fn conjugation_and_imaginary_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for t in AlgebraTag::ALL {
            let a = alg(t);
            let one = a.basis_element(0);
            assert_eq!(one.conjugate(), one);
            for _ in 0..10 {
                let x = random_element(&mut rng, &a);
                let y = random_element(&mut rng, &a);
                assert_eq!(x.conjugate().conjugate(), x);
                assert_eq!(
                    x.add(&x.conjugate()).unwrap(),
                    one.scale(&(&x.re() * &q(2)))
                );
                assert_eq!(one.scale(&x.re()).add(&x.im()).unwrap(), x);
                assert_eq!(x.multiply(&y).unwrap().re(), y.multiply(&x).unwrap().re());
                // x̄y − ȳx is imaginary
                let br = x
                    .conjugate()
                    .multiply(&y)
                    .unwrap()
                    .sub(&y.conjugate().multiply(&x).unwrap())
                    .unwrap();
                assert!(br.re().is_zero());
                assert_eq!(br.conjugate(), br.scale(&q(-1)));
            }
            // Im 𝕂 = ker Re has dimension dim - 1
            let re_row = RationalMatrix::from_rows(vec![(0..a.dim())
                .map(|k| if k == 0 { q(1) } else { q(0) })
                .collect()]);
            assert_eq!(crate::linalg::kernel_basis(&re_row).len(), a.dim() - 1);
        }
    }
}
