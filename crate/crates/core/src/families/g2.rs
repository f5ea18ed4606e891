//! Fifth-kind algebra built from `sl(2)` acting on binary cubics.
//!
//! Monomials `e1^(3−a) e2^a` of `S³(V)` are indexed by `a = 0..=3`.

use crate::error::{GlaError, Result};
use crate::families::{CartanTag, FamilyBuild, FamilySpec};
use crate::gla::{GradedAlgebra, SymBilinearForm};
use crate::linalg::{kernel_basis, RationalMatrix};
use crate::rational::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Matrices of `E21`, `E12` and `H = E11 − E22` on `S³(V)`.
fn sl2_on_cubics() -> [RationalMatrix; 3] {
    let mut lower = RationalMatrix::zeros(4, 4);
    let mut raise = RationalMatrix::zeros(4, 4);
    let mut h = RationalMatrix::zeros(4, 4);
    for a in 0..4i64 {
        let au = a as usize;
        if a < 3 {
            lower.set(au + 1, au, q(3 - a));
        }
        if a > 0 {
            raise.set(au - 1, au, q(a));
        }
        h.set(au, au, q(3 - 2 * a));
    }
    [lower, raise, h]
}

/// The `sl(2)`-invariant antisymmetric form on `S³(V)`, normalized so that
/// `ω(e1³, e2³) = 1`. Returned as a 4×4 matrix `ω[a][b]`.
pub fn invariant_symplectic_form() -> Result<RationalMatrix> {
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .collect();
    let unknown = |a: usize, b: usize| -> Option<(usize, i64)> {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => None,
            Less => Some((pairs.iter().position(|&p| p == (a, b)).unwrap(), 1)),
            Greater => Some((pairs.iter().position(|&p| p == (b, a)).unwrap(), -1)),
        }
    };
    let mut rows = Vec::new();
    for x in sl2_on_cubics() {
        for a in 0..4 {
            for b in 0..4 {
                // ω(X m_a, m_b) + ω(m_a, X m_b)
                let mut row = vec![Rational::zero(); pairs.len()];
                for c in 0..4 {
                    let xa = x.get(c, a);
                    if let (false, Some((u, s))) = (xa.is_zero(), unknown(c, b)) {
                        row[u] += &(xa * &q(s));
                    }
                    let xb = x.get(c, b);
                    if let (false, Some((u, s))) = (xb.is_zero(), unknown(a, c)) {
                        row[u] += &(xb * &q(s));
                    }
                }
                rows.push(row);
            }
        }
    }
    let ker = kernel_basis(&RationalMatrix::from_rows(rows));
    if ker.len() != 1 {
        return Err(GlaError::Internal(format!(
            "invariant form space has dimension {}",
            ker.len()
        )));
    }
    let v = &ker[0];
    let norm = v[unknown(0, 3).unwrap().0].clone();
    if norm.is_zero() {
        return Err(GlaError::Internal(
            "invariant form vanishes on the extreme pair".into(),
        ));
    }
    let mut w = RationalMatrix::zeros(4, 4);
    for a in 0..4 {
        for b in 0..4 {
            if let Some((u, s)) = unknown(a, b) {
                w.set(a, b, &(&v[u] / &norm) * &q(s));
            }
        }
    }
    Ok(w)
}

/// Basis, ascending in degree: `z[-5]`, `e2³[-4]`, `e1e2²[-3]`, `e1²e2[-2]`,
/// `E21[-1]`, `e1³[-1]`.
pub fn build_g2_example() -> Result<FamilyBuild> {
    let spec = FamilySpec::G2;
    const Z: usize = 0;
    const E21: usize = 4;
    // position of monomial a (e1^(3−a) e2^a)
    let mono = |a: usize| -> usize { [5, 3, 2, 1][a] };
    let labels = [
        "z[-5]",
        "e2^3[-4]",
        "e1e2^2[-3]",
        "e1^2e2[-2]",
        "E21[-1]",
        "e1^3[-1]",
    ];
    let mut m = GradedAlgebra::new(
        spec.to_string(),
        labels.iter().map(|s| s.to_string()).collect(),
        vec![-5, -4, -3, -2, -1, -1],
    )?;
    let [lower, _, h] = sl2_on_cubics();
    for a in 0..3 {
        m.set_bracket(
            E21,
            mono(a),
            vec![(mono(a + 1), lower.get(a + 1, a).clone())],
        )?;
    }
    let omega = invariant_symplectic_form()?;
    for a in 0..4 {
        for b in a + 1..4 {
            // W_{-i} has i = a + 1
            if a + b + 2 == 5 && !omega.get(a, b).is_zero() {
                m.set_bracket(mono(a), mono(b), vec![(Z, omega.get(a, b).clone())])?;
            }
        }
    }
    // g(E21, u) = (E21 u | e1²e2) with orthonormal monomials
    let cross = lower.get(1, 0).clone();
    let form = SymBilinearForm::new(
        &m,
        RationalMatrix::from_rows(vec![vec![q(0), cross.clone()], vec![cross, q(0)]]),
    )?;

    let degrees: Vec<Rational> = m.degrees().iter().map(|&d| q(d as i64)).collect();
    let mut hd = RationalMatrix::zeros(6, 6);
    hd.set(E21, E21, q(-2));
    for a in 0..4 {
        hd.set(mono(a), mono(a), h.get(a, a).clone());
    }
    let cartan = CartanTag {
        derivations: vec![RationalMatrix::diagonal(&degrees), hd],
    };
    Ok(FamilyBuild {
        spec,
        m,
        form,
        ambient: None,
        cartan: Some(cartan),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gla::{check_fundamental, check_gla};
    use std::collections::BTreeMap;

    #[test]
    fn omega_values() {
        let w = invariant_symplectic_form().unwrap();
        assert_eq!(w.get(0, 3), &q(1));
        assert_eq!(w.get(1, 2), &Rational::new(-1, 3));
        assert_eq!(w.get(3, 0), &q(-1));
        assert!(w.get(0, 1).is_zero() && w.get(0, 2).is_zero());
    }

    #[test]
    fn structure() {
        let b = build_g2_example().unwrap();
        assert!(check_gla(&b.m).is_ok());
        let f = check_fundamental(&b.m).unwrap();
        assert!(f.is_fgla);
        assert_eq!(f.kind, 5);
        assert_eq!(
            b.m.dims_by_degree(),
            BTreeMap::from([(-5, 1), (-4, 1), (-3, 1), (-2, 1), (-1, 2)])
        );
        let s = b.form.signature();
        assert_eq!((s.positive, s.negative), (1, 1));
    }
}
