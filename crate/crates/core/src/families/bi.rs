use crate::composition::CompositionAlgebra;
use crate::error::Result;
use crate::families::matrix::{build_matrix_algebra, s_matrix, MatrixSpec, TraceCondition};
use crate::families::{diagonal_cartan, form_from, FamilyBuild, FamilySpec};
use crate::rational::Rational;

/// `so(l+1, l)` in `(2l+1) × (2l+1)` matrices, graded by blocks
/// `(1, l−1, 1, l−1, 1)`.
pub fn build_bi(l: usize) -> Result<FamilyBuild> {
    let spec = FamilySpec::Bi { l };
    spec.validate()?;
    let ma = build_matrix_algebra(&MatrixSpec {
        name: spec.to_string(),
        algebra: CompositionAlgebra::real(),
        block_sizes: vec![1, l - 1, 1, l - 1, 1],
        form: Some(s_matrix(l, 1)),
        trace: TraceCondition::None,
    })?;
    let mut m = ma.algebra.negative_part()?;
    m.set_name(spec.to_string());
    // −½(X32·Y21 + Y32·X21)
    let dot = |x: usize, y: usize| -> Rational {
        (1..l)
            .map(|t| &ma.entry(x, l, t, 0) * &ma.entry(y, t, 0, 0))
            .sum()
    };
    let half = Rational::new(-1, 2);
    let form = form_from(&m, |x, y| &half * &(&dot(x, y) + &dot(y, x)))?;
    let cartan = Some(diagonal_cartan(&ma, &[0], m.dim()));
    Ok(FamilyBuild {
        spec,
        m,
        form,
        ambient: Some(ma.algebra),
        cartan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gla::{check_fundamental, check_gla};
    use std::collections::BTreeMap;

    #[test]
    fn bi3() {
        let b = build_bi(3).unwrap();
        assert_eq!(
            b.m.dims_by_degree(),
            BTreeMap::from([(-3, 2), (-2, 2), (-1, 4)])
        );
        assert_eq!(b.ambient.as_ref().unwrap().dim(), 21);
        assert!(check_gla(b.ambient.as_ref().unwrap()).is_ok());
        assert_eq!(check_fundamental(&b.m).unwrap().kind, 3);
        let sig = b.form.signature();
        assert_eq!((sig.positive, sig.negative), (2, 2));
        assert_eq!(b.cartan.unwrap().derivations.len(), 3);
    }

    #[test]
    fn bi_dims_formula() {
        for l in 2..=4 {
            let b = build_bi(l).unwrap();
            let d = b.m.dims_by_degree();
            assert_eq!(d[&-1], 2 * (l - 1));
            assert_eq!(d[&-2], 1 + (l - 1) * (l - 2) / 2);
            assert_eq!(d[&-3], l - 1);
        }
    }
}
