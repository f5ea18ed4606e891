use crate::composition::{norm_form, AlgebraTag, CompositionAlgebra};
use crate::error::Result;
use crate::families::matrix::{build_matrix_algebra, s_matrix, MatrixSpec, TraceCondition};
use crate::families::{diagonal_cartan, form_from, FamilyBuild, FamilySpec};
use crate::rational::Rational;

/// Matrix family over `C`, `C'`, `H` or `H'` of size `n = 2p + q`, graded by
/// blocks `(1, n − 2, 1)`.
pub fn build_hk(tag: AlgebraTag, p: usize, q: usize) -> Result<FamilyBuild> {
    let spec = FamilySpec::Hk { algebra: tag, p, q };
    spec.validate()?;
    let algebra = CompositionAlgebra::from_tag(tag);
    let n = 2 * p + q;
    let inner = n - 2;
    let trace = if algebra.is_commutative() {
        TraceCondition::Full
    } else {
        TraceCondition::Real
    };
    let ma = build_matrix_algebra(&MatrixSpec {
        name: spec.to_string(),
        algebra: algebra.clone(),
        block_sizes: vec![1, inner, 1],
        form: Some(s_matrix(p, q)),
        trace,
    })?;
    let mut m = ma.algebra.negative_part()?;
    m.set_name(spec.to_string());

    let s_inner = s_matrix(p - 1, q);
    let nf = norm_form(&algebra);
    let k = algebra.dim();
    // Re(X21* S Y21) with X21 the first column below the corner
    let form = form_from(&m, |x, y| {
        let mut acc = Rational::zero();
        for a in 0..inner {
            for b in 0..inner {
                let s = s_inner.get(a, b);
                if s.is_zero() {
                    continue;
                }
                for c in 0..k {
                    let xa = ma.entry(x, 1 + a, 0, c);
                    if xa.is_zero() {
                        continue;
                    }
                    for c2 in 0..k {
                        let yb = ma.entry(y, 1 + b, 0, c2);
                        let nv = nf.get(c, c2);
                        if !yb.is_zero() && !nv.is_zero() {
                            acc += &(&(s * &xa) * &(&yb * nv));
                        }
                    }
                }
            }
        }
        acc
    })?;
    let cartan = tag
        .is_split()
        .then(|| diagonal_cartan(&ma, &[0, algebra.doubling_unit()], m.dim()));
    Ok(FamilyBuild {
        spec,
        m,
        form,
        ambient: Some(ma.algebra),
        cartan,
    })
}
