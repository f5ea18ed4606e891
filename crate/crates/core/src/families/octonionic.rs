use crate::composition::{norm_form, AlgebraTag, CompositionAlgebra};
use crate::error::Result;
use crate::families::{FamilyBuild, FamilySpec};
use crate::gla::{GradedAlgebra, SymBilinearForm};
use crate::linalg::SparseVec;
use crate::rational::Rational;

/// Heisenberg-type algebra `Im K ⊕ K` over the (split) octonions with
/// `[x, y] = x̄y − ȳx` and the norm form.
pub fn build_octonionic(split: bool) -> Result<FamilyBuild> {
    let spec = FamilySpec::Octonionic { split };
    let tag = if split {
        AlgebraTag::SplitOctonion
    } else {
        AlgebraTag::Octonion
    };
    let k = CompositionAlgebra::from_tag(tag);
    let dim = k.dim();
    let imag = dim - 1;
    let mut labels: Vec<String> = k.labels()[1..].iter().map(|l| format!("{l}[-2]")).collect();
    labels.extend(k.labels().iter().map(|l| format!("{l}[-1]")));
    let degrees = std::iter::repeat_n(-2, imag)
        .chain(std::iter::repeat_n(-1, dim))
        .collect();
    let mut m = GradedAlgebra::new(spec.to_string(), labels, degrees)?;
    let unit = |a: usize| -> Vec<Rational> {
        (0..dim)
            .map(|c| {
                if c == a {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    for a in 0..dim {
        for b in a + 1..dim {
            let (x, y) = (unit(a), unit(b));
            let xy = k.mul_coords(&k.conj_coords(&x), &y);
            let yx = k.mul_coords(&k.conj_coords(&y), &x);
            debug_assert!((&xy[0] - &yx[0]).is_zero());
            let v: SparseVec = (1..dim)
                .map(|c| (c - 1, &xy[c] - &yx[c]))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            m.set_bracket(imag + a, imag + b, v)?;
        }
    }
    let form = SymBilinearForm::new(&m, norm_form(&k))?;
    Ok(FamilyBuild {
        spec,
        m,
        form,
        ambient: None,
        cartan: None,
    })
}
