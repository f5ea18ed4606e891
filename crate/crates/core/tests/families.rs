use glap_core::composition::{AlgebraTag, CompositionAlgebra};
use glap_core::families::matrix::{
    build_matrix_algebra, s_matrix, MatrixAlgebra, MatrixSpec, TraceCondition,
};
use glap_core::families::{build, build_bi, build_hk, FamilySpec};
use glap_core::gla::GradedAlgebra;
use glap_core::prolongation::{eta_of_map, full_prolongation};
use glap_core::{Rational, RationalMatrix};

fn same_structure(a: &GradedAlgebra, b: &GradedAlgebra) -> bool {
    a.labels() == b.labels() && a.degrees() == b.degrees() && a.brackets() == b.brackets()
}

fn hk_matrices(tag: AlgebraTag, p: usize, q: usize) -> MatrixAlgebra {
    let algebra = CompositionAlgebra::from_tag(tag);
    let trace = if algebra.is_commutative() {
        TraceCondition::Full
    } else {
        TraceCondition::Real
    };
    build_matrix_algebra(&MatrixSpec {
        name: FamilySpec::Hk { algebra: tag, p, q }.to_string(),
        algebra,
        block_sizes: vec![1, 2 * p + q - 2, 1],
        form: Some(s_matrix(p, q)),
        trace,
    })
    .unwrap()
}

fn bi_matrices(l: usize) -> MatrixAlgebra {
    build_matrix_algebra(&MatrixSpec {
        name: FamilySpec::Bi { l }.to_string(),
        algebra: CompositionAlgebra::real(),
        block_sizes: vec![1, l - 1, 1, l - 1, 1],
        form: Some(s_matrix(l, 1)),
        trace: TraceCondition::None,
    })
    .unwrap()
}

/// `ad(e)` on the first `dim_m` basis elements.
fn ad_on_negative(a: &GradedAlgebra, e: usize, dim_m: usize) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(dim_m, dim_m);
    for x in 0..dim_m {
        for (k, v) in a.bracket_basis(e, x) {
            assert!(k < dim_m);
            out.set(k, x, v);
        }
    }
    out
}

/// Checks `η(ad A) = factor · Re A_{11}` on every degree 0 basis element.
fn check_covariance(
    ma: &MatrixAlgebra,
    form: &glap_core::SymBilinearForm,
    dim_m: usize,
    factor: i64,
) {
    let factor = Rational::from_integer(factor);
    for e in ma.algebra.indices_of_degree(0) {
        let eta = eta_of_map(form, &ad_on_negative(&ma.algebra, e, dim_m)).expect("conformal");
        assert_eq!(
            eta,
            &factor * &ma.entry(e, 0, 0, 0),
            "{}",
            ma.algebra.labels()[e]
        );
    }
}

#[test]
fn hk_conformal_covariance() {
    for (tag, p, q) in [
        (AlgebraTag::Complex, 1, 1),
        (AlgebraTag::Complex, 2, 1),
        (AlgebraTag::SplitComplex, 1, 1),
        (AlgebraTag::Quaternion, 1, 1),
        (AlgebraTag::SplitQuaternion, 1, 2),
        (AlgebraTag::Quaternion, 2, 0),
    ] {
        let b = build_hk(tag, p, q).unwrap();
        let ma = hk_matrices(tag, p, q);
        assert!(same_structure(&ma.algebra, b.ambient.as_ref().unwrap()));
        check_covariance(&ma, &b.form, b.m.dim(), -2);
    }
}

#[test]
fn bi_conformal_covariance() {
    for l in 2..=4 {
        let b = build_bi(l).unwrap();
        let ma = bi_matrices(l);
        assert!(same_structure(&ma.algebra, b.ambient.as_ref().unwrap()));
        check_covariance(&ma, &b.form, b.m.dim(), -1);
    }
}

#[test]
fn prolongation_recovers_ambient() {
    let specs = [
        FamilySpec::Hk {
            algebra: AlgebraTag::Complex,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: AlgebraTag::SplitComplex,
            p: 2,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: AlgebraTag::Quaternion,
            p: 1,
            q: 2,
        },
        FamilySpec::Hk {
            algebra: AlgebraTag::SplitQuaternion,
            p: 1,
            q: 1,
        },
        FamilySpec::Bi { l: 2 },
        FamilySpec::Bi { l: 3 },
        FamilySpec::Bi { l: 4 },
    ];
    for spec in specs {
        let b = build(&spec).unwrap();
        let ambient = b.ambient.as_ref().unwrap();
        let r = full_prolongation(&b.m, &b.form).unwrap();
        assert_eq!(r.dims_by_degree(), ambient.dims_by_degree(), "{spec}");
        // negative parts coincide with the builder's m
        let neg = r.negative_part().unwrap();
        assert!(same_structure(&neg, &b.m), "{spec}");
        let amb_neg = ambient.negative_part().unwrap();
        assert!(same_structure(&amb_neg, &b.m), "{spec}");
    }
}

#[test]
fn octonionic_bracket_from_definition() {
    // [x, y] = x̄y − ȳx on K, landing in Im K
    for split in [false, true] {
        let b = build(&FamilySpec::Octonionic { split }).unwrap();
        let k = CompositionAlgebra::from_tag(if split {
            AlgebraTag::SplitOctonion
        } else {
            AlgebraTag::Octonion
        });
        let im: Vec<usize> = b.m.indices_of_degree(-2);
        let v: Vec<usize> = b.m.indices_of_degree(-1);
        assert_eq!((im.len(), v.len()), (7, 8));
        for (a, &x) in v.iter().enumerate() {
            for (c, &y) in v.iter().enumerate() {
                let unit = |i: usize| -> Vec<Rational> {
                    (0..8)
                        .map(|j| Rational::from_integer((i == j) as i64))
                        .collect()
                };
                let lhs = k.mul_coords(&k.conj_coords(&unit(a)), &unit(c));
                let rhs = k.mul_coords(&k.conj_coords(&unit(c)), &unit(a));
                let expected: Vec<Rational> = lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect();
                assert!(expected[0].is_zero());
                let got = b.m.bracket_basis(x, y);
                for (t, &i) in im.iter().enumerate() {
                    let coeff = got
                        .iter()
                        .find(|(kk, _)| *kk == i)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(Rational::zero);
                    assert_eq!(
                        coeff,
                        expected[t + 1],
                        "split={split} [{x},{y}] component {t}"
                    );
                }
            }
        }
    }
}
