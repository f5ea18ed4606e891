//! Root systems from Cartan matrices, gradings by crossed nodes, and the
//! expected data of each family.
//!
//! Nodes use Bourbaki numbering, 1-based.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::AlgebraTag;
use crate::error::{GlaError, Result};
use crate::families::{FamilySpec, MAX_BI_RANK, MAX_MATRIX_SIZE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    F4,
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::F4 => "F4",
            CartanType::G2 => "G2",
        })
    }
}

impl FromStr for CartanType {
    type Err = GlaError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "F4" | "F" => Ok(CartanType::F4),
            "G2" | "G" => Ok(CartanType::G2),
            other => Err(GlaError::UnsupportedType(other.to_string())),
        }
    }
}

/// Symmetric matrix of `(α_i, α_j)`, scaled to integers.
fn inner_products(t: CartanType, l: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || GlaError::UnsupportedType(format!("{t}{l}"));
    let mut m = vec![vec![0i64; l]; l];
    let chain = |m: &mut Vec<Vec<i64>>, i: usize, v: i64| {
        m[i][i + 1] = v;
        m[i + 1][i] = v;
    };
    match t {
        CartanType::A => {
            if l < 1 {
                return Err(bad());
            }
            for i in 0..l {
                m[i][i] = 2;
            }
            for i in 0..l.saturating_sub(1) {
                chain(&mut m, i, -1);
            }
        }
        CartanType::B => {
            if l < 2 {
                return Err(bad());
            }
            for i in 0..l - 1 {
                m[i][i] = 2;
            }
            m[l - 1][l - 1] = 1;
            for i in 0..l - 1 {
                chain(&mut m, i, -1);
            }
        }
        CartanType::C => {
            if l < 2 {
                return Err(bad());
            }
            for i in 0..l - 1 {
                m[i][i] = 2;
            }
            m[l - 1][l - 1] = 4;
            for i in 0..l - 2 {
                chain(&mut m, i, -1);
            }
            chain(&mut m, l - 2, -2);
        }
        CartanType::D => {
            if l < 4 {
                return Err(bad());
            }
            for i in 0..l {
                m[i][i] = 2;
            }
            for i in 0..l - 2 {
                chain(&mut m, i, -1);
            }
            m[l - 3][l - 1] = -1;
            m[l - 1][l - 3] = -1;
        }
        CartanType::F4 => {
            if l != 4 {
                return Err(bad());
            }
            m[0][0] = 4;
            m[1][1] = 4;
            m[2][2] = 2;
            m[3][3] = 2;
            chain(&mut m, 0, -2);
            chain(&mut m, 1, -2);
            chain(&mut m, 2, -1);
        }
        CartanType::G2 => {
            if l != 2 {
                return Err(bad());
            }
            m[0][0] = 2;
            m[1][1] = 6;
            chain(&mut m, 0, -3);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// `A[i][j] = 2(α_i, α_j) / (α_j, α_j)`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty")
    }

    /// `rank + #roots`.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }
}

pub fn positive_roots(t: CartanType, rank: usize) -> Result<RootSystem> {
    let b = inner_products(t, rank)?;
    let a: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| 2 * b[i][j] / b[j][j]).collect())
        .collect();
    let simple: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                // string β − pα_i, ..., β + qα_i with p − q = ⟨β, α_i∨⟩
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * a[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    Ok(RootSystem {
        cartan_type: t,
        rank,
        cartan_matrix: a,
        positive_roots: roots,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub dims: BTreeMap<i32, usize>,
    /// For each crossed node, the number of degree 1 roots with coefficient 1
    /// on that node (the dimension of the matching degree −1 component).
    pub minus_one_components: BTreeMap<usize, usize>,
    /// Crossed degree of the highest root.
    pub kind: i32,
}

pub fn graded_dims(rs: &RootSystem, crossed: &[usize]) -> Result<GradedDims> {
    if crossed.is_empty() {
        return Err(GlaError::BadParameters(
            "at least one crossed node is required".into(),
        ));
    }
    if let Some(&c) = crossed.iter().find(|&&c| c == 0 || c > rs.rank) {
        return Err(GlaError::BadParameters(format!(
            "node {c} is outside 1..={}",
            rs.rank
        )));
    }
    let degree = |r: &[i64]| -> i32 { crossed.iter().map(|&c| r[c - 1] as i32).sum() };
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank);
    for r in &rs.positive_roots {
        let d = degree(r);
        // α and −α
        *dims.entry(d).or_insert(0) += 1;
        *dims.entry(-d).or_insert(0) += 1;
    }
    let minus_one_components = crossed
        .iter()
        .map(|&c| {
            let n = rs
                .positive_roots
                .iter()
                .filter(|r| degree(r) == 1 && r[c - 1] == 1)
                .count();
            (c, n)
        })
        .collect();
    Ok(GradedDims {
        dims,
        minus_one_components,
        kind: degree(rs.highest_root()),
    })
}

/// Module classes of the degree −1 part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleClass {
    SI,
    SII,
    SIII,
    #[serde(rename = "unclassified")]
    Unclassified,
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleClass::SI => "SI",
            ModuleClass::SII => "SII",
            ModuleClass::SIII => "SIII",
            ModuleClass::Unclassified => "unclassified",
        })
    }
}

/// Expected classification data for a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExpectation {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub crossed: Vec<usize>,
    pub satake: String,
    pub dims: BTreeMap<i32, usize>,
    pub kind: i32,
    pub signature: (usize, usize),
    pub module_class: ModuleClass,
}

pub fn table_expectation(spec: &FamilySpec) -> Result<TableExpectation> {
    spec.validate()?;
    let (t, rank, crossed, satake, signature, class) = match *spec {
        FamilySpec::Hk { algebra, p, q } => {
            let n = 2 * p + q;
            match algebra {
                AlgebraTag::Complex => {
                    let l = n - 1;
                    let satake = if p == 1 {
                        format!("AIV{l}")
                    } else if q == 0 {
                        format!("AIIIb{l}")
                    } else {
                        format!("AIIIa{l},{p}")
                    };
                    (
                        CartanType::A,
                        l,
                        vec![1, l],
                        satake,
                        (2 * p + 2 * q - 2, 2 * p - 2),
                        ModuleClass::SII,
                    )
                }
                AlgebraTag::SplitComplex => {
                    let l = n - 1;
                    (
                        CartanType::A,
                        l,
                        vec![1, l],
                        format!("AI{l}"),
                        (n - 2, n - 2),
                        ModuleClass::SIII,
                    )
                }
                AlgebraTag::Quaternion => {
                    let satake = if q == 0 {
                        format!("CIIb{n}")
                    } else {
                        format!("CIIa{n},{p}")
                    };
                    (
                        CartanType::C,
                        n,
                        vec![2],
                        satake,
                        (4 * p + 4 * q - 4, 4 * p - 4),
                        ModuleClass::SI,
                    )
                }
                AlgebraTag::SplitQuaternion => (
                    CartanType::C,
                    n,
                    vec![2],
                    format!("CI{n}"),
                    (2 * n - 4, 2 * n - 4),
                    ModuleClass::SI,
                ),
                other => {
                    return Err(GlaError::BadParameters(format!(
                        "no matrix family over {other}"
                    )))
                }
            }
        }
        FamilySpec::Bi { l } => (
            CartanType::B,
            l,
            vec![1, l],
            format!("BI{l},{l}"),
            (l - 1, l - 1),
            ModuleClass::SIII,
        ),
        FamilySpec::Octonionic { split: false } => (
            CartanType::F4,
            4,
            vec![4],
            "FII".into(),
            (8, 0),
            ModuleClass::SI,
        ),
        FamilySpec::Octonionic { split: true } => (
            CartanType::F4,
            4,
            vec![4],
            "FI".into(),
            (4, 4),
            ModuleClass::SI,
        ),
        FamilySpec::G2 => (
            CartanType::G2,
            2,
            vec![1, 2],
            "G2(2)".into(),
            (1, 1),
            ModuleClass::SIII,
        ),
        FamilySpec::Counterexample => {
            return Err(GlaError::BadParameters(
                "the counterexample has no table row".into(),
            ));
        }
    };
    let rs = positive_roots(t, rank)?;
    let g = graded_dims(&rs, &crossed)?;
    Ok(TableExpectation {
        cartan_type: t,
        rank,
        crossed,
        satake,
        dims: g.dims,
        kind: g.kind,
        signature,
        module_class: class,
    })
}

/// Every family within the parameter caps that has a table row.
///
/// Split rows only depend on `2p + q`; each is listed once, with `q ≤ 1`.
pub fn table_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for algebra in [
        AlgebraTag::Complex,
        AlgebraTag::SplitComplex,
        AlgebraTag::Quaternion,
        AlgebraTag::SplitQuaternion,
    ] {
        let split = matches!(
            algebra,
            AlgebraTag::SplitComplex | AlgebraTag::SplitQuaternion
        );
        for p in 1..=MAX_MATRIX_SIZE / 2 {
            for q in 0..=MAX_MATRIX_SIZE - 2 * p {
                if split && q > 1 {
                    continue;
                }
                let s = FamilySpec::Hk { algebra, p, q };
                if s.validate().is_ok() {
                    out.push(s);
                }
            }
        }
    }
    out.extend((2..=MAX_BI_RANK).map(|l| FamilySpec::Bi { l }));
    out.push(FamilySpec::Octonionic { split: false });
    out.push(FamilySpec::Octonionic { split: true });
    out.push(FamilySpec::G2);
    out
}

/// First table row (within the caps) with these graded dims, signature
/// (in either order, since `g` and `−g` have the same prolongation) and
/// module class.
pub fn match_table_row(
    dims: &BTreeMap<i32, usize>,
    signature: (usize, usize),
    class: ModuleClass,
) -> Option<FamilySpec> {
    table_families().into_iter().find(|s| {
        table_expectation(s).is_ok_and(|e| {
            e.dims == *dims
                && e.module_class == class
                && (e.signature == signature || e.signature == (signature.1, signature.0))
        })
    })
}
