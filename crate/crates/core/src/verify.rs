//! End-to-end reproduction of the classification table.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, AnalysisReport};
use crate::composition::AlgebraTag;
use crate::error::Result;
use crate::families::{build, FamilySpec};
use crate::prolongation::full_prolongation;
use crate::roots::{table_expectation, ModuleClass};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowChecks {
    pub kind: bool,
    pub signature: bool,
    pub prolong_dims_match_oracle: bool,
    pub semisimple: bool,
    pub simple: bool,
    pub module_class: bool,
}

impl RowChecks {
    pub fn all(&self) -> bool {
        self.kind
            && self.signature
            && self.prolong_dims_match_oracle
            && self.semisimple
            && self.simple
            && self.module_class
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub dims: Option<BTreeMap<i32, usize>>,
    pub kind: i32,
    pub signature: (usize, usize),
    pub semisimple: bool,
    pub simple: bool,
    pub module_class: Option<ModuleClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyTableRow {
    pub family: String,
    pub params: FamilySpec,
    pub checks: RowChecks,
    pub pass: bool,
    pub expected: Option<Expected>,
    pub observed: Option<AnalysisReport>,
    pub error: Option<String>,
}

impl VerifyTableRow {
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match (&self.observed, &self.error) {
            (_, Some(e)) => format!("{status} {} error: {e}", self.family),
            (Some(o), None) => format!(
                "{status} {} dim={} kind={} signature=({},{}) class={} simple={}",
                self.family,
                o.dims.values().sum::<usize>(),
                o.kind,
                o.signature.0,
                o.signature.1,
                o.module_class,
                o.simple
            ),
            (None, None) => format!("{status} {}", self.family),
        }
    }
}

/// Rows checked by `verify-table`: smallest parameters of every family, a few
/// larger instances, and the non-semisimple example.
pub fn verify_table_families() -> Vec<FamilySpec> {
    use AlgebraTag::*;
    vec![
        FamilySpec::Hk {
            algebra: Complex,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: Complex,
            p: 2,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: SplitComplex,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: SplitComplex,
            p: 2,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: Quaternion,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: SplitQuaternion,
            p: 1,
            q: 1,
        },
        FamilySpec::Hk {
            algebra: Quaternion,
            p: 1,
            q: 2,
        },
        FamilySpec::Bi { l: 2 },
        FamilySpec::Bi { l: 3 },
        FamilySpec::Octonionic { split: false },
        FamilySpec::Octonionic { split: true },
        FamilySpec::G2,
        FamilySpec::Counterexample,
    ]
}

fn expected_for(spec: &FamilySpec) -> Result<Expected> {
    if let FamilySpec::Counterexample = spec {
        return Ok(Expected {
            dims: None,
            kind: 3,
            signature: (2, 2),
            semisimple: false,
            simple: false,
            module_class: None,
        });
    }
    let e = table_expectation(spec)?;
    Ok(Expected {
        dims: Some(e.dims),
        kind: e.kind,
        signature: e.signature,
        semisimple: true,
        simple: true,
        module_class: Some(e.module_class),
    })
}

fn run(spec: &FamilySpec) -> Result<(Expected, AnalysisReport)> {
    let expected = expected_for(spec)?;
    let b = build(spec)?;
    let r = full_prolongation(&b.m, &b.form)?;
    let report = analyze(&r.full, &r.form)?;
    Ok((expected, report))
}

pub fn verify_row(spec: &FamilySpec) -> VerifyTableRow {
    let family = spec.to_string();
    match run(spec) {
        Ok((e, o)) => {
            let dims_ok = match &e.dims {
                Some(d) => *d == o.dims,
                // no oracle: the first prolongation must be at least 2-dimensional
                None => o.dims.get(&1).copied().unwrap_or(0) >= 2,
            };
            let checks = RowChecks {
                kind: e.kind == o.kind,
                signature: e.signature == o.signature,
                prolong_dims_match_oracle: dims_ok,
                semisimple: e.semisimple == o.semisimple,
                simple: e.simple == o.simple,
                module_class: e.module_class.is_none_or(|c| c == o.module_class),
            };
            VerifyTableRow {
                family,
                params: *spec,
                pass: checks.all(),
                checks,
                expected: Some(e),
                observed: Some(o),
                error: None,
            }
        }
        Err(err) => VerifyTableRow {
            family,
            params: *spec,
            checks: RowChecks::default(),
            pass: false,
            expected: None,
            observed: None,
            error: Some(err.to_string()),
        },
    }
}

/// All rows, computed concurrently, in the order of [`verify_table_families`].
pub fn verify_table() -> Vec<VerifyTableRow> {
    verify_table_families().par_iter().map(verify_row).collect()
}
