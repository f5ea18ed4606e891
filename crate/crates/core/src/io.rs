//! JSON file formats for algebras and forms.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{GlaError, Result};
use crate::gla::{GradedAlgebra, SymBilinearForm};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// `[i, j, [[k, "num/den"], ...]]` with `i < j`.
pub type BracketEntry = (usize, usize, Vec<(usize, Rational)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub labels: Vec<String>,
    pub degrees: Vec<i32>,
    pub brackets: Vec<BracketEntry>,
}

impl From<&GradedAlgebra> for AlgebraFile {
    fn from(a: &GradedAlgebra) -> Self {
        Self {
            name: a.name().to_string(),
            labels: a.labels().to_vec(),
            degrees: a.degrees().to_vec(),
            brackets: a
                .brackets()
                .iter()
                .map(|(&(i, j), v)| (i, j, v.clone()))
                .collect(),
        }
    }
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<GradedAlgebra> {
        let mut a = GradedAlgebra::new(self.name, self.labels, self.degrees)?;
        for (i, j, v) in self.brackets {
            if i >= j {
                return Err(GlaError::InvalidAlgebra(format!(
                    "bracket entry [{i},{j}] must have i < j"
                )));
            }
            let mut v = v;
            v.sort_by_key(|e| e.0);
            if v.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(GlaError::InvalidAlgebra(format!(
                    "duplicate target index in bracket [{i},{j}]"
                )));
            }
            a.set_bracket(i, j, v)?;
        }
        Ok(a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub algebra: String,
    pub degree_minus1_indices: Vec<usize>,
    pub matrix: Vec<Vec<Rational>>,
}

impl From<&SymBilinearForm> for FormFile {
    fn from(g: &SymBilinearForm) -> Self {
        Self {
            algebra: g.algebra_name().to_string(),
            degree_minus1_indices: g.indices().to_vec(),
            matrix: g.matrix().to_rows(),
        }
    }
}

impl FormFile {
    /// Builds the form without checking it against an algebra.
    pub fn into_form(self) -> Result<SymBilinearForm> {
        let n = self.matrix.len();
        if self.matrix.iter().any(|r| r.len() != n) {
            return Err(GlaError::InvalidAlgebra("form matrix is not square".into()));
        }
        Ok(SymBilinearForm::from_parts(
            self.algebra,
            self.degree_minus1_indices,
            RationalMatrix::from_rows(self.matrix),
        ))
    }

    /// Builds the form and validates it against `a`.
    pub fn into_form_for(self, a: &GradedAlgebra) -> Result<SymBilinearForm> {
        let g = self.into_form()?;
        g.validate(a)?;
        Ok(g)
    }
}

fn parse_error(e: serde_json::Error) -> GlaError {
    GlaError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn from_json_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(parse_error)
}

pub fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable value")
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    from_json_str(&std::fs::read_to_string(path)?)
}

pub fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<()> {
    let mut s = to_json_string(v);
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

pub fn serialize_algebra(a: &GradedAlgebra) -> String {
    to_json_string(&AlgebraFile::from(a))
}

pub fn deserialize_algebra(s: &str) -> Result<GradedAlgebra> {
    from_json_str::<AlgebraFile>(s)?.into_algebra()
}

pub fn serialize_form(g: &SymBilinearForm) -> String {
    to_json_string(&FormFile::from(g))
}

pub fn deserialize_form(s: &str) -> Result<SymBilinearForm> {
    from_json_str::<FormFile>(s)?.into_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gla::tests::heisenberg;

    #[test]
    fn algebra_round_trip() {
        let h = heisenberg();
        let s = serialize_algebra(&h);
        assert_eq!(deserialize_algebra(&s).unwrap(), h);
    }

    #[test]
    fn spec_shaped_input() {
        let s = r#"{"name":"h3","labels":["X","Y","Z"],"degrees":[-1,-1,-2],"brackets":[[0,1,[[2,"1"]]]]}"#;
        let a = deserialize_algebra(s).unwrap();
        assert_eq!(a.bracket_basis(1, 0), vec![(2, Rational::from_integer(-1))]);
    }

    #[test]
    fn form_round_trip() {
        let h = heisenberg();
        let g = SymBilinearForm::new(&h, RationalMatrix::from_i64(&[&[2, 1], &[1, -3]])).unwrap();
        let back = FormFile::from(&g);
        let s = to_json_string(&back);
        assert!(s.contains("\"-3\""));
        assert_eq!(
            from_json_str::<FormFile>(&s)
                .unwrap()
                .into_form_for(&h)
                .unwrap(),
            g
        );
    }

    #[test]
    fn parse_error_has_position() {
        let s = "{\n  \"name\": \"x\",\n  \"labels\": [\n}";
        match deserialize_algebra(s) {
            Err(GlaError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        let bad_rational =
            r#"{"name":"x","labels":["a","b"],"degrees":[-1,-2],"brackets":[[0,1,[[1,"1/0"]]]]}"#;
        assert!(matches!(
            deserialize_algebra(bad_rational),
            Err(GlaError::Parse { .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        let swapped = r#"{"name":"x","labels":["a","b"],"degrees":[-1,-1],"brackets":[[1,0,[]]]}"#;
        assert!(matches!(
            deserialize_algebra(swapped),
            Err(GlaError::InvalidAlgebra(_))
        ));
        let short = r#"{"name":"x","labels":["a"],"degrees":[-1,-1],"brackets":[]}"#;
        assert!(deserialize_algebra(short).is_err());
    }
}
