//! JSON formats for the three kinds of objects and their morphisms.
//!
//! Groups travel as full multiplication tables, algebras as sparse
//! bracket tables with rationals rendered `"p/q"` (or `"p"` when the
//! denominator is one), precrossed modules as a pair of groups with a
//! boundary image list and an action table.  Parsing runs the full
//! structural validation of the owning module, so a value that comes
//! back `Ok` is a usable object.

use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fingrp::{FiniteGroup, GroupError, GroupHom};
use crate::leibniz::{AlgebraError, AlgebraHom, LeibnizAlgebra};
use crate::linalg::{RatMatrix, Rational};
use crate::xmod::{PrecrossedModule, XModHom, XmodError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Xmod(#[from] XmodError),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Multiplication table group: `table[a][b]` is the index of `a * b`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupData {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// One bracket `[e_left, e_right] = sum value[k] e_k`; absent pairs are
/// zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraData {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketEntry>,
}

/// Precrossed module: boundary as an image list on `T`, action as a
/// table `action[g][t]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PxmData {
    #[serde(rename = "T")]
    pub t: GroupData,
    #[serde(rename = "G")]
    pub g: GroupData,
    pub boundary: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupMapData {
    pub source: GroupData,
    pub target: GroupData,
    pub images: Vec<usize>,
}

/// Linear map on basis coordinates: `matrix` has one row per target
/// basis vector, one column per source basis vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraMapData {
    pub source: AlgebraData,
    pub target: AlgebraData,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PxmMapData {
    pub source: PxmData,
    pub target: PxmData,
    pub top_images: Vec<usize>,
    pub base_images: Vec<usize>,
}

impl GroupData {
    pub fn build(&self) -> Result<Arc<FiniteGroup>, IoError> {
        if self.order != self.table.len() {
            return Err(IoError::Invalid(format!(
                "declared order {} does not match table height {}",
                self.order,
                self.table.len()
            )));
        }
        if let Some(names) = &self.names {
            if names.len() != self.order {
                return Err(IoError::Invalid(format!(
                    "expected {} names, got {}",
                    self.order,
                    names.len()
                )));
            }
        }
        Ok(FiniteGroup::from_table(self.table.clone(), self.names.clone())?)
    }

    pub fn of(g: &FiniteGroup) -> Self {
        let order = g.order();
        let table =
            g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect();
        GroupData { order, table, names: g.names().map(<[String]>::to_vec) }
    }
}

impl AlgebraData {
    pub fn build(&self) -> Result<Arc<LeibnizAlgebra>, IoError> {
        let n = self.dim;
        if let Some(basis) = &self.basis {
            if basis.len() != n {
                return Err(IoError::Invalid(format!(
                    "expected {} basis names, got {}",
                    n,
                    basis.len()
                )));
            }
        }
        let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
        for e in &self.brackets {
            if e.left >= n || e.right >= n {
                return Err(IoError::Invalid(format!(
                    "bracket indices ({}, {}) out of range for dimension {n}",
                    e.left, e.right
                )));
            }
            if e.value.len() != n {
                return Err(IoError::Invalid(format!(
                    "bracket ({}, {}) has {} coordinates, expected {n}",
                    e.left,
                    e.right,
                    e.value.len()
                )));
            }
            table[e.left][e.right] = e.value.clone();
        }
        Ok(LeibnizAlgebra::new(n, table, self.basis.clone())?)
    }

    pub fn of(g: &LeibnizAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = g.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    brackets.push(BracketEntry { left: i, right: j, value: v.to_vec() });
                }
            }
        }
        AlgebraData { dim: n, basis: g.names().map(<[String]>::to_vec), brackets }
    }
}

impl PxmData {
    pub fn build(&self) -> Result<Arc<PrecrossedModule>, IoError> {
        let t = self.t.build()?;
        let g = self.g.build()?;
        let boundary = GroupHom::new(Arc::clone(&t), Arc::clone(&g), self.boundary.clone())?;
        Ok(PrecrossedModule::new(t, g, boundary, self.action.clone())?)
    }

    pub fn of(x: &PrecrossedModule) -> Self {
        PxmData {
            t: GroupData::of(x.top()),
            g: GroupData::of(x.base()),
            boundary: (0..x.top().order()).map(|t| x.boundary().apply(t)).collect(),
            action: x.action_rows().to_vec(),
        }
    }
}

impl GroupMapData {
    pub fn build(&self) -> Result<GroupHom, IoError> {
        let s = self.source.build()?;
        let t = self.target.build()?;
        Ok(GroupHom::new(s, t, self.images.clone())?)
    }

    pub fn of(f: &GroupHom) -> Self {
        GroupMapData {
            source: GroupData::of(f.source()),
            target: GroupData::of(f.target()),
            images: f.images().to_vec(),
        }
    }
}

impl AlgebraMapData {
    pub fn build(&self) -> Result<AlgebraHom, IoError> {
        let s = self.source.build()?;
        let t = self.target.build()?;
        if self.matrix.len() != t.dim() {
            return Err(IoError::Invalid(format!(
                "matrix has {} rows, expected the target dimension {}",
                self.matrix.len(),
                t.dim()
            )));
        }
        let m = RatMatrix::from_rows(self.matrix.clone(), s.dim())
            .map_err(|e| IoError::Invalid(e.to_string()))?;
        Ok(AlgebraHom::new(s, t, m)?)
    }

    pub fn of(f: &AlgebraHom) -> Self {
        let m = f.matrix();
        let rows = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m.get(i, j).clone()).collect())
            .collect();
        AlgebraMapData {
            source: AlgebraData::of(f.source()),
            target: AlgebraData::of(f.target()),
            matrix: rows,
        }
    }
}

impl PxmMapData {
    pub fn build(&self) -> Result<XModHom, IoError> {
        let s = self.source.build()?;
        let t = self.target.build()?;
        let f1 = GroupHom::new(
            Arc::clone(s.top()),
            Arc::clone(t.top()),
            self.top_images.clone(),
        )?;
        let f0 = GroupHom::new(
            Arc::clone(s.base()),
            Arc::clone(t.base()),
            self.base_images.clone(),
        )?;
        Ok(XModHom::new(s, t, f1, f0)?)
    }

    pub fn of(f: &XModHom) -> Self {
        PxmMapData {
            source: PxmData::of(f.source()),
            target: PxmData::of(f.target()),
            top_images: f.top_map().images().to_vec(),
            base_images: f.base_map().images().to_vec(),
        }
    }
}

pub fn parse_group(s: &str) -> Result<Arc<FiniteGroup>, IoError> {
    serde_json::from_str::<GroupData>(s)?.build()
}

pub fn parse_algebra(s: &str) -> Result<Arc<LeibnizAlgebra>, IoError> {
    serde_json::from_str::<AlgebraData>(s)?.build()
}

pub fn parse_pxm(s: &str) -> Result<Arc<PrecrossedModule>, IoError> {
    serde_json::from_str::<PxmData>(s)?.build()
}

pub fn parse_group_map(s: &str) -> Result<GroupHom, IoError> {
    serde_json::from_str::<GroupMapData>(s)?.build()
}

pub fn parse_algebra_map(s: &str) -> Result<AlgebraHom, IoError> {
    serde_json::from_str::<AlgebraMapData>(s)?.build()
}

pub fn parse_pxm_map(s: &str) -> Result<XModHom, IoError> {
    serde_json::from_str::<PxmMapData>(s)?.build()
}

/// Canonical JSON text: object keys sorted, rationals as canonical
/// strings, no insignificant whitespace.  Two equal values give byte
/// identical output.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, IoError> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string(&v)?)
}

/// Indented rendering of the same canonical value.
pub fn to_pretty_json<T: Serialize>(value: &T) -> Result<String, IoError> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

/// Parses a rational in the wire syntax.
pub fn parse_rational(s: &str) -> Result<Rational, IoError> {
    Rational::from_str(s).map_err(|e| IoError::Invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{algebras, groups, pxms};

    #[test]
    fn group_round_trip_preserves_the_table() {
        let g = groups::symmetric(3);
        let data = GroupData::of(&g);
        let text = to_canonical_json(&data).unwrap();
        let back = parse_group(&text).unwrap();
        assert_eq!(back.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(back.mul(a, b), g.mul(a, b));
            }
        }
        assert_eq!(back.name(1), g.name(1));
    }

    #[test]
    fn algebra_round_trip_preserves_brackets() {
        let g = algebras::sl2();
        let text = to_canonical_json(&AlgebraData::of(&g)).unwrap();
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(back.bracket_basis(i, j), g.bracket_basis(i, j));
            }
        }
        assert_eq!(back.names(), g.names());
    }

    #[test]
    fn sparse_brackets_default_to_zero() {
        let text = r#"{"dim": 2, "brackets": [{"left": 0, "right": 0, "value": ["0", "1"]}]}"#;
        let g = parse_algebra(text).unwrap();
        assert!(g.bracket_basis(1, 0).iter().all(Rational::is_zero));
        assert_eq!(g.bracket_basis(0, 0)[1], Rational::one());
    }

    #[test]
    fn rationals_parse_in_both_spellings() {
        let text =
            r#"{"dim": 1, "brackets": [{"left": 0, "right": 0, "value": ["-3/2"]}]}"#;
        let g = parse_algebra(text).unwrap();
        assert_eq!(g.bracket_basis(0, 0)[0].to_string(), "-3/2");
        assert!(parse_rational("5").is_ok());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn pxm_round_trip_preserves_structure() {
        let x = pxms::conjugation(&groups::symmetric(3));
        let text = to_canonical_json(&PxmData::of(&x)).unwrap();
        let back = parse_pxm(&text).unwrap();
        assert_eq!(back.top().order(), 6);
        assert_eq!(back.base().order(), 6);
        assert!(back.is_crossed());
        assert_eq!(back.act(2, 3), x.act(2, 3));
    }

    #[test]
    fn map_round_trips_validate_the_morphism_laws() {
        let s3 = groups::symmetric(3);
        let (q, pi) = s3.quotient(&s3.derived_subgroup()).unwrap();
        assert_eq!(q.order(), 2);
        let text = to_canonical_json(&GroupMapData::of(&pi)).unwrap();
        let back = parse_group_map(&text).unwrap();
        assert!(back.is_surjective());

        let g = algebras::heisenberg3();
        let (_, proj) = g.quotient(&g.centre()).unwrap();
        let text = to_canonical_json(&AlgebraMapData::of(&proj)).unwrap();
        let back = parse_algebra_map(&text).unwrap();
        assert!(back.is_surjective());
        assert_eq!(back.kernel().dim(), 1);

        let x = pxms::conjugation(&s3);
        let s = x.normal_sub_closure(&[1], &[]);
        let (_, hom) = x.quotient(&s).unwrap();
        let text = to_canonical_json(&PxmMapData::of(&hom)).unwrap();
        let back = parse_pxm_map(&text).unwrap();
        assert!(back.is_surjective());
    }

    #[test]
    fn structural_errors_carry_a_locus() {
        let bad = r#"{"order": 2, "table": [[0, 1]]}"#;
        let err = parse_group(bad).unwrap_err();
        assert!(err.to_string().contains("table height"));

        let bad = r#"{"dim": 2, "brackets": [{"left": 5, "right": 0, "value": ["0", "0"]}]}"#;
        let err = parse_algebra(bad).unwrap_err();
        assert!(err.to_string().contains("out of range"));

        let bad = r#"{"dim": 1, "unknown_field": 3}"#;
        assert!(parse_algebra(bad).is_err());

        let bad = r#"{"order": 1, "table": [[0]], "names": ["a", "b"]}"#;
        assert!(parse_group(bad).is_err());
    }

    #[test]
    fn non_homomorphism_images_are_rejected() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let data = GroupMapData {
            source: GroupData::of(&c4),
            target: GroupData::of(&c2),
            images: vec![0, 1, 0, 0],
        };
        assert!(data.build().is_err());
    }

    #[test]
    fn canonical_json_sorts_keys_and_is_stable() {
        let g = algebras::sl2();
        let a = to_canonical_json(&AlgebraData::of(&g)).unwrap();
        let b = to_canonical_json(&AlgebraData::of(&g)).unwrap();
        assert_eq!(a, b);
        let brackets_pos = a.find("\"brackets\"").unwrap();
        let dim_pos = a.find("\"dim\"").unwrap();
        assert!(brackets_pos < dim_pos, "keys must come out sorted");
    }
}
