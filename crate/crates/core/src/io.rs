//! JSON encodings of matroids, permutations, interval bounds, families,
//! coefficient tables, polynomials and subdivision witnesses.
//!
//! Matroids are read from any of four presentations (`bases`,
//! `rank_table`, `lines`, `matrix`) and always written as bases, so a
//! written document reads back to the same matroid and writes identically.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::ecodim::CoeffTable;
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::linalg::{parse_rational, RealizationMatrix};
use crate::matroid::{LinePresentation, Matroid};
use crate::positroid::{
    positroid_from_interval_ranks, positroid_from_permutation, AffinePermutation,
    EssentialPosition, IntervalRanks,
};
use crate::subset::GroundSubset;
use crate::valuative::{BiPoly, SubdivisionWitness, TriPoly};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn subset_from_elements(n: usize, elements: &[usize]) -> Result<GroundSubset> {
    if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > n) {
        return Err(parse_err(format!("element {bad} is outside 1..={n}")));
    }
    let s = GroundSubset::from_elements(elements.iter().copied());
    if s.len() != elements.len() {
        return Err(parse_err(format!("repeated element in {elements:?}")));
    }
    Ok(s)
}

/// Exact integers are written as JSON numbers when they fit in 64 bits and
/// as decimal strings otherwise.
pub fn bigint_to_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

pub fn bigint_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .or_else(|| num.as_u64().map(BigInt::from))
            .ok_or_else(|| parse_err(format!("{num} is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("`{s}` is not an integer"))),
        other => Err(parse_err(format!("expected an integer, found {other}"))),
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bases: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank_table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lines: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<Value>,
}

impl MatroidDoc {
    fn build(self) -> Result<Matroid> {
        let given = [
            self.bases.is_some(),
            self.rank_table.is_some(),
            self.lines.is_some(),
            self.matrix.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(parse_err(
                "a matroid needs exactly one of `bases`, `rank_table`, `lines`, `matrix`",
            ));
        }
        if self.field.is_some() && self.matrix.is_none() {
            return Err(parse_err("`field` only applies to `matrix`"));
        }
        let m = if let Some(bases) = self.bases {
            let n = self.n.ok_or_else(|| parse_err("`bases` needs `n`"))?;
            let bases = bases
                .iter()
                .map(|b| subset_from_elements(n, b))
                .collect::<Result<Vec<_>>>()?;
            Matroid::from_bases(n, &bases)?
        } else if let Some(table) = self.rank_table {
            let n = match self.n {
                Some(n) => n,
                None => table.len().trailing_zeros() as usize,
            };
            Matroid::from_rank_values(n, &table)?
        } else if let Some(lines) = self.lines {
            let n = self.n.ok_or_else(|| parse_err("`lines` needs `n`"))?;
            let lines = lines
                .iter()
                .map(|l| subset_from_elements(n, l))
                .collect::<Result<Vec<_>>>()?;
            Matroid::rank3_from_lines(&LinePresentation::new(n, lines))?
        } else {
            let rows = self.matrix.expect("checked above");
            let matrix = matrix_from_rows(rows, self.field.as_ref())?;
            if let Some(n) = self.n {
                if n != matrix.cols() {
                    return Err(parse_err(format!(
                        "`n` = {n} but the matrix has {} columns",
                        matrix.cols()
                    )));
                }
            }
            Matroid::from_matrix(&matrix)?
        };
        if let Some(k) = self.rank {
            if k != m.rank() {
                return Err(parse_err(format!(
                    "declared rank {k}, computed {}",
                    m.rank()
                )));
            }
        }
        Ok(m)
    }
}

fn matrix_from_rows(rows: Vec<Vec<Value>>, field: Option<&Value>) -> Result<RealizationMatrix> {
    match field {
        None => rational_matrix(rows),
        Some(Value::String(s)) if s == "Q" => rational_matrix(rows),
        Some(Value::Number(p)) => {
            let p = p
                .as_u64()
                .ok_or_else(|| parse_err(format!("field {p} is not a prime")))?;
            let rows = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            bigint_from_value(v)?
                                .to_i64()
                                .ok_or_else(|| parse_err(format!("entry {v} is too large")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            RealizationMatrix::over_prime(p, rows)
        }
        Some(other) => Err(parse_err(format!(
            "field must be a prime or \"Q\", found {other}"
        ))),
    }
}

fn rational_matrix(rows: Vec<Vec<Value>>) -> Result<RealizationMatrix> {
    let rows = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    Value::String(s) => parse_rational(s),
                    other => Ok(num_rational::BigRational::from_integer(bigint_from_value(
                        other,
                    )?)),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RealizationMatrix::over_rationals(rows)
}

pub fn matroid_from_value(v: &Value) -> Result<Matroid> {
    let doc: MatroidDoc = serde_json::from_value(v.clone())?;
    doc.build()
}

pub fn matroid_from_json(text: &str) -> Result<Matroid> {
    matroid_from_value(&serde_json::from_str(text)?)
}

/// `{"n", "rank", "bases"}` with bases in mask order.
pub fn matroid_to_value(m: &Matroid) -> Value {
    let doc = MatroidDoc {
        n: Some(m.n()),
        rank: Some(m.rank()),
        bases: Some(m.bases().into_iter().map(|b| b.to_vec()).collect()),
        ..MatroidDoc::default()
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

pub fn matroid_to_json(m: &Matroid) -> String {
    serde_json::to_string(&matroid_to_value(m)).expect("plain data serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermutationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    n: Option<usize>,
    window: Vec<i64>,
}

pub fn permutation_from_value(v: &Value) -> Result<AffinePermutation> {
    let doc: PermutationDoc = serde_json::from_value(v.clone())?;
    if let Some(n) = doc.n {
        if n != doc.window.len() {
            return Err(parse_err(format!(
                "`n` = {n} but the window has {} entries",
                doc.window.len()
            )));
        }
    }
    AffinePermutation::new(doc.window)
}

pub fn permutation_to_value(p: &AffinePermutation) -> Value {
    json!({ "n": p.n(), "window": p.window() })
}

/// Parses `"3,6,5,8,7,10"`.
pub fn parse_window(text: &str) -> Result<AffinePermutation> {
    let window = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(format!("`{}` is not an integer", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    AffinePermutation::new(window)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundDoc {
    interval: [i64; 2],
    rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalRanksDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    bounds: Vec<BoundDoc>,
}

pub fn interval_ranks_from_value(v: &Value) -> Result<IntervalRanks> {
    let doc: IntervalRanksDoc = serde_json::from_value(v.clone())?;
    let mut r = IntervalRanks::new(doc.n);
    if let Some(k) = doc.rank {
        r = r.bound(1, doc.n as i64, k)?;
    }
    for b in doc.bounds {
        r = r.bound(b.interval[0], b.interval[1], b.rank)?;
    }
    Ok(r)
}

pub fn essential_set_to_value(ess: &[EssentialPosition]) -> Value {
    Value::Array(
        ess.iter()
            .map(|e| {
                json!({
                    "interval": [e.interval.start(), e.interval.end()],
                    "rank": e.rank_bound,
                })
            })
            .collect(),
    )
}

pub fn family_from_value(n: usize, v: &Value) -> Result<SubsetFamily> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct FamilyDoc {
        #[serde(default)]
        n: Option<usize>,
        sets: Vec<Vec<usize>>,
    }
    let doc: FamilyDoc = serde_json::from_value(v.clone())?;
    if let Some(m) = doc.n {
        if m != n {
            return Err(parse_err(format!(
                "family is on {m} elements, the matroid on {n}"
            )));
        }
    }
    let sets = doc
        .sets
        .iter()
        .map(|s| subset_from_elements(n, s))
        .collect::<Result<Vec<_>>>()?;
    SubsetFamily::new(n, sets)
}

pub fn family_to_value(f: &SubsetFamily) -> Value {
    json!({
        "n": f.n(),
        "sets": f.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
    })
}

pub fn coeff_table_to_value(t: &CoeffTable) -> Value {
    Value::Array(
        t.iter()
            .map(|(s, v)| json!({ "set": s.to_vec(), "value": bigint_to_value(v) }))
            .collect(),
    )
}

pub fn coeff_table_from_value(n: usize, v: &Value) -> Result<CoeffTable> {
    let items = v
        .as_array()
        .ok_or_else(|| parse_err("coefficient table must be a list"))?;
    let entries = items
        .iter()
        .map(|item| {
            let set: Vec<usize> = serde_json::from_value(
                item.get("set")
                    .cloned()
                    .ok_or_else(|| parse_err("entry lacks `set`"))?,
            )?;
            let value = bigint_from_value(
                item.get("value")
                    .ok_or_else(|| parse_err("entry lacks `value`"))?,
            )?;
            Ok((subset_from_elements(n, &set)?, value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable::from_entries(entries))
}

pub fn tripoly_to_value(p: &TriPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((x, y, z), c)| json!({ "x": x, "y": y, "z": z, "coeff": bigint_to_value(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn tripoly_from_value(v: &Value) -> Result<TriPoly> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("polynomial needs a `terms` list"))?;
    let mut p = TriPoly::zero();
    for t in terms {
        let exp = |key: &str| -> Result<u32> {
            t.get(key)
                .and_then(Value::as_u64)
                .map(|e| e as u32)
                .ok_or_else(|| parse_err(format!("term lacks exponent `{key}`")))
        };
        let coeff = bigint_from_value(
            t.get("coeff")
                .ok_or_else(|| parse_err("term lacks `coeff`"))?,
        )?;
        p.add_term(exp("x")?, exp("y")?, exp("z")?, coeff);
    }
    Ok(p)
}

pub fn bipoly_to_value(p: &BiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((x, y), c)| json!({ "x": x, "y": y, "coeff": bigint_to_value(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn witness_from_value(v: &Value) -> Result<SubdivisionWitness> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("witness must be an object"))?;
    if let Some(extra) = obj
        .keys()
        .find(|k| !["name", "parent", "faces"].contains(&k.as_str()))
    {
        return Err(parse_err(format!("unknown witness field `{extra}`")));
    }
    let parent = matroid_from_value(
        obj.get("parent")
            .ok_or_else(|| parse_err("witness lacks `parent`"))?,
    )?;
    let faces = obj
        .get("faces")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("witness needs a `faces` list"))?
        .iter()
        .map(|face| {
            let m = matroid_from_value(
                face.get("matroid")
                    .ok_or_else(|| parse_err("face lacks `matroid`"))?,
            )?;
            let dim = face
                .get("dim")
                .and_then(Value::as_u64)
                .ok_or_else(|| parse_err("face lacks `dim`"))? as usize;
            Ok((m, dim))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubdivisionWitness {
        parent,
        internal_faces: faces,
    })
}

pub fn witness_to_value(w: &SubdivisionWitness) -> Value {
    json!({
        "parent": matroid_to_value(&w.parent),
        "faces": w.internal_faces.iter().map(|(m, d)| json!({
            "matroid": matroid_to_value(m),
            "dim": d,
        })).collect::<Vec<_>>(),
    })
}

/// Any input file the tools accept.
#[derive(Debug, Clone)]
pub enum Document {
    Matroid(Matroid),
    Permutation(AffinePermutation),
    IntervalRanks(IntervalRanks),
    Witness(SubdivisionWitness),
}

impl Document {
    /// Dispatches on the distinguishing key: `window`, `bounds`, `parent`,
    /// otherwise a matroid.
    pub fn from_value(v: &Value) -> Result<Self> {
        let obj: &Map<String, Value> = v
            .as_object()
            .ok_or_else(|| parse_err("top-level JSON must be an object"))?;
        if obj.contains_key("window") {
            Ok(Document::Permutation(permutation_from_value(v)?))
        } else if obj.contains_key("bounds") {
            Ok(Document::IntervalRanks(interval_ranks_from_value(v)?))
        } else if obj.contains_key("parent") {
            Ok(Document::Witness(witness_from_value(v)?))
        } else {
            Ok(Document::Matroid(matroid_from_value(v)?))
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_value(&serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The matroid the document describes; permutations and interval bounds
    /// yield their positroid, witnesses their parent.
    pub fn matroid(&self) -> Result<Matroid> {
        match self {
            Document::Matroid(m) => Ok(m.clone()),
            Document::Permutation(p) => positroid_from_permutation(p),
            Document::IntervalRanks(r) => positroid_from_interval_ranks(r),
            Document::Witness(w) => Ok(w.parent.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::valuative::{delta24_split, s_poly};

    #[test]
    fn matroid_roundtrip_is_stable() {
        for m in [
            catalog::square(),
            Matroid::uniform(0, 2).unwrap(),
            Matroid::empty(),
        ] {
            let text = matroid_to_json(&m);
            let back = matroid_from_json(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(matroid_to_json(&back), text);
        }
    }

    #[test]
    fn all_presentations_parse() {
        let lines = r#"{"n": 8, "lines": [[1,2,3],[3,4,5],[5,6,7],[7,8,1]]}"#;
        assert_eq!(matroid_from_json(lines).unwrap(), catalog::square());
        let gf2 = r#"{"matrix": [[1,0,1],[0,1,1]], "field": 2}"#;
        assert_eq!(
            matroid_from_json(gf2).unwrap(),
            Matroid::uniform(2, 3).unwrap()
        );
        let q = r#"{"matrix": [[1,0,"1/2"],[0,1,1]], "field": "Q"}"#;
        assert_eq!(
            matroid_from_json(q).unwrap(),
            Matroid::uniform(2, 3).unwrap()
        );
        let table = r#"{"rank_table": [0,1,1,1]}"#;
        assert_eq!(
            matroid_from_json(table).unwrap(),
            Matroid::uniform(1, 2).unwrap()
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            matroid_from_json(r#"{"n": 2}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n": 2, "bases": [[3]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n": 2, "bases": [[1]], "colour": 1}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"rank_table": [0,1,1,3]}"#),
            Err(Error::AxiomViolation { .. })
        ));
        assert!(matches!(matroid_from_json("[1,"), Err(Error::Parse(_))));
    }

    #[test]
    fn documents_dispatch() {
        let p = Document::from_json(r#"{"n": 6, "window": [3,6,5,8,7,10]}"#).unwrap();
        assert!(matches!(p, Document::Permutation(_)));
        assert_eq!(p.matroid().unwrap().rank(), 3);
        let r = Document::from_json(
            r#"{"n": 6, "rank": 3, "bounds": [{"interval": [1,3], "rank": 2}, {"interval": [3,5], "rank": 2}, {"interval": [5,7], "rank": 2}]}"#,
        )
        .unwrap();
        assert_eq!(r.matroid().unwrap(), p.matroid().unwrap());
        assert!(Document::from_json(r#"{"n": 2, "window": [1,2,3]}"#).is_err());
    }

    #[test]
    fn polynomial_and_witness_roundtrip() {
        let s = s_poly(&catalog::square()).unwrap();
        assert_eq!(tripoly_from_value(&tripoly_to_value(&s)).unwrap(), s);
        let w = delta24_split();
        assert_eq!(witness_from_value(&witness_to_value(&w)).unwrap(), w);
        let big = BigInt::from(u64::MAX) * 7;
        assert_eq!(bigint_from_value(&bigint_to_value(&big)).unwrap(), big);
    }

    #[test]
    fn family_and_table_roundtrip() {
        let m = catalog::square();
        let f = crate::ecodim::flacets(&m);
        assert_eq!(family_from_value(8, &family_to_value(&f)).unwrap(), f);
        let a = crate::ecodim::coeff_a(&m, &f);
        assert_eq!(
            coeff_table_from_value(8, &coeff_table_to_value(&a)).unwrap(),
            a
        );
        assert_eq!(parse_window("3, 6,5,8,7,10").unwrap().length(), 3);
        assert!(parse_window("3,x").is_err());
    }
}
