use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use super::{Monomial, Series, VariableSpace};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    variables: Vec<String>,
    grading: Vec<String>,
    truncation: u32,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Map<String, Value>,
    coeff: String,
}

impl VariableSpace {
    /// Nonzero exponents keyed by variable name, in variable order.
    pub fn monomial_json(&self, m: &Monomial) -> Map<String, Value> {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, e)| (self.name(i).to_string(), Value::from(*e)))
            .collect()
    }
}

impl Series {
    fn to_repr(&self) -> SeriesRepr {
        let space = &self.space;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exp = space.monomial_json(m);
                TermRepr {
                    exp,
                    coeff: c.to_string(),
                }
            })
            .collect();
        SeriesRepr {
            variables: space.names().to_vec(),
            grading: space.grading_names().iter().map(|s| s.to_string()).collect(),
            truncation: self.truncation,
            terms,
        }
    }

    fn from_repr(repr: SeriesRepr) -> Result<Series> {
        let space = Arc::new(VariableSpace::new(&repr.variables, &repr.grading)?);
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let mut exps = vec![0i32; space.len()];
            for (name, v) in &t.exp {
                let idx = space
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                let e = v
                    .as_i64()
                    .and_then(|e| i32::try_from(e).ok())
                    .ok_or_else(|| Error::Json(format!("bad exponent {v} for `{name}`")))?;
                exps[idx] = e;
            }
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Json(format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((Monomial::from_exponents(exps), coeff));
        }
        let d_max = repr.truncation as i64;
        if let Some((m, _)) = terms.iter().find(|(m, _)| space.degree(m) > d_max) {
            return Err(Error::Json(format!(
                "term `{}` lies above truncation {}",
                space.format_monomial(m),
                d_max
            )));
        }
        Series::from_terms(space, repr.truncation, terms)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self.to_repr()).expect("series repr is always serializable")
    }

    pub fn from_json(value: &Value) -> Result<Series> {
        let repr: SeriesRepr =
            serde_json::from_value(value.clone())?;
        Series::from_repr(repr)
    }

    pub fn from_json_str(s: &str) -> Result<Series> {
        let repr: SeriesRepr = serde_json::from_str(s)?;
        Series::from_repr(repr)
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        Series::from_repr(repr).map_err(D::Error::custom)
    }
}
