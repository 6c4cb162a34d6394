//! Text and JSON serializations of Schur expansions.
//!
//! The text form is the usual `4S_37 + 16S_46 + S_{8,14}` notation. The JSON
//! form carries the singularity, `r` and codimension alongside the terms, with
//! coefficients as decimal strings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use thom_core::partitions::{ExpansionError, PartitionError};
use thom_core::{BigInt, Partition, SchurExpansion};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid coefficient {0:?}")]
    Coefficient(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Text(#[from] ExpansionError),
}

/// An expansion together with the data identifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelled {
    pub singularity: String,
    pub r: i64,
    pub codim: u32,
    pub expansion: SchurExpansion,
}

impl Labelled {
    /// Labels an expansion; the codimension is its weight (0 when empty).
    pub fn new(singularity: impl Into<String>, r: i64, expansion: SchurExpansion) -> Self {
        let codim = expansion.weight().unwrap_or(0);
        Labelled {
            singularity: singularity.into(),
            r,
            codim,
            expansion,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    singularity: String,
    r: i64,
    codim: u32,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Vec<u32>,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Text(String),
    Int(i64),
}

pub fn to_text(e: &SchurExpansion) -> String {
    e.to_string()
}

pub fn from_text(s: &str) -> Result<SchurExpansion, FormatError> {
    Ok(s.parse()?)
}

pub fn to_json(l: &Labelled) -> String {
    let doc = JsonDoc {
        singularity: l.singularity.clone(),
        r: l.r,
        codim: l.codim,
        terms: l
            .expansion
            .iter()
            .map(|(p, c)| JsonTerm {
                partition: p.parts().to_vec(),
                coeff: Coeff::Text(c.to_string()),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// Parses the JSON form. Coefficients may be strings or plain integers.
pub fn from_json(s: &str) -> Result<Labelled, FormatError> {
    let doc: JsonDoc = serde_json::from_str(s)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in doc.terms {
        let c = match t.coeff {
            Coeff::Int(k) => BigInt::from(k),
            Coeff::Text(s) => s.trim().parse().map_err(|_| FormatError::Coefficient(s))?,
        };
        terms.push((Partition::new(t.partition)?, c));
    }
    Ok(Labelled {
        singularity: doc.singularity,
        r: doc.r,
        codim: doc.codim,
        expansion: SchurExpansion::from_terms(terms),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let e = from_text("2S_122 + 4S_23").unwrap();
        let json = to_json(&Labelled::new("I23", 1, e));
        assert_eq!(
            json,
            r#"{"singularity":"I23","r":1,"codim":5,"terms":[{"partition":[1,2,2],"coeff":"2"},{"partition":[2,3],"coeff":"4"}]}"#
        );
    }

    #[test]
    fn integer_coefficients_are_accepted() {
        let l = from_json(r#"{"singularity":"I23","r":1,"codim":5,"terms":[{"partition":[1,2,2],"coeff":2},{"partition":[2,3],"coeff":"4"}]}"#)
            .unwrap();
        assert_eq!(l.expansion, from_text("2S_122 + 4S_23").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_json(
            r#"{"singularity":"X","r":1,"codim":1,"terms":[{"partition":[3,1],"coeff":"1"}]}"#
        )
        .is_err());
        assert!(from_json(
            r#"{"singularity":"X","r":1,"codim":1,"terms":[{"partition":[1],"coeff":"x"}]}"#
        )
        .is_err());
        assert!(from_text("4S_37 +").is_err());
    }
}
