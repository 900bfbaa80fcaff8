//! Map files.
//!
//! ```json
//! {"n": 2, "N": 1, "terms": [{"k": [1, 0], "a": [[0.6, 0.0]], "b": [[0.0, 0.0]]}]}
//! ```
//!
//! `a` and `b` hold one `[re, im]` pair per codomain component; an absent
//! coefficient means zero. `b` is the unconjugated anti-holomorphic
//! coefficient (the term is `conj(b) conj(z)^k`). An optional `extremal`
//! object records that the series is a truncated closed-form extremal.
//! Only finite series can be written; composed and closed-form maps are
//! evaluation-only.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::series::{Provenance, SeriesMap};
use super::PluriharmonicMap;
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;

#[derive(Serialize, Deserialize)]
struct MapFile<T> {
    n: usize,
    #[serde(rename = "N")]
    codim: usize,
    terms: Vec<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extremal: Option<Provenance>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    k: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<Vec<[f64; 2]>>,
}

fn to_pairs(v: &[Complex64]) -> Option<Vec<[f64; 2]>> {
    if v.iter().all(|c| *c == Complex64::new(0.0, 0.0)) {
        None
    } else {
        Some(v.iter().map(|c| [c.re, c.im]).collect())
    }
}

pub fn series_to_json(map: &SeriesMap) -> Result<String> {
    let terms = map
        .terms()
        .map(|(k, t)| TermFile {
            k: k.components().to_vec(),
            a: to_pairs(&t.a),
            b: to_pairs(&t.b),
        })
        .collect();
    let file = MapFile {
        n: map.dim(),
        codim: map.codim(),
        terms,
        extremal: map.provenance().cloned(),
    };
    let mut s = serde_json::to_string_pretty(&file)?;
    s.push('\n');
    Ok(s)
}

/// Parses a map file. Errors name the offending term by its position in
/// the `terms` array.
pub fn series_from_json(text: &str) -> Result<SeriesMap> {
    let file: MapFile<Value> = serde_json::from_str(text)
        .map_err(|e| Error::MapFormat(format!("malformed map file: {e}")))?;
    if file.n == 0 || file.codim == 0 {
        return Err(Error::MapFormat("n and N must be at least 1".into()));
    }
    let mut map = SeriesMap::new(file.n, file.codim);
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in file.terms.into_iter().enumerate() {
        let bad = |msg: String| Error::MapFormat(format!("term {i}: {msg}"));
        let term: TermFile = serde_json::from_value(raw).map_err(|e| bad(e.to_string()))?;
        if term.k.len() != file.n {
            return Err(bad(format!(
                "multi-index has length {}, expected n = {}",
                term.k.len(),
                file.n
            )));
        }
        let k = MultiIndex::new(term.k).map_err(|e| bad(e.to_string()))?;
        if !seen.insert(k.clone()) {
            return Err(bad(format!("duplicate multi-index {k}")));
        }
        for (name, coeffs) in [("a", &term.a), ("b", &term.b)] {
            let Some(coeffs) = coeffs else { continue };
            if coeffs.len() != file.codim {
                return Err(bad(format!(
                    "coefficient {name} has {} components, expected N = {}",
                    coeffs.len(),
                    file.codim
                )));
            }
            if coeffs.iter().flatten().any(|x| !x.is_finite()) {
                return Err(bad(format!("coefficient {name} is not finite")));
            }
            let v: Vec<Complex64> = coeffs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
            if name == "a" {
                map.add_holo(k.clone(), &v)
                    .map_err(|e| bad(e.to_string()))?;
            } else {
                map.add_anti(k.clone(), &v)
                    .map_err(|e| bad(e.to_string()))?;
            }
        }
    }
    map.prune();
    Ok(match file.extremal {
        Some(p) => map.with_provenance(p),
        None => map,
    })
}

pub fn read_map(path: impl AsRef<Path>) -> Result<PluriharmonicMap> {
    let text = std::fs::read_to_string(path)?;
    Ok(series_from_json(&text)?.into())
}

pub fn write_map(path: impl AsRef<Path>, map: &PluriharmonicMap) -> Result<()> {
    let series = map.as_series().ok_or(Error::UnsupportedForm {
        operation: "serialization",
        form: map.form_name(),
    })?;
    std::fs::write(path, series_to_json(series)?)?;
    Ok(())
}
