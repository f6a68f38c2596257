//! Reading and writing complexes in the JSON exchange format
//! `{"vertices": n, "simplices": [[..], ..], "involution": [..]}`.

use std::path::Path;

use serde_json::{json, Value};

use super::complex::{ComplexError, GComplex, Violation};
use crate::error::{Error, Result};

/// A complex read from a file, possibly subdivided to restore regularity.
#[derive(Clone, Debug)]
pub struct LoadedComplex {
    pub complex: GComplex,
    pub subdivided: bool,
}

pub fn parse_complex_json(text: &str) -> Result<LoadedComplex> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        ComplexError::Parse(format!(
            "malformed JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| ComplexError::Parse("top level: expected an object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "vertices" | "simplices" | "involution") {
            return Err(ComplexError::Parse(format!("field `{key}`: unknown field")).into());
        }
    }
    let n = count(obj.get("vertices"), "vertices")?;
    let simplices = obj
        .get("simplices")
        .ok_or_else(|| ComplexError::Parse("field `simplices`: missing".into()))?
        .as_array()
        .ok_or_else(|| ComplexError::Parse("field `simplices`: expected an array".into()))?
        .iter()
        .enumerate()
        .map(|(i, s)| id_list(s, &format!("simplices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let involution = match obj.get("involution") {
        Some(v) => id_list(v, "involution")?,
        None => return Err(ComplexError::Parse("field `involution`: missing".into()).into()),
    };
    let complex = GComplex::new(n, &simplices, &involution)?;
    regularize(complex)
}

/// Subdivide once if the only problem is a setwise-fixed simplex.
pub fn regularize(complex: GComplex) -> Result<LoadedComplex> {
    match complex.validate() {
        Ok(()) => Ok(LoadedComplex {
            complex,
            subdivided: false,
        }),
        Err(Violation::NotRegular { .. }) => {
            let sd = complex.barycentric_subdivide();
            sd.validate()?;
            Ok(LoadedComplex {
                complex: sd,
                subdivided: true,
            })
        }
        Err(v) => Err(Error::Invalid(v)),
    }
}

pub fn load_complex(path: &Path) -> Result<LoadedComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ComplexError::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_complex_json(&text)
}

pub fn complex_to_json(x: &GComplex) -> Value {
    json!({
        "vertices": x.vertex_count(),
        "simplices": x.maximal_simplices(),
        "involution": x.involution(),
    })
}

fn count(v: Option<&Value>, field: &str) -> Result<usize> {
    let v = v.ok_or_else(|| ComplexError::Parse(format!("field `{field}`: missing")))?;
    v.as_u64().map(|n| n as usize).ok_or_else(|| {
        ComplexError::Parse(format!("field `{field}`: expected a nonnegative integer, found {v}")).into()
    })
}

fn id_list(v: &Value, field: &str) -> Result<Vec<usize>> {
    let arr = v
        .as_array()
        .ok_or_else(|| ComplexError::Parse(format!("field `{field}`: expected an array, found {v}")))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| count(Some(x), &format!("{field}[{i}]")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = crate::gcomplex::builtin("torus-reflection").unwrap();
        let text = complex_to_json(&x).to_string();
        let back = parse_complex_json(&text).unwrap();
        assert!(!back.subdivided);
        assert_eq!(back.complex, x);
    }

    #[test]
    fn field_precise_errors() {
        let e = parse_complex_json(r#"{"vertices": 2, "simplices": [[0, -1]], "involution": [0, 1]}"#).unwrap_err();
        assert!(e.to_string().contains("simplices[0][1]"), "{e}");
        let e = parse_complex_json(r#"{"vertices": 2, "simplices": []}"#).unwrap_err();
        assert!(e.to_string().contains("involution"), "{e}");
        let e = parse_complex_json("{\"vertices\": 2,\n \"simplices\": [[0 1]]}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }

    #[test]
    fn irregular_input_is_subdivided_once() {
        let loaded = parse_complex_json(r#"{"vertices": 2, "simplices": [[0, 1]], "involution": [1, 0]}"#).unwrap();
        assert!(loaded.subdivided);
        assert_eq!(loaded.complex.vertex_count(), 3);
    }

    #[test]
    fn non_involution_is_rejected() {
        let e = parse_complex_json(r#"{"vertices": 3, "simplices": [], "involution": [1, 2, 0]}"#).unwrap_err();
        assert!(matches!(e, Error::Invalid(Violation::NotAnInvolution { .. })));
    }
}
