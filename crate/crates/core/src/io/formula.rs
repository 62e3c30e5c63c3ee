//! Formula documents:
//! `{"variables": 3, "clauses": [{"literals": [1, -2, 3], "side": "top"}]}`.

use serde_json::Value;

use super::{to_pretty_json, IoError};
use crate::reductions::{Clause, Rp3SatInstance, Side};

fn schema(path: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema { path: path.into(), message: message.into() }
}

pub fn parse_formula(text: &str) -> Result<Rp3SatInstance, IoError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let variables = obj
        .get("variables")
        .ok_or_else(|| schema("variables", "missing field"))?
        .as_u64()
        .ok_or_else(|| schema("variables", "expected a non-negative integer"))? as usize;
    let clauses = obj
        .get("clauses")
        .ok_or_else(|| schema("clauses", "missing field"))?
        .as_array()
        .ok_or_else(|| schema("clauses", "expected an array"))?;
    let mut out = Vec::with_capacity(clauses.len());
    for (i, c) in clauses.iter().enumerate() {
        let at = |field: &str| format!("clauses[{i}].{field}");
        let c = c.as_object().ok_or_else(|| schema(format!("clauses[{i}]"), "expected an object"))?;
        let lits = c
            .get("literals")
            .ok_or_else(|| schema(at("literals"), "missing field"))?
            .as_array()
            .ok_or_else(|| schema(at("literals"), "expected an array"))?;
        if lits.len() != 3 {
            return Err(schema(at("literals"), format!("expected 3 literals, found {}", lits.len())));
        }
        let mut literals = [0i64; 3];
        for (k, l) in lits.iter().enumerate() {
            let v = l
                .as_i64()
                .filter(|&v| v != 0 && v.unsigned_abs() as usize <= variables)
                .ok_or_else(|| {
                    schema(format!("clauses[{i}].literals[{k}]"), format!("expected a non-zero integer in ±1..={variables}"))
                })?;
            literals[k] = v;
        }
        let side = match c.get("side").ok_or_else(|| schema(at("side"), "missing field"))?.as_str() {
            Some("top") => Side::Top,
            Some("bottom") => Side::Bottom,
            _ => return Err(schema(at("side"), "expected \"top\" or \"bottom\"")),
        };
        out.push(Clause::new(literals, side));
    }
    Ok(Rp3SatInstance::new(variables, out))
}

pub fn format_formula(inst: &Rp3SatInstance) -> String {
    to_pretty_json(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::sign_cube;

    #[test]
    fn parses_single_clause() {
        let f = parse_formula(r#"{"variables":3,"clauses":[{"literals":[1,-2,3],"side":"top"}]}"#).unwrap();
        assert_eq!((f.n(), f.m()), (3, 1));
        assert_eq!(f.clauses[0].literals, [1, -2, 3]);
    }

    #[test]
    fn cube_round_trips_byte_identical() {
        let text = format_formula(&sign_cube(4));
        assert_eq!(format_formula(&parse_formula(&text).unwrap()), text);
    }

    #[test]
    fn schema_paths() {
        let err = |t: &str| match parse_formula(t) {
            Err(IoError::Schema { path, .. }) => path,
            other => panic!("{other:?}"),
        };
        assert_eq!(err(r#"{"variables":3,"clauses":[{"literals":[1,-2,3]}]}"#), "clauses[0].side");
        assert_eq!(err(r#"{"clauses":[]}"#), "variables");
        assert_eq!(err(r#"{"variables":2,"clauses":[{"literals":[1,2,3],"side":"top"}]}"#), "clauses[0].literals[2]");
        assert_eq!(err(r#"{"variables":3,"clauses":[{"literals":[1,2],"side":"top"}]}"#), "clauses[0].literals");
        assert_eq!(err("[1"), "$");
    }
}
