//! Browser bindings. Every function takes a tuple string such as
//! `"3,3,3,1,2,4"` and returns a JSON document; failures come back as
//! `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use tetra_core::gin::{ek_betti, gin_of_curve};
use tetra_core::resolution::resolution_recipe;
use tetra_core::tuple::{degree_of_tuple, reduction_trace};
use tetra_core::{classify, TetTuple};
use wasm_bindgen::prelude::*;

fn respond(tuple: &str, f: impl FnOnce(&TetTuple) -> Result<Value, String>) -> String {
    let out = tuple
        .parse::<TetTuple>()
        .map_err(|e| e.to_string())
        .and_then(|t| f(&t))
        .unwrap_or_else(|e| json!({ "error": e }));
    out.to_string()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

#[wasm_bindgen]
pub fn classify_tuple(tuple: &str) -> String {
    respond(tuple, |t| Ok(to_value(&classify(t))))
}

#[wasm_bindgen]
pub fn betti_table(tuple: &str) -> String {
    respond(tuple, |t| {
        let recipe = resolution_recipe(t).map_err(|e| e.to_string())?;
        let table = recipe.assemble();
        Ok(json!({
            "grid": table.grid_string(),
            "resolution": table.resolution_string("J"),
            "table": to_value(&table),
            "base": to_value(&recipe.base),
            "links": recipe.steps.len(),
        }))
    })
}

/// Reduction chain plus, where known, the generic initial ideal.
#[wasm_bindgen]
pub fn reduce_and_gin(tuple: &str) -> String {
    respond(tuple, |t| {
        let trace = reduction_trace(t);
        let steps: Vec<Value> = trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "type": to_value(&s.ty),
                    "parent": s.parent.to_string(),
                    "child": s.child.to_string(),
                    "f": s.f.to_string(),
                    "g": tetra_core::monomial::VARIABLES[s.g].to_string(),
                    "degree": degree_of_tuple(&s.parent),
                })
            })
            .collect();
        let gin = if t.is_trivial() { None } else { gin_of_curve(t).map_err(|e| e.to_string())? };
        Ok(json!({
            "steps": steps,
            "terminal": trace.terminal.to_string(),
            "acm": trace.is_acm(),
            "gin": gin.as_ref().map(|g| g.to_string()),
            "gin_betti": gin.as_ref().map(|g| ek_betti(g).grid_string()),
        }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn bindings_return_json() {
        assert_eq!(parse(classify_tuple("1,0,0,0,0,1"))["minimal"], true);
        let b = parse(betti_table("1,2,1,2,0,2"));
        assert_eq!(b["resolution"], "0 → R(-7) ⊕ R(-5)^2 → R(-6) ⊕ R(-4)^2 ⊕ R(-3) → J → 0");
        let r = parse(reduce_and_gin("3,3,3,1,2,4"));
        assert_eq!(r["terminal"], "(1,0,0,0,0,1)");
        assert_eq!(r["steps"].as_array().unwrap().len(), 5);
        assert!(r["gin"].is_string());
    }

    #[test]
    fn bad_input_is_an_error_object() {
        assert!(parse(classify_tuple("1,2")).get("error").is_some());
        assert!(parse(betti_table("0,0,0,0,0,0")).get("error").is_some());
    }
}
