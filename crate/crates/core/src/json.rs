//! JSON encodings. Rationals are `"p/q"` strings and matrices are arrays of rows.
//! Keys appear in a fixed order, so equal values serialize to identical bytes.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Matrix, Rational};
use crate::functors::{Ga11Object, SemisimpleObject};
use crate::jm::OspTriple;
use crate::liesuper::{Element, LieSuperAlgebra, Representation};
use crate::nilform::{BlockDecomposition, Filtration};
use crate::superlinalg::{HomMap, Parity, SuperSpace};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer")))
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

/// Accepts `"p/q"` strings and JSON integers.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(crate::exact::int).ok_or_else(|| {
            parse_err(format!(
                "number {n} is not an integer; use a \"p/q\" string"
            ))
        }),
        _ => Err(parse_err("rational must be a string or an integer")),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
            .collect(),
    )
}

/// Needs the column count for matrices without rows.
pub fn matrix_from_json(v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err("matrix must be an array of rows"))?;
    if arr.len() != rows {
        return Err(parse_err(format!(
            "expected {rows} rows, got {}",
            arr.len()
        )));
    }
    let mut out = Vec::with_capacity(rows);
    for r in arr {
        let r = r
            .as_array()
            .ok_or_else(|| parse_err("matrix row must be an array"))?;
        if r.len() != cols {
            return Err(parse_err(format!(
                "expected {cols} columns, got {}",
                r.len()
            )));
        }
        out.push(
            r.iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(if rows == 0 {
        Matrix::zeros(0, cols)
    } else {
        Matrix::from_rows(out)
    })
}

pub fn space_to_json(s: &SuperSpace) -> Value {
    json!({ "even": s.even_dim(), "odd": s.odd_dim() })
}

pub fn space_from_json(v: &Value) -> Result<SuperSpace> {
    let even = as_usize(field(v, "even")?, "even")?;
    let odd = as_usize(field(v, "odd")?, "odd")?;
    Ok(SuperSpace::with_dims(even, odd))
}

pub fn hom_to_json(f: &HomMap) -> Value {
    json!({ "parity": f.parity(), "matrix": matrix_to_json(f.matrix()) })
}

fn parity_from_json(v: &Value) -> Result<Parity> {
    Parity::parse(
        v.as_str()
            .ok_or_else(|| parse_err("parity must be a string"))?,
    )
}

pub fn algebra_to_json(g: &LieSuperAlgebra) -> Value {
    let basis: Vec<Value> = (0..g.dim())
        .map(|i| json!({ "name": g.name(i), "parity": g.parity(i) }))
        .collect();
    let brackets: Vec<Value> = g
        .stored_brackets()
        .iter()
        .map(|((i, j), terms)| {
            let terms: Vec<Value> = terms
                .iter()
                .map(|(k, c)| json!({ "k": k, "c": rational_to_json(c) }))
                .collect();
            json!({ "i": i, "j": j, "terms": terms })
        })
        .collect();
    json!({ "basis": basis, "brackets": brackets })
}

/// Bracket indices refer to the order of `basis` as given.
pub fn algebra_from_json(v: &Value) -> Result<LieSuperAlgebra> {
    let basis = field(v, "basis")?
        .as_array()
        .ok_or_else(|| parse_err("basis must be an array"))?
        .iter()
        .map(|b| {
            let name = field(b, "name")?
                .as_str()
                .ok_or_else(|| parse_err("basis name must be a string"))?
                .to_string();
            Ok((name, parity_from_json(field(b, "parity")?)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let brackets = match v.get("brackets") {
        None => Vec::new(),
        Some(b) => b
            .as_array()
            .ok_or_else(|| parse_err("brackets must be an array"))?
            .iter()
            .map(|e| {
                let i = as_usize(field(e, "i")?, "i")?;
                let j = as_usize(field(e, "j")?, "j")?;
                let terms = field(e, "terms")?
                    .as_array()
                    .ok_or_else(|| parse_err("terms must be an array"))?
                    .iter()
                    .map(|t| {
                        Ok((
                            as_usize(field(t, "k")?, "k")?,
                            rational_from_json(field(t, "c")?)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(((i, j), terms))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    LieSuperAlgebra::new(basis, brackets)
}

pub fn element_to_json(g: &LieSuperAlgebra, e: &Element) -> Value {
    let coeffs: Map<String, Value> = e
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| (g.name(i).to_string(), rational_to_json(c)))
        .collect();
    json!({ "coeffs": coeffs })
}

/// Missing basis names have coefficient zero.
pub fn element_from_json(g: &LieSuperAlgebra, v: &Value) -> Result<Element> {
    let coeffs = field(v, "coeffs")?
        .as_object()
        .ok_or_else(|| parse_err("coeffs must be an object"))?;
    let mut e = g.zero();
    for (name, c) in coeffs {
        e.coeffs[g.index_of(name)?] = rational_from_json(c)?;
    }
    Ok(e)
}

pub fn representation_to_json(rep: &Representation) -> Value {
    let g = rep.algebra();
    let action: Map<String, Value> = (0..g.dim())
        .map(|i| {
            (
                g.name(i).to_string(),
                matrix_to_json(rep.basis_action(i).matrix()),
            )
        })
        .collect();
    json!({
        "algebra": algebra_to_json(g),
        "space": space_to_json(rep.space()),
        "action": action,
    })
}

/// Uses `algebra` when given, otherwise the embedded `"algebra"` field. The
/// representation identities are checked.
pub fn representation_from_json(
    v: &Value,
    algebra: Option<Arc<LieSuperAlgebra>>,
) -> Result<Representation> {
    let g = match algebra {
        Some(g) => g,
        None => Arc::new(algebra_from_json(field(v, "algebra")?)?),
    };
    let space = space_from_json(field(v, "space")?)?;
    let action = field(v, "action")?
        .as_object()
        .ok_or_else(|| parse_err("action must be an object"))?;
    for name in action.keys() {
        g.index_of(name)?;
    }
    let d = space.dim();
    let matrices = g
        .names()
        .iter()
        .map(|n| match action.get(n) {
            Some(m) => matrix_from_json(m, d, d),
            None => Ok(Matrix::zeros(d, d)),
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new_checked(g, space, matrices)
}

pub fn blocks_to_json(b: &BlockDecomposition) -> Value {
    let blocks: Vec<Value> = b
        .blocks
        .iter()
        .filter(|(_, m)| **m > 0)
        .map(|(t, m)| json!({ "length": t.length, "top_parity": t.top_parity, "mult": m }))
        .collect();
    let mut out = json!({ "blocks": blocks });
    if let Some(chains) = &b.chains {
        let chains: Vec<Value> = chains
            .iter()
            .map(|c| {
                let vectors: Vec<Value> = c
                    .vectors
                    .iter()
                    .map(|v| Value::Array(v.iter().map(rational_to_json).collect()))
                    .collect();
                json!({ "length": c.block.length, "top_parity": c.block.top_parity, "vectors": vectors })
            })
            .collect();
        out["chains"] = Value::Array(chains);
    }
    out
}

pub fn ga11_to_json(obj: &Ga11Object) -> Value {
    let blocks: Vec<Value> = obj
        .summands()
        .map(|(t, m)| json!({ "length": t.length, "top_parity": t.top_parity, "mult": m }))
        .collect();
    json!({ "blocks": blocks })
}

/// Levels `ℱ^i` as column bases, keyed by `i`.
pub fn filtration_to_json(f: &Filtration) -> Value {
    let levels: Map<String, Value> = f
        .levels()
        .iter()
        .map(|(i, m)| (i.to_string(), matrix_to_json(m)))
        .collect();
    let gr: Map<String, Value> = f
        .weights()
        .iter()
        .map(|&i| (i.to_string(), json!(f.gr_dim(i))))
        .collect();
    json!({ "dim": f.dim(), "levels": levels, "gr_dims": gr })
}

pub fn semisimple_to_json(s: &SemisimpleObject) -> Value {
    let summands: Vec<Value> = s
        .summands()
        .map(|(k, shift, mult)| json!({ "k": k, "shift": shift, "mult": mult }))
        .collect();
    json!({ "summands": summands })
}

pub fn triple_to_json(t: &OspTriple) -> Value {
    let g = t.algebra.as_ref();
    let spectrum: Vec<Value> = t
        .spectrum
        .iter()
        .map(|(c, m)| json!({ "eigenvalue": c, "mult": m }))
        .collect();
    json!({
        "x": element_to_json(g, &t.x),
        "h": element_to_json(g, &t.h),
        "Y": element_to_json(g, &t.y),
        "certificates": { "relations": t.relations, "spectrum": spectrum },
    })
}
