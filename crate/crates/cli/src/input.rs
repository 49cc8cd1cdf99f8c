use std::sync::Arc;

use serde_json::Value;
use superjm::exact::Matrix;
use superjm::json::{
    algebra_from_json, element_from_json, matrix_from_json, representation_from_json,
    space_from_json,
};
use superjm::liesuper::{adjoint_rep, gl_superalgebra, osp12, osp_simple_over};
use superjm::nilform::OddNilpotent;
use superjm::{Element, Error, LieSuperAlgebra, Parity, Representation, Result};

/// Inline JSON when the argument starts with `{` or `[`, otherwise a file path.
pub fn read_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

/// An algebra with a representation, and whether the ambient supergroup is known
/// to be quasi-reductive.
pub struct Context {
    pub algebra: Arc<LieSuperAlgebra>,
    pub rep: Representation,
    pub quasi_reductive: bool,
}

/// `gl11`, `gl12`, `glMN` for digits `M, N`, and `osp12`; a `-adjoint` suffix
/// selects the adjoint representation instead of the defining one.
pub fn preset(name: &str) -> Result<Context> {
    let unknown = || Error::InvalidArgument(format!("unknown preset \"{name}\""));
    let (base, adjoint) = match name.strip_suffix("-adjoint") {
        Some(b) => (b, true),
        None => (name, false),
    };
    let (algebra, defining) = if base == "osp12" {
        let g = Arc::new(osp12());
        let v = osp_simple_over(&g, 1, Parity::Even);
        (g, v)
    } else {
        let digits = base.strip_prefix("gl").ok_or_else(unknown)?;
        let d: Vec<usize> = digits
            .chars()
            .map(|c| c.to_digit(10).map(|x| x as usize))
            .collect::<Option<_>>()
            .ok_or_else(unknown)?;
        if d.len() != 2 || d[0] + d[1] == 0 {
            return Err(unknown());
        }
        gl_superalgebra(d[0], d[1])?
    };
    let rep = if adjoint {
        adjoint_rep(&algebra)
    } else {
        defining
    };
    Ok(Context {
        algebra,
        rep,
        quasi_reductive: true,
    })
}

/// Resolves `--preset`, `--algebra` and `--rep` into a context. A loaded
/// representation carries no quasi-reductivity claim.
pub fn context(
    preset_name: Option<&str>,
    algebra: Option<&str>,
    rep: Option<&str>,
) -> Result<Context> {
    if let Some(p) = preset_name {
        if algebra.is_some() || rep.is_some() {
            return Err(Error::InvalidArgument(
                "--preset excludes --algebra and --rep".into(),
            ));
        }
        return preset(p);
    }
    let given = algebra
        .map(|a| read_json(a).and_then(|v| algebra_from_json(&v)))
        .transpose()?
        .map(Arc::new);
    let rep_arg = rep.ok_or_else(|| Error::InvalidArgument("need --preset or --rep".into()))?;
    let rep = representation_from_json(&read_json(rep_arg)?, given)?;
    Ok(Context {
        algebra: rep.algebra().clone(),
        rep,
        quasi_reductive: false,
    })
}

/// `--module` when given (over the context's algebra), otherwise the context's representation.
pub fn module(ctx: &Context, arg: Option<&str>) -> Result<Representation> {
    match arg {
        Some(m) => representation_from_json(&read_json(m)?, Some(ctx.algebra.clone())),
        None => Ok(ctx.rep.clone()),
    }
}

pub fn element(ctx: &Context, arg: Option<&str>) -> Result<Element> {
    let arg = arg.ok_or_else(|| Error::InvalidArgument("--element is required".into()))?;
    element_from_json(&ctx.algebra, &read_json(arg)?)
}

/// `{"space": {"even": m, "odd": n}, "matrix": [...]}` as an odd nilpotent.
pub fn operator(arg: &str) -> Result<OddNilpotent> {
    let v = read_json(arg)?;
    let space = space_from_json(
        v.get("space")
            .ok_or_else(|| Error::Parse("missing field \"space\"".into()))?,
    )?;
    let d = space.dim();
    let m = matrix_from_json(
        v.get("matrix")
            .ok_or_else(|| Error::Parse("missing field \"matrix\"".into()))?,
        d,
        d,
    )?;
    OddNilpotent::from_matrix(space, m)
}

/// A square matrix given either as rows or as `{"matrix": rows}`.
pub fn square_matrix(arg: &str) -> Result<Matrix> {
    let v = read_json(arg)?;
    let rows = v.get("matrix").unwrap_or(&v);
    let n = rows
        .as_array()
        .map(Vec::len)
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    matrix_from_json(rows, n, n)
}

/// `"k"` or `"k:odd"` / `"k:even"`.
pub fn indexed(arg: &str) -> Result<(usize, Parity)> {
    let (k, p) = match arg.split_once(':') {
        Some((k, p)) => (k, Parity::parse(p)?),
        None => (arg, Parity::Even),
    };
    let k = k
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad index \"{arg}\"")))?;
    Ok((k, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_resolve() {
        assert_eq!(preset("gl12").unwrap().rep.dim(), 3);
        assert_eq!(preset("gl12-adjoint").unwrap().rep.dim(), 9);
        assert_eq!(preset("osp12").unwrap().rep.dim(), 3);
        assert_eq!(preset("gl23").unwrap().algebra.dim(), 25);
        for bad in ["sl2", "gl1", "gl00", "glxy"] {
            assert!(preset(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn indices() {
        assert_eq!(indexed("2").unwrap(), (2, Parity::Even));
        assert_eq!(indexed("3:odd").unwrap(), (3, Parity::Odd));
        assert!(indexed("x").is_err());
    }
}
