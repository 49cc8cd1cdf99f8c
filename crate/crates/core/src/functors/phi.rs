use std::sync::Arc;

use super::objects::{semisimplify, Ga11Object, SemisimpleObject};
use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, solve_affine, Matrix, Rational};
use crate::liesuper::{minuscule_data, osp12, Element, LieSuperAlgebra, Representation};
use crate::nilform::{
    block_multiplicities, deligne_filtration, graded_piece, is_neat_on, OddNilpotent,
};
use crate::superlinalg::{HomMap, Parity, Subquotient, SuperSpace};

/// `S` applied to the block decomposition of an odd nilpotent.
pub fn phi_of_operator(op: &OddNilpotent) -> SemisimpleObject {
    semisimplify(&Ga11Object::from(&block_multiplicities(op)))
}

/// `Φ_x(M)` for `ρ(x)` nilpotent.
pub fn phi_nilpotent(rep: &Representation, x: &Element) -> Result<SemisimpleObject> {
    let op = OddNilpotent::new(rep.rho_odd(x)?)?;
    Ok(phi_of_operator(&op))
}

/// `Φ_x(M)` for any odd `x`: restrict to `M^{y_s} = Ker y_s`, where `ρ(x)` is
/// nilpotent, and semisimplify there.
pub fn phi_general(rep: &Representation, x: &Element) -> Result<SemisimpleObject> {
    let op = restrict_to_nilpotent_part(rep, x)?;
    Ok(phi_of_operator(&op))
}

/// `ρ(x)` restricted to `Ker y_s`, with `y_s` the semisimple part of `ρ([x,x])`.
pub fn restrict_to_nilpotent_part(rep: &Representation, x: &Element) -> Result<OddNilpotent> {
    let data = minuscule_data(rep, x)?;
    let fixed = kernel_basis(&data.y_s);
    let sub = Subquotient::sub(rep.space(), &fixed)?;
    let rx = rep.rho_odd(x)?;
    let restricted = sub.induced_endo(&rx)?;
    OddNilpotent::new(restricted).map_err(|e| match e {
        Error::NotNilpotent => Error::Defect("ρ(x) not nilpotent on Ker y_s".into()),
        other => other,
    })
}

/// Simple multiplicities of an `osp(1|2)`-module, read off from the blocks of `ρ(X)`.
pub fn osp_decompose(rep: &Representation) -> Result<SemisimpleObject> {
    let x = rep.algebra().element(&[("X", int(1))])?;
    phi_nilpotent(rep, &x)
}

/// The `osp(1|2)`-module `T(M) = Gr^ev M` of a neat operator: `h` acts on `Gr^i` by `i`,
/// `X` by `Gr(x)`, and `Y` is the unique odd solution of `[Y, X] = h`, `[h, Y] = 2Y`.
pub fn t_functor(op: &OddNilpotent) -> Result<Representation> {
    t_functor_over(&Arc::new(osp12()), op)
}

pub fn t_functor_over(algebra: &Arc<LieSuperAlgebra>, op: &OddNilpotent) -> Result<Representation> {
    if !is_neat_on(op) {
        return Err(Error::NotNeat);
    }
    let f = deligne_filtration(op)?;
    let weights: Vec<i64> = f.weights().into_iter().rev().collect();
    let pieces: Vec<(i64, Subquotient)> = weights
        .iter()
        .map(|&i| graded_piece(op, &f, i).map(|g| (i, g)))
        .collect::<Result<_>>()?;

    // Lay the pieces out in one space; remember where each piece's basis lands.
    let mut items = Vec::new();
    for (i, g) in &pieces {
        for l in 0..g.dim() {
            items.push((format!("{i}:{}", g.space().label(l)), g.space().parity(l)));
        }
    }
    let (space, position) = SuperSpace::from_labelled(&items)?;
    let n = space.dim();
    let mut offsets = Vec::new();
    let mut acc = 0;
    for (_, g) in &pieces {
        offsets.push(acc);
        acc += g.dim();
    }

    let mut h = Matrix::zeros(n, n);
    let mut xm = Matrix::zeros(n, n);
    for (p, (i, g)) in pieces.iter().enumerate() {
        for l in 0..g.dim() {
            let col = position[offsets[p] + l];
            h[(col, col)] = int(*i);
            let image = op.matrix().mul_vec(&g.representatives().column(l));
            if let Some(q) = pieces.iter().position(|(w, _)| *w == i - 2) {
                let coords = pieces[q].1.project(&image)?;
                for (r, c) in coords.iter().enumerate() {
                    xm[(position[offsets[q] + r], col)] = c.clone();
                }
            }
        }
    }
    let y = solve_lowering(&space, &h, &xm)?;
    let e = &y * &y;
    let fm = &xm * &xm;
    let matrices = algebra
        .names()
        .iter()
        .map(|name| match name.as_str() {
            "h" => Ok(h.clone()),
            "E" => Ok(e.clone()),
            "F" => Ok(fm.clone()),
            "X" => Ok(xm.clone()),
            "Y" => Ok(y.clone()),
            other => Err(Error::InvalidArgument(format!(
                "not an osp(1|2) basis element: {other}"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new_checked(algebra.clone(), space, matrices)?;
    Ok(rep)
}

/// Odd `Y` with `YX + XY = h` and `hY − Yh = 2Y`; fails unless the solution is unique.
pub fn solve_lowering(space: &SuperSpace, h: &Matrix, x: &Matrix) -> Result<Matrix> {
    let n = space.dim();
    // Unknowns: entries (r, c) of Y allowed for an odd map.
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| space.parity(r) != space.parity(c))
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            // (YX + XY)[r][c] = Σ_k Y[r][k] X[k][c] + X[r][k] Y[k][c]
            let mut eq = vec![Rational::from_integer(0.into()); slots.len()];
            // (hY − Yh − 2Y)[r][c]
            let mut eq2 = eq.clone();
            for (u, &(a, b)) in slots.iter().enumerate() {
                if a == r {
                    eq[u] += &x[(b, c)];
                    eq2[u] -= &h[(b, c)];
                }
                if b == c {
                    eq[u] += &x[(r, a)];
                    eq2[u] += &h[(r, a)];
                }
                if a == r && b == c {
                    eq2[u] -= int(2);
                }
            }
            rows.push(eq);
            rhs.push(h[(r, c)].clone());
            rows.push(eq2);
            rhs.push(int(0));
        }
    }
    let a = Matrix::from_rows(rows);
    let (sol, kernel) = solve_affine(&a, &rhs).ok_or(Error::NoCompletion)?;
    if kernel.cols() != 0 {
        return Err(Error::Defect("lowering operator is not unique".into()));
    }
    let mut y = Matrix::zeros(n, n);
    for (u, &(r, c)) in slots.iter().enumerate() {
        y[(r, c)] = sol[u].clone();
    }
    HomMap::endo(space.clone(), Parity::Odd, y.clone())?;
    Ok(y)
}
