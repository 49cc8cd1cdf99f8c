use super::algebra::Element;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exact::{int, jordan_chevalley, min_poly, squarefree_part, Matrix};

/// For odd `x`: `y = [x, x]` and the Jordan–Chevalley parts of `ρ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusculeData {
    pub x: Element,
    pub y: Element,
    pub rho_x: Matrix,
    pub y_s: Matrix,
    pub y_n: Matrix,
}

pub fn minuscule_data(rep: &Representation, x: &Element) -> Result<MinusculeData> {
    let g = rep.algebra();
    if !g.is_odd(x) {
        return Err(Error::Parity("minuscule data needs an odd element".into()));
    }
    let y = g.bracket(x, x);
    let rho_x = rep.rho_matrix(x);
    let rho_y = rep.rho_matrix(&y);
    if rho_y != (&rho_x * &rho_x).scale(&int(2)) {
        return Err(Error::InvalidRepresentation(vec![
            "ρ([x,x]) ≠ 2ρ(x)²".into()
        ]));
    }
    let (y_s, y_n) = jordan_chevalley(&rho_y)?;
    let ok = Matrix::commutator(&y_s, &y_n).is_zero()
        && y_n.is_nilpotent()
        && Matrix::commutator(&y_s, &rho_x).is_zero()
        && Matrix::commutator(&y_n, &rho_x).is_zero()
        && {
            let p = min_poly(&y_s);
            squarefree_part(&p)? == p
        };
    if !ok {
        return Err(Error::Defect("minuscule data invariants".into()));
    }
    Ok(MinusculeData {
        x: x.clone(),
        y,
        rho_x,
        y_s,
        y_n,
    })
}
