use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, Matrix, Rational};
use crate::liesuper::{adjoint_rep, Element, LieSuperAlgebra, Representation};
use crate::superlinalg::{HomMap, Parity, Subquotient, SuperSpace};

fn ker_mod_im(space: &SuperSpace, x: &Matrix) -> Result<Subquotient> {
    Subquotient::new(space, &kernel_basis(x), x)
}

/// `M_x = Ker ρ(x) / Im ρ(x)` with the maps induced by the centralizer of `x`.
#[derive(Clone, Debug)]
pub struct DsModule {
    pub subquotient: Subquotient,
    /// Basis indices `b` with `[b, x] = 0` and the induced action of `b` on `M_x`.
    pub induced: Vec<(usize, HomMap)>,
    rep: Representation,
    x: Element,
}

impl DsModule {
    pub fn space(&self) -> &SuperSpace {
        self.subquotient.space()
    }

    /// Action on `M_x` of any homogeneous element commuting with `x`.
    pub fn act(&self, e: &Element) -> Result<HomMap> {
        let g = self.rep.algebra();
        if !g.bracket(e, &self.x).is_zero() {
            return Err(Error::InvalidArgument(
                "element does not commute with x".into(),
            ));
        }
        self.subquotient.induced_endo(&self.rep.rho(e)?)
    }
}

/// Duflo–Serganova module of `rep` at a square-zero odd `x`.
pub fn ds_module(rep: &Representation, x: &Element) -> Result<DsModule> {
    let g = rep.algebra();
    let rx = rep.rho_odd(x)?;
    if !(rx.matrix() * rx.matrix()).is_zero() {
        return Err(Error::NotSquareZero);
    }
    let subquotient = ker_mod_im(rep.space(), rx.matrix())?;
    let mut induced = Vec::new();
    for b in 0..g.dim() {
        if g.bracket(&g.basis_element(b), x).is_zero() {
            induced.push((b, subquotient.induced_endo(rep.basis_action(b))?));
        }
    }
    let sq = subquotient.space().sdim();
    if sq != rep.space().sdim() {
        return Err(Error::Defect(format!("sdim M_x = {sq} ≠ sdim M")));
    }
    Ok(DsModule {
        subquotient,
        induced,
        rep: rep.clone(),
        x: x.clone(),
    })
}

/// `𝔤_x = Ker ad_x / Im ad_x` together with the representatives of its basis.
#[derive(Clone, Debug)]
pub struct DsAlgebra {
    pub algebra: Arc<LieSuperAlgebra>,
    pub subquotient: Subquotient,
}

impl DsAlgebra {
    /// Representative in `𝔤` of the `i`-th basis element of `𝔤_x`.
    pub fn representative(&self, i: usize) -> Element {
        Element {
            coeffs: self.subquotient.representatives().column(i),
        }
    }
}

/// Induced structure constants on `Ker ad_x / Im ad_x`; requires `[x, x] = 0`.
pub fn ds_algebra(algebra: &Arc<LieSuperAlgebra>, x: &Element) -> Result<DsAlgebra> {
    let g = algebra.as_ref();
    if !g.is_odd(x) {
        return Err(Error::Parity("DS needs an odd element".into()));
    }
    if !g.bracket(x, x).is_zero() {
        return Err(Error::NotSquareZero);
    }
    let ad = adjoint_rep(algebra);
    let adx = ad.rho_matrix(x);
    let sq = ker_mod_im(ad.space(), &adx)?;
    let d = sq.dim();
    let reps: Vec<Element> = (0..d)
        .map(|i| Element {
            coeffs: sq.representatives().column(i),
        })
        .collect();
    let basis: Vec<(String, Parity)> = (0..d)
        .map(|i| (sq.space().label(i).to_string(), sq.space().parity(i)))
        .collect();
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i..d {
            let b = g.bracket(&reps[i], &reps[j]);
            let coords = sq.project(&b.coeffs)?;
            let terms: Vec<(usize, Rational)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                brackets.push(((i, j), terms));
            }
        }
    }
    let quotient = LieSuperAlgebra::new(basis, brackets)?;
    if quotient.names() != sq.space().labels().cloned().collect::<Vec<_>>().as_slice() {
        return Err(Error::Defect("quotient basis reordered".into()));
    }
    let problems = quotient.validate();
    if !problems.is_empty() {
        return Err(Error::Defect(format!(
            "induced bracket fails Jacobi: {}",
            problems.join("; ")
        )));
    }
    Ok(DsAlgebra {
        algebra: Arc::new(quotient),
        subquotient: sq,
    })
}

/// `M_x` as a representation of `𝔤_x`.
pub fn ds_representation(rep: &Representation, x: &Element) -> Result<(DsAlgebra, Representation)> {
    let alg = ds_algebra(rep.algebra(), x)?;
    let module = ds_module(rep, x)?;
    let matrices = (0..alg.algebra.dim())
        .map(|i| module.act(&alg.representative(i)).map(HomMap::into_matrix))
        .collect::<Result<Vec<_>>>()?;
    let out = Representation::new_checked(alg.algebra.clone(), module.space().clone(), matrices)?;
    Ok((alg, out))
}

/// An odd rank-one square-zero element `E_{1,m+1}` of `𝔤𝔩(m|n)` (requires `m, n ≥ 1`).
pub fn rank_one_odd(algebra: &LieSuperAlgebra, m: usize, n: usize) -> Result<Element> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "rank-one odd elements need m, n ≥ 1".into(),
        ));
    }
    let wide = m + n > 9;
    let name = if wide {
        format!("E1,{}", m + 1)
    } else {
        format!("E1{}", m + 1)
    };
    algebra.element(&[(name.as_str(), int(1))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::gl_superalgebra;

    #[test]
    fn gl11_e_kills_defining_module() {
        let (g, v) = gl_superalgebra(1, 1).unwrap();
        let e = g.element(&[("E12", int(1))]).unwrap();
        let d = ds_module(&v, &e).unwrap();
        assert_eq!(d.space().dim(), 0);
        let d0 = ds_module(&v, &g.zero()).unwrap();
        assert_eq!(d0.space(), v.space());
        let ef = g.element(&[("E12", int(1)), ("E21", int(1))]).unwrap();
        assert_eq!(ds_module(&v, &ef).err(), Some(Error::NotSquareZero));
    }

    #[test]
    fn gl_reduction_dims() {
        for (m, n) in [(2, 2), (3, 2), (1, 1), (2, 1)] {
            let (g, v) = gl_superalgebra(m, n).unwrap();
            let x = rank_one_odd(&g, m, n).unwrap();
            let ds = ds_algebra(&g, &x).unwrap();
            let (e, o) = ds.algebra.graded_dim();
            let (m1, n1) = (m - 1, n - 1);
            assert_eq!((e, o), (m1 * m1 + n1 * n1, 2 * m1 * n1), "gl({m}|{n})");
            let (_, r) = ds_representation(&v, &x).unwrap();
            assert!(r.is_valid());
            assert_eq!(r.space().sdim(), v.space().sdim());
        }
        let (g, _) = gl_superalgebra(1, 2).unwrap();
        let same = ds_algebra(&g, &g.zero()).unwrap();
        assert_eq!(same.algebra.graded_dim(), g.graded_dim());
    }
}
