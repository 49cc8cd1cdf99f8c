use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, min_poly, solve_affine, squarefree_part, Matrix, Rational};
use crate::functors::osp_decompose;
use crate::liesuper::{adjoint_rep, osp12, Element, LieSuperAlgebra, Representation};
use crate::nilform::{
    block_multiplicities, deligne_filtration, is_neat_on, Filtration, OddNilpotent,
};
use crate::superlinalg::Parity;

/// Whether `x` acts nilpotently and neatly on a faithful representation, which
/// certifies `x ∈ 𝔤_neat` when the ambient supergroup is quasi-reductive.
pub fn neat_in_g(rep: &Representation, x: &Element) -> Result<bool> {
    if !rep.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let rx = rep.rho_odd(x)?;
    match OddNilpotent::new(rx) {
        Ok(op) => Ok(is_neat_on(&op)),
        Err(Error::NotNilpotent) => Ok(false),
        Err(e) => Err(e),
    }
}

/// An `osp(1|2)`-triple `(h, x, Y)` inside `𝔤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspTriple {
    pub algebra: Arc<LieSuperAlgebra>,
    pub x: Element,
    pub h: Element,
    pub y: Element,
    pub relations: bool,
    /// Eigenvalues of `ρ(h)` with multiplicities, ascending.
    pub spectrum: Vec<(i64, usize)>,
}

/// Linear map `w ↦ f(w)` on the odd part of `𝔤`, as a matrix in full coordinates.
fn odd_linear_map(g: &LieSuperAlgebra, f: impl Fn(&Element) -> Element) -> (Vec<usize>, Matrix) {
    let odd = g.indices(Parity::Odd);
    let cols: Vec<Vec<Rational>> = odd.iter().map(|&i| f(&g.basis_element(i)).coeffs).collect();
    (odd, Matrix::from_columns(g.dim(), &cols))
}

fn embed(g: &LieSuperAlgebra, odd: &[usize], coords: &[Rational]) -> Element {
    let mut e = g.zero();
    for (i, c) in odd.iter().zip(coords) {
        e.coeffs[*i] = c.clone();
    }
    e
}

/// Integer eigenvalues with multiplicities of a matrix, provided it is diagonalizable
/// over ℤ with eigenvalues in `[-bound, bound]`; `None` otherwise.
pub fn integer_spectrum(m: &Matrix, bound: i64) -> Option<Vec<(i64, usize)>> {
    let n = m.rows();
    let mut out = Vec::new();
    let mut total = 0;
    for c in -bound..=bound {
        let shifted = m - &Matrix::scalar(n, &int(c));
        let d = kernel_basis(&shifted).cols();
        if d > 0 {
            out.push((c, d));
            total += d;
        }
    }
    (total == n).then_some(out)
}

/// Weights `k − 2j` of every chain of an odd nilpotent, with multiplicities.
pub fn chain_weight_multiset(op: &OddNilpotent) -> Vec<(i64, usize)> {
    let mut w: BTreeMap<i64, usize> = BTreeMap::new();
    for (b, m) in &block_multiplicities(op).blocks {
        let k = b.length as i64 - 1;
        for j in 0..b.length as i64 {
            *w.entry(k - 2 * j).or_insert(0) += m;
        }
    }
    w.into_iter().collect()
}

/// Completes a neat `x` to an `osp(1|2)`-triple: `h = [x, w]` with `[[x, w], x] = −2x`,
/// then `Y` with `[Y, x] = h`, `[h, Y] = 2Y`. Both steps are linear solves; the result
/// is verified exactly, including the spectrum certificate on `rep`.
pub fn jm_triple(rep: &Representation, x: &Element) -> Result<OspTriple> {
    let algebra = rep.algebra().clone();
    let g = algebra.as_ref();
    if !neat_in_g(rep, x)? {
        return Err(Error::NotNeat);
    }

    // Step 1: w ↦ [[x, w], x] on 𝔤₁̄.
    let (odd, a) = odd_linear_map(g, |w| g.bracket(&g.bracket(x, w), x));
    let rhs = x.scale(&int(-2)).coeffs;
    let (w, _) = solve_affine(&a, &rhs).ok_or(Error::NoGradingElement)?;
    let h = g.bracket(x, &embed(g, &odd, &w));

    // Step 2: Y ↦ ([Y, x], [h, Y] − 2Y) on 𝔤₁̄.
    let (_, a1) = odd_linear_map(g, |y| g.bracket(y, x));
    let (_, a2) = odd_linear_map(g, |y| g.bracket(&h, y).sub(&y.scale(&int(2))));
    let mut rhs = h.coeffs.clone();
    rhs.extend(std::iter::repeat_n(int(0), g.dim()));
    let (ycoords, _) = solve_affine(&a1.vstack(&a2), &rhs).ok_or(Error::NoCompletion)?;
    let y = embed(g, &odd, &ycoords);

    // Step 3: relations, and ad_h semisimple with integer spectrum.
    let relations = g.bracket(&h, x) == x.scale(&int(-2))
        && g.bracket(&h, &y) == y.scale(&int(2))
        && g.bracket(&y, x) == h;
    if !relations {
        return Err(Error::Defect("triple relations fail".into()));
    }
    let ad_h = adjoint_rep(&algebra).rho_matrix(&h);
    let mu = min_poly(&ad_h);
    let bound = 2 * g.dim().max(rep.dim()) as i64 + 2;
    if squarefree_part(&mu)? != mu || integer_spectrum(&ad_h, 2 * bound).is_none() {
        return Err(Error::Defect(
            "ad_h is not semisimple with integer spectrum".into(),
        ));
    }

    // Step 4: spectrum of ρ(h) equals the chain weights of ρ(x).
    let spectrum = integer_spectrum(&rep.rho_matrix(&h), bound)
        .ok_or_else(|| Error::Defect("ρ(h) is not diagonalizable over ℤ".into()))?;
    let op = OddNilpotent::new(rep.rho_odd(x)?)?;
    if spectrum != chain_weight_multiset(&op) {
        return Err(Error::Defect("spectrum certificate fails".into()));
    }
    Ok(OspTriple {
        algebra,
        x: x.clone(),
        h,
        y,
        relations,
        spectrum,
    })
}

/// Images of `h, E, F, X, Y` under the map `osp(1|2) → 𝔤` given by a triple.
pub fn triple_images(t: &OspTriple) -> [Element; 5] {
    let g = t.algebra.as_ref();
    let half = crate::exact::ratio(1, 2);
    [
        t.h.clone(),
        g.bracket(&t.y, &t.y).scale(&half),
        g.bracket(&t.x, &t.x).scale(&half),
        t.x.clone(),
        t.y.clone(),
    ]
}

/// Every structure constant of `osp(1|2)` not respected by the triple's images.
pub fn triple_homomorphism_defects(t: &OspTriple) -> Vec<String> {
    let osp = osp12();
    let g = t.algebra.as_ref();
    let images = triple_images(t);
    let order = ["h", "E", "F", "X", "Y"];
    let image_of = |name: &str| &images[order.iter().position(|n| *n == name).unwrap()];
    let mut out = Vec::new();
    for i in 0..osp.dim() {
        for j in 0..osp.dim() {
            let lhs = g.bracket(image_of(osp.name(i)), image_of(osp.name(j)));
            let mut rhs = g.zero();
            for (k, c) in osp.basis_bracket(i, j) {
                rhs = rhs.add(&image_of(osp.name(*k)).scale(c));
            }
            if lhs != rhs {
                out.push(format!("[{}, {}]", osp.name(i), osp.name(j)));
            }
        }
    }
    out
}

/// The `osp(1|2)`-module structure on the space of `rep` given by `ρ(h), ρ(x), ρ(Y)`.
pub fn triple_restriction(rep: &Representation, t: &OspTriple) -> Result<Representation> {
    let osp = Arc::new(osp12());
    let images = triple_images(t);
    let order = ["h", "E", "F", "X", "Y"];
    let matrices = osp
        .names()
        .iter()
        .map(|n| rep.rho_matrix(&images[order.iter().position(|o| o == n).unwrap()]))
        .collect();
    Representation::new_checked(osp, rep.space().clone(), matrices)
}

/// Checks that the restriction along the triple decomposes like `Φ_x`.
pub fn restriction_consistent(rep: &Representation, t: &OspTriple) -> Result<bool> {
    let r = triple_restriction(rep, t)?;
    Ok(osp_decompose(&r)? == crate::functors::phi_nilpotent(rep, &t.x)?)
}

/// Deligne filtration of `ad_x` on `𝔤`.
pub fn deligne_on_algebra(algebra: &Arc<LieSuperAlgebra>, x: &Element) -> Result<Filtration> {
    let ad = adjoint_rep(algebra);
    let op = OddNilpotent::new(ad.rho_odd(x)?)?;
    deligne_filtration(&op)
}
