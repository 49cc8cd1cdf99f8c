use num_traits::{One, Zero};

use super::space::{direct_sum, dual, tensor, Parity, SuperSpace};
use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Rational};

/// Parity-homogeneous linear map between super spaces. Entry `(r, c)` of the
/// matrix is the coefficient of target basis vector `r` in the image of source
/// basis vector `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    source: SuperSpace,
    target: SuperSpace,
    parity: Parity,
    matrix: Matrix,
}

fn check_blocks(
    source: &SuperSpace,
    target: &SuperSpace,
    parity: Parity,
    m: &Matrix,
) -> Result<()> {
    if m.rows() != target.dim() || m.cols() != source.dim() {
        return Err(Error::Shape(format!(
            "matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            target.dim(),
            source.dim()
        )));
    }
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() && target.parity(r) != source.parity(c) + parity {
                return Err(Error::Parity(format!(
                    "nonzero entry ({r},{c}) in a block forbidden for a {parity} map"
                )));
            }
        }
    }
    Ok(())
}

impl HomMap {
    pub fn new(
        source: SuperSpace,
        target: SuperSpace,
        parity: Parity,
        matrix: Matrix,
    ) -> Result<Self> {
        check_blocks(&source, &target, parity, &matrix)?;
        Ok(HomMap {
            source,
            target,
            parity,
            matrix,
        })
    }

    pub fn endo(space: SuperSpace, parity: Parity, matrix: Matrix) -> Result<Self> {
        HomMap::new(space.clone(), space, parity, matrix)
    }

    /// Determines the parity from the nonzero entries; the zero map is even.
    pub fn infer(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> Result<Self> {
        let parity = (0..matrix.rows())
            .flat_map(|r| (0..matrix.cols()).map(move |c| (r, c)))
            .find(|&rc| !matrix[rc].is_zero())
            .map_or(Parity::Even, |(r, c)| target.parity(r) + source.parity(c));
        HomMap::new(source, target, parity, matrix)
    }

    pub fn identity(space: &SuperSpace) -> Self {
        HomMap {
            source: space.clone(),
            target: space.clone(),
            parity: Parity::Even,
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn zero(source: &SuperSpace, target: &SuperSpace, parity: Parity) -> Self {
        HomMap {
            source: source.clone(),
            target: target.clone(),
            parity,
            matrix: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &HomMap) -> Result<HomMap> {
        if first.target != self.source {
            return Err(Error::Shape("compose: target/source mismatch".into()));
        }
        Ok(HomMap {
            source: first.source.clone(),
            target: self.target.clone(),
            parity: self.parity + first.parity,
            matrix: &self.matrix * &first.matrix,
        })
    }

    pub fn scale(&self, c: &Rational) -> HomMap {
        HomMap {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &HomMap) -> Result<HomMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("add: spaces differ".into()));
        }
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::Parity("sum of maps of different parity".into()));
        }
        let parity = if self.is_zero() {
            other.parity
        } else {
            self.parity
        };
        Ok(HomMap {
            source: self.source.clone(),
            target: self.target.clone(),
            parity,
            matrix: &self.matrix + &other.matrix,
        })
    }

    /// Super commutator `fg − (−1)^{|f||g|} gf` of two endomorphisms.
    pub fn supercommutator(&self, other: &HomMap) -> Result<HomMap> {
        if !self.is_endo() || self.source != other.source || !other.is_endo() {
            return Err(Error::Shape(
                "supercommutator needs endomorphisms of one space".into(),
            ));
        }
        let sign = int(self.parity.koszul(other.parity));
        let m = &(&self.matrix * &other.matrix) - &(&other.matrix * &self.matrix).scale(&sign);
        Ok(HomMap {
            source: self.source.clone(),
            target: self.target.clone(),
            parity: self.parity + other.parity,
            matrix: m,
        })
    }

    /// `tr(f|even) − tr(f|odd)` for an even endomorphism.
    pub fn supertrace(&self) -> Result<Rational> {
        if !self.is_endo() || self.parity != Parity::Even {
            return Err(Error::SupertraceUndefined);
        }
        let mut acc = Rational::zero();
        for i in 0..self.source.dim() {
            match self.source.parity(i) {
                Parity::Even => acc += &self.matrix[(i, i)],
                Parity::Odd => acc -= &self.matrix[(i, i)],
            }
        }
        Ok(acc)
    }

    /// Π applied to source and target; the matrix data is only re-indexed.
    pub fn parity_shift(&self) -> HomMap {
        let (s, t) = (&self.source, &self.target);
        let mut m = Matrix::zeros(t.dim(), s.dim());
        for r in 0..t.dim() {
            for c in 0..s.dim() {
                m[(t.shifted_index(r), s.shifted_index(c))] = self.matrix[(r, c)].clone();
            }
        }
        HomMap {
            source: s.parity_shift(),
            target: t.parity_shift(),
            parity: self.parity,
            matrix: m,
        }
    }

    /// Transpose `f*: W* → V*` with `(f*φ)(v) = (−1)^{|f||φ|} φ(f(v))`.
    pub fn dual_map(&self) -> HomMap {
        let (v, w) = (&self.source, &self.target);
        let m = Matrix::from_fn(v.dim(), w.dim(), |i, j| {
            let e = &self.matrix[(j, i)];
            if self.parity.koszul(w.parity(j)) < 0 {
                -e
            } else {
                e.clone()
            }
        });
        HomMap {
            source: dual(w),
            target: dual(v),
            parity: self.parity,
            matrix: m,
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }
}

/// `f ⊗ g` with the Koszul rule `(f⊗g)(v⊗w) = (−1)^{|g||v|} f(v) ⊗ g(w)`.
pub fn tensor_maps(f: &HomMap, g: &HomMap) -> HomMap {
    let src = tensor(&f.source, &g.source);
    let tgt = tensor(&f.target, &g.target);
    let mut m = Matrix::zeros(tgt.space.dim(), src.space.dim());
    let f_nz: Vec<Vec<(usize, &Rational)>> = (0..f.source.dim())
        .map(|c| {
            (0..f.target.dim())
                .filter(|&r| !f.matrix[(r, c)].is_zero())
                .map(|r| (r, &f.matrix[(r, c)]))
                .collect()
        })
        .collect();
    let g_nz: Vec<Vec<(usize, &Rational)>> = (0..g.source.dim())
        .map(|c| {
            (0..g.target.dim())
                .filter(|&r| !g.matrix[(r, c)].is_zero())
                .map(|r| (r, &g.matrix[(r, c)]))
                .collect()
        })
        .collect();
    for (col, &(i, j)) in src.pairs.iter().enumerate() {
        let negate = g.parity.koszul(f.source.parity(i)) < 0;
        for &(r, a) in &f_nz[i] {
            for &(s, b) in &g_nz[j] {
                let v = a * b;
                m[(tgt.index(r, s), col)] = if negate { -v } else { v };
            }
        }
    }
    HomMap {
        source: src.space,
        target: tgt.space,
        parity: f.parity + g.parity,
        matrix: m,
    }
}

/// Symmetry `b_{V,W}: v⊗w ↦ (−1)^{|v||w|} w⊗v`.
pub fn braiding(v: &SuperSpace, w: &SuperSpace) -> HomMap {
    let src = tensor(v, w);
    let tgt = tensor(w, v);
    let mut m = Matrix::zeros(tgt.space.dim(), src.space.dim());
    for (col, &(i, j)) in src.pairs.iter().enumerate() {
        m[(tgt.index(j, i), col)] = int(v.parity(i).koszul(w.parity(j)));
    }
    HomMap {
        source: src.space,
        target: tgt.space,
        parity: Parity::Even,
        matrix: m,
    }
}

/// Evaluation `V ⊗ V* → 𝟙`, `v ⊗ φ ↦ (−1)^{|v||φ|} φ(v)`.
pub fn evaluation(v: &SuperSpace) -> HomMap {
    let src = tensor(v, &dual(v));
    let unit = SuperSpace::unit();
    let mut m = Matrix::zeros(1, src.space.dim());
    for i in 0..v.dim() {
        let c = src.index(i, i);
        m[(0, c)] = if v.parity(i) == Parity::Odd {
            -Rational::one()
        } else {
            Rational::one()
        };
    }
    HomMap {
        source: src.space,
        target: unit,
        parity: Parity::Even,
        matrix: m,
    }
}

/// `f ⊕ g: V ⊕ W → V' ⊕ W'`; both maps must share a parity (or be zero).
pub fn direct_sum_maps(f: &HomMap, g: &HomMap) -> Result<HomMap> {
    let src = direct_sum(&f.source, &g.source);
    let tgt = direct_sum(&f.target, &g.target);
    let mut m = Matrix::zeros(tgt.space.dim(), src.space.dim());
    for r in 0..f.target.dim() {
        for c in 0..f.source.dim() {
            m[(tgt.left[r], src.left[c])] = f.matrix[(r, c)].clone();
        }
    }
    for r in 0..g.target.dim() {
        for c in 0..g.source.dim() {
            m[(tgt.right[r], src.right[c])] = g.matrix[(r, c)].clone();
        }
    }
    HomMap::infer(src.space, tgt.space, m).map(|h| {
        if h.is_zero() && f.parity == g.parity {
            HomMap {
                parity: f.parity,
                ..h
            }
        } else {
            h
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_22(a: [i64; 8]) -> HomMap {
        // (2|2): odd maps live in the off-diagonal 2x2 blocks.
        let m = Matrix::from_ints(&[
            [0, 0, a[0], a[1]],
            [0, 0, a[2], a[3]],
            [a[4], a[5], 0, 0],
            [a[6], a[7], 0, 0],
        ]);
        HomMap::endo(SuperSpace::with_dims(2, 2), Parity::Odd, m).unwrap()
    }

    #[test]
    fn parity_blocks_enforced() {
        let v = SuperSpace::with_dims(1, 1);
        assert!(HomMap::endo(
            v.clone(),
            Parity::Even,
            Matrix::from_ints(&[[0, 1], [0, 0]])
        )
        .is_err());
        assert!(HomMap::endo(v, Parity::Odd, Matrix::from_ints(&[[0, 1], [0, 0]])).is_ok());
    }

    #[test]
    fn supertrace_examples() {
        assert_eq!(
            HomMap::identity(&SuperSpace::with_dims(3, 2))
                .supertrace()
                .unwrap(),
            int(1)
        );
        let x = odd_22([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(x.supertrace(), Err(Error::SupertraceUndefined));
        let xx = x.supercommutator(&x).unwrap();
        assert_eq!(xx.parity(), Parity::Even);
        assert_eq!(xx.supertrace().unwrap(), int(0));
    }

    #[test]
    fn koszul_sign_on_odd_pair() {
        let v = SuperSpace::with_dims(1, 1);
        // f = g = the odd swap; on v2⊗v1 (v odd) the f(v)⊗g(w) term picks up −1.
        let f = HomMap::endo(v.clone(), Parity::Odd, Matrix::from_ints(&[[0, 1], [1, 0]])).unwrap();
        let fg = tensor_maps(&f, &f);
        assert_eq!(fg.parity(), Parity::Even);
        let t = tensor(&v, &v);
        let (src, dst) = (t.index(1, 0), t.index(0, 1));
        assert_eq!(fg.matrix()[(dst, src)], int(-1));
        let (src, dst) = (t.index(0, 1), t.index(1, 0));
        assert_eq!(fg.matrix()[(dst, src)], int(1));
    }

    #[test]
    fn identity_tensor_rank() {
        let g = odd_22([1, 0, 0, 0, 0, 0, 1, 0]);
        let id = HomMap::identity(&SuperSpace::with_dims(2, 1));
        assert_eq!(tensor_maps(&id, &g).matrix().rank(), 3 * g.matrix().rank());
    }

    #[test]
    fn dual_of_identity_and_ev_equivariance() {
        let v = SuperSpace::with_dims(2, 2);
        assert_eq!(
            HomMap::identity(&v).dual_map().matrix(),
            &Matrix::identity(4)
        );
        let x = odd_22([1, -2, 3, 0, 5, 1, -1, 2]);
        let on_dual = x.dual_map().scale(&int(-1));
        let act = tensor_maps(&x, &HomMap::identity(&dual(&v)))
            .add(&tensor_maps(&HomMap::identity(&v), &on_dual))
            .unwrap();
        assert!(evaluation(&v).compose(&act).unwrap().is_zero());
    }

    #[test]
    fn braiding_squares_to_identity() {
        let (v, w) = (SuperSpace::with_dims(2, 1), SuperSpace::with_dims(1, 2));
        let b = braiding(&w, &v).compose(&braiding(&v, &w)).unwrap();
        assert_eq!(b.matrix(), &Matrix::identity(9));
    }

    #[test]
    fn parity_shift_involution() {
        let x = odd_22([1, 2, 0, 0, 0, 3, 4, 0]);
        assert_eq!(x.parity_shift().parity_shift(), x);
        assert_eq!(x.parity_shift().parity(), Parity::Odd);
    }

    #[test]
    fn direct_sum_sdim_additive() {
        let f = HomMap::identity(&SuperSpace::with_dims(2, 1));
        let g = HomMap::identity(&SuperSpace::with_dims(0, 3));
        let s = direct_sum_maps(&f, &g).unwrap();
        assert_eq!(s.source().sdim(), 1 - 3);
        assert_eq!(s.supertrace().unwrap(), int(-2));
    }
}
