use std::collections::BTreeMap;

use super::blocks::{adapted_basis, is_neat_on, BlockDecomposition, OddNilpotent, PivotOrder};
use crate::error::{Error, Result};
use crate::exact::{int, rref, Matrix, Rational, SpanBuilder};
use crate::superlinalg::{HomMap, Parity, Subquotient};

/// Columns spanning the same space as `m`, in canonical (RREF) form.
fn canonical(n: usize, vectors: &[Vec<Rational>]) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zeros(n, 0);
    }
    let m = Matrix::from_columns(n, vectors);
    let (r, pivots) = rref(&m.transpose());
    let cols: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Matrix::from_columns(n, &cols)
}

/// Increasing filtration `ℱ^i`, stored for `i` in `[low, high]`; below `low` it is
/// zero and from `high` on it is the whole space. Bases are canonical, so equal
/// filtrations compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    dim: usize,
    levels: BTreeMap<i64, Matrix>,
}

impl Filtration {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> &BTreeMap<i64, Matrix> {
        &self.levels
    }

    pub fn low(&self) -> i64 {
        *self.levels.keys().next().unwrap()
    }

    pub fn high(&self) -> i64 {
        *self.levels.keys().next_back().unwrap()
    }

    /// `ℱ^i` for any integer `i`.
    pub fn level(&self, i: i64) -> Matrix {
        if i < self.low() {
            Matrix::zeros(self.dim, 0)
        } else if i > self.high() {
            Matrix::identity(self.dim)
        } else {
            self.levels[&i].clone()
        }
    }

    pub fn level_dim(&self, i: i64) -> usize {
        self.level(i).cols()
    }

    /// `dim Gr^i = dim ℱ^i − dim ℱ^{i−1}`.
    pub fn gr_dim(&self, i: i64) -> usize {
        self.level_dim(i) - self.level_dim(i - 1)
    }

    /// The weights `i` with `Gr^i ≠ 0`.
    pub fn weights(&self) -> Vec<i64> {
        (self.low()..=self.high())
            .filter(|&i| self.gr_dim(i) > 0)
            .collect()
    }
}

/// Checks `x ℱ^i ⊆ ℱ^{i−2}` and that `x^i: Gr^i → Gr^{−i}` is bijective for `i ≥ 0`.
pub fn verify_deligne(f: &Filtration, x: &Matrix) -> Result<()> {
    let (low, high) = (f.low(), f.high());
    for i in low..=high + 2 {
        let target = SpanBuilder::from_columns(&f.level(i - 2));
        let src = f.level(i);
        for c in 0..src.cols() {
            if !target.contains(&x.mul_vec(&src.column(c))) {
                return Err(Error::Defect(format!("x ℱ^{i} ⊄ ℱ^{}", i - 2)));
            }
        }
    }
    let mut power = Matrix::identity(f.dim());
    for i in 0..=high.max(-low) + 1 {
        let below = f.level(-i - 1);
        let image = &power * &f.level(i);
        let rank = below.hstack(&image).rank() - below.cols();
        if rank != f.gr_dim(i) || f.gr_dim(i) != f.gr_dim(-i) {
            return Err(Error::Defect(format!(
                "x^{i}: Gr^{i} → Gr^-{i} is not bijective"
            )));
        }
        power = &power * x;
    }
    Ok(())
}

/// Weight of `a_j` on a chain of length `k + 1` is `k − 2j`.
fn chain_weights(dec: &BlockDecomposition) -> Vec<(i64, Vec<Rational>)> {
    let mut out = Vec::new();
    for c in dec.chains.as_ref().expect("adapted basis carries chains") {
        let k = c.block.length as i64 - 1;
        for (j, v) in c.vectors.iter().enumerate() {
            out.push((k - 2 * j as i64, v.clone()));
        }
    }
    out
}

/// Deligne filtration built from the block normal form and verified before returning.
pub fn deligne_filtration(op: &OddNilpotent) -> Result<Filtration> {
    deligne_filtration_with(op, PivotOrder::Canonical)
}

/// As [`deligne_filtration`], with chains chosen in the given pivot order.
pub fn deligne_filtration_with(op: &OddNilpotent, order: PivotOrder) -> Result<Filtration> {
    let dec = adapted_basis(op, order)?;
    let n = op.space().dim();
    let weighted = chain_weights(&dec);
    let top = weighted.iter().map(|(w, _)| *w).max().unwrap_or(0);
    let mut levels = BTreeMap::new();
    for i in -top - 1..=top {
        let vecs: Vec<Vec<Rational>> = weighted
            .iter()
            .filter(|(w, _)| *w <= i)
            .map(|(_, v)| v.clone())
            .collect();
        levels.insert(i, canonical(n, &vecs));
    }
    let f = Filtration { dim: n, levels };
    verify_deligne(&f, op.matrix())?;
    Ok(f)
}

/// `Gr^i = ℱ^i / ℱ^{i−1}` as a subquotient of the ambient space.
pub fn graded_piece(op: &OddNilpotent, f: &Filtration, i: i64) -> Result<Subquotient> {
    Subquotient::new(op.space(), &f.level(i), &f.level(i - 1))
}

/// The even endomorphism acting by `k − 2j` on `a_j` of every length-`(k+1)` chain.
pub fn grading_operator(op: &OddNilpotent) -> Result<HomMap> {
    if !is_neat_on(op) {
        return Err(Error::GradingRequiresNeat);
    }
    let dec = adapted_basis(op, PivotOrder::Canonical)?;
    let n = op.space().dim();
    let weighted = chain_weights(&dec);
    let cols: Vec<Vec<Rational>> = weighted.iter().map(|(_, v)| v.clone()).collect();
    let p = Matrix::from_columns(n, &cols);
    let p_inv = p
        .inverse()
        .ok_or_else(|| Error::Defect("chain basis not invertible".into()))?;
    let mut d = Matrix::zeros(n, n);
    for (i, (w, _)) in weighted.iter().enumerate() {
        d[(i, i)] = int(*w);
    }
    let h = &(&p * &d) * &p_inv;
    let hx = Matrix::commutator(&h, op.matrix());
    if hx != op.matrix().scale(&int(-2)) {
        return Err(Error::Defect("[h, x] ≠ −2x".into()));
    }
    HomMap::endo(op.space().clone(), Parity::Even, h)
}

/// Whether every odd-weight graded piece vanishes.
pub fn odd_weights_vanish(f: &Filtration) -> bool {
    (f.low()..=f.high())
        .filter(|i| i.rem_euclid(2) == 1)
        .all(|i| f.gr_dim(i) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::chain_space;
    use crate::superlinalg::SuperSpace;

    fn chain_op(length: usize) -> OddNilpotent {
        let (space, pos) = chain_space(length, Parity::Even, "a");
        let mut m = Matrix::zeros(length, length);
        for j in 0..length - 1 {
            m[(pos[j + 1], pos[j])] = int(1);
        }
        OddNilpotent::from_matrix(space, m).unwrap()
    }

    #[test]
    fn m2_filtration() {
        let op = chain_op(3);
        let f = deligne_filtration(&op).unwrap();
        // canonical positions: a0 → 0, a2 → 1, a1 → 2
        assert_eq!(f.level(-2), Matrix::from_ints(&[[0], [1], [0]]));
        assert_eq!(f.level(-1), f.level(-2));
        assert_eq!(f.level(0), Matrix::from_ints(&[[0, 0], [1, 0], [0, 1]]));
        assert_eq!(f.level(2), Matrix::identity(3));
        assert_eq!(f.level(-3).cols(), 0);
        assert_eq!(f.weights(), vec![-2, 0, 2]);
        let h = grading_operator(&op).unwrap();
        assert_eq!(
            h.matrix(),
            &Matrix::from_ints(&[[2, 0, 0], [0, -2, 0], [0, 0, 0]])
        );
    }

    #[test]
    fn trivial_module() {
        let op =
            OddNilpotent::from_matrix(SuperSpace::with_dims(2, 1), Matrix::zeros(3, 3)).unwrap();
        let f = deligne_filtration(&op).unwrap();
        assert_eq!(f.level_dim(0), 3);
        assert_eq!(f.level_dim(-1), 0);
        assert!(grading_operator(&op).unwrap().is_zero());
    }

    #[test]
    fn odd_length_has_odd_weights() {
        let op = chain_op(4);
        let f = deligne_filtration(&op).unwrap();
        assert_eq!(f.weights(), vec![-3, -1, 1, 3]);
        assert!(!odd_weights_vanish(&f));
        assert_eq!(grading_operator(&op), Err(Error::GradingRequiresNeat));
        let g = graded_piece(&op, &f, 1).unwrap();
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn bad_filtration_rejected() {
        let op = chain_op(3);
        let mut f = deligne_filtration(&op).unwrap();
        // shift everything by two: x ℱ^i ⊆ ℱ^{i−2} survives, the symmetry does not
        f.levels = f.levels.into_iter().map(|(i, m)| (i + 2, m)).collect();
        assert!(verify_deligne(&f, op.matrix()).is_err());
    }
}
