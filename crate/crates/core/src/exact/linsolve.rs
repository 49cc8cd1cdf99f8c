use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;

/// Eliminates column `c` from every row in `targets` using pivot row `p`, whose
/// entry in column `c` must be one. Only nonzero pivot-row entries are touched.
fn eliminate(a: &mut Matrix, p: usize, c: usize, targets: impl Iterator<Item = usize>) {
    let cols = a.cols();
    let pivot_nz: Vec<(usize, Rational)> = (c..cols)
        .filter(|&j| !a[(p, j)].is_zero())
        .map(|j| (j, a[(p, j)].clone()))
        .collect();
    for i in targets {
        if i == p || a[(i, c)].is_zero() {
            continue;
        }
        let f = a[(i, c)].clone();
        let row = a.row_mut(i);
        for (j, v) in &pivot_nz {
            row[*j] -= &f * v;
        }
    }
}

fn swap_rows(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let tmp = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
}

fn normalize_row(a: &mut Matrix, r: usize, c: usize) {
    let inv = a[(r, c)].recip();
    if inv.is_one() {
        return;
    }
    for v in a.row_mut(r)[c..].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
}

/// Reduced row echelon form and the strictly increasing list of pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, p, r);
        normalize_row(&mut a, r, c);
        eliminate(&mut a, r, c, 0..rows);
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Rank, computed separately on each connected component of the bipartite
/// row/column graph of nonzero entries.
pub fn rank(m: &Matrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut parent: Vec<usize> = (0..rows + cols).collect();
    for r in 0..rows {
        for c in 0..cols {
            if !m[(r, c)].is_zero() {
                let (a, b) = (find(&mut parent, r), find(&mut parent, rows + c));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> =
        Default::default();
    for r in 0..rows {
        let root = find(&mut parent, r);
        groups.entry(root).or_default().0.push(r);
    }
    for c in 0..cols {
        let root = find(&mut parent, rows + c);
        groups.entry(root).or_default().1.push(c);
    }
    let blocks: Vec<_> = groups
        .into_values()
        .filter(|(r, c)| !r.is_empty() && !c.is_empty())
        .collect();
    if blocks.len() == 1 && blocks[0].0.len() == rows && blocks[0].1.len() == cols {
        return dense_rank(m);
    }
    blocks
        .iter()
        .map(|(r, c)| dense_rank(&m.submatrix(r, c)))
        .sum()
}

fn dense_rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.rows();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, p, r);
        normalize_row(&mut a, r, c);
        eliminate(&mut a, r, c, r + 1..rows);
        r += 1;
    }
    r
}

/// Null-space basis as columns: one column per free variable (in column order),
/// with that variable set to one and the other free variables zero.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let (r, pivots) = rref(m);
    kernel_from_rref(&r, &pivots, m.cols())
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Matrix {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = Matrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            basis[(p, k)] = -r[(i, f)].clone();
        }
    }
    basis
}

/// Solves `a·v = b`. Returns the canonical particular solution (free variables
/// zero) and the kernel basis of `a`, or `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> Option<(Vec<Rational>, Matrix)> {
    assert_eq!(a.rows(), b.len(), "solve_affine: rhs length");
    let n = a.cols();
    let aug = a.hstack(&Matrix::column_vector(b));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Some((x, kernel_from_rref(&r, &pivots, n)))
}

/// Incrementally maintained echelon basis of a span. Each stored row has a pivot
/// entry equal to one and zeros at the pivots of all earlier rows.
#[derive(Clone, Debug, Default)]
pub struct SpanBuilder {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn from_columns(m: &Matrix) -> Self {
        let mut s = SpanBuilder::new(m.rows());
        for c in 0..m.cols() {
            s.insert(&m.column(c));
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Residual of `v` after reduction; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim, "SpanBuilder: vector length");
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (j, r) in row.iter().enumerate().skip(*p) {
                if !r.is_zero() {
                    w[j] -= &f * r;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, w));
        true
    }

    /// The stored basis as columns (echelon order, not canonical).
    pub fn basis(&self) -> Matrix {
        let cols: Vec<Vec<Rational>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        Matrix::from_columns(self.dim, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::from_ints(&[[1, 2], [2, 4]]));
        assert_eq!(r, Matrix::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(p, vec![0]);

        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = rref(&Matrix::from_ints(&[[0, 1], [1, 0]]));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&Matrix::from_ints(&[[1, 2], [2, 4]]));
        assert_eq!(k, Matrix::from_ints(&[[-2], [1]]));
        assert_eq!(kernel_basis(&Matrix::identity(2)).cols(), 0);
        assert_eq!(kernel_basis(&Matrix::zeros(2, 2)), Matrix::identity(2));
    }

    #[test]
    fn solve_examples() {
        let (x, k) = solve_affine(&Matrix::identity(2), &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![int(3), int(5)]);
        assert_eq!(k.cols(), 0);

        let (x, k) = solve_affine(&Matrix::from_ints(&[[1, 1]]), &[int(2)]).unwrap();
        assert_eq!(x, vec![int(2), int(0)]);
        assert_eq!(k, Matrix::from_ints(&[[-1], [1]]));

        assert!(solve_affine(&Matrix::from_ints(&[[1], [0]]), &[int(0), int(1)]).is_none());
    }

    #[test]
    fn span_builder_tracks_rank() {
        let mut s = SpanBuilder::new(3);
        assert!(s.insert(&[int(1), int(1), int(0)]));
        assert!(s.insert(&[int(0), int(1), int(1)]));
        assert!(!s.insert(&[int(1), int(2), int(1)]));
        assert!(s.contains(&[int(2), int(0), int(-2)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn rank_with_non_unit_pivots() {
        let m = Matrix::from_ints(&[[2, 4, 6], [3, 6, 9], [1, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let m = Matrix::from_ints(&[[3, 1, 0, 0], [6, 2, 0, 0], [0, 0, 5, 7], [0, 0, 10, 1]]);
        assert_eq!(rank(&m), 3);
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_rref(entries in proptest::collection::vec(-3i64..=3, 20)) {
            let m = Matrix::from_fn(4, 5, |i, j| int(entries[5 * i + j]));
            proptest::prop_assert_eq!(rank(&m), rref(&m).1.len());
        }
    }
}
