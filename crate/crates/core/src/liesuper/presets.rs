use std::sync::Arc;

use super::algebra::LieSuperAlgebra;
use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Rational};
use crate::superlinalg::{Parity, SuperSpace};

fn unit_name(i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("E{i},{j}")
    } else {
        format!("E{i}{j}")
    }
}

/// `𝔤𝔩(m|n)` with matrix units `Eᵢⱼ` (1-based names) and its defining representation.
pub fn gl_superalgebra(m: usize, n: usize) -> Result<(Arc<LieSuperAlgebra>, Representation)> {
    let d = m + n;
    if d == 0 {
        return Err(Error::InvalidArgument("gl(0|0) is not allowed".into()));
    }
    let p = |i: usize| if i < m { Parity::Even } else { Parity::Odd };
    let wide = d > 9;
    let idx = |i: usize, j: usize| i * d + j;
    let mut basis = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            basis.push((unit_name(i + 1, j + 1, wide), p(i) + p(j)));
        }
    }
    // [E_ij, E_kl] = δ_jk E_il − (−1)^{|E_ij||E_kl|} δ_li E_kj
    let mut brackets = Vec::new();
    for a in 0..d * d {
        let (i, j) = (a / d, a % d);
        for b in a..d * d {
            let (k, l) = (b / d, b % d);
            let sign = (p(i) + p(j)).koszul(p(k) + p(l));
            let mut terms: Vec<(usize, Rational)> = Vec::new();
            if j == k {
                terms.push((idx(i, l), int(1)));
            }
            if l == i {
                terms.push((idx(k, j), int(-sign)));
            }
            if !terms.is_empty() {
                brackets.push(((a, b), terms));
            }
        }
    }
    let g = Arc::new(LieSuperAlgebra::new(basis, brackets)?);
    let space = SuperSpace::with_dims(m, n);
    let matrices = (0..g.dim())
        .map(|b| {
            let name = g.name(b);
            let pos = (0..d * d)
                .find(|&a| unit_name(a / d + 1, a % d + 1, wide) == name)
                .unwrap();
            let mut mat = Matrix::zeros(d, d);
            mat[(pos / d, pos % d)] = int(1);
            mat
        })
        .collect();
    let rep = Representation::new(g.clone(), space, matrices)?;
    Ok((g, rep))
}

/// `osp(1|2)` on the basis `h, E, F, X, Y` with `[h,X] = −2X`, `[h,Y] = 2Y`,
/// `[Y,X] = h`, `E = ½[Y,Y]`, `F = ½[X,X]`.
pub fn osp12() -> LieSuperAlgebra {
    let (h, e, f, x, y) = (0, 1, 2, 3, 4);
    let basis = vec![
        ("h".to_string(), Parity::Even),
        ("E".to_string(), Parity::Even),
        ("F".to_string(), Parity::Even),
        ("X".to_string(), Parity::Odd),
        ("Y".to_string(), Parity::Odd),
    ];
    let brackets = vec![
        ((h, e), vec![(e, int(4))]),
        ((h, f), vec![(f, int(-4))]),
        ((h, x), vec![(x, int(-2))]),
        ((h, y), vec![(y, int(2))]),
        ((e, f), vec![(h, int(-2))]),
        ((e, x), vec![(y, int(-2))]),
        ((f, y), vec![(x, int(2))]),
        ((x, x), vec![(f, int(2))]),
        ((x, y), vec![(h, int(1))]),
        ((y, y), vec![(e, int(2))]),
    ];
    LieSuperAlgebra::new(basis, brackets).expect("osp(1|2) structure constants are well formed")
}

/// Coefficients `c_j` of `Y a_j = c_j a_{j−1}` on the chain of `M̃_{2k}`:
/// `c₀ = 0`, `c_{j+1} + c_j = 2k − 2j`.
pub fn lowering_coefficients(k: usize) -> Vec<Rational> {
    let k = k as i64;
    (0..=2 * k)
        .map(|j| {
            if j % 2 == 0 {
                int(-j)
            } else {
                int(2 * k - (j - 1))
            }
        })
        .collect()
}

/// Labels `a0, …, a{2k}` with `a_j` of parity `j + shift`, in canonical order.
/// Returns the space and the canonical position of each `a_j`.
pub fn chain_space(length: usize, shift: Parity, prefix: &str) -> (SuperSpace, Vec<usize>) {
    let items: Vec<(String, Parity)> = (0..length)
        .map(|j| (format!("{prefix}{j}"), Parity::of(j) + shift))
        .collect();
    SuperSpace::from_labelled(&items).expect("chain labels are distinct")
}

/// The simple module `Π^shift M̃_{2k}` of dimension `(k+1|k)` (before the shift),
/// over a fresh copy of [`osp12`].
pub fn osp_simple(k: usize, shift: Parity) -> Representation {
    osp_simple_over(&Arc::new(osp12()), k, shift)
}

/// [`osp_simple`] over a given copy of `osp(1|2)`.
pub fn osp_simple_over(algebra: &Arc<LieSuperAlgebra>, k: usize, shift: Parity) -> Representation {
    let len = 2 * k + 1;
    let (space, pos) = chain_space(len, shift, "a");
    let c = lowering_coefficients(k);
    let mut hm = Matrix::zeros(len, len);
    let mut xm = Matrix::zeros(len, len);
    let mut ym = Matrix::zeros(len, len);
    for j in 0..len {
        hm[(pos[j], pos[j])] = int(2 * k as i64 - 2 * j as i64);
        if j + 1 < len {
            xm[(pos[j + 1], pos[j])] = int(1);
        }
        if j > 0 {
            ym[(pos[j - 1], pos[j])] = c[j].clone();
        }
    }
    let em = &ym * &ym;
    let fm = &xm * &xm;
    let by_name = |name: &str| match name {
        "h" => hm.clone(),
        "E" => em.clone(),
        "F" => fm.clone(),
        "X" => xm.clone(),
        "Y" => ym.clone(),
        other => panic!("unexpected osp(1|2) basis element {other}"),
    };
    let matrices = algebra.names().iter().map(|n| by_name(n)).collect();
    Representation::new(algebra.clone(), space, matrices).expect("chain action respects parity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::rep::adjoint_rep;

    #[test]
    fn gl_dimensions_and_brackets() {
        let (g, v) = gl_superalgebra(1, 1).unwrap();
        assert_eq!(g.graded_dim(), (2, 2));
        assert!(g.is_valid());
        assert!(v.is_valid());
        let e = g.element(&[("E12", int(1))]).unwrap();
        let f = g.element(&[("E21", int(1))]).unwrap();
        let expect = g.element(&[("E11", int(1)), ("E22", int(1))]).unwrap();
        assert_eq!(g.bracket(&e, &f), expect);

        let (g, v) = gl_superalgebra(1, 2).unwrap();
        assert_eq!(g.graded_dim(), (5, 4));
        assert!(g.is_valid());
        assert!(v.is_valid());
        assert!(gl_superalgebra(0, 0).is_err());
        let (g, _) = gl_superalgebra(5, 5).unwrap();
        assert_eq!(g.name(0), "E1,1");
    }

    #[test]
    fn osp_relations() {
        let g = osp12();
        assert!(g.is_valid());
        assert_eq!(g.graded_dim(), (3, 2));
        let el = |n: &str| g.element(&[(n, int(1))]).unwrap();
        assert_eq!(g.bracket(&el("h"), &el("X")), el("X").scale(&int(-2)));
        assert_eq!(g.bracket(&el("h"), &el("Y")), el("Y").scale(&int(2)));
        assert_eq!(g.bracket(&el("Y"), &el("X")), el("h"));
        assert_eq!(g.bracket(&el("Y"), &el("Y")), el("E").scale(&int(2)));
        assert_eq!(g.bracket(&el("X"), &el("X")), el("F").scale(&int(2)));
    }

    #[test]
    fn corrupted_constant_breaks_jacobi() {
        let g = osp12();
        let mut brackets: Vec<_> = g
            .stored_brackets()
            .iter()
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        let entry = brackets.iter_mut().find(|(k, _)| *k == (0, 3)).unwrap();
        entry.1 = vec![(3, int(-3))];
        let basis = g
            .names()
            .iter()
            .cloned()
            .zip(g.parities().iter().copied())
            .collect();
        let bad = LieSuperAlgebra::new(basis, brackets).unwrap();
        assert!(!bad.validate().is_empty());
    }

    #[test]
    fn adjoint_weights() {
        let g = Arc::new(osp12());
        let ad = adjoint_rep(&g);
        let h = ad.basis_action(g.index_of("h").unwrap()).matrix();
        let diag: Vec<Rational> = (0..5).map(|i| h[(i, i)].clone()).collect();
        assert_eq!(diag, [0, 4, -4, -2, 2].map(int));
        assert!(h.rank() == 4);
    }

    #[test]
    fn simples() {
        assert_eq!(lowering_coefficients(1), vec![int(0), int(2), int(-2)]);
        for k in 0..=6 {
            for shift in [Parity::Even, Parity::Odd] {
                let m = osp_simple(k, shift);
                assert!(m.is_valid(), "k = {k}");
                let d = m.space().superdim();
                let (big, small) = (k + 1, k);
                if shift == Parity::Even {
                    assert_eq!((d.even, d.odd), (big, small));
                } else {
                    assert_eq!((d.even, d.odd), (small, big));
                }
            }
        }
        let triv = osp_simple(0, Parity::Even);
        assert!(triv.action().iter().all(|a| a.is_zero()));
    }
}
