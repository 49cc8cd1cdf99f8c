use num_traits::One;

use super::linsolve::solve_affine;
use super::matrix::Matrix;
use super::poly::{min_poly, squarefree_part, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Inverse of `f` in `𝕜[t]/(modulus)`, found by solving the multiplication-by-`f`
/// linear system on the monomial basis.
fn inverse_mod(f: &Polynomial, modulus: &Polynomial) -> Option<Polynomial> {
    let d = modulus.degree()?;
    let mut columns = Vec::with_capacity(d);
    let mut power = Polynomial::one();
    for _ in 0..d {
        let mut col = f.mul(&power).rem(modulus).coeffs().to_vec();
        col.resize(d, Rational::from_integer(0.into()));
        columns.push(col);
        power = power.mul(&Polynomial::t());
    }
    let a = Matrix::from_columns(d, &columns);
    let mut rhs = vec![Rational::from_integer(0.into()); d];
    rhs[0] = Rational::one();
    let (x, kernel) = solve_affine(&a, &rhs)?;
    (kernel.cols() == 0).then(|| Polynomial::new(x))
}

/// Splits `m = s + n` with `s` semisimple, `n` nilpotent, `[s, n] = 0`, and `s` a
/// polynomial in `m`.
///
/// Runs Newton's iteration `z ← z − p(z)·p′(z)⁻¹` on the squarefree part `p` of the
/// minimal polynomial `μ`, entirely inside `𝕜[t]/(μ) ≅ 𝕜[m]`. Eigenvalues are never
/// needed, so this works over ℚ for any rational matrix.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix)> {
    assert!(m.is_square(), "jordan_chevalley of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Ok((Matrix::zeros(0, 0), Matrix::zeros(0, 0)));
    }
    let mu = min_poly(m);
    let p = squarefree_part(&mu)?;
    let dp = p.derivative();
    let deg = mu.degree().unwrap_or(0).max(1);
    // Quadratic convergence: the error's nilpotency order at least doubles per step.
    let iterations = (usize::BITS - (deg - 1).leading_zeros()) as usize + 1;

    let mut z = Polynomial::t().rem(&mu);
    for _ in 0..iterations {
        let pz = p.compose_mod(&z, &mu);
        if pz.is_zero() {
            break;
        }
        let dpz = dp.compose_mod(&z, &mu);
        let inv = inverse_mod(&dpz, &mu).ok_or(Error::JordanChevalleyDiverged)?;
        z = z.sub(&pz.mul(&inv)).rem(&mu);
    }

    let s = z.eval_matrix(m);
    if !p.eval_matrix(&s).is_zero() {
        return Err(Error::JordanChevalleyDiverged);
    }
    let nil = m - &s;
    Ok((s, nil))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let (s, n) = jordan_chevalley(&Matrix::from_ints(&[[1, 1], [0, 1]])).unwrap();
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(n, Matrix::from_ints(&[[0, 1], [0, 0]]));

        let m = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert!(s.is_zero());
        assert_eq!(n, m);

        let m = Matrix::from_ints(&[[0, 1], [1, 0]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, m);
        assert!(n.is_zero());
    }

    #[test]
    fn irrational_spectrum() {
        // Companion block of t² − 2 (eigenvalues ±√2) with multiplicity two, plus a nilpotent coupling.
        let m = Matrix::from_ints(&[[0, 2, 1, 0], [1, 0, 0, 1], [0, 0, 0, 2], [0, 0, 1, 0]]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(&s + &n, m);
        assert!(Matrix::commutator(&s, &n).is_zero());
        assert!(n.is_nilpotent());
        assert!(!n.is_zero());
        let ps = min_poly(&s);
        assert_eq!(squarefree_part(&ps).unwrap(), ps);
    }
}
