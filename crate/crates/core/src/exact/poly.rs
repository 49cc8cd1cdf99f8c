use std::fmt;

use num_traits::{One, Zero};

use super::linsolve::SpanBuilder;
use super::matrix::Matrix;
use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => {
                let inv = l.recip();
                Polynomial::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * d;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c);
        }
        acc
    }

    /// `self(inner) mod modulus`.
    pub fn compose_mod(&self, inner: &Polynomial, modulus: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(inner)
                .add(&Polynomial::constant(c.clone()))
                .rem(modulus);
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*t", format_rational(c)),
                _ => format!("{}*t^{i}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Monic minimal polynomial: the first linear dependence among `I, m, m², …`.
pub fn min_poly(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "min_poly of non-square matrix");
    let n = m.rows();
    // Each echelon row carries, in its tail, the combination of powers producing it.
    let width = n * n;
    let mut span = SpanBuilder::new(width + n + 1);
    let mut power = Matrix::identity(n);
    for d in 0..=n {
        let mut v = power.vectorize();
        v.resize(width + n + 1, Rational::zero());
        v[width + d] = Rational::one();
        let residual = span.reduce(&v);
        if residual[..width].iter().all(Zero::is_zero) {
            return Polynomial::new(residual[width..].to_vec()).monic();
        }
        span.insert(&v);
        power = &power * m;
    }
    unreachable!("Cayley–Hamilton bounds the degree by n")
}

/// Monic `p / gcd(p, p')`.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_rem(&g).0.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_poly_examples() {
        let t2 = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(min_poly(&Matrix::from_ints(&[[0, 1], [0, 0]])), t2);
        assert_eq!(
            min_poly(&Matrix::from_ints(&[[2, 0], [0, 2]])),
            Polynomial::from_ints(&[-2, 1])
        );
        assert_eq!(
            min_poly(&Matrix::from_ints(&[[0, 1], [1, 0]])),
            Polynomial::from_ints(&[-1, 0, 1])
        );
        assert_eq!(min_poly(&Matrix::zeros(0, 0)), Polynomial::one());
    }

    #[test]
    fn squarefree_examples() {
        // t²(t−1) = t³ − t²
        let p = Polynomial::from_ints(&[0, 0, -1, 1]);
        assert_eq!(
            squarefree_part(&p).unwrap(),
            Polynomial::from_ints(&[0, -1, 1])
        );
        assert_eq!(
            squarefree_part(&Polynomial::from_ints(&[0, 0, 1])).unwrap(),
            Polynomial::t()
        );
        let q = Polynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(squarefree_part(&q).unwrap(), q);
        assert_eq!(
            squarefree_part(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn division_identity() {
        let a = Polynomial::from_ints(&[3, -1, 4, 1, -5]);
        let b = Polynomial::from_ints(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn min_poly_annihilates() {
        let m = Matrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 3]]);
        let p = min_poly(&m);
        assert_eq!(p.degree(), Some(3));
        assert!(p.eval_matrix(&m).is_zero());
    }
}
