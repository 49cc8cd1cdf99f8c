use num_traits::{One, Zero};

use super::hom::HomMap;
use super::space::{Parity, SuperSpace};
use crate::error::{Error, Result};
use crate::exact::{rref, Matrix, Rational, SpanBuilder};

/// Canonical basis (RREF rows, as columns) of the span of the given columns.
fn canonical_span(m: &Matrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(&m.transpose());
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Canonical graded basis of a column span: the even part first, then the odd part.
/// Fails with `SubspaceNotGraded` unless the span is the sum of its pure-parity pieces.
pub fn graded_basis(space: &SuperSpace, span: &Matrix) -> Result<Matrix> {
    let n = space.dim();
    if span.rows() != n {
        return Err(Error::Shape(format!(
            "subspace vectors have length {}, expected {n}",
            span.rows()
        )));
    }
    let project = |p: Parity| {
        let mut m = span.clone();
        for r in 0..n {
            if space.parity(r) != p {
                for c in 0..m.cols() {
                    m[(r, c)] = Rational::zero();
                }
            }
        }
        m
    };
    let even = canonical_span(&project(Parity::Even));
    let odd = canonical_span(&project(Parity::Odd));
    if even.len() + odd.len() != span.rank() {
        return Err(Error::SubspaceNotGraded);
    }
    let cols: Vec<Vec<Rational>> = even.into_iter().chain(odd).collect();
    Ok(Matrix::from_columns(n, &cols))
}

fn column_parity(space: &SuperSpace, v: &[Rational]) -> Parity {
    v.iter()
        .position(|x| !x.is_zero())
        .map_or(Parity::Even, |i| space.parity(i))
}

/// A graded subquotient `N / D` of an ambient super space, with a basis of
/// representatives completing a basis of `D` to one of `N`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: SuperSpace,
    space: SuperSpace,
    denominator: Matrix,
    reps: Matrix,
    // Row operations bringing `[D | R]` to `[I; 0]`.
    transform: Matrix,
}

impl Subquotient {
    /// `numerator / denominator`, both given as column spans. Representatives are
    /// picked greedily from the canonical graded basis of the numerator.
    pub fn new(ambient: &SuperSpace, numerator: &Matrix, denominator: &Matrix) -> Result<Self> {
        let num = graded_basis(ambient, numerator)?;
        let den = graded_basis(ambient, denominator)?;
        let num_span = SpanBuilder::from_columns(&num);
        for c in 0..den.cols() {
            if !num_span.contains(&den.column(c)) {
                return Err(Error::Shape(
                    "denominator not contained in numerator".into(),
                ));
            }
        }
        Self::build(ambient, den, &num)
    }

    fn build(ambient: &SuperSpace, den: Matrix, candidates: &Matrix) -> Result<Self> {
        let mut span = SpanBuilder::from_columns(&den);
        let mut reps = Vec::new();
        for c in 0..candidates.cols() {
            let v = candidates.column(c);
            if span.insert(&v) {
                reps.push(v);
            }
        }
        let n = ambient.dim();
        let reps = Matrix::from_columns(n, &reps);

        let standard: Option<Vec<usize>> = (0..reps.cols())
            .map(|c| {
                let col = reps.column(c);
                let nz: Vec<usize> = (0..n).filter(|&r| !col[r].is_zero()).collect();
                (nz.len() == 1 && col[nz[0]].is_one()).then(|| nz[0])
            })
            .collect();
        let items: Vec<(String, Parity)> = (0..reps.cols())
            .map(|c| {
                let label = match &standard {
                    Some(idx) => ambient.label(idx[c]).to_string(),
                    None => format!("q{}", c + 1),
                };
                (label, column_parity(ambient, &reps.column(c)))
            })
            .collect();
        let (space, position) = SuperSpace::from_labelled(&items)?;
        // Representatives were collected even-first, so positions are already canonical.
        debug_assert!(position.iter().enumerate().all(|(i, &p)| i == p));

        let combined = den.hstack(&reps);
        let (r, _) = rref(&combined.hstack(&Matrix::identity(n)));
        let k = combined.cols();
        let transform = r.submatrix(&(0..n).collect::<Vec<_>>(), &(k..k + n).collect::<Vec<_>>());
        Ok(Subquotient {
            ambient: ambient.clone(),
            space,
            denominator: den,
            reps,
            transform,
        })
    }

    /// The subspace `W` itself, as a space with its canonical graded basis.
    pub fn sub(ambient: &SuperSpace, w: &Matrix) -> Result<Self> {
        Subquotient::new(ambient, w, &Matrix::zeros(ambient.dim(), 0))
    }

    /// `V / W`, with representatives the standard basis vectors off the RREF pivots of `W`.
    pub fn quotient(ambient: &SuperSpace, w: &Matrix) -> Result<Self> {
        let den = graded_basis(ambient, w)?;
        let (_, pivots) = rref(&den.transpose());
        let n = ambient.dim();
        let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let candidates = Matrix::identity(n).select_columns(&free);
        Self::build(ambient, den, &candidates)
    }

    pub fn ambient(&self) -> &SuperSpace {
        &self.ambient
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn denominator(&self) -> &Matrix {
        &self.denominator
    }

    /// Representatives in ambient coordinates, one column per basis vector of `space`.
    pub fn representatives(&self) -> &Matrix {
        &self.reps
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of the class of `v`; fails if `v` is outside the numerator.
    pub fn project(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let w = self.transform.mul_vec(v);
        let d = self.denominator.cols();
        let k = d + self.reps.cols();
        if w[k..].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInvariant("vector outside the numerator".into()));
        }
        Ok(w[d..k].to_vec())
    }

    pub fn lift(&self, coords: &[Rational]) -> Vec<Rational> {
        self.reps.mul_vec(coords)
    }

    /// Map induced on subquotients by an ambient map `f: self.ambient → target.ambient`.
    /// Checks `f(N) ⊆ N'` and `f(D) ⊆ D'`.
    pub fn induced(&self, f: &HomMap, target: &Subquotient) -> Result<HomMap> {
        if f.source() != &self.ambient || f.target() != &target.ambient {
            return Err(Error::Shape("induced: ambient spaces do not match".into()));
        }
        for c in 0..self.denominator.cols() {
            let img = target.project(&f.apply(&self.denominator.column(c)))?;
            if img.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotInvariant(
                    "map does not preserve the denominator".into(),
                ));
            }
        }
        let cols = (0..self.reps.cols())
            .map(|c| target.project(&f.apply(&self.reps.column(c))))
            .collect::<Result<Vec<_>>>()?;
        HomMap::new(
            self.space.clone(),
            target.space.clone(),
            f.parity(),
            Matrix::from_columns(target.dim(), &cols),
        )
    }

    /// Restriction of an endomorphism to its own subquotient.
    pub fn induced_endo(&self, f: &HomMap) -> Result<HomMap> {
        self.induced(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn quotient_of_22_by_11() {
        let v = SuperSpace::with_dims(2, 2);
        let w = Matrix::from_ints(&[[1, 0], [1, 0], [0, 1], [0, 0]]);
        let q = Subquotient::quotient(&v, &w).unwrap();
        assert_eq!(q.space().superdim().even, 1);
        assert_eq!(q.space().superdim().odd, 1);
        assert_eq!(q.space().label(0), "v2");
        assert_eq!(
            q.project(&[int(1), int(1), int(5), int(0)]).unwrap(),
            vec![int(0), int(0)]
        );
    }

    #[test]
    fn non_graded_subspace_rejected() {
        let v = SuperSpace::with_dims(1, 1);
        let w = Matrix::from_ints(&[[1], [1]]);
        assert!(matches!(
            Subquotient::sub(&v, &w),
            Err(Error::SubspaceNotGraded)
        ));
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let v = SuperSpace::with_dims(1, 2);
        // x: v2 → v1 → v3
        let x = HomMap::endo(
            v.clone(),
            Parity::Odd,
            Matrix::from_ints(&[[0, 1, 0], [0, 0, 0], [1, 0, 0]]),
        )
        .unwrap();
        let w = Matrix::from_ints(&[[1, 0], [0, 0], [0, 1]]);
        let sub = Subquotient::sub(&v, &w).unwrap();
        let r = sub.induced_endo(&x).unwrap();
        assert_eq!(r.matrix(), &Matrix::from_ints(&[[0, 0], [1, 0]]));
        let not_stable = Matrix::from_ints(&[[0], [1], [0]]);
        let sub = Subquotient::sub(&v, &not_stable).unwrap();
        assert!(sub.induced_endo(&x).is_err());
    }
}
