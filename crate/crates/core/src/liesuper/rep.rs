use std::sync::Arc;

use num_traits::Zero;

use super::algebra::{Element, LieSuperAlgebra};
use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Rational};
use crate::superlinalg::{direct_sum_maps, tensor_maps, HomMap, Parity, SuperSpace};

/// A representation `ρ: 𝔤 → 𝔤𝔩(V)`, stored as one homogeneous map per basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LieSuperAlgebra>,
    space: SuperSpace,
    action: Vec<HomMap>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.space == other.space
            && self.action == other.action
    }
}

fn same_algebra(a: &Arc<LieSuperAlgebra>, b: &Arc<LieSuperAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks shapes and parity blocks only; see [`validate`](Self::validate) for the
    /// homomorphism property.
    pub fn new(
        algebra: Arc<LieSuperAlgebra>,
        space: SuperSpace,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        let action = matrices
            .into_iter()
            .enumerate()
            .map(|(i, m)| HomMap::endo(space.clone(), algebra.parity(i), m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            algebra,
            space,
            action,
        })
    }

    /// Like [`new`](Self::new), but also rejects anything that is not a homomorphism.
    pub fn new_checked(
        algebra: Arc<LieSuperAlgebra>,
        space: SuperSpace,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        let rep = Representation::new(algebra, space, matrices)?;
        let problems = rep.validate();
        if problems.is_empty() {
            Ok(rep)
        } else {
            Err(Error::InvalidRepresentation(problems))
        }
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn action(&self) -> &[HomMap] {
        &self.action
    }

    pub fn basis_action(&self, i: usize) -> &HomMap {
        &self.action[i]
    }

    /// `ρ(e)` as a plain matrix; no homogeneity requirement.
    pub fn rho_matrix(&self, e: &Element) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, c) in e.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action[i].matrix().scale(c);
            }
        }
        out
    }

    /// `ρ(e)` for a homogeneous element (zero counts as even).
    pub fn rho(&self, e: &Element) -> Result<HomMap> {
        let p = self
            .algebra
            .parity_of(e)
            .ok_or_else(|| Error::Parity("element is not homogeneous".into()))?;
        HomMap::endo(self.space.clone(), p, self.rho_matrix(e))
    }

    /// `ρ(e)` for an odd element; zero is accepted and yields the zero odd map.
    pub fn rho_odd(&self, e: &Element) -> Result<HomMap> {
        if !self.algebra.is_odd(e) {
            return Err(Error::Parity("element is not odd".into()));
        }
        HomMap::endo(self.space.clone(), Parity::Odd, self.rho_matrix(e))
    }

    /// Every pair `(bᵢ, bⱼ)`, `i ≤ j`, where `ρ([bᵢ,bⱼ]) ≠ ρ(bᵢ)ρ(bⱼ) − (−1)^{|bᵢ||bⱼ|}ρ(bⱼ)ρ(bᵢ)`.
    pub fn validate(&self) -> Vec<String> {
        let g = &self.algebra;
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let mut lhs = Matrix::zeros(n, n);
                for (k, c) in g.basis_bracket(i, j) {
                    lhs = &lhs + &self.action[*k].matrix().scale(c);
                }
                let a = self.action[i].matrix();
                let b = self.action[j].matrix();
                let sign = int(g.parity(i).koszul(g.parity(j)));
                let rhs = &(a * b) - &(b * a).scale(&sign);
                if lhs != rhs {
                    out.push(format!(
                        "ρ([{}, {}]) ≠ [ρ({0}), ρ({1})]",
                        g.name(i),
                        g.name(j)
                    ));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(
                "representations of different algebras".into(),
            ))
        }
    }

    /// `V ⊗ W` with `ρ(b) = ρ_V(b) ⊗ id + id ⊗ ρ_W(b)` (Koszul signs included).
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.check_same_algebra(other)?;
        let id_v = HomMap::identity(&self.space);
        let id_w = HomMap::identity(&other.space);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| tensor_maps(a, &id_w).add(&tensor_maps(&id_v, b)))
            .collect::<Result<Vec<_>>>()?;
        let space = action
            .first()
            .map(|m| m.source().clone())
            .unwrap_or_else(|| crate::superlinalg::tensor(&self.space, &other.space).space);
        Ok(Representation {
            algebra: self.algebra.clone(),
            space,
            action,
        })
    }

    /// `V*` with `ρ*(b) = −ρ(b)*`.
    pub fn dual(&self) -> Representation {
        let action: Vec<HomMap> = self
            .action
            .iter()
            .map(|a| a.dual_map().scale(&-Rational::from_integer(1.into())))
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            space: crate::superlinalg::dual(&self.space),
            action,
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_same_algebra(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| direct_sum_maps(a, b))
            .collect::<Result<Vec<_>>>()?;
        let space = crate::superlinalg::direct_sum(&self.space, &other.space).space;
        Ok(Representation {
            algebra: self.algebra.clone(),
            space,
            action,
        })
    }

    /// `ΠV`: same matrices, parities of the space swapped.
    pub fn parity_shift(&self) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            space: self.space.parity_shift(),
            action: self.action.iter().map(HomMap::parity_shift).collect(),
        }
    }

    /// Whether `b ↦ ρ(b)` is injective.
    pub fn is_faithful(&self) -> bool {
        let cols: Vec<Vec<Rational>> = self.action.iter().map(|a| a.matrix().vectorize()).collect();
        let m = Matrix::from_columns(self.dim() * self.dim(), &cols);
        m.rank() == self.algebra.dim()
    }
}

/// The adjoint representation; its space carries the algebra's basis names.
pub fn adjoint_rep(algebra: &Arc<LieSuperAlgebra>) -> Representation {
    let g = algebra.as_ref();
    let n = g.dim();
    let (even, odd): (Vec<_>, Vec<_>) = (0..n).partition(|&i| g.parity(i) == Parity::Even);
    let space = SuperSpace::new(
        even.iter().map(|&i| g.name(i).to_string()).collect(),
        odd.iter().map(|&i| g.name(i).to_string()).collect(),
    )
    .expect("algebra basis names are distinct");
    let matrices = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                for (k, c) in g.basis_bracket(i, j) {
                    m[(*k, j)] = c.clone();
                }
            }
            m
        })
        .collect();
    Representation::new(algebra.clone(), space, matrices).expect("brackets respect parity")
}

#[cfg(test)]
mod tests {
    use super::super::presets::{gl_superalgebra, osp12};
    use super::*;

    #[test]
    fn adjoint_faithfulness() {
        let (gl11, v) = gl_superalgebra(1, 1).unwrap();
        assert!(v.is_faithful());
        let ad = adjoint_rep(&gl11);
        assert!(ad.is_valid());
        assert!(!ad.is_faithful());
        assert_eq!(ad.space().superdim().even, 2);
        assert_eq!(ad.space().superdim().odd, 2);
        let osp = Arc::new(osp12());
        assert!(adjoint_rep(&osp).is_faithful());
    }

    #[test]
    fn constructions_stay_valid() {
        let (_, v) = gl_superalgebra(1, 2).unwrap();
        assert!(v.is_valid());
        let vv = v.tensor(&v.dual()).unwrap();
        assert!(vv.is_valid());
        assert!(v.direct_sum(&v.parity_shift()).unwrap().is_valid());
        assert_eq!(vv.dim(), 9);
    }

    #[test]
    fn corrupted_action_detected() {
        let (g, v) = gl_superalgebra(1, 1).unwrap();
        let mut mats: Vec<Matrix> = v.action().iter().map(|a| a.matrix().clone()).collect();
        mats[0] = mats[0].scale(&int(2));
        let bad = Representation::new(g, v.space().clone(), mats).unwrap();
        assert!(!bad.validate().is_empty());
    }
}
