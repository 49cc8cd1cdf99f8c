use super::fusion::chain_module;
use super::objects::SemisimpleObject;
use super::phi::phi_of_operator;
use crate::error::{Error, Result};
use crate::exact::{kernel_basis, Matrix, SpanBuilder};
use crate::nilform::{BlockType, OddNilpotent};
use crate::superlinalg::{HomMap, Parity, SuperDim};

/// A short exact sequence `0 → A → B → C → 0` of `𝔾ₐ^(1|1)`-modules whose
/// semisimplification is not exact in the middle.
#[derive(Clone, Debug)]
pub struct HinichWitness {
    pub modules: [OddNilpotent; 3],
    pub inclusion: HomMap,
    pub projection: HomMap,
    pub images: [SemisimpleObject; 3],
}

impl HinichWitness {
    pub fn image_dims(&self) -> [SuperDim; 3] {
        [
            self.images[0].superdim(),
            self.images[1].superdim(),
            self.images[2].superdim(),
        ]
    }

    /// Exactness at the middle would force `dim S(B) = dim S(A) + dim S(C)`.
    pub fn middle_dims_add_up(&self) -> bool {
        let [a, b, c] = self.image_dims();
        b.even == a.even + c.even && b.odd == a.odd + c.odd
    }
}

fn check_equivariant(f: &HomMap, src: &OddNilpotent, tgt: &OddNilpotent) -> Result<()> {
    if f.parity() != Parity::Even || tgt.matrix() * f.matrix() != f.matrix() * src.matrix() {
        return Err(Error::Defect(
            "sequence map is not an even module map".into(),
        ));
    }
    Ok(())
}

/// `0 → ΠM₁ → M₂ → M₀ → 0`: the submodule spanned by `a₁, a₂` of `M₂` is the chain
/// `a₁ → a₂` starting at an odd vector, and the quotient is the trivial even line.
pub fn hinich_witness() -> Result<HinichWitness> {
    let a = chain_module(BlockType::new(2, Parity::Odd));
    let b = chain_module(BlockType::new(3, Parity::Even));
    let c = chain_module(BlockType::new(1, Parity::Even));
    // Canonical positions: in A, a0 (odd) → 1, a1 (even) → 0; in B, a0 → 0, a2 → 1, a1 → 2.
    let inclusion = HomMap::new(
        a.space().clone(),
        b.space().clone(),
        Parity::Even,
        Matrix::from_ints(&[[0, 0], [1, 0], [0, 1]]),
    )?;
    let projection = HomMap::new(
        b.space().clone(),
        c.space().clone(),
        Parity::Even,
        Matrix::from_ints(&[[1, 0, 0]]),
    )?;
    check_equivariant(&inclusion, &a, &b)?;
    check_equivariant(&projection, &b, &c)?;
    let inc = inclusion.matrix();
    let proj = projection.matrix();
    let image = SpanBuilder::from_columns(inc);
    let kernel = SpanBuilder::from_columns(&kernel_basis(proj));
    let exact = inc.rank() == inc.cols()
        && proj.rank() == proj.rows()
        && (proj * inc).is_zero()
        && image.rank() == kernel.rank();
    if !exact {
        return Err(Error::Defect("witness sequence is not short exact".into()));
    }
    let images = [
        phi_of_operator(&a),
        phi_of_operator(&b),
        phi_of_operator(&c),
    ];
    Ok(HinichWitness {
        modules: [a, b, c],
        inclusion,
        projection,
        images,
    })
}
