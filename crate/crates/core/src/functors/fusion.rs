use rayon::prelude::*;

use super::objects::{Ga11Object, SemisimpleObject};
use crate::error::Result;
use crate::exact::{int, Matrix};
use crate::liesuper::chain_space;
use crate::nilform::{block_multiplicities, BlockType, OddNilpotent};
use crate::superlinalg::{tensor_maps, HomMap, Parity};

/// Tensor product of two indecomposables `Π^a M_i ⊗ Π^b M_j`, with the shifts
/// composed additively.
pub fn ga11_fusion(left: BlockType, right: BlockType) -> Ga11Object {
    let shift = left.top_parity + right.top_parity;
    let (i, j) = (left.length - 1, right.length - 1);
    let mut out = Ga11Object::zero();
    let mut put = |len: usize, p: Parity| out.add(BlockType::new(len, p + shift), 1);
    match (i % 2, j % 2) {
        (0, 0) => {
            let (k, m) = (i / 2, j / 2);
            for s in k.abs_diff(m)..=k + m {
                put(2 * s + 1, Parity::of(k + m - s));
            }
        }
        (1, 1) => {
            let (k, m) = ((i - 1) / 2, (j - 1) / 2);
            // Only s ≡ k + m (mod 2) occurs; the other parity class would overshoot the dimension.
            for s in (k.abs_diff(m)..=k + m).step_by(2) {
                put(2 * s + 2, Parity::Even);
                put(2 * s + 2, Parity::Odd);
            }
        }
        _ => {
            // M_{2k+1} ⊗ M_{2m}, either order
            let (odd_index, even_index) = if i % 2 == 1 { (i, j) } else { (j, i) };
            let (k, m) = ((odd_index - 1) / 2, even_index / 2);
            let low = k.abs_diff(m).min((k + 1).abs_diff(m));
            for s in low..=k + m {
                put(2 * s + 2, Parity::of(k + m - s));
            }
        }
    }
    out
}

/// `Π^a M̃_{2k} ⊗ Π^b M̃_{2m} = ⊕_{s=|k−m|}^{k+m} Π^{a+b+k+m−s} M̃_{2s}`.
pub fn osp_fusion(left: (usize, Parity), right: (usize, Parity)) -> SemisimpleObject {
    let ((k, a), (m, b)) = (left, right);
    SemisimpleObject::from_summands(
        (k.abs_diff(m)..=k + m).map(|s| (s, a + b + Parity::of(k + m - s), 1)),
    )
}

/// The indecomposable `Π^top M_{length−1}` on its chain basis `a0, a1, …`.
pub fn chain_module(block: BlockType) -> OddNilpotent {
    let (space, pos) = chain_space(block.length, block.top_parity, "a");
    let mut m = Matrix::zeros(block.length, block.length);
    for j in 0..block.length - 1 {
        m[(pos[j + 1], pos[j])] = int(1);
    }
    OddNilpotent::from_matrix(space, m).expect("a chain shift is odd and nilpotent")
}

/// A direct sum of chain modules realizing the given object.
pub fn ga11_module(obj: &Ga11Object) -> OddNilpotent {
    let mut acc: Option<HomMap> = None;
    for (b, mult) in obj.summands() {
        for _ in 0..mult {
            let x = chain_module(b).map().clone();
            acc = Some(match acc {
                None => x,
                Some(a) => crate::superlinalg::direct_sum_maps(&a, &x).expect("odd maps"),
            });
        }
    }
    let x = acc.unwrap_or_else(|| {
        let z = crate::superlinalg::SuperSpace::zero();
        HomMap::zero(&z, &z, Parity::Odd)
    });
    OddNilpotent::new(x).expect("direct sum of chains is odd nilpotent")
}

/// `x ⊗ 1 + 1 ⊗ y` on `M ⊗ N`, the action of the odd generator on a tensor product.
pub fn tensor_operator(m: &OddNilpotent, n: &OddNilpotent) -> Result<OddNilpotent> {
    let id_m = HomMap::identity(m.space());
    let id_n = HomMap::identity(n.space());
    let x = tensor_maps(m.map(), &id_n).add(&tensor_maps(&id_m, n.map()))?;
    OddNilpotent::new(x)
}

/// One row of the empirical tensor-product check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionCheck {
    pub left: BlockType,
    pub right: BlockType,
    pub predicted: Ga11Object,
    pub observed: Ga11Object,
}

impl FusionCheck {
    pub fn passed(&self) -> bool {
        self.predicted == self.observed
    }
}

pub fn check_fusion_pair(left: BlockType, right: BlockType) -> Result<FusionCheck> {
    let op = tensor_operator(&chain_module(left), &chain_module(right))?;
    Ok(FusionCheck {
        left,
        right,
        predicted: ga11_fusion(left, right),
        observed: Ga11Object::from(&block_multiplicities(&op)),
    })
}

/// Compares the closed-form rule with the block decomposition of the actual tensor
/// operator, for every pair of blocks of length at most `max_length` and both parities.
pub fn verify_ga11_fusion(max_length: usize) -> Result<Vec<FusionCheck>> {
    let blocks: Vec<BlockType> = (1..=max_length)
        .flat_map(|l| {
            [
                BlockType::new(l, Parity::Even),
                BlockType::new(l, Parity::Odd),
            ]
        })
        .collect();
    let pairs: Vec<(BlockType, BlockType)> = blocks
        .iter()
        .flat_map(|&a| blocks.iter().map(move |&b| (a, b)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(a, b)| check_fusion_pair(a, b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(len: usize) -> BlockType {
        BlockType::new(len, Parity::Even)
    }

    #[test]
    fn closed_form_examples() {
        let m2m2 = ga11_fusion(even(3), even(3));
        let expect = Ga11Object::from_summands([
            (even(5), 1),
            (BlockType::new(3, Parity::Odd), 1),
            (even(1), 1),
        ]);
        assert_eq!(m2m2, expect);
        let m1m1 = ga11_fusion(even(2), even(2));
        assert_eq!(
            m1m1,
            Ga11Object::from_summands([(even(2), 1), (BlockType::new(2, Parity::Odd), 1)])
        );
        let m1m2 = ga11_fusion(even(2), even(3));
        assert_eq!(
            m1m2,
            Ga11Object::from_summands([(even(4), 1), (BlockType::new(2, Parity::Odd), 1)])
        );
        assert_eq!(ga11_fusion(even(3), even(2)), m1m2);
    }

    #[test]
    fn small_empirical_agreement() {
        for c in verify_ga11_fusion(5).unwrap() {
            assert!(
                c.passed(),
                "{} ⊗ {}: predicted {}, observed {}",
                c.left,
                c.right,
                c.predicted,
                c.observed
            );
        }
    }

    #[test]
    fn dimensions_multiply() {
        for a in 1..=6 {
            for b in 1..=6 {
                let f = ga11_fusion(even(a), even(b));
                let d = f.superdim();
                let (ae, ao) = even(a).dims();
                let (be, bo) = even(b).dims();
                assert_eq!(d.even, ae * be + ao * bo);
                assert_eq!(d.odd, ae * bo + ao * be);
            }
        }
    }
}
