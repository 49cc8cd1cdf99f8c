//! Seeded random instances: rationals, graded changes of basis, odd nilpotents, modules.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, ratio, Matrix, Rational};
use crate::functors::{ga11_module, Ga11Object};
use crate::liesuper::{Element, LieSuperAlgebra, Representation};
use crate::nilform::{BlockType, OddNilpotent};
use crate::superlinalg::{HomMap, Parity, SuperSpace};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `[-range, range]`.
pub fn small_int(rng: &mut Rng64, range: i64) -> Rational {
    int(rng.gen_range(-range..=range))
}

/// `p/q` with `|p| ≤ range`, `1 ≤ q ≤ range`.
pub fn small_rational(rng: &mut Rng64, range: i64) -> Rational {
    ratio(
        rng.gen_range(-range..=range),
        rng.gen_range(1..=range.max(1)),
    )
}

pub fn random_matrix(rng: &mut Rng64, rows: usize, cols: usize, range: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng, range))
}

/// Odd element with small integer coordinates on the odd basis.
pub fn random_odd_element(rng: &mut Rng64, algebra: &LieSuperAlgebra, range: i64) -> Element {
    let mut e = algebra.zero();
    for i in algebra.indices(Parity::Odd) {
        e.coeffs[i] = small_int(rng, range);
    }
    e
}

/// Invertible matrix: a shuffled product of unit lower and upper triangular factors.
fn random_invertible(rng: &mut Rng64, n: usize, range: i64) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = small_int(rng, range);
            upper[(j, i)] = small_int(rng, range);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = Matrix::identity(n).select_columns(&perm);
    &(&lower * &upper) * &p
}

/// Random even automorphism of `space` (block diagonal in the canonical basis).
pub fn random_graded_invertible(rng: &mut Rng64, space: &SuperSpace, range: i64) -> Matrix {
    let e = random_invertible(rng, space.even_dim(), range);
    let o = random_invertible(rng, space.odd_dim(), range);
    Matrix::block_diag(&e, &o)
}

/// A random direct sum of blocks with total dimensions at most `(max_even|max_odd)`.
pub fn random_ga11_object(rng: &mut Rng64, max_even: usize, max_odd: usize) -> Ga11Object {
    let mut obj = Ga11Object::zero();
    let (mut e, mut o) = (0, 0);
    let attempts = rng.gen_range(1..=8);
    for _ in 0..attempts {
        let b = BlockType::new(
            rng.gen_range(1..=max_even + max_odd),
            if rng.gen_bool(0.5) {
                Parity::Even
            } else {
                Parity::Odd
            },
        );
        let (be, bo) = b.dims();
        if e + be <= max_even && o + bo <= max_odd {
            obj.add(b, 1);
            e += be;
            o += bo;
        }
    }
    obj
}

/// A random odd nilpotent: a block sum conjugated by a random graded automorphism.
/// Returns the operator and the block object it was built from.
pub fn random_odd_nilpotent(
    rng: &mut Rng64,
    max_even: usize,
    max_odd: usize,
) -> (OddNilpotent, Ga11Object) {
    let obj = random_ga11_object(rng, max_even, max_odd);
    let base = ga11_module(&obj);
    let space = base.space().clone();
    let p = random_graded_invertible(rng, &space, 2);
    let p_inv = p.inverse().expect("triangular factors are invertible");
    let x = &(&p * base.matrix()) * &p_inv;
    let op =
        OddNilpotent::new(HomMap::endo(space, Parity::Odd, x).expect("conjugation keeps parity"))
            .expect("conjugation keeps nilpotency");
    (op, obj)
}

/// `ρ'(b) = P ρ(b) P⁻¹` for an even automorphism `P`.
pub fn change_basis(rep: &Representation, p: &Matrix) -> Representation {
    let p_inv = p.inverse().expect("change of basis must be invertible");
    let matrices = rep
        .action()
        .iter()
        .map(|a| &(p * a.matrix()) * &p_inv)
        .collect();
    Representation::new(rep.algebra().clone(), rep.space().clone(), matrices)
        .expect("even change of basis")
}

/// The zero action on `(m|n)`.
pub fn trivial_module(rep: &Representation, m: usize, n: usize) -> Representation {
    let d = m + n;
    let matrices = vec![Matrix::zeros(d, d); rep.algebra().dim()];
    Representation::new(
        rep.algebra().clone(),
        SuperSpace::with_prefix("t", m, n),
        matrices,
    )
    .expect("zero action respects parity")
}

/// A small random module built from the defining module `v` by duals, parity
/// shifts, sums and tensor products, then written in a random graded basis.
/// The dimension stays at most `max_dim`.
pub fn random_module(rng: &mut Rng64, v: &Representation, max_dim: usize) -> Representation {
    let pick = |rng: &mut Rng64| match rng.gen_range(0..5) {
        0 => v.clone(),
        1 => v.dual(),
        2 => v.parity_shift(),
        3 => v.dual().parity_shift(),
        _ => trivial_module(v, rng.gen_range(0..=1), rng.gen_range(0..=1)),
    };
    let mut m = pick(rng);
    while m.dim() == 0 {
        m = pick(rng);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let n = pick(rng);
        let candidate = if rng.gen_bool(0.5) {
            m.tensor(&n).expect("same algebra")
        } else {
            m.direct_sum(&n).expect("same algebra")
        };
        if candidate.dim() <= max_dim && candidate.dim() > 0 {
            m = candidate;
        }
    }
    let p = random_graded_invertible(rng, m.space(), 2);
    change_basis(&m, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::gl_superalgebra;
    use crate::nilform::block_multiplicities;

    #[test]
    fn nilpotent_sampler_matches_ground_truth() {
        let mut r = rng(3);
        for _ in 0..20 {
            let (op, obj) = random_odd_nilpotent(&mut r, 5, 5);
            assert_eq!(Ga11Object::from(&block_multiplicities(&op)), obj);
        }
    }

    #[test]
    fn modules_are_valid_and_reproducible() {
        let (_, v) = gl_superalgebra(1, 2).unwrap();
        let a = random_module(&mut rng(11), &v, 12);
        let b = random_module(&mut rng(11), &v, 12);
        assert_eq!(a, b);
        assert!(a.is_valid());
        assert!(a.dim() <= 12);
    }
}
