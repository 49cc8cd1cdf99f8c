use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, Matrix, Rational, SpanBuilder};
use crate::superlinalg::{HomMap, Parity, SuperSpace};

/// An odd nilpotent endomorphism of a super space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddNilpotent {
    x: HomMap,
    index: usize,
}

impl OddNilpotent {
    pub fn new(x: HomMap) -> Result<Self> {
        if !x.is_endo() {
            return Err(Error::Shape("odd nilpotent must be an endomorphism".into()));
        }
        if x.parity() != Parity::Odd {
            return Err(Error::Parity("operator is not odd".into()));
        }
        let index = x.matrix().nilpotency_index().ok_or(Error::NotNilpotent)?;
        Ok(OddNilpotent { x, index })
    }

    pub fn from_matrix(space: SuperSpace, m: Matrix) -> Result<Self> {
        OddNilpotent::new(HomMap::endo(space, Parity::Odd, m)?)
    }

    pub fn space(&self) -> &SuperSpace {
        self.x.source()
    }

    pub fn map(&self) -> &HomMap {
        &self.x
    }

    pub fn matrix(&self) -> &Matrix {
        self.x.matrix()
    }

    /// Smallest `k` with `x^k = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.index
    }

    /// `x^0, x^1, …, x^index`.
    pub(crate) fn powers(&self) -> Vec<Matrix> {
        let n = self.space().dim();
        let mut out = vec![Matrix::identity(n)];
        for _ in 0..self.index {
            let next = self.matrix() * out.last().unwrap();
            out.push(next);
        }
        out
    }
}

/// Indecomposable `Π^top_parity M_{length−1}`: a chain `a₀ → a₁ → … ` of the given
/// length whose first vector has parity `top_parity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockType {
    pub length: usize,
    pub top_parity: Parity,
}

impl BlockType {
    pub fn new(length: usize, top_parity: Parity) -> Self {
        BlockType { length, top_parity }
    }

    pub fn bottom_parity(&self) -> Parity {
        self.top_parity + Parity::of(self.length - 1)
    }

    /// `(even, odd)` dimensions.
    pub fn dims(&self) -> (usize, usize) {
        let big = self.length.div_ceil(2);
        let small = self.length / 2;
        match self.top_parity {
            Parity::Even => (big, small),
            Parity::Odd => (small, big),
        }
    }

    pub fn sdim(&self) -> i64 {
        let (e, o) = self.dims();
        e as i64 - o as i64
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = if self.top_parity == Parity::Odd {
            "Π"
        } else {
            ""
        };
        write!(f, "{pi}M{}", self.length - 1)
    }
}

/// A chain basis `a₀, …, a_{L−1}` with `x a_j = a_{j+1}` and `x a_{L−1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub block: BlockType,
    pub vectors: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlockDecomposition {
    pub blocks: BTreeMap<BlockType, usize>,
    pub chains: Option<Vec<Chain>>,
}

impl BlockDecomposition {
    pub fn from_blocks(blocks: impl IntoIterator<Item = (BlockType, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (b, m) in blocks {
            if m > 0 {
                *map.entry(b).or_insert(0) += m;
            }
        }
        BlockDecomposition {
            blocks: map,
            chains: None,
        }
    }

    pub fn total_blocks(&self) -> usize {
        self.blocks.values().sum()
    }

    /// `(even, odd)` dimensions of the decomposed space.
    pub fn dims(&self) -> (usize, usize) {
        self.blocks.iter().fold((0, 0), |(e, o), (b, m)| {
            let (be, bo) = b.dims();
            (e + m * be, o + m * bo)
        })
    }

    pub fn max_length(&self) -> usize {
        self.blocks.keys().map(|b| b.length).max().unwrap_or(0)
    }

    /// Every chain vector as a column, chains in order.
    pub fn chain_matrix(&self) -> Option<Matrix> {
        let chains = self.chains.as_ref()?;
        let n = chains
            .iter()
            .flat_map(|c| c.vectors.first())
            .map(Vec::len)
            .next()
            .unwrap_or(0);
        let cols: Vec<Vec<Rational>> = chains
            .iter()
            .flat_map(|c| c.vectors.iter().cloned())
            .collect();
        Some(Matrix::from_columns(n, &cols))
    }
}

/// Restricts `m` to the source columns of parity `p` and returns the rank.
fn parity_rank(space: &SuperSpace, m: &Matrix, p: Parity) -> usize {
    let cols: Vec<usize> = space.indices(p).collect();
    m.select_columns(&cols).rank()
}

/// Block multiplicities from ranks alone: the number of blocks of length `≥ ℓ` whose
/// bottom vector has parity `δ` equals `rank(x^{ℓ−1}|V_ε) − rank(x^ℓ|V_ε)` with
/// `ε = δ + ℓ − 1`.
pub fn block_multiplicities(op: &OddNilpotent) -> BlockDecomposition {
    let powers = op.powers();
    let space = op.space();
    let top = op.nilpotency_index();
    let rank = |l: usize, p: Parity| -> usize {
        if l > top {
            0
        } else {
            parity_rank(space, &powers[l], p)
        }
    };
    let mut ranks: BTreeMap<(usize, Parity), usize> = BTreeMap::new();
    let mut r = |l: usize, p: Parity| *ranks.entry((l, p)).or_insert_with(|| rank(l, p));
    let mut at_least = BTreeMap::new();
    for l in 1..=top + 1 {
        for delta in [Parity::Even, Parity::Odd] {
            let eps = delta + Parity::of(l - 1);
            at_least.insert((l, delta), r(l - 1, eps) - r(l, eps));
        }
    }
    let mut blocks = Vec::new();
    for l in 1..=top {
        for delta in [Parity::Even, Parity::Odd] {
            let m = at_least[&(l, delta)] - at_least[&(l + 1, delta)];
            blocks.push((BlockType::new(l, delta + Parity::of(l - 1)), m));
        }
    }
    BlockDecomposition::from_blocks(blocks)
}

/// Order in which candidate top vectors are offered to the greedy chain extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotOrder {
    /// Canonical kernel basis, lowest pivot first.
    #[default]
    Canonical,
    /// Seeded random invertible recombination of the canonical candidates.
    Seeded(u64),
}

/// Pure-parity basis of `Ker m` inside the parity-`p` part, as full-length vectors.
fn graded_kernel(space: &SuperSpace, m: &Matrix, p: Parity) -> Vec<Vec<Rational>> {
    let cols: Vec<usize> = space.indices(p).collect();
    let k = kernel_basis(&m.select_columns(&cols));
    (0..k.cols())
        .map(|c| {
            let mut v = vec![Rational::zero(); space.dim()];
            for (i, &col) in cols.iter().enumerate() {
                v[col] = k[(i, c)].clone();
            }
            v
        })
        .collect()
}

fn scramble(vectors: Vec<Vec<Rational>>, rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    let n = vectors.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // Unit upper-triangular recombination keeps the span and independence.
    (0..n)
        .map(|i| {
            let mut v = vectors[order[i]].clone();
            for &j in &order[i + 1..] {
                let c = int(rng.gen_range(-3..=3));
                if !c.is_zero() {
                    for (a, b) in v.iter_mut().zip(&vectors[j]) {
                        *a += &c * b;
                    }
                }
            }
            v
        })
        .collect()
}

/// Chain basis by greedy extraction, longest chains first: top vectors of length-`L`
/// chains complement `Ker x^{L−1}` plus the relevant tails of longer chains inside
/// `Ker x^L`, chosen parity by parity.
pub fn adapted_basis(op: &OddNilpotent, order: PivotOrder) -> Result<BlockDecomposition> {
    let powers = op.powers();
    let space = op.space();
    let n = space.dim();
    let mut rng = match order {
        PivotOrder::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        PivotOrder::Canonical => None,
    };
    let mut chains: Vec<Chain> = Vec::new();
    for l in (1..=op.nilpotency_index()).rev() {
        for p in [Parity::Even, Parity::Odd] {
            let mut span = SpanBuilder::new(n);
            for v in graded_kernel(space, &powers[l - 1], p) {
                span.insert(&v);
            }
            for c in &chains {
                let shift = c.block.length - l;
                if c.block.top_parity + Parity::of(shift) == p {
                    span.insert(&c.vectors[shift]);
                }
            }
            let mut candidates = graded_kernel(space, &powers[l], p);
            if let Some(rng) = rng.as_mut() {
                candidates = scramble(candidates, rng);
            }
            for v in candidates {
                if span.insert(&v) {
                    let mut vectors = vec![v];
                    for _ in 1..l {
                        let next = op.matrix().mul_vec(vectors.last().unwrap());
                        vectors.push(next);
                    }
                    chains.push(Chain {
                        block: BlockType::new(l, p),
                        vectors,
                    });
                }
            }
        }
    }
    let mut all = SpanBuilder::new(n);
    let mut count = 0;
    for c in &chains {
        for v in &c.vectors {
            all.insert(v);
            count += 1;
        }
    }
    if count != n || all.rank() != n {
        return Err(Error::Defect("chain vectors do not form a basis".into()));
    }
    let mut dec = BlockDecomposition::from_blocks(chains.iter().map(|c| (c.block, 1)));
    dec.chains = Some(chains);
    Ok(dec)
}

/// Every block has odd length, i.e. nonzero superdimension.
pub fn is_neat_on(op: &OddNilpotent) -> bool {
    block_multiplicities(op)
        .blocks
        .keys()
        .all(|b| b.length % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_op(length: usize, top: Parity) -> OddNilpotent {
        let (space, pos) = crate::liesuper::chain_space(length, top, "a");
        let mut m = Matrix::zeros(length, length);
        for j in 0..length.saturating_sub(1) {
            m[(pos[j + 1], pos[j])] = int(1);
        }
        OddNilpotent::from_matrix(space, m).unwrap()
    }

    #[test]
    fn zero_operator() {
        let op =
            OddNilpotent::from_matrix(SuperSpace::with_dims(2, 3), Matrix::zeros(5, 5)).unwrap();
        let b = block_multiplicities(&op);
        assert_eq!(b.blocks[&BlockType::new(1, Parity::Even)], 2);
        assert_eq!(b.blocks[&BlockType::new(1, Parity::Odd)], 3);
        assert_eq!(b.total_blocks(), 5);
        let a = adapted_basis(&op, PivotOrder::Canonical).unwrap();
        assert_eq!(a.blocks, b.blocks);
        assert!(is_neat_on(&op));
    }

    #[test]
    fn single_chains() {
        for len in 1..=7 {
            for top in [Parity::Even, Parity::Odd] {
                let op = chain_op(len, top);
                let b = block_multiplicities(&op);
                assert_eq!(b.blocks.len(), 1);
                assert_eq!(b.blocks[&BlockType::new(len, top)], 1);
                assert_eq!(b.dims(), (op.space().even_dim(), op.space().odd_dim()));
                let a = adapted_basis(&op, PivotOrder::Seeded(len as u64)).unwrap();
                assert_eq!(a.blocks, b.blocks);
                assert_eq!(is_neat_on(&op), len % 2 == 1);
            }
        }
    }

    #[test]
    fn m2_chain_is_defining_chain() {
        let op = chain_op(3, Parity::Even);
        let a = adapted_basis(&op, PivotOrder::Canonical).unwrap();
        let chain = &a.chains.as_ref().unwrap()[0];
        // canonical order a0, a2 (even), a1 (odd)
        assert_eq!(chain.vectors[0], vec![int(1), int(0), int(0)]);
        assert_eq!(chain.vectors[1], vec![int(0), int(0), int(1)]);
        assert_eq!(chain.vectors[2], vec![int(0), int(1), int(0)]);
    }

    #[test]
    fn non_nilpotent_rejected() {
        let m = Matrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(
            OddNilpotent::from_matrix(SuperSpace::with_dims(1, 1), m),
            Err(Error::NotNilpotent)
        );
    }
}
