use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of ℤ/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }

    /// `(-1)^(self·other)`.
    pub fn koszul(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }

    pub fn parse(s: &str) -> Result<Parity> {
        match s {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            _ => Err(Error::Parse(format!("not a parity: {s:?}"))),
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::of(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
    pub sdim: i64,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> Self {
        SuperDim {
            even,
            odd,
            sdim: even as i64 - odd as i64,
        }
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// A ℤ/2-graded space given by its basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperSpace {
    even: Vec<String>,
    odd: Vec<String>,
}

impl SuperSpace {
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for l in even.iter().chain(&odd) {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate basis label {l:?}"
                )));
            }
        }
        Ok(SuperSpace { even, odd })
    }

    /// `𝕜^{m|n}` with labels `v1 … v(m+n)`.
    pub fn with_dims(m: usize, n: usize) -> Self {
        SuperSpace::with_prefix("v", m, n)
    }

    pub fn with_prefix(prefix: &str, m: usize, n: usize) -> Self {
        SuperSpace {
            even: (1..=m).map(|i| format!("{prefix}{i}")).collect(),
            odd: (m + 1..=m + n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// Builds a space from labelled vectors in arbitrary order and returns, for each
    /// input position, its canonical index.
    pub fn from_labelled(items: &[(String, Parity)]) -> Result<(SuperSpace, Vec<usize>)> {
        let even: Vec<String> = items
            .iter()
            .filter(|(_, p)| *p == Parity::Even)
            .map(|(l, _)| l.clone())
            .collect();
        let odd: Vec<String> = items
            .iter()
            .filter(|(_, p)| *p == Parity::Odd)
            .map(|(l, _)| l.clone())
            .collect();
        let (mut e, mut o) = (0, even.len());
        let position = items
            .iter()
            .map(|(_, p)| match p {
                Parity::Even => {
                    e += 1;
                    e - 1
                }
                Parity::Odd => {
                    o += 1;
                    o - 1
                }
            })
            .collect();
        Ok((SuperSpace::new(even, odd)?, position))
    }

    pub fn zero() -> Self {
        SuperSpace::with_dims(0, 0)
    }

    /// The unit object `𝕜^{1|0}`.
    pub fn unit() -> Self {
        SuperSpace {
            even: vec!["1".into()],
            odd: Vec::new(),
        }
    }

    pub fn even_labels(&self) -> &[String] {
        &self.even
    }

    pub fn odd_labels(&self) -> &[String] {
        &self.odd
    }

    pub fn even_dim(&self) -> usize {
        self.even.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd.len()
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        assert!(i < self.dim(), "basis index out of range");
        if i < self.even.len() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Canonical indices of the basis vectors of the given parity.
    pub fn indices(&self, p: Parity) -> std::ops::Range<usize> {
        match p {
            Parity::Even => 0..self.even.len(),
            Parity::Odd => self.even.len()..self.dim(),
        }
    }

    pub fn label(&self, i: usize) -> &str {
        if i < self.even.len() {
            &self.even[i]
        } else {
            &self.odd[i - self.even.len()]
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.even.iter().chain(&self.odd)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().position(|l| l == label)
    }

    pub fn superdim(&self) -> SuperDim {
        SuperDim::new(self.even.len(), self.odd.len())
    }

    pub fn sdim(&self) -> i64 {
        self.superdim().sdim
    }

    /// Π: the same labels with even and odd exchanged.
    pub fn parity_shift(&self) -> SuperSpace {
        SuperSpace {
            even: self.odd.clone(),
            odd: self.even.clone(),
        }
    }

    /// Canonical index in `Π(self)` of canonical index `i` of `self`.
    pub fn shifted_index(&self, i: usize) -> usize {
        let (e, o) = (self.even.len(), self.odd.len());
        if i < e {
            o + i
        } else {
            i - e
        }
    }
}

/// `V ⊗ W` together with the bookkeeping between canonical positions and factor pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorProduct {
    pub space: SuperSpace,
    /// Canonical index ↦ `(i, j)` factor indices.
    pub pairs: Vec<(usize, usize)>,
    /// Lexicographic position `i·dim W + j` ↦ canonical index.
    pub position: Vec<usize>,
    pub right_dim: usize,
}

impl TensorProduct {
    pub fn index(&self, i: usize, j: usize) -> usize {
        self.position[i * self.right_dim + j]
    }
}

/// Basis ordered lexicographically (left index major) and then sorted stably into
/// even/odd blocks by total parity.
pub fn tensor(v: &SuperSpace, w: &SuperSpace) -> TensorProduct {
    let mut items = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            items.push((
                format!("{}⊗{}", v.label(i), w.label(j)),
                v.parity(i) + w.parity(j),
            ));
        }
    }
    let (space, position) = SuperSpace::from_labelled(&items).expect("tensor labels are distinct");
    let mut pairs = vec![(0, 0); position.len()];
    for (lex, &canon) in position.iter().enumerate() {
        pairs[canon] = (lex / w.dim().max(1), lex % w.dim().max(1));
    }
    TensorProduct {
        space,
        pairs,
        position,
        right_dim: w.dim(),
    }
}

/// Dual space: dual basis with the same parities.
pub fn dual(v: &SuperSpace) -> SuperSpace {
    SuperSpace {
        even: v.even.iter().map(|l| format!("{l}*")).collect(),
        odd: v.odd.iter().map(|l| format!("{l}*")).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSum {
    pub space: SuperSpace,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// `V ⊕ W`; even block is `V₀ then W₀`, odd block `V₁ then W₁`. Labels of the right
/// summand are primed on collision.
pub fn direct_sum(v: &SuperSpace, w: &SuperSpace) -> DirectSum {
    let taken: HashSet<&String> = v.labels().collect();
    let rename = |l: &String| {
        let mut l = l.clone();
        while taken.contains(&l) {
            l.push('\'');
        }
        l
    };
    let even: Vec<String> = v
        .even
        .iter()
        .cloned()
        .chain(w.even.iter().map(rename))
        .collect();
    let odd: Vec<String> = v
        .odd
        .iter()
        .cloned()
        .chain(w.odd.iter().map(rename))
        .collect();
    let ne = even.len();
    let left = (0..v.dim())
        .map(|i| {
            if i < v.even_dim() {
                i
            } else {
                ne + (i - v.even_dim())
            }
        })
        .collect();
    let right = (0..w.dim())
        .map(|j| {
            if j < w.even_dim() {
                v.even_dim() + j
            } else {
                ne + v.odd_dim() + (j - w.even_dim())
            }
        })
        .collect();
    DirectSum {
        space: SuperSpace::new(even, odd).expect("renamed labels are distinct"),
        left,
        right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superdim_examples() {
        assert_eq!(
            SuperSpace::with_dims(3, 2).superdim(),
            SuperDim {
                even: 3,
                odd: 2,
                sdim: 1
            }
        );
        assert_eq!(SuperSpace::zero().superdim(), SuperDim::new(0, 0));
        let shifted = SuperSpace::with_dims(1, 2).parity_shift();
        assert_eq!(
            shifted.superdim(),
            SuperDim {
                even: 2,
                odd: 1,
                sdim: 1
            }
        );
        let v = SuperSpace::with_dims(1, 2);
        assert_eq!(v.parity_shift().parity_shift(), v);
    }

    #[test]
    fn tensor_counts() {
        let t = tensor(&SuperSpace::with_dims(1, 1), &SuperSpace::with_dims(1, 1));
        assert_eq!(t.space.superdim(), SuperDim::new(2, 2));
        let t = tensor(&SuperSpace::with_dims(2, 1), &SuperSpace::with_dims(1, 3));
        assert_eq!(t.space.sdim(), -2);
        for (c, &(i, j)) in t.pairs.iter().enumerate() {
            assert_eq!(t.index(i, j), c);
        }
    }

    #[test]
    fn direct_sum_positions() {
        let v = SuperSpace::with_dims(1, 1);
        let ds = direct_sum(&v, &v);
        assert_eq!(ds.space.superdim(), SuperDim::new(2, 2));
        assert_eq!(ds.left, vec![0, 2]);
        assert_eq!(ds.right, vec![1, 3]);
        assert_eq!(ds.space.label(1), "v1'");
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(SuperSpace::new(vec!["a".into()], vec!["a".into()]).is_err());
    }
}
