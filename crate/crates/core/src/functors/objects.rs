use std::collections::BTreeMap;
use std::fmt;

use crate::nilform::{BlockDecomposition, BlockType};
use crate::superlinalg::{Parity, SuperDim};

/// A semisimple `OSp(1|2)`-module: `⊕ (Π^shift M̃_{2k})^{⊕mult}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SemisimpleObject {
    summands: BTreeMap<(usize, Parity), usize>,
}

impl SemisimpleObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(k: usize, shift: Parity) -> Self {
        Self::from_summands([(k, shift, 1)])
    }

    pub fn from_summands(items: impl IntoIterator<Item = (usize, Parity, usize)>) -> Self {
        let mut out = Self::zero();
        for (k, s, m) in items {
            out.add(k, s, m);
        }
        out
    }

    pub fn add(&mut self, k: usize, shift: Parity, mult: usize) {
        if mult > 0 {
            *self.summands.entry((k, shift)).or_insert(0) += mult;
        }
    }

    /// `(k, shift, mult)` in canonical order: `k` ascending, even before odd.
    pub fn summands(&self) -> impl Iterator<Item = (usize, Parity, usize)> + '_ {
        self.summands.iter().map(|(&(k, s), &m)| (k, s, m))
    }

    pub fn multiplicity(&self, k: usize, shift: Parity) -> usize {
        self.summands.get(&(k, shift)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn superdim(&self) -> SuperDim {
        let (mut e, mut o) = (0, 0);
        for (k, s, m) in self.summands() {
            let (big, small) = (m * (k + 1), m * k);
            match s {
                Parity::Even => {
                    e += big;
                    o += small;
                }
                Parity::Odd => {
                    e += small;
                    o += big;
                }
            }
        }
        SuperDim::new(e, o)
    }

    pub fn sdim(&self) -> i64 {
        self.superdim().sdim
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, s, m) in other.summands() {
            out.add(k, s, m);
        }
        out
    }

    /// Tensor product, by the fusion rule on simples extended bilinearly.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, a, p) in self.summands() {
            for (m, b, q) in other.summands() {
                for (s, shift, mult) in super::fusion::osp_fusion((k, a), (m, b)).summands() {
                    out.add(s, shift, mult * p * q);
                }
            }
        }
        out
    }
}

impl fmt::Display for SemisimpleObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands()
            .map(|(k, s, m)| {
                let pi = if s == Parity::Odd { "Π" } else { "" };
                let mult = if m > 1 {
                    format!("^{m}")
                } else {
                    String::new()
                };
                format!("{pi}M̃{}{mult}", 2 * k)
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// A `𝔾ₐ^(1|1)`-module up to isomorphism: multiplicities of the blocks `Π^ε M_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ga11Object {
    summands: BTreeMap<BlockType, usize>,
}

impl Ga11Object {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn block(length: usize, shift: Parity) -> Self {
        Self::from_summands([(BlockType::new(length, shift), 1)])
    }

    pub fn from_summands(items: impl IntoIterator<Item = (BlockType, usize)>) -> Self {
        let mut out = Self::zero();
        for (b, m) in items {
            out.add(b, m);
        }
        out
    }

    pub fn add(&mut self, b: BlockType, mult: usize) {
        assert!(b.length > 0, "blocks have positive length");
        if mult > 0 {
            *self.summands.entry(b).or_insert(0) += mult;
        }
    }

    pub fn summands(&self) -> impl Iterator<Item = (BlockType, usize)> + '_ {
        self.summands.iter().map(|(&b, &m)| (b, m))
    }

    pub fn as_map(&self) -> &BTreeMap<BlockType, usize> {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn superdim(&self) -> SuperDim {
        let (e, o) = self.summands().fold((0, 0), |(e, o), (b, m)| {
            let (be, bo) = b.dims();
            (e + m * be, o + m * bo)
        });
        SuperDim::new(e, o)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, p) in self.summands() {
            for (b, q) in other.summands() {
                for (c, m) in super::fusion::ga11_fusion(a, b).summands() {
                    out.add(c, m * p * q);
                }
            }
        }
        out
    }
}

impl From<&BlockDecomposition> for Ga11Object {
    fn from(d: &BlockDecomposition) -> Self {
        Ga11Object::from_summands(d.blocks.iter().map(|(&b, &m)| (b, m)))
    }
}

impl fmt::Display for Ga11Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands()
            .map(|(b, m)| {
                if m > 1 {
                    format!("{b}^{m}")
                } else {
                    b.to_string()
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Drops blocks of even length (superdimension zero) and sends `Π^ε M_{2k}` to `Π^ε M̃_{2k}`.
pub fn semisimplify(obj: &Ga11Object) -> SemisimpleObject {
    SemisimpleObject::from_summands(
        obj.summands()
            .filter(|(b, _)| b.length % 2 == 1)
            .map(|(b, m)| ((b.length - 1) / 2, b.top_parity, m)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semisimplification_rules() {
        assert!(semisimplify(&Ga11Object::block(4, Parity::Even)).is_zero());
        assert_eq!(
            semisimplify(&Ga11Object::block(3, Parity::Even)),
            SemisimpleObject::simple(1, Parity::Even)
        );
        let mixed = Ga11Object::from_summands([
            (BlockType::new(5, Parity::Odd), 1),
            (BlockType::new(2, Parity::Even), 1),
        ]);
        assert_eq!(
            semisimplify(&mixed),
            SemisimpleObject::simple(2, Parity::Odd)
        );
    }

    #[test]
    fn dims_and_display() {
        let o = SemisimpleObject::from_summands([
            (2, Parity::Even, 1),
            (1, Parity::Odd, 1),
            (0, Parity::Even, 1),
        ]);
        assert_eq!(o.superdim(), SuperDim::new(5, 4));
        assert_eq!(o.to_string(), "M̃0 ⊕ ΠM̃2 ⊕ M̃4");
        let m2 = SemisimpleObject::simple(1, Parity::Even);
        assert_eq!(m2.tensor(&m2), o);
        let unit = SemisimpleObject::simple(0, Parity::Even);
        assert_eq!(unit.tensor(&o), o);
    }
}
