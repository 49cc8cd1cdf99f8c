use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::superlinalg::Parity;

/// Coefficient vector with respect to an algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub coeffs: Vec<Rational>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[i] = int(1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

type Sparse = Vec<(usize, Rational)>;

/// Finite-dimensional Lie superalgebra given by structure constants.
///
/// Only brackets `[bᵢ, bⱼ]` with `i ≤ j` are supplied; the rest follow from super
/// antisymmetry `[y, z] = −(−1)^{|y||z|}[z, y]`. The basis is kept in canonical
/// order (even elements first), so algebra coordinates coincide with the canonical
/// coordinates of the adjoint representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    names: Vec<String>,
    parities: Vec<Parity>,
    stored: BTreeMap<(usize, usize), Sparse>,
    table: Vec<Vec<Sparse>>,
}

impl LieSuperAlgebra {
    /// Brackets are given by basis index in the order of `basis`; the basis is then
    /// reordered stably so that even elements come first.
    pub fn new(
        basis: Vec<(String, Parity)>,
        brackets: Vec<((usize, usize), Sparse)>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut seen = HashSet::new();
        for (name, _) in &basis {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlgebra(vec![format!(
                    "duplicate basis name {name:?}"
                )]));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| basis[i].1);
        let mut new_index = vec![0; n];
        for (pos, &old) in order.iter().enumerate() {
            new_index[old] = pos;
        }
        let names: Vec<String> = order.iter().map(|&i| basis[i].0.clone()).collect();
        let parities: Vec<Parity> = order.iter().map(|&i| basis[i].1).collect();

        let mut problems = Vec::new();
        let mut stored: BTreeMap<(usize, usize), Sparse> = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
                problems.push(format!(
                    "bracket ({i},{j}) refers to a missing basis element"
                ));
                continue;
            }
            if i > j {
                problems.push(format!("bracket ({i},{j}) given with i > j"));
                continue;
            }
            let (a, b) = (new_index[i], new_index[j]);
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in terms {
                *acc.entry(new_index[k]).or_insert_with(Rational::zero) += c;
            }
            let mut sparse: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            for (k, _) in &sparse {
                if parities[*k] != parities[a] + parities[b] {
                    problems.push(format!(
                        "[{}, {}] has a component along {} of the wrong parity",
                        names[a], names[b], names[*k]
                    ));
                }
            }
            let key = if a <= b { (a, b) } else { (b, a) };
            if a > b {
                let sign = int(-parities[a].koszul(parities[b]));
                sparse = sparse.into_iter().map(|(k, c)| (k, c * &sign)).collect();
            }
            if stored.insert(key, sparse).is_some() {
                problems.push(format!("bracket ({i},{j}) given twice"));
            }
        }
        if !problems.is_empty() {
            return Err(Error::InvalidAlgebra(problems));
        }
        Ok(Self::from_canonical(names, parities, stored))
    }

    fn from_canonical(
        names: Vec<String>,
        parities: Vec<Parity>,
        stored: BTreeMap<(usize, usize), Sparse>,
    ) -> Self {
        let n = names.len();
        let mut table = vec![vec![Sparse::new(); n]; n];
        for (&(i, j), terms) in &stored {
            table[i][j] = terms.clone();
            if i != j {
                let sign = int(-parities[i].koszul(parities[j]));
                table[j][i] = terms.iter().map(|(k, c)| (*k, c * &sign)).collect();
            }
        }
        LieSuperAlgebra {
            names,
            parities,
            stored,
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// `(even, odd)` dimensions.
    pub fn graded_dim(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        (even, self.dim() - even)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownBasis(name.to_string()))
    }

    /// Basis indices of the given parity (a contiguous range).
    pub fn indices(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    /// The structure constants with `i ≤ j`, in canonical basis order.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Sparse> {
        &self.stored
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    /// Element from `(name, coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, Rational)]) -> Result<Element> {
        let mut e = self.zero();
        for (name, c) in terms {
            e.coeffs[self.index_of(name)?] += c;
        }
        Ok(e)
    }

    pub fn bracket(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let f = ca * cb;
                for (k, c) in &self.table[i][j] {
                    out.coeffs[*k] += &f * c;
                }
            }
        }
        out
    }

    /// Parity of a homogeneous element; `None` when the element mixes parities.
    /// Zero reports `Some(Even)`; use [`is_odd`](Self::is_odd) to admit zero as odd.
    pub fn parity_of(&self, e: &Element) -> Option<Parity> {
        let mut found = None;
        for (i, c) in e.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn is_odd(&self, e: &Element) -> bool {
        e.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.parities[i] == Parity::Odd)
    }

    pub fn is_even(&self, e: &Element) -> bool {
        e.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.parities[i] == Parity::Even)
    }

    /// Every violated super antisymmetry or super Jacobi identity on basis
    /// elements. Empty means the structure constants define a Lie superalgebra.
    pub fn validate(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            if self.parities[i] == Parity::Even && !self.table[i][i].is_empty() {
                out.push(format!(
                    "antisymmetry: [{0}, {0}] ≠ 0 for even {0}",
                    self.names[i]
                ));
            }
        }
        // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
        for a in 0..n {
            for b in 0..n {
                let ab = &self.table[a][b];
                let sign = int(self.parities[a].koszul(self.parities[b]));
                for c in 0..n {
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (k, x) in &self.table[b][c] {
                        for (l, y) in &self.table[a][*k] {
                            *acc.entry(*l).or_insert_with(Rational::zero) += x * y;
                        }
                    }
                    for (k, x) in ab {
                        for (l, y) in &self.table[*k][c] {
                            *acc.entry(*l).or_insert_with(Rational::zero) -= x * y;
                        }
                    }
                    for (k, x) in &self.table[a][c] {
                        for (l, y) in &self.table[b][*k] {
                            *acc.entry(*l).or_insert_with(Rational::zero) -= &sign * x * y;
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        out.push(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg_like() -> LieSuperAlgebra {
        // (1|2): odd a, b with [a,b] = z, z central; a reordered basis on input.
        LieSuperAlgebra::new(
            vec![
                ("a".into(), Parity::Odd),
                ("z".into(), Parity::Even),
                ("b".into(), Parity::Odd),
            ],
            vec![((0, 2), vec![(1, int(1))])],
        )
        .unwrap()
    }

    #[test]
    fn basis_is_sorted_even_first() {
        let g = heisenberg_like();
        assert_eq!(g.names(), ["z", "a", "b"]);
        let a = g.element(&[("a", int(1))]).unwrap();
        let b = g.element(&[("b", int(1))]).unwrap();
        let z = g.element(&[("z", int(1))]).unwrap();
        assert_eq!(g.bracket(&a, &b), z);
        assert_eq!(g.bracket(&b, &a), z);
        assert!(g.is_valid());
    }

    #[test]
    fn wrong_parity_rejected() {
        let r = LieSuperAlgebra::new(
            vec![("a".into(), Parity::Odd), ("z".into(), Parity::Even)],
            vec![((0, 1), vec![(1, int(1))])],
        );
        assert!(matches!(r, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn even_self_bracket_reported() {
        let g = LieSuperAlgebra::new(
            vec![("z".into(), Parity::Even)],
            vec![((0, 0), vec![(0, int(1))])],
        )
        .unwrap();
        assert!(!g.validate().is_empty());
    }
}
