//! Finite biunary semigroups `(S; ·, *, +)` given by tables.
//!
//! Elements are indices `0..n`. `mul(a, b)` is the product written `a·b`.
//! The support table `star` is mandatory, the cosupport table `plus` is
//! optional and may be inferred (see [`elements::infer_cosupport`]).

pub mod classify;
pub mod elements;
pub mod iso;
pub mod morphism;
pub mod order;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use classify::{classify, AlgebraClassification, Witness};
pub use elements::{
    bd_subalgebra, deterministic_sets, infer_cosupport, partial_isomorphisms, projection_lattice, projections,
    CosupportError, DeterministicSets, ProjectionLattice,
};
pub use iso::{is_isomorphism, iso_algebras};
pub use morphism::{check_morphism, MorphismType, MorphismVerdict, SemigroupMorphism};
pub use order::{compatible, nat_leq, Mode, Poset, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("bad table shape: {0}")]
    BadTableShape(String),
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared zero {0} is not a zero projection")]
    BadZero(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("no cosupport table")]
    NoPlusTable,
    #[error("images of * and + differ at {0}")]
    PlusStarMismatch(usize),
    #[error("element {0} out of range")]
    UnknownElement(usize),
    #[error("axiom fails: {0}")]
    AxiomFail(String),
    #[error("not closed under {op}: {args:?}")]
    NotClosed { op: &'static str, args: Vec<usize> },
}

/// A finite semigroup with support and optional cosupport tables.
#[derive(Clone)]
pub struct BiUnaryAlgebra {
    names: Vec<String>,
    mult: Vec<usize>,
    star: Vec<usize>,
    plus: Option<Vec<usize>>,
    zero: Option<usize>,
    order: OnceLock<Poset>,
}

impl PartialEq for BiUnaryAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.mult == other.mult
            && self.star == other.star
            && self.plus == other.plus
            && self.zero == other.zero
    }
}

impl Eq for BiUnaryAlgebra {}

impl fmt::Debug for BiUnaryAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BiUnaryAlgebra")
            .field("n", &self.len())
            .field("names", &self.names)
            .field("zero", &self.zero)
            .field("plus", &self.plus.is_some())
            .finish()
    }
}

impl BiUnaryAlgebra {
    /// Validates shapes, associativity and the declared zero.
    pub fn new(
        names: Vec<String>,
        mult: Vec<Vec<usize>>,
        star: Vec<usize>,
        plus: Option<Vec<usize>>,
        zero: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::BadTableShape("no elements".into()));
        }
        if mult.len() != n {
            return Err(AlgebraError::BadTableShape(format!(
                "mult has {} rows, expected {n}",
                mult.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mult.into_iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::BadTableShape(format!(
                    "mult row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend(row);
        }
        Self::from_flat(names, flat, star, plus, zero)
    }

    /// Like [`BiUnaryAlgebra::new`] with the product table given row-major.
    pub fn from_flat(
        names: Vec<String>,
        mult: Vec<usize>,
        star: Vec<usize>,
        plus: Option<Vec<usize>>,
        zero: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 || mult.len() != n * n {
            return Err(AlgebraError::BadTableShape(format!(
                "mult has {} entries, expected {}",
                mult.len(),
                n * n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
        }
        check_unary("star", &star, n)?;
        if let Some(p) = &plus {
            check_unary("plus", p, n)?;
        }
        if let Some(&bad) = mult.iter().find(|&&v| v >= n) {
            return Err(AlgebraError::BadTableShape(format!("mult entry {bad} out of range")));
        }
        let alg = Self {
            names,
            mult,
            star,
            plus,
            zero,
            order: OnceLock::new(),
        };
        if let Some((i, j, k)) = alg.first_non_associative() {
            return Err(AlgebraError::NotAssociative(i, j, k));
        }
        if let Some(z) = zero {
            if z >= n {
                return Err(AlgebraError::UnknownElement(z));
            }
            let ok = alg.star(z) == z && (0..n).all(|s| alg.mul(z, s) == z && alg.mul(s, z) == z);
            if !ok {
                return Err(AlgebraError::BadZero(z));
            }
        }
        Ok(alg)
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.names.len() + b]
    }

    #[inline]
    pub fn star(&self, s: usize) -> usize {
        self.star[s]
    }

    #[inline]
    pub fn plus(&self, s: usize) -> Option<usize> {
        self.plus.as_ref().map(|p| p[s])
    }

    pub fn has_plus(&self) -> bool {
        self.plus.is_some()
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn plus_table(&self) -> Option<&[usize]> {
        self.plus.as_deref()
    }

    pub fn mult_row(&self, a: usize) -> &[usize] {
        let n = self.len();
        &self.mult[a * n..(a + 1) * n]
    }

    /// The declared zero, if any.
    pub fn declared_zero(&self) -> Option<usize> {
        self.zero
    }

    /// The zero projection: the declared one, else the unique projection
    /// `z` with `z·s = z` for all `s`.
    pub fn zero(&self) -> Option<usize> {
        self.zero
            .or_else(|| (0..self.len()).find(|&z| self.star(z) == z && (0..self.len()).all(|s| self.mul(z, s) == z)))
    }

    pub fn is_projection(&self, s: usize) -> bool {
        self.star[s] == s
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    /// Same multiplication and support with `plus` replaced.
    pub fn with_plus(&self, plus: Option<Vec<usize>>) -> Result<Self, AlgebraError> {
        if let Some(p) = &plus {
            check_unary("plus", p, self.len())?;
        }
        Ok(Self {
            names: self.names.clone(),
            mult: self.mult.clone(),
            star: self.star.clone(),
            plus,
            zero: self.zero,
            order: OnceLock::new(),
        })
    }

    /// The natural partial order `s ≤ t ⇔ s = t·s*`, computed once.
    pub fn order(&self) -> &Poset {
        self.order.get_or_init(|| Poset::natural(self, Side::Star))
    }

    /// Rows of the product table as nested vectors.
    pub fn mult_rows(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|a| self.mult_row(a).to_vec()).collect()
    }

    /// Subalgebra induced on `elems` (kept in the given order), with the
    /// returned embedding `new index ↦ old index`.
    pub fn induced(&self, elems: &[usize]) -> Result<(Self, Vec<usize>), AlgebraError> {
        let mut back = vec![usize::MAX; self.len()];
        for (i, &e) in elems.iter().enumerate() {
            if e >= self.len() {
                return Err(AlgebraError::UnknownElement(e));
            }
            back[e] = i;
        }
        let get = |v: usize, op: &'static str, args: Vec<usize>| {
            let i = back[v];
            if i == usize::MAX {
                Err(AlgebraError::NotClosed { op, args })
            } else {
                Ok(i)
            }
        };
        let m = elems.len();
        let mut mult = Vec::with_capacity(m * m);
        for &a in elems {
            for &b in elems {
                mult.push(get(self.mul(a, b), "·", vec![a, b])?);
            }
        }
        let star = elems
            .iter()
            .map(|&a| get(self.star(a), "*", vec![a]))
            .collect::<Result<Vec<_>, _>>()?;
        let plus = match &self.plus {
            None => None,
            Some(p) => Some(
                elems
                    .iter()
                    .map(|&a| get(p[a], "+", vec![a]))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let zero = self.zero.and_then(|z| (back[z] != usize::MAX).then_some(back[z]));
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let sub = Self {
            names,
            mult,
            star,
            plus,
            zero,
            order: OnceLock::new(),
        };
        Ok((sub, elems.to_vec()))
    }

    /// The same algebra with elements renamed; `names` must stay distinct.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self, AlgebraError> {
        Self::from_flat(
            names,
            self.mult.clone(),
            self.star.clone(),
            self.plus.clone(),
            self.zero,
        )
    }

    /// Relabels elements: new element `i` is old element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, AlgebraError> {
        let n = self.len();
        if perm.len() != n {
            return Err(AlgebraError::BadTableShape("permutation length".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(AlgebraError::BadTableShape("not a permutation".into()));
            }
            inv[p] = i;
        }
        let names = perm.iter().map(|&p| self.names[p].clone()).collect();
        let mut mult = Vec::with_capacity(n * n);
        for &a in perm {
            for &b in perm {
                mult.push(inv[self.mul(a, b)]);
            }
        }
        let star = perm.iter().map(|&a| inv[self.star(a)]).collect();
        let plus = self.plus.as_ref().map(|p| perm.iter().map(|&a| inv[p[a]]).collect());
        Self::from_flat(names, mult, star, plus, self.zero.map(|z| inv[z]))
    }
}

fn check_unary(op: &str, table: &[usize], n: usize) -> Result<(), AlgebraError> {
    if table.len() != n {
        return Err(AlgebraError::BadTableShape(format!(
            "{op} has {} entries, expected {n}",
            table.len()
        )));
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::BadTableShape(format!("{op} entry {bad} out of range")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn detects_non_associativity() {
        // (e0·e0)·e0 = e1·e0 = e1 but e0·(e0·e0) = e0·e1 = e0
        let err = BiUnaryAlgebra::new(names(2), vec![vec![1, 0], vec![1, 0]], vec![0, 1], None, None).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAssociative(..)), "{err:?}");
    }

    #[test]
    fn rejects_bad_shape() {
        let err = BiUnaryAlgebra::new(names(2), vec![vec![0, 0]], vec![0, 1], None, None).unwrap_err();
        assert!(matches!(err, AlgebraError::BadTableShape(_)));
        let err = BiUnaryAlgebra::new(names(1), vec![vec![0]], vec![3], None, None).unwrap_err();
        assert!(matches!(err, AlgebraError::BadTableShape(_)));
    }

    #[test]
    fn zero_is_detected_and_validated() {
        // {0, 1} under multiplication of booleans
        let s = BiUnaryAlgebra::new(names(2), vec![vec![0, 0], vec![0, 1]], vec![0, 1], None, None).unwrap();
        assert_eq!(s.zero(), Some(0));
        let err = BiUnaryAlgebra::new(names(2), vec![vec![0, 0], vec![0, 1]], vec![0, 1], None, Some(1)).unwrap_err();
        assert_eq!(err, AlgebraError::BadZero(1));
    }

    #[test]
    fn permutation_round_trips() {
        let s = BiUnaryAlgebra::new(names(2), vec![vec![0, 0], vec![0, 1]], vec![0, 1], None, Some(0)).unwrap();
        let p = s.permuted(&[1, 0]).unwrap();
        assert_eq!(p.mul(0, 0), 0);
        assert_eq!(p.mul(0, 1), 1);
        assert_eq!(p.declared_zero(), Some(1));
        assert_eq!(p.permuted(&[1, 0]).unwrap(), s);
    }
}
