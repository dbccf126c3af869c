//! Local sections of a finite category and the slice semigroup.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use super::FinCat;
use crate::algebra::BiUnaryAlgebra;

pub const DEFAULT_MAX_SIZE: usize = 100_000;

/// The slice-semigroup bound, from `SDL_MAX_SIZE` when set and valid.
pub fn max_size_from_env() -> usize {
    std::env::var("SDL_MAX_SIZE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_SIZE)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SliceError {
    #[error("arrows {0} and {1} share a domain")]
    NotLocalSection(usize, usize),
    #[error("unknown arrow {0}")]
    UnknownArrow(usize),
    #[error("slices belong to different categories")]
    ParentMismatch,
    #[error("slice semigroup would have {predicted} elements, bound is {bound}")]
    TooLarge { predicted: u128, bound: usize },
}

/// A set of arrows on which `dom` is injective, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slice<'c> {
    parent: &'c FinCat,
    arrows: Vec<usize>,
}

impl<'c> Slice<'c> {
    pub fn new(parent: &'c FinCat, mut arrows: Vec<usize>) -> Result<Self, SliceError> {
        arrows.sort_unstable();
        arrows.dedup();
        let mut owner = vec![usize::MAX; parent.n_objects()];
        for &x in &arrows {
            if x >= parent.n_arrows() {
                return Err(SliceError::UnknownArrow(x));
            }
            let d = parent.dom(x);
            if owner[d] != usize::MAX {
                return Err(SliceError::NotLocalSection(owner[d], x));
            }
            owner[d] = x;
        }
        Ok(Self { parent, arrows })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn into_arrows(self) -> Vec<usize> {
        self.arrows
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_bislice(&self) -> bool {
        let mut seen = vec![false; self.parent.n_objects()];
        self.arrows
            .iter()
            .all(|&x| !std::mem::replace(&mut seen[self.parent.cod(x)], true))
    }

    /// `AB = {ab : a ∈ A, b ∈ B, dom(a) = cod(b)}`.
    pub fn product(&self, other: &Slice<'c>) -> Result<Slice<'c>, SliceError> {
        if !std::ptr::eq(self.parent, other.parent) {
            return Err(SliceError::ParentMismatch);
        }
        let c = self.parent;
        let arrows = self
            .arrows
            .iter()
            .flat_map(|&a| other.arrows.iter().filter_map(move |&b| c.comp(a, b)))
            .collect();
        Slice::new(c, arrows)
    }

    /// `1_{dom(A)}`
    pub fn support(&self) -> Slice<'c> {
        let arrows = self
            .arrows
            .iter()
            .map(|&x| self.parent.unit(self.parent.dom(x)))
            .collect();
        Slice::new(self.parent, arrows).expect("units have distinct domains")
    }

    /// `1_{cod(A)}`
    pub fn cosupport(&self) -> Slice<'c> {
        let arrows = self
            .arrows
            .iter()
            .map(|&x| self.parent.unit(self.parent.cod(x)))
            .collect();
        Slice::new(self.parent, arrows).expect("units have distinct domains")
    }

    pub fn name(&self) -> String {
        slice_name(self.parent, &self.arrows)
    }
}

fn slice_name(c: &FinCat, arrows: &[usize]) -> String {
    let parts: Vec<&str> = arrows.iter().map(|&x| c.arrow_name(x)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Number of local sections: one optional arrow per domain fibre.
pub fn predicted_size(c: &FinCat) -> u128 {
    (0..c.n_objects())
        .map(|o| 1 + c.star_of(o).len() as u128)
        .fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// The semigroup of all local sections (or only bislices) of `C`, with
/// support `1_{dom(A)}` and cosupport `1_{cod(A)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceSemigroup {
    pub category: Arc<FinCat>,
    pub bislices_only: bool,
    pub algebra: Arc<BiUnaryAlgebra>,
    slices: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl SliceSemigroup {
    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn arrows_of(&self, i: usize) -> &[usize] {
        &self.slices[i]
    }

    pub fn slice(&self, i: usize) -> Slice<'_> {
        Slice {
            parent: &self.category,
            arrows: self.slices[i].clone(),
        }
    }

    /// Element index of a sorted arrow set.
    pub fn index_of(&self, arrows: &[usize]) -> Option<usize> {
        self.index.get(arrows).copied()
    }

    pub fn index_of_unsorted(&self, arrows: &[usize]) -> Option<usize> {
        let mut v = arrows.to_vec();
        v.sort_unstable();
        v.dedup();
        self.index_of(&v)
    }
}

/// Enumerates slices with object 0 as the most significant choice and
/// "no arrow" before the arrows of each fibre, so `∅` is element 0.
pub fn slice_semigroup(c: Arc<FinCat>, bislices_only: bool, max_size: usize) -> Result<SliceSemigroup, SliceError> {
    let predicted = predicted_size(&c);
    if predicted > max_size as u128 {
        return Err(SliceError::TooLarge {
            predicted,
            bound: max_size,
        });
    }
    let fibres: Vec<Vec<usize>> = (0..c.n_objects()).map(|o| c.star_of(o)).collect();
    let mut slices = Vec::new();
    let mut choice = vec![0usize; fibres.len()];
    loop {
        let arrows: Vec<usize> = {
            let mut v: Vec<usize> = choice
                .iter()
                .zip(&fibres)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, f)| f[k - 1])
                .collect();
            v.sort_unstable();
            v
        };
        let keep = !bislices_only || {
            let mut seen = vec![false; c.n_objects()];
            arrows.iter().all(|&x| !std::mem::replace(&mut seen[c.cod(x)], true))
        };
        if keep {
            slices.push(arrows);
        }
        // odometer, last object least significant
        let mut pos = fibres.len();
        loop {
            if pos == 0 {
                return finish(c, bislices_only, slices);
            }
            pos -= 1;
            if choice[pos] < fibres[pos].len() {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn finish(c: Arc<FinCat>, bislices_only: bool, slices: Vec<Vec<usize>>) -> Result<SliceSemigroup, SliceError> {
    let index: HashMap<Vec<usize>, usize> = slices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let n = slices.len();
    let lookup = |mut v: Vec<usize>| {
        v.sort_unstable();
        v.dedup();
        index[&v]
    };
    let cat = &*c;
    let mut mult = Vec::with_capacity(n * n);
    for a in &slices {
        for b in &slices {
            let prod: Vec<usize> = a
                .iter()
                .flat_map(|&x| b.iter().filter_map(move |&y| cat.comp(x, y)))
                .collect();
            mult.push(lookup(prod));
        }
    }
    let star = slices
        .iter()
        .map(|a| lookup(a.iter().map(|&x| c.unit(c.dom(x))).collect()))
        .collect();
    let plus = slices
        .iter()
        .map(|a| lookup(a.iter().map(|&x| c.unit(c.cod(x))).collect()))
        .collect();
    let names = slices.iter().map(|a| slice_name(&c, a)).collect();
    let algebra =
        BiUnaryAlgebra::from_flat(names, mult, star, Some(plus), Some(0)).expect("slice products are associative");
    Ok(SliceSemigroup {
        category: c,
        bislices_only,
        algebra: Arc::new(algebra),
        slices,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{classify, iso_algebras};
    use crate::zoo;

    #[test]
    fn products_in_k2() {
        let k2 = zoo::gen_pair_groupoid(2).unwrap();
        let a = |n: &str| k2.arrow_index(n).unwrap();
        let s = Slice::new(&k2, vec![a("a21")]).unwrap();
        let t = Slice::new(&k2, vec![a("a12")]).unwrap();
        assert_eq!(s.product(&t).unwrap().arrows(), &[a("a22")]);
        assert_eq!(s.support().arrows(), &[a("a11")]);
        assert_eq!(s.cosupport().arrows(), &[a("a22")]);
        let empty = Slice::new(&k2, vec![]).unwrap();
        assert!(empty.product(&t).unwrap().is_empty());
        assert!(empty.cosupport().is_empty());
        let units = Slice::new(&k2, vec![a("a11"), a("a22")]).unwrap();
        assert_eq!(units.support(), units);
        for x in 0..4 {
            let s = Slice::new(&k2, vec![x]).unwrap();
            assert_eq!(s.product(&s.support()).unwrap(), s);
        }
    }

    #[test]
    fn local_section_is_enforced() {
        let k2 = zoo::gen_pair_groupoid(2).unwrap();
        let a11 = k2.arrow_index("a11").unwrap();
        let a21 = k2.arrow_index("a21").unwrap();
        assert_eq!(
            Slice::new(&k2, vec![a11, a21]),
            Err(SliceError::NotLocalSection(a11, a21))
        );
    }

    #[test]
    fn parents_must_match() {
        let k2 = zoo::gen_pair_groupoid(2).unwrap();
        let other = k2.clone();
        let s = Slice::new(&k2, vec![0]).unwrap();
        let t = Slice::new(&other, vec![0]).unwrap();
        assert_eq!(s.product(&t), Err(SliceError::ParentMismatch));
    }

    #[test]
    fn slice_semigroups_of_small_categories() {
        let k2 = Arc::new(zoo::gen_pair_groupoid(2).unwrap());
        let ss = slice_semigroup(k2.clone(), false, 1000).unwrap();
        assert_eq!(ss.len(), 9);
        assert_eq!(ss.algebra.name(0), "{}");
        assert!(iso_algebras(&ss.algebra, &zoo::gen_pt(2).unwrap()).is_some());
        let bs = slice_semigroup(k2, true, 1000).unwrap();
        assert_eq!(bs.len(), 7);
        assert!(iso_algebras(&bs.algebra, &zoo::gen_i(2).unwrap()).is_some());
        assert!(classify(&bs.algebra).boolean_birestriction);

        let fa = slice_semigroup(Arc::new(zoo::gen_free_arrow()), false, 1000).unwrap();
        assert_eq!(fa.len(), 6);
        assert!(iso_algebras(&fa.algebra, &zoo::gen_triangular(2).unwrap()).is_some());
        let c = classify(&fa.algebra);
        assert!(c.boolean_range && c.etale_range);
    }

    #[test]
    fn size_guard() {
        let k3 = Arc::new(zoo::gen_pair_groupoid(3).unwrap());
        let err = slice_semigroup(k3, false, 10).unwrap_err();
        assert_eq!(
            err,
            SliceError::TooLarge {
                predicted: 64,
                bound: 10
            }
        );
    }
}
