//! Finite small categories with dense composition tables.

pub mod cofunctor;
pub mod covering;
pub mod enumerate;
pub mod iso;
pub mod slice;

use std::collections::HashSet;

use thiserror::Error;

pub use cofunctor::{Cofunctor, CofunctorError, CofunctorFlags};
pub use covering::CoveringFunctor;
pub use enumerate::enumerate_categories;
pub use iso::{iso_categories, CategoryIso};
pub use slice::{max_size_from_env, slice_semigroup, Slice, SliceError, SliceSemigroup, DEFAULT_MAX_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("bad table shape: {0}")]
    BadShape(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("comp[{0}][{1}] defined exactly when dom({0}) = cod({1}) is violated")]
    CompDomainMismatch(usize, usize),
    #[error("axiom {axiom} fails at {tuple:?}")]
    AxiomFail { axiom: &'static str, tuple: Vec<usize> },
}

/// A finite category. `comp(x, y)` is `x∘y`, defined iff `dom(x) = cod(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    units: Vec<usize>,
    comp: Vec<Option<usize>>,
}

/// Arrow declaration: name, domain, codomain.
pub type ArrowSpec = (String, usize, usize);

impl FinCat {
    /// Validates shapes and the category axioms, reporting the first
    /// counterexample found.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<ArrowSpec>,
        units: Vec<usize>,
        comp: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, CategoryError> {
        let m = arrows.len();
        if comp.len() != m || comp.iter().any(|row| row.len() != m) {
            return Err(CategoryError::BadShape(format!("comp must be {m}×{m}")));
        }
        let flat = comp.into_iter().flatten().collect();
        let (names, (dom, cod)): (Vec<String>, (Vec<usize>, Vec<usize>)) =
            arrows.into_iter().map(|(n, d, c)| (n, (d, c))).unzip();
        Self::from_parts(objects, names, dom, cod, units, flat)
    }

    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<String>,
        dom: Vec<usize>,
        cod: Vec<usize>,
        units: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self, CategoryError> {
        let (k, m) = (objects.len(), arrows.len());
        if dom.len() != m || cod.len() != m || comp.len() != m * m {
            return Err(CategoryError::BadShape("arrow tables".into()));
        }
        if units.len() != k {
            return Err(CategoryError::BadShape(format!(
                "{} units for {k} objects",
                units.len()
            )));
        }
        for names in [&objects, &arrows] {
            let mut seen = HashSet::new();
            if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
                return Err(CategoryError::DuplicateName(dup.clone()));
            }
        }
        if dom.iter().chain(&cod).any(|&o| o >= k) {
            return Err(CategoryError::BadShape("object index out of range".into()));
        }
        if units.iter().any(|&u| u >= m) || comp.iter().flatten().any(|&x| x >= m) {
            return Err(CategoryError::BadShape("arrow index out of range".into()));
        }
        let cat = Self {
            objects,
            arrows,
            dom,
            cod,
            units,
            comp,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let m = self.arrows.len();
        let fail = |axiom, tuple| Err(CategoryError::AxiomFail { axiom, tuple });
        for x in 0..m {
            for y in 0..m {
                if self.comp[x * m + y].is_some() != (self.dom[x] == self.cod[y]) {
                    return Err(CategoryError::CompDomainMismatch(x, y));
                }
            }
        }
        for (o, &u) in self.units.iter().enumerate() {
            if self.dom[u] != o || self.cod[u] != o {
                return fail("DRU", vec![o]);
            }
        }
        for x in 0..m {
            for y in 0..m {
                let Some(xy) = self.comp(x, y) else { continue };
                for z in 0..m {
                    let Some(yz) = self.comp(y, z) else { continue };
                    if self.comp(xy, z) != self.comp(x, yz) {
                        return fail("A", vec![x, y, z]);
                    }
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                if let Some(xy) = self.comp(x, y) {
                    if self.dom[xy] != self.dom[y] {
                        return fail("DP", vec![x, y]);
                    }
                    if self.cod[xy] != self.cod[x] {
                        return fail("RP", vec![x, y]);
                    }
                }
            }
        }
        for x in 0..m {
            if self.comp(self.units[self.cod[x]], x) != Some(x) || self.comp(x, self.units[self.dom[x]]) != Some(x) {
                return fail("UL", vec![x]);
            }
        }
        Ok(())
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow_names(&self) -> &[String] {
        &self.arrows
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn arrow_name(&self, x: usize) -> &str {
        &self.arrows[x]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a == name)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|a| a == name)
    }

    #[inline]
    pub fn dom(&self, x: usize) -> usize {
        self.dom[x]
    }

    #[inline]
    pub fn cod(&self, x: usize) -> usize {
        self.cod[x]
    }

    #[inline]
    pub fn unit(&self, o: usize) -> usize {
        self.units[o]
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units[self.dom[x]] == x
    }

    /// `x∘y`, defined iff `dom(x) = cod(y)`.
    #[inline]
    pub fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.comp[x * self.arrows.len() + y]
    }

    pub fn comp_rows(&self) -> Vec<Vec<Option<usize>>> {
        self.comp
            .chunks(self.arrows.len().max(1))
            .map(|c| c.to_vec())
            .take(self.arrows.len())
            .collect()
    }

    /// Arrows with domain `o`, in index order.
    pub fn star_of(&self, o: usize) -> Vec<usize> {
        (0..self.n_arrows()).filter(|&x| self.dom[x] == o).collect()
    }

    pub fn hom(&self, from: usize, to: usize) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&x| self.dom[x] == from && self.cod[x] == to)
            .collect()
    }

    /// Inverse of every arrow, or the first arrow without one.
    pub fn is_groupoid(&self) -> Result<Vec<usize>, usize> {
        (0..self.n_arrows())
            .map(|a| {
                (0..self.n_arrows())
                    .find(|&b| {
                        self.comp(a, b) == Some(self.units[self.cod[a]])
                            && self.comp(b, a) == Some(self.units[self.dom[a]])
                    })
                    .ok_or(a)
            })
            .collect()
    }
}
