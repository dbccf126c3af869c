//! Table morphisms between finite algebras and the four morphism types.

use std::fmt;
use std::sync::Arc;

use super::elements::projection_lattice;
use super::order::bits_to_vec;
use super::{AlgebraError, BiUnaryAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMorphism {
    pub source: Arc<BiUnaryAlgebra>,
    pub target: Arc<BiUnaryAlgebra>,
    pub map: Vec<usize>,
}

impl SemigroupMorphism {
    /// Checks only totality and index ranges; algebraic properties are
    /// the business of [`check_morphism`].
    pub fn new(
        source: Arc<BiUnaryAlgebra>,
        target: Arc<BiUnaryAlgebra>,
        map: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        if map.len() != source.len() {
            return Err(AlgebraError::BadTableShape(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Err(AlgebraError::UnknownElement(bad));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(s: Arc<BiUnaryAlgebra>) -> Self {
        let map = (0..s.len()).collect();
        Self {
            source: s.clone(),
            target: s,
            map,
        }
    }

    pub fn apply(&self, s: usize) -> usize {
        self.map[s]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &t in &self.map {
            seen[t] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// First pair with `f(st) ≠ f(s)f(t)`, or element with `f(s*) ≠ f(s)*`.
    pub fn homomorphism_witness(&self) -> Option<String> {
        let (s, t, f) = (&self.source, &self.target, &self.map);
        for a in 0..s.len() {
            for b in 0..s.len() {
                if f[s.mul(a, b)] != t.mul(f[a], f[b]) {
                    return Some(format!("f({0}·{1}) ≠ f({0})·f({1})", s.name(a), s.name(b)));
                }
            }
        }
        (0..s.len())
            .find(|&a| f[s.star(a)] != t.star(f[a]))
            .map(|a| format!("f({0}*) ≠ f({0})*", s.name(a)))
    }

    /// `Some(true)` if `f(s⁺) = f(s)⁺` everywhere; `None` without tables.
    pub fn preserves_plus(&self) -> Option<bool> {
        let (sp, tp) = (self.source.plus_table()?, self.target.plus_table()?);
        Some((0..self.source.len()).all(|a| self.map[sp[a]] == tp[self.map[a]]))
    }

    pub fn compose(&self, after: &SemigroupMorphism) -> Result<SemigroupMorphism, AlgebraError> {
        if *self.target != *after.source {
            return Err(AlgebraError::BadTableShape("composition mismatch".into()));
        }
        let map = self.map.iter().map(|&x| after.map[x]).collect();
        Ok(SemigroupMorphism {
            source: self.source.clone(),
            target: after.target.clone(),
            map,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismType {
    /// (2,1)-morphism, proper on projections.
    One,
    /// Type 1 and weakly meet-preserving.
    Two,
    /// Type 1 and proper.
    Three,
    Four,
}

impl MorphismType {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::One),
            2 => Some(Self::Two),
            3 => Some(Self::Three),
            4 => Some(Self::Four),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
            Self::Four => 4,
        }
    }
}

impl fmt::Display for MorphismType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismVerdict {
    pub ty: MorphismType,
    pub passed: bool,
    pub witness: Option<String>,
    pub preserves_plus: Option<bool>,
}

fn type1_witness(f: &SemigroupMorphism) -> Option<String> {
    if let Some(w) = f.homomorphism_witness() {
        return Some(w);
    }
    let (s, t) = (&f.source, &f.target);
    let ps = match projection_lattice(s) {
        Ok(l) => l,
        Err(w) => return Some(format!("P(source) is not Boolean: {}", w.describe(s))),
    };
    let pt = match projection_lattice(t) {
        Ok(l) => l,
        Err(w) => return Some(format!("P(target) is not Boolean: {}", w.describe(t))),
    };
    for &e in &ps.elements {
        for &g in &ps.elements {
            if f.map[ps.join(e, g)] != pt.join(f.map[e], f.map[g]) {
                return Some(format!("f({0}∨{1}) ≠ f({0})∨f({1})", s.name(e), s.name(g)));
            }
            if f.map[ps.diff(e, g)] != pt.diff(f.map[e], f.map[g]) {
                return Some(format!("f({0}\\{1}) ≠ f({0})\\f({1})", s.name(e), s.name(g)));
            }
        }
    }
    // properness: every target projection lies below the image of some
    // source projection
    pt.elements
        .iter()
        .find(|&&u| !ps.elements.iter().any(|&e| pt.leq(u, f.map[e])))
        .map(|&u| format!("no projection e with {} ≤ f(e)", t.name(u)))
}

fn or_bits(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a |= b;
    }
}

fn weakly_meet_preserving_witness(f: &SemigroupMorphism) -> Option<String> {
    let (s, t) = (&f.source, &f.target);
    let so = s.order();
    let to = t.order();
    let words = to.words();
    for a in 0..s.len() {
        for b in 0..s.len() {
            let lower = so.lower_bounds(&[a, b]);
            let mut reach = vec![0u64; words];
            for &v in &lower {
                or_bits(&mut reach, to.down_bits(f.map[v]));
            }
            let fa = to.down_bits(f.map[a]);
            let fb = to.down_bits(f.map[b]);
            for w in 0..words {
                let missing = fa[w] & fb[w] & !reach[w];
                if missing != 0 {
                    let u = w * 64 + missing.trailing_zeros() as usize;
                    return Some(format!(
                        "u={} ≤ f({}), f({}) has no v ≤ both with u ≤ f(v)",
                        t.name(u),
                        s.name(a),
                        s.name(b)
                    ));
                }
            }
        }
    }
    None
}

fn proper_witness(f: &SemigroupMorphism) -> Option<String> {
    let t = &f.target;
    let to = t.order();
    let mut covered = vec![0u64; to.words()];
    for &x in &f.map {
        or_bits(&mut covered, to.down_bits(x));
    }
    (0..t.len())
        .find(|&u| {
            let pieces: Vec<usize> = bits_to_vec(to.down_bits(u), t.len())
                .into_iter()
                .filter(|&v| covered[v / 64] >> (v % 64) & 1 == 1)
                .collect();
            to.join_of(&pieces) != Some(u)
        })
        .map(|u| format!("{} is not the join of covered pieces", t.name(u)))
}

pub fn check_morphism(f: &SemigroupMorphism, ty: MorphismType) -> MorphismVerdict {
    let witness = type1_witness(f).or_else(|| match ty {
        MorphismType::One => None,
        MorphismType::Two => weakly_meet_preserving_witness(f),
        MorphismType::Three => proper_witness(f),
        MorphismType::Four => weakly_meet_preserving_witness(f).or_else(|| proper_witness(f)),
    });
    MorphismVerdict {
        ty,
        passed: witness.is_none(),
        witness,
        preserves_plus: f.preserves_plus(),
    }
}
