//! Distinguished element sets: projections, (bi)deterministic elements,
//! partial isomorphisms, and the cosupport forced by the support.

use std::collections::HashMap;

use thiserror::Error;

use super::classify::{coehresmann_witness, linking_witness, restriction_witness, Witness};
use super::{AlgebraError, BiUnaryAlgebra};
use crate::gba::FinGba;

/// `P(S)`, the image of `*`, checked against the image of `+` when present.
pub fn projections(s: &BiUnaryAlgebra) -> Result<Vec<usize>, AlgebraError> {
    let mut img = vec![false; s.len()];
    for x in 0..s.len() {
        img[s.star(x)] = true;
    }
    if let Some(plus) = s.plus_table() {
        let mut pimg = vec![false; s.len()];
        for &p in plus {
            pimg[p] = true;
        }
        if let Some(x) = (0..s.len()).find(|&x| img[x] != pimg[x]) {
            return Err(AlgebraError::PlusStarMismatch(x));
        }
    }
    Ok((0..s.len()).filter(|&x| img[x]).collect())
}

fn star_image(s: &BiUnaryAlgebra) -> Vec<usize> {
    let mut img = vec![false; s.len()];
    for x in 0..s.len() {
        img[s.star(x)] = true;
    }
    (0..s.len()).filter(|&x| img[x]).collect()
}

/// The projections of `S` viewed as a finite generalized Boolean algebra.
/// Each projection is encoded by the set of lattice atoms below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionLattice {
    pub elements: Vec<usize>,
    pub atoms: Vec<usize>,
    pub bottom: usize,
    masks: HashMap<usize, u64>,
    by_mask: HashMap<u64, usize>,
}

impl ProjectionLattice {
    pub fn mask(&self, e: usize) -> Option<u64> {
        self.masks.get(&e).copied()
    }

    pub fn from_mask(&self, m: u64) -> Option<usize> {
        self.by_mask.get(&m).copied()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.masks.contains_key(&e)
    }

    pub fn is_atom(&self, e: usize) -> bool {
        self.atoms.contains(&e)
    }

    /// Position of `a` in `atoms`.
    pub fn atom_position(&self, a: usize) -> Option<usize> {
        self.atoms.iter().position(|&x| x == a)
    }

    pub fn top(&self) -> usize {
        self.by_mask[&self.full_mask()]
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.atoms.len()) - 1
    }

    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.masks[&e] & !self.masks[&f] == 0
    }

    pub fn join(&self, e: usize, f: usize) -> usize {
        self.by_mask[&(self.masks[&e] | self.masks[&f])]
    }

    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.by_mask[&(self.masks[&e] & self.masks[&f])]
    }

    pub fn diff(&self, e: usize, f: usize) -> usize {
        self.by_mask[&(self.masks[&e] & !self.masks[&f])]
    }

    /// Atoms below `e`, in atom order.
    pub fn atoms_below(&self, e: usize) -> Vec<usize> {
        let m = self.masks[&e];
        (0..self.atoms.len())
            .filter(|&k| m >> k & 1 == 1)
            .map(|k| self.atoms[k])
            .collect()
    }

    pub fn to_gba(&self, s: &BiUnaryAlgebra) -> FinGba {
        let names = self.atoms.iter().map(|&a| s.name(a).to_string()).collect();
        let masks = self.elements.iter().map(|e| self.masks[e]).collect();
        FinGba::from_masks(names, masks).expect("projection lattice is closed")
    }
}

/// Checks that `(P(S), ≤)` is a finite generalized Boolean algebra and
/// returns it, or the first obstruction.
pub fn projection_lattice(s: &BiUnaryAlgebra) -> Result<ProjectionLattice, Witness> {
    let p = star_image(s);
    for &e in &p {
        for &f in &p {
            let ef = s.mul(e, f);
            if ef != s.mul(f, e) {
                return Err(Witness::new("BR2 projections commute", vec![e, f]));
            }
            if s.star(ef) != ef {
                return Err(Witness::new("BR2 projections closed", vec![e, f]));
            }
        }
    }
    // e ≤ f ⇔ e = fe on commuting projections
    let below = |e: usize, f: usize| s.mul(f, e) == e;
    let bottom = p
        .iter()
        .copied()
        .find(|&z| p.iter().all(|&e| below(z, e)))
        .ok_or_else(|| Witness::new("BR2 bottom", vec![]))?;
    let atoms: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&a| a != bottom && p.iter().all(|&e| e == bottom || e == a || !below(e, a)))
        .collect();
    if atoms.len() > 63 {
        return Err(Witness::new("BR2 too many atoms", vec![]));
    }
    let mut masks = HashMap::new();
    let mut by_mask = HashMap::new();
    for &e in &p {
        let m = atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| below(a, e))
            .fold(0u64, |acc, (k, _)| acc | 1 << k);
        if let Some(&f) = by_mask.get(&m) {
            return Err(Witness::new("BR2 faithful", vec![f, e]));
        }
        masks.insert(e, m);
        by_mask.insert(m, e);
    }
    let full = (1u64 << atoms.len()) - 1;
    if let Some(missing) = (0..=full).find(|m| !by_mask.contains_key(m)) {
        let parts = (0..atoms.len())
            .filter(|k| missing >> k & 1 == 1)
            .map(|k| atoms[k])
            .collect();
        return Err(Witness::new("BR2 complete", parts));
    }
    for &e in &p {
        for &f in &p {
            if masks[&s.mul(e, f)] != masks[&e] & masks[&f] {
                return Err(Witness::new("BR2 meets", vec![e, f]));
            }
        }
    }
    Ok(ProjectionLattice {
        elements: p,
        atoms,
        bottom,
        masks,
        by_mask,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterministicSets {
    pub deterministic: Vec<usize>,
    pub codeterministic: Vec<usize>,
    pub bideterministic: Vec<usize>,
}

/// `ea = a(ea)*` for every projection `e`.
pub fn is_deterministic(s: &BiUnaryAlgebra, a: usize) -> bool {
    star_image(s).into_iter().all(|e| {
        let ea = s.mul(e, a);
        ea == s.mul(a, s.star(ea))
    })
}

pub fn deterministic_sets(s: &BiUnaryAlgebra) -> Result<DeterministicSets, AlgebraError> {
    let plus = s.plus_table().ok_or(AlgebraError::NoPlusTable)?;
    let p = star_image(s);
    let det: Vec<usize> = (0..s.len())
        .filter(|&a| {
            p.iter().all(|&e| {
                let ea = s.mul(e, a);
                ea == s.mul(a, s.star(ea))
            })
        })
        .collect();
    let codet: Vec<usize> = (0..s.len())
        .filter(|&a| {
            p.iter().all(|&e| {
                let ae = s.mul(a, e);
                ae == s.mul(plus[ae], a)
            })
        })
        .collect();
    let bidet = det.iter().copied().filter(|a| codet.contains(a)).collect();
    Ok(DeterministicSets {
        deterministic: det,
        codeterministic: codet,
        bideterministic: bidet,
    })
}

/// The subalgebra on the bideterministic elements, with its embedding.
/// Fails when the set is not closed or the result is not birestriction.
pub fn bd_subalgebra(s: &BiUnaryAlgebra) -> Result<(BiUnaryAlgebra, Vec<usize>), AlgebraError> {
    let sets = deterministic_sets(s)?;
    let (sub, emb) = s.induced(&sets.bideterministic)?;
    if let Some(w) = restriction_witness(&sub)
        .or_else(|| coehresmann_witness(&sub))
        .or_else(|| linking_witness(&sub))
        .or_else(|| super::classify::corestriction_witness(&sub))
    {
        return Err(AlgebraError::AxiomFail(w.describe(&sub)));
    }
    let p_sub: Vec<usize> = star_image(&sub).into_iter().map(|i| emb[i]).collect();
    if p_sub != star_image(s) {
        return Err(AlgebraError::AxiomFail("P(BD) differs from P(S)".into()));
    }
    Ok((sub, emb))
}

/// Elements admitting a partner `t` with `st = t*` and `ts = s*`, paired
/// with that partner.
pub fn partial_isomorphisms(s: &BiUnaryAlgebra) -> Vec<(usize, usize)> {
    (0..s.len())
        .filter_map(|a| {
            (0..s.len())
                .find(|&t| s.mul(a, t) == s.star(t) && s.mul(t, a) == s.star(a))
                .map(|t| (a, t))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosupportError {
    #[error("element {0} has no left unit among the projections")]
    NoLeftUnit(usize),
    #[error("candidate cosupport violates {}", .0.axiom)]
    AxiomFail(Witness),
}

/// Computes `s⁺` as the least projection `f` with `fs = s` and checks the
/// coEhresmann and linking axioms for the resulting table.
pub fn infer_cosupport(s: &BiUnaryAlgebra) -> Result<Vec<usize>, CosupportError> {
    let p = star_image(s);
    let mut plus = Vec::with_capacity(s.len());
    for x in 0..s.len() {
        let m = p
            .iter()
            .copied()
            .filter(|&f| s.mul(f, x) == x)
            .reduce(|a, b| s.mul(a, b))
            .ok_or(CosupportError::NoLeftUnit(x))?;
        plus.push(m);
    }
    let cand = s.with_plus(Some(plus.clone())).expect("table in range");
    if let Some(w) = coehresmann_witness(&cand).or_else(|| linking_witness(&cand)) {
        return Err(CosupportError::AxiomFail(w));
    }
    Ok(plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn projections_of_pt2_and_i2() {
        let pt2 = zoo::gen_pt(2).unwrap();
        let p = projections(&pt2).unwrap();
        let names: Vec<_> = p.iter().map(|&e| pt2.name(e)).collect();
        assert_eq!(names, ["[-,-]", "[-,2]", "[1,-]", "[1,2]"]);
        assert_eq!(projections(&zoo::gen_i(2).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn plus_star_mismatch_is_reported() {
        let pt1 = zoo::gen_pt(1).unwrap();
        // swap the cosupport of the two elements
        let bad = pt1.with_plus(Some(vec![1, 1])).unwrap();
        assert_eq!(projections(&bad), Err(AlgebraError::PlusStarMismatch(0)));
    }

    #[test]
    fn projection_semilattice_is_all_projections() {
        let s = zoo::gen_semilattice(3).unwrap();
        assert_eq!(projections(&s).unwrap().len(), 8);
        let d = deterministic_sets(&s).unwrap();
        assert_eq!(d.bideterministic.len(), 8);
    }

    #[test]
    fn pt2_bideterministic_elements_are_the_injections() {
        let pt2 = zoo::gen_pt(2).unwrap();
        let d = deterministic_sets(&pt2).unwrap();
        assert_eq!(d.deterministic.len(), 9);
        assert_eq!(d.bideterministic.len(), 7);
        let isos: Vec<usize> = partial_isomorphisms(&pt2).into_iter().map(|(a, _)| a).collect();
        assert_eq!(isos, d.bideterministic);
    }

    #[test]
    fn triangular_sets() {
        let t2 = zoo::gen_triangular(2).unwrap();
        let d = deterministic_sets(&t2).unwrap();
        assert_eq!(d.bideterministic.len(), 5);
        assert_eq!(partial_isomorphisms(&t2).len(), 4);
        let (bd, _) = bd_subalgebra(&t2).unwrap();
        assert_eq!(projections(&bd).unwrap().len(), 4);
    }

    #[test]
    fn projections_are_their_own_partners() {
        let pt2 = zoo::gen_pt(2).unwrap();
        for (a, t) in partial_isomorphisms(&pt2) {
            if pt2.is_projection(a) {
                assert_eq!(a, t);
            }
        }
    }

    #[test]
    fn cosupport_is_recovered() {
        for s in [
            zoo::gen_pt(2).unwrap(),
            zoo::gen_i(2).unwrap(),
            zoo::gen_triangular(3).unwrap(),
        ] {
            let stripped = s.with_plus(None).unwrap();
            assert_eq!(infer_cosupport(&stripped).unwrap(), s.plus_table().unwrap());
        }
    }

    #[test]
    fn missing_left_unit_is_reported() {
        // null semigroup {0, a}: every product is 0, a* = 0 so 0·a = 0 ≠ a
        let s = BiUnaryAlgebra::new(
            vec!["0".into(), "a".into()],
            vec![vec![0, 0], vec![0, 0]],
            vec![0, 0],
            None,
            None,
        )
        .unwrap();
        assert_eq!(infer_cosupport(&s), Err(CosupportError::NoLeftUnit(1)));
    }

    #[test]
    fn lattice_of_pt3_projections() {
        let pt3 = zoo::gen_pt(3).unwrap();
        let l = projection_lattice(&pt3).unwrap();
        assert_eq!(l.elements.len(), 8);
        assert_eq!(l.atoms.len(), 3);
        assert_eq!(l.to_gba(&pt3).len(), 8);
    }
}
