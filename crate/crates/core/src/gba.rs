//! Finite generalized Boolean algebras and their prime characters.
//!
//! A finite generalized Boolean algebra is stored extensionally: every
//! element is the set of declared atoms below it, packed into a `u64`.
//! Join, meet and relative complement are then bitwise operations. The
//! family handed to [`FinGba::new`] is validated for closure but never
//! completed, so a failing closure law is reported instead of hidden.
//!
//! Prime characters of a finite algebra are evaluations at its lattice
//! atoms (minimal non-zero elements), and [`verify_stone_duality`] checks
//! the unit/counit of the classical duality on a given instance.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::report::Report;

/// Subset of the declared atom list, bit `i` standing for atom `i`.
pub type AtomSet = u64;

pub const MAX_ATOMS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeOp {
    Join,
    Meet,
    Diff,
}

impl fmt::Display for LatticeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeOp::Join => "∨",
            LatticeOp::Meet => "∧",
            LatticeOp::Diff => "\\",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbaError {
    #[error("empty subset family")]
    Empty,
    #[error("the empty subset (bottom) is missing")]
    MissingBottom,
    #[error("not closed under {op}: {a} {op} {b} is not in the family")]
    NotClosed {
        op: LatticeOp,
        a: AtomSet,
        b: AtomSet,
        a_label: String,
        b_label: String,
    },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("{0} atoms declared, at most {MAX_ATOMS} supported")]
    TooManyAtoms(usize),
    #[error("unknown element index {0}")]
    UnknownElement(usize),
}

/// A finite generalized Boolean algebra given by atom subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGba {
    atom_names: Vec<String>,
    elements: Vec<AtomSet>,
    index: HashMap<AtomSet, usize>,
    /// Element indices of the lattice atoms, in element order.
    lattice_atoms: Vec<usize>,
}

/// A prime character, identified by the lattice atom it detects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeCharacter {
    /// Element index of the atom `a` with `φ(e) = 1 ⇔ a ≤ e`.
    pub atom: usize,
}

impl FinGba {
    /// Builds an algebra from named subsets of `atoms`.
    pub fn new<A: AsRef<str>>(atoms: &[A], subsets: &[Vec<A>]) -> Result<Self, GbaError> {
        if atoms.len() > MAX_ATOMS {
            return Err(GbaError::TooManyAtoms(atoms.len()));
        }
        let mut pos = HashMap::new();
        for (i, a) in atoms.iter().enumerate() {
            if pos.insert(a.as_ref(), i).is_some() {
                return Err(GbaError::DuplicateAtom(a.as_ref().to_string()));
            }
        }
        let mut masks = Vec::with_capacity(subsets.len());
        for s in subsets {
            let mut m: AtomSet = 0;
            for a in s {
                let i = *pos
                    .get(a.as_ref())
                    .ok_or_else(|| GbaError::UnknownAtom(a.as_ref().to_string()))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        let names = atoms.iter().map(|a| a.as_ref().to_string()).collect();
        Self::from_masks(names, masks)
    }

    /// Builds an algebra from bitmask elements over `atom_names`.
    pub fn from_masks(atom_names: Vec<String>, elements: Vec<AtomSet>) -> Result<Self, GbaError> {
        if atom_names.len() > MAX_ATOMS {
            return Err(GbaError::TooManyAtoms(atom_names.len()));
        }
        if elements.is_empty() {
            return Err(GbaError::Empty);
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, &m) in elements.iter().enumerate() {
            if index.insert(m, i).is_some() {
                return Err(GbaError::DuplicateElement(label(&atom_names, m)));
            }
        }
        if !index.contains_key(&0) {
            return Err(GbaError::MissingBottom);
        }
        for &a in &elements {
            for &b in &elements {
                for (op, v) in [
                    (LatticeOp::Join, a | b),
                    (LatticeOp::Meet, a & b),
                    (LatticeOp::Diff, a & !b),
                ] {
                    if !index.contains_key(&v) {
                        return Err(GbaError::NotClosed {
                            op,
                            a,
                            b,
                            a_label: label(&atom_names, a),
                            b_label: label(&atom_names, b),
                        });
                    }
                }
            }
        }
        let lattice_atoms = (0..elements.len())
            .filter(|&i| {
                let e = elements[i];
                // minimal non-zero: no non-zero element strictly below
                e != 0 && !elements.iter().any(|&f| f != 0 && f != e && f & !e == 0)
            })
            .collect();
        Ok(Self {
            atom_names,
            elements,
            index,
            lattice_atoms,
        })
    }

    /// The two-element algebra 𝔹 on a single atom.
    pub fn two() -> Self {
        Self::from_masks(vec!["1".into()], vec![0, 1]).expect("𝔹 is closed")
    }

    /// Full power set on `n` named atoms, elements ordered by mask value.
    pub fn power_set(atom_names: Vec<String>) -> Result<Self, GbaError> {
        let n = atom_names.len();
        if n >= MAX_ATOMS {
            return Err(GbaError::TooManyAtoms(n));
        }
        Self::from_masks(atom_names, (0..(1u64 << n)).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn element(&self, i: usize) -> AtomSet {
        self.elements[i]
    }

    pub fn elements(&self) -> &[AtomSet] {
        &self.elements
    }

    pub fn index_of(&self, mask: AtomSet) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn bottom(&self) -> usize {
        self.index[&0]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.index[&(self.elements[a] | self.elements[b])]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&(self.elements[a] & self.elements[b])]
    }

    pub fn diff(&self, a: usize, b: usize) -> usize {
        self.index[&(self.elements[a] & !self.elements[b])]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a] & !self.elements[b] == 0
    }

    /// Element index of the largest element (the union of everything).
    pub fn top(&self) -> usize {
        let all = self.elements.iter().fold(0, |acc, &m| acc | m);
        self.index[&all]
    }

    pub fn label(&self, i: usize) -> String {
        label(&self.atom_names, self.elements[i])
    }

    /// One prime character per lattice atom.
    pub fn atoms(&self) -> Vec<PrimeCharacter> {
        self.lattice_atoms.iter().map(|&atom| PrimeCharacter { atom }).collect()
    }

    pub fn char_eval(&self, phi: PrimeCharacter, e: usize) -> Result<bool, GbaError> {
        if e >= self.elements.len() {
            return Err(GbaError::UnknownElement(e));
        }
        if phi.atom >= self.elements.len() {
            return Err(GbaError::UnknownElement(phi.atom));
        }
        Ok(self.leq(phi.atom, e))
    }

    /// `D_e` as a bitmask over `self.atoms()` positions.
    pub fn basic_open(&self, e: usize) -> u64 {
        self.lattice_atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| self.leq(a, e))
            .fold(0, |acc, (k, _)| acc | (1 << k))
    }
}

fn label(names: &[String], m: AtomSet) -> String {
    if m == 0 {
        return "∅".to_string();
    }
    let parts: Vec<&str> = (0..names.len())
        .filter(|i| m >> i & 1 == 1)
        .map(|i| names[i].as_str())
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks that `a ↦ D_a` is a lattice isomorphism onto the subsets of the
/// character space and that the counit sends each point back to itself.
pub fn verify_stone_duality(e: &FinGba) -> Report {
    let mut report = Report::new();
    let chars = e.atoms();
    let k = chars.len();
    let n = e.len();
    let d: Vec<u64> = (0..n).map(|a| e.basic_open(a)).collect();

    let distinct: HashSet<u64> = d.iter().copied().collect();
    let injective = distinct.len() == n;
    let onto = k < 64 && distinct.len() as u128 == 1u128 << k && distinct.iter().all(|&m| m >> k == 0);
    report.check("stone.eta_injective", injective, || {
        let (a, b) = first_collision(&d);
        format!("D_{} = D_{}", e.label(a), e.label(b))
    });
    report.check("stone.eta_onto_compact_opens", onto, || {
        format!("{} distinct D_a for {} characters", distinct.len(), k)
    });

    let mut join_w = None;
    let mut meet_w = None;
    let mut diff_w = None;
    'pairs: for a in 0..n {
        for b in 0..n {
            if join_w.is_none() && d[e.join(a, b)] != d[a] | d[b] {
                join_w = Some(format!("({},{})", e.label(a), e.label(b)));
            }
            if meet_w.is_none() && d[e.meet(a, b)] != d[a] & d[b] {
                meet_w = Some(format!("({},{})", e.label(a), e.label(b)));
            }
            if diff_w.is_none() && d[e.diff(a, b)] != d[a] & !d[b] {
                diff_w = Some(format!("({},{})", e.label(a), e.label(b)));
            }
            if join_w.is_some() && meet_w.is_some() && diff_w.is_some() {
                break 'pairs;
            }
        }
    }
    report.record("stone.eta_preserves_join", join_w);
    report.record("stone.eta_preserves_meet", meet_w);
    report.record("stone.eta_preserves_diff", diff_w);

    // Counit: the point x of Ê gives the character a ↦ [x ∈ D_a] of E,
    // which must be the character x itself.
    let mut counit_w = None;
    for (x, phi) in chars.iter().enumerate() {
        let psi: Vec<bool> = (0..n).map(|a| d[a] >> x & 1 == 1).collect();
        let back = chars.iter().position(|c| (0..n).all(|a| e.leq(c.atom, a) == psi[a]));
        if back != Some(x) {
            counit_w = Some(format!("point {}", e.label(phi.atom)));
            break;
        }
    }
    report.record("stone.counit_identity", counit_w);
    report
}

fn first_collision(d: &[u64]) -> (usize, usize) {
    let mut seen = HashMap::new();
    for (i, &m) in d.iter().enumerate() {
        if let Some(&j) = seen.get(&m) {
            return (j, i);
        }
        seen.insert(m, i);
    }
    (0, 0)
}

/// Filters of a finite algebra sorted into the three classes that coincide
/// for generalized Boolean algebras. Each filter is a sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterCensus {
    pub filters: usize,
    pub prime: Vec<Vec<usize>>,
    pub ultra: Vec<Vec<usize>>,
    pub principal_atoms: Vec<Vec<usize>>,
}

/// Enumerates every proper filter by walking antichains (each up-set is
/// generated by its antichain of minimal elements). Returns `None` for
/// algebras with more than 32 elements.
pub fn filter_census(e: &FinGba) -> Option<FilterCensus> {
    let n = e.len();
    if n > 32 {
        return None;
    }
    let bottom = e.bottom();
    let mut upsets: Vec<u64> = Vec::new();
    let mut chosen = Vec::new();
    antichains(e, 0, &mut chosen, &mut upsets);

    let filters: Vec<u64> = upsets
        .into_iter()
        .filter(|&u| u != 0 && u >> bottom & 1 == 0)
        .filter(|&u| (0..n).all(|a| u >> a & 1 == 0 || (0..n).all(|b| u >> b & 1 == 0 || u >> e.meet(a, b) & 1 == 1)))
        .collect();
    let prime: Vec<u64> = filters
        .iter()
        .copied()
        .filter(|&f| (0..n).all(|a| (0..n).all(|b| f >> e.join(a, b) & 1 == 0 || f >> a & 1 == 1 || f >> b & 1 == 1)))
        .collect();
    let ultra: Vec<u64> = filters
        .iter()
        .copied()
        .filter(|&f| !filters.iter().any(|&g| g != f && g & f == f))
        .collect();
    let principal: Vec<u64> = e
        .atoms()
        .iter()
        .map(|c| (0..n).filter(|&x| e.leq(c.atom, x)).fold(0, |acc, x| acc | 1 << x))
        .collect();
    let to_lists = |v: Vec<u64>| {
        let mut out: Vec<Vec<usize>> = v
            .into_iter()
            .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        out.sort();
        out
    };
    Some(FilterCensus {
        filters: filters.len(),
        prime: to_lists(prime),
        ultra: to_lists(ultra),
        principal_atoms: to_lists(principal),
    })
}

fn antichains(e: &FinGba, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<u64>) {
    let n = e.len();
    let up = chosen.iter().fold(0u64, |acc, &a| {
        (0..n).filter(|&x| e.leq(a, x)).fold(acc, |m, x| m | 1 << x)
    });
    out.push(up);
    for i in start..n {
        if chosen.iter().all(|&c| !e.leq(c, i) && !e.leq(i, c)) {
            chosen.push(i);
            antichains(e, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn full_power_set_is_valid() {
        let g = FinGba::new(&s(&["1", "2"]), &[vec![], s(&["1"]), s(&["2"]), s(&["1", "2"])]).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.atoms().len(), 2);
    }

    #[test]
    fn missing_difference_is_reported() {
        let err = FinGba::new(&s(&["1", "2"]), &[vec![], s(&["1"]), s(&["1", "2"])]).unwrap_err();
        match err {
            GbaError::NotClosed { op, a, b, .. } => {
                assert_eq!(op, LatticeOp::Diff);
                assert_eq!(a, 0b11);
                assert_eq!(b, 0b01);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_bottom_is_reported() {
        let err = FinGba::new(&s(&["1"]), &[s(&["1"])]).unwrap_err();
        assert_eq!(err, GbaError::MissingBottom);
    }

    #[test]
    fn unknown_atom_is_reported() {
        let err = FinGba::new(&s(&["1"]), &[vec![], s(&["7"])]).unwrap_err();
        assert_eq!(err, GbaError::UnknownAtom("7".into()));
    }

    #[test]
    fn characters_evaluate_at_atoms() {
        let g = FinGba::power_set(s(&["1", "2"])).unwrap();
        let chars = g.atoms();
        let phi1 = chars[0];
        let phi2 = chars[1];
        let top = g.index_of(0b11).unwrap();
        let one = g.index_of(0b01).unwrap();
        assert!(g.char_eval(phi1, top).unwrap());
        assert!(!g.char_eval(phi1, g.bottom()).unwrap());
        assert!(!g.char_eval(phi2, one).unwrap());
        assert_eq!(g.char_eval(phi1, 99), Err(GbaError::UnknownElement(99)));
    }

    #[test]
    fn two_element_algebra() {
        let b = FinGba::two();
        assert_eq!(b.atoms().len(), 1);
        let r = verify_stone_duality(&b);
        assert!(r.all_passed(), "{r}");
        // η maps 1 to the whole (one-point) space
        assert_eq!(b.basic_open(b.top()), 1);
    }

    #[test]
    fn coarse_subalgebra_has_coarse_atoms() {
        // {∅, {1,2}} over two declared atoms is 𝔹 in disguise.
        let g = FinGba::new(&s(&["1", "2"]), &[vec![], s(&["1", "2"])]).unwrap();
        assert_eq!(g.atoms().len(), 1);
        assert!(verify_stone_duality(&g).all_passed());
    }

    #[test]
    fn census_of_power_set_on_three_atoms() {
        let g = FinGba::power_set(s(&["a", "b", "c"])).unwrap();
        let c = filter_census(&g).unwrap();
        assert_eq!(c.prime.len(), 3);
        assert_eq!(c.prime, c.ultra);
        assert_eq!(c.prime, c.principal_atoms);
        // every non-zero element generates one proper principal filter
        assert_eq!(c.filters, 7);
    }
}
