//! Germ categories of preBoolean restriction semigroups, the unit `η` and
//! counit `ε`, and reports checking the adjunction and the equivalences on
//! concrete instances.
//!
//! A germ `[s, φ_a]` at an atom `a ≤ s*` is represented by the element
//! `s·a`, whose support is the atom `a`. Two elements have the same germ at
//! `a` exactly when they agree after multiplying by `a`.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::classify::{
    boolean_restriction_witness, coehresmann_witness, linking_witness, local_units, preboolean_restriction_witness,
};
use crate::algebra::iso::is_isomorphism;
use crate::algebra::{
    bd_subalgebra, check_morphism, classify, deterministic_sets, partial_isomorphisms, projection_lattice,
    AlgebraError, BiUnaryAlgebra, MorphismType, ProjectionLattice, SemigroupMorphism,
};
use crate::category::{
    slice_semigroup, CategoryError, Cofunctor, CofunctorError, FinCat, Slice, SliceError, SliceSemigroup,
};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("not a preBoolean restriction semigroup: {0}")]
    NotPreBoolean(String),
    #[error("no local units: {0}")]
    NoLocalUnits(String),
    #[error("not a Boolean birestriction semigroup: {0}")]
    NotBooleanBirestriction(String),
    #[error("not an étale range semigroup: {0}")]
    NotEtale(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("unknown element {0}")]
    UnknownElement(usize),
    #[error("germ construction failed: {0}")]
    Germ(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error(transparent)]
    Cofunctor(#[from] CofunctorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The category of germs of `base`. Objects are the atoms of `P(base)`,
/// arrows are the elements whose support is an atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermCategory {
    pub base: Arc<BiUnaryAlgebra>,
    pub category: Arc<FinCat>,
    pub lattice: ProjectionLattice,
    /// Element index of the atom behind each object.
    pub atoms: Vec<usize>,
    /// Element index of each arrow.
    pub arrows: Vec<usize>,
    germ_index: HashMap<usize, usize>,
}

/// Product of all projections `f` with `fx = x`.
fn least_left_unit(s: &BiUnaryAlgebra, lattice: &ProjectionLattice, x: usize) -> Option<usize> {
    lattice
        .elements
        .iter()
        .copied()
        .filter(|&f| s.mul(f, x) == x)
        .reduce(|a, b| s.mul(a, b))
}

fn is_range(s: &BiUnaryAlgebra) -> bool {
    s.has_plus() && coehresmann_witness(s).is_none() && linking_witness(s).is_none()
}

pub fn germ_category(s: Arc<BiUnaryAlgebra>) -> Result<GermCategory, DualityError> {
    if let Some(w) = preboolean_restriction_witness(&s) {
        return Err(DualityError::NotPreBoolean(w.describe(&s)));
    }
    if let Some(w) = local_units(&s) {
        return Err(DualityError::NoLocalUnits(w.describe(&s)));
    }
    let lattice = projection_lattice(&s).map_err(|w| DualityError::NotPreBoolean(w.describe(&s)))?;
    let atoms = lattice.atoms.clone();
    let object_of: HashMap<usize, usize> = atoms.iter().enumerate().map(|(o, &a)| (a, o)).collect();
    let arrows: Vec<usize> = (0..s.len()).filter(|&x| object_of.contains_key(&s.star(x))).collect();
    let germ_index: HashMap<usize, usize> = arrows.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let range = is_range(&s);

    let dom: Vec<usize> = arrows.iter().map(|&x| object_of[&s.star(x)]).collect();
    let mut cod = Vec::with_capacity(arrows.len());
    for &x in &arrows {
        let r = least_left_unit(&s, &lattice, x).ok_or_else(|| DualityError::NoLocalUnits(s.name(x).to_string()))?;
        let Some(&o) = object_of.get(&r) else {
            return Err(DualityError::Germ(format!(
                "r({}) = {} is not an atom",
                s.name(x),
                s.name(r)
            )));
        };
        if range && s.plus(x) != Some(r) {
            return Err(DualityError::Germ(format!(
                "r({}) differs from its cosupport",
                s.name(x)
            )));
        }
        cod.push(o);
    }
    let m = arrows.len();
    let mut comp = vec![None; m * m];
    for (i, &x) in arrows.iter().enumerate() {
        for (j, &y) in arrows.iter().enumerate() {
            if dom[i] != cod[j] {
                continue;
            }
            let xy = s.mul(s.mul(x, y), s.star(y));
            let k = germ_index
                .get(&xy)
                .ok_or_else(|| DualityError::Germ(format!("{}·{} is not a germ", s.name(x), s.name(y))))?;
            comp[i * m + j] = Some(*k);
        }
    }
    let objects = atoms.iter().map(|&a| s.name(a).to_string()).collect();
    let names = arrows.iter().map(|&x| s.name(x).to_string()).collect();
    let units = atoms.iter().map(|a| germ_index[a]).collect();
    let category = FinCat::from_parts(objects, names, dom, cod, units, comp)?;
    Ok(GermCategory {
        base: s,
        category: Arc::new(category),
        lattice,
        atoms,
        arrows,
        germ_index,
    })
}

impl GermCategory {
    /// Arrow index of the germ represented by element `x`.
    pub fn arrow_of(&self, x: usize) -> Option<usize> {
        self.germ_index.get(&x).copied()
    }

    /// Object index of the atom `a`.
    pub fn object_of(&self, a: usize) -> Option<usize> {
        self.atoms.iter().position(|&b| b == a)
    }

    /// `Θ(s) = {s·a : a atom, a ≤ s*}` as sorted arrow indices.
    pub fn theta_arrows(&self, s: usize) -> Result<Vec<usize>, DualityError> {
        let b = &self.base;
        if s >= b.len() {
            return Err(DualityError::UnknownElement(s));
        }
        let mut out: Vec<usize> = self
            .lattice
            .atoms_below(b.star(s))
            .into_iter()
            .map(|a| self.germ_index[&b.mul(s, a)])
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn theta(&self, s: usize) -> Result<Slice<'_>, DualityError> {
        Ok(Slice::new(&self.category, self.theta_arrows(s)?)?)
    }
}

/// `η_S: S → (C(S))^a` with the category and slice semigroup it lands in.
#[derive(Debug, Clone)]
pub struct Unit {
    pub germs: GermCategory,
    pub slices: SliceSemigroup,
    pub eta: SemigroupMorphism,
    pub report: Report,
}

pub fn unit_eta(s: Arc<BiUnaryAlgebra>, max_size: usize) -> Result<Unit, DualityError> {
    let germs = germ_category(s.clone())?;
    let slices = slice_semigroup(germs.category.clone(), false, max_size)?;
    unit_into(germs, slices)
}

fn unit_into(germs: GermCategory, slices: SliceSemigroup) -> Result<Unit, DualityError> {
    let s = germs.base.clone();
    let map = (0..s.len())
        .map(|x| {
            let t = germs.theta_arrows(x)?;
            slices
                .index_of(&t)
                .ok_or_else(|| DualityError::Germ(format!("Θ({}) is not a slice", s.name(x))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let eta = SemigroupMorphism::new(s.clone(), slices.algebra.clone(), map)?;
    let mut report = Report::new();
    report.record("eta.homomorphism", eta.homomorphism_witness());
    if is_range(&s) {
        report.check("eta.preserves_plus", eta.preserves_plus() == Some(true), || {
            "Θ(s⁺) ≠ Θ(s)⁺".into()
        });
    }
    report.check("eta.injective", eta.is_injective(), || non_injective(&eta));
    let boolean = boolean_restriction_witness(&s).is_none();
    report.check("eta.iso_iff_boolean", eta.is_surjective() == boolean, || {
        format!("surjective={} boolean_restriction={boolean}", eta.is_surjective())
    });
    Ok(Unit {
        germs,
        slices,
        eta,
        report,
    })
}

fn non_injective(f: &SemigroupMorphism) -> String {
    let mut seen = HashMap::new();
    for (x, &y) in f.map.iter().enumerate() {
        if let Some(&p) = seen.get(&y) {
            return format!("{} and {} share an image", f.source.name(p), f.source.name(x));
        }
        seen.insert(y, x);
    }
    String::new()
}

/// `ε_C: C(C^a) ⇝ C`, sending the object `x` to the atom `{1_x}` and
/// lifting the germ `{a}` at `x` to `a`.
#[derive(Debug, Clone)]
pub struct Counit {
    pub slices: SliceSemigroup,
    pub germs: GermCategory,
    pub epsilon: Cofunctor,
    pub report: Report,
}

pub fn counit_epsilon(c: Arc<FinCat>, max_size: usize) -> Result<Counit, DualityError> {
    let slices = slice_semigroup(c, false, max_size)?;
    let germs = germ_category(slices.algebra.clone())?;
    counit_from(slices, germs)
}

fn counit_from(slices: SliceSemigroup, germs: GermCategory) -> Result<Counit, DualityError> {
    let c = slices.category.clone();
    let anchor = (0..c.n_objects())
        .map(|x| {
            let atom = slices.index_of(&[c.unit(x)]).expect("unit singleton is a slice");
            germs
                .object_of(atom)
                .ok_or_else(|| DualityError::Germ(format!("{{{}}} is not an atom", c.arrow_name(c.unit(x)))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let epsilon = Cofunctor::from_fns(germs.category.clone(), c.clone(), anchor, |g, _| {
        let a = slices.arrows_of(germs.arrows[g])[0];
        (c.cod(a), a)
    })?;
    let mut report = Report::new();
    report.record("epsilon.isomorphism", epsilon.isomorphism_witness());
    report.check(
        "epsilon.bijective_on_arrows",
        epsilon.flags().bijective_on_arrows,
        || {
            epsilon
                .non_injective_witness()
                .unwrap_or_else(|| "not surjective".into())
        },
    );
    Ok(Counit {
        slices,
        germs,
        epsilon,
        report,
    })
}

/// The cofunctor `C(S) ⇝ C(T)` induced by a type 1 morphism `f: S → T`.
/// The anchor sends the atom `b` of `T` to the atom `a` of `S` with
/// `b ≤ f(a)`; the germ of `s` at `b` lifts to the germ `f(s)·b`.
pub fn morphism_to_cofunctor(
    f: &SemigroupMorphism,
    gs: &GermCategory,
    gt: &GermCategory,
) -> Result<Cofunctor, DualityError> {
    if *f.source != *gs.base || *f.target != *gt.base {
        return Err(DualityError::NotAMorphism(
            "germ categories do not match the morphism".into(),
        ));
    }
    let v = check_morphism(f, MorphismType::One);
    if !v.passed {
        return Err(DualityError::NotAMorphism(v.witness.unwrap_or_default()));
    }
    let (s, t) = (&*f.source, &*f.target);
    let mut anchor = Vec::with_capacity(gt.atoms.len());
    for &b in &gt.atoms {
        let above: Vec<usize> = gs
            .atoms
            .iter()
            .copied()
            .filter(|&a| gt.lattice.leq(b, f.apply(a)))
            .collect();
        let [a] = above[..] else {
            return Err(DualityError::NotAMorphism(format!(
                "{} lies under {} source atoms",
                t.name(b),
                above.len()
            )));
        };
        // φ_b ∘ f must be the character of a
        if let Some(&e) = gs
            .lattice
            .elements
            .iter()
            .find(|&&e| gt.lattice.leq(b, f.apply(e)) != gs.lattice.leq(a, e))
        {
            return Err(DualityError::NotAMorphism(format!(
                "φ_{} ∘ f differs from φ_{} at {}",
                t.name(b),
                s.name(a),
                s.name(e)
            )));
        }
        anchor.push(gs.object_of(a).expect("atom"));
    }
    let mut failure = None;
    let cof = Cofunctor::from_fns(gs.category.clone(), gt.category.clone(), anchor, |g, y| {
        let x = gs.arrows[g];
        let germ = t.mul(f.apply(x), gt.atoms[y]);
        match gt.arrow_of(germ) {
            Some(k) => (gt.category.cod(k), k),
            None => {
                failure.get_or_insert_with(|| format!("{} is not a germ of the target", t.name(germ)));
                (y, gt.category.unit(y))
            }
        }
    });
    if let Some(w) = failure {
        return Err(DualityError::NotAMorphism(w));
    }
    Ok(cof?)
}

/// Triangle identity on a semigroup: `ε_{C(S)} ∘ C(η_S)` is the identity
/// cofunctor of `C(S)`.
pub fn verify_adjunction_semigroup(s: Arc<BiUnaryAlgebra>, max_size: usize) -> Result<Report, DualityError> {
    let unit = unit_eta(s, max_size)?;
    let mut report = Report::new();
    report.extend(unit.report.clone());
    let top = germ_category(unit.slices.algebra.clone())?;
    let counit = counit_from(unit.slices.clone(), top)?;
    report.extend(counit.report.clone());
    let c_eta = morphism_to_cofunctor(&unit.eta, &unit.germs, &counit.germs)?;
    let composite = c_eta.then(&counit.epsilon)?;
    let id = Cofunctor::identity(unit.germs.category.clone());
    report.check("triangle.semigroup", composite == id, || {
        first_difference(&composite, &id)
    });
    Ok(report)
}

/// Triangle identity on a category: `S(ε_C) ∘ η_{S(C)}` is the identity of
/// `C^a`.
pub fn verify_adjunction_category(c: Arc<FinCat>, max_size: usize) -> Result<Report, DualityError> {
    let counit = counit_epsilon(c, max_size)?;
    let mut report = Report::new();
    report.extend(counit.report.clone());
    let upper = slice_semigroup(counit.germs.category.clone(), false, max_size)?;
    let unit = unit_into(counit.germs.clone(), upper)?;
    report.extend(unit.report.clone());
    let push = counit.epsilon.pushforward_between(&unit.slices, &counit.slices)?;
    let composite = unit.eta.compose(&push)?;
    let bad = (0..composite.map.len()).find(|&i| composite.apply(i) != i);
    report.record(
        "triangle.category",
        bad.map(|i| {
            let a = &counit.slices.algebra;
            format!("{} ↦ {}", a.name(i), a.name(composite.apply(i)))
        }),
    );
    Ok(report)
}

fn first_difference(f: &Cofunctor, g: &Cofunctor) -> String {
    if f.anchor() != g.anchor() {
        return format!("anchors {:?} vs {:?}", f.anchor(), g.anchor());
    }
    let k = f.target.n_objects();
    for (i, (a, b)) in f.rho_table().iter().zip(g.rho_table()).enumerate() {
        if a != b || f.mu_table()[i] != g.mu_table()[i] {
            return format!("at ({}, {})", f.source.arrow_name(i / k), f.target.object_name(i % k));
        }
    }
    "categories differ".into()
}

/// For a Boolean birestriction `S`, `η_S` corestricted to the bideterministic
/// part of `C(S)^a` is an isomorphism of (2,1,1)-algebras.
pub fn verify_birestriction_equivalence(s: Arc<BiUnaryAlgebra>, max_size: usize) -> Result<Report, DualityError> {
    let cl = classify(&s);
    if !cl.boolean_birestriction {
        let w = cl
            .witness("boolean_birestriction")
            .map(|w| w.describe(&s))
            .unwrap_or_default();
        return Err(DualityError::NotBooleanBirestriction(w));
    }
    let unit = unit_eta(s.clone(), max_size)?;
    let mut report = Report::new();
    report.record(
        "eta.homomorphism",
        unit.report.get("eta.homomorphism").and_then(|c| c.witness.clone()),
    );
    let (bd, emb) = bd_subalgebra(&unit.slices.algebra)?;
    let back: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let image: Option<Vec<usize>> = unit.eta.map.iter().map(|y| back.get(y).copied()).collect();
    let Some(map) = image else {
        let x = unit.eta.map.iter().position(|y| !back.contains_key(y)).unwrap();
        report.fail("bd.image_contained", format!("Θ({}) is not bideterministic", s.name(x)));
        return Ok(report);
    };
    report.pass("bd.image_contained");
    report.check("bd.isomorphism", is_isomorphism(&s, &bd, &map), || {
        format!("|S| = {}, |BD| = {}", s.len(), bd.len())
    });
    Ok(report)
}

/// Verdict of the groupoid criterion together with the consistency checks.
#[derive(Debug, Clone)]
pub struct Groupoidal {
    pub groupoid: bool,
    pub report: Report,
}

/// `C` is a groupoid iff bideterministic elements, partial isomorphisms and
/// bislices coincide in `C^a`.
pub fn verify_groupoidal_category(c: Arc<FinCat>, max_size: usize) -> Result<Groupoidal, DualityError> {
    let ss = slice_semigroup(c.clone(), false, max_size)?;
    let a = &ss.algebra;
    let bd = deterministic_sets(a)?.bideterministic;
    let pi: Vec<usize> = partial_isomorphisms(a).into_iter().map(|(x, _)| x).collect();
    let bis: Vec<usize> = (0..ss.len()).filter(|&i| ss.slice(i).is_bislice()).collect();
    let algebraic = bd == pi && pi == bis;
    let groupoid = c.is_groupoid().is_ok();
    let mut report = Report::new();
    report.check("groupoidal.criterion", algebraic == groupoid, || {
        format!(
            "groupoid={groupoid} |BD|={} |S|={} |bislices|={}",
            bd.len(),
            pi.len(),
            bis.len()
        )
    });
    Ok(Groupoidal { groupoid, report })
}

/// For an étale range `S`, the groupoidal flag agrees with `C(S)` being a
/// groupoid.
pub fn verify_groupoidal_semigroup(s: Arc<BiUnaryAlgebra>) -> Result<Groupoidal, DualityError> {
    let cl = classify(&s);
    if !cl.etale_range {
        let w = cl.witness("etale_range").map(|w| w.describe(&s)).unwrap_or_default();
        return Err(DualityError::NotEtale(w));
    }
    let g = germ_category(s)?;
    let groupoid = g.category.is_groupoid().is_ok();
    let mut report = Report::new();
    report.check("groupoidal.criterion", cl.groupoidal_etale == groupoid, || {
        format!("groupoidal_etale={} groupoid={groupoid}", cl.groupoidal_etale)
    });
    Ok(Groupoidal { groupoid, report })
}

/// `F_*(η_S(s)) = η_T(f(s))` for every `s`, where `F = C(f)`.
pub fn verify_morphism_naturality(f: &SemigroupMorphism, max_size: usize) -> Result<Report, DualityError> {
    let us = unit_eta(f.source.clone(), max_size)?;
    let ut = unit_eta(f.target.clone(), max_size)?;
    let cof = morphism_to_cofunctor(f, &us.germs, &ut.germs)?;
    let push = cof.pushforward_between(&us.slices, &ut.slices)?;
    let mut report = Report::new();
    let bad = (0..f.source.len()).find(|&x| push.apply(us.eta.apply(x)) != ut.eta.apply(f.apply(x)));
    report.record("naturality.eta", bad.map(|x| f.source.name(x).to_string()));
    report.check("naturality.action_injective", cof.flags().action_injective, || {
        "two objects share an image".into()
    });
    Ok(report)
}

/// `ε_D ∘ C(F_*) = F ∘ ε_C` for a cofunctor `F: C ⇝ D`.
pub fn verify_counit_naturality(f: &Cofunctor, max_size: usize) -> Result<Report, DualityError> {
    let ec = counit_epsilon(f.source.clone(), max_size)?;
    let ed = counit_epsilon(f.target.clone(), max_size)?;
    let push = f.pushforward_between(&ec.slices, &ed.slices)?;
    let lifted = morphism_to_cofunctor(&push, &ec.germs, &ed.germs)?;
    let left = lifted.then(&ed.epsilon)?;
    let right = ec.epsilon.then(f)?;
    let mut report = Report::new();
    report.check("naturality.epsilon", left == right, || first_difference(&left, &right));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::iso_categories;
    use crate::zoo;

    fn arc<T>(t: T) -> Arc<T> {
        Arc::new(t)
    }

    #[test]
    fn germs_of_pt2_form_the_pair_groupoid() {
        let g = germ_category(arc(zoo::gen_pt(2).unwrap())).unwrap();
        assert_eq!(g.category.n_objects(), 2);
        assert_eq!(g.category.n_arrows(), 4);
        assert!(iso_categories(&g.category, &zoo::gen_pair_groupoid(2).unwrap()).is_some());
        let i2 = germ_category(arc(zoo::gen_i(2).unwrap())).unwrap();
        assert!(iso_categories(&i2.category, &zoo::gen_pair_groupoid(2).unwrap()).is_some());
    }

    #[test]
    fn germs_of_triangular_form_the_free_arrow() {
        let g = germ_category(arc(zoo::gen_triangular(2).unwrap())).unwrap();
        assert!(iso_categories(&g.category, &zoo::gen_free_arrow()).is_some());
        assert!(g.category.is_groupoid().is_err());
    }

    #[test]
    fn theta_values() {
        let pt2 = arc(zoo::gen_pt(2).unwrap());
        let g = germ_category(pt2.clone()).unwrap();
        let c1 = pt2.index_of("[1,1]").unwrap();
        let t = g.theta_arrows(c1).unwrap();
        let names: Vec<&str> = t.iter().map(|&x| g.category.arrow_name(x)).collect();
        assert_eq!(names, ["[-,1]", "[1,-]"]);
        assert!(g.theta_arrows(0).unwrap().is_empty());
        for e in g.lattice.elements.clone() {
            assert!(g.theta_arrows(e).unwrap().iter().all(|&x| g.category.is_unit(x)));
        }
        assert_eq!(g.theta_arrows(99), Err(DualityError::UnknownElement(99)));
    }

    #[test]
    fn non_preboolean_input_is_rejected() {
        // the null semigroup on two elements has no local units
        let s = BiUnaryAlgebra::new(
            vec!["0".into(), "a".into()],
            vec![vec![0, 0], vec![0, 0]],
            vec![0, 0],
            None,
            Some(0),
        )
        .unwrap();
        assert!(germ_category(arc(s)).is_err());
    }

    #[test]
    fn unit_iso_exactly_for_boolean() {
        let u = unit_eta(arc(zoo::gen_pt(2).unwrap()), 1000).unwrap();
        assert!(u.report.all_passed(), "{}", u.report);
        assert!(u.eta.is_surjective());
        let u = unit_eta(arc(zoo::gen_i(2).unwrap()), 1000).unwrap();
        assert!(u.report.all_passed(), "{}", u.report);
        assert!(u.eta.is_injective() && !u.eta.is_surjective());
        let u = unit_eta(arc(zoo::gen_semilattice(2).unwrap()), 1000).unwrap();
        assert!(u.eta.is_surjective());
    }

    #[test]
    fn counit_is_an_isomorphism() {
        for c in [
            zoo::gen_pair_groupoid(2).unwrap(),
            zoo::gen_pair_groupoid(1).unwrap(),
            zoo::gen_free_arrow(),
        ] {
            let e = counit_epsilon(arc(c), 1000).unwrap();
            assert!(e.report.all_passed(), "{}", e.report);
        }
    }

    #[test]
    fn adjunction_triangles() {
        for s in [
            zoo::gen_pt(2).unwrap(),
            zoo::gen_i(2).unwrap(),
            zoo::gen_triangular(2).unwrap(),
        ] {
            let r = verify_adjunction_semigroup(arc(s), 1000).unwrap();
            assert!(r.all_passed(), "{r}");
        }
        let r = verify_adjunction_category(arc(zoo::gen_pair_groupoid(2).unwrap()), 1000).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn birestriction_equivalence() {
        for s in [
            zoo::gen_i(2).unwrap(),
            zoo::gen_semilattice(2).unwrap(),
            bd_subalgebra(&zoo::gen_triangular(2).unwrap()).unwrap().0,
        ] {
            let r = verify_birestriction_equivalence(arc(s), 1000).unwrap();
            assert!(r.all_passed(), "{r}");
        }
        assert!(matches!(
            verify_birestriction_equivalence(arc(zoo::gen_pt(2).unwrap()), 1000),
            Err(DualityError::NotBooleanBirestriction(_))
        ));
    }

    #[test]
    fn groupoidal_both_ways() {
        let k2 = verify_groupoidal_category(arc(zoo::gen_pair_groupoid(2).unwrap()), 1000).unwrap();
        assert!(k2.groupoid && k2.report.all_passed());
        let pt2 = verify_groupoidal_semigroup(arc(zoo::gen_pt(2).unwrap())).unwrap();
        assert!(pt2.groupoid && pt2.report.all_passed());
        let fa = verify_groupoidal_category(arc(zoo::gen_free_arrow()), 1000).unwrap();
        assert!(!fa.groupoid && fa.report.all_passed());
        let tri = verify_groupoidal_semigroup(arc(zoo::gen_triangular(2).unwrap())).unwrap();
        assert!(!tri.groupoid && tri.report.all_passed());
        let d = verify_groupoidal_category(arc(zoo::gen_discrete(2).unwrap()), 1000).unwrap();
        assert!(d.groupoid && d.report.all_passed());
        let sl = verify_groupoidal_semigroup(arc(zoo::gen_semilattice(2).unwrap())).unwrap();
        assert!(sl.groupoid && sl.report.all_passed());
    }

    fn inclusion_i2_pt2() -> SemigroupMorphism {
        let i2 = arc(zoo::gen_i(2).unwrap());
        let pt2 = arc(zoo::gen_pt(2).unwrap());
        let map = i2.names().iter().map(|n| pt2.index_of(n).unwrap()).collect();
        SemigroupMorphism::new(i2, pt2, map).unwrap()
    }

    #[test]
    fn inclusion_gives_action_injective_cofunctor() {
        let f = inclusion_i2_pt2();
        let gs = germ_category(f.source.clone()).unwrap();
        let gt = germ_category(f.target.clone()).unwrap();
        let c = morphism_to_cofunctor(&f, &gs, &gt).unwrap();
        assert!(c.flags().action_injective);
        let r = verify_morphism_naturality(&f, 1000).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn identity_morphism_gives_identity_cofunctor() {
        let pt2 = arc(zoo::gen_pt(2).unwrap());
        let g = germ_category(pt2.clone()).unwrap();
        let c = morphism_to_cofunctor(&SemigroupMorphism::identity(pt2), &g, &g).unwrap();
        assert_eq!(c, Cofunctor::identity(g.category.clone()));
    }

    #[test]
    fn zero_map_is_not_a_morphism() {
        let pt2 = arc(zoo::gen_pt(2).unwrap());
        let g = germ_category(pt2.clone()).unwrap();
        let f = SemigroupMorphism::new(pt2.clone(), pt2.clone(), vec![0; 9]).unwrap();
        assert!(matches!(
            morphism_to_cofunctor(&f, &g, &g),
            Err(DualityError::NotAMorphism(_))
        ));
    }

    #[test]
    fn counit_naturality_for_identity() {
        let k2 = arc(zoo::gen_pair_groupoid(2).unwrap());
        let r = verify_counit_naturality(&Cofunctor::identity(k2), 1000).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
