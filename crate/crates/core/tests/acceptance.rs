//! Acceptance criteria, one line of output per criterion.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{categories, core_semigroups, semigroups, MAX};
use sdl_core::algebra::{bd_subalgebra, classify, compatible, infer_cosupport, iso_algebras, Mode};
use sdl_core::algebra::{check_morphism, projection_lattice, MorphismType};
use sdl_core::category::{iso_categories, slice_semigroup, CoveringFunctor};
use sdl_core::duality::{
    counit_epsilon, germ_category, morphism_to_cofunctor, unit_eta, verify_adjunction_category,
    verify_adjunction_semigroup, verify_groupoidal_category, verify_groupoidal_semigroup, verify_morphism_naturality,
};
use sdl_core::gba::verify_stone_duality;
use sdl_core::{laws, zoo, BiUnaryAlgebra, Cofunctor, SemigroupMorphism};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn names(s: &BiUnaryAlgebra, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x).to_string()).collect()
}

fn c1_pt2_classification() -> Outcome {
    let t = Instant::now();
    let pt2 = zoo::gen_pt(2).unwrap();
    let c = classify(&pt2);
    ensure(c.ehresmann && c.restriction && c.range, || format!("{:?}", c.flags()))?;
    ensure(!c.corestriction, || "corestriction holds".into())?;
    let w = c.witness("corestriction").ok_or("no corestriction witness")?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("corestriction fails at {}", w.describe(&pt2)))
}

fn c2_i2_classification() -> Outcome {
    let t = Instant::now();
    let i2 = zoo::gen_i(2).unwrap();
    let c = classify(&i2);
    ensure(c.boolean_birestriction, || "not boolean birestriction".into())?;
    ensure(!c.boolean_restriction, || "boolean restriction holds".into())?;
    let w = c.witness("boolean_restriction").ok_or("no witness")?;
    let pair: BTreeSet<String> = names(&i2, &w.elements).into_iter().collect();
    let want: BTreeSet<String> = ["[1,-]", "[-,1]"].map(String::from).into();
    ensure(w.axiom == "BR1" && pair == want, || w.describe(&i2))?;
    let (s, u) = (w.elements[0], w.elements[1]);
    ensure(
        compatible(&i2, s, u, Mode::Right).unwrap() && i2.join(s, u).is_none(),
        || "witness is not a compatible join-less pair".into(),
    )?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("witness {}", w.describe(&i2)))
}

fn c3_bd_of_pt2() -> Outcome {
    let pt2 = zoo::gen_pt(2).unwrap();
    let i2 = zoo::gen_i(2).unwrap();
    let (bd, _) = bd_subalgebra(&pt2).map_err(|e| e.to_string())?;
    let iso = iso_algebras(&bd, &i2).ok_or("BD(PT_2) not isomorphic to I_2")?;
    ensure(bd.len() == 7, || format!("|BD| = {}", bd.len()))?;
    Ok(format!("7 elements, map {:?}", iso))
}

fn c4_pt2_and_pair_groupoid() -> Outcome {
    let t = Instant::now();
    let pt2 = Arc::new(zoo::gen_pt(2).unwrap());
    let k2 = Arc::new(zoo::gen_pair_groupoid(2).unwrap());
    let g = germ_category(pt2.clone()).map_err(|e| e.to_string())?;
    ensure(g.category.n_objects() == 2 && g.category.n_arrows() == 4, || {
        "wrong germ size".into()
    })?;
    let ci = iso_categories(&g.category, &k2).ok_or("germs of PT_2 not ≅ K_2")?;
    let ss = slice_semigroup(k2.clone(), false, MAX).map_err(|e| e.to_string())?;
    let si = iso_algebras(&ss.algebra, &pt2).ok_or("K_2^a not ≅ PT_2")?;
    let bs = slice_semigroup(k2.clone(), true, MAX).map_err(|e| e.to_string())?;
    let bi = iso_algebras(&bs.algebra, &zoo::gen_i(2).unwrap()).ok_or("bislices not ≅ I_2")?;
    ensure(ss.len() == 9 && bs.len() == 7, || {
        format!("sizes {} {}", ss.len(), bs.len())
    })?;
    within(t, Duration::from_secs(1))?;
    let arrows: Vec<String> = (0..4)
        .map(|x| format!("{}→{}", g.category.arrow_name(x), k2.arrow_name(ci.arrows[x])))
        .collect();
    let slices: Vec<String> = (0..9)
        .map(|x| format!("{}→{}", ss.algebra.name(x), pt2.name(si[x])))
        .collect();
    let bislices: Vec<String> = (0..7).map(|x| format!("{}→{}", bs.algebra.name(x), bi[x])).collect();
    Ok(format!(
        "germs {}; slices {}; bislices {}",
        arrows.join(" "),
        slices.join(" "),
        bislices.join(" ")
    ))
}

fn c5_triangular_and_free_arrow() -> Outcome {
    let t = Instant::now();
    let tri = Arc::new(zoo::gen_triangular(2).unwrap());
    let fa = Arc::new(zoo::gen_free_arrow());
    let g = germ_category(tri.clone()).map_err(|e| e.to_string())?;
    iso_categories(&g.category, &fa).ok_or("germs of triangular_2 not ≅ free arrow")?;
    ensure(g.category.n_arrows() == 3 && g.category.is_groupoid().is_err(), || {
        "germ category shape".into()
    })?;
    let ss = slice_semigroup(fa.clone(), false, MAX).map_err(|e| e.to_string())?;
    ensure(ss.len() == 6, || format!("{} slices", ss.len()))?;
    iso_algebras(&ss.algebra, &tri).ok_or("free arrow slices not ≅ triangular_2")?;
    let vc = verify_groupoidal_category(fa, MAX).map_err(|e| e.to_string())?;
    let vs = verify_groupoidal_semigroup(tri).map_err(|e| e.to_string())?;
    ensure(!vc.groupoid && !vs.groupoid, || "reported groupoidal".into())?;
    ensure(vc.report.all_passed() && vs.report.all_passed(), || {
        format!("{}{}", vc.report, vs.report)
    })?;
    within(t, Duration::from_secs(1))?;
    Ok("non-groupoidal on both sides".into())
}

fn c6_adjunction() -> Outcome {
    let t = Instant::now();
    let mut n = 0;
    for (name, s) in core_semigroups() {
        let r = verify_adjunction_semigroup(s, MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.all_passed(), || format!("{name}:\n{r}"))?;
        n += 1;
    }
    for (name, c) in categories() {
        let r = verify_adjunction_category(c, MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.all_passed(), || format!("{name}:\n{r}"))?;
        n += 1;
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("{n} instances, {:?}", t.elapsed()))
}

fn c7_eta_iso_iff_boolean() -> Outcome {
    let cats = categories();
    let mut checked = 0;
    let mut iso = 0;
    for (name, s) in semigroups(&cats) {
        let Ok(u) = unit_eta(s.clone(), MAX) else { continue };
        let boolean = classify(&s).boolean_restriction;
        ensure(u.eta.is_surjective() == boolean, || {
            format!("{name}: iso={} boolean={boolean}", !boolean)
        })?;
        ensure(u.eta.is_injective(), || format!("{name}: η not injective"))?;
        checked += 1;
        iso += usize::from(boolean);
    }
    let iso_of = |s: BiUnaryAlgebra| {
        unit_eta(Arc::new(s), MAX)
            .map(|u| u.eta.is_surjective())
            .unwrap_or(false)
    };
    ensure(iso_of(zoo::gen_pt(2).unwrap()), || "PT_2 not iso".into())?;
    ensure(iso_of(zoo::gen_triangular(2).unwrap()), || {
        "triangular_2 not iso".into()
    })?;
    ensure(!iso_of(zoo::gen_i(2).unwrap()), || "I_2 iso".into())?;
    Ok(format!("{checked} semigroups, {iso} isomorphisms"))
}

fn c8_cosupport_inference() -> Outcome {
    let mut zoo_n = 0;
    for (name, s) in zoo::semigroup_zoo() {
        let stored = s.plus_table().ok_or(format!("{name} has no plus"))?.to_vec();
        let bare = s.with_plus(None).unwrap();
        let inferred = infer_cosupport(&bare).map_err(|e| format!("{name}: {e}"))?;
        ensure(inferred == stored, || format!("{name}: inferred table differs"))?;
        zoo_n += 1;
    }
    let cats = categories();
    let mut corpus_n = 0;
    for (name, s) in semigroups(&cats) {
        let c = classify(&s);
        if c.boolean_restriction && c.has_local_units {
            let bare = s.with_plus(None).unwrap();
            let inferred = infer_cosupport(&bare).map_err(|e| format!("{name}: {e}"))?;
            if let Some(p) = s.plus_table() {
                ensure(inferred == p, || format!("{name}: inferred table differs"))?;
            }
            corpus_n += 1;
        }
    }
    Ok(format!(
        "{zoo_n} zoo tables reproduced, {corpus_n} Boolean corpus members"
    ))
}

fn c9_inclusion_morphism() -> Outcome {
    let i2 = Arc::new(zoo::gen_i(2).unwrap());
    let pt2 = Arc::new(zoo::gen_pt(2).unwrap());
    let map = i2.names().iter().map(|n| pt2.index_of(n).unwrap()).collect();
    let f = SemigroupMorphism::new(i2.clone(), pt2.clone(), map).map_err(|e| e.to_string())?;
    for ty in [
        MorphismType::One,
        MorphismType::Two,
        MorphismType::Three,
        MorphismType::Four,
    ] {
        let v = check_morphism(&f, ty);
        ensure(v.passed, || format!("{ty}: {:?}", v.witness))?;
    }
    let gs = germ_category(i2).map_err(|e| e.to_string())?;
    let gt = germ_category(pt2).map_err(|e| e.to_string())?;
    let cof = morphism_to_cofunctor(&f, &gs, &gt).map_err(|e| e.to_string())?;
    ensure(cof.flags().action_injective, || "action not injective".into())?;
    let r = verify_morphism_naturality(&f, MAX).map_err(|e| e.to_string())?;
    ensure(r.all_passed(), || r.to_string())?;
    Ok("types 1-4, injective action, F_*∘η = η∘f on 7 elements".into())
}

fn round_trip(name: &str, f: &Cofunctor) -> Result<(), String> {
    let g = CoveringFunctor::from_cofunctor(f).map_err(|e| format!("{name}: {e}"))?;
    let back = g.to_cofunctor().map_err(|e| format!("{name}: {e}"))?;
    ensure(back == *f, || format!("{name}: cofunctor changed"))?;
    let again = CoveringFunctor::from_cofunctor(&back).map_err(|e| format!("{name}: {e}"))?;
    ensure(again == g, || format!("{name}: covering functor changed"))
}

fn c10_covering_round_trip() -> Outcome {
    let mut n = 0;
    for (name, c) in categories() {
        round_trip(&name, &Cofunctor::identity(c.clone()))?;
        let e = counit_epsilon(c, MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(e.epsilon.flags().bijective_on_arrows, || {
            format!("{name}: ε not bijective")
        })?;
        round_trip(&format!("ε({name})"), &e.epsilon)?;
        n += 2;
    }
    for (name, s) in core_semigroups() {
        let u = unit_eta(s, MAX).map_err(|e| e.to_string())?;
        let e = counit_epsilon(u.germs.category.clone(), MAX).map_err(|e| e.to_string())?;
        round_trip(&format!("ε(C({name}))"), &e.epsilon)?;
        let top = germ_category(u.slices.algebra.clone()).map_err(|e| e.to_string())?;
        let c_eta = morphism_to_cofunctor(&u.eta, &u.germs, &top).map_err(|e| e.to_string())?;
        n += 1;
        if c_eta.flags().bijective_on_arrows {
            round_trip(&format!("C(η({name}))"), &c_eta)?;
            n += 1;
        }
    }
    Ok(format!("{n} cofunctors"))
}

fn c11_property_suites() -> Outcome {
    let t = Instant::now();
    let cats = categories();
    let mut checks = 0;
    for (name, s) in semigroups(&cats) {
        let r = laws::semigroup_suite(s.clone(), MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.all_passed(), || format!("{name}:\n{}", failures(&r)))?;
        checks += r.checks().len();
        if let Some(e) = laws::projection_gba(&s) {
            let r = laws::gba_laws(&e);
            ensure(r.all_passed(), || format!("P({name}):\n{r}"))?;
            checks += r.checks().len();
        }
    }
    for (name, c) in &cats {
        let r = laws::slice_laws(c.clone(), MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.all_passed(), || format!("{name}:\n{r}"))?;
        let g = verify_groupoidal_category(c.clone(), MAX).map_err(|e| format!("{name}: {e}"))?;
        ensure(g.report.all_passed(), || format!("{name}:\n{}", g.report))?;
        checks += r.checks().len() + g.report.checks().len();
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!("{checks} checks, {:?}", t.elapsed()))
}

fn failures(r: &sdl_core::Report) -> String {
    r.failures().map(|c| format!("{} {:?}\n", c.name, c.witness)).collect()
}

fn c12_stone_duality() -> Outcome {
    let mut out = Vec::new();
    for (n, size, chars) in [(1, 2, 1), (2, 4, 2), (3, 8, 3)] {
        let s = zoo::gen_pt(n).unwrap();
        let e = projection_lattice(&s).map_err(|w| w.describe(&s))?.to_gba(&s);
        ensure(e.len() == size && e.atoms().len() == chars, || {
            format!("P(PT_{n}): {} elements, {} characters", e.len(), e.atoms().len())
        })?;
        let r = verify_stone_duality(&e);
        ensure(r.all_passed(), || format!("P(PT_{n}):\n{r}"))?;
        out.push(format!("P(PT_{n}) {size}/{chars}"));
    }
    Ok(out.join(", "))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("classify PT_2", c1_pt2_classification),
        ("classify I_2", c2_i2_classification),
        ("BD(PT_2) ≅ I_2", c3_bd_of_pt2),
        ("PT_2 and K_2", c4_pt2_and_pair_groupoid),
        ("triangular_2 and the free arrow", c5_triangular_and_free_arrow),
        ("adjunction triangles on the corpus", c6_adjunction),
        ("η iso iff Boolean", c7_eta_iso_iff_boolean),
        ("cosupport inference", c8_cosupport_inference),
        ("inclusion I_2 → PT_2", c9_inclusion_morphism),
        ("covering round trips", c10_covering_round_trip),
        ("property suites", c11_property_suites),
        ("Stone duality on P(PT_n)", c12_stone_duality),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {:>2} {title}: {detail} [{:?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {title}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
