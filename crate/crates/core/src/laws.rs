//! Exhaustive law suites over a single instance. Each check records the
//! first counterexample found.

use std::sync::Arc;

use crate::algebra::classify::{
    boolean_restriction_witness, coehresmann_witness, local_units, preboolean_restriction_witness, restriction_witness,
};
use crate::algebra::{
    bd_subalgebra, classify, compatible, deterministic_sets, infer_cosupport, iso_algebras, partial_isomorphisms,
    projections, BiUnaryAlgebra, Mode,
};
use crate::category::{iso_categories, slice_semigroup, FinCat};
use crate::duality::{germ_category, unit_eta, DualityError};
use crate::gba::{filter_census, verify_stone_duality, FinGba};
use crate::report::Report;

/// First pair (or triple) on which `ok` fails, rendered with element names.
fn pairs(s: &BiUnaryAlgebra, ok: impl Fn(usize, usize) -> bool) -> Option<String> {
    let n = s.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| !ok(a, b))
        .map(|(a, b)| format!("({}, {})", s.name(a), s.name(b)))
}

fn triples(s: &BiUnaryAlgebra, ok: impl Fn(usize, usize, usize) -> bool) -> Option<String> {
    let n = s.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !ok(a, b, c) {
                    return Some(format!("({}, {}, {})", s.name(a), s.name(b), s.name(c)));
                }
            }
        }
    }
    None
}

/// Rules that follow from the Ehresmann and restriction axioms.
pub fn derived_rules(s: &BiUnaryAlgebra) -> Report {
    let mut r = Report::new();
    let ord = s.order();
    r.record(
        "derived.star_of_product_with_projection",
        pairs(s, |x, e| {
            !s.is_projection(e) || s.star(s.mul(x, e)) == s.mul(s.star(x), e)
        }),
    );
    r.record(
        "derived.order_monotone_star",
        pairs(s, |a, b| !ord.leq(a, b) || ord.leq(s.star(a), s.star(b))),
    );
    r.record(
        "derived.compatibility_translates",
        triples(s, |a, b, u| {
            !compatible(s, a, b, Mode::Right).unwrap()
                || (compatible(s, s.mul(a, u), s.mul(b, u), Mode::Right).unwrap()
                    && compatible(s, s.mul(u, a), s.mul(u, b), Mode::Right).unwrap())
        }),
    );
    r.record(
        "derived.join_implies_compatible",
        pairs(s, |a, b| {
            ord.join(a, b).is_none() || compatible(s, a, b, Mode::Right).unwrap()
        }),
    );
    if restriction_witness(s).is_none() {
        r.record(
            "derived.left_projection_moves_right",
            pairs(s, |e, x| {
                !s.is_projection(e) || s.mul(e, x) == s.mul(x, s.star(s.mul(e, x)))
            }),
        );
        r.check(
            "derived.all_deterministic",
            det_count(s) == Some(s.len()) || !s.has_plus(),
            || format!("{:?} of {} deterministic", det_count(s), s.len()),
        );
    }
    if s.has_plus() && coehresmann_witness(s).is_none() {
        r.record(
            "derived.cosupport_of_projection_times_element",
            pairs(s, |e, x| {
                !s.is_projection(e) || s.plus(s.mul(e, x)) == Some(s.mul(e, s.plus(x).unwrap()))
            }),
        );
    }
    r
}

fn det_count(s: &BiUnaryAlgebra) -> Option<usize> {
    deterministic_sets(s).ok().map(|d| d.deterministic.len())
}

/// Join laws in preBoolean restriction semigroups. Empty for other inputs.
pub fn join_laws(s: &BiUnaryAlgebra) -> Report {
    let mut r = Report::new();
    if preboolean_restriction_witness(s).is_some() {
        return r;
    }
    let ord = s.order();
    r.record(
        "joins.star_of_join",
        pairs(s, |a, b| match (ord.join(a, b), ord.join(s.star(a), s.star(b))) {
            (Some(j), Some(k)) => s.star(j) == k,
            _ => true,
        }),
    );
    r.record(
        "joins.left_distributive",
        triples(s, |u, a, b| match ord.join(a, b) {
            Some(j) => ord.join(s.mul(u, a), s.mul(u, b)) == Some(s.mul(u, j)),
            None => true,
        }),
    );
    r.record(
        "joins.right_distributive",
        triples(s, |a, b, u| match ord.join(a, b) {
            Some(j) => ord.join(s.mul(a, u), s.mul(b, u)) == Some(s.mul(j, u)),
            None => true,
        }),
    );
    let p: Vec<usize> = (0..s.len()).filter(|&e| s.is_projection(e)).collect();
    let mut w = None;
    'outer: for x in 0..s.len() {
        for &e in &p {
            for &f in &p {
                let ef = ord.join(e, f).expect("projections have joins");
                let lhs = s.star(s.mul(ef, x));
                let rhs = ord.join(s.star(s.mul(e, x)), s.star(s.mul(f, x)));
                if rhs != Some(lhs) {
                    w = Some(format!("({}, {}, {})", s.name(x), s.name(e), s.name(f)));
                    break 'outer;
                }
            }
        }
    }
    r.record("joins.restricted_support_preserves_joins", w);
    r
}

/// Partial isomorphisms are bideterministic in range semigroups, and
/// `s⁺ = (s')*` for each of them.
pub fn partial_isomorphism_laws(s: &BiUnaryAlgebra) -> Report {
    let mut r = Report::new();
    let cl = classify(s);
    if !cl.range || !s.has_plus() {
        return r;
    }
    let bd = deterministic_sets(s).map(|d| d.bideterministic).unwrap_or_default();
    let pi = partial_isomorphisms(s);
    r.record(
        "isos.inside_bideterministic",
        pi.iter()
            .find(|(a, _)| !bd.contains(a))
            .map(|&(a, _)| s.name(a).to_string()),
    );
    let plus = infer_cosupport(s).ok();
    r.record(
        "isos.cosupport_is_partner_support",
        pi.iter()
            .find(|&&(a, t)| plus.as_ref().map(|p| p[a]) != Some(s.star(t)))
            .map(|&(a, _)| s.name(a).to_string()),
    );
    r
}

/// Consequences of finiteness for Boolean restriction semigroups with local
/// units: binary meets and a cosupport exist.
pub fn boolean_consequences(s: &BiUnaryAlgebra) -> Report {
    let mut r = Report::new();
    if boolean_restriction_witness(s).is_some() || local_units(s).is_some() {
        return r;
    }
    r.record("boolean.binary_meets", pairs(s, |a, b| s.meet(a, b).is_some()));
    let inferred = infer_cosupport(s);
    r.check("boolean.cosupport_exists", inferred.is_ok(), || format!("{inferred:?}"));
    if let (Ok(p), Some(stored)) = (&inferred, s.plus_table()) {
        r.check("boolean.cosupport_unique", p == stored, || {
            "inferred table differs from the stored one".into()
        });
    }
    r
}

/// Restriction axioms of the slice semigroup, checked on the slices
/// themselves rather than on the table.
pub fn slice_laws(c: Arc<FinCat>, max_size: usize) -> Result<Report, DualityError> {
    let ss = slice_semigroup(c.clone(), false, max_size)?;
    let bis = slice_semigroup(c.clone(), true, max_size)?;
    let mut r = Report::new();
    let n = ss.len();
    let mut w = None;
    'outer: for i in 0..n {
        let a = ss.slice(i);
        if a.product(&a.support())?.arrows() != a.arrows() {
            w = Some(format!("AA* at {}", a.name()));
            break;
        }
        for j in 0..n {
            let b = ss.slice(j);
            let ab = a.product(&b)?;
            let checks = [
                (
                    "(AB)* = (A*B)*",
                    ab.support().arrows() == a.support().product(&b)?.support().arrows(),
                ),
                (
                    "A*B = B(AB)*",
                    a.support().product(&b)?.arrows() == b.product(&ab.support())?.arrows(),
                ),
                (
                    "A*B* = B*A*",
                    a.support().product(&b.support())?.arrows() == b.support().product(&a.support())?.arrows(),
                ),
            ];
            if let Some((law, _)) = checks.iter().find(|(_, ok)| !ok) {
                w = Some(format!("{law} at ({}, {})", a.name(), b.name()));
                break 'outer;
            }
        }
    }
    r.record("slices.restriction_axioms", w);
    let cl = classify(&ss.algebra);
    r.check("slices.etale_range", cl.etale_range, || {
        cl.witness("etale_range")
            .map(|w| w.describe(&ss.algebra))
            .unwrap_or_default()
    });
    let bcl = classify(&bis.algebra);
    r.check(
        "slices.bislices_boolean_birestriction",
        bcl.boolean_birestriction,
        || {
            bcl.witness("boolean_birestriction")
                .map(|w| w.describe(&bis.algebra))
                .unwrap_or_default()
        },
    );
    let bd = bd_subalgebra(&ss.algebra).map(|(b, _)| b);
    r.check(
        "slices.bideterministic_are_bislices",
        bd.as_ref().is_ok_and(|b| iso_algebras(b, &bis.algebra).is_some()),
        || format!("|BD| = {:?}, |bislices| = {}", bd.as_ref().map(|b| b.len()), bis.len()),
    );
    Ok(r)
}

/// Germ-level laws of a preBoolean restriction semigroup with local units.
pub fn germ_laws(s: Arc<BiUnaryAlgebra>, max_size: usize) -> Result<Report, DualityError> {
    let unit = unit_eta(s.clone(), max_size)?;
    let g = &unit.germs;
    let c = &g.category;
    let ord = s.order();
    let mut r = Report::new();

    // [s, φ_a] = [t, φ_a] iff some u ≤ s, t has a ≤ u*
    let mut w = None;
    'outer: for x in 0..s.len() {
        for y in 0..s.len() {
            let common: Vec<usize> = (0..s.len()).filter(|&u| ord.leq(u, x) && ord.leq(u, y)).collect();
            for &a in &g.atoms {
                let both = g.lattice.leq(a, s.star(x)) && g.lattice.leq(a, s.star(y));
                if !both {
                    continue;
                }
                let related = common.iter().any(|&u| g.lattice.leq(a, s.star(u)));
                if related != (s.mul(x, a) == s.mul(y, a)) {
                    w = Some(format!("({}, {}) at {}", s.name(x), s.name(y), s.name(a)));
                    break 'outer;
                }
            }
        }
    }
    r.record("germs.canonical_representative", w);

    let theta = |x: usize| g.theta_arrows(x).expect("element in range");
    r.record(
        "theta.product",
        pairs(&s, |x, y| {
            let prod = g.theta(x).unwrap().product(&g.theta(y).unwrap()).unwrap();
            prod.arrows() == theta(s.mul(x, y))
        }),
    );
    r.record(
        "theta.support",
        (0..s.len())
            .find(|&x| g.theta(x).unwrap().support().arrows() != theta(s.star(x)))
            .map(|x| s.name(x).to_string()),
    );
    r.record(
        "theta.support_is_basic_open",
        (0..s.len())
            .find(|&x| {
                let mut objs: Vec<usize> = theta(x).iter().map(|&a| c.dom(a)).collect();
                objs.sort_unstable();
                let basic: Vec<usize> = g
                    .lattice
                    .atoms_below(s.star(x))
                    .iter()
                    .map(|&a| g.object_of(a).unwrap())
                    .collect();
                objs != basic
            })
            .map(|x| s.name(x).to_string()),
    );
    r.record(
        "theta.joins_to_unions",
        pairs(&s, |x, y| match ord.join(x, y) {
            Some(j) => {
                let mut u = theta(x);
                u.extend(theta(y));
                u.sort_unstable();
                u.dedup();
                u == theta(j)
            }
            None => true,
        }),
    );
    if s.has_plus() && coehresmann_witness(&s).is_none() {
        r.record(
            "theta.range_is_cosupport",
            (0..s.len())
                .find(|&x| {
                    let mut objs: Vec<usize> = theta(x).iter().map(|&a| c.cod(a)).collect();
                    objs.sort_unstable();
                    objs.dedup();
                    let basic: Vec<usize> = g
                        .lattice
                        .atoms_below(s.plus(x).unwrap())
                        .iter()
                        .map(|&a| g.object_of(a).unwrap())
                        .collect();
                    objs != basic
                })
                .map(|x| s.name(x).to_string()),
        );
        r.record(
            "germs.cosupport_is_range",
            g.arrows
                .iter()
                .enumerate()
                .find(|&(k, &x)| s.plus(x) != Some(g.atoms[c.cod(k)]))
                .map(|(_, &x)| s.name(x).to_string()),
        );
        let bd = deterministic_sets(&s)?.bideterministic;
        r.record(
            "theta.bideterministic_gives_bislice",
            bd.iter()
                .find(|&&x| !g.theta(x).unwrap().is_bislice())
                .map(|&x| s.name(x).to_string()),
        );
        let cl = classify(&s);
        if cl.etale_range {
            // every bislice of the germ category is Θ of a bideterministic element
            let missing = (0..unit.slices.len())
                .find(|&i| unit.slices.slice(i).is_bislice() && !bd.iter().any(|&x| unit.eta.apply(x) == i));
            r.record(
                "theta.bislices_from_bideterministic",
                missing.map(|i| unit.slices.algebra.name(i).to_string()),
            );
            let (sub, _) = bd_subalgebra(&s)?;
            let gb = germ_category(Arc::new(sub))?;
            r.check(
                "germs.etale_same_as_bideterministic",
                iso_categories(c, &gb.category).is_some(),
                || format!("{} vs {} arrows", c.n_arrows(), gb.category.n_arrows()),
            );
        }
    }
    r.check("eta.injective", unit.eta.is_injective(), || "collision".into());
    Ok(r)
}

/// Everything that applies to `s`: derived rules, join laws, partial
/// isomorphism laws, Boolean consequences and, when `s` has germs, the
/// germ laws.
pub fn semigroup_suite(s: Arc<BiUnaryAlgebra>, max_size: usize) -> Result<Report, DualityError> {
    let mut r = derived_rules(&s);
    r.extend(join_laws(&s));
    r.extend(partial_isomorphism_laws(&s));
    r.extend(boolean_consequences(&s));
    if preboolean_restriction_witness(&s).is_none() && local_units(&s).is_none() {
        r.extend(germ_laws(s, max_size)?);
    }
    Ok(r)
}

/// Stone duality on `e` plus the filter census when `e` is small enough.
pub fn gba_laws(e: &FinGba) -> Report {
    let mut r = verify_stone_duality(e);
    if let Some(c) = filter_census(e) {
        let atoms = e.atoms().len();
        r.check(
            "stone.prime_filters_are_principal",
            c.prime == c.ultra && c.ultra == c.principal_atoms && c.prime.len() == atoms,
            || {
                format!(
                    "prime={:?} ultra={:?} principal={:?}",
                    c.prime, c.ultra, c.principal_atoms
                )
            },
        );
    }
    r
}

/// The projection lattice of `s` as a generalized Boolean algebra.
pub fn projection_gba(s: &BiUnaryAlgebra) -> Option<FinGba> {
    projections(s).ok()?;
    crate::algebra::projection_lattice(s).ok().map(|l| l.to_gba(s))
}
