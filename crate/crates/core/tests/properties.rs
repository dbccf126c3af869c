//! Randomized invariance and law checks.

use std::path::Path;
use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::{select, subsequence};
use sdl_core::algebra::{is_isomorphism, iso_algebras};
use sdl_core::category::{iso_categories, slice_semigroup};
use sdl_core::duality::{germ_category, verify_adjunction_category};
use sdl_core::format::{parse_instance, semigroup_to_json, write_instance};
use sdl_core::{classify, laws, zoo, BiUnaryAlgebra, FinCat};

fn zoo_semigroup() -> impl Strategy<Value = (String, BiUnaryAlgebra)> {
    select(zoo::semigroup_zoo())
}

fn zoo_category() -> impl Strategy<Value = (String, FinCat)> {
    select(zoo::category_zoo())
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn permuted_semigroup() -> impl Strategy<Value = (BiUnaryAlgebra, Vec<usize>)> {
    zoo_semigroup().prop_flat_map(|(_, s)| {
        let n = s.len();
        (Just(s), shuffled(n))
    })
}

/// The category with objects and arrows relabeled: new object `i` is old
/// object `objs[i]`, new arrow `j` is old arrow `arrs[j]`.
fn permute_category(c: &FinCat, objs: &[usize], arrs: &[usize]) -> FinCat {
    let inv = |p: &[usize]| {
        let mut v = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            v[x] = i;
        }
        v
    };
    let (oi, ai) = (inv(objs), inv(arrs));
    let objects = objs.iter().map(|&o| c.object_name(o).to_string()).collect();
    let arrows = arrs
        .iter()
        .map(|&x| (c.arrow_name(x).to_string(), oi[c.dom(x)], oi[c.cod(x)]))
        .collect();
    let units = objs.iter().map(|&o| ai[c.unit(o)]).collect();
    let comp = arrs
        .iter()
        .map(|&x| arrs.iter().map(|&y| c.comp(x, y).map(|z| ai[z])).collect())
        .collect();
    FinCat::new(objects, arrows, units, comp).unwrap()
}

fn permuted_category() -> impl Strategy<Value = (FinCat, FinCat)> {
    zoo_category().prop_flat_map(|(_, c)| {
        let (k, n) = (c.n_objects(), c.n_arrows());
        (Just(c), shuffled(k), shuffled(n)).prop_map(|(c, o, a)| {
            let p = permute_category(&c, &o, &a);
            (c, p)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_is_invariant_under_relabeling((s, perm) in permuted_semigroup()) {
        let p = s.permuted(&perm).unwrap();
        prop_assert_eq!(classify(&s).flags(), classify(&p).flags());
        prop_assert!(is_isomorphism(&p, &s, &perm));
        let found = iso_algebras(&s, &p).expect("isomorphic");
        prop_assert!(is_isomorphism(&s, &p, &found));
    }

    #[test]
    fn germ_categories_of_relabeled_semigroups_agree((s, perm) in permuted_semigroup()) {
        let p = s.permuted(&perm).unwrap();
        let a = germ_category(Arc::new(s));
        let b = germ_category(Arc::new(p));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert!(iso_categories(&a.category, &b.category).is_some());
        }
    }

    #[test]
    fn json_round_trip_of_relabeled_semigroups((s, perm) in permuted_semigroup()) {
        let p = s.permuted(&perm).unwrap();
        let text = semigroup_to_json(&p);
        let back = parse_instance(&text, Path::new(".")).unwrap();
        prop_assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn relabeled_categories_are_isomorphic((c, p) in permuted_category()) {
        prop_assert!(iso_categories(&c, &p).is_some());
        prop_assert_eq!(c.is_groupoid().is_ok(), p.is_groupoid().is_ok());
        let a = slice_semigroup(Arc::new(c), false, 10_000).unwrap();
        let b = slice_semigroup(Arc::new(p.clone()), false, 10_000).unwrap();
        prop_assert!(iso_algebras(&a.algebra, &b.algebra).is_some());
        prop_assert!(verify_adjunction_category(Arc::new(p), 10_000).unwrap().all_passed());
    }

    #[test]
    fn random_slice_products_obey_restriction_laws(
        (c, picks) in zoo_category().prop_flat_map(|(_, c)| {
            let n = slice_semigroup(Arc::new(c.clone()), false, 10_000).unwrap().len();
            (Just(c), proptest::collection::vec(0..n, 3))
        })
    ) {
        let ss = slice_semigroup(Arc::new(c), false, 10_000).unwrap();
        let [a, b, d] = [0, 1, 2].map(|i| ss.slice(picks[i]));
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(ab.product(&d).unwrap().into_arrows(), a.product(&b.product(&d).unwrap()).unwrap().into_arrows());
        prop_assert_eq!(a.product(&a.support()).unwrap().into_arrows(), a.arrows().to_vec());
        prop_assert_eq!(
            a.support().product(&b).unwrap().into_arrows(),
            b.product(&ab.support()).unwrap().into_arrows()
        );
        prop_assert_eq!(a.cosupport().product(&a).unwrap().into_arrows(), a.arrows().to_vec());
        let s = &ss.algebra;
        let idx = ss.index_of(ab.arrows()).unwrap();
        prop_assert_eq!(s.mul(picks[0], picks[1]), idx);
    }

    #[test]
    fn generated_subalgebras_inherit_restriction_laws(
        (s, seed) in zoo_semigroup().prop_flat_map(|(_, s)| {
            let n = s.len();
            (Just(s), subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(4)))
        })
    ) {
        let closed = closure(&s, &seed);
        let (sub, _) = s.induced(&closed).unwrap();
        let parent = classify(&s);
        let child = classify(&sub);
        prop_assert!(child.ehresmann && child.restriction);
        prop_assert!(!parent.range || child.range);
        let r = laws::derived_rules(&sub);
        prop_assert!(r.all_passed(), "{}", r);
    }
}

/// The subalgebra generated by `seed` under product, star and plus.
fn closure(s: &BiUnaryAlgebra, seed: &[usize]) -> Vec<usize> {
    let mut set: Vec<usize> = seed.to_vec();
    loop {
        let mut next = set.clone();
        for &a in &set {
            next.push(s.star(a));
            next.extend(s.plus(a));
            for &b in &set {
                next.push(s.mul(a, b));
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == set.len() {
            return next;
        }
        set = next;
    }
}
