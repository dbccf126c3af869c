//! The instance corpus shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use sdl_core::category::{enumerate_categories, slice_semigroup};
use sdl_core::{zoo, BiUnaryAlgebra, FinCat};

pub const MAX: usize = 100_000;

pub type Named<T> = Vec<(String, Arc<T>)>;

/// The semigroups the adjunction is checked on directly.
pub fn core_semigroups() -> Named<BiUnaryAlgebra> {
    vec![
        ("pt1".into(), Arc::new(zoo::gen_pt(1).unwrap())),
        ("pt2".into(), Arc::new(zoo::gen_pt(2).unwrap())),
        ("i2".into(), Arc::new(zoo::gen_i(2).unwrap())),
        ("triangular2".into(), Arc::new(zoo::gen_triangular(2).unwrap())),
        ("triangular3".into(), Arc::new(zoo::gen_triangular(3).unwrap())),
    ]
}

/// Zoo categories followed by every category with at most 3 objects and
/// 5 arrows, one per isomorphism class.
pub fn categories() -> Named<FinCat> {
    let mut out: Named<FinCat> = zoo::category_zoo().into_iter().map(|(n, c)| (n, Arc::new(c))).collect();
    for (i, c) in enumerate_categories(3, 5).into_iter().enumerate() {
        out.push((format!("enumerated{i}"), Arc::new(c)));
    }
    out
}

/// Core semigroups, the zoo, and the slice and bislice semigroups of every
/// corpus category.
pub fn semigroups(categories: &Named<FinCat>) -> Named<BiUnaryAlgebra> {
    let mut out = core_semigroups();
    out.extend(zoo::semigroup_zoo().into_iter().map(|(n, s)| (n, Arc::new(s))));
    for (name, c) in categories {
        for bis in [false, true] {
            let ss = slice_semigroup(c.clone(), bis, MAX).unwrap();
            let tag = if bis { "bislices" } else { "slices" };
            out.push((format!("{tag}({name})"), ss.algebra.clone()));
        }
    }
    out
}
