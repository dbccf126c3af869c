//! Generators for the standard small instances.
//!
//! Partial maps on `{1..n}` are tuples `(s(1), …, s(n))` with `0` for
//! "undefined", listed in lexicographic order so the empty map comes
//! first. Products compose right to left: `(s·t)(x) = s(t(x))`.

use thiserror::Error;

use crate::algebra::BiUnaryAlgebra;
use crate::category::FinCat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("{name}({n}) is outside the supported range 1..={max}")]
    TooLarge { name: &'static str, n: usize, max: usize },
}

type PartialMap = Vec<usize>;

fn all_partial_maps(n: usize) -> Vec<PartialMap> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=n).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn map_name(p: &PartialMap) -> String {
    let parts: Vec<String> = p
        .iter()
        .map(|&v| if v == 0 { "-".to_string() } else { v.to_string() })
        .collect();
    format!("[{}]", parts.join(","))
}

/// The algebra of the given partial maps, which must be closed under
/// composition and under restriction to domain and range.
fn from_maps(maps: Vec<PartialMap>) -> BiUnaryAlgebra {
    let index: std::collections::HashMap<&PartialMap, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let compose = |s: &PartialMap, t: &PartialMap| -> PartialMap {
        t.iter().map(|&y| if y == 0 { 0 } else { s[y - 1] }).collect()
    };
    let dom_id = |s: &PartialMap| -> PartialMap {
        s.iter()
            .enumerate()
            .map(|(i, &v)| if v == 0 { 0 } else { i + 1 })
            .collect()
    };
    let ran_id = |s: &PartialMap| -> PartialMap { (1..=s.len()).map(|x| if s.contains(&x) { x } else { 0 }).collect() };
    let mult = maps
        .iter()
        .flat_map(|s| maps.iter().map(|t| index[&compose(s, t)]).collect::<Vec<_>>())
        .collect();
    let star = maps.iter().map(|s| index[&dom_id(s)]).collect();
    let plus = maps.iter().map(|s| index[&ran_id(s)]).collect();
    let names = maps.iter().map(map_name).collect();
    BiUnaryAlgebra::from_flat(names, mult, star, Some(plus), Some(0)).expect("partial maps compose")
}

fn guard(name: &'static str, n: usize, max: usize) -> Result<(), ZooError> {
    if n == 0 || n > max {
        Err(ZooError::TooLarge { name, n, max })
    } else {
        Ok(())
    }
}

/// All partial self-maps of `{1..n}`.
pub fn gen_pt(n: usize) -> Result<BiUnaryAlgebra, ZooError> {
    guard("pt", n, 4)?;
    Ok(from_maps(all_partial_maps(n)))
}

/// Partial injections of `{1..n}`.
pub fn gen_i(n: usize) -> Result<BiUnaryAlgebra, ZooError> {
    guard("i", n, 4)?;
    let maps = all_partial_maps(n)
        .into_iter()
        .filter(|p| {
            let vals: Vec<_> = p.iter().filter(|&&v| v != 0).collect();
            let mut d = vals.clone();
            d.sort();
            d.dedup();
            d.len() == vals.len()
        })
        .collect();
    Ok(from_maps(maps))
}

/// Partial maps with `s(x) ≥ x` on their domain.
pub fn gen_triangular(n: usize) -> Result<BiUnaryAlgebra, ZooError> {
    guard("triangular", n, 4)?;
    let maps = all_partial_maps(n)
        .into_iter()
        .filter(|p| p.iter().enumerate().all(|(i, &v)| v == 0 || v > i))
        .collect();
    Ok(from_maps(maps))
}

/// The Boolean algebra of subsets of `{1..k}` under intersection, with
/// `s* = s⁺ = s`.
pub fn gen_semilattice(k: usize) -> Result<BiUnaryAlgebra, ZooError> {
    if k > 6 {
        return Err(ZooError::TooLarge {
            name: "semilattice",
            n: k,
            max: 6,
        });
    }
    let n = 1usize << k;
    let names = (0..n)
        .map(|m| {
            let parts: Vec<String> = (0..k)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mult = (0..n).flat_map(|a| (0..n).map(move |b| a & b)).collect();
    let id: Vec<usize> = (0..n).collect();
    Ok(BiUnaryAlgebra::from_flat(names, mult, id.clone(), Some(id), Some(0)).expect("meet is associative"))
}

/// The pair groupoid `K_n`: one arrow `a{y}{x}: x → y` for each pair.
pub fn gen_pair_groupoid(n: usize) -> Result<FinCat, ZooError> {
    guard("pair_groupoid", n, 6)?;
    let objects = (1..=n).map(|o| o.to_string()).collect();
    let idx = |y: usize, x: usize| y * n + x;
    let mut arrows = Vec::new();
    for y in 0..n {
        for x in 0..n {
            arrows.push((format!("a{}{}", y + 1, x + 1), x, y));
        }
    }
    let units = (0..n).map(|o| idx(o, o)).collect();
    let m = n * n;
    let mut comp = vec![vec![None; m]; m];
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                comp[idx(z, y)][idx(y, x)] = Some(idx(z, x));
            }
        }
    }
    Ok(FinCat::new(objects, arrows, units, comp).expect("pair groupoid"))
}

/// Two objects and a single non-identity arrow `f: 1 → 2`.
pub fn gen_free_arrow() -> FinCat {
    let objects = vec!["1".into(), "2".into()];
    let arrows = vec![("1_1".into(), 0, 0), ("1_2".into(), 1, 1), ("f".into(), 0, 1)];
    let comp = vec![
        vec![Some(0), None, None],
        vec![None, Some(1), Some(2)],
        vec![Some(2), None, None],
    ];
    FinCat::new(objects, arrows, vec![0, 1], comp).expect("free arrow")
}

/// Two objects with two parallel arrows `p, q: 1 → 2`.
pub fn gen_parallel_pair() -> FinCat {
    let objects = vec!["1".into(), "2".into()];
    let arrows = vec![
        ("1_1".into(), 0, 0),
        ("1_2".into(), 1, 1),
        ("p".into(), 0, 1),
        ("q".into(), 0, 1),
    ];
    let comp = vec![
        vec![Some(0), None, None, None],
        vec![None, Some(1), Some(2), Some(3)],
        vec![Some(2), None, None, None],
        vec![Some(3), None, None, None],
    ];
    FinCat::new(objects, arrows, vec![0, 1], comp).expect("parallel pair")
}

/// `n` objects and only their units.
pub fn gen_discrete(n: usize) -> Result<FinCat, ZooError> {
    guard("discrete", n, 16)?;
    let objects = (1..=n).map(|o| o.to_string()).collect();
    let arrows = (0..n).map(|o| (format!("1_{}", o + 1), o, o)).collect();
    let comp = (0..n)
        .map(|x| (0..n).map(|y| (x == y).then_some(x)).collect())
        .collect();
    Ok(FinCat::new(objects, arrows, (0..n).collect(), comp).expect("discrete"))
}

/// Named semigroup instances used throughout the tests.
pub fn semigroup_zoo() -> Vec<(String, BiUnaryAlgebra)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("pt{n}"), gen_pt(n).unwrap()));
        out.push((format!("i{n}"), gen_i(n).unwrap()));
        out.push((format!("triangular{n}"), gen_triangular(n).unwrap()));
    }
    for k in 0..=3 {
        out.push((format!("semilattice{k}"), gen_semilattice(k).unwrap()));
    }
    out
}

/// Named category instances used throughout the tests.
pub fn category_zoo() -> Vec<(String, FinCat)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("pair_groupoid{n}"), gen_pair_groupoid(n).unwrap()));
    }
    out.push(("free_arrow".into(), gen_free_arrow()));
    out.push(("parallel_pair".into(), gen_parallel_pair()));
    for n in 1..=3 {
        out.push((format!("discrete{n}"), gen_discrete(n).unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(gen_pt(1).unwrap().len(), 2);
        assert_eq!(gen_pt(2).unwrap().len(), 9);
        assert_eq!(gen_pt(3).unwrap().len(), 64);
        assert_eq!(gen_i(2).unwrap().len(), 7);
        assert_eq!(gen_i(3).unwrap().len(), 34);
        assert_eq!(gen_triangular(2).unwrap().len(), 6);
        assert_eq!(gen_triangular(1).unwrap(), gen_pt(1).unwrap());
        assert!(gen_pt(5).is_err());
        assert!(gen_pt(0).is_err());
    }

    #[test]
    fn element_order_and_names() {
        let i2 = gen_i(2).unwrap();
        let names: Vec<&str> = i2.names().iter().map(String::as_str).collect();
        assert_eq!(names, ["[-,-]", "[-,1]", "[-,2]", "[1,-]", "[1,2]", "[2,-]", "[2,1]"]);
    }

    #[test]
    fn composition_is_right_to_left() {
        let pt2 = gen_pt(2).unwrap();
        let s = pt2.index_of("[2,2]").unwrap();
        let t = pt2.index_of("[1,-]").unwrap();
        // (s·t)(1) = s(t(1)) = s(1) = 2
        assert_eq!(pt2.name(pt2.mul(s, t)), "[2,-]");
        assert_eq!(pt2.name(pt2.star(t)), "[1,-]");
        let c = pt2.index_of("[2,2]").unwrap();
        assert_eq!(pt2.name(pt2.plus(c).unwrap()), "[-,2]");
    }

    #[test]
    fn categories() {
        let k2 = gen_pair_groupoid(2).unwrap();
        assert_eq!(k2.n_arrows(), 4);
        assert_eq!(gen_pair_groupoid(1).unwrap().n_arrows(), 1);
        assert_eq!(gen_free_arrow().n_arrows(), 3);
        assert!(gen_pair_groupoid(7).is_err());
    }
}
