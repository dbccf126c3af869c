//! Isomorphism search between finite categories.

use super::FinCat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryIso {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

fn hom_counts(c: &FinCat) -> Vec<usize> {
    let k = c.n_objects();
    let mut h = vec![0; k * k];
    for x in 0..c.n_arrows() {
        h[c.dom(x) * k + c.cod(x)] += 1;
    }
    h
}

/// Sorted out-profile and in-profile of each object.
fn profiles(c: &FinCat, h: &[usize]) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let k = c.n_objects();
    (0..k)
        .map(|o| {
            let mut out: Vec<usize> = (0..k).map(|j| h[o * k + j]).collect();
            let mut inn: Vec<usize> = (0..k).map(|i| h[i * k + o]).collect();
            out.sort_unstable();
            inn.sort_unstable();
            (h[o * k + o], out, inn)
        })
        .collect()
}

struct ArrowSearch<'a> {
    c: &'a FinCat,
    d: &'a FinCat,
    order: Vec<usize>,
    fwd: Vec<usize>,
    used: Vec<bool>,
    obj: &'a [usize],
}

impl ArrowSearch<'_> {
    fn consistent(&self, a: usize) -> bool {
        let m = self.c.n_arrows();
        for b in 0..m {
            if self.fwd[b] == usize::MAX {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                if let Some(xy) = self.c.comp(x, y) {
                    let img = self.fwd[xy];
                    if img != usize::MAX && self.d.comp(self.fwd[x], self.fwd[y]) != Some(img) {
                        return false;
                    }
                }
            }
        }
        // a as a product of assigned arrows
        for x in 0..m {
            for y in 0..m {
                if self.fwd[x] != usize::MAX
                    && self.fwd[y] != usize::MAX
                    && self.c.comp(x, y) == Some(a)
                    && self.d.comp(self.fwd[x], self.fwd[y]) != Some(self.fwd[a])
                {
                    return false;
                }
            }
        }
        true
    }

    fn solve(&mut self, i: usize) -> bool {
        let Some(&a) = self.order.get(i) else { return true };
        let (dd, cc) = (self.obj[self.c.dom(a)], self.obj[self.c.cod(a)]);
        let cands: Vec<usize> = if self.c.is_unit(a) {
            vec![self.d.unit(dd)]
        } else {
            self.d.hom(dd, cc).into_iter().filter(|&b| !self.d.is_unit(b)).collect()
        };
        for b in cands {
            if self.used[b] {
                continue;
            }
            self.fwd[a] = b;
            self.used[b] = true;
            if self.consistent(a) && self.solve(i + 1) {
                return true;
            }
            self.used[b] = false;
            self.fwd[a] = usize::MAX;
        }
        false
    }
}

#[allow(clippy::too_many_arguments)]
fn search_objects(
    c: &FinCat,
    d: &FinCat,
    hc: &[usize],
    hd: &[usize],
    pc: &[(usize, Vec<usize>, Vec<usize>)],
    pd: &[(usize, Vec<usize>, Vec<usize>)],
    obj: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<CategoryIso> {
    let k = c.n_objects();
    let i = obj.len();
    if i == k {
        let mut order: Vec<usize> = (0..c.n_arrows()).collect();
        order.sort_by_key(|&a| (!c.is_unit(a), c.dom(a), c.cod(a)));
        let mut s = ArrowSearch {
            c,
            d,
            order,
            fwd: vec![usize::MAX; c.n_arrows()],
            used: vec![false; d.n_arrows()],
            obj,
        };
        return s.solve(0).then(|| CategoryIso {
            objects: obj.clone(),
            arrows: s.fwd,
        });
    }
    for j in 0..k {
        if used[j] || pc[i] != pd[j] {
            continue;
        }
        let ok = (0..i).all(|p| hc[i * k + p] == hd[j * k + obj[p]] && hc[p * k + i] == hd[obj[p] * k + j]);
        if !ok {
            continue;
        }
        obj.push(j);
        used[j] = true;
        if let Some(found) = search_objects(c, d, hc, hd, pc, pd, obj, used) {
            return Some(found);
        }
        used[j] = false;
        obj.pop();
    }
    None
}

/// Object and arrow bijections commuting with dom, cod, units and
/// composition, if any exist.
pub fn iso_categories(c: &FinCat, d: &FinCat) -> Option<CategoryIso> {
    if c.n_objects() != d.n_objects() || c.n_arrows() != d.n_arrows() {
        return None;
    }
    let (hc, hd) = (hom_counts(c), hom_counts(d));
    let (pc, pd) = (profiles(c, &hc), profiles(d, &hd));
    let mut sc = pc.clone();
    let mut sd = pd.clone();
    sc.sort();
    sd.sort();
    if sc != sd {
        return None;
    }
    search_objects(
        c,
        d,
        &hc,
        &hd,
        &pc,
        &pd,
        &mut Vec::new(),
        &mut vec![false; d.n_objects()],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let k3 = zoo::gen_pair_groupoid(3).unwrap();
        let iso = iso_categories(&k3, &k3).unwrap();
        assert_eq!(iso.objects.len(), 3);
        let fa = zoo::gen_free_arrow();
        assert!(iso_categories(&fa, &fa).is_some());
    }

    #[test]
    fn different_sizes() {
        let k2 = zoo::gen_pair_groupoid(2).unwrap();
        assert!(iso_categories(&k2, &zoo::gen_free_arrow()).is_none());
        assert!(iso_categories(&k2, &zoo::gen_discrete(2).unwrap()).is_none());
    }
}
