//! Isomorphism search between finite algebras.
//!
//! Backtracking over element images with two kinds of pruning: elements
//! may only map to elements with the same invariant signature, and every
//! assignment is closed under products with earlier assignments and under
//! the unary operations before the next branch is taken.

use super::BiUnaryAlgebra;

type Signature = (bool, bool, bool, usize, usize, usize, usize);

fn signatures(s: &BiUnaryAlgebra) -> Vec<Signature> {
    let n = s.len();
    let ord = s.order();
    let mut fiber = vec![0usize; n];
    for x in 0..n {
        fiber[s.star(x)] += 1;
    }
    let zero = s.zero();
    (0..n)
        .map(|x| {
            let left_units = (0..n).filter(|&e| s.mul(e, x) == x).count();
            (
                s.is_projection(x),
                s.is_idempotent(x),
                zero == Some(x),
                ord.down_set(x).len(),
                ord.up_set(x).len(),
                fiber[x],
                left_units,
            )
        })
        .collect()
}

struct Search<'a> {
    s: &'a BiUnaryAlgebra,
    t: &'a BiUnaryAlgebra,
    use_plus: bool,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    trail: Vec<usize>,
    assigned: Vec<usize>,
    cands: Vec<Vec<usize>>,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `a ↦ b` and everything it forces; false on conflict.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            match (self.fwd[x], self.bwd[y]) {
                (NONE, NONE) => {}
                (fx, _) if fx == y => continue,
                _ => return false,
            }
            self.fwd[x] = y;
            self.bwd[y] = x;
            self.trail.push(x);
            self.assigned.push(x);
            queue.push((self.s.star(x), self.t.star(y)));
            if self.use_plus {
                queue.push((self.s.plus(x).unwrap(), self.t.plus(y).unwrap()));
            }
            for i in 0..self.assigned.len() {
                let z = self.assigned[i];
                let w = self.fwd[z];
                queue.push((self.s.mul(x, z), self.t.mul(y, w)));
                queue.push((self.s.mul(z, x), self.t.mul(w, y)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.bwd[self.fwd[x]] = NONE;
            self.fwd[x] = NONE;
            self.assigned.pop();
        }
    }

    fn solve(&mut self) -> bool {
        let next = (0..self.s.len())
            .filter(|&x| self.fwd[x] == NONE)
            .min_by_key(|&x| self.cands[x].iter().filter(|&&y| self.bwd[y] == NONE).count());
        let Some(x) = next else { return true };
        let options: Vec<usize> = self.cands[x].iter().copied().filter(|&y| self.bwd[y] == NONE).collect();
        for y in options {
            let mark = self.trail.len();
            if self.assign(x, y) && self.consistent_signatures(mark) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn consistent_signatures(&self, mark: usize) -> bool {
        self.trail[mark..].iter().all(|&x| self.cands[x].contains(&self.fwd[x]))
    }
}

/// A bijection `S → T` commuting with `·`, `*` and, when both algebras
/// carry one, `+`. Returns `map[s] = image of s`.
pub fn iso_algebras(s: &BiUnaryAlgebra, t: &BiUnaryAlgebra) -> Option<Vec<usize>> {
    let n = s.len();
    if n != t.len() {
        return None;
    }
    let ss = signatures(s);
    let ts = signatures(t);
    let mut sorted_s = ss.clone();
    let mut sorted_t = ts.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let cands = (0..n).map(|x| (0..n).filter(|&y| ts[y] == ss[x]).collect()).collect();
    let mut search = Search {
        s,
        t,
        use_plus: s.has_plus() && t.has_plus(),
        fwd: vec![NONE; n],
        bwd: vec![NONE; n],
        trail: Vec::new(),
        assigned: Vec::new(),
        cands,
    };
    search.solve().then_some(search.fwd)
}

/// Checks that `map` is an isomorphism in the sense of [`iso_algebras`].
pub fn is_isomorphism(s: &BiUnaryAlgebra, t: &BiUnaryAlgebra, map: &[usize]) -> bool {
    let n = s.len();
    if n != t.len() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    let unary = (0..n).all(|x| map[s.star(x)] == t.star(map[x]))
        && match (s.plus_table(), t.plus_table()) {
            (Some(sp), Some(tp)) => (0..n).all(|x| map[sp[x]] == tp[map[x]]),
            _ => true,
        };
    unary && (0..n).all(|a| (0..n).all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bd_subalgebra;
    use crate::zoo;

    #[test]
    fn bd_of_pt2_is_i2() {
        let pt2 = zoo::gen_pt(2).unwrap();
        let (bd, _) = bd_subalgebra(&pt2).unwrap();
        let i2 = zoo::gen_i(2).unwrap();
        let map = iso_algebras(&bd, &i2).expect("isomorphic");
        assert!(is_isomorphism(&bd, &i2, &map));
    }

    #[test]
    fn size_mismatch() {
        assert!(iso_algebras(&zoo::gen_pt(2).unwrap(), &zoo::gen_i(2).unwrap()).is_none());
    }

    #[test]
    fn shuffled_copy_is_found() {
        let pt2 = zoo::gen_pt(2).unwrap();
        let perm = [4, 7, 0, 2, 8, 1, 6, 3, 5];
        let shuffled = pt2.permuted(&perm).unwrap();
        let map = iso_algebras(&pt2, &shuffled).unwrap();
        assert!(is_isomorphism(&pt2, &shuffled, &map));
    }

    #[test]
    fn non_isomorphic_same_size() {
        // PT_1 (zero + identity) against a two-element left-zero band
        let pt1 = zoo::gen_pt(1).unwrap();
        let lz = BiUnaryAlgebra::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![1, 1]],
            vec![0, 1],
            None,
            None,
        )
        .unwrap();
        assert!(iso_algebras(&pt1, &lz).is_none());
    }
}
