//! Exhaustive enumeration of small categories up to isomorphism.
//!
//! For every hom-count matrix (minimal under object relabeling) arrows are
//! laid out as units first, then non-identity arrows grouped by
//! (domain, codomain). Undetermined composition cells are filled by
//! backtracking with associativity checked after each choice. Solutions
//! are reduced to a canonical key, the lexicographically least table over
//! object permutations fixing the hom matrix and arrow permutations
//! inside each hom-set.

use std::collections::BTreeSet;

use super::FinCat;

const UNDEF: u8 = u8::MAX;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Hom-count matrix relabeled by `perm` (new object `i` is old `perm[i]`).
fn permute_matrix(h: &[usize], k: usize, perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            out[i * k + j] = h[perm[i] * k + perm[j]];
        }
    }
    out
}

fn hom_matrices(k: usize, max_arrows: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut h = vec![0usize; k * k];
    fn rec(h: &mut Vec<usize>, pos: usize, k: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if pos == k * k {
            out.push(h.clone());
            return;
        }
        let min = usize::from(pos / k == pos % k);
        for v in min..=min + left {
            h[pos] = v;
            rec(h, pos + 1, k, left - (v - min), out);
        }
        h[pos] = 0;
    }
    if max_arrows < k {
        return out;
    }
    rec(&mut h, 0, k, max_arrows - k, &mut out);
    let perms = permutations(k);
    out.retain(|h| perms.iter().all(|p| permute_matrix(h, k, p) >= *h));
    out
}

struct Layout {
    k: usize,
    dom: Vec<usize>,
    cod: Vec<usize>,
    /// Arrow ranges of the non-identity arrows per slot `(i, j)`.
    slots: Vec<Vec<usize>>,
}

impl Layout {
    fn new(k: usize, h: &[usize]) -> Self {
        let mut dom: Vec<usize> = (0..k).collect();
        let mut cod: Vec<usize> = (0..k).collect();
        let mut slots = vec![Vec::new(); k * k];
        for i in 0..k {
            for j in 0..k {
                let extra = h[i * k + j] - usize::from(i == j);
                for _ in 0..extra {
                    slots[i * k + j].push(dom.len());
                    dom.push(i);
                    cod.push(j);
                }
            }
        }
        Self { k, dom, cod, slots }
    }

    fn m(&self) -> usize {
        self.dom.len()
    }

    /// All arrows `i → j`.
    fn hom(&self, i: usize, j: usize) -> Vec<usize> {
        let mut v = Vec::new();
        if i == j {
            v.push(i);
        }
        v.extend(&self.slots[i * self.k + j]);
        v
    }
}

struct Filler<'a> {
    lay: &'a Layout,
    table: Vec<u8>,
    cells: Vec<(usize, usize)>,
    triples: Vec<(usize, usize, usize)>,
    found: Vec<Vec<u8>>,
}

impl Filler<'_> {
    fn associative_so_far(&self) -> bool {
        let m = self.lay.m();
        self.triples.iter().all(|&(a, b, c)| {
            let ab = self.table[a * m + b];
            let bc = self.table[b * m + c];
            if ab == UNDEF || bc == UNDEF {
                return true;
            }
            let l = self.table[ab as usize * m + c];
            let r = self.table[a * m + bc as usize];
            l == UNDEF || r == UNDEF || l == r
        })
    }

    fn fill(&mut self, i: usize) {
        let m = self.lay.m();
        let Some(&(x, y)) = self.cells.get(i) else {
            self.found.push(self.table.clone());
            return;
        };
        for v in self.lay.hom(self.lay.dom[y], self.lay.cod[x]) {
            self.table[x * m + y] = v as u8;
            if self.associative_so_far() {
                self.fill(i + 1);
            }
        }
        self.table[x * m + y] = UNDEF;
    }
}

fn base_table(lay: &Layout) -> (Vec<u8>, Vec<(usize, usize)>) {
    let m = lay.m();
    let mut table = vec![UNDEF; m * m];
    let mut cells = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if lay.dom[x] != lay.cod[y] {
                continue;
            }
            if x < lay.k {
                table[x * m + y] = y as u8;
            } else if y < lay.k {
                table[x * m + y] = x as u8;
            } else {
                cells.push((x, y));
            }
        }
    }
    (table, cells)
}

/// Least relabeled table over the symmetries of the layout.
fn canonical(lay: &Layout, h: &[usize], table: &[u8]) -> Vec<u8> {
    let k = lay.k;
    let m = lay.m();
    let mut best: Option<Vec<u8>> = None;
    for sigma in permutations(k) {
        if permute_matrix(h, k, &sigma) != h {
            continue;
        }
        // new arrow index → old arrow index, up to within-slot order
        let mut base: Vec<usize> = sigma.clone();
        let mut slot_ranges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let old = &lay.slots[sigma[i] * k + sigma[j]];
                slot_ranges.push((base.len(), old.len()));
                base.extend(old);
            }
        }
        let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
        for &(start, len) in &slot_ranges {
            let olds = &base[start..start + len];
            choices.push(
                permutations(len)
                    .into_iter()
                    .map(|p| p.iter().map(|&q| olds[q]).collect())
                    .collect(),
            );
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            let mut new_to_old: Vec<usize> = sigma.clone();
            for (c, &i) in choices.iter().zip(&idx) {
                new_to_old.extend(&c[i]);
            }
            let mut old_to_new = vec![0usize; m];
            for (n, &o) in new_to_old.iter().enumerate() {
                old_to_new[o] = n;
            }
            let mut t = Vec::with_capacity(m * m);
            for &ox in &new_to_old {
                for &oy in &new_to_old {
                    let v = table[ox * m + oy];
                    t.push(if v == UNDEF {
                        UNDEF
                    } else {
                        old_to_new[v as usize] as u8
                    });
                }
            }
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
            // advance the mixed-radix counter
            let mut p = 0;
            loop {
                if p == idx.len() {
                    break;
                }
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == idx.len() {
                break;
            }
        }
    }
    best.expect("identity permutation fixes the matrix")
}

fn build(lay: &Layout, table: &[u8]) -> FinCat {
    let k = lay.k;
    let m = lay.m();
    let objects = (0..k).map(|o| format!("o{o}")).collect();
    let arrows = (0..m)
        .map(|x| {
            if x < k {
                format!("1_o{x}")
            } else {
                format!("f{}", x - k)
            }
        })
        .collect();
    let comp = table.iter().map(|&v| (v != UNDEF).then_some(v as usize)).collect();
    FinCat::from_parts(
        objects,
        arrows,
        lay.dom.clone(),
        lay.cod.clone(),
        (0..k).collect(),
        comp,
    )
    .expect("enumerated tables satisfy the axioms")
}

/// Every category with at most `max_objects` objects and `max_arrows`
/// arrows, one per isomorphism class, sorted by object count, hom-count
/// matrix and canonical table.
pub fn enumerate_categories(max_objects: usize, max_arrows: usize) -> Vec<FinCat> {
    let mut out = Vec::new();
    for k in 1..=max_objects {
        for h in hom_matrices(k, max_arrows) {
            let lay = Layout::new(k, &h);
            if lay.m() > u8::MAX as usize {
                continue;
            }
            let (table, cells) = base_table(&lay);
            let m = lay.m();
            let mut triples = Vec::new();
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        if lay.dom[a] == lay.cod[b] && lay.dom[b] == lay.cod[c] {
                            triples.push((a, b, c));
                        }
                    }
                }
            }
            let mut filler = Filler {
                lay: &lay,
                table,
                cells,
                triples,
                found: Vec::new(),
            };
            filler.fill(0);
            let keys: BTreeSet<Vec<u8>> = filler.found.iter().map(|t| canonical(&lay, &h, t)).collect();
            out.extend(keys.iter().map(|t| build(&lay, t)));
        }
    }
    out
}
