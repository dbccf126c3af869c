//! Exploratory search for a finite restriction semigroup with local units
//! that has no compatible cosupport.
//!
//! Semigroup tables are enumerated with labels (no isomorphism reduction)
//! by filling the table row by row and pruning on associativity. For each
//! table every admissible support map is tried.

use std::time::{Duration, Instant};

use sdl_core::algebra::classify::{local_units, restriction_witness};
use sdl_core::algebra::{infer_cosupport, CosupportError};
use sdl_core::BiUnaryAlgebra;

#[derive(Debug, Default)]
pub struct Progress {
    /// Highest order whose search space was exhausted.
    pub completed_order: usize,
    pub tables: u64,
    pub candidates: u64,
    /// The example and the reason its inferred cosupport is rejected.
    pub found: Option<(BiUnaryAlgebra, String)>,
    pub timed_out: bool,
}

struct Search {
    n: usize,
    mult: Vec<usize>,
    deadline: Instant,
    progress: Progress,
}

const UNSET: usize = usize::MAX;

impl Search {
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        let m = &self.mult;
        for a in 0..n {
            for b in 0..n {
                let ab = m[a * n + b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = m[b * n + c];
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (m[ab * n + c], m[a * n + bc]);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Returns false once the deadline has passed or an example was found.
    fn fill(&mut self, cell: usize) -> bool {
        if self.progress.found.is_some() {
            return false;
        }
        if cell == self.n * self.n {
            self.progress.tables += 1;
            if self.progress.tables.is_multiple_of(256) && Instant::now() > self.deadline {
                self.progress.timed_out = true;
                return false;
            }
            self.try_supports();
            return self.progress.found.is_none();
        }
        for v in 0..self.n {
            self.mult[cell] = v;
            if self.associative_so_far() && !self.fill(cell + 1) {
                self.mult[cell] = UNSET;
                return false;
            }
        }
        self.mult[cell] = UNSET;
        true
    }

    fn try_supports(&mut self) {
        let n = self.n;
        let m = &self.mult;
        let options: Vec<Vec<usize>> = (0..n)
            .map(|s| (0..n).filter(|&e| m[e * n + e] == e && m[s * n + e] == s).collect())
            .collect();
        if options.iter().any(Vec::is_empty) {
            return;
        }
        let mut choice = vec![0; n];
        loop {
            let star: Vec<usize> = choice.iter().enumerate().map(|(s, &i)| options[s][i]).collect();
            if star.iter().all(|&e| star[e] == e) {
                self.progress.candidates += 1;
                self.check(star);
                if self.progress.found.is_some() {
                    return;
                }
            }
            let Some(k) = (0..n).rev().find(|&k| choice[k] + 1 < options[k].len()) else {
                return;
            };
            choice[k] += 1;
            for c in choice.iter_mut().skip(k + 1) {
                *c = 0;
            }
        }
    }

    fn check(&mut self, star: Vec<usize>) {
        let names = (0..self.n).map(|i| format!("s{i}")).collect();
        let Ok(s) = BiUnaryAlgebra::from_flat(names, self.mult.clone(), star, None, None) else {
            return;
        };
        if restriction_witness(&s).is_some() || local_units(&s).is_some() {
            return;
        }
        if let Err(e) = infer_cosupport(&s) {
            let why = match &e {
                CosupportError::AxiomFail(w) => format!("{e} at {}", w.describe(&s)),
                _ => e.to_string(),
            };
            self.progress.found = Some((s, why));
        }
    }
}

pub fn search(max_order: usize, budget: Duration) -> Progress {
    let deadline = Instant::now() + budget;
    let mut progress = Progress::default();
    for n in 1..=max_order {
        let mut s = Search {
            n,
            mult: vec![UNSET; n * n],
            deadline,
            progress,
        };
        s.fill(0);
        progress = s.progress;
        if progress.found.is_some() || progress.timed_out {
            break;
        }
        progress.completed_order = n;
    }
    progress
}
