//! Natural partial orders, compatibility, joins and meets.

use super::{AlgebraError, BiUnaryAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `s ≤ t ⇔ s = t·s*`
    Star,
    /// `s ≤' t ⇔ s = s⁺·t`
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `s·t* = t·s*`
    Right,
    /// `t⁺·s = s⁺·t`
    Left,
    Bi,
}

pub fn nat_leq(s: &BiUnaryAlgebra, a: usize, b: usize, side: Side) -> Result<bool, AlgebraError> {
    match side {
        Side::Star => Ok(a == s.mul(b, s.star(a))),
        Side::Plus => {
            let ap = s.plus(a).ok_or(AlgebraError::NoPlusTable)?;
            Ok(a == s.mul(ap, b))
        }
    }
}

pub fn compatible(s: &BiUnaryAlgebra, a: usize, b: usize, mode: Mode) -> Result<bool, AlgebraError> {
    let right = || s.mul(a, s.star(b)) == s.mul(b, s.star(a));
    let left = || -> Result<bool, AlgebraError> {
        let ap = s.plus(a).ok_or(AlgebraError::NoPlusTable)?;
        let bp = s.plus(b).ok_or(AlgebraError::NoPlusTable)?;
        Ok(s.mul(bp, a) == s.mul(ap, b))
    };
    match mode {
        Mode::Right => Ok(right()),
        Mode::Left => left(),
        Mode::Bi => Ok(left()? && right()),
    }
}

/// A relation on `0..n` stored densely, with down- and up-set bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    words: usize,
    /// `down[t]` has bit `s` set iff `s ≤ t`.
    down: Vec<u64>,
    up: Vec<u64>,
}

impl Poset {
    pub fn natural(s: &BiUnaryAlgebra, side: Side) -> Self {
        let n = s.len();
        Self::from_fn(n, |a, b| nat_leq(s, a, b, side).unwrap_or(false))
    }

    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut down = vec![0u64; n * words];
        let mut up = vec![0u64; n * words];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    down[b * words + a / 64] |= 1 << (a % 64);
                    up[a * words + b / 64] |= 1 << (b % 64);
                }
            }
        }
        Self { n, words, down, up }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b * self.words + a / 64] >> (a % 64) & 1 == 1
    }

    pub fn down_set(&self, t: usize) -> Vec<usize> {
        (0..self.n).filter(|&a| self.leq(a, t)).collect()
    }

    pub fn up_set(&self, t: usize) -> Vec<usize> {
        (0..self.n).filter(|&b| self.leq(t, b)).collect()
    }

    pub fn down_bits(&self, t: usize) -> &[u64] {
        &self.down[t * self.words..(t + 1) * self.words]
    }

    pub fn up_bits(&self, t: usize) -> &[u64] {
        &self.up[t * self.words..(t + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// The unique least element of `set`, if there is one.
    pub fn minimum(&self, set: &[usize]) -> Option<usize> {
        let mut found = None;
        for &c in set {
            if set.iter().all(|&v| self.leq(c, v)) {
                if found.is_some() {
                    return None;
                }
                found = Some(c);
            }
        }
        found
    }

    pub fn maximum(&self, set: &[usize]) -> Option<usize> {
        let mut found = None;
        for &c in set {
            if set.iter().all(|&v| self.leq(v, c)) {
                if found.is_some() {
                    return None;
                }
                found = Some(c);
            }
        }
        found
    }

    pub fn upper_bounds(&self, set: &[usize]) -> Vec<usize> {
        let mut acc = vec![u64::MAX; self.words];
        for &s in set {
            for (w, b) in acc.iter_mut().zip(self.up_bits(s)) {
                *w &= b;
            }
        }
        bits_to_vec(&acc, self.n)
    }

    pub fn lower_bounds(&self, set: &[usize]) -> Vec<usize> {
        let mut acc = vec![u64::MAX; self.words];
        for &s in set {
            for (w, b) in acc.iter_mut().zip(self.down_bits(s)) {
                *w &= b;
            }
        }
        bits_to_vec(&acc, self.n)
    }

    /// Least upper bound of `set`; for an empty set this is the least
    /// element overall.
    pub fn join_of(&self, set: &[usize]) -> Option<usize> {
        self.minimum(&self.upper_bounds(set))
    }

    pub fn meet_of(&self, set: &[usize]) -> Option<usize> {
        self.maximum(&self.lower_bounds(set))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join_of(&[a, b])
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet_of(&[a, b])
    }
}

pub(crate) fn bits_to_vec(bits: &[u64], n: usize) -> Vec<usize> {
    (0..n).filter(|&i| bits[i / 64] >> (i % 64) & 1 == 1).collect()
}

impl BiUnaryAlgebra {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order().leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.order().join(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.order().meet(a, b)
    }

    pub fn join_of(&self, set: &[usize]) -> Option<usize> {
        self.order().join_of(set)
    }
}
