//! Covering (star-bijective) functors and their correspondence with
//! cofunctors that are bijective on arrows.

use std::sync::Arc;

use super::cofunctor::{Cofunctor, CofunctorError};
use super::FinCat;

/// A functor `g: D → C` given by object and arrow tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringFunctor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
}

impl CoveringFunctor {
    /// Checks functoriality and star-bijectivity: for each object `x` of
    /// `D`, `f₁` restricted to arrows with domain `x` is a bijection onto
    /// the arrows of `C` with domain `f₀(x)`.
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        f0: Vec<usize>,
        f1: Vec<usize>,
    ) -> Result<Self, CofunctorError> {
        let (d, c) = (&source, &target);
        if f0.len() != d.n_objects() || f1.len() != d.n_arrows() {
            return Err(CofunctorError::BadShape("functor table lengths".into()));
        }
        if f0.iter().any(|&o| o >= c.n_objects()) || f1.iter().any(|&a| a >= c.n_arrows()) {
            return Err(CofunctorError::BadShape("index out of range".into()));
        }
        let law = |law, witness: String| Err(CofunctorError::Law { law, witness });
        for t in 0..d.n_arrows() {
            if c.dom(f1[t]) != f0[d.dom(t)] || c.cod(f1[t]) != f0[d.cod(t)] {
                return law("functor endpoints", d.arrow_name(t).to_string());
            }
        }
        for x in 0..d.n_objects() {
            if f1[d.unit(x)] != c.unit(f0[x]) {
                return law("functor units", d.object_name(x).to_string());
            }
        }
        for a in 0..d.n_arrows() {
            for b in 0..d.n_arrows() {
                if let Some(ab) = d.comp(a, b) {
                    if c.comp(f1[a], f1[b]) != Some(f1[ab]) {
                        return law(
                            "functor composition",
                            format!("({}, {})", d.arrow_name(a), d.arrow_name(b)),
                        );
                    }
                }
            }
        }
        for (x, &fx) in f0.iter().enumerate() {
            let star = d.star_of(x);
            for (i, &p) in star.iter().enumerate() {
                if let Some(&q) = star[i + 1..].iter().find(|&&q| f1[q] == f1[p]) {
                    return Err(CofunctorError::NotStarBijective(format!(
                        "star-injectivity: {} and {} at {}",
                        d.arrow_name(p),
                        d.arrow_name(q),
                        d.object_name(x)
                    )));
                }
            }
            for y in c.star_of(fx) {
                if !star.iter().any(|&t| f1[t] == y) {
                    return Err(CofunctorError::NotStarBijective(format!(
                        "star-surjectivity: {} has no lift at {}",
                        c.arrow_name(y),
                        d.object_name(x)
                    )));
                }
            }
        }
        Ok(Self { source, target, f0, f1 })
    }

    /// `f₁(ρ₁(s, x)) = s`, `f₀ = f`.
    pub fn from_cofunctor(f: &Cofunctor) -> Result<Self, CofunctorError> {
        let (c, d) = (&f.source, &f.target);
        if let Some(w) = f.non_injective_witness() {
            return Err(CofunctorError::NotBijectiveOnArrows(w));
        }
        let mut f1 = vec![usize::MAX; d.n_arrows()];
        for s in 0..c.n_arrows() {
            for x in 0..d.n_objects() {
                if let Some(t) = f.rho(s, x) {
                    f1[t] = s;
                }
            }
        }
        if let Some(t) = f1.iter().position(|&s| s == usize::MAX) {
            return Err(CofunctorError::NotBijectiveOnArrows(format!(
                "{} is not lifted",
                d.arrow_name(t)
            )));
        }
        Self::new(d.clone(), c.clone(), f.anchor().to_vec(), f1)
    }

    /// `s·x = cod(t)` and `ρ₁(s, x) = t` for the unique `t` over `s` at `x`.
    pub fn to_cofunctor(&self) -> Result<Cofunctor, CofunctorError> {
        let (d, c) = (&self.source, &self.target);
        Cofunctor::from_fns(c.clone(), d.clone(), self.f0.clone(), |s, x| {
            let t = d
                .star_of(x)
                .into_iter()
                .find(|&t| self.f1[t] == s)
                .expect("star-surjective");
            (d.cod(t), t)
        })
    }
}
