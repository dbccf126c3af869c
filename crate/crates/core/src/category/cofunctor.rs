//! Cofunctors `C ⇝ D`: an anchor `f: D₀ → C₀`, an action of `C` on `D₀`
//! along `f`, and a lifting `ρ₁` of pairs `(s, x)` to arrows of `D`.

use std::sync::Arc;

use thiserror::Error;

use super::slice::{slice_semigroup, SliceError, SliceSemigroup};
use super::FinCat;
use crate::algebra::{check_morphism, MorphismType, SemigroupMorphism};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CofunctorError {
    #[error("bad table shape: {0}")]
    BadShape(String),
    #[error("law {law} fails at {witness}")]
    Law { law: &'static str, witness: String },
    #[error("middle categories differ")]
    CompositionMismatch,
    #[error("not bijective on arrows: {0}")]
    NotBijectiveOnArrows(String),
    #[error("not star-bijective: {0}")]
    NotStarBijective(String),
    #[error(transparent)]
    Slice(#[from] SliceError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofunctor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    anchor: Vec<usize>,
    mu: Vec<Option<usize>>,
    rho1: Vec<Option<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CofunctorFlags {
    pub injective_on_arrows: bool,
    pub surjective_on_arrows: bool,
    pub bijective_on_arrows: bool,
    pub action_injective: bool,
}

impl Cofunctor {
    /// Tables are indexed by `s * |D₀| + x`; an entry is present exactly
    /// when `dom(s) = f(x)`. All action and lifting laws are checked.
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        anchor: Vec<usize>,
        mu: Vec<Option<usize>>,
        rho1: Vec<Option<usize>>,
    ) -> Result<Self, CofunctorError> {
        let (c, d) = (&source, &target);
        let k = d.n_objects();
        let cells = c.n_arrows() * k;
        if anchor.len() != k || mu.len() != cells || rho1.len() != cells {
            return Err(CofunctorError::BadShape(format!(
                "anchor {} (want {k}), mu {} and rho1 {} (want {cells})",
                anchor.len(),
                mu.len(),
                rho1.len()
            )));
        }
        if anchor.iter().any(|&o| o >= c.n_objects())
            || mu.iter().flatten().any(|&o| o >= k)
            || rho1.iter().flatten().any(|&a| a >= d.n_arrows())
        {
            return Err(CofunctorError::BadShape("index out of range".into()));
        }
        let f = Self {
            source,
            target,
            anchor,
            mu,
            rho1,
        };
        f.validate()?;
        Ok(f)
    }

    /// Builds the tables from closures evaluated on composable pairs.
    pub fn from_fns(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        anchor: Vec<usize>,
        mut act: impl FnMut(usize, usize) -> (usize, usize),
    ) -> Result<Self, CofunctorError> {
        let k = target.n_objects();
        let mut mu = vec![None; source.n_arrows() * k];
        let mut rho1 = vec![None; source.n_arrows() * k];
        for s in 0..source.n_arrows() {
            for x in 0..k {
                if anchor.get(x) == Some(&source.dom(s)) {
                    let (m, r) = act(s, x);
                    mu[s * k + x] = Some(m);
                    rho1[s * k + x] = Some(r);
                }
            }
        }
        Self::new(source, target, anchor, mu, rho1)
    }

    pub fn identity(c: Arc<FinCat>) -> Self {
        let anchor = (0..c.n_objects()).collect();
        let cc = c.clone();
        Self::from_fns(c, cc.clone(), anchor, |s, _| (cc.cod(s), s)).expect("identity is valid")
    }

    fn validate(&self) -> Result<(), CofunctorError> {
        let (c, d) = (&*self.source, &*self.target);
        let law = |law, witness: String| Err(CofunctorError::Law { law, witness });
        let k = d.n_objects();
        for s in 0..c.n_arrows() {
            for x in 0..k {
                let defined = c.dom(s) == self.anchor[x];
                if self.mu[s * k + x].is_some() != defined || self.rho1[s * k + x].is_some() != defined {
                    return law(
                        "domain of action",
                        format!("({}, {})", c.arrow_name(s), d.object_name(x)),
                    );
                }
            }
        }
        for s in 0..c.n_arrows() {
            for x in 0..k {
                let Some(sx) = self.act(s, x) else { continue };
                let w = || format!("({}, {})", c.arrow_name(s), d.object_name(x));
                if self.anchor[sx] != c.cod(s) {
                    return law("A1", w());
                }
                let r = self.rho(s, x).unwrap();
                if d.dom(r) != x || d.cod(r) != sx {
                    return law("rho endpoints", w());
                }
            }
        }
        for x in 0..k {
            let u = c.unit(self.anchor[x]);
            if self.act(u, x) != Some(x) {
                return law("A3", d.object_name(x).to_string());
            }
            if self.rho(u, x) != Some(d.unit(x)) {
                return law("rho units", d.object_name(x).to_string());
            }
        }
        for s in 0..c.n_arrows() {
            for t in 0..c.n_arrows() {
                let Some(st) = c.comp(s, t) else { continue };
                for x in 0..k {
                    let Some(tx) = self.act(t, x) else { continue };
                    let w = || format!("({}, {}, {})", c.arrow_name(s), c.arrow_name(t), d.object_name(x));
                    if self.act(s, tx) != self.act(st, x) {
                        return law("A2", w());
                    }
                    let lhs = d.comp(self.rho(s, tx).unwrap(), self.rho(t, x).unwrap());
                    if lhs != self.rho(st, x) {
                        return law("rho functorial", w());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn anchor(&self) -> &[usize] {
        &self.anchor
    }

    /// `s·x`, defined iff `dom(s) = f(x)`.
    pub fn act(&self, s: usize, x: usize) -> Option<usize> {
        self.mu[s * self.target.n_objects() + x]
    }

    pub fn rho(&self, s: usize, x: usize) -> Option<usize> {
        self.rho1[s * self.target.n_objects() + x]
    }

    pub fn mu_table(&self) -> &[Option<usize>] {
        &self.mu
    }

    pub fn rho_table(&self) -> &[Option<usize>] {
        &self.rho1
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.target.n_objects();
        (0..self.source.n_arrows())
            .flat_map(move |s| (0..k).map(move |x| (s, x)))
            .filter(|&(s, x)| self.act(s, x).is_some())
    }

    pub fn flags(&self) -> CofunctorFlags {
        let d = &self.target;
        let mut hits = vec![0usize; d.n_arrows()];
        for (s, x) in self.pairs() {
            hits[self.rho(s, x).unwrap()] += 1;
        }
        let injective = hits.iter().all(|&h| h <= 1);
        let surjective = hits.iter().all(|&h| h >= 1);
        let action_injective = (0..self.source.n_arrows()).all(|s| {
            let mut seen = vec![false; d.n_objects()];
            (0..d.n_objects())
                .filter_map(|x| self.act(s, x))
                .all(|y| !std::mem::replace(&mut seen[y], true))
        });
        CofunctorFlags {
            injective_on_arrows: injective,
            surjective_on_arrows: surjective,
            bijective_on_arrows: injective && surjective,
            action_injective,
        }
    }

    /// First pair of distinct pairs lifted to the same arrow.
    pub fn non_injective_witness(&self) -> Option<String> {
        let mut first = vec![None; self.target.n_arrows()];
        for (s, x) in self.pairs() {
            let r = self.rho(s, x).unwrap();
            if let Some((s0, x0)) = first[r] {
                return Some(format!(
                    "ρ₁({}, {}) = ρ₁({}, {}) = {}",
                    self.source.arrow_name(s0),
                    self.target.object_name(x0),
                    self.source.arrow_name(s),
                    self.target.object_name(x),
                    self.target.arrow_name(r)
                ));
            }
            first[r] = Some((s, x));
        }
        None
    }

    /// `G∘F` for `F = self: C ⇝ D` and `G: D ⇝ E`.
    pub fn then(&self, g: &Cofunctor) -> Result<Cofunctor, CofunctorError> {
        if *self.target != *g.source {
            return Err(CofunctorError::CompositionMismatch);
        }
        let anchor = g.anchor.iter().map(|&y| self.anchor[y]).collect();
        Cofunctor::from_fns(self.source.clone(), g.target.clone(), anchor, |s, x| {
            let lifted = self.rho(s, g.anchor[x]).expect("composable by anchor");
            (g.act(lifted, x).unwrap(), g.rho(lifted, x).unwrap())
        })
    }

    /// An anchor bijection with `ρ₁` a bijection onto `D₁` and the action
    /// transported from the natural one: `s·x = f⁻¹(cod(s))`.
    pub fn isomorphism_witness(&self) -> Option<String> {
        let (c, d) = (&self.source, &self.target);
        if c.n_objects() != d.n_objects() {
            return Some("object counts differ".into());
        }
        let mut inv = vec![usize::MAX; c.n_objects()];
        for (x, &o) in self.anchor.iter().enumerate() {
            if inv[o] != usize::MAX {
                return Some(format!("anchor not injective at {}", d.object_name(x)));
            }
            inv[o] = x;
        }
        if let Some(w) = self.non_injective_witness() {
            return Some(w);
        }
        if !self.flags().surjective_on_arrows {
            return Some("ρ₁ not surjective".into());
        }
        self.pairs()
            .find(|&(s, x)| self.act(s, x) != Some(inv[c.cod(s)]))
            .map(|(s, x)| format!("{}·{} is not f⁻¹(cod)", c.arrow_name(s), d.object_name(x)))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.isomorphism_witness().is_none()
    }

    /// `F_*(A) = {ρ₁(s, x) : s ∈ A, dom(s) = f(x)}`.
    pub fn pushforward(&self, arrows: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = arrows
            .iter()
            .flat_map(|&s| (0..self.target.n_objects()).filter_map(move |x| self.rho(s, x)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `F_*` as a table morphism between existing slice semigroups.
    pub fn pushforward_between(
        &self,
        source: &SliceSemigroup,
        target: &SliceSemigroup,
    ) -> Result<SemigroupMorphism, CofunctorError> {
        if *source.category != *self.source || *target.category != *self.target {
            return Err(CofunctorError::CompositionMismatch);
        }
        let map = (0..source.len())
            .map(|i| {
                let img = self.pushforward(source.arrows_of(i));
                target.index_of(&img).ok_or_else(|| CofunctorError::Law {
                    law: "pushforward is a slice",
                    witness: source.algebra.name(i).to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        SemigroupMorphism::new(source.algebra.clone(), target.algebra.clone(), map)
            .map_err(|e| CofunctorError::BadShape(e.to_string()))
    }

    /// `F_*: C^a → D^a` together with the checks tying cofunctor flags to
    /// morphism types.
    pub fn to_morphism(&self, max_size: usize) -> Result<(SemigroupMorphism, Report), CofunctorError> {
        let ss = slice_semigroup(self.source.clone(), false, max_size)?;
        let ts = slice_semigroup(self.target.clone(), false, max_size)?;
        let m = self.pushforward_between(&ss, &ts)?;
        let flags = self.flags();
        let mut report = Report::new();
        report.record("pushforward.morphism", check_morphism(&m, MorphismType::One).witness);
        if flags.injective_on_arrows {
            report.record(
                "pushforward.injective_gives_weak_meets",
                check_morphism(&m, MorphismType::Two).witness,
            );
        }
        if flags.surjective_on_arrows {
            report.record(
                "pushforward.surjective_gives_proper",
                check_morphism(&m, MorphismType::Three).witness,
            );
        }
        if flags.action_injective {
            let sa = &ss.algebra;
            let bislice = |i: usize| ts.slice(i).is_bislice();
            let bad = (0..sa.len()).find(|&i| ss.slice(i).is_bislice() && !bislice(m.apply(i)));
            report.record(
                "pushforward.injective_action_keeps_bislices",
                bad.map(|i| sa.name(i).to_string()),
            );
        }
        Ok((m, report))
    }
}
