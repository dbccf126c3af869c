//! Exhaustive evaluation of the axiom systems and Boolean conditions.
//!
//! Every universal axiom is checked over tuples in lexicographic order so
//! a failure always reports the same (first) counterexample.

use std::collections::BTreeMap;
use std::fmt;

use super::elements::{deterministic_sets, infer_cosupport, partial_isomorphisms, projection_lattice};
use super::order::{compatible, Mode};
use super::BiUnaryAlgebra;

/// A named axiom together with the first tuple violating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: &'static str,
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn new(axiom: &'static str, elements: Vec<usize>) -> Self {
        Self { axiom, elements }
    }

    /// Renders the tuple with element names.
    pub fn describe(&self, s: &BiUnaryAlgebra) -> String {
        let parts: Vec<&str> = self
            .elements
            .iter()
            .map(|&e| if e < s.len() { s.name(e) } else { "?" })
            .collect();
        format!("{} ({})", self.axiom, parts.join(", "))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.axiom, self.elements)
    }
}

fn first1(n: usize, ok: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&x| !ok(x)).map(|x| vec![x])
}

fn first2(n: usize, ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            if !ok(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn law(name: &'static str, tuple: Option<Vec<usize>>) -> Option<Witness> {
    tuple.map(|t| Witness::new(name, t))
}

pub(crate) fn ehresmann_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let n = s.len();
    let m = |a, b| s.mul(a, b);
    let st = |a| s.star(a);
    law("xx*=x", first1(n, |x| m(x, st(x)) == x))
        .or_else(|| law("x*y*=y*x*", first2(n, |x, y| m(st(x), st(y)) == m(st(y), st(x)))))
        .or_else(|| {
            law(
                "x*y*=(x*y*)*",
                first2(n, |x, y| {
                    let p = m(st(x), st(y));
                    p == st(p)
                }),
            )
        })
        .or_else(|| law("(xy)*=(x*y)*", first2(n, |x, y| st(m(x, y)) == st(m(st(x), y)))))
}

pub(crate) fn coehresmann_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let Some(pl) = s.plus_table() else {
        return Some(Witness::new("cosupport table present", vec![]));
    };
    let n = s.len();
    let m = |a, b| s.mul(a, b);
    let p = |a: usize| pl[a];
    law("x+x=x", first1(n, |x| m(p(x), x) == x))
        .or_else(|| law("x+y+=y+x+", first2(n, |x, y| m(p(x), p(y)) == m(p(y), p(x)))))
        .or_else(|| {
            law(
                "x+y+=(x+y+)+",
                first2(n, |x, y| {
                    let q = m(p(x), p(y));
                    q == p(q)
                }),
            )
        })
        .or_else(|| law("(xy)+=(xy+)+", first2(n, |x, y| p(m(x, y)) == p(m(x, p(y))))))
}

pub(crate) fn linking_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let Some(pl) = s.plus_table() else {
        return Some(Witness::new("cosupport table present", vec![]));
    };
    let n = s.len();
    law("(x+)*=x+", first1(n, |x| s.star(pl[x]) == pl[x]))
        .or_else(|| law("(x*)+=x*", first1(n, |x| pl[s.star(x)] == s.star(x))))
}

pub fn restriction_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    ehresmann_witness(s).or_else(|| {
        law(
            "x*y=y(xy)*",
            first2(s.len(), |x, y| s.mul(s.star(x), y) == s.mul(y, s.star(s.mul(x, y)))),
        )
    })
}

pub(crate) fn corestriction_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    coehresmann_witness(s).or_else(|| {
        let pl = s.plus_table()?;
        law(
            "xy+=(xy)+x",
            first2(s.len(), |x, y| s.mul(x, pl[y]) == s.mul(pl[s.mul(x, y)], x)),
        )
    })
}

fn zero_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    match s.zero() {
        Some(_) => None,
        None => Some(Witness::new("MissingZeroProjection", vec![])),
    }
}

fn local_units_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let p: Vec<usize> = (0..s.len()).filter(|&e| s.is_projection(e)).collect();
    law("local units", first1(s.len(), |x| p.iter().any(|&e| s.mul(e, x) == x)))
}

fn br1_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    law(
        "BR1",
        first2(s.len(), |x, y| {
            !compatible(s, x, y, Mode::Right).unwrap_or(false) || s.join(x, y).is_some()
        }),
    )
}

fn br1_bounded_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let ord = s.order();
    law(
        "BR1'",
        first2(s.len(), |x, y| {
            let ub = ord.upper_bounds(&[x, y]);
            ub.is_empty() || ord.minimum(&ub).is_some()
        }),
    )
}

fn bbr1_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    if !s.has_plus() {
        return Some(Witness::new("cosupport table present", vec![]));
    }
    law(
        "BBR1",
        first2(s.len(), |x, y| {
            !compatible(s, x, y, Mode::Bi).unwrap_or(false) || s.join(x, y).is_some()
        }),
    )
}

fn br2_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    projection_lattice(s).err()
}

fn br3_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let n = s.len();
    for x in 0..n {
        for y in 0..n {
            let Some(j) = s.join(x, y) else { continue };
            for u in 0..n {
                if s.join(s.mul(x, u), s.mul(y, u)) != Some(s.mul(j, u)) {
                    return Some(Witness::new("BR3", vec![x, y, u]));
                }
            }
        }
    }
    None
}

/// First failing component of the preBoolean restriction conditions.
pub fn preboolean_restriction_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    restriction_witness(s)
        .or_else(|| zero_witness(s))
        .or_else(|| br1_bounded_witness(s))
        .or_else(|| br2_witness(s))
        .or_else(|| br3_witness(s))
}

pub fn boolean_restriction_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    restriction_witness(s)
        .or_else(|| zero_witness(s))
        .or_else(|| br1_witness(s))
        .or_else(|| br2_witness(s))
        .or_else(|| br3_witness(s))
}

pub fn local_units(s: &BiUnaryAlgebra) -> Option<Witness> {
    local_units_witness(s)
}

fn inverse_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    let n = s.len();
    let idem: Vec<usize> = (0..n).filter(|&e| s.is_idempotent(e)).collect();
    law(
        "regular",
        first1(n, |x| {
            (0..n).any(|y| s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y)
        }),
    )
    .or_else(|| {
        for &e in &idem {
            for &f in &idem {
                if s.mul(e, f) != s.mul(f, e) {
                    return Some(Witness::new("idempotents commute", vec![e, f]));
                }
            }
        }
        None
    })
}

fn meets_witness(s: &BiUnaryAlgebra) -> Option<Witness> {
    law("binary meets", first2(s.len(), |x, y| s.meet(x, y).is_some()))
}

/// `s` equals the join of its lower bounds drawn from `pool`.
fn joins_from_witness(s: &BiUnaryAlgebra, pool: &[usize], name: &'static str) -> Option<Witness> {
    let ord = s.order();
    law(
        name,
        first1(s.len(), |x| {
            let below: Vec<usize> = pool.iter().copied().filter(|&b| ord.leq(b, x)).collect();
            ord.join_of(&below) == Some(x)
        }),
    )
}

/// Flag values with the first witness recorded for each false flag.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraClassification {
    pub ehresmann: bool,
    pub coehresmann: bool,
    pub biehresmann: bool,
    pub restriction: bool,
    pub corestriction: bool,
    pub birestriction: bool,
    pub range: bool,
    pub has_zero_projection: bool,
    pub has_local_units: bool,
    pub preboolean_restriction: bool,
    pub boolean_restriction: bool,
    pub preboolean_birestriction: bool,
    pub boolean_birestriction: bool,
    pub boolean_range: bool,
    pub etale_range: bool,
    pub groupoidal_etale: bool,
    pub inverse: bool,
    pub has_binary_meets: bool,
    /// The cosupport was absent from the input and inferred.
    pub plus_inferred: bool,
    pub witnesses: BTreeMap<&'static str, Witness>,
}

impl AlgebraClassification {
    pub fn flags(&self) -> [(&'static str, bool); 18] {
        [
            ("ehresmann", self.ehresmann),
            ("coehresmann", self.coehresmann),
            ("biehresmann", self.biehresmann),
            ("restriction", self.restriction),
            ("corestriction", self.corestriction),
            ("birestriction", self.birestriction),
            ("range", self.range),
            ("has_zero_projection", self.has_zero_projection),
            ("has_local_units", self.has_local_units),
            ("preboolean_restriction", self.preboolean_restriction),
            ("boolean_restriction", self.boolean_restriction),
            ("preboolean_birestriction", self.preboolean_birestriction),
            ("boolean_birestriction", self.boolean_birestriction),
            ("boolean_range", self.boolean_range),
            ("etale_range", self.etale_range),
            ("groupoidal_etale", self.groupoidal_etale),
            ("inverse", self.inverse),
            ("has_binary_meets", self.has_binary_meets),
        ]
    }

    pub fn witness(&self, flag: &str) -> Option<&Witness> {
        self.witnesses.get(flag)
    }
}

/// Classifies `s`. Without a cosupport table, one is inferred when
/// possible and the biEhresmann-side flags are evaluated against it.
pub fn classify(s: &BiUnaryAlgebra) -> AlgebraClassification {
    let mut c = AlgebraClassification::default();
    let inferred;
    let s = if s.has_plus() {
        s
    } else {
        match infer_cosupport(s) {
            Ok(plus) => {
                inferred = s.with_plus(Some(plus)).expect("table in range");
                c.plus_inferred = true;
                &inferred
            }
            Err(_) => s,
        }
    };
    let mut w = BTreeMap::new();
    let mut set = |name: &'static str, res: Option<Witness>| -> bool {
        match res {
            None => true,
            Some(x) => {
                w.insert(name, x);
                false
            }
        }
    };

    let ehr = ehresmann_witness(s);
    let coehr = coehresmann_witness(s);
    let link = linking_witness(s);
    let restr = restriction_witness(s);
    let corestr = corestriction_witness(s);
    let zero = zero_witness(s);
    let br1 = br1_witness(s);
    let br1b = br1_bounded_witness(s);
    let bbr1 = bbr1_witness(s);
    let br2 = br2_witness(s);
    let br3 = br3_witness(s);
    let biehr = ehr.clone().or_else(|| coehr.clone()).or_else(|| link.clone());

    c.ehresmann = set("ehresmann", ehr);
    c.coehresmann = set("coehresmann", coehr);
    c.biehresmann = set("biehresmann", biehr.clone());
    c.restriction = set("restriction", restr.clone());
    c.corestriction = set("corestriction", corestr.clone());
    let birestr = biehr.clone().or_else(|| restr.clone()).or_else(|| corestr.clone());
    c.birestriction = set("birestriction", birestr.clone());
    let range = biehr.or_else(|| restr.clone());
    c.range = set("range", range.clone());
    c.has_zero_projection = set("has_zero_projection", zero.clone());
    c.has_local_units = set("has_local_units", local_units_witness(s));

    let pre_r = restr
        .clone()
        .or_else(|| zero.clone())
        .or_else(|| br1b.clone())
        .or_else(|| br2.clone())
        .or_else(|| br3.clone());
    c.preboolean_restriction = set("preboolean_restriction", pre_r);
    let bool_r = restr.or_else(|| zero.clone()).or(br1).or_else(|| br2.clone()).or(br3);
    c.boolean_restriction = set("boolean_restriction", bool_r.clone());
    let pre_b = birestr
        .clone()
        .or_else(|| zero.clone())
        .or(br1b)
        .or_else(|| br2.clone());
    c.preboolean_birestriction = set("preboolean_birestriction", pre_b);
    let bool_b = birestr.or(zero).or(bbr1).or(br2);
    c.boolean_birestriction = set("boolean_birestriction", bool_b);
    let bool_range = range.or(bool_r);
    let bool_range_ok = bool_range.is_none();
    c.boolean_range = set("boolean_range", bool_range.clone());

    let etale = if bool_range_ok {
        let bd = deterministic_sets(s).map(|d| d.bideterministic).unwrap_or_default();
        joins_from_witness(s, &bd, "join of bideterministic lower bounds")
    } else {
        bool_range
    };
    let etale_ok = etale.is_none();
    c.etale_range = set("etale_range", etale.clone());
    let groupoidal = if etale_ok {
        let isos: Vec<usize> = partial_isomorphisms(s).into_iter().map(|(a, _)| a).collect();
        joins_from_witness(s, &isos, "join of partial-isomorphism lower bounds")
    } else {
        etale
    };
    c.groupoidal_etale = set("groupoidal_etale", groupoidal);
    c.inverse = set("inverse", inverse_witness(s));
    c.has_binary_meets = set("has_binary_meets", meets_witness(s));
    c.witnesses = w;
    c
}
