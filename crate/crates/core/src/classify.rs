//! Degree classification into high/low vertex sets and evaluation of the
//! degree-based sufficient conditions for k disjoint cycles.
//!
//! For an integer k >= 2, a vertex is *high* when its degree is at least 2k
//! and *low* when its degree is at most 2k-2; h and ℓ count them. Everything
//! here is a pure function of an immutable graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::packing::{self, SearchLimits, TriangleFilter};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Coefficient of k in the size condition `|G| >= ALPHA*k + 3i` used by the
/// [`Hypothesis::Induct`] check and mirrored by the reduction engine.
pub const ALPHA: usize = 16;

/// Per-k degree classification of a graph.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    pub k: usize,
    /// H_k: vertices of degree >= 2k.
    pub high: VertexSet,
    /// L_k: vertices of degree <= 2k-2.
    pub low: VertexSet,
    pub h: usize,
    pub ell: usize,
    /// V^i keyed by degree; only non-empty strata are present.
    pub strata: BTreeMap<usize, VertexSet>,
}

impl DegreeProfile {
    pub fn h_minus_ell(&self) -> i64 {
        self.h as i64 - self.ell as i64
    }

    /// V^i as a set (empty if no vertex has degree exactly i).
    pub fn stratum(&self, i: usize) -> VertexSet {
        self.strata
            .get(&i)
            .cloned()
            .unwrap_or_else(|| VertexSet::empty(self.high.universe()))
    }

    /// V^{>=i}.
    pub fn at_least(&self, i: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.high.universe());
        for (&d, vs) in self.strata.range(i..) {
            debug_assert!(d >= i);
            s.union_with(vs);
        }
        s
    }

    /// V^{<=i}.
    pub fn at_most(&self, i: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.high.universe());
        for (_, vs) in self.strata.range(..=i) {
            s.union_with(vs);
        }
        s
    }
}

/// Computes the degree profile for a given k >= 2.
pub fn classify(g: &Graph, k: usize) -> Result<DegreeProfile> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = g.n();
    let mut high = VertexSet::empty(n);
    let mut low = VertexSet::empty(n);
    let mut strata: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let d = g.degree(v);
        if d >= 2 * k {
            high.insert(v);
        } else if d + 2 <= 2 * k {
            low.insert(v);
        }
        strata
            .entry(d)
            .or_insert_with(|| VertexSet::empty(n))
            .insert(v);
    }
    let h = high.len();
    let ell = low.len();
    Ok(DegreeProfile {
        k,
        high,
        low,
        h,
        ell,
        strata,
    })
}

/// Sanity check that ℓ <= |G|/2 - k, which must hold whenever h - ℓ >= 2k
/// (because |G| >= h + ℓ). The precondition is enforced.
pub fn low_fraction_bound(g: &Graph, k: usize) -> Result<bool> {
    let profile = classify(g, k)?;
    if profile.h_minus_ell() < 2 * k as i64 {
        return Err(Error::Precondition(format!(
            "h - ell = {} < 2k = {}",
            profile.h_minus_ell(),
            2 * k
        )));
    }
    Ok(2 * profile.ell as i64 <= g.n() as i64 - 2 * k as i64)
}

/// The closed set of degree hypotheses known to the harness.
///
/// Each evaluates the premises of a sufficient condition for the conclusion
/// "G contains k disjoint cycles":
///
/// - `CorradiHajnal` (`CH`): |G| >= 3k and δ(G) >= 2k.
/// - `DiracErdos` (`DE`): k >= 3 and h - ℓ >= k² + 2k - 4.
/// - `HighLow3k` (`H3K`): h - ℓ >= 3k.
/// - `Main2k` (`MAIN2K`): |G| >= 19k and h - ℓ >= 2k.
/// - `Induct` (`INDUCT`): |G| >= 16k + 3i and h >= ℓ + 3k - i, for i <= k.
/// - `TwoKPlusT` (`T2KPLUST`): |G| >= 3k and h - ℓ >= 2k + t(G).
/// - `Cor9` (`COR9`): |G| >= 3k, h >= 2k, and δ(G) >= 2k - 1.
/// - `OneTriangle` (`ONETRI`): k >= 3, no two disjoint triangles, h - ℓ >= 2k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    CorradiHajnal,
    DiracErdos,
    HighLow3k,
    Main2k,
    Induct,
    TwoKPlusT,
    Cor9,
    OneTriangle,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 8] = [
        Hypothesis::CorradiHajnal,
        Hypothesis::DiracErdos,
        Hypothesis::HighLow3k,
        Hypothesis::Main2k,
        Hypothesis::Induct,
        Hypothesis::TwoKPlusT,
        Hypothesis::Cor9,
        Hypothesis::OneTriangle,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Hypothesis::CorradiHajnal => "CH",
            Hypothesis::DiracErdos => "DE",
            Hypothesis::HighLow3k => "H3K",
            Hypothesis::Main2k => "MAIN2K",
            Hypothesis::Induct => "INDUCT",
            Hypothesis::TwoKPlusT => "T2KPLUST",
            Hypothesis::Cor9 => "COR9",
            Hypothesis::OneTriangle => "ONETRI",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown hypothesis id {s:?}")))
    }
}

/// One checked quantity. The convention is uniform: the check passes iff
/// `value >= bound`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub value: i64,
    pub bound: i64,
}

impl Witness {
    fn new(name: &str, value: i64, bound: i64) -> Self {
        Witness {
            name: name.to_string(),
            value,
            bound,
        }
    }

    pub fn passes(&self) -> bool {
        self.value >= self.bound
    }

    fn slack(&self) -> i64 {
        self.value - self.bound
    }
}

/// Outcome of evaluating a hypothesis on a graph.
///
/// When the hypothesis fails, `witness` is the first failing quantity in the
/// check order; when it holds, the quantity with the least slack.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisVerdict {
    pub hypothesis: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    pub holds: bool,
    pub witness: Witness,
}

fn verdict(hyp: Hypothesis, k: usize, i: Option<i64>, checks: Vec<Witness>) -> HypothesisVerdict {
    debug_assert!(!checks.is_empty());
    let witness = match checks.iter().find(|w| !w.passes()) {
        Some(fail) => fail.clone(),
        None => checks
            .iter()
            .min_by_key(|w| w.slack())
            .expect("non-empty")
            .clone(),
    };
    HypothesisVerdict {
        hypothesis: hyp.id().to_string(),
        k,
        i,
        holds: witness.passes(),
        witness,
    }
}

/// Evaluates a hypothesis on `(g, k)`. `i` is consulted only by
/// [`Hypothesis::Induct`], which requires `i <= k`; it may be <= 0.
/// `limits` bounds the exact triangle-packing search that `T2KPLUST` and
/// `ONETRI` need for t(G).
pub fn check_hypothesis(
    g: &Graph,
    hyp: Hypothesis,
    k: usize,
    i: Option<i64>,
    limits: &SearchLimits,
) -> Result<HypothesisVerdict> {
    let profile = classify(g, k)?;
    let n = g.n() as i64;
    let hl = profile.h_minus_ell();
    let k64 = k as i64;
    let checks = match hyp {
        Hypothesis::CorradiHajnal => vec![
            Witness::new("n", n, 3 * k64),
            Witness::new("min_degree", g.min_degree() as i64, 2 * k64),
        ],
        Hypothesis::DiracErdos => vec![
            Witness::new("k", k64, 3),
            Witness::new("h_minus_ell", hl, k64 * k64 + 2 * k64 - 4),
        ],
        Hypothesis::HighLow3k => vec![Witness::new("h_minus_ell", hl, 3 * k64)],
        Hypothesis::Main2k => vec![
            Witness::new("n", n, 19 * k64),
            Witness::new("h_minus_ell", hl, 2 * k64),
        ],
        Hypothesis::Induct => {
            let i = i.ok_or_else(|| {
                Error::InvalidArgument("INDUCT requires the induction parameter i".into())
            })?;
            if i > k64 {
                return Err(Error::InvalidArgument(format!("INDUCT requires i <= k, got i = {i}")));
            }
            vec![
                Witness::new("n", n, ALPHA as i64 * k64 + 3 * i),
                Witness::new("h_minus_ell", hl, 3 * k64 - i),
            ]
        }
        Hypothesis::TwoKPlusT => {
            let size = Witness::new("n", n, 3 * k64);
            if !size.passes() {
                vec![size]
            } else {
                let t = packing::max_triangle_count(g, limits)? as i64;
                vec![size, Witness::new("h_minus_ell_minus_t", hl - t, 2 * k64)]
            }
        }
        Hypothesis::Cor9 => vec![
            Witness::new("n", n, 3 * k64),
            Witness::new("h", profile.h as i64, 2 * k64),
            Witness::new("min_degree", g.min_degree() as i64, 2 * k64 - 1),
        ],
        Hypothesis::OneTriangle => {
            let kcheck = Witness::new("k", k64, 3);
            if !kcheck.passes() {
                vec![kcheck]
            } else {
                let t = packing::max_triangle_count(g, limits)? as i64;
                vec![
                    kcheck,
                    Witness::new("two_disjoint_triangles_absent", i64::from(t <= 1), 1),
                    Witness::new("h_minus_ell", hl, 2 * k64),
                ]
            }
        }
    };
    let i_echo = if hyp == Hypothesis::Induct { i } else { None };
    Ok(verdict(hyp, k, i_echo, checks))
}

/// Filter for triangle enumeration: a triangle is *good* when it contains a
/// low vertex. Convenience wrapper kept next to the classification logic.
pub fn good_filter(k: usize) -> TriangleFilter {
    TriangleFilter::Good { k }
}
