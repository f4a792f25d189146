//! Generators for the sharpness constructions and exceptional graphs, each
//! with a machine-checkable expected profile.
//!
//! Canonical vertex numbering is part of the contract so that serialized
//! outputs are stable:
//!
//! - `clique_minus` (K_n minus the edges of a K_{n-2k+1}): clique part on
//!   0..2k-1, independent part on 2k-1..n.
//! - `g0`: K_{3k-1} on 0..3k-2 with the edges inside S = {0..k-1} removed,
//!   plus the extra vertex x = 3k-1 joined to S.
//! - `g1`: g0 plus k leaves on x, appended last (ids 3k..4k-1).
//! - `bipartite_sharp` (K_{n-2k+1,2k-1}): big side first.
//! - `kky_exception` (2K_k ∨ K̄_k): the two K_k's on 0..k-1 and k..2k-1,
//!   the independent k vertices last.
//! - `wheel`: hub 0, rim 1..n in cyclic order.
//! - `sk` (K_m with one edge subdivided): K_m on 0..m-1 minus the edge
//!   (0,1), plus the subdivision vertex m adjacent to 0 and 1.

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use std::fmt;
use std::str::FromStr;

/// The generated families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    CliqueMinus,
    G0,
    G1,
    BipartiteSharp,
    KkyException,
    Wheel,
    Sk,
    Complete,
    CompleteBipartite,
    Cycle,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::CliqueMinus,
        Family::G0,
        Family::G1,
        Family::BipartiteSharp,
        Family::KkyException,
        Family::Wheel,
        Family::Sk,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Cycle,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Family::CliqueMinus => "clique_minus",
            Family::G0 => "g0",
            Family::G1 => "g1",
            Family::BipartiteSharp => "bipartite_sharp",
            Family::KkyException => "kky_exception",
            Family::Wheel => "wheel",
            Family::Sk => "sk",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Cycle => "cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, k: Option<usize>, n: Option<usize>, m: Option<usize>) -> Self {
        FamilySpec { family, k, n, m }
    }

    pub fn with_k(family: Family, k: usize) -> Self {
        FamilySpec::new(family, Some(k), None, None)
    }

    pub fn with_k_n(family: Family, k: usize, n: usize) -> Self {
        FamilySpec::new(family, Some(k), Some(n), None)
    }

    pub fn with_n(family: Family, n: usize) -> Self {
        FamilySpec::new(family, None, Some(n), None)
    }

    fn need_k(&self) -> Result<usize> {
        let k = self
            .k
            .ok_or_else(|| Error::InvalidArgument(format!("{} requires k", self.family)))?;
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        Ok(k)
    }

    fn need_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::InvalidArgument(format!("{} requires n", self.family)))
    }

    fn need_m(&self) -> Result<usize> {
        self.m
            .ok_or_else(|| Error::InvalidArgument(format!("{} requires m", self.family)))
    }
}

/// Builds the requested construction with its canonical numbering.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec.family {
        Family::CliqueMinus => {
            let k = spec.need_k()?;
            let n = spec.need_n()?;
            if n < 3 * k {
                return Err(Error::InvalidArgument(format!(
                    "clique_minus requires n >= 3k (n = {n}, k = {k})"
                )));
            }
            // K_n minus all edges among the last n-2k+1 vertices.
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if u < 2 * k - 1 {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            Ok(g)
        }
        Family::G0 => {
            let k = spec.need_k()?;
            let core = 3 * k - 1;
            let mut g = Graph::empty(core + 1);
            for u in 0..core {
                for v in (u + 1)..core {
                    // S = {0..k-1} is made independent.
                    if !(u < k && v < k) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            let x = core;
            for s in 0..k {
                g.add_edge_unchecked(x, s);
            }
            Ok(g)
        }
        Family::G1 => {
            let k = spec.need_k()?;
            let g0 = generate(&FamilySpec::with_k(Family::G0, k))?;
            let x = 3 * k - 1;
            let mut g = Graph::empty(4 * k);
            for (u, v) in g0.edges() {
                g.add_edge_unchecked(u, v);
            }
            for leaf in 3 * k..4 * k {
                g.add_edge_unchecked(x, leaf);
            }
            Ok(g)
        }
        Family::BipartiteSharp => {
            let k = spec.need_k()?;
            let n = spec.need_n()?;
            if n < 4 * k {
                return Err(Error::InvalidArgument(format!(
                    "bipartite_sharp requires n >= 4k (n = {n}, k = {k})"
                )));
            }
            Ok(graph::complete_bipartite(n - 2 * k + 1, 2 * k - 1))
        }
        Family::KkyException => {
            let k = spec.need_k()?;
            let two_kk = graph::complete(k).disjoint_union(&graph::complete(k));
            Ok(two_kk.join(&Graph::empty(k)))
        }
        Family::Wheel => {
            let n = spec.need_n()?;
            if n < 4 {
                return Err(Error::InvalidArgument(format!(
                    "a wheel needs at least 4 vertices (n = {n})"
                )));
            }
            Ok(Graph::empty(1).join(&graph::cycle_graph(n - 1)))
        }
        Family::Sk => {
            let m = spec.need_m()?;
            if m < 3 {
                return Err(Error::InvalidArgument(format!("sk requires m >= 3 (m = {m})")));
            }
            let mut g = Graph::empty(m + 1);
            for u in 0..m {
                for v in (u + 1)..m {
                    if !(u == 0 && v == 1) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            g.add_edge_unchecked(m, 0);
            g.add_edge_unchecked(m, 1);
            Ok(g)
        }
        Family::Complete => Ok(graph::complete(spec.need_n()?)),
        Family::CompleteBipartite => {
            Ok(graph::complete_bipartite(spec.need_n()?, spec.need_m()?))
        }
        Family::Cycle => {
            let n = spec.need_n()?;
            if n < 3 {
                return Err(Error::InvalidArgument(format!("cycle requires n >= 3 (n = {n})")));
            }
            Ok(graph::cycle_graph(n))
        }
    }
}

/// Claimed profile: vertex count, h - ℓ where it is determined by the
/// family (and k, when relevant), and exact c(G) where known. `None` means
/// unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedProfile {
    pub n: usize,
    pub h_minus_ell: Option<i64>,
    pub c_exact: Option<usize>,
    pub notes: &'static str,
}

/// The profile each generated graph must match (checked against `classify`
/// and the exact packing oracle by the test suites).
pub fn expected_profile(spec: &FamilySpec) -> Result<ExpectedProfile> {
    match spec.family {
        Family::CliqueMinus => {
            let k = spec.need_k()?;
            let n = spec.need_n()?;
            if n < 3 * k {
                return Err(Error::InvalidArgument("n < 3k".into()));
            }
            Ok(ExpectedProfile {
                n,
                h_minus_ell: Some(2 * k as i64 - 1),
                c_exact: Some(k - 1),
                notes: "min degree 2k-1; every cycle uses two clique vertices",
            })
        }
        Family::G0 => {
            let k = spec.need_k()?;
            Ok(ExpectedProfile {
                n: 3 * k,
                h_minus_ell: Some(3 * k as i64 - 2),
                c_exact: Some(k - 1),
                notes: "x lies in no triangle",
            })
        }
        Family::G1 => {
            let k = spec.need_k()?;
            Ok(ExpectedProfile {
                n: 4 * k,
                h_minus_ell: Some(2 * k as i64),
                c_exact: Some(k - 1),
                notes: "g0 plus k leaves on x",
            })
        }
        Family::BipartiteSharp => {
            let k = spec.need_k()?;
            let n = spec.need_n()?;
            if n < 4 * k {
                return Err(Error::InvalidArgument("n < 4k".into()));
            }
            Ok(ExpectedProfile {
                n,
                h_minus_ell: Some(2 * k as i64 - 1),
                c_exact: Some(k - 1),
                notes: "every cycle uses two vertices of the (2k-1)-side",
            })
        }
        Family::KkyException => {
            let k = spec.need_k()?;
            Ok(ExpectedProfile {
                n: 3 * k,
                h_minus_ell: Some(k as i64),
                c_exact: if k % 2 == 1 { Some(k - 1) } else { None },
                notes: "exceptional for odd k only; even k left unconstrained",
            })
        }
        Family::Wheel => {
            let n = spec.need_n()?;
            if n < 4 {
                return Err(Error::InvalidArgument("n < 4".into()));
            }
            let hl = match spec.k {
                Some(2) if n >= 5 => Some(1),
                _ => None,
            };
            Ok(ExpectedProfile {
                n,
                h_minus_ell: hl,
                c_exact: Some(1),
                notes: "the rim is the only cycle avoiding the hub",
            })
        }
        Family::Sk => {
            let m = spec.need_m()?;
            if m < 3 {
                return Err(Error::InvalidArgument("m < 3".into()));
            }
            Ok(ExpectedProfile {
                n: m + 1,
                h_minus_ell: None,
                c_exact: if m == 5 { Some(1) } else { None },
                notes: "degree sequence (2, m-1, ..., m-1)",
            })
        }
        Family::Complete => {
            let n = spec.need_n()?;
            let hl = spec.k.map(|k| {
                if n >= 2 * k + 1 {
                    n as i64
                } else if n <= 2 * k - 1 {
                    // Degrees n-1 <= 2k-2: everything is low.
                    -(n as i64)
                } else {
                    0
                }
            });
            Ok(ExpectedProfile {
                n,
                h_minus_ell: hl,
                c_exact: Some(n / 3),
                notes: "",
            })
        }
        Family::CompleteBipartite => {
            let a = spec.need_n()?;
            let b = spec.need_m()?;
            let hl = spec.k.map(|k| {
                let side = |size: usize, deg: usize| -> i64 {
                    if deg >= 2 * k {
                        size as i64
                    } else if deg + 2 <= 2 * k {
                        -(size as i64)
                    } else {
                        0
                    }
                };
                side(a, b) + side(b, a)
            });
            Ok(ExpectedProfile {
                n: a + b,
                h_minus_ell: hl,
                c_exact: Some(a.min(b) / 2),
                notes: "every cycle is even and uses two vertices per side",
            })
        }
        Family::Cycle => {
            let n = spec.need_n()?;
            if n < 3 {
                return Err(Error::InvalidArgument("n < 3".into()));
            }
            Ok(ExpectedProfile {
                n,
                h_minus_ell: spec.k.map(|_| -(n as i64)),
                c_exact: Some(1),
                notes: "degree 2 everywhere",
            })
        }
    }
}
