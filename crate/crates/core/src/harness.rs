//! Theorem verification: exhaustive over all labeled graphs at tiny n,
//! seeded random sampling at larger n, and a counterexample hunter for the
//! open range 4k+1 <= |G| < 19k.
//!
//! Work is split into fixed-size shards whose seeds derive from the master
//! seed and the shard index, so reports are byte-identical for a given seed
//! regardless of how many workers run them.

use crate::classify::{Hypothesis, ALPHA};
use crate::error::{Error, Result};
use crate::extremal::{self, Family, FamilySpec};
use crate::graph::Graph;
use crate::packing::{self, SearchLimits, SearchOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;
use std::time::Instant;

/// Largest n the exhaustive labeled enumeration accepts (2^21 graphs).
pub const EXHAUSTIVE_MAX_N: usize = 7;

const EXHAUSTIVE_SHARD: u64 = 1 << 14;
const RANDOM_SHARD: u64 = 64;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn shard_seed(master: u64, shard: u64) -> u64 {
    splitmix64(master ^ splitmix64(shard.wrapping_add(0x517C_C1B7_2722_0A95)))
}

/// How random graphs are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RandomModel {
    /// G(n, p): each pair independently with probability p.
    Gnp { p: f64 },
    /// Start from G(n, p) with p drawn per sample, then add random edges
    /// until h_k - ℓ_k reaches the target (additions never decrease it).
    DegreeTargeted { k: usize, min_h_minus_ell: i64 },
}

impl RandomModel {
    fn describe(&self) -> String {
        match self {
            RandomModel::Gnp { p } => format!("gnp(p={p})"),
            RandomModel::DegreeTargeted { k, min_h_minus_ell } => {
                format!("degree_targeted(k={k},h_minus_ell>={min_h_minus_ell})")
            }
        }
    }
}

/// One enumeration task: a vertex count and a mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub mode: EnumMode,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnumMode {
    ExhaustiveLabeled,
    Random {
        count: u64,
        model: RandomModel,
        seed: u64,
    },
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Draws one graph from the model.
pub fn sample_graph(rng: &mut ChaCha8Rng, n: usize, model: &RandomModel) -> Graph {
    match *model {
        RandomModel::Gnp { p } => {
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            g
        }
        RandomModel::DegreeTargeted { k, min_h_minus_ell } => {
            let p0 = rng.gen_range(0.05..0.45);
            let mut g = sample_graph(rng, n, &RandomModel::Gnp { p: p0 });
            if n < 2 {
                return g;
            }
            let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            let score = |deg: &[usize]| -> i64 {
                let h = deg.iter().filter(|&&d| d >= 2 * k).count() as i64;
                let ell = deg.iter().filter(|&&d| d + 2 <= 2 * k).count() as i64;
                h - ell
            };
            let mut attempts = 0usize;
            let cap = 4 * n * n + 64;
            while score(&deg) < min_h_minus_ell
                && g.edge_count() < pair_count(n)
                && attempts < cap
            {
                attempts += 1;
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u == v || g.has_edge(u, v) {
                    continue;
                }
                g.add_edge_unchecked(u, v);
                deg[u] += 1;
                deg[v] += 1;
            }
            g
        }
    }
}

struct RandomIter {
    n: usize,
    model: RandomModel,
    seed: u64,
    count: u64,
    produced: u64,
    rng: Option<ChaCha8Rng>,
}

impl Iterator for RandomIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.produced >= self.count {
            return None;
        }
        if self.produced % RANDOM_SHARD == 0 {
            let shard = self.produced / RANDOM_SHARD;
            self.rng = Some(ChaCha8Rng::seed_from_u64(shard_seed(self.seed, shard)));
        }
        self.produced += 1;
        let rng = self.rng.as_mut().expect("seeded above");
        Some(sample_graph(rng, self.n, &self.model))
    }
}

/// Streams the graphs described by `spec`. Exhaustive mode yields each
/// labeled graph on n vertices exactly once, in edge-subset order; random
/// mode is reproducible from the seed (and matches the sharded parallel
/// runners sample for sample).
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    match spec.mode {
        EnumMode::ExhaustiveLabeled => {
            if spec.n > EXHAUSTIVE_MAX_N {
                return Err(Error::EnumerationTooLarge {
                    n: spec.n,
                    max: EXHAUSTIVE_MAX_N,
                });
            }
            let n = spec.n;
            let total = 1u64 << pair_count(n);
            Ok(Box::new((0..total).map(move |mask| Graph::from_edge_mask(n, mask))))
        }
        EnumMode::Random { count, model, seed } => Ok(Box::new(RandomIter {
            n: spec.n,
            model,
            seed,
            count,
            produced: 0,
            rng: None,
        })),
    }
}

/// A theorem the harness can verify: one of the degree hypotheses, or the
/// 2-core statement (`LEM10`, k = 2 only, concluding c(G) >= 2 unless the
/// 2-core is small or is SK_5).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    Hyp(Hypothesis),
    Lemma10,
}

impl TheoremId {
    pub fn id(&self) -> String {
        match self {
            TheoremId::Hyp(h) => h.id().to_string(),
            TheoremId::Lemma10 => "LEM10".to_string(),
        }
    }

    fn needed_cycles(&self, k: usize) -> usize {
        match self {
            TheoremId::Hyp(_) => k,
            TheoremId::Lemma10 => 2,
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "LEM10" {
            Ok(TheoremId::Lemma10)
        } else {
            Ok(TheoremId::Hyp(s.parse()?))
        }
    }
}

/// True iff `g` is isomorphic to SK_5 (K_5 with one edge subdivided).
pub fn is_sk5(g: &Graph) -> bool {
    if g.n() != 6 || g.edge_count() != 11 {
        return false;
    }
    let mut degs: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    if degs != [2, 4, 4, 4, 4, 4] {
        return false;
    }
    let target = extremal::generate(&FamilySpec::new(Family::Sk, None, None, Some(5)))
        .expect("canonical SK_5");
    // Backtracking isomorphism search; 6 vertices keep this trivial.
    fn assign(g: &Graph, target: &Graph, image: &mut Vec<Option<usize>>, used: &mut [bool], v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for w in 0..target.n() {
            if used[w] || g.degree(v) != target.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| {
                let iu = image[u].expect("assigned");
                g.has_edge(u, v) == target.has_edge(iu, w)
            });
            if ok {
                image[v] = Some(w);
                used[w] = true;
                if assign(g, target, image, used, v + 1) {
                    return true;
                }
                image[v] = None;
                used[w] = false;
            }
        }
        false
    }
    assign(g, &target, &mut vec![None; 6], &mut [false; 6], 0)
}

/// Verification outcome for one theorem over one enumeration run (or a
/// merged range of runs). Serializes deterministically; wall time lives
/// outside the serialized form so reports stay byte-reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: ModeEcho,
    pub graphs_tested: u64,
    pub hypothesis_satisfying: u64,
    /// Graphs where the exact search ran out of budget (normally 0).
    pub inconclusive: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModeEcho {
    Exhaustive,
    Random { count: u64, model: String, seed: u64 },
}

/// A hypothesis-satisfying graph proved (by complete search) to lack the
/// required number of disjoint cycles. Re-verified from its serialized form
/// before being reported.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub n: usize,
    pub h: i64,
    pub ell: i64,
    pub min_degree: usize,
    pub needed_cycles: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_max_cycles: Option<usize>,
}

struct DegStats {
    n: i64,
    h: i64,
    ell: i64,
    hl: i64,
    delta: i64,
}

impl DegStats {
    fn of(g: &Graph, k: usize) -> Self {
        let mut h = 0i64;
        let mut ell = 0i64;
        let mut delta = i64::MAX;
        for v in 0..g.n() {
            let d = g.degree(v) as i64;
            delta = delta.min(d);
            if d >= 2 * k as i64 {
                h += 1;
            } else if d <= 2 * k as i64 - 2 {
                ell += 1;
            }
        }
        if g.n() == 0 {
            delta = 0;
        }
        DegStats {
            n: g.n() as i64,
            h,
            ell,
            hl: h - ell,
            delta,
        }
    }
}

/// Arithmetic-only hypothesis evaluation (t(G) and the 2-core are computed
/// lazily, after the cheap inequalities pass).
fn hypothesis_holds(
    g: &Graph,
    stats: &DegStats,
    id: TheoremId,
    k: usize,
    i: Option<i64>,
    limits: &SearchLimits,
) -> Result<bool> {
    let k64 = k as i64;
    Ok(match id {
        TheoremId::Hyp(Hypothesis::CorradiHajnal) => stats.n >= 3 * k64 && stats.delta >= 2 * k64,
        TheoremId::Hyp(Hypothesis::DiracErdos) => {
            k64 >= 3 && stats.hl >= k64 * k64 + 2 * k64 - 4
        }
        TheoremId::Hyp(Hypothesis::HighLow3k) => stats.hl >= 3 * k64,
        TheoremId::Hyp(Hypothesis::Main2k) => stats.n >= 19 * k64 && stats.hl >= 2 * k64,
        TheoremId::Hyp(Hypothesis::Induct) => {
            let i = i.ok_or_else(|| {
                Error::InvalidArgument("INDUCT requires the induction parameter i".into())
            })?;
            stats.n >= ALPHA as i64 * k64 + 3 * i && stats.hl >= 3 * k64 - i
        }
        TheoremId::Hyp(Hypothesis::TwoKPlusT) => {
            stats.n >= 3 * k64 && stats.hl >= 2 * k64 && {
                let t = packing::max_triangle_count(g, limits)? as i64;
                stats.hl >= 2 * k64 + t
            }
        }
        TheoremId::Hyp(Hypothesis::Cor9) => {
            stats.n >= 3 * k64 && stats.h >= 2 * k64 && stats.delta >= 2 * k64 - 1
        }
        TheoremId::Hyp(Hypothesis::OneTriangle) => {
            k64 >= 3 && stats.hl >= 2 * k64 && {
                let t = packing::max_triangle_count(g, limits)?;
                t <= 1
            }
        }
        TheoremId::Lemma10 => {
            stats.hl >= 4 && {
                let (core, _, _) = g.two_core();
                core.n() >= 6 && !is_sk5(&core)
            }
        }
    })
}

#[derive(Clone, Default)]
struct PerId {
    satisfying: u64,
    inconclusive: u64,
    counterexamples: Vec<Counterexample>,
}

struct ShardResult {
    tested: u64,
    per_id: Vec<PerId>,
}

fn check_graph(
    g: &Graph,
    ids: &[TheoremId],
    k: usize,
    i: Option<i64>,
    limits: &SearchLimits,
    per_id: &mut [PerId],
) -> Result<()> {
    let stats = DegStats::of(g, k);
    // Shared across theorems needing the same cycle count.
    let mut cached: Vec<(usize, Option<bool>)> = Vec::new();
    for (idx, &id) in ids.iter().enumerate() {
        if !hypothesis_holds(g, &stats, id, k, i, limits)? {
            continue;
        }
        per_id[idx].satisfying += 1;
        let need = id.needed_cycles(k);
        let has = match cached.iter().find(|(n, _)| *n == need) {
            Some((_, v)) => *v,
            None => {
                let v = match packing::find_disjoint_cycles(g, need, limits) {
                    SearchOutcome::Found(_) => Some(true),
                    SearchOutcome::NotExist => Some(false),
                    SearchOutcome::Exhausted => None,
                };
                cached.push((need, v));
                v
            }
        };
        match has {
            None => per_id[idx].inconclusive += 1,
            Some(true) => {}
            Some(false) => {
                per_id[idx]
                    .counterexamples
                    .push(certify_counterexample(g, id, k, i, need, limits)?);
            }
        }
    }
    Ok(())
}

/// Re-verifies a counterexample from its serialized form: the hypothesis
/// must hold and the complete search must again prove c < needed.
fn certify_counterexample(
    g: &Graph,
    id: TheoremId,
    k: usize,
    i: Option<i64>,
    need: usize,
    limits: &SearchLimits,
) -> Result<Counterexample> {
    let text = g.to_edge_list();
    let reparsed = Graph::parse_edge_list(&text).map_err(Error::Parse)?;
    let restats = DegStats::of(&reparsed, k);
    assert!(
        hypothesis_holds(&reparsed, &restats, id, k, i, limits)?,
        "counterexample failed hypothesis re-verification"
    );
    assert_eq!(
        packing::find_disjoint_cycles(&reparsed, need, limits),
        SearchOutcome::NotExist,
        "counterexample failed packing re-verification"
    );
    let exact = if reparsed.n() <= limits.exact_limit {
        Some(packing::max_cycle_packing(&reparsed, limits)?)
    } else {
        None
    };
    Ok(Counterexample {
        graph: text,
        n: reparsed.n(),
        h: restats.h,
        ell: restats.ell,
        min_degree: restats.delta as usize,
        needed_cycles: need,
        exact_max_cycles: exact,
    })
}

fn run_shards<F>(shards: u64, jobs: usize, run: F) -> Result<Vec<ShardResult>>
where
    F: Fn(u64) -> Result<ShardResult> + Sync + Send,
{
    if jobs <= 1 {
        (0..shards).map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| (0..shards).into_par_iter().map(run).collect())
    }
}

/// Verifies several theorems in one pass over the enumeration, sharing the
/// per-graph packing work. Returns one report per theorem, in input order.
pub fn verify_theorems(
    ids: &[TheoremId],
    k: usize,
    i: Option<i64>,
    spec: &EnumerationSpec,
    limits: &SearchLimits,
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    if ids.is_empty() {
        return Err(Error::InvalidArgument("no theorems requested".into()));
    }
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if ids.contains(&TheoremId::Lemma10) && k != 2 {
        return Err(Error::InvalidArgument("LEM10 is a k = 2 statement".into()));
    }
    if ids.iter().any(|id| *id == TheoremId::Hyp(Hypothesis::Induct)) {
        match i {
            None => {
                return Err(Error::InvalidArgument(
                    "INDUCT requires the induction parameter i".into(),
                ))
            }
            Some(i) if i > k as i64 => {
                return Err(Error::InvalidArgument(format!("INDUCT requires i <= k, got {i}")))
            }
            _ => {}
        }
    }
    let started = Instant::now();

    let (shards, mode_echo): (u64, ModeEcho) = match spec.mode {
        EnumMode::ExhaustiveLabeled => {
            if spec.n > EXHAUSTIVE_MAX_N {
                return Err(Error::EnumerationTooLarge {
                    n: spec.n,
                    max: EXHAUSTIVE_MAX_N,
                });
            }
            let total = 1u64 << pair_count(spec.n);
            (total.div_ceil(EXHAUSTIVE_SHARD), ModeEcho::Exhaustive)
        }
        EnumMode::Random { count, model, seed } => (
            count.div_ceil(RANDOM_SHARD),
            ModeEcho::Random {
                count,
                model: model.describe(),
                seed,
            },
        ),
    };

    let run = |shard: u64| -> Result<ShardResult> {
        let mut per_id = vec![PerId::default(); ids.len()];
        let mut tested = 0u64;
        match spec.mode {
            EnumMode::ExhaustiveLabeled => {
                let total = 1u64 << pair_count(spec.n);
                let lo = shard * EXHAUSTIVE_SHARD;
                let hi = total.min(lo + EXHAUSTIVE_SHARD);
                for mask in lo..hi {
                    let g = Graph::from_edge_mask(spec.n, mask);
                    check_graph(&g, ids, k, i, limits, &mut per_id)?;
                    tested += 1;
                }
            }
            EnumMode::Random { count, model, seed } => {
                let lo = shard * RANDOM_SHARD;
                let hi = count.min(lo + RANDOM_SHARD);
                let mut rng = ChaCha8Rng::seed_from_u64(shard_seed(seed, shard));
                for _ in lo..hi {
                    let g = sample_graph(&mut rng, spec.n, &model);
                    check_graph(&g, ids, k, i, limits, &mut per_id)?;
                    tested += 1;
                }
            }
        }
        Ok(ShardResult { tested, per_id })
    };

    let results = run_shards(shards, jobs, run)?;
    let wall = started.elapsed().as_millis();

    Ok(ids
        .iter()
        .enumerate()
        .map(|(idx, id)| {
            let mut report = VerificationReport {
                theorem: id.id(),
                k,
                i: if *id == TheoremId::Hyp(Hypothesis::Induct) { i } else { None },
                n_min: spec.n,
                n_max: spec.n,
                mode: mode_echo.clone(),
                graphs_tested: 0,
                hypothesis_satisfying: 0,
                inconclusive: 0,
                counterexamples: Vec::new(),
                wall_time_ms: wall,
            };
            for shard in &results {
                report.graphs_tested += shard.tested;
                report.hypothesis_satisfying += shard.per_id[idx].satisfying;
                report.inconclusive += shard.per_id[idx].inconclusive;
                report
                    .counterexamples
                    .extend(shard.per_id[idx].counterexamples.iter().cloned());
            }
            report
        })
        .collect())
}

/// Single-theorem wrapper around [`verify_theorems`].
pub fn verify_theorem(
    id: TheoremId,
    k: usize,
    i: Option<i64>,
    spec: &EnumerationSpec,
    limits: &SearchLimits,
    jobs: usize,
) -> Result<VerificationReport> {
    Ok(verify_theorems(&[id], k, i, spec, limits, jobs)?
        .pop()
        .expect("one report per id"))
}

/// Searches the open range [4k+1, 19k-1] for graphs with h - ℓ >= 2k and
/// fewer than k disjoint cycles. Hits are findings, not failures; each is
/// double-verified before being reported. The range must sit inside the
/// gap; an empty range yields an empty report.
pub fn hunt_gap(
    k: usize,
    n_range: (usize, usize),
    samples_per_n: u64,
    seed: u64,
    limits: &SearchLimits,
    jobs: usize,
) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let (lo, hi) = n_range;
    if lo <= hi && (lo < 4 * k + 1 || hi > 19 * k - 1) {
        return Err(Error::InvalidArgument(format!(
            "range [{lo}, {hi}] outside the gap [{}, {}]",
            4 * k + 1,
            19 * k - 1
        )));
    }
    let started = Instant::now();
    let model = RandomModel::DegreeTargeted {
        k,
        min_h_minus_ell: 2 * k as i64,
    };

    // Task list (n, shard) in fixed order; per-n seeds derive from the
    // master seed so the report is independent of the worker count.
    let shards_per_n = samples_per_n.div_ceil(RANDOM_SHARD);
    let mut tasks: Vec<(usize, u64)> = Vec::new();
    if lo <= hi {
        for n in lo..=hi {
            for s in 0..shards_per_n {
                tasks.push((n, s));
            }
        }
    }

    let run = |&(n, shard): &(usize, u64)| -> Result<ShardResult> {
        let n_seed = splitmix64(seed ^ splitmix64(n as u64));
        let mut rng = ChaCha8Rng::seed_from_u64(shard_seed(n_seed, shard));
        let lo_s = shard * RANDOM_SHARD;
        let hi_s = samples_per_n.min(lo_s + RANDOM_SHARD);
        let mut per = PerId::default();
        let mut tested = 0u64;
        for _ in lo_s..hi_s {
            let g = sample_graph(&mut rng, n, &model);
            tested += 1;
            let stats = DegStats::of(&g, k);
            if stats.hl < 2 * k as i64 {
                continue;
            }
            per.satisfying += 1;
            match packing::find_disjoint_cycles(&g, k, limits) {
                SearchOutcome::Found(_) => {}
                SearchOutcome::Exhausted => per.inconclusive += 1,
                SearchOutcome::NotExist => {
                    per.counterexamples.push(certify_hunt_hit(&g, k, limits)?);
                }
            }
        }
        Ok(ShardResult {
            tested,
            per_id: vec![per],
        })
    };

    let results: Vec<ShardResult> = if jobs <= 1 {
        tasks.iter().map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run).collect::<Result<_>>())?
    };

    let mut report = VerificationReport {
        theorem: "Q5".to_string(),
        k,
        i: None,
        n_min: lo,
        n_max: hi,
        mode: ModeEcho::Random {
            count: samples_per_n,
            model: model.describe(),
            seed,
        },
        graphs_tested: 0,
        hypothesis_satisfying: 0,
        inconclusive: 0,
        counterexamples: Vec::new(),
        wall_time_ms: started.elapsed().as_millis(),
    };
    for shard in &results {
        report.graphs_tested += shard.tested;
        report.hypothesis_satisfying += shard.per_id[0].satisfying;
        report.inconclusive += shard.per_id[0].inconclusive;
        report
            .counterexamples
            .extend(shard.per_id[0].counterexamples.iter().cloned());
    }
    Ok(report)
}

/// Double-verifies a gap hit from its serialized form: h - ℓ >= 2k must
/// hold again and the complete search must again prove c < k. (The hunt
/// condition is only the degree gap, not the full n >= 19k premise.)
fn certify_hunt_hit(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Counterexample> {
    let text = g.to_edge_list();
    let reparsed = Graph::parse_edge_list(&text).map_err(Error::Parse)?;
    let stats = DegStats::of(&reparsed, k);
    assert!(stats.hl >= 2 * k as i64, "gap hit failed hypothesis re-verification");
    assert_eq!(
        packing::find_disjoint_cycles(&reparsed, k, limits),
        SearchOutcome::NotExist,
        "gap hit failed packing re-verification"
    );
    let exact = if reparsed.n() <= limits.exact_limit {
        Some(packing::max_cycle_packing(&reparsed, limits)?)
    } else {
        None
    };
    Ok(Counterexample {
        graph: text,
        n: reparsed.n(),
        h: stats.h,
        ell: stats.ell,
        min_degree: stats.delta as usize,
        needed_cycles: k,
        exact_max_cycles: exact,
    })
}
