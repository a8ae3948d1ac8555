//! Ground truth for the criteria: brute-force oracles, seeded instance
//! generators and a cross-validation fuzzer.
//!
//! The oracle for "all fractional `(g, f)`-factors excluding `H`" is the
//! definition itself: enumerate every integer `r` with `g <= r <= f` and
//! try to construct a fractional `r`-factor of `G - E(H)`.
//!
//! Generators draw from [`Prng`] (SplitMix64) and take probabilities as
//! numerators over `2^53`, so a seed reproduces the same instances on any
//! platform.

use std::fs;
use std::path::Path;

use crate::criteria::Criterion;
use crate::error::{Error, Result};
use crate::factor::construct_fractional_factor;
use crate::graph::{check_bounds, EdgeSubset, Graph, VertexFunc, MAX_VERTICES};
use crate::instance::Instance;
use crate::sufficient::{degree_ratio_violation, CliquePartition};
use crate::Limits;

/// SplitMix64.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Prng {
        Prng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Top 53 bits of the next output.
    pub fn next_53(&mut self) -> u64 {
        self.next_u64() >> 11
    }

    /// One draw, true with probability `p`.
    pub fn bernoulli(&mut self, p: Probability) -> bool {
        self.next_53() < p.0
    }

    /// Uniform in `lo..=hi` by multiply-shift on one 64-bit draw.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        let span = u128::from(hi - lo) + 1;
        lo + ((u128::from(self.next_u64()) * span) >> 64) as u64
    }
}

/// A probability `numerator / 2^53`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Probability(u64);

impl Probability {
    pub const DENOMINATOR: u64 = 1 << 53;
    pub const ZERO: Probability = Probability(0);
    pub const ONE: Probability = Probability(Self::DENOMINATOR);
    pub const HALF: Probability = Probability(Self::DENOMINATOR / 2);

    pub fn from_numerator(numerator: u64) -> Result<Probability> {
        if numerator > Self::DENOMINATOR {
            return Err(Error::usage(format!("probability numerator {numerator} exceeds 2^53")));
        }
        Ok(Probability(numerator))
    }

    /// `num / den`, rounded down to a multiple of `2^-53`.
    pub fn ratio(num: u64, den: u64) -> Probability {
        assert!(den > 0 && num <= den);
        Probability((u128::from(num) * u128::from(Self::DENOMINATOR) / u128::from(den)) as u64)
    }

    pub fn numerator(self) -> u64 {
        self.0
    }
}

/// Each pair `u < v`, in lexicographic order, is an edge with probability `p`.
pub fn gen_random_graph(n: usize, p: Probability, prng: &mut Prng) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::usage(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if prng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Keeps each edge of `graph`, in edge order, with probability `q`.
pub fn gen_random_edge_subset(graph: &Graph, q: Probability, prng: &mut Prng) -> EdgeSubset {
    let kept: Vec<_> = graph.edges().iter().copied().filter(|_| prng.bernoulli(q)).collect();
    EdgeSubset::new(graph, kept).expect("edges come from the host")
}

/// Per vertex in order: `g` uniform in `1..=gmax`, then `f` uniform in
/// `g..=fmax`.
pub fn gen_random_gf(n: usize, gmax: u32, fmax: u32, prng: &mut Prng) -> Result<(VertexFunc, VertexFunc)> {
    if gmax < 1 || gmax > fmax {
        return Err(Error::usage(format!("need 1 <= gmax <= fmax, got {gmax}, {fmax}")));
    }
    let mut g = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    for _ in 0..n {
        let lo = prng.range(1, gmax.into()) as u32;
        g.push(lo);
        f.push(prng.range(lo.into(), fmax.into()) as u32);
    }
    Ok((VertexFunc::new(g)?, VertexFunc::new(f)?))
}

/// Parts are consecutive label ranges of the given sizes; every intra-part
/// pair is an edge and every inter-part pair (lexicographic order) is an
/// edge with probability `p_extra`.
pub fn gen_clique_partition_instance(
    part_sizes: &[usize],
    p_extra: Probability,
    prng: &mut Prng,
) -> Result<(Graph, CliquePartition)> {
    if part_sizes.len() < 2 {
        return Err(Error::usage("a clique partition instance needs at least two parts"));
    }
    if part_sizes.contains(&0) {
        return Err(Error::usage("part sizes must be positive"));
    }
    let n: usize = part_sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::usage(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    let mut part_of = Vec::with_capacity(n);
    let mut parts = Vec::with_capacity(part_sizes.len());
    let mut next = 0u32;
    for (i, &size) in part_sizes.iter().enumerate() {
        parts.push((next..next + size as u32).collect::<Vec<_>>());
        part_of.extend(std::iter::repeat_n(i, size));
        next += size as u32;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] == part_of[v] || prng.bernoulli(p_extra) {
                edges.push((u as u32, v as u32));
            }
        }
    }
    Ok((Graph::new(n, edges)?, CliquePartition::new(parts)))
}

/// `g = f = d / c` for a divisor `c` of the gcd of all degrees, drawn
/// uniformly among the divisors. These are the instances on which the
/// degree-ratio premise can hold with `H` empty. `None` when some vertex
/// is isolated.
pub fn gen_proportional_gf(graph: &Graph, prng: &mut Prng) -> Option<(VertexFunc, VertexFunc)> {
    let degrees: Vec<u32> = (0..graph.vertex_count())
        .map(|v| graph.degree(v).unwrap() as u32)
        .collect();
    let gcd = degrees.iter().copied().fold(0, gcd);
    if degrees.contains(&0) {
        return None;
    }
    let divisors: Vec<u32> = (1..=gcd).filter(|c| gcd % c == 0).collect();
    let c = divisors[prng.range(0, divisors.len() as u64 - 1) as usize];
    let f = VertexFunc::new(degrees.iter().map(|d| d / c).collect()).ok()?;
    Some((f.clone(), f))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of integer functions `g <= r <= f`.
pub fn r_function_count(g: &VertexFunc, f: &VertexFunc) -> u128 {
    g.values()
        .iter()
        .zip(f.values())
        .map(|(&lo, &hi)| u128::from(hi - lo) + 1)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

/// Mixed-radix odometer over `g <= r <= f`, vertex 0 least significant.
#[derive(Clone, Debug)]
pub struct RFunctionCursor {
    lo: Vec<u32>,
    hi: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl Iterator for RFunctionCursor {
    type Item = VertexFunc;

    fn next(&mut self) -> Option<VertexFunc> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut carried = true;
        for (i, digit) in cur.iter_mut().enumerate() {
            if *digit < self.hi[i] {
                *digit += 1;
                carried = false;
                break;
            }
            *digit = self.lo[i];
        }
        if carried {
            self.current = None;
        }
        Some(VertexFunc::new(out).expect("values stay positive"))
    }
}

/// All `r` with `g <= r <= f`, or a resource error with the exact count if
/// there are more than `cap`.
pub fn enumerate_r_functions(g: &VertexFunc, f: &VertexFunc, cap: u64) -> Result<RFunctionCursor> {
    check_bounds(g.len(), g, f)?;
    let count = r_function_count(g, f);
    if count > u128::from(cap) {
        return Err(Error::Resource {
            what: "number of functions r",
            actual: count,
            cap: cap.into(),
        });
    }
    Ok(RFunctionCursor {
        lo: g.values().to_vec(),
        hi: f.values().to_vec(),
        current: Some(g.values().to_vec()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub holds: bool,
    /// First `r` in enumeration order with no fractional `r`-factor.
    pub failing_r: Option<VertexFunc>,
    /// Number of `r` tried.
    pub checked: u64,
}

/// Tries every `g <= r <= f` directly.
pub fn brute_force_all_excluding(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
    cap: u64,
) -> Result<OracleVerdict> {
    check_bounds(graph.vertex_count(), g, f)?;
    let reduced = graph.remove_edges(h)?;
    let mut checked = 0;
    for r in enumerate_r_functions(g, f, cap)? {
        checked += 1;
        if construct_fractional_factor(&reduced, &r, &r)?.is_none() {
            return Ok(OracleVerdict {
                holds: false,
                failing_r: Some(r),
                checked,
            });
        }
    }
    Ok(OracleVerdict {
        holds: true,
        failing_r: None,
        checked,
    })
}

/// Criterion and oracle verdicts on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub criterion: bool,
    pub oracle: bool,
}

impl CrossCheck {
    pub fn agrees(self) -> bool {
        self.criterion == self.oracle
    }
}

pub fn cross_validate(instance: &Instance, limits: &Limits) -> Result<CrossCheck> {
    let Instance { graph, h, g, f, .. } = instance;
    let criterion = Criterion::all_factors_excluding(graph, h, g, f)?.check(limits)?;
    let oracle = brute_force_all_excluding(graph, h, g, f, limits.max_r_functions)?;
    Ok(CrossCheck {
        criterion: criterion.holds,
        oracle: oracle.holds,
    })
}

/// Parameters of a fuzz campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub p: Probability,
    pub q: Probability,
    pub gmax: u32,
    pub fmax: u32,
    pub seed: u64,
    pub limits: Limits,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 1 || self.n_min > self.n_max || self.n_max > MAX_VERTICES {
            return Err(Error::usage(format!(
                "need 1 <= n-min <= n-max <= {MAX_VERTICES}, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.n_min > self.limits.max_subset_vertices {
            return Err(Error::Resource {
                what: "n-min for subset enumeration",
                actual: self.n_min as u128,
                cap: self.limits.max_subset_vertices as u128,
            });
        }
        if self.gmax < 1 || self.gmax > self.fmax {
            return Err(Error::usage(format!(
                "need 1 <= gmax <= fmax, got {}, {}",
                self.gmax, self.fmax
            )));
        }
        Ok(())
    }
}

/// Redraws allowed per trial before giving up on the caps.
const MAX_REDRAWS: u64 = 10_000;

/// Result of one fuzz trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub index: u64,
    /// Instances redrawn because they exceeded a cap.
    pub oversized: u64,
    /// Every check that failed on this trial; empty means agreement.
    pub failures: Vec<String>,
    /// Whether the degree-ratio premise held on this trial.
    pub degree_ratio_premise: bool,
    pub instance: Instance,
}

/// Runs trial `index` of `config`. The trial's stream is SplitMix64 seeded
/// with `seed ^ index`, so trials can run in any order or in parallel.
pub fn run_trial(config: &FuzzConfig, index: u64) -> Result<TrialOutcome> {
    let mut prng = Prng::new(config.seed ^ index);
    let mut oversized = 0;
    let instance = loop {
        let n = prng.range(config.n_min as u64, config.n_max as u64) as usize;
        let graph = gen_random_graph(n, config.p, &mut prng)?;
        let h = gen_random_edge_subset(&graph, config.q, &mut prng);
        let (g, f) = gen_random_gf(n, config.gmax, config.fmax, &mut prng)?;
        if n <= config.limits.max_subset_vertices && r_function_count(&g, &f) <= config.limits.max_r_functions.into() {
            break Instance::new(graph, h, g, f);
        }
        oversized += 1;
        if oversized >= MAX_REDRAWS {
            return Err(Error::Resource {
                what: "redraws for trial",
                actual: oversized.into(),
                cap: MAX_REDRAWS.into(),
            });
        }
    };
    let super_h = instance
        .h
        .union(&gen_random_edge_subset(&instance.graph, Probability::HALF, &mut prng));

    let Instance { graph, h, g, f, .. } = &instance;
    let limits = &config.limits;
    let mut failures = Vec::new();

    let report = Criterion::all_factors_excluding(graph, h, g, f)?.check(limits)?;
    let oracle = brute_force_all_excluding(graph, h, g, f, limits.max_r_functions)?;
    if report.holds != oracle.holds {
        failures.push(format!(
            "criterion says {} but the oracle says {}",
            report.holds, oracle.holds
        ));
    }

    let reduced = graph.remove_edges(h)?;
    let via_reduction = Criterion::all_factors(&reduced, g, f)?.check(limits)?;
    if via_reduction.holds != report.holds {
        failures.push("criterion on G - E(H) with H empty disagrees".into());
    }

    let empty = EdgeSubset::empty(graph);
    let with_empty = Criterion::all_factors_excluding(graph, &empty, g, f)?.check(limits)?;
    let plain = Criterion::all_factors(graph, g, f)?.check(limits)?;
    if with_empty != plain {
        failures.push("empty-H specialization differs from the no-H criterion".into());
    }

    let bigger = Criterion::all_factors_excluding(graph, &super_h, g, f)?.check(limits)?;
    if bigger.holds && !report.holds {
        failures.push(format!("monotonicity: holds for H' = {super_h:?} but not for H"));
    }

    if report.holds {
        let bad = (0..graph.vertex_count()).find(|&x| graph.degree(x).unwrap() < f.get(x) as usize + h.degree(x));
        if let Some(x) = bad {
            failures.push(format!("criterion holds but d_G({x}) < f({x}) + d_H({x})"));
        }
    }

    let degree_ratio_premise = degree_ratio_violation(graph, h, g, f)?.is_none();
    if degree_ratio_premise && !report.holds {
        failures.push("degree-ratio premise holds but the criterion fails".into());
    }

    Ok(TrialOutcome {
        index,
        oversized,
        failures,
        degree_ratio_premise,
        instance,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub trial: u64,
    pub failures: Vec<String>,
    pub instance: Instance,
}

impl Disagreement {
    pub fn file_name(&self) -> String {
        format!("disagreement-trial-{}.json", self.trial)
    }
}

/// Aggregate of a fuzz campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidationReport {
    pub trials: u64,
    pub agreements: u64,
    pub oversized: u64,
    pub degree_ratio_premises: u64,
    pub disagreements: Vec<Disagreement>,
    pub seed: u64,
}

impl CrossValidationReport {
    /// Merges trial outcomes; they are sorted by trial index first so the
    /// result does not depend on completion order.
    pub fn from_outcomes(seed: u64, mut outcomes: Vec<TrialOutcome>) -> CrossValidationReport {
        outcomes.sort_by_key(|o| o.index);
        let mut report = CrossValidationReport {
            trials: outcomes.len() as u64,
            agreements: 0,
            oversized: 0,
            degree_ratio_premises: 0,
            disagreements: Vec::new(),
            seed,
        };
        for o in outcomes {
            report.oversized += o.oversized;
            report.degree_ratio_premises += u64::from(o.degree_ratio_premise);
            if o.failures.is_empty() {
                report.agreements += 1;
            } else {
                report.disagreements.push(Disagreement {
                    trial: o.index,
                    failures: o.failures,
                    instance: o.instance,
                });
            }
        }
        report
    }

    /// Writes each disagreeing instance to `dir` and returns the paths.
    pub fn dump(&self, dir: &Path) -> std::io::Result<Vec<String>> {
        fs::create_dir_all(dir)?;
        self.disagreements
            .iter()
            .map(|d| {
                let path = dir.join(d.file_name());
                fs::write(&path, d.instance.to_json())?;
                Ok(path.display().to_string())
            })
            .collect()
    }

    /// Campaign JSON: `trials`, `agreements`, `oversized`, `disagreements`
    /// (the given paths) and `seed`, in that order.
    pub fn to_json(&self, paths: &[String]) -> String {
        #[derive(serde::Serialize)]
        struct Json<'a> {
            trials: u64,
            agreements: u64,
            oversized: u64,
            disagreements: &'a [String],
            seed: u64,
        }
        serde_json::to_string(&Json {
            trials: self.trials,
            agreements: self.agreements,
            oversized: self.oversized,
            disagreements: paths,
            seed: self.seed,
        })
        .expect("report serializes")
    }
}

/// Runs every trial serially.
pub fn fuzz_campaign(config: &FuzzConfig) -> Result<CrossValidationReport> {
    config.validate()?;
    let outcomes = (0..config.trials)
        .map(|i| run_trial(config, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossValidationReport::from_outcomes(config.seed, outcomes))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn vf(v: &[u32]) -> VertexFunc {
        VertexFunc::new(v.to_vec()).unwrap()
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs of SplitMix64 seeded with 0 and 1234567.
        let mut a = Prng::new(0);
        assert_eq!(a.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(a.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        let mut b = Prng::new(1234567);
        assert_eq!(b.next_u64(), 6457827717110365317);
        assert_eq!(b.next_u64(), 3203168211198807973);
    }

    #[test]
    fn probability_extremes() {
        let mut prng = Prng::new(9);
        assert_eq!(
            gen_random_graph(6, Probability::ZERO, &mut prng).unwrap().edge_count(),
            0
        );
        assert_eq!(
            gen_random_graph(6, Probability::ONE, &mut prng).unwrap(),
            Graph::complete(6).unwrap()
        );
        let c4 = Graph::cycle(4).unwrap();
        assert!(gen_random_edge_subset(&c4, Probability::ZERO, &mut prng).is_empty());
        assert_eq!(
            gen_random_edge_subset(&c4, Probability::ONE, &mut prng),
            EdgeSubset::all(&c4)
        );
        assert!(Probability::from_numerator(Probability::DENOMINATOR + 1).is_err());
        assert_eq!(Probability::ratio(1, 2), Probability::HALF);
    }

    #[test]
    fn gf_generation() {
        let mut prng = Prng::new(5);
        let (g, f) = gen_random_gf(5, 1, 1, &mut prng).unwrap();
        assert_eq!((g.values(), f.values()), (&[1; 5][..], &[1; 5][..]));
        for _ in 0..200 {
            let (g, f) = gen_random_gf(6, 2, 4, &mut prng).unwrap();
            assert!((0..6).all(|v| 1 <= g.get(v) && g.get(v) <= 2 && g.get(v) <= f.get(v) && f.get(v) <= 4));
        }
        assert!(gen_random_gf(3, 3, 2, &mut prng).is_err());
    }

    #[test]
    fn clique_partition_generation() {
        let mut prng = Prng::new(1);
        let (g, p) = gen_clique_partition_instance(&[3, 3], Probability::ONE, &mut prng).unwrap();
        assert_eq!(g, Graph::complete(6).unwrap());
        assert_eq!(p.parts(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        let (g, p) = gen_clique_partition_instance(&[2, 2], Probability::ZERO, &mut prng).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(p.parts(), &[vec![0, 1], vec![2, 3]]);
        assert!(gen_clique_partition_instance(&[4], Probability::ONE, &mut prng).is_err());
    }

    #[test]
    fn odometer() {
        let all: Vec<_> = enumerate_r_functions(&vf(&[1, 1]), &vf(&[3, 2]), 100)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vf(&[1, 1]));
        assert_eq!(all[1], vf(&[2, 1]));
        assert_eq!(all[5], vf(&[3, 2]));
        let single: Vec<_> = enumerate_r_functions(&vf(&[2, 1]), &vf(&[2, 1]), 1).unwrap().collect();
        assert_eq!(single, vec![vf(&[2, 1])]);
        let err = enumerate_r_functions(
            &VertexFunc::constant(20, 1).unwrap(),
            &VertexFunc::constant(20, 2).unwrap(),
            1_000_000,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Resource {
                what: "number of functions r",
                actual: 1 << 20,
                cap: 1_000_000
            }
        );
    }

    #[test]
    fn odometer_visits_each_function_once() {
        let g = vf(&[1, 2, 1, 3]);
        let f = vf(&[3, 2, 4, 4]);
        let seen: HashSet<_> = enumerate_r_functions(&g, &f, 1000).unwrap().collect();
        assert_eq!(seen.len() as u128, r_function_count(&g, &f));
        assert_eq!(seen.len(), 3 * 4 * 2);
        assert!(seen
            .iter()
            .all(|r| (0..4).all(|v| g.get(v) <= r.get(v) && r.get(v) <= f.get(v))));
    }

    #[test]
    fn oracle_examples() {
        let one = |n| VertexFunc::constant(n, 1).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let h = EdgeSubset::new(&c4, [(0, 1)]).unwrap();
        assert!(brute_force_all_excluding(&c4, &h, &one(4), &one(4), 10).unwrap().holds);

        let c3 = Graph::cycle(3).unwrap();
        let h = EdgeSubset::new(&c3, [(0, 2)]).unwrap();
        let v = brute_force_all_excluding(&c3, &h, &one(3), &one(3), 10).unwrap();
        assert!(!v.holds);
        assert_eq!(v.failing_r, Some(one(3)));

        let star = Graph::star(3).unwrap();
        assert!(
            !brute_force_all_excluding(&star, &EdgeSubset::empty(&star), &one(4), &one(4), 10)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn proportional_gf() {
        let mut prng = Prng::new(3);
        let k5 = Graph::complete(5).unwrap();
        for _ in 0..20 {
            let (g, f) = gen_proportional_gf(&k5, &mut prng).unwrap();
            assert_eq!(g, f);
            assert!([1, 2, 4].contains(&f.get(0)));
        }
        assert!(gen_proportional_gf(&Graph::empty(3).unwrap(), &mut prng).is_none());
    }

    #[test]
    fn empty_campaign() {
        let cfg = FuzzConfig {
            trials: 0,
            n_min: 3,
            n_max: 8,
            p: Probability::HALF,
            q: Probability::HALF,
            gmax: 1,
            fmax: 2,
            seed: 1,
            limits: Limits::default(),
        };
        let r = fuzz_campaign(&cfg).unwrap();
        assert_eq!((r.trials, r.agreements, r.disagreements.len()), (0, 0, 0));
        assert_eq!(
            r.to_json(&[]),
            r#"{"trials":0,"agreements":0,"oversized":0,"disagreements":[],"seed":1}"#
        );
    }
}
