//! Exhaustive deficiency criteria over all vertex subsets `S`.
//!
//! Three conditions are decided here:
//!
//! * a single fractional `(g, f)`-factor exists iff
//!   `f(S) + sum_{x in T} d_{G-S}(x) - g(T) >= 0` for every `S`, where
//!   `T = {x not in S : d_{G-S}(x) < g(x)}`;
//! * `G` has a fractional `r`-factor avoiding the edges of `H` for every
//!   integer `g <= r <= f` iff
//!   `g(S) + sum_{x in T} d_{G-S}(x) - f(T) >= sum_{x in T} d_H(x) - e_H(S, T)`
//!   for every `S`, where
//!   `T = {x not in S : d_{G-S}(x) - d_H(x) + e_H(x, S) < f(x)}`;
//! * the same with `H` empty.
//!
//! Each check scans the `2^n` bitmasks and reports the global minimiser,
//! ties going to the smallest bitmask. A scan can be split into bitmask
//! ranges and the partial results merged with [`Scan::merge`]; the merged
//! report is identical to a single pass.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{check_bounds, EdgeSet, EdgeSubset, Graph, VertexFunc, VertexSet};
use crate::Limits;

/// Outcome of a subset-enumeration criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub holds: bool,
    pub min_deficiency: i64,
    pub witness_s: VertexSet,
    pub witness_t: VertexSet,
    pub scanned: u64,
}

/// `T = {x not in S : d_{G-S}(x) < g(x)}`.
pub fn t_set_anstee(graph: &Graph, s: VertexSet, g: &VertexFunc) -> VertexSet {
    graph
        .vertices()
        .difference(s)
        .iter()
        .filter(|&x| graph.degree_minus(s, x).unwrap() < g.get(x) as usize)
        .collect()
}

/// `T = {x not in S : d_{G-S}(x) - d_H(x) + e_H(x, S) < f(x)}`.
///
/// The left side is the degree of `x` in `(G - E(H)) - S`.
pub fn t_set_excluding(graph: &Graph, h: &EdgeSubset, s: VertexSet, f: &VertexFunc) -> VertexSet {
    graph
        .vertices()
        .difference(s)
        .iter()
        .filter(|&x| {
            let value = graph.degree_minus(s, x).unwrap() as i64 - h.degree(x) as i64
                + h.edges_vertex_to_set(x, s).unwrap() as i64;
            value < i64::from(f.get(x))
        })
        .collect()
}

/// `f(S) + sum_{x in T} d_{G-S}(x) - g(T)` with `T` from [`t_set_anstee`].
pub fn fractional_deficiency(graph: &Graph, g: &VertexFunc, f: &VertexFunc, s: VertexSet) -> i64 {
    let t = t_set_anstee(graph, s, g);
    let degrees: i64 = t.iter().map(|x| graph.degree_minus(s, x).unwrap() as i64).sum();
    f.sum(s) + degrees - g.sum(t)
}

/// Left side minus right side of the excluding condition at `S`:
/// `g(S) + sum_T d_{G-S}(x) - f(T) - sum_T d_H(x) + e_H(S, T)` with `T`
/// from [`t_set_excluding`].
pub fn excluding_deficiency(graph: &Graph, h: &EdgeSubset, g: &VertexFunc, f: &VertexFunc, s: VertexSet) -> i64 {
    let t = t_set_excluding(graph, h, s, f);
    let degrees: i64 = t.iter().map(|x| graph.degree_minus(s, x).unwrap() as i64).sum();
    let h_degrees: i64 = t.iter().map(|x| h.degree(x) as i64).sum();
    let h_cut = h.edges_between(s, t).unwrap() as i64;
    g.sum(s) + degrees - f.sum(t) - h_degrees + h_cut
}

/// Partial result of scanning a range of bitmasks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Scan {
    /// `(deficiency, bitmask)` of the best subset seen so far.
    pub best: Option<(i64, u64)>,
    pub scanned: u64,
}

impl Scan {
    /// Combines two partial scans; the order of arguments does not matter.
    pub fn merge(self, other: Scan) -> Scan {
        let best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Scan {
            best,
            scanned: self.scanned + other.scanned,
        }
    }
}

/// Which condition a [`Criterion`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// One fractional `(g, f)`-factor.
    FractionalFactor,
    /// Fractional `r`-factors for every `g <= r <= f`, avoiding `H`.
    AllFactorsExcluding,
}

/// A prepared criterion instance. Holds flat copies of the adjacency
/// masks and bounds so the inner loop is popcounts and adds.
#[derive(Clone, Debug)]
pub struct Criterion<'a> {
    rule: Rule,
    graph: &'a Graph,
    h: Option<&'a EdgeSubset>,
    g: &'a VertexFunc,
    f: &'a VertexFunc,
    adj: Vec<u64>,
    h_adj: Vec<u64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl<'a> Criterion<'a> {
    fn prepare(
        rule: Rule,
        graph: &'a Graph,
        h: Option<&'a EdgeSubset>,
        g: &'a VertexFunc,
        f: &'a VertexFunc,
    ) -> Result<Criterion<'a>> {
        let n = graph.vertex_count();
        check_bounds(n, g, f)?;
        if let Some(h) = h {
            h.check_host(graph)?;
        }
        Ok(Criterion {
            rule,
            graph,
            h,
            g,
            f,
            adj: (0..n).map(|v| graph.adjacency(v)).collect(),
            h_adj: (0..n).map(|v| h.map_or(0, |h| h.adjacency(v))).collect(),
            lo: g.values().iter().map(|&x| x.into()).collect(),
            hi: f.values().iter().map(|&x| x.into()).collect(),
        })
    }

    /// Single fractional `(g, f)`-factor.
    pub fn fractional_factor(graph: &'a Graph, g: &'a VertexFunc, f: &'a VertexFunc) -> Result<Self> {
        Self::prepare(Rule::FractionalFactor, graph, None, g, f)
    }

    /// All fractional `(g, f)`-factors excluding `h`.
    pub fn all_factors_excluding(
        graph: &'a Graph,
        h: &'a EdgeSubset,
        g: &'a VertexFunc,
        f: &'a VertexFunc,
    ) -> Result<Self> {
        Self::prepare(Rule::AllFactorsExcluding, graph, Some(h), g, f)
    }

    /// All fractional `(g, f)`-factors (no excluded edges).
    pub fn all_factors(graph: &'a Graph, g: &'a VertexFunc, f: &'a VertexFunc) -> Result<Self> {
        Self::prepare(Rule::AllFactorsExcluding, graph, None, g, f)
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Number of subsets a full scan visits: `2^n`.
    pub fn subset_count(&self) -> u128 {
        1u128 << self.graph.vertex_count()
    }

    pub fn check_cap(&self, limits: &Limits) -> Result<()> {
        let n = self.graph.vertex_count();
        if n > limits.max_subset_vertices.min(63) {
            return Err(Error::Resource {
                what: "vertex count for subset enumeration",
                actual: n as u128,
                cap: limits.max_subset_vertices.min(63) as u128,
            });
        }
        Ok(())
    }

    /// Deficiency at the subset with bitmask `s`.
    #[inline]
    pub fn deficiency(&self, s: u64) -> i64 {
        let mut outside = !s & self.graph.vertices().bits();
        let mut total = 0i64;
        match self.rule {
            Rule::FractionalFactor => {
                total += sum_over(s, &self.hi);
                while outside != 0 {
                    let x = outside.trailing_zeros() as usize;
                    outside &= outside - 1;
                    let d = i64::from((self.adj[x] & !s).count_ones());
                    if d < self.lo[x] {
                        total += d - self.lo[x];
                    }
                }
            }
            Rule::AllFactorsExcluding => {
                total += sum_over(s, &self.lo);
                while outside != 0 {
                    let x = outside.trailing_zeros() as usize;
                    outside &= outside - 1;
                    let hx = self.h_adj[x];
                    let value = i64::from((self.adj[x] & !s).count_ones()) - i64::from(hx.count_ones())
                        + i64::from((hx & s).count_ones());
                    if value < self.hi[x] {
                        total += value - self.hi[x];
                    }
                }
            }
        }
        total
    }

    /// The T-set this criterion's rule assigns to `s`.
    pub fn t_set(&self, s: VertexSet) -> VertexSet {
        match (self.rule, self.h) {
            (Rule::FractionalFactor, _) => t_set_anstee(self.graph, s, self.g),
            (Rule::AllFactorsExcluding, Some(h)) => t_set_excluding(self.graph, h, s, self.f),
            (Rule::AllFactorsExcluding, None) => t_set_excluding(self.graph, &EdgeSubset::empty(self.graph), s, self.f),
        }
    }

    /// Scans bitmasks in `range`, clamped to `0..2^n`.
    pub fn scan(&self, range: Range<u64>) -> Scan {
        let end = (self.subset_count().min(u128::from(u64::MAX)) as u64).min(range.end);
        let mut best: Option<(i64, u64)> = None;
        let mut scanned = 0;
        for s in range.start..end {
            let d = self.deficiency(s);
            scanned += 1;
            if best.is_none_or(|(b, _)| d < b) {
                best = Some((d, s));
            }
        }
        Scan { best, scanned }
    }

    /// Splits `0..2^n` into at most `parts` contiguous ranges.
    pub fn partition(&self, parts: usize) -> Vec<Range<u64>> {
        let total = self.subset_count() as u64;
        let parts = (parts.max(1) as u64).min(total);
        let step = total.div_ceil(parts);
        (0..parts)
            .map(|i| i * step..((i + 1) * step).min(total))
            .filter(|r| !r.is_empty())
            .collect()
    }

    /// Turns a merged full scan into a report.
    pub fn report(&self, scan: Scan) -> DeficiencyReport {
        let (min_deficiency, mask) = scan.best.expect("scan covered no subsets");
        let witness_s = VertexSet::from_bits(mask);
        DeficiencyReport {
            holds: min_deficiency >= 0,
            min_deficiency,
            witness_s,
            witness_t: self.t_set(witness_s),
            scanned: scan.scanned,
        }
    }

    /// Full single-threaded scan.
    pub fn check(&self, limits: &Limits) -> Result<DeficiencyReport> {
        self.check_cap(limits)?;
        Ok(self.report(self.scan(0..u64::MAX)))
    }
}

fn sum_over(s: u64, values: &[i64]) -> i64 {
    VertexSet::from_bits(s).iter().map(|v| values[v]).sum()
}

/// Does `graph` have a fractional `(g, f)`-factor?
pub fn check_fractional_gf(graph: &Graph, g: &VertexFunc, f: &VertexFunc) -> Result<DeficiencyReport> {
    Criterion::fractional_factor(graph, g, f)?.check(&Limits::default())
}

/// Does `graph` have all fractional `(g, f)`-factors excluding `h`?
pub fn check_all_gf_excluding(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
) -> Result<DeficiencyReport> {
    Criterion::all_factors_excluding(graph, h, g, f)?.check(&Limits::default())
}

/// Does `graph` have all fractional `(g, f)`-factors?
pub fn check_all_gf(graph: &Graph, g: &VertexFunc, f: &VertexFunc) -> Result<DeficiencyReport> {
    Criterion::all_factors(graph, g, f)?.check(&Limits::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(n: usize, c: u32) -> VertexFunc {
        VertexFunc::constant(n, c).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn triangle_minus_02() -> (Graph, EdgeSubset) {
        let c3 = Graph::cycle(3).unwrap();
        let h = EdgeSubset::new(&c3, [(0, 2)]).unwrap();
        (c3, h)
    }

    #[test]
    fn single_factor_t_sets() {
        let star = Graph::star(3).unwrap();
        assert_eq!(t_set_anstee(&star, set(&[0]), &cf(4, 1)), set(&[1, 2, 3]));
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(t_set_anstee(&c3, VertexSet::EMPTY, &cf(3, 1)), VertexSet::EMPTY);
        let g = Graph::new(4, [(0, 1)]).unwrap();
        assert_eq!(t_set_anstee(&g, VertexSet::EMPTY, &cf(4, 1)), set(&[2, 3]));
    }

    #[test]
    fn excluding_t_sets() {
        let (c3, h) = triangle_minus_02();
        assert_eq!(t_set_excluding(&c3, &h, set(&[1]), &cf(3, 1)), set(&[0, 2]));
        assert_eq!(t_set_excluding(&c3, &h, VertexSet::EMPTY, &cf(3, 1)), VertexSet::EMPTY);
        let k4 = Graph::complete(4).unwrap();
        let f = VertexFunc::new(vec![1, 3, 2, 3]).unwrap();
        for s in 0..16 {
            let s = VertexSet::from_bits(s);
            let rule4: VertexSet = k4
                .vertices()
                .difference(s)
                .iter()
                .filter(|&x| k4.degree_minus(s, x).unwrap() < f.get(x) as usize)
                .collect();
            assert_eq!(t_set_excluding(&k4, &EdgeSubset::empty(&k4), s, &f), rule4);
        }
    }

    #[test]
    fn excluding_deficiency_values() {
        let (c3, h) = triangle_minus_02();
        let one = cf(3, 1);
        assert_eq!(excluding_deficiency(&c3, &h, &one, &one, set(&[1])), -1);
        assert_eq!(excluding_deficiency(&c3, &h, &one, &one, VertexSet::EMPTY), 0);
        assert_eq!(excluding_deficiency(&c3, &h, &one, &one, c3.vertices()), 3);
    }

    #[test]
    fn star_fails_at_centre() {
        let star = Graph::star(3).unwrap();
        let r = check_fractional_gf(&star, &cf(4, 1), &cf(4, 1)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.min_deficiency, -2);
        assert_eq!(r.witness_s, set(&[0]));
        assert_eq!(r.witness_t, set(&[1, 2, 3]));
        assert_eq!(r.scanned, 16);
    }

    #[test]
    fn triangle_and_k4_have_fractional_perfect_matchings() {
        let r = check_fractional_gf(&Graph::cycle(3).unwrap(), &cf(3, 1), &cf(3, 1)).unwrap();
        assert!(r.holds);
        assert_eq!((r.min_deficiency, r.witness_s), (0, VertexSet::EMPTY));
        assert_eq!(r.scanned, 8);
        assert!(
            check_fractional_gf(&Graph::complete(4).unwrap(), &cf(4, 1), &cf(4, 1))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn excluding_golden_verdicts() {
        let (c3, h) = triangle_minus_02();
        let r = check_all_gf_excluding(&c3, &h, &cf(3, 1), &cf(3, 1)).unwrap();
        assert_eq!((r.holds, r.min_deficiency, r.witness_s), (false, -1, set(&[1])));
        assert_eq!(r.witness_t, set(&[0, 2]));

        let c4 = Graph::cycle(4).unwrap();
        let h = EdgeSubset::new(&c4, [(0, 1)]).unwrap();
        assert!(check_all_gf_excluding(&c4, &h, &cf(4, 1), &cf(4, 1)).unwrap().holds);

        let k6 = Graph::complete(6).unwrap();
        let r = check_all_gf_excluding(&k6, &EdgeSubset::empty(&k6), &cf(6, 1), &cf(6, 2)).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn all_factor_verdicts() {
        assert!(
            check_all_gf(&Graph::complete(4).unwrap(), &cf(4, 1), &cf(4, 2))
                .unwrap()
                .holds
        );
        assert!(
            !check_all_gf(&Graph::star(3).unwrap(), &cf(4, 1), &cf(4, 1))
                .unwrap()
                .holds
        );
        // r = (1, 2, 2) on a triangle would need h({1,2}) = 3/2.
        let r = check_all_gf(&Graph::cycle(3).unwrap(), &cf(3, 1), &cf(3, 2)).unwrap();
        assert!(!r.holds);
        assert_eq!(
            (r.min_deficiency, r.witness_s, r.witness_t),
            (-1, set(&[0]), set(&[1, 2]))
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(30).unwrap();
        let one = cf(30, 1);
        let err = check_fractional_gf(&g, &one, &one).unwrap_err();
        assert_eq!(
            err,
            Error::Resource {
                what: "vertex count for subset enumeration",
                actual: 30,
                cap: 26
            }
        );
    }

    #[test]
    fn partitioned_scans_match_single_pass() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (1, 4)]).unwrap();
        let h = EdgeSubset::new(&g, [(1, 4), (5, 6)]).unwrap();
        let lo = VertexFunc::new(vec![1, 1, 2, 1, 1, 1, 2]).unwrap();
        let hi = VertexFunc::new(vec![2, 2, 2, 1, 3, 1, 2]).unwrap();
        let c = Criterion::all_factors_excluding(&g, &h, &lo, &hi).unwrap();
        let whole = c.check(&Limits::default()).unwrap();
        for parts in [1, 2, 3, 7, 8, 64, 1000] {
            let merged = c
                .partition(parts)
                .into_iter()
                .rev()
                .map(|r| c.scan(r))
                .fold(Scan::default(), Scan::merge);
            assert_eq!(c.report(merged), whole, "parts = {parts}");
        }
    }
}
