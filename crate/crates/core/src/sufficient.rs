//! Checkers for two sufficient conditions for "all fractional
//! `(g, f)`-factors excluding `H`", each of which can also run the exact
//! criterion on the conclusion and abort if a true premise ever meets a
//! false conclusion.
//!
//! * Clique-partition condition: `V(G)` is split into at least two parts,
//!   each inducing a clique (a spanning complete-factor `F` with
//!   `omega(F) >= 2`). If `G - V(C)` has all fractional `(g, f)`-factors
//!   excluding `H` for every part `C`, so does `G`. With all parts of size
//!   two the partition is a perfect matching of `G`.
//! * Degree-ratio condition: `d_G(x) >= f(x) + d_H(x)` for every `x` and
//!   `g(x) (d_G(y) - d_H(y)) >= d_G(x) f(y)` for every ordered pair
//!   `(x, y)`, including `x = y`.
//!
//! When a part `C` is deleted, `H` keeps only the member edges with both
//! ends outside `C`, and `g`, `f` are restricted pointwise.

use thiserror::Error;

use crate::criteria::Criterion;
use crate::error::{Error, Result};
use crate::graph::{check_bounds, EdgeSubset, Graph, LabelMap, VertexFunc, VertexSet};
use crate::Limits;

/// Parts of a spanning complete-factor, as vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    parts: Vec<Vec<u32>>,
}

impl CliquePartition {
    pub fn new(parts: Vec<Vec<u32>>) -> CliquePartition {
        CliquePartition { parts }
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// `omega(F)`: the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_set(&self, i: usize) -> VertexSet {
        self.parts[i].iter().map(|&v| v as usize).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("part {part} is empty")]
    EmptyPart { part: usize },
    #[error("part {part} names vertex {vertex}, outside the graph")]
    OutOfRange { part: usize, vertex: u32 },
    #[error("part {part} repeats vertex {vertex}")]
    Overlap { part: usize, vertex: u32 },
    #[error("vertex {vertex} is in no part")]
    Missing { vertex: u32 },
    #[error("part {part} is not a clique: {{{u},{v}}} is not an edge")]
    NotClique { part: usize, u: u32, v: u32 },
}

/// Checks that `partition` covers `V(G)` with disjoint cliques.
pub fn validate_complete_factor(graph: &Graph, partition: &CliquePartition) -> Result<(), PartitionViolation> {
    let n = graph.vertex_count();
    let mut seen = VertexSet::EMPTY;
    for (part, members) in partition.parts.iter().enumerate() {
        if members.is_empty() {
            return Err(PartitionViolation::EmptyPart { part });
        }
        for &vertex in members {
            if vertex as usize >= n {
                return Err(PartitionViolation::OutOfRange { part, vertex });
            }
            if seen.contains(vertex as usize) {
                return Err(PartitionViolation::Overlap { part, vertex });
            }
            seen.insert(vertex as usize);
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !graph.has_edge(u as usize, v as usize) {
                    return Err(PartitionViolation::NotClique {
                        part,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
            }
        }
    }
    if let Some(vertex) = graph.vertices().difference(seen).iter().next() {
        return Err(PartitionViolation::Missing { vertex: vertex as u32 });
    }
    Ok(())
}

/// An instance restricted to the vertices outside some set `R`.
#[derive(Clone, Debug)]
pub struct RestrictedInstance {
    pub graph: Graph,
    pub h: EdgeSubset,
    pub g: VertexFunc,
    pub f: VertexFunc,
    pub map: LabelMap,
}

/// `(G - R, H - R, g|, f|)` with consistent relabelling.
pub fn restrict_instance(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
    removed: VertexSet,
) -> Result<RestrictedInstance> {
    check_bounds(graph.vertex_count(), g, f)?;
    h.check_host(graph)?;
    let (sub, map) = graph.delete_vertices(removed)?;
    Ok(RestrictedInstance {
        h: h.restrict(&map),
        g: g.restrict(&map),
        f: f.restrict(&map),
        graph: sub,
        map,
    })
}

/// Where a premise failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PremiseViolation {
    /// Index of the first part `C` for which `G - V(C)` fails.
    Component(usize),
    /// `d_G(x) < f(x) + d_H(x)`.
    Degree { x: usize },
    /// `g(x) (d_G(y) - d_H(y)) < d_G(x) f(y)`.
    Ratio { x: usize, y: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SufficiencyReport {
    pub premise_holds: bool,
    pub violating: Option<PremiseViolation>,
    pub conclusion_checked: bool,
    pub conclusion_holds: bool,
}

impl SufficiencyReport {
    fn premise(violating: Option<PremiseViolation>) -> Self {
        SufficiencyReport {
            premise_holds: violating.is_none(),
            violating,
            conclusion_checked: false,
            conclusion_holds: false,
        }
    }

    /// Runs the exact criterion on the full instance and records it.
    /// A true premise with a false conclusion is a soundness error.
    fn with_conclusion(
        mut self,
        what: &str,
        graph: &Graph,
        h: &EdgeSubset,
        g: &VertexFunc,
        f: &VertexFunc,
        limits: &Limits,
    ) -> Result<Self> {
        let report = Criterion::all_factors_excluding(graph, h, g, f)?.check(limits)?;
        self.conclusion_checked = true;
        self.conclusion_holds = report.holds;
        if self.premise_holds && !report.holds {
            return Err(Error::Soundness(format!(
                "{what} premise holds but the criterion fails at S = {:?} \
                 (deficiency {}) on graph {graph:?}, H = {h:?}, g = {:?}, f = {:?}",
                report.witness_s,
                report.min_deficiency,
                g.values(),
                f.values()
            )));
        }
        Ok(self)
    }
}

/// First violation of the degree-ratio premise, if any. The degree clause
/// is scanned over all `x` before the ratio clause is scanned over pairs
/// in lexicographic order.
pub fn degree_ratio_violation(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
) -> Result<Option<PremiseViolation>> {
    let n = graph.vertex_count();
    check_bounds(n, g, f)?;
    h.check_host(graph)?;
    let d: Vec<i64> = (0..n).map(|v| graph.degree(v).unwrap() as i64).collect();
    let dh: Vec<i64> = (0..n).map(|v| h.degree(v) as i64).collect();
    if let Some(x) = (0..n).find(|&x| d[x] < i64::from(f.get(x)) + dh[x]) {
        return Ok(Some(PremiseViolation::Degree { x }));
    }
    for x in 0..n {
        for y in 0..n {
            if i64::from(g.get(x)) * (d[y] - dh[y]) < d[x] * i64::from(f.get(y)) {
                return Ok(Some(PremiseViolation::Ratio { x, y }));
            }
        }
    }
    Ok(None)
}

/// Premise part only of the degree-ratio condition.
pub fn check_degree_ratio_premise(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
) -> Result<SufficiencyReport> {
    Ok(SufficiencyReport::premise(degree_ratio_violation(graph, h, g, f)?))
}

/// Degree-ratio condition, optionally cross-checked against the exact
/// criterion.
pub fn check_degree_ratio_condition(
    graph: &Graph,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
    verify_conclusion: bool,
    limits: &Limits,
) -> Result<SufficiencyReport> {
    let report = check_degree_ratio_premise(graph, h, g, f)?;
    if verify_conclusion {
        report.with_conclusion("degree-ratio", graph, h, g, f, limits)
    } else {
        Ok(report)
    }
}

/// Clique-partition condition, optionally cross-checked against the exact
/// criterion on `G` itself.
pub fn check_clique_partition_condition(
    graph: &Graph,
    partition: &CliquePartition,
    h: &EdgeSubset,
    g: &VertexFunc,
    f: &VertexFunc,
    verify_conclusion: bool,
    limits: &Limits,
) -> Result<SufficiencyReport> {
    validate_complete_factor(graph, partition).map_err(|v| Error::usage(format!("invalid partition: {v}")))?;
    if partition.len() < 2 {
        return Err(Error::usage(format!(
            "the partition needs at least two parts, got {}",
            partition.len()
        )));
    }
    let mut restricted = Vec::with_capacity(partition.len());
    for i in 0..partition.len() {
        restricted.push(restrict_instance(graph, h, g, f, partition.part_set(i))?);
    }
    for r in &restricted {
        Criterion::all_factors_excluding(&r.graph, &r.h, &r.g, &r.f)?.check_cap(limits)?;
    }
    let mut violating = None;
    for (i, r) in restricted.iter().enumerate() {
        let report = Criterion::all_factors_excluding(&r.graph, &r.h, &r.g, &r.f)?.check(limits)?;
        if !report.holds {
            violating = Some(PremiseViolation::Component(i));
            break;
        }
    }
    let report = SufficiencyReport::premise(violating);
    if verify_conclusion {
        report.with_conclusion("clique-partition", graph, h, g, f, limits)
    } else {
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(n: usize, c: u32) -> VertexFunc {
        VertexFunc::constant(n, c).unwrap()
    }

    fn two_triangles() -> CliquePartition {
        CliquePartition::new(vec![vec![0, 1, 2], vec![3, 4, 5]])
    }

    #[test]
    fn complete_factor_validation() {
        let c4 = Graph::cycle(4).unwrap();
        let matching = CliquePartition::new(vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(validate_complete_factor(&c4, &matching), Ok(()));
        let diagonals = CliquePartition::new(vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(
            validate_complete_factor(&c4, &diagonals),
            Err(PartitionViolation::NotClique { part: 0, u: 0, v: 2 })
        );
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(validate_complete_factor(&k6, &two_triangles()), Ok(()));
        assert_eq!(two_triangles().len(), 2);

        let overlap = CliquePartition::new(vec![vec![0, 1], vec![1, 2, 3]]);
        assert_eq!(
            validate_complete_factor(&c4, &overlap),
            Err(PartitionViolation::Overlap { part: 1, vertex: 1 })
        );
        let missing = CliquePartition::new(vec![vec![0, 1], vec![2]]);
        assert_eq!(
            validate_complete_factor(&c4, &missing),
            Err(PartitionViolation::Missing { vertex: 3 })
        );
    }

    #[test]
    fn degree_ratio_premise_examples() {
        let k4 = Graph::complete(4).unwrap();
        let r = check_degree_ratio_premise(&k4, &EdgeSubset::empty(&k4), &cf(4, 1), &cf(4, 1)).unwrap();
        assert!(r.premise_holds);
        assert_eq!(r.violating, None);

        let star = Graph::star(3).unwrap();
        let r = check_degree_ratio_premise(&star, &EdgeSubset::empty(&star), &cf(4, 1), &cf(4, 1)).unwrap();
        assert_eq!(r.violating, Some(PremiseViolation::Ratio { x: 0, y: 1 }));

        let k6 = Graph::complete(6).unwrap();
        let pm = EdgeSubset::new(&k6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let r = check_degree_ratio_premise(&k6, &pm, &cf(6, 1), &cf(6, 1)).unwrap();
        assert_eq!(r.violating, Some(PremiseViolation::Ratio { x: 0, y: 0 }));

        let r = check_degree_ratio_premise(&k4, &EdgeSubset::empty(&k4), &cf(4, 1), &cf(4, 4)).unwrap();
        assert_eq!(r.violating, Some(PremiseViolation::Degree { x: 0 }));
    }

    #[test]
    fn degree_ratio_with_conclusion() {
        let k4 = Graph::complete(4).unwrap();
        let r = check_degree_ratio_condition(
            &k4,
            &EdgeSubset::empty(&k4),
            &cf(4, 3),
            &cf(4, 3),
            true,
            &Limits::default(),
        )
        .unwrap();
        assert!(r.premise_holds && r.conclusion_checked && r.conclusion_holds);
    }

    #[test]
    fn restriction() {
        let k6 = Graph::complete(6).unwrap();
        let r = restrict_instance(
            &k6,
            &EdgeSubset::empty(&k6),
            &cf(6, 1),
            &cf(6, 2),
            [0, 1, 2].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(r.graph, Graph::complete(3).unwrap());
        assert_eq!((r.g, r.f), (cf(3, 1), cf(3, 2)));

        let c4 = Graph::cycle(4).unwrap();
        let h = EdgeSubset::new(&c4, [(0, 1), (2, 3)]).unwrap();
        let r = restrict_instance(&c4, &h, &cf(4, 1), &cf(4, 1), [0, 1].into_iter().collect()).unwrap();
        assert_eq!(r.graph, Graph::complete(2).unwrap());
        assert_eq!(r.h.edges(), &[(0, 1)]);
        assert_eq!(r.map.old_label(0), 2);

        let r = restrict_instance(&c4, &h, &cf(4, 1), &cf(4, 1), VertexSet::EMPTY).unwrap();
        assert_eq!((r.graph, r.h), (c4.clone(), h.clone()));
        assert!(restrict_instance(&c4, &h, &cf(4, 1), &cf(4, 1), c4.vertices()).is_err());
    }

    #[test]
    fn clique_partition_examples() {
        let lim = Limits::default();
        let k6 = Graph::complete(6).unwrap();
        let none = EdgeSubset::empty(&k6);
        let r =
            check_clique_partition_condition(&k6, &two_triangles(), &none, &cf(6, 1), &cf(6, 1), true, &lim).unwrap();
        assert!(r.premise_holds && r.conclusion_holds);

        let c4 = Graph::cycle(4).unwrap();
        let matching = CliquePartition::new(vec![vec![0, 1], vec![2, 3]]);
        let r = check_clique_partition_condition(
            &c4,
            &matching,
            &EdgeSubset::empty(&c4),
            &cf(4, 1),
            &cf(4, 1),
            true,
            &lim,
        )
        .unwrap();
        assert!(r.premise_holds && r.conclusion_holds);

        let r =
            check_clique_partition_condition(&k6, &two_triangles(), &none, &cf(6, 3), &cf(6, 3), false, &lim).unwrap();
        assert!(!r.premise_holds);
        assert_eq!(r.violating, Some(PremiseViolation::Component(0)));
        assert!(!r.conclusion_checked);
    }

    #[test]
    fn clique_partition_preconditions() {
        let lim = Limits::default();
        let k3 = Graph::complete(3).unwrap();
        let whole = CliquePartition::new(vec![vec![0, 1, 2]]);
        let err =
            check_clique_partition_condition(&k3, &whole, &EdgeSubset::empty(&k3), &cf(3, 1), &cf(3, 1), false, &lim);
        assert!(matches!(err, Err(Error::Usage(_))));

        let c4 = Graph::cycle(4).unwrap();
        let bad = CliquePartition::new(vec![vec![0, 2], vec![1, 3]]);
        let err =
            check_clique_partition_condition(&c4, &bad, &EdgeSubset::empty(&c4), &cf(4, 1), &cf(4, 1), false, &lim);
        assert!(matches!(err, Err(Error::Usage(_))));
    }
}
