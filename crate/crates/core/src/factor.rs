//! Construction of fractional factors as explicit half-integral edge weights.
//!
//! A fractional `(lo, hi)`-factor of `G` is found as a circulation in the
//! bipartite double cover of `G`: every vertex `v` gets a left copy `A_v`
//! and a right copy `B_v`, every edge `{u, v}` becomes the two unit arcs
//! `A_u -> B_v` and `A_v -> B_u`, and the flow through `A_v` and through
//! `B_v` is held inside `[lo(v), hi(v)]`. Averaging the two arcs of an edge
//! gives a weight in `{0, 1/2, 1}`, and the load at `v` is the average of
//! the flow through its two copies. Conversely any fractional factor puts
//! the same weight on both arcs of an edge, so an integral circulation
//! exists whenever a fractional factor does.

use std::fmt;

use thiserror::Error;

use crate::error::Result;
use crate::flow::{feasible_circulation, Flow, FlowNetwork};
use crate::graph::{check_bounds, EdgeSubset, Graph, VertexFunc};

/// Edge weights `h(e) = t(e) / 2` with `t(e)` in `{0, 1, 2}`, indexed like
/// [`Graph::edges`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfIntegralAssignment(Vec<u8>);

impl HalfIntegralAssignment {
    pub fn zero(graph: &Graph) -> Self {
        HalfIntegralAssignment(vec![0; graph.edge_count()])
    }

    pub fn from_twice(values: Vec<u8>) -> Self {
        HalfIntegralAssignment(values)
    }

    pub fn twice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A fractional factor together with its vertex loads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorWitness {
    assignment: HalfIntegralAssignment,
    loads2: Vec<u32>,
}

impl FactorWitness {
    /// Computes loads from the assignment. The assignment must be indexed
    /// like `graph.edges()`.
    pub fn new(graph: &Graph, assignment: HalfIntegralAssignment) -> FactorWitness {
        let mut loads2 = vec![0u32; graph.vertex_count()];
        for (&(u, v), &t) in graph.edges().iter().zip(assignment.twice()) {
            loads2[u as usize] += u32::from(t);
            loads2[v as usize] += u32::from(t);
        }
        FactorWitness { assignment, loads2 }
    }

    pub fn assignment(&self) -> &HalfIntegralAssignment {
        &self.assignment
    }

    /// Twice the load `sum_{e in E(v)} h(e)`.
    pub fn load2(&self, v: usize) -> u32 {
        self.loads2[v]
    }

    /// `(u, v, t)` triples in edge order.
    pub fn triples(&self, graph: &Graph) -> Vec<(u32, u32, u8)> {
        graph
            .edges()
            .iter()
            .zip(self.assignment.twice())
            .map(|(&(u, v), &t)| (u, v, t))
            .collect()
    }
}

/// Node layout of [`build_factor_network`].
pub mod layout {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    pub fn left(v: usize) -> usize {
        2 + v
    }

    pub fn right(n: usize, v: usize) -> usize {
        2 + n + v
    }
}

/// The double-cover circulation network for a fractional `(lo, hi)`-factor.
///
/// Arc order: for the `i`-th edge `{u, v}` (u < v), arcs `2i` (`A_u -> B_v`)
/// and `2i + 1` (`A_v -> B_u`); then `s -> A_v` for each `v`; then
/// `B_v -> t` for each `v`; last the return arc `t -> s`.
pub fn build_factor_network(graph: &Graph, lo: &VertexFunc, hi: &VertexFunc) -> Result<FlowNetwork> {
    let n = graph.vertex_count();
    check_bounds(n, lo, hi)?;
    let mut net = FlowNetwork::new(2 * n + 2);
    for &(u, v) in graph.edges() {
        let (u, v) = (u as usize, v as usize);
        net.add_arc(layout::left(u), layout::right(n, v), 0, 1)?;
        net.add_arc(layout::left(v), layout::right(n, u), 0, 1)?;
    }
    for v in 0..n {
        net.add_arc(layout::SOURCE, layout::left(v), lo.get(v).into(), hi.get(v).into())?;
    }
    for v in 0..n {
        net.add_arc(layout::right(n, v), layout::SINK, lo.get(v).into(), hi.get(v).into())?;
    }
    let total: i64 = hi.values().iter().map(|&x| i64::from(x)).sum();
    net.add_arc(layout::SINK, layout::SOURCE, 0, total)?;
    Ok(net)
}

fn witness_from_flow(graph: &Graph, flow: &Flow) -> FactorWitness {
    let twice = (0..graph.edge_count())
        .map(|i| (flow.on(2 * i) + flow.on(2 * i + 1)) as u8)
        .collect();
    FactorWitness::new(graph, HalfIntegralAssignment(twice))
}

/// A fractional `(g, f)`-factor of `graph`, or `None` if there is none.
pub fn construct_fractional_factor(graph: &Graph, g: &VertexFunc, f: &VertexFunc) -> Result<Option<FactorWitness>> {
    let net = build_factor_network(graph, g, f)?;
    Ok(feasible_circulation(&net).map(|flow| witness_from_flow(graph, &flow)))
}

/// A fractional `r`-factor of `graph` that puts zero weight on every edge
/// of `h`, found in `G - E(H)` and lifted back to `graph`'s edge indexing.
pub fn construct_excluding(graph: &Graph, h: &EdgeSubset, r: &VertexFunc) -> Result<Option<FactorWitness>> {
    let reduced = graph.remove_edges(h)?;
    let Some(w) = construct_fractional_factor(&reduced, r, r)? else {
        return Ok(None);
    };
    Ok(Some(lift(graph, &reduced, &w)))
}

/// Re-indexes a witness on a spanning subgraph onto `graph`'s edges.
pub(crate) fn lift(graph: &Graph, sub: &Graph, w: &FactorWitness) -> FactorWitness {
    let mut twice = vec![0u8; graph.edge_count()];
    for (&(u, v), &t) in sub.edges().iter().zip(w.assignment.twice()) {
        let i = graph.edge_index(u, v).expect("spanning subgraph edge");
        twice[i] = t;
    }
    FactorWitness::new(graph, HalfIntegralAssignment(twice))
}

/// Why a witness fails to be a fractional `(g, f)`-factor excluding `H`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    /// The assignment is not defined on exactly the graph's edges.
    #[error("assignment has {actual} values for {expected} edges")]
    DomainMismatch { expected: usize, actual: usize },
    #[error("edge {{{u},{v}}} has twice-value {twice}, outside 0..=2")]
    OutOfRange { u: u32, v: u32, twice: u8 },
    #[error("vertex {vertex} has load {} outside [{lo}, {hi}]", HalfLoad(*load2))]
    Load {
        vertex: usize,
        load2: u32,
        lo: u32,
        hi: u32,
    },
    #[error("excluded edge {{{u},{v}}} carries twice-value {twice}")]
    ExcludedEdge { u: u32, v: u32, twice: u8 },
}

struct HalfLoad(u32);

impl fmt::Display for HalfLoad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Checks the defining inequalities `g(x) <= load(x) <= f(x)` and that no
/// edge of `h` carries weight. Reports the first violation: range errors in
/// edge order, then loads in vertex order, then excluded edges.
pub fn validate_witness(
    graph: &Graph,
    witness: &FactorWitness,
    g: &VertexFunc,
    f: &VertexFunc,
    h: &EdgeSubset,
) -> Result<(), Violation> {
    let twice = witness.assignment.twice();
    if twice.len() != graph.edge_count() || witness.loads2.len() != graph.vertex_count() {
        return Err(Violation::DomainMismatch {
            expected: graph.edge_count(),
            actual: twice.len(),
        });
    }
    for (&(u, v), &t) in graph.edges().iter().zip(twice) {
        if t > 2 {
            return Err(Violation::OutOfRange { u, v, twice: t });
        }
    }
    // Recompute loads rather than trusting the cached ones.
    let fresh = FactorWitness::new(graph, witness.assignment.clone());
    for v in 0..graph.vertex_count() {
        let load2 = fresh.loads2[v];
        let (lo, hi) = (g.get(v), f.get(v));
        if load2 < 2 * lo || load2 > 2 * hi {
            return Err(Violation::Load {
                vertex: v,
                load2,
                lo,
                hi,
            });
        }
    }
    for &(u, v) in h.edges() {
        let t = graph.edge_index(u, v).map_or(0, |i| twice[i]);
        if t != 0 {
            return Err(Violation::ExcludedEdge { u, v, twice: t });
        }
    }
    Ok(())
}
