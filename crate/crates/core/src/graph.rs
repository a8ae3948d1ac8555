//! Simple undirected graphs on dense labels `0..n`, edge subsets of a host
//! graph, integer vertex functions, and the degree and cut counts that every
//! deficiency formula is built from.
//!
//! Vertex sets are `u64` bitmasks, so graphs are limited to 64 vertices.
//! Every adjacency row is kept both as a sorted neighbour list and as a
//! bitmask; counting neighbours inside or outside a set is a popcount.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().map(|v| v as u32).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Anything that can answer "which vertices does `v` share an edge with".
///
/// Implemented by [`Graph`] (all edges) and [`EdgeSubset`] (member edges
/// only), so the cut counts below serve both `e_G` and `e_H` style
/// quantities.
pub trait EdgeSet {
    fn vertex_count(&self) -> usize;

    /// Neighbour bitmask of `v` restricted to this edge set.
    fn adjacency(&self, v: usize) -> u64;

    /// Number of edges with one end in `s` and the other in `t`.
    fn edges_between(&self, s: VertexSet, t: VertexSet) -> Result<usize> {
        if !s.is_disjoint(t) {
            return Err(Error::usage(format!(
                "edge count between overlapping sets {s:?} and {t:?}"
            )));
        }
        Ok(s.iter()
            .map(|x| (self.adjacency(x) & t.bits()).count_ones() as usize)
            .sum())
    }

    /// Number of edges joining `x` to a vertex of `s`; `x` must lie outside `s`.
    fn edges_vertex_to_set(&self, x: usize, s: VertexSet) -> Result<usize> {
        check_vertex(self.vertex_count(), x)?;
        if s.contains(x) {
            return Err(Error::usage(format!("vertex {x} lies inside {s:?}")));
        }
        Ok((self.adjacency(x) & s.bits()).count_ones() as usize)
    }
}

fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v >= n {
        Err(Error::usage(format!("vertex {v} out of range 0..{n}")))
    } else {
        Ok(())
    }
}

fn normalize(n: usize, u: u32, v: u32) -> Result<(u32, u32)> {
    if u == v {
        return Err(Error::usage(format!("loop at vertex {u}")));
    }
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    if b as usize >= n {
        return Err(Error::usage(format!(
            "edge {{{a},{b}}} has endpoint out of range 0..{n}"
        )));
    }
    Ok((a, b))
}

/// A simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<u64>,
    neighbors: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::usage(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            list.push(normalize(n, u, v)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::usage(format!("duplicate edge {{{},{}}}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        let mut adj = vec![0u64; n];
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        for (v, row) in neighbors.iter_mut().enumerate() {
            *row = VertexSet(adj[v]).to_vec();
        }
        Graph {
            n,
            edges,
            adj,
            neighbors,
        }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let n32 = n as u32;
        Graph::new(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::usage("a cycle needs at least 3 vertices"));
        }
        let n32 = n as u32;
        Graph::new(n, (0..n32).map(|u| (u, (u + 1) % n32)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let n32 = n as u32;
        Graph::new(n, (1..n32).map(|u| (u - 1, u)))
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::new(leaves + 1, (1..=leaves as u32).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        check_vertex(self.n, v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).max().unwrap_or(0)
    }

    /// Degree of `x` in `G - S`: neighbours of `x` outside `s`.
    pub fn degree_minus(&self, s: VertexSet, x: usize) -> Result<usize> {
        check_vertex(self.n, x)?;
        if s.contains(x) {
            return Err(Error::usage(format!("vertex {x} lies inside {s:?}")));
        }
        Ok((self.adj[x] & !s.bits()).count_ones() as usize)
    }

    /// `G - E(H)`: same vertices, member edges of `h` removed.
    pub fn remove_edges(&self, h: &EdgeSubset) -> Result<Graph> {
        h.check_host(self)?;
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| h.edges.binary_search(e).is_err())
            .collect();
        Ok(Graph::from_sorted(self.n, edges))
    }

    /// The induced subgraph on `V(G) \ s`, relabelled to `0..n-|s|` in
    /// increasing order of the surviving labels.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, LabelMap)> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::usage(format!("{s:?} is not a subset of 0..{}", self.n)));
        }
        if s == self.vertices() {
            return Err(Error::usage("deleting every vertex leaves an empty graph"));
        }
        let map = LabelMap::keeping(self.n, self.vertices().difference(s));
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map.new_label(u as usize)?, map.new_label(v as usize)?)))
            .map(|(u, v)| (u as u32, v as u32))
            .collect();
        Ok((Graph::from_sorted(map.new_count(), edges), map))
    }
}

impl EdgeSet for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Correspondence between labels of a graph and of one of its induced
/// subgraphs. Surviving vertices keep their relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    to_new: Vec<Option<usize>>,
    to_old: Vec<usize>,
}

impl LabelMap {
    fn keeping(n: usize, kept: VertexSet) -> LabelMap {
        let to_old: Vec<usize> = kept.iter().collect();
        let mut to_new = vec![None; n];
        for (new, &old) in to_old.iter().enumerate() {
            to_new[old] = Some(new);
        }
        LabelMap { to_new, to_old }
    }

    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.to_new.get(old).copied().flatten()
    }

    pub fn old_label(&self, new: usize) -> usize {
        self.to_old[new]
    }

    pub fn new_count(&self) -> usize {
        self.to_old.len()
    }

    /// Image of `set` (vertices deleted by the map are dropped).
    pub fn map_set(&self, set: VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_label(v)).collect()
    }

    /// Preimage of a set of new labels.
    pub fn unmap_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.old_label(v)).collect()
    }
}

/// A set of edges of a host graph: the excluded subgraph `H`, which only
/// ever enters the criteria through its degrees and cut counts.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSubset {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<u64>,
}

impl EdgeSubset {
    /// Validates every pair against `host`.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<EdgeSubset> {
        let mut list = Vec::new();
        for (u, v) in edges {
            let e = normalize(host.n, u, v)?;
            if host.edge_index(e.0, e.1).is_none() {
                return Err(Error::usage(format!(
                    "{{{},{}}} is not an edge of the host graph",
                    e.0, e.1
                )));
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(host.n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> EdgeSubset {
        let mut adj = vec![0u64; n];
        for &(u, v) in &edges {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        EdgeSubset { n, edges, adj }
    }

    pub fn empty(host: &Graph) -> EdgeSubset {
        Self::from_sorted(host.n, Vec::new())
    }

    /// Every edge of `host`.
    pub fn all(host: &Graph) -> EdgeSubset {
        Self::from_sorted(host.n, host.edges.clone())
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: u32, v: u32) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    /// `d_H(v)`; zero for labels outside the host.
    pub fn degree(&self, v: usize) -> usize {
        self.adj.get(v).map_or(0, |a| a.count_ones() as usize)
    }

    pub fn is_subset_of(&self, other: &EdgeSubset) -> bool {
        self.edges.iter().all(|e| other.edges.binary_search(e).is_ok())
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut edges: Vec<_> = self.edges.iter().chain(&other.edges).copied().collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(self.n.max(other.n), edges)
    }

    /// Member edges with both ends kept by `map`, relabelled.
    pub fn restrict(&self, map: &LabelMap) -> EdgeSubset {
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let a = map.new_label(u as usize)? as u32;
                let b = map.new_label(v as usize)? as u32;
                Some((a, b))
            })
            .collect();
        Self::from_sorted(map.new_count(), edges)
    }

    pub(crate) fn check_host(&self, host: &Graph) -> Result<()> {
        if self.n != host.n {
            return Err(Error::usage(format!(
                "edge subset over {} vertices used with a graph on {}",
                self.n, host.n
            )));
        }
        match self.edges.iter().find(|&&(u, v)| host.edge_index(u, v).is_none()) {
            Some(&(u, v)) => Err(Error::usage(format!("{{{u},{v}}} is not an edge of the host graph"))),
            None => Ok(()),
        }
    }
}

impl EdgeSet for EdgeSubset {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("EdgeSubset").field(&self.edges).finish()
    }
}

/// A positive integer per vertex: the roles `g`, `f` and `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexFunc(Vec<u32>);

impl VertexFunc {
    pub fn new(values: Vec<u32>) -> Result<VertexFunc> {
        if let Some(v) = values.iter().position(|&x| x == 0) {
            return Err(Error::usage(format!("value at vertex {v} must be positive")));
        }
        Ok(VertexFunc(values))
    }

    pub fn constant(n: usize, value: u32) -> Result<VertexFunc> {
        VertexFunc::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Sum of values over `set`, written `g(S)` in formulas.
    pub fn sum(&self, set: VertexSet) -> i64 {
        set.iter().map(|v| i64::from(self.0[v])).sum()
    }

    /// Values at the vertices kept by `map`, in new-label order.
    pub fn restrict(&self, map: &LabelMap) -> VertexFunc {
        VertexFunc((0..map.new_count()).map(|v| self.0[map.old_label(v)]).collect())
    }

    pub(crate) fn check_len(&self, n: usize, role: &str) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::usage(format!(
                "{role} has {} values for {n} vertices",
                self.0.len()
            )));
        }
        Ok(())
    }
}

/// Checks that `lo` and `hi` both cover `n` vertices and `lo <= hi` pointwise.
pub fn check_bounds(n: usize, lo: &VertexFunc, hi: &VertexFunc) -> Result<()> {
    lo.check_len(n, "lower bound")?;
    hi.check_len(n, "upper bound")?;
    match (0..n).find(|&v| lo.get(v) > hi.get(v)) {
        Some(v) => Err(Error::usage(format!(
            "lower bound {} exceeds upper bound {} at vertex {v}",
            lo.get(v),
            hi.get(v)
        ))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::star(3).unwrap().degree(0).unwrap(), 3);
        assert_eq!(Graph::cycle(3).unwrap().degree(1).unwrap(), 2);
        assert_eq!(Graph::empty(1).unwrap().degree(0).unwrap(), 0);
        assert!(matches!(Graph::cycle(3).unwrap().degree(3), Err(Error::Usage(_))));
    }

    #[test]
    fn degree_outside_set() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.degree_minus(set(&[0]), 1).unwrap(), 1);
        assert_eq!(c3.degree_minus(VertexSet::EMPTY, 2).unwrap(), 2);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.degree_minus(set(&[1, 2]), 0).unwrap(), 1);
        assert!(k4.degree_minus(set(&[0]), 0).is_err());
    }

    #[test]
    fn subset_degrees_and_cuts() {
        let c3 = Graph::cycle(3).unwrap();
        let h = EdgeSubset::new(&c3, [(2, 0)]).unwrap();
        assert_eq!(h.edges(), &[(0, 2)]);
        assert_eq!(EdgeSubset::empty(&c3).degree(1), 0);
        assert_eq!(h.degree(0), 1);
        assert_eq!(h.degree(1), 0);
        assert_eq!(h.edges_between(set(&[1]), set(&[0, 2])).unwrap(), 0);
        assert_eq!(h.edges_vertex_to_set(0, set(&[1])).unwrap(), 0);
        assert_eq!(h.edges_vertex_to_set(2, set(&[0])).unwrap(), 1);
        assert!(h.edges_vertex_to_set(0, set(&[0])).is_err());
        assert!(EdgeSubset::new(&Graph::path(3).unwrap(), [(0, 2)]).is_err());
    }

    #[test]
    fn cut_counts_on_c4() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.edges_between(set(&[0]), set(&[2])).unwrap(), 0);
        assert_eq!(c4.edges_between(set(&[0]), set(&[1, 3])).unwrap(), 2);
        assert!(c4.edges_between(set(&[0, 1]), set(&[1])).is_err());
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
        assert!(Graph::new(65, []).is_err());
        assert!(VertexFunc::new(vec![1, 0]).is_err());
    }

    #[test]
    fn edge_removal() {
        let c3 = Graph::cycle(3).unwrap();
        let h = EdgeSubset::new(&c3, [(0, 2)]).unwrap();
        assert_eq!(c3.remove_edges(&h).unwrap(), Graph::path(3).unwrap());
        assert_eq!(c3.remove_edges(&EdgeSubset::empty(&c3)).unwrap(), c3);
        let c4 = Graph::cycle(4).unwrap();
        let h = EdgeSubset::new(&c4, [(0, 1)]).unwrap();
        let p = c4.remove_edges(&h).unwrap();
        assert_eq!(p.edges(), &[(0, 3), (1, 2), (2, 3)]);
        // isomorphic to P4: 1-2-3-0
        let mut degs: Vec<_> = (0..4).map(|v| p.degree(v).unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        let foreign = EdgeSubset::new(&Graph::complete(4).unwrap(), [(0, 2)]).unwrap();
        assert!(c4.remove_edges(&foreign).is_err());
    }

    #[test]
    fn vertex_deletion() {
        let (k3, map) = Graph::complete(4).unwrap().delete_vertices(set(&[3])).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(map.new_label(3), None);

        let (p3, map) = Graph::cycle(4).unwrap().delete_vertices(set(&[0])).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(map.old_label(0), 1);

        let c4 = Graph::cycle(4).unwrap();
        let (same, map) = c4.delete_vertices(VertexSet::EMPTY).unwrap();
        assert_eq!(same, c4);
        assert!((0..4).all(|v| map.new_label(v) == Some(v)));

        assert!(c4.delete_vertices(c4.vertices()).is_err());
    }

    #[test]
    fn vertex_set_basics() {
        let s = set(&[0, 3, 63]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 3, 63]);
        assert!(s.contains(63) && !s.contains(64));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(format!("{:?}", set(&[1, 2])), "{1, 2}");
    }
}
