#![allow(dead_code)]

use fracfactor::graph::{EdgeSubset, Graph, VertexFunc};

/// Every labelled graph on `n` vertices, in edge-bitmask order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Every edge subset of `graph`.
pub fn all_subsets(graph: &Graph) -> Vec<EdgeSubset> {
    let edges = graph.edges();
    (0u64..1 << edges.len())
        .map(|mask| {
            let kept = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            EdgeSubset::new(graph, kept).unwrap()
        })
        .collect()
}

/// Every vertex function with values in `1..=max`.
pub fn all_funcs(n: usize, max: u32) -> Vec<VertexFunc> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    loop {
        out.push(VertexFunc::new(cur.clone()).unwrap());
        let mut i = 0;
        while i < n && cur[i] == max {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        cur[i] += 1;
    }
}

pub fn constant(n: usize, c: u32) -> VertexFunc {
    VertexFunc::constant(n, c).unwrap()
}
