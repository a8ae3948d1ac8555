//! Exact integer maximum flow and feasible circulation with lower bounds.
//!
//! Max flow is Dinic's blocking-flow algorithm over a paired residual
//! graph. Arcs are scanned in insertion order, so the flow returned for a
//! given network description is always the same.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub lower: i64,
    pub upper: i64,
}

/// Directed network with `[lower, upper]` bounds on every arc.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<Arc>,
}

/// Flow value per arc, indexed like [`FlowNetwork::arcs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow(pub Vec<i64>);

impl Flow {
    pub fn on(&self, arc: usize) -> i64 {
        self.0[arc]
    }
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            nodes,
            arcs: Vec::new(),
        }
    }

    /// Appends an arc and returns its index.
    pub fn add_arc(&mut self, tail: usize, head: usize, lower: i64, upper: i64) -> Result<usize> {
        if tail >= self.nodes || head >= self.nodes {
            return Err(Error::usage(format!(
                "arc {tail}->{head} leaves node range 0..{}",
                self.nodes
            )));
        }
        if lower < 0 || lower > upper {
            return Err(Error::usage(format!(
                "arc {tail}->{head} has bounds [{lower}, {upper}]"
            )));
        }
        self.arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
        });
        Ok(self.arcs.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Net inflow minus outflow at every node.
    fn imbalance(&self, flow: &Flow) -> Vec<i64> {
        let mut bal = vec![0i64; self.nodes];
        for (a, &x) in self.arcs.iter().zip(&flow.0) {
            bal[a.head] += x;
            bal[a.tail] -= x;
        }
        bal
    }

    /// Checks bounds on every arc and conservation at every node except
    /// the terminals (if any).
    pub fn check_flow(&self, flow: &Flow, terminals: Option<(usize, usize)>) -> Result<(), String> {
        if flow.0.len() != self.arcs.len() {
            return Err(format!("flow has {} values for {} arcs", flow.0.len(), self.arcs.len()));
        }
        for (i, (a, &x)) in self.arcs.iter().zip(&flow.0).enumerate() {
            if x < a.lower || x > a.upper {
                return Err(format!(
                    "arc {i} ({}->{}) carries {x} outside [{}, {}]",
                    a.tail, a.head, a.lower, a.upper
                ));
            }
        }
        for (v, &b) in self.imbalance(flow).iter().enumerate() {
            let terminal = terminals.is_some_and(|(s, t)| v == s || v == t);
            if b != 0 && !terminal {
                return Err(format!("node {v} is out of balance by {b}"));
            }
        }
        Ok(())
    }

    /// One line per arc: `tail head lower upper flow`.
    pub fn listing(&self, flow: Option<&Flow>) -> String {
        let mut out = String::new();
        for (i, a) in self.arcs.iter().enumerate() {
            let x = flow.map_or(0, |f| f.0[i]);
            let _ = writeln!(out, "{} {} {} {} {}", a.tail, a.head, a.lower, a.upper, x);
        }
        out
    }
}

/// Residual graph with arc `2i` forward and `2i + 1` its reverse.
struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl Residual {
    fn new(nodes: usize) -> Residual {
        Residual {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    fn add(&mut self, tail: usize, head: usize, cap: i64) -> usize {
        let id = self.head.len();
        self.head.extend([head, tail]);
        self.cap.extend([cap, 0]);
        self.out[tail].push(id);
        self.out[head].push(id + 1);
        id
    }

    /// Flow currently pushed along forward arc `id`.
    fn pushed(&self, id: usize) -> i64 {
        self.cap[id + 1]
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.cursor[u] < self.out[u].len() {
            let e = self.out[u][self.cursor[u]];
            let v = self.head[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    fn run(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.fill(0);
            loop {
                let pushed = self.dfs(s, t, i64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

fn capacity_guard(net: &FlowNetwork) {
    let total: i128 = net.arcs.iter().map(|a| i128::from(a.upper)).sum();
    debug_assert!(total < i128::from(i64::MAX / 4), "capacity sum {total} too large");
}

/// Maximum `s`-`t` flow in a network whose lower bounds are all zero.
pub fn max_flow(net: &FlowNetwork, s: usize, t: usize) -> Result<(i64, Flow)> {
    if s == t {
        return Err(Error::usage("source and sink coincide"));
    }
    if s >= net.nodes || t >= net.nodes {
        return Err(Error::usage("terminal out of node range"));
    }
    if let Some(i) = net.arcs.iter().position(|a| a.lower != 0) {
        return Err(Error::usage(format!(
            "max_flow needs zero lower bounds; arc {i} has {}",
            net.arcs[i].lower
        )));
    }
    capacity_guard(net);
    let mut res = Residual::new(net.nodes);
    for a in &net.arcs {
        res.add(a.tail, a.head, a.upper);
    }
    let value = res.run(s, t);
    let flow = Flow((0..net.arcs.len()).map(|i| res.pushed(2 * i)).collect());
    assert_eq!(net.check_flow(&flow, Some((s, t))), Ok(()));
    Ok((value, flow))
}

/// A circulation meeting every arc's bounds, or `None` if none exists.
///
/// Lower bounds are shifted out, each node's resulting excess or deficit is
/// wired to a super source or super sink, and the circulation is feasible
/// exactly when a maximum flow saturates all of those super arcs.
pub fn feasible_circulation(net: &FlowNetwork) -> Option<Flow> {
    capacity_guard(net);
    let n = net.nodes;
    let (src, snk) = (n, n + 1);
    let mut res = Residual::new(n + 2);
    let mut excess = vec![0i64; n];
    for a in &net.arcs {
        res.add(a.tail, a.head, a.upper - a.lower);
        excess[a.head] += a.lower;
        excess[a.tail] -= a.lower;
    }
    let mut demand = 0;
    for (v, &x) in excess.iter().enumerate() {
        if x > 0 {
            res.add(src, v, x);
            demand += x;
        } else if x < 0 {
            res.add(v, snk, -x);
        }
    }
    if res.run(src, snk) != demand {
        return None;
    }
    let flow = Flow(
        net.arcs
            .iter()
            .enumerate()
            .map(|(i, a)| a.lower + res.pushed(2 * i))
            .collect(),
    );
    assert_eq!(net.check_flow(&flow, None), Ok(()));
    Some(flow)
}
