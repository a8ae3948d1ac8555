//! Fractional `(g, f)`-factors of simple graphs.
//!
//! A fractional `(g, f)`-factor of a graph `G` is a weighting
//! `h: E(G) -> [0, 1]` whose load `sum_{e in E(x)} h(e)` lies in
//! `[g(x), f(x)]` at every vertex. This crate
//!
//! * constructs such factors as half-integral weightings via a flow
//!   network ([`factor`], backed by [`flow`]);
//! * decides, with an explicit minimising witness, whether one factor
//!   exists, whether every fractional `r`-factor with `g <= r <= f`
//!   exists, and whether they all exist while avoiding the edges of a
//!   subgraph `H` ([`criteria`]);
//! * checks two sufficient conditions for the last property and can
//!   cross-check their conclusions ([`sufficient`]);
//! * ships brute-force oracles, seeded generators and a fuzzer that tie
//!   the criteria to direct construction ([`harness`]).
//!
//! ```
//! use fracfactor::criteria::check_all_gf_excluding;
//! use fracfactor::graph::{EdgeSubset, Graph, VertexFunc};
//!
//! let triangle = Graph::cycle(3)?;
//! let h = EdgeSubset::new(&triangle, [(0, 2)])?;
//! let one = VertexFunc::constant(3, 1)?;
//! let report = check_all_gf_excluding(&triangle, &h, &one, &one)?;
//! assert!(!report.holds);
//! assert_eq!(report.witness_s.to_vec(), vec![1]);
//! # Ok::<(), fracfactor::Error>(())
//! ```

pub mod criteria;
pub mod error;
pub mod factor;
pub mod flow;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod sufficient;

pub use error::{Error, Result};

/// Caps on exhaustive enumeration. Exceeding one is an error, never a
/// reason to sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which the `2^n` subset scans run. At most 63.
    pub max_subset_vertices: usize,
    /// Largest number of functions `g <= r <= f` the brute-force oracle
    /// will enumerate.
    pub max_r_functions: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subset_vertices: 26,
            max_r_functions: 1_000_000,
        }
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/constructing-factors.md")]
    mod constructing_factors {}
    #[doc = include_str!("../../../book/src/deficiency-criteria.md")]
    mod deficiency_criteria {}
    #[doc = include_str!("../../../book/src/excluding-edges.md")]
    mod excluding_edges {}
    #[doc = include_str!("../../../book/src/sufficient-conditions.md")]
    mod sufficient_conditions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
