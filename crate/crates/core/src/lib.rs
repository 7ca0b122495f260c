//! Counting independent sets in uniform, regular, linear hypergraphs.
//!
//! The crate has three layers:
//!
//! - exact combinatorics: [`hypergraph`] (data model and validation),
//!   [`constructions`] (extremal families with closed-form counts), and
//!   [`hardcore`] (enumeration, independence polynomials, occupancy
//!   fractions, and a Glauber sampler);
//! - occupancy-method bounds: [`lp`] (a small dense simplex with dual
//!   vectors), [`weak`] and [`strong`] (local-configuration LPs, their
//!   closed-form optima, and dual certificates for weak and strong
//!   independent sets);
//! - integration: [`bounds`] turns occupancy bounds into `log2(count)/n`
//!   bounds and asymptotic constants via [`quad`].
//!
//! Start with the runnable examples (`cargo run --example ...`); each one
//! exercises a capability end to end. The `hyperocc` binary exposes the same
//! functionality as subcommands.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod hardcore;
pub mod hypergraph;
pub mod lp;
pub mod quad;
pub mod strong;
pub mod weak;

pub use hypergraph::{validate, Hypergraph, ValidationReport};
