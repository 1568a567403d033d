#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod links;
pub mod prover;
pub mod report;
