//! Certified sample points on smooth real algebraic sets, and the
//! bi-homogeneous Bezout machinery behind their output-size bounds.
//!
//! Everything runs in exact rational arithmetic. The main entry points:
//!
//! - [`poly`]: sparse multivariate polynomials over Q, variable blocks,
//!   bi-degrees, bi-homogenization, linear changes of variables.
//! - [`groebner`]: Buchberger engine with normal forms, dimension, degree
//!   by generic slicing, elimination ideals and quotient bases.
//! - [`bihom`]: Hilbert bi-series, canonical forms, bi-degrees by slicing,
//!   and the closed-form bound calculators (bi-homogeneous Bezout, critical
//!   locus, connected-component and Thom-Milnor bounds).
//! - [`lagrange`]: builders for Lagrange critical-point systems, projection
//!   systems and pinned fiber systems.
//! - [`sampler`]: the end-to-end pipeline producing at least one certified
//!   point per connected component of a smooth real algebraic set.
//!
//! See the crate examples for runnable walkthroughs of each capability, and
//! the `realpoints` binary for a thin command-line front end.

pub mod bihom;
pub mod cli;
pub mod groebner;
pub mod interval;
pub mod lagrange;
pub mod poly;
pub mod rng;
pub mod report;
pub mod sampler;
pub mod sysfile;
pub mod upoly;
