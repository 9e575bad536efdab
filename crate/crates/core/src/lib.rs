//! Enumeration of Golomb rulers and acyclic orientations of mixed graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`golomb`]: brute-force enumeration of Golomb rulers in gap form,
//!   the oracle for everything else;
//! * [`quasipoly`]: exact-rational quasipolynomials interpolated from
//!   ruler counts, evaluated at negative arguments for reciprocity;
//! * [`arrangement`]: the hyperplanes `sum_U z = sum_V z` inside the
//!   standard simplex, the vertices of the resulting subdivision and the
//!   period bound they give;
//! * [`golombgraph`]: the Golomb mixed graph, the orientations indexing
//!   the regions of the subdivision and Golomb multiplicities;
//! * [`mixedgraph`]: chromatic polynomials, acyclic orientations and
//!   coloring reciprocity for general mixed graphs.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arrangement;
mod budget;
mod error;
pub mod golomb;
pub mod golombgraph;
pub mod linalg;
pub mod lp;
pub mod mixedgraph;
pub mod poly;
pub mod quasipoly;
pub mod rational;

pub use budget::{Budget, DEFAULT_NODE_BUDGET};
pub use error::{Error, Result};
pub use rational::Rational;
