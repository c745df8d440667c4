//! Exact symbolic engine for metaplectic Iwahori Whittaker functions of
//! `GL_r` and the supersymmetric lattice models that compute them.
//!
//! * [`coefficients`] — the ring `Q[v^±1, g(1..n-1)]` with Gauss-sum relations;
//! * [`laurent`] — Laurent polynomials over it, with the Weyl action;
//! * [`weyl`] — `S_r`: lengths, paths, almost-dominant decompositions;
//! * [`lattice`] — monochrome / color-fused / fully-fused systems and their
//!   partition functions;
//! * [`ybe`] — R-matrices and Yang–Baxter verifiers;
//! * [`whittaker`] — Demazure–Whittaker operators and Whittaker values;
//! * [`verify`] — the cross-verification sweeps;
//! * [`cli`] — the command-line front end.

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod laurent;
pub mod lattice;
pub mod report;
pub mod verify;
pub mod weyl;
pub mod whittaker;
pub mod ybe;

pub use coefficients::{GaussElem, GaussMonomial, GaussRing, GaussValues};
pub use error::{Error, Result};
pub use laurent::{ExponentVec, LaurentPoly, RationalLaurent};
pub use lattice::{SystemSpec, Variant};
pub use report::{Failure, Report};
pub use weyl::{AlmostDominantPair, Permutation};
pub use whittaker::WhittakerVector;
