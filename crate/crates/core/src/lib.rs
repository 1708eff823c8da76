//! Exact symbolic computation in the q-deformed Heisenberg algebra
//! `H(q) = <A, B | AB - qBA = I>`, with emphasis on `q` a primitive `p`-th
//! root of unity.
//!
//! * [`qscalar`]: coefficient fields, q-integers and q-binomials.
//! * [`heisenberg`]: the basis `C^k`, `C^k A^l`, `B^l C^k` (`C = [A, B]`),
//!   structure-constant multiplication, and an independent word-rewriting
//!   normal form.
//! * [`torsion`]: root-of-unity specializations and centrality.
//! * [`liepoly`]: Lie polynomials in `A, B`: classification, membership,
//!   explicit bracket constructions, and a bracket-closure oracle.
//! * [`cli`]: the expression language and the `qheis` command driver.

pub mod cli;
pub mod error;
pub mod heisenberg;
pub mod liepoly;
pub mod qscalar;
pub mod torsion;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use heisenberg::{Element, FreePoly, FreeWord, Monomial};
pub use qscalar::{Scalar, ScalarContext, ScalarMode};
