//! Exact singularity invariants of monomial multiideals on affine space.
//!
//! Log canonical thresholds and minimal log discrepancies at the origin are
//! computed over toric divisors (Newton polyhedra, selection-region LPs) and,
//! independently, through codimensions of contact loci in the arc space. The
//! crate also generates jet-scheme equations symbolically and implements the
//! valuation-preserving lifting of polynomials from `𝔽_p` to `ℤ`.

pub mod error;
pub mod harness;
pub mod ideal;
pub mod invariants;
pub mod jets;
pub mod lifting;
pub mod poly;
pub mod polyhedra;
pub mod problem;
pub mod rational;
pub mod toric;

pub use error::{Error, Result};
pub use ideal::{contains, minimalize, power_of_maximal_ideal, ExponentVector, MonomialIdeal, MultiIdeal};
pub use poly::{Ring, SparsePolynomial};
pub use polyhedra::{lct_howald, val_w_ideal, val_w_polynomial, NewtonPolyhedron, Valuation, WeightVector};
pub use rational::Rational;
