//! Generalized toric codes over GF(p^s), their subfield-subcodes over GF(p),
//! dual codes, and exact weight/distance computation at desk scale.
//!
//! The main pipeline: pick a field GF(p^s) and a set U of exponent vectors in
//! {0..q-2}^r; the monomials y^u for u in U evaluated over the algebraic torus
//! (GF(q)*)^r span a length-(q-1)^r code C_U. The codewords of C_U that happen
//! to lie in GF(p)^n form the subfield-subcode D_U, whose basis is built from
//! cyclotomic-coset polynomials. Duals of both live in the same framework, and
//! exact minimum distances come from exhaustive enumeration or the MacWilliams
//! transform through the dual.

pub mod error;
pub mod exponents;
pub mod galois;
pub mod matrix;
pub mod subfield;
pub mod torus;
pub mod weights;

pub use error::{Error, Result};
pub use exponents::{CyclotomicCoset, ExponentSet, ExponentVector};
pub use galois::{Field, FieldElement};
pub use matrix::Matrix;
pub use subfield::CosetPolynomial;
pub use torus::{LinearCode, SparsePoly, Torus};
pub use weights::{Distance, DistanceMethod, WeightDistribution, DEFAULT_BUDGET};
