//! Exact computation of the cohomological length for p-torus and torus
//! actions on cohomology spheres.
//!
//! The crate models the group `(Z_p)^k` or `(S^1)^k`, its corank-1 subtori,
//! representation spheres and abstract cohomology-sphere data, and computes:
//! Euler classes as products of linear forms, exact length values and
//! certified intervals, Borsuk-Ulam obstructions and the converse existence
//! criterion for representation-sphere targets, Bourgin-Yang dimension
//! bounds, and general upper/lower length bounds. An independent brute-force
//! oracle re-derives representation-sphere lengths from the annihilator
//! definition by exhaustive divisibility search.
//!
//! All arithmetic is exact: F_p with a runtime modulus or arbitrary-precision
//! rationals. Core polynomial arithmetic is generic over the coefficient
//! field; the aliases below fix the two concrete instantiations.
//!
//! Everything is an immutable value and every operation is a pure function,
//! so all types can be shared and sent across threads freely.
//!
//! # Example
//!
//! ```
//! use cohomlen_core::{GroupSpec, PrimeField, RepSphere, Weight};
//! use cohomlen_core::length::{length_of_pair, length_rep_sphere};
//! use cohomlen_core::oracle::cross_check;
//!
//! // S(V) for (Z_2)^2 acting with weights (1,0), (0,1), (1,1)
//! let group = GroupSpec::new(2, 2)?;
//! let sphere = RepSphere::new(
//!     group,
//!     vec![
//!         Weight::new(vec![1, 0]),
//!         Weight::new(vec![0, 1]),
//!         Weight::new(vec![1, 1]),
//!     ],
//! )?;
//!
//! // closed form and brute-force search agree
//! assert_eq!(length_rep_sphere(&sphere).lo(), 3);
//! assert_eq!(length_of_pair(&sphere.to_cohom_data(), true)?.lo(), 3);
//! let report = cross_check::<PrimeField>(&sphere, 4)?;
//! assert!(report.agrees);
//! assert_eq!(report.lambda, 3);
//! # Ok::<(), cohomlen_core::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod group;
pub mod length;
pub mod oracle;
pub mod spheres;
pub mod theorems;

pub use algebra::{Field, PrimeField, Rationals};
pub use error::Error;
pub use group::{GroupSpec, SubtorusLine, Weight};
pub use length::{EulerClassDescriptor, LengthBasis, LengthResult};
pub use oracle::OracleReport;
pub use spheres::{CohomSphereData, RepSphere, Violation};
pub use theorems::{BourginYangBound, BourginYangQuery, Existence, MapVerdict};

/// Polynomials over F_p (runtime modulus).
pub type FpPolynomial = algebra::Polynomial<PrimeField>;
/// Polynomials over the exact rationals.
pub type QPolynomial = algebra::Polynomial<Rationals>;
/// Linear forms over F_p.
pub type FpLinearForm = algebra::LinearForm<PrimeField>;
/// Linear forms over the exact rationals.
pub type QLinearForm = algebra::LinearForm<Rationals>;
/// Euler class data over F_p.
pub type FpEulerClass = length::EulerClassDescriptor<PrimeField>;
/// Euler class data over the exact rationals.
pub type QEulerClass = length::EulerClassDescriptor<Rationals>;
