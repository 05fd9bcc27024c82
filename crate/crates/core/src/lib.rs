//! Exact Weil-Petersson volume polynomials `V_{g,n}(L)`.
//!
//! Two independent generators are provided: the cone-point lifts
//! ([`conerec`]), which rebuild `V_{g,n+1}` from `V_{g,n}` through its value
//! at `L_{n+1} = 2*pi*i`, and Mirzakhani's kernel recursion ([`mirzakhani`]).
//! [`intersect`] reads psi/kappa_1 intersection numbers off the coefficients
//! and checks the identities they satisfy.

pub mod conerec;
pub mod engine;
pub mod error;
pub mod exactpoly;
pub mod intersect;
pub mod mirzakhani;
pub mod store;
pub mod symlift;

pub use engine::{Engine, Method};
pub use error::{Error, Result};
pub use exactpoly::{ExactCoeff, Monomial, Poly, Rational, VolumePoly};
pub use store::{Provenance, StoreEntry, VolumeStore};
