//! Exact computations for hyperplane arrangements: combinatorial types,
//! Orlik–Solomon and Aomoto complexes, and the eigenstructure of
//! Gauss–Manin endomorphisms attached to degenerations.

pub mod acceptance;
pub mod aomoto;
pub mod arrangement;
pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod os;
pub mod poly;
pub mod ring;
pub mod scenarios;
pub mod spectral;

pub use arrangement::{CombType, Principal, Realization, Weights};
pub use error::{Error, ErrorClass, Result};
pub use exterior::{Ambient, ExtElement, IndexSet, Monomial};
pub use linalg::Matrix;
pub use poly::Poly;
pub use ring::{Coeff, Rational};
