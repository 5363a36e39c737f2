//! Exact symbolic engine for the quantum matrix ball of type C_n.
//!
//! * [`coeff`]: the scalar field Q(s), `q = s^2`.
//! * [`algebra`]: Wick normal forms in the polynomial *-algebra.
//! * [`hopf`]: the U_q(sp_2n) module-algebra action.
//! * [`fock`]: the Fock representation and its positive form.
//! * [`integral`]: the compactly supported algebra and the invariant integral.
//! * [`battery`]: seeded random inputs for the verification suites.
//! * [`text`]: canonical text and JSON formats, and the expression parser.

pub mod algebra;
pub mod battery;
pub mod coeff;
pub mod error;
pub mod fock;
pub mod hopf;
pub mod integral;
mod linalg;
pub mod poly;
pub mod report;
pub mod text;

pub use algebra::{Element, Gen, Kind, PolAlgebra, Word};
pub use coeff::{Coefficient, RationalPoint};
pub use error::{Error, Result};
pub use fock::{check_positive_definite, Fock, FockVector, GramMatrix};
pub use hopf::{CartanData, HopfAction, Letter, UqExpr};
pub use integral::{DElement, InvariantIntegral, KWeightTable};
pub use report::{Failure, Report};
