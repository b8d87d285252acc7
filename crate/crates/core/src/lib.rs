//! Strongly compact closed categories as typed matrices, with the doubling
//! construction, orthogonal additive structure and probability checks.

pub mod born;
pub mod error;
pub mod models;
pub mod morphism;
pub mod object;
pub mod ortho;
pub mod protocols;
pub mod report;
pub mod sccc;
pub mod semiring;
pub mod wproj;

pub use error::{Error, Result};
pub use morphism::{Morphism, Scalar, Tolerance};
pub use object::{obj_equal, Object};
pub use report::{CheckResult, MatrixLiteral, Status, VerificationReport};
pub use semiring::InvolutiveSemiring;
