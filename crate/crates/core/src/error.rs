use thiserror::Error;

use crate::object::Object;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("type mismatch in {context}: expected {expected}, found {found}")]
    TypeMismatch { context: &'static str, expected: Object, found: Object },

    #[error("matrix shape {rows}x{cols} does not fit {cod} <- {dom}")]
    ShapeMismatch { rows: usize, cols: usize, dom: Object, cod: Object },

    #[error("the two unfoldings of the name disagree (distance {distance:e})")]
    AbsorptionMismatch { distance: f64 },

    #[error("morphisms are not phase-equivalent: their doubles differ by {distance:e}")]
    NotPhaseEquivalent { distance: f64 },

    #[error("not a projector: {reason}")]
    NotProjector { reason: String },

    #[error("abstract probability disagrees with Tr(P∘ρ) by {distance:e}")]
    BornLoopMismatch { distance: f64 },

    #[error("semiring law `{law}` fails on {witnesses}")]
    SemiringLawViolation { law: &'static str, witnesses: String },

    #[error("random sample degenerate after {attempts} attempts")]
    DegenerateSample { attempts: usize },

    #[error("equality criteria disagree: doubled={doubled}, lower-star={lower_star}, projector={projector}")]
    CriterionDisagreement { doubled: bool, lower_star: bool, projector: bool },

    #[error("index {index} out of range for {len} parts")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected an endomorphism, found {dom} -> {cod}")]
    NotEndomorphism { dom: Object, cod: Object },

    #[error("power {power} of scalar {value} is unavailable among positive scalars")]
    RootUnavailable { value: String, power: String },

    #[error("not unitary: ‖U†U − 1‖ = {distance:e}")]
    NotUnitary { distance: f64 },

    #[error("no distinguished representative: {0}")]
    NoDistinguishedRepresentative(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}
