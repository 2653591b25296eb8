//! Planar G2 web diagrams: combinatorial maps with labelled edges, three
//! trivalent vertex kinds, an ordered boundary with base point, colorings,
//! spider operations and canonical keys.

mod json;
mod key;
mod map;
mod ops;
mod registry;
mod sum;

pub use json::{from_json, to_json};
pub use key::{canonical_form, canonical_key, canonicalize};
pub use map::{faces, Coloring, End, FaceInfo, Label, VertexKind, Web};
pub use ops::{arc, circle, elementary, glue, mirror, rotate, tensor, vertex111, vertex211, vertex222, Elementary};
pub use registry::{BasisRegistry, SetKind};
pub use sum::WebSum;

pub(crate) use ops::{smooth_joints, SEnd};

#[derive(Debug, Clone, thiserror::Error)]
pub enum WebError {
    #[error("glue label mismatch: {a} vs {b}")]
    GlueLabelMismatch { a: Label, b: Label },
    #[error("glue arity {want} exceeds boundary length {have}")]
    GlueArity { have: usize, want: usize },
    #[error("boundary color must be 1 or 2, got {0}")]
    BadColor(u8),
    #[error("web is not planar (Euler check failed)")]
    NotPlanar,
    #[error("corrupt web: {0}")]
    Corrupt(String),
    #[error("json: {0}")]
    Json(String),
}

/// Colorings as small integer strings, e.g. "1212".
pub fn coloring_string(c: &Coloring) -> String {
    c.iter().map(|l| char::from(b'0' + l.as_color())).collect()
}

pub fn coloring_from_colors(cs: &[u8]) -> Result<Coloring, WebError> {
    cs.iter().map(|c| Label::from_color(*c)).collect()
}
