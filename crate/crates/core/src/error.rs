use thiserror::Error;

/// Failures raised by the exact-arithmetic and elliptic-surface layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("divisor is not effective")]
    NotEffective,
    #[error("Weierstrass model is singular (discriminant vanishes identically)")]
    SingularModel,
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("resource cap exceeded: {what} reached {observed} (limit {limit})")]
    ResourceCap {
        what: &'static str,
        limit: u64,
        observed: u64,
    },
    /// The section being pulled back is the zero section itself. `index`
    /// names which member of a section pair triggered it, when relevant.
    #[error("section is identically the zero section{}", .index.map(|i| format!(" (pair member {i})")).unwrap_or_default())]
    IdenticallyZeroSection { index: Option<u8> },
    #[error("fiber at t = {0} is singular")]
    BadFiber(String),
    #[error("section has a pole at t = {0}")]
    SectionPole(String),
    #[error("inputs are multiplicatively dependent (a^{i} b^{j} is constant)")]
    DependentInputs { i: i64, j: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
