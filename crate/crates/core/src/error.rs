use thiserror::Error;

/// Errors raised by map construction, symbol computation and the entropy recursion.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("degenerate map: {0}")]
    Degenerate(String),

    #[error("x = {x} lies outside the domain [{a}, {b}]")]
    Domain { x: f64, a: f64, b: f64 },

    #[error("expected {expected} critical orbits, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("recursion inconsistency at nu = {nu}: {detail}")]
    Consistency { nu: usize, detail: String },

    #[error("breakpoint count {count} exceeds the cap of {cap}")]
    Resource { count: usize, cap: usize },

    #[error("map is not piecewise linear with exact data")]
    NotPiecewiseLinear,

    #[error("map file: {0}")]
    MapFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
