//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid grid construction (too coarse, bad extents, bad control boundary).
    #[error("grid: {0}")]
    Grid(String),

    /// Metric tensor failed the positive-definiteness check at a node.
    #[error("metric is not positive definite at node {node} (min eigenvalue {min_eig:.3e})")]
    NonSpdMetric { node: usize, min_eig: f64 },

    /// Coefficient out of its admissible range.
    #[error("coefficient {name} out of range at node {node}: {value:.6e}")]
    CoefficientRange {
        name: &'static str,
        node: usize,
        value: f64,
    },

    /// Time step rejected before stepping.
    #[error("CFL violation: dt = {dt:.6e} exceeds admissible dt = {dt_max:.6e}")]
    CflViolation { dt: f64, dt_max: f64 },

    /// Mismatched grids, trace lengths or operator dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Boundary control data violated a required constraint.
    #[error("control data: {0}")]
    ControlData(String),

    /// Operator assembly refused: interior node count above the configured cap.
    #[error("assembly cap exceeded: {count} interior nodes > cap {cap}; coarsen the grid or raise the cap")]
    CapExceeded { count: usize, cap: usize },

    /// Illumination inadequate for the requested recovery mode.
    #[error("illumination too weak: {quantity} = {value:.6e} < required {required:.6e} at node {node}")]
    WeakIllumination {
        quantity: &'static str,
        node: usize,
        value: f64,
        required: f64,
    },

    /// Linear system singular to working tolerance.
    #[error("singular system: condition estimate {cond:.3e}")]
    SingularSystem { cond: f64 },

    /// Iteration diverged or stagnated beyond recovery.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Characteristic fan left interior nodes uncovered.
    #[error("characteristic fan does not cover {count} interior nodes (first: node {first})")]
    UncoveredNodes { count: usize, first: usize },

    /// Scenario configuration problem.
    #[error("config: {0}")]
    Config(String),

    /// File format violation while reading FLD1/TRC1/MAT1 data.
    #[error("format: {0}")]
    Format(String),

    /// Underlying I/O failure.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for validation failures, 3 for
    /// numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Grid(_)
            | Error::NonSpdMetric { .. }
            | Error::CoefficientRange { .. }
            | Error::CflViolation { .. }
            | Error::Dimension(_)
            | Error::ControlData(_)
            | Error::CapExceeded { .. }
            | Error::Config(_)
            | Error::Format(_)
            | Error::Io(_) => 2,
            Error::WeakIllumination { .. }
            | Error::SingularSystem { .. }
            | Error::Numerical(_)
            | Error::UncoveredNodes { .. } => 3,
        }
    }
}
