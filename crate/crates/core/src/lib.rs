//! Reconstruction of the contrast between two wave speeds (conformal factors
//! of a Riemannian metric) from a single boundary measurement.
//!
//! The crate is organized around the stages of the reconstruction pipeline:
//!
//! - [`geometry`]: box grids, per-node metric coefficients, weighted
//!   Laplace-Beltrami assembly and weighted inner products.
//! - [`wave`]: explicit leapfrog solvers for the forward and time-reversed
//!   wave problems, Neumann traces, time calculus on boundary traces.
//! - [`control`]: minimum-norm Dirichlet boundary controls (conjugate
//!   gradient on the control normal operator), the control/solution
//!   operators and their assembled matrix forms.
//! - [`recovery`]: source factors, the time-integral operator, synthetic
//!   measurements and the Fredholm contrast equation (single- and
//!   multi-illumination).
//! - [`transport`]: the first-order recovery path driven by the method of
//!   characteristics.
//! - [`gcc`]: geodesic ray tracing with boundary reflections used to check
//!   the geometric control condition and propose a control horizon.
//! - [`io`]: the FLD1/TRC1/MAT1 file formats and CSV export.
//! - [`scenario`]: scenario configuration, illumination generators and
//!   end-to-end pipeline orchestration.

pub mod control;
pub mod error;
pub mod gcc;
pub mod geometry;
pub mod io;
pub mod recovery;
pub mod scenario;
pub mod transport;
pub mod wave;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
