//! Bipotentials on sampled grids: Fenchel conjugation, bipotential and
//! bipotential-graph checks, blurred constitutive laws and their covers.

// `!(a >= b)` is the NaN-rejecting form used for argument validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bipotential;
pub mod blur;
pub mod convexity;
pub mod covers;
pub mod error;
pub mod examples;
pub mod extreal;
pub mod graph;
pub mod grid;
pub mod io;
pub mod legendre;
pub mod minfilter;
pub mod report;
pub mod sampled;

pub use error::{Error, Result};
pub use extreal::ExtReal;
pub use graph::GraphSet;
pub use grid::{Axis, Grid, Point};
pub use report::{render_reports, report_schema_version, CheckReport, Verdict, Witness};
pub use sampled::{SampledBivariate, SampledFunction};
