//! Stability and minimal free resolutions of homogeneous vector bundles on
//! P³, computed from their quiver supports in exact arithmetic.

pub mod cli;
pub mod error;
pub mod quiver;
pub mod resolution;
pub mod schur;
pub mod stability;
pub mod staircase;
pub mod support;
pub mod sweeps;

pub use error::{Error, Result};
pub use quiver::{Direction, QVertex, Slope};
pub use schur::Partition;
pub use staircase::CylinderStaircase;
pub use support::{Parallelepiped, Support};
