//! Random walks on finite motion groups `A ⋊ K`: induced representations,
//! Fourier transforms of measures, spectral mixing and ergodicity criteria,
//! and an exact-arithmetic treatment of a counterexample on `Z² ⋊ Z`.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod measure;
pub mod rep;
pub mod rosenblatt;
pub mod simulate;
pub mod spectral;

pub use error::{Error, Result};
pub use group::{Character, DualOrbit, GElem, MotionGroup};
pub use measure::{GroupMeasure, KMeasure, ProbabilityMeasure};
