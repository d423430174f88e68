//! Exact computation of indices of vector fields and 1-forms on isolated
//! complete intersection singularities.

pub mod complex_index;
pub mod error;
pub mod euler;
pub mod gsv;
pub mod harness;
pub mod linalg;
pub mod local;
pub mod milnor;
pub mod poly;
pub mod real_index;
pub mod schwartz;

pub use error::{IndexError, Result};
