pub mod anharmonic;
pub mod band;
pub mod error;
pub mod exact;
pub mod helium;
pub mod model;
pub mod oscillator;
pub mod report;
pub mod scheme;

pub use error::{Error, Result};
