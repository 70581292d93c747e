pub mod cli;
pub mod crossed;
pub mod error;
pub mod exactlin;
pub mod examples;
pub mod galois;
pub mod hopfstruct;
pub mod io;
pub mod report;
pub mod ydcat;

pub use error::{Error, ErrorClass, Result};
