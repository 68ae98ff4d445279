pub mod cli;
pub mod complex;
pub mod energy;
pub mod error;
pub mod io;
pub mod matrices;
pub mod rings;
pub mod spectral;
