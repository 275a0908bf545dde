//! Sweeps, figure datasets and self-checks built on `besselq`.

pub mod csv;
pub mod figures;
pub mod grid;
pub mod sweep;
pub mod verify;
