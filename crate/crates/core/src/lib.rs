pub mod braid;
pub mod cohomology;
pub mod degree;
pub mod error;
pub mod partition;
pub mod sweep;
