//! Exact classification data for two-dimensional topological field theories
//! with tangential structure, the integration maps between them, and
//! reflection-positivity checks decided by exact linear algebra over ℚ(i).

pub mod report;
pub mod scalars;
pub mod frobenius;
pub mod superalg;
pub mod theories;
pub mod integrate;
pub mod eval;
pub mod catalog;
pub mod torsors;
pub mod cli;
