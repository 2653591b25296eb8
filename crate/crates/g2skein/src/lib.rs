//! Exact symbolic engine for G2 spider webs: evaluates closed web diagrams
//! to rational functions in q via skein relations, and computes the G2
//! quantum link invariant of colored braid closures.

pub mod braid;
pub mod qalg;
pub mod rep;
pub mod skein;
pub mod web;
