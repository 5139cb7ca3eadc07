//! Core of the drafter diagram toolkit.
//!
//! A diagram is written in a three-layer declarative language: a `.domain`
//! schema declares concept types and relations, a `.substance` program
//! instantiates them, and a `.style` sheet maps matched concepts to shapes,
//! constraints, and objectives. Compiling the three layers yields a
//! constrained layout problem that an exterior-point / L-BFGS solver turns
//! into concrete shape positions, which render to standalone SVG.

pub mod autodiff;
pub mod dedup;
pub mod diagram;
pub mod dsl;
pub mod geom;
pub mod layout;
pub mod render;
