//! Gödel coding, arithmetized syntax, a small proof kernel, a three-valued
//! evaluator and the diagonal construction for first-order arithmetic.
//!
//! Numerals for Gödel numbers nest several hundred terms deep and every
//! traversal of them is recursive. Unoptimized builds need more than the
//! default 2 MiB thread stack for the gallery formulas; run such work on a
//! thread with a larger stack (the binary uses 256 MiB).

pub mod cli;
pub mod coding;
pub mod diagonal;
pub mod eval;
pub mod finite_lab;
pub mod gallery;
pub mod kernel;
pub mod registry;
pub mod syntax;
