//! Counting, analysis, and uniform random generation of culminating and
//! positive lattice paths with steps +a / -b.
//!
//! A culminating path starts at 0, keeps every partial height strictly
//! positive, and ends at a strict record height. This crate provides:
//!
//! - [`word`]: step systems, words, height profiles, and the classifying
//!   predicates, plus the zig-zag witness construction;
//! - [`automaton`]: the DFA recognizing culminating words of a fixed final
//!   height, with counting over its states;
//! - [`counting`]: exact big-integer and scaled-float dynamic programming
//!   for positive, culminating, fixed-height, excursion, and quasi-excursion
//!   counts, and the brute-force oracle;
//! - [`genfunc`]: exact polynomial arithmetic, transfer-matrix determinants
//!   D_k and numerators, Fibonacci polynomials, and rational series
//!   expansion of C_k(t);
//! - [`grammar`]: the context-free system for excursions and positive
//!   walks, convolution counting, count-driven sampling, and numeric
//!   generating-function evaluation;
//! - [`samplers`]: the uniform random generators (recursive, fixed-height,
//!   grammar, anticipated rejection, rejection from positive walks, hybrid
//!   rejection, Boltzmann), instrumented with cost counters;
//! - [`analysis`]: growth constants, drift-regime trend checks, chi-square
//!   uniformity testing, and cost measurement;
//! - [`verify`]: the executable acceptance checklist behind `verify`.

pub mod analysis;
pub mod automaton;
pub mod counting;
pub mod genfunc;
pub mod grammar;
pub mod samplers;
pub mod verify;
pub mod word;

pub use word::{parse_word, Step, StepSystem, Word};
