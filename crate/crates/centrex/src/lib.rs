//! Exact computation with central extensions relative to a chosen subvariety.
//!
//! The crate provides three concrete settings and one generic engine:
//!
//! * finite groups presented by multiplication tables, reflected onto
//!   abelian groups,
//! * finite dimensional Leibniz and Lie algebras over the rationals,
//!   reflected onto Lie algebras or onto vector spaces,
//! * finite precrossed and crossed modules, reflected onto crossed
//!   modules or onto abelian crossed modules.
//!
//! Every setting implements [`engine::Variety`], and the engine derives
//! relative commutators, extension classification (trivial, normal,
//! central), centralisation, universal central extensions and the low
//! degree exact sequence from that single interface.  All arithmetic is
//! exact: linear algebra happens over arbitrary precision rationals and
//! group theory over explicit multiplication tables.

pub mod comparison;
pub mod engine;
pub mod five_term;
pub mod fingrp;
pub mod homology;
pub mod io;
pub mod leibniz;
pub mod linalg;
pub mod report;
pub mod samples;
pub mod xmod;

pub use linalg::{QuotientMap, RatMatrix, Rational, Subspace};
