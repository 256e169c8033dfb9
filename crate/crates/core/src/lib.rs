//! Decoration graphs for half-potentials on reduced double Bruhat cells
//! `G^{e,w0}`, the string cones they cut out, and independent oracles.

pub mod cli;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod oracle;
pub mod rootsystem;
pub mod stringcone;
pub mod wordtools;

pub use error::{Error, Result};
pub use graph::{build_graph, BuildOptions, DecoGraph, SupportStatus};
pub use monomial::ExponentVec;
pub use rootsystem::{CartanData, CartanType, Family};
pub use stringcone::{string_cone, ConeSystem};
pub use wordtools::{enumerate_w0_words, validate_word, ReducedWord};
