//! Graphs as words: a codec and checking toolkit.
//!
//! A word w over the vertex alphabet of a graph G represents G relative to
//! a binary language L when, for every vertex pair {u, v}, the projection
//! of w onto {u, v} (u renamed to 0, v to 1) lies in L. This crate decodes
//! graphs from words against a catalog of such languages, encodes graphs
//! with constructive schemes, recognizes the graph classes those schemes
//! target, and surveys small languages exhaustively.
//!
//! The main entry points are [`languages::make_oracle`] for building a
//! membership oracle from a language id, [`codec::decode`] and the
//! `codec::encode_*` family, [`graphs::recognize`] with checkable
//! witnesses, and the [`atlas`] routines for desk-scale soundness and
//! completeness checks.

pub mod atlas;
pub mod codec;
pub mod error;
pub mod files;
pub mod graphs;
pub mod languages;
pub mod words;

pub use codec::{decode, EncodingReport};
pub use error::{Error, Result};
pub use graphs::{ClassWitness, Graph, GraphClass, HostGraph};
pub use languages::{make_oracle, LanguageOracle, LanguageSpec};
pub use words::{project, BinaryWord, Letter, Word};
