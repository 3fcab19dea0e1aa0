//! Symbolic bisimulation minimization for context interactive systems.
//!
//! Three calculi are provided: sequential processes over a shared word
//! ([`swc`]), open Petri nets ([`opennet`]) and the asynchronous
//! pi-calculus ([`asyncpi`]).  Each implements [`system::Instance`]; the
//! [`engine`] closes a finite universe around some seed states and refines
//! it to symbolic bisimilarity.

pub mod asyncpi;
pub mod derivation;
pub mod engine;
pub mod error;
mod lex;
pub mod multiset;
pub mod opennet;
pub mod swc;
pub mod system;

pub use error::{CoreError, EngineError, ParseError};
pub use system::{Instance, Transition, TransitionOf, TransitionSet, TransitionSetOf};
