//! Nominal λ-terms extended with an uninterpreted explicit substitution
//! operator `[x := u] t`.
//!
//! The crate provides name swapping, a decision procedure for
//! α-equivalence (cross-checked against a nameless canonical form), and a
//! capture-avoiding metasubstitution `{x := u} t` that renames binders with
//! deterministic fresh names. The [`properties`] module turns the usual
//! metatheory of these operations, up to the substitution lemma, into
//! executable checks over generated terms.
//!
//! ```
//! use nes::{aeq, msubst, parse_term, atom};
//!
//! let t = parse_term(r"\y. x y").unwrap();
//! let r = msubst(&t, &parse_term("y").unwrap(), &atom("x"));
//! assert_eq!(r.to_string(), r"\y0. y y0");
//! assert!(aeq(&r, &parse_term(r"\z. y z").unwrap()));
//! ```

pub mod alpha;
pub mod atoms;
pub mod cli;
pub mod msubst;
pub mod parser;
pub mod properties;
pub mod term;

pub use alpha::{aeq, canonicalize, CanonicalTerm};
pub use atoms::{atom, fresh, Atom, AtomError, AtomSet};
pub use msubst::msubst;
pub use parser::{eval_meta, parse, parse_term, MetaExpr, ParseError};
pub use properties::{gen_term, run_property, ConfigError, GenConfig, PropertyReport};
pub use term::{vswap, Term};
