//! Commutator blueprints: per-gallery ordered commutation sets for crossing
//! pairs, with pluggable base rules, file-loaded overrides, shift-orbit
//! closure, and axiom validators.

pub mod provider;
pub mod validate;

pub use provider::{nested_perturbation, BaseRule, Blueprint, Closure, Override};
pub use validate::{
    corollary_dn_check, validate_all, validate_cb1, validate_cb2, validate_weyl, Axiom, DnReport,
    ValidationReport, Violation,
};
