//! Exact computations with closed orientable Seifert fibered 3-manifolds
//! described by their Seifert invariants.
//!
//! * [`symbol`]: symbols, normalization, equivalence, and the orientable base
//!   space double cover.
//! * [`presentation`]: fundamental-group and orbifold-group presentations,
//!   and first homology via Smith normal form.
//! * [`group`]: finite groups as multiplication tables, plus the structure
//!   analysis of groups acting through extended product actions.
//! * [`action`]: extended product action data `(theta1, alpha, beta, theta2)`,
//!   its cocycle laws, induced solid-torus actions, the obstruction
//!   condition, and the lift/project correspondence with the double cover.
//! * [`format`]: the JSON file formats for action specs and descriptors.
//! * [`cli`]: the `seifert` command-line front end.

pub mod action;
pub mod cli;
pub mod format;
pub mod group;
pub mod presentation;
pub mod symbol;

pub use symbol::{
    base_quotient, equivalent, normalize, obstruction_class, orientable_double_cover,
    parse_symbol, total_sum, NormalizedSymbol, OrientabilityClass, SeifertPair, SeifertSymbol,
    SymbolError, TotalSum,
};
