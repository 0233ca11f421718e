//! Extended product actions.
//!
//! A finite group `G` acts on the trivially fibered piece `S^1 x F` by
//! `(u, x) -> (theta1(g) + alpha(g) u, phi2(g)(x))`, and on the `i`-th boundary
//! circle of `F` by `v -> theta2(i, g) + alpha(g) v`, landing on circle
//! `beta(g)(i)`. Everything is written additively in `Q/Z`.
//!
//! Composition is a left action, `phi(gh) = phi(g) o phi(h)`, which turns the
//! requirement that `phi` be a homomorphism into the cocycle laws checked by
//! [`validate_action_spec`]:
//!
//! * (a) `alpha(gh) = alpha(g) alpha(h)`
//! * (b) `theta1(gh) = theta1(g) + alpha(g) theta1(h)`
//! * (c) `beta(gh) = beta(g) o beta(h)`
//! * (d) `theta2(i, gh) = theta2(beta(h)(i), g) + alpha(g) theta2(i, h)`
//! * (e) `beta(g)` only moves circle `i` onto a circle with the same pair.

mod obstruction;
mod rotation;
mod tau;
mod torus;

use std::fmt;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::symbol::{SeifertSymbol, SymbolError};

pub use obstruction::check_obstruction_condition;
pub use rotation::{FractionError, RotationNumber};
pub use tau::{
    check_tau_commuting, lift_action, project_action, sigma, validate_descriptor,
    DescriptorLaw, DescriptorViolation, ProjectedActionDescriptor, SignedPermutation,
    TauCondition, TauFailure, TauReport,
};
pub use torus::{gluing_matrix, induced_solid_torus_action, GluingMatrix, TorusMapData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("{field}: {message}")]
    Shape { field: &'static str, message: String },
    #[error("action laws fail: {0}")]
    Law(LawViolation),
    #[error("descriptor laws fail: {0}")]
    Descriptor(DescriptorViolation),
    #[error("symbol {0} is not a doubled pair list (copies 2k and 2k+1 must agree)")]
    NotDoubled(String),
    #[error("tau-commutation needs a fiber-orientation-preserving action, but alpha({0}) = -1")]
    NotFiberOrientationPreserving(usize),
    #[error("action does not commute with the covering translation: {0}")]
    NotTauCommuting(TauFailure),
    #[error("orbit numbers must be a non-empty list of positive integers")]
    BadOrbitNumbers,
    #[error("boundary index {index} out of range for {count} boundary circles")]
    BoundaryIndex { index: usize, count: usize },
    #[error("element {index} out of range for a group of order {order}")]
    ElementIndex { index: usize, order: usize },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A permutation of `0..n`, acting on the left: `p.apply(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Checks that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// The data `(theta1, alpha, beta, theta2)` of an extended product action of
/// `group` on the manifold named by `symbol`, one boundary circle per pair.
///
/// `theta2` is indexed `[boundary][element]`. Sizes are checked by
/// [`ExtendedProductActionSpec::check_shape`]; the action laws by
/// [`validate_action_spec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedProductActionSpec {
    pub symbol: SeifertSymbol,
    pub group: FiniteGroup,
    pub theta1: Vec<RotationNumber>,
    pub alpha: Vec<Sign>,
    pub beta: Vec<Permutation>,
    pub theta2: Vec<Vec<RotationNumber>>,
}

pub(crate) fn shape(field: &'static str, message: String) -> ActionError {
    ActionError::Shape { field, message }
}

impl ExtendedProductActionSpec {
    /// The identity datum for every element.
    pub fn trivial(symbol: SeifertSymbol, group: FiniteGroup) -> Self {
        let order = group.order();
        let n = symbol.pairs().len();
        ExtendedProductActionSpec {
            theta1: vec![RotationNumber::ZERO; order],
            alpha: vec![Sign::Plus; order],
            beta: vec![Permutation::identity(n); order],
            theta2: vec![vec![RotationNumber::ZERO; order]; n],
            symbol,
            group,
        }
    }

    pub fn boundary_count(&self) -> usize {
        self.symbol.pairs().len()
    }

    pub fn check_shape(&self) -> Result<(), ActionError> {
        let order = self.group.order();
        let n = self.boundary_count();
        if self.theta1.len() != order {
            return Err(shape(
                "theta1",
                format!("expected {order} entries (group order), found {}", self.theta1.len()),
            ));
        }
        if self.alpha.len() != order {
            return Err(shape(
                "alpha",
                format!("expected {order} entries (group order), found {}", self.alpha.len()),
            ));
        }
        if self.beta.len() != order {
            return Err(shape(
                "beta",
                format!("expected {order} permutations (group order), found {}", self.beta.len()),
            ));
        }
        if let Some((g, perm)) = self.beta.iter().enumerate().find(|(_, p)| p.len() != n) {
            return Err(shape(
                "beta",
                format!("beta[{g}] permutes {} points, expected {n} (pair count)", perm.len()),
            ));
        }
        if self.theta2.len() != n {
            return Err(shape(
                "theta2",
                format!("expected {n} rows (pair count), found {}", self.theta2.len()),
            ));
        }
        if let Some((i, row)) = self.theta2.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(shape(
                "theta2",
                format!("theta2[{i}] has {} entries, expected {order} (group order)", row.len()),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    AlphaHomomorphism,
    Theta1Cocycle,
    BetaHomomorphism,
    Theta2Cocycle,
    PairCompatibility,
}

impl Law {
    pub fn tag(self) -> char {
        match self {
            Law::AlphaHomomorphism => 'a',
            Law::Theta1Cocycle => 'b',
            Law::BetaHomomorphism => 'c',
            Law::Theta2Cocycle => 'd',
            Law::PairCompatibility => 'e',
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Law::AlphaHomomorphism => "alpha(gh) = alpha(g) alpha(h)",
            Law::Theta1Cocycle => "theta1(gh) = theta1(g) + alpha(g) theta1(h)",
            Law::BetaHomomorphism => "beta(gh) = beta(g) o beta(h)",
            Law::Theta2Cocycle => "theta2(i,gh) = theta2(beta(h)(i),g) + alpha(g) theta2(i,h)",
            Law::PairCompatibility => "beta(g)(i) = j only if pair i equals pair j",
        };
        write!(f, "({}) {}", self.tag(), text)
    }
}

/// The first failing law and its witness. Element indices are 0-based,
/// boundary indices 0-based. For law (e) there is no `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawViolation {
    pub law: Law,
    pub g: usize,
    pub h: Option<usize>,
    pub boundary: Option<usize>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at g={}", self.law, self.g)?;
        if let Some(h) = self.h {
            write!(f, " h={h}")?;
        }
        if let Some(i) = self.boundary {
            write!(f, " i={}", i + 1)?;
        }
        Ok(())
    }
}

/// Checks laws (a) through (e) exhaustively, in that order, scanning `g`
/// then `h` then `i`.
pub fn validate_action_spec(spec: &ExtendedProductActionSpec) -> Result<(), ActionError> {
    spec.check_shape()?;
    first_violation(spec).map_or(Ok(()), |v| Err(ActionError::Law(v)))
}

fn first_violation(spec: &ExtendedProductActionSpec) -> Option<LawViolation> {
    let group = &spec.group;
    let n = spec.boundary_count();
    let pairs_of = |law| {
        let group = &spec.group;
        group
            .elements()
            .flat_map(move |g| group.elements().map(move |h| (g, h, group.mul(g, h))))
            .map(move |(g, h, gh)| (law, g, h, gh))
    };
    let violation = |law, g, h, boundary| LawViolation {
        law,
        g,
        h: Some(h),
        boundary,
    };

    for (law, g, h, gh) in pairs_of(Law::AlphaHomomorphism) {
        if spec.alpha[gh] != spec.alpha[g] * spec.alpha[h] {
            return Some(violation(law, g, h, None));
        }
    }
    for (law, g, h, gh) in pairs_of(Law::Theta1Cocycle) {
        if spec.theta1[gh] != spec.theta1[g] + spec.theta1[h].signed(spec.alpha[g]) {
            return Some(violation(law, g, h, None));
        }
    }
    for (law, g, h, gh) in pairs_of(Law::BetaHomomorphism) {
        if spec.beta[gh] != spec.beta[g].compose(&spec.beta[h]) {
            return Some(violation(law, g, h, None));
        }
    }
    for (law, g, h, gh) in pairs_of(Law::Theta2Cocycle) {
        for i in 0..n {
            let moved = spec.beta[h].apply(i);
            let expected = spec.theta2[moved][g] + spec.theta2[i][h].signed(spec.alpha[g]);
            if spec.theta2[i][gh] != expected {
                return Some(violation(law, g, h, Some(i)));
            }
        }
    }
    let pairs = spec.symbol.pairs();
    for g in group.elements() {
        for i in 0..n {
            if pairs[spec.beta[g].apply(i)] != pairs[i] {
                return Some(LawViolation {
                    law: Law::PairCompatibility,
                    g,
                    h: None,
                    boundary: Some(i),
                });
            }
        }
    }
    None
}

/// Orbit sizes of the boundary circles under `beta(G)`, listed by the
/// smallest index in each orbit.
pub fn beta_orbit_numbers(spec: &ExtendedProductActionSpec) -> Result<Vec<usize>, ActionError> {
    validate_action_spec(spec)?;
    let n = spec.boundary_count();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = spec.beta.iter().map(|p| p.apply(i)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        sizes.push(orbit.len());
    }
    Ok(sizes)
}
