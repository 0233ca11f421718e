//! Actions commuting with the covering translation `tau` of the orientable
//! base space double cover, and the correspondence with actions downstairs.
//!
//! On a doubled symbol `(g, o1 | P1, P1, P2, P2, ...)` the two lifts of each
//! pair sit at adjacent indices `2k` and `2k + 1`, and `tau` acts on boundary
//! data by `sigma(i) = i ^ 1`, inverting both the fiber and the boundary
//! circle of the base.

use std::fmt;

use super::{
    shape, validate_action_spec, ActionError, ExtendedProductActionSpec, Permutation,
    RotationNumber, Sign,
};
use crate::group::FiniteGroup;
use crate::symbol::{orientable_double_cover, OrientabilityClass, SeifertSymbol, SymbolError};

/// The covering translation on boundary indices: swaps `2k` and `2k + 1`.
pub fn sigma(i: usize) -> usize {
    i ^ 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauCondition {
    /// `theta1(g)` is `0` or `1/2`.
    FiberSign,
    /// `beta(g)` commutes with `sigma`.
    BetaCommutes,
    /// `theta2(sigma(i), g) = -theta2(i, g)`.
    Theta2Inverts,
}

impl TauCondition {
    pub fn tag(self) -> &'static str {
        match self {
            TauCondition::FiberSign => "i",
            TauCondition::BetaCommutes => "ii",
            TauCondition::Theta2Inverts => "iii",
        }
    }
}

impl fmt::Display for TauCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            TauCondition::FiberSign => "theta1(g) in {0, 1/2}",
            TauCondition::BetaCommutes => "beta(g) o sigma = sigma o beta(g)",
            TauCondition::Theta2Inverts => "theta2(sigma(i),g) = -theta2(i,g)",
        };
        write!(f, "({}) {}", self.tag(), text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauFailure {
    pub condition: TauCondition,
    pub g: usize,
    pub boundary: Option<usize>,
}

impl fmt::Display for TauFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at g={}", self.condition, self.g)?;
        if let Some(i) = self.boundary {
            write!(f, " i={}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauReport {
    pub failure: Option<TauFailure>,
}

impl TauReport {
    pub fn is_commuting(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for TauReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("commutes with tau"),
            Some(failure) => write!(f, "fails {failure}"),
        }
    }
}

fn require_doubled(symbol: &SeifertSymbol) -> Result<(), ActionError> {
    let pairs = symbol.pairs();
    let doubled = symbol.class() == OrientabilityClass::O1
        && pairs.len() % 2 == 0
        && pairs.chunks(2).all(|c| c[0] == c[1]);
    if doubled {
        Ok(())
    } else {
        Err(ActionError::NotDoubled(symbol.to_string()))
    }
}

/// Checks conditions (i), (ii), (iii) for every element, condition by
/// condition, reporting the first failure.
pub fn check_tau_commuting(spec: &ExtendedProductActionSpec) -> Result<TauReport, ActionError> {
    validate_action_spec(spec)?;
    require_doubled(&spec.symbol)?;
    if let Some(g) = spec.alpha.iter().position(|&a| a == Sign::Minus) {
        return Err(ActionError::NotFiberOrientationPreserving(g));
    }
    let n = spec.boundary_count();
    let fail = |condition, g, boundary| {
        Ok(TauReport {
            failure: Some(TauFailure {
                condition,
                g,
                boundary,
            }),
        })
    };
    for g in spec.group.elements() {
        let t = spec.theta1[g];
        if !(t.is_zero() || t == RotationNumber::half()) {
            return fail(TauCondition::FiberSign, g, None);
        }
    }
    for g in spec.group.elements() {
        for i in 0..n {
            if spec.beta[g].apply(sigma(i)) != sigma(spec.beta[g].apply(i)) {
                return fail(TauCondition::BetaCommutes, g, Some(i));
            }
        }
    }
    for g in spec.group.elements() {
        for i in 0..n {
            if spec.theta2[sigma(i)][g] != -spec.theta2[i][g] {
                return fail(TauCondition::Theta2Inverts, g, Some(i));
            }
        }
    }
    Ok(TauReport { failure: None })
}

/// A permutation of the folded indices together with, for each index, whether
/// it lands on the other sheet: lifted, `2i + s` goes to `2 perm(i) + (s ^ flip(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Permutation,
    pub flips: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: Permutation::identity(n),
            flips: vec![false; n],
        }
    }

    /// From 1-based signed images; a negative entry marks a sheet flip.
    pub fn from_signed(images: &[i64]) -> Option<Self> {
        let perm = images
            .iter()
            .map(|&k| (k != 0).then(|| k.unsigned_abs() as usize - 1))
            .collect::<Option<Vec<_>>>()?;
        Some(SignedPermutation {
            perm: Permutation::from_images(perm)?,
            flips: images.iter().map(|&k| k < 0).collect(),
        })
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.perm
            .images()
            .iter()
            .zip(&self.flips)
            .map(|(&j, &f)| if f { -(j as i64 + 1) } else { j as i64 + 1 })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `self o other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            perm: self.perm.compose(&other.perm),
            flips: (0..other.len())
                .map(|i| other.flips[i] ^ self.flips[other.perm.apply(i)])
                .collect(),
        }
    }

    /// The permutation of the doubled index set.
    pub fn unfold(&self) -> Permutation {
        let images = (0..2 * self.len())
            .map(|k| {
                let (i, s) = (k / 2, k % 2 == 1);
                2 * self.perm.apply(i) + usize::from(s ^ self.flips[i])
            })
            .collect();
        Permutation::from_images(images).expect("unfolded signed permutation")
    }
}

/// Action data on an N2-base manifold: the fiber sign `epsilon`, the signed
/// boundary permutation `beta_bar`, and boundary rotations `theta2_bar`
/// indexed `[boundary][element]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedActionDescriptor {
    pub base: SeifertSymbol,
    pub group: FiniteGroup,
    pub epsilon: Vec<Sign>,
    pub beta_bar: Vec<SignedPermutation>,
    pub theta2_bar: Vec<Vec<RotationNumber>>,
}

impl ProjectedActionDescriptor {
    pub fn trivial(base: SeifertSymbol, group: FiniteGroup) -> Self {
        let order = group.order();
        let n = base.pairs().len();
        ProjectedActionDescriptor {
            epsilon: vec![Sign::Plus; order],
            beta_bar: vec![SignedPermutation::identity(n); order],
            theta2_bar: vec![vec![RotationNumber::ZERO; order]; n],
            base,
            group,
        }
    }

    pub fn check_shape(&self) -> Result<(), ActionError> {
        if self.base.class() != OrientabilityClass::N2 {
            return Err(SymbolError::WrongClass {
                expected: OrientabilityClass::N2,
                found: self.base.class(),
            }
            .into());
        }
        let order = self.group.order();
        let n = self.base.pairs().len();
        if self.epsilon.len() != order {
            return Err(shape(
                "epsilon",
                format!("expected {order} entries (group order), found {}", self.epsilon.len()),
            ));
        }
        if self.beta_bar.len() != order {
            return Err(shape(
                "beta_bar",
                format!("expected {order} entries (group order), found {}", self.beta_bar.len()),
            ));
        }
        if let Some((g, p)) = self.beta_bar.iter().enumerate().find(|(_, p)| p.len() != n) {
            return Err(shape(
                "beta_bar",
                format!("beta_bar[{g}] permutes {} points, expected {n} (pair count)", p.len()),
            ));
        }
        if self.theta2_bar.len() != n {
            return Err(shape(
                "theta2_bar",
                format!("expected {n} rows (pair count), found {}", self.theta2_bar.len()),
            ));
        }
        if let Some((i, row)) = self.theta2_bar.iter().enumerate().find(|(_, r)| r.len() != order)
        {
            return Err(shape(
                "theta2_bar",
                format!("theta2_bar[{i}] has {} entries, expected {order} (group order)", row.len()),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescriptorLaw {
    EpsilonHomomorphism,
    BetaBarHomomorphism,
    Theta2Cocycle,
    PairCompatibility,
}

impl fmt::Display for DescriptorLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescriptorLaw::EpsilonHomomorphism => "epsilon(gh) = epsilon(g) epsilon(h)",
            DescriptorLaw::BetaBarHomomorphism => "beta_bar(gh) = beta_bar(g) o beta_bar(h)",
            DescriptorLaw::Theta2Cocycle => {
                "theta2_bar(i,gh) = (-1)^flip_h(i) theta2_bar(beta_bar(h)(i),g) + theta2_bar(i,h)"
            }
            DescriptorLaw::PairCompatibility => "beta_bar(g)(i) = j only if pair i equals pair j",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescriptorViolation {
    pub law: DescriptorLaw,
    pub g: usize,
    pub h: Option<usize>,
    pub boundary: Option<usize>,
}

impl fmt::Display for DescriptorViolation {
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

/// The folded laws: exactly what makes [`lift_action`] produce a valid spec.
pub fn validate_descriptor(d: &ProjectedActionDescriptor) -> Result<(), ActionError> {
    d.check_shape()?;
    let group = &d.group;
    let n = d.base.pairs().len();
    let violation = |law, g, h, boundary| {
        Err(ActionError::Descriptor(DescriptorViolation {
            law,
            g,
            h,
            boundary,
        }))
    };
    for g in group.elements() {
        for h in group.elements() {
            if d.epsilon[group.mul(g, h)] != d.epsilon[g] * d.epsilon[h] {
                return violation(DescriptorLaw::EpsilonHomomorphism, g, Some(h), None);
            }
        }
    }
    for g in group.elements() {
        for h in group.elements() {
            if d.beta_bar[group.mul(g, h)] != d.beta_bar[g].compose(&d.beta_bar[h]) {
                return violation(DescriptorLaw::BetaBarHomomorphism, g, Some(h), None);
            }
        }
    }
    for g in group.elements() {
        for h in group.elements() {
            let gh = group.mul(g, h);
            let bh = &d.beta_bar[h];
            for i in 0..n {
                let moved = d.theta2_bar[bh.perm.apply(i)][g];
                let moved = if bh.flips[i] { -moved } else { moved };
                if d.theta2_bar[i][gh] != moved + d.theta2_bar[i][h] {
                    return violation(DescriptorLaw::Theta2Cocycle, g, Some(h), Some(i));
                }
            }
        }
    }
    let pairs = d.base.pairs();
    for g in group.elements() {
        for i in 0..n {
            if pairs[d.beta_bar[g].perm.apply(i)] != pairs[i] {
                return violation(DescriptorLaw::PairCompatibility, g, None, Some(i));
            }
        }
    }
    Ok(())
}

/// Folds a tau-commuting spec to the base: the N2 symbol keeps one pair from
/// each sigma-orbit (index `2i` represents orbit `i`).
pub fn project_action(
    spec: &ExtendedProductActionSpec,
) -> Result<ProjectedActionDescriptor, ActionError> {
    if let Some(failure) = check_tau_commuting(spec)?.failure {
        return Err(ActionError::NotTauCommuting(failure));
    }
    let pairs = spec.symbol.pairs().iter().step_by(2).copied().collect();
    let base = SeifertSymbol::new(spec.symbol.genus() + 1, OrientabilityClass::N2, pairs)?;
    let n = base.pairs().len();
    let epsilon = spec
        .theta1
        .iter()
        .map(|t| if t.is_zero() { Sign::Plus } else { Sign::Minus })
        .collect();
    let beta_bar = spec
        .beta
        .iter()
        .map(|b| SignedPermutation {
            perm: Permutation::from_images((0..n).map(|i| b.apply(2 * i) / 2).collect())
                .expect("sigma-equivariant permutation folds"),
            flips: (0..n).map(|i| b.apply(2 * i) % 2 == 1).collect(),
        })
        .collect();
    let theta2_bar = (0..n).map(|i| spec.theta2[2 * i].clone()).collect();
    Ok(ProjectedActionDescriptor {
        base,
        group: spec.group.clone(),
        epsilon,
        beta_bar,
        theta2_bar,
    })
}

/// The unique tau-commuting spec on the orientable double cover that
/// projects to `d`.
pub fn lift_action(d: &ProjectedActionDescriptor) -> Result<ExtendedProductActionSpec, ActionError> {
    validate_descriptor(d)?;
    let symbol = orientable_double_cover(&d.base)?;
    let order = d.group.order();
    let theta1 = d
        .epsilon
        .iter()
        .map(|&e| match e {
            Sign::Plus => RotationNumber::ZERO,
            Sign::Minus => RotationNumber::half(),
        })
        .collect();
    let beta = d.beta_bar.iter().map(SignedPermutation::unfold).collect();
    let theta2 = d
        .theta2_bar
        .iter()
        .flat_map(|row| [row.clone(), row.iter().map(|&t| -t).collect()])
        .collect();
    Ok(ExtendedProductActionSpec {
        symbol,
        group: d.group.clone(),
        theta1,
        alpha: vec![Sign::Plus; order],
        beta,
        theta2,
    })
}
