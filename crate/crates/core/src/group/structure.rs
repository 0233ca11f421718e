//! Where a group acting by extended product actions embeds.
//!
//! Each element is sent to its fiber rotation class in `Z_n` and to its
//! boundary datum `(alpha(g), beta(g), theta2(., g))`. The boundary data form
//! a group `H` under composition, which stands in for the image of the group
//! in the diffeomorphism group of the base surface.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use super::{check_homomorphism, check_injective, cyclic, direct_product, FiniteGroup, GroupMap};
use crate::action::{
    check_tau_commuting, validate_action_spec, ActionError, ExtendedProductActionSpec,
    Permutation, RotationNumber, Sign,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct BoundaryDatum {
    sign: Sign,
    perm: Permutation,
    rotations: Vec<RotationNumber>,
}

impl BoundaryDatum {
    fn of(spec: &ExtendedProductActionSpec, g: usize) -> Self {
        BoundaryDatum {
            sign: spec.alpha[g],
            perm: spec.beta[g].clone(),
            rotations: spec.theta2.iter().map(|row| row[g]).collect(),
        }
    }

    fn compose(&self, other: &BoundaryDatum) -> BoundaryDatum {
        BoundaryDatum {
            sign: self.sign * other.sign,
            perm: self.perm.compose(&other.perm),
            rotations: (0..other.rotations.len())
                .map(|i| self.rotations[other.perm.apply(i)] + other.rotations[i].signed(self.sign))
                .collect(),
        }
    }
}

/// The image of a set of elements under `g -> datum(g)`, indexed by first
/// appearance so the identity lands on 0.
struct DatumGroup {
    data: Vec<BoundaryDatum>,
    index: HashMap<BoundaryDatum, usize>,
    of_element: Vec<Option<usize>>,
}

impl DatumGroup {
    fn collect(spec: &ExtendedProductActionSpec, elements: impl Iterator<Item = usize>) -> Self {
        let mut group = DatumGroup {
            data: Vec::new(),
            index: HashMap::new(),
            of_element: vec![None; spec.group.order()],
        };
        for g in elements {
            let datum = BoundaryDatum::of(spec, g);
            let next = group.data.len();
            let k = *group.index.entry(datum.clone()).or_insert(next);
            if k == next {
                group.data.push(datum);
            }
            group.of_element[g] = Some(k);
        }
        group
    }

    fn order(&self) -> usize {
        self.data.len()
    }

    fn lookup(&self, datum: &BoundaryDatum) -> usize {
        self.index[datum]
    }

    fn idx(&self, g: usize) -> usize {
        self.of_element[g].expect("element in the collected subgroup")
    }

    /// Closed because validated specs make `datum` a homomorphism.
    fn table(&self) -> FiniteGroup {
        let table = self
            .data
            .iter()
            .map(|a| self.data.iter().map(|b| self.lookup(&a.compose(b))).collect())
            .collect();
        FiniteGroup::from_checked_table(table)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetShape {
    /// `Z_n x H`, for actions preserving fiber orientation.
    Product { n: u64, h_order: usize },
    /// `(Z_n x H+) x| Z_2`, split by an orientation-reversing involution.
    Semidirect { n: u64, h_plus_order: usize },
    /// Fiber orientation is reversed but no reversing element has order 2.
    HypothesisUnmet,
}

impl fmt::Display for TargetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetShape::Product { n, h_order } => write!(f, "Z_{n} x H, |H| = {h_order}"),
            TargetShape::Semidirect { n, h_plus_order } => {
                write!(f, "(Z_{n} x H+) x| Z_2, |H+| = {h_plus_order}")
            }
            TargetShape::HypothesisUnmet => {
                f.write_str("hypothesis unmet: no orientation-reversing element of order 2")
            }
        }
    }
}

/// The `Z_2 x H` embedding of a tau-commuting action, with the `Z_2`
/// coordinate read off `epsilon(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauEmbedding {
    pub h_order: usize,
    pub target: FiniteGroup,
    pub images: Vec<usize>,
    pub embedding_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub n: u64,
    pub alpha_image_order: u8,
    pub shape: TargetShape,
    /// `None` only when the shape is [`TargetShape::HypothesisUnmet`].
    pub target: Option<FiniteGroup>,
    pub images: Vec<usize>,
    pub embedding_ok: bool,
    pub tau: Option<TauEmbedding>,
}

fn verdict(source: &FiniteGroup, target: &FiniteGroup, images: &[usize]) -> bool {
    let map = GroupMap::new(source, target, images.to_vec());
    check_homomorphism(&map) && check_injective(&map)
}

pub fn analyze_structure(spec: &ExtendedProductActionSpec) -> Result<StructureReport, ActionError> {
    validate_action_spec(spec)?;
    let group = &spec.group;
    let kernel: Vec<usize> = group.elements().filter(|&g| spec.alpha[g] == Sign::Plus).collect();
    let n = kernel
        .iter()
        .fold(1u64, |acc, &g| acc.lcm(&(spec.theta1[g].denom() as u64)));
    let fiber_class = |g: usize| {
        let t = spec.theta1[g];
        (t.numer() as u64 * (n / t.denom() as u64)) as usize
    };
    let alpha_image_order = if kernel.len() == group.order() { 1 } else { 2 };

    let tau = match check_tau_commuting(spec) {
        Ok(report) if report.is_commuting() => {
            let h = DatumGroup::collect(spec, group.elements());
            let target = direct_product(&cyclic(2), &h.table());
            let images: Vec<usize> = group
                .elements()
                .map(|g| usize::from(!spec.theta1[g].is_zero()) * h.order() + h.idx(g))
                .collect();
            Some(TauEmbedding {
                h_order: h.order(),
                embedding_ok: verdict(group, &target, &images),
                target,
                images,
            })
        }
        _ => None,
    };

    if alpha_image_order == 1 {
        let h = DatumGroup::collect(spec, group.elements());
        let target = direct_product(&cyclic(n as usize), &h.table());
        let images: Vec<usize> = group
            .elements()
            .map(|g| fiber_class(g) * h.order() + h.idx(g))
            .collect();
        return Ok(StructureReport {
            n,
            alpha_image_order,
            shape: TargetShape::Product {
                n,
                h_order: h.order(),
            },
            embedding_ok: verdict(group, &target, &images),
            target: Some(target),
            images,
            tau,
        });
    }

    let involution = group
        .elements()
        .find(|&g| spec.alpha[g] == Sign::Minus && group.mul(g, g) == 0);
    let Some(minus) = involution else {
        return Ok(StructureReport {
            n,
            alpha_image_order,
            shape: TargetShape::HypothesisUnmet,
            target: None,
            images: Vec::new(),
            embedding_ok: false,
            tau,
        });
    };

    let h_plus = DatumGroup::collect(spec, kernel.iter().copied());
    let m = h_plus.order();
    let d = BoundaryDatum::of(spec, minus);
    // d is an involution, so conjugation by d is d . h . d
    let conj: Vec<usize> = h_plus
        .data
        .iter()
        .map(|h| h_plus.lookup(&d.compose(h).compose(&d)))
        .collect();
    let h_table = h_plus.table();
    let nn = n as usize;
    let half = nn * m;
    let encode = |k: usize, h: usize, e: usize| e * half + k * m + h;
    let table = (0..2 * half)
        .map(|a| {
            let (e1, k1, h1) = (a / half, (a % half) / m, a % m);
            (0..2 * half)
                .map(|b| {
                    let (e2, k2, h2) = (b / half, (b % half) / m, b % m);
                    let (k2, h2) = if e1 == 1 { ((nn - k2) % nn, conj[h2]) } else { (k2, h2) };
                    encode((k1 + k2) % nn, h_table.mul(h1, h2), e1 ^ e2)
                })
                .collect()
        })
        .collect();
    let target = FiniteGroup::from_checked_table(table);
    let images: Vec<usize> = group
        .elements()
        .map(|g| {
            if spec.alpha[g] == Sign::Plus {
                encode(fiber_class(g), h_plus.idx(g), 0)
            } else {
                let k = group.mul(g, minus);
                encode(fiber_class(k), h_plus.idx(k), 1)
            }
        })
        .collect();
    Ok(StructureReport {
        n,
        alpha_image_order,
        shape: TargetShape::Semidirect { n, h_plus_order: m },
        embedding_ok: verdict(group, &target, &images),
        target: Some(target),
        images,
        tau,
    })
}
