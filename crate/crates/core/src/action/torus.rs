use std::fmt;

use num_integer::Integer;

use super::{validate_action_spec, ActionError, ExtendedProductActionSpec, RotationNumber, Sign};
use crate::symbol::SeifertPair;

/// The exponent matrix `[[x, p], [y, q]]` gluing the solid torus `V_i` to the
/// boundary torus of pair `(q, p)`, with `x q - p y = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluingMatrix {
    pub x: i64,
    pub y: i64,
    pub pair: SeifertPair,
}

impl GluingMatrix {
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.x, self.pair.p()], [self.y, self.pair.q()]]
    }

    pub fn inverse(&self) -> [[i64; 2]; 2] {
        let (p, q) = (self.pair.p(), self.pair.q());
        [[q, -p], [-self.y, self.x]]
    }

    pub fn determinant(&self) -> i64 {
        self.x * self.pair.q() - self.pair.p() * self.y
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.matrix();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Canonical gluing matrix: `x` is the least non-negative solution of
/// `x q = 1 (mod |p|)`, so `(1, 0)` for `q = 1` and `0 <= x < q` whenever
/// `|p| <= q`.
pub fn gluing_matrix(pair: SeifertPair) -> GluingMatrix {
    let (q, p) = (pair.q() as i128, pair.p() as i128);
    if p == 0 {
        // gcd(q, 0) = 1 forces q = 1
        return GluingMatrix { x: 1, y: 0, pair };
    }
    let m = p.abs();
    let x = q.extended_gcd(&m).x.mod_floor(&m);
    let y = (x * q - 1) / p;
    GluingMatrix {
        x: x as i64,
        y: y as i64,
        pair,
    }
}

/// A torus map `(u, v) -> (r_u u^sign, r_v v^sign)` in (longitude, meridian)
/// coordinates of a solid torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusMapData {
    pub rotation: (RotationNumber, RotationNumber),
    pub sign: Sign,
}

impl fmt::Display for TorusMapData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) sign {}", self.rotation.0, self.rotation.1, self.sign)
    }
}

/// The map `g` induces from filling torus `V_i` to `V_j`, `j = beta(g)(i)`:
/// the boundary datum `(theta1(g), theta2(i, g))` pushed through the inverse
/// gluing matrix of the target pair.
pub fn induced_solid_torus_action(
    spec: &ExtendedProductActionSpec,
    i: usize,
    g: usize,
) -> Result<TorusMapData, ActionError> {
    validate_action_spec(spec)?;
    let count = spec.boundary_count();
    if i >= count {
        return Err(ActionError::BoundaryIndex { index: i, count });
    }
    let order = spec.group.order();
    if g >= order {
        return Err(ActionError::ElementIndex { index: g, order });
    }
    let j = spec.beta[g].apply(i);
    let [[a, b], [c, d]] = gluing_matrix(spec.symbol.pairs()[j]).inverse();
    let (t1, t2) = (spec.theta1[g], spec.theta2[i][g]);
    Ok(TorusMapData {
        rotation: (t1.times(a) + t2.times(b), t1.times(c) + t2.times(d)),
        sign: spec.alpha[g],
    })
}
