use num_integer::Integer;

use super::ActionError;

/// Integers `b_i` with `sum b_i * orbits[i] = b`, if any exist.
///
/// Built by folding extended Euclid across the list; `None` exactly when
/// `gcd(orbits)` does not divide `b`.
pub fn check_obstruction_condition(
    b: i64,
    orbits: &[u64],
) -> Result<Option<Vec<i128>>, ActionError> {
    let (&first, rest) = orbits.split_first().ok_or(ActionError::BadOrbitNumbers)?;
    if orbits.contains(&0) {
        return Err(ActionError::BadOrbitNumbers);
    }
    let mut gcd = first as i128;
    let mut coefficients = vec![1i128];
    for &orbit in rest {
        let e = gcd.extended_gcd(&(orbit as i128));
        for c in coefficients.iter_mut() {
            *c *= e.x;
        }
        coefficients.push(e.y);
        gcd = e.gcd;
    }
    let b = b as i128;
    if b % gcd != 0 {
        return Ok(None);
    }
    let scale = b / gcd;
    Ok(Some(coefficients.into_iter().map(|c| c * scale).collect()))
}
