//! Seifert symbols `(g, o1|(q1,p1),...)` / `(g, n2|...)` and the operations
//! that act on them at the level of invariants: normalization, the
//! obstruction class, fiber-preserving equivalence, and the orientable base
//! space double cover together with its inverse.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use parse::parse_symbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("integer out of range at byte {pos}")]
    IntegerRange { pos: usize },
    #[error("multiplicity must be positive in pair ({q},{p})")]
    NonPositiveMultiplicity { q: i64, p: i64 },
    #[error("pair ({q},{p}) is not coprime")]
    NotCoprime { q: i64, p: i64 },
    #[error("a non-orientable base needs at least one crosscap (genus 0 with n2)")]
    NonorientableGenusZero,
    #[error("expected a symbol with class {expected}, got {found}")]
    WrongClass {
        expected: OrientabilityClass,
        found: OrientabilityClass,
    },
}

/// Orientability of the base surface: `o1` (orientable, genus counts handles)
/// or `n2` (non-orientable, genus counts crosscaps).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrientabilityClass {
    O1,
    N2,
}

impl fmt::Display for OrientabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrientabilityClass::O1 => "o1",
            OrientabilityClass::N2 => "n2",
        })
    }
}

/// A filling pair `(q, p)` with `q >= 1` and `gcd(q, p) = 1`.
///
/// Ordering is lexicographic on `(q, p)`, which is the canonical order for
/// exceptional pairs in a normalized symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertPair {
    q: i64,
    p: i64,
}

impl SeifertPair {
    pub fn new(q: i64, p: i64) -> Result<Self, SymbolError> {
        if q < 1 {
            return Err(SymbolError::NonPositiveMultiplicity { q, p });
        }
        if q.gcd(&p) != 1 {
            return Err(SymbolError::NotCoprime { q, p });
        }
        Ok(SeifertPair { q, p })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Pairs with `q > 1` correspond to genuinely exceptional fibers.
    pub fn is_exceptional(&self) -> bool {
        self.q > 1
    }
}

impl fmt::Display for SeifertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.p)
    }
}

/// An unnormalized Seifert symbol. Pair order is preserved as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertSymbol {
    genus: u32,
    class: OrientabilityClass,
    pairs: Vec<SeifertPair>,
}

impl SeifertSymbol {
    pub fn new(
        genus: u32,
        class: OrientabilityClass,
        pairs: Vec<SeifertPair>,
    ) -> Result<Self, SymbolError> {
        if class == OrientabilityClass::N2 && genus == 0 {
            return Err(SymbolError::NonorientableGenusZero);
        }
        Ok(SeifertSymbol {
            genus,
            class,
            pairs,
        })
    }

    /// Convenience constructor from raw `(q, p)` tuples.
    pub fn from_pairs(
        genus: u32,
        class: OrientabilityClass,
        pairs: &[(i64, i64)],
    ) -> Result<Self, SymbolError> {
        let pairs = pairs
            .iter()
            .map(|&(q, p)| SeifertPair::new(q, p))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(genus, class, pairs)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn class(&self) -> OrientabilityClass {
        self.class
    }

    pub fn pairs(&self) -> &[SeifertPair] {
        &self.pairs
    }

    fn require_class(&self, expected: OrientabilityClass) -> Result<(), SymbolError> {
        if self.class == expected {
            Ok(())
        } else {
            Err(SymbolError::WrongClass {
                expected,
                found: self.class,
            })
        }
    }
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}|", self.genus, self.class)?;
        for (k, pair) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{pair}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SeifertSymbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_symbol(s)
    }
}

/// Exact value of `sum p_i / q_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalSum(BigRational);

impl TotalSum {
    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for TotalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn total_sum(s: &SeifertSymbol) -> TotalSum {
    let sum = s
        .pairs
        .iter()
        .fold(BigRational::zero(), |acc, pair| {
            acc + BigRational::new(BigInt::from(pair.p), BigInt::from(pair.q))
        });
    TotalSum(sum)
}

/// Normal form: sorted exceptional pairs with `0 < p < q` plus the
/// obstruction class `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedSymbol {
    genus: u32,
    class: OrientabilityClass,
    exceptional: Vec<SeifertPair>,
    b: i64,
}

impl NormalizedSymbol {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn class(&self) -> OrientabilityClass {
        self.class
    }

    pub fn exceptional(&self) -> &[SeifertPair] {
        &self.exceptional
    }

    pub fn obstruction_class(&self) -> i64 {
        self.b
    }

    /// The symbol with the exceptional pairs followed by a trailing `(1, b)`.
    pub fn expand(&self) -> SeifertSymbol {
        let mut pairs = self.exceptional.clone();
        pairs.push(SeifertPair { q: 1, p: self.b });
        SeifertSymbol {
            genus: self.genus,
            class: self.class,
            pairs,
        }
    }
}

impl fmt::Display for NormalizedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expand())
    }
}

pub fn normalize(s: &SeifertSymbol) -> NormalizedSymbol {
    let mut b = 0i64;
    let mut exceptional = Vec::with_capacity(s.pairs.len());
    for pair in &s.pairs {
        let (carry, rem) = pair.p.div_mod_floor(&pair.q);
        b += carry;
        if pair.q > 1 {
            // coprimality rules out rem == 0
            exceptional.push(SeifertPair { q: pair.q, p: rem });
        } else {
            debug_assert_eq!(rem, 0);
        }
    }
    exceptional.sort_unstable();
    NormalizedSymbol {
        genus: s.genus,
        class: s.class,
        exceptional,
        b,
    }
}

pub fn obstruction_class(s: &SeifertSymbol) -> i64 {
    normalize(s).b
}

/// Fiber-preserving, orientation-preserving equivalence. Only symbols with
/// the same genus and base class are ever equivalent here.
pub fn equivalent(a: &SeifertSymbol, b: &SeifertSymbol) -> bool {
    a.genus == b.genus && a.class == b.class && normalize(a) == normalize(b)
}

/// `(g+1, n2 | pairs)` to `(g, o1 | each pair twice)`, keeping the two copies
/// of every pair adjacent.
pub fn orientable_double_cover(m: &SeifertSymbol) -> Result<SeifertSymbol, SymbolError> {
    m.require_class(OrientabilityClass::N2)?;
    let pairs = m.pairs.iter().flat_map(|&pair| [pair, pair]).collect();
    Ok(SeifertSymbol {
        genus: m.genus - 1,
        class: OrientabilityClass::O1,
        pairs,
    })
}

/// Inverse of [`orientable_double_cover`] up to equivalence.
///
/// Returns `Ok(None)` when the normalized exceptional multiset is not a
/// doubled multiset or the obstruction class is odd.
pub fn base_quotient(t: &SeifertSymbol) -> Result<Option<SeifertSymbol>, SymbolError> {
    t.require_class(OrientabilityClass::O1)?;
    let normal = normalize(t);
    if normal.b % 2 != 0 {
        return Ok(None);
    }
    let mut counts: BTreeMap<SeifertPair, usize> = BTreeMap::new();
    for &pair in &normal.exceptional {
        *counts.entry(pair).or_default() += 1;
    }
    let mut pairs = Vec::new();
    for (pair, count) in counts {
        if count % 2 != 0 {
            return Ok(None);
        }
        pairs.extend(std::iter::repeat(pair).take(count / 2));
    }
    if normal.b != 0 {
        pairs.push(SeifertPair {
            q: 1,
            p: normal.b / 2,
        });
    }
    Ok(Some(SeifertSymbol {
        genus: t.genus + 1,
        class: OrientabilityClass::N2,
        pairs,
    }))
}
