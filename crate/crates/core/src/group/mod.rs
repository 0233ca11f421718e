//! Finite groups stored as multiplication tables with the identity at index 0.

mod structure;

use std::fmt;

use thiserror::Error;

pub use structure::{analyze_structure, StructureReport, TargetShape, TauEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    Empty,
    #[error("table row {row} has {len} entries, expected {order}")]
    Ragged { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row},{col}) is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("index 0 is not a two-sided identity")]
    Identity,
    #[error("table is not a Latin square (row or column {index})")]
    NotLatin { index: usize },
    #[error("multiplication is not associative at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("malformed group table file: {0}")]
    Format(String),
    #[error("unknown group constructor '{0}'")]
    UnknownConstructor(String),
}

/// A finite group given by its full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    label: Option<String>,
}

impl FiniteGroup {
    /// Validates identity, Latin-square, and associativity conditions.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::Ragged {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(GroupError::OutOfRange { row, col, value });
            }
        }
        if (0..order).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(GroupError::Identity);
        }
        for index in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for k in 0..order {
                row_seen[table[index][k]] = true;
                col_seen[table[k][index]] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(GroupError::NotLatin { index });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self::from_checked_table(table))
    }

    fn from_checked_table(table: Vec<Vec<usize>>) -> Self {
        let inverses = table
            .iter()
            .map(|row| row.iter().position(|&x| x == 0).expect("Latin square"))
            .collect();
        FiniteGroup {
            table,
            inverses,
            label: None,
        }
    }

    fn labelled(mut self, label: String) -> Self {
        self.label = Some(label);
        self
    }

    /// Constructor string such as `cyclic:4`, when the group was built by name.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut power = a;
        let mut k = 1;
        while power != 0 {
            power = self.mul(power, a);
            k += 1;
        }
        k
    }

    /// Parses the plain-text table format: the order on the first line, then
    /// one whitespace-separated row per line.
    pub fn parse_table(text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GroupError::Format("missing order line".into()))?;
        let order: usize = header
            .parse()
            .map_err(|_| GroupError::Format(format!("bad order '{header}'")))?;
        let table = lines
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| GroupError::Format(format!("bad entry '{tok}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if table.len() != order {
            return Err(GroupError::Format(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        Self::from_table(table)
    }

    /// Named constructors: `cyclic:n` and `product:A,B` (split at the first
    /// comma, so only the right factor may itself be a product).
    pub fn from_constructor(spec: &str) -> Result<Self, GroupError> {
        let spec = spec.trim();
        if let Some(n) = spec.strip_prefix("cyclic:") {
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| GroupError::UnknownConstructor(spec.to_string()))?;
            if n == 0 {
                return Err(GroupError::Empty);
            }
            return Ok(cyclic(n));
        }
        if let Some(rest) = spec.strip_prefix("product:") {
            let (left, right) = rest
                .split_once(',')
                .ok_or_else(|| GroupError::UnknownConstructor(spec.to_string()))?;
            let a = Self::from_constructor(left)?;
            let b = Self::from_constructor(right)?;
            return Ok(direct_product(&a, &b));
        }
        Err(GroupError::UnknownConstructor(spec.to_string()))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order())?;
        for row in &self.table {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `Z_n` with element `k` at index `k`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order 0");
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_checked_table(table).labelled(format!("cyclic:{n}"))
}

/// `A x B` with `(i, j)` at index `i * |B| + j`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let nb = b.order();
    let n = a.order() * nb;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_checked_table(table);
    match (a.label(), b.label()) {
        (Some(la), Some(lb)) if !la.starts_with("product:") => {
            group.labelled(format!("product:{la},{lb}"))
        }
        _ => group,
    }
}

/// A map of element indices between two finite groups.
#[derive(Debug, Clone)]
pub struct GroupMap<'a> {
    pub source: &'a FiniteGroup,
    pub target: &'a FiniteGroup,
    pub images: Vec<usize>,
}

impl<'a> GroupMap<'a> {
    pub fn new(source: &'a FiniteGroup, target: &'a FiniteGroup, images: Vec<usize>) -> Self {
        assert_eq!(images.len(), source.order(), "one image per source element");
        assert!(images.iter().all(|&i| i < target.order()), "image out of range");
        GroupMap {
            source,
            target,
            images,
        }
    }
}

pub fn check_homomorphism(m: &GroupMap<'_>) -> bool {
    m.source.elements().all(|g| {
        m.source.elements().all(|h| {
            m.images[m.source.mul(g, h)] == m.target.mul(m.images[g], m.images[h])
        })
    })
}

pub fn check_injective(m: &GroupMap<'_>) -> bool {
    let mut seen = vec![false; m.target.order()];
    m.images
        .iter()
        .all(|&img| !std::mem::replace(&mut seen[img], true))
}
