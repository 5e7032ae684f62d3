//! Integer partitions in canonical (nonincreasing) form.
//!
//! A [`Partition`] is the vertex label of the partition graph. This module
//! provides enumeration, conjugation, Ferrers-diagram corner analysis, and
//! the elementary-transfer moves that define adjacency.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n` stored as its nonincreasing sequence of positive parts.
///
/// Ordering follows the canonical enumeration order: reverse-lexicographic on
/// the part sequence, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition from parts that are already nonincreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument(
                "partition must have at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts not nonincreasing: {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }

    /// Sorts and drops zeros; used after a transfer.
    fn canonicalize(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based index and the conventions `λ_0 = +∞`, `λ_k = 0` for `k > ℓ`.
    pub fn part(&self, i: usize) -> u32 {
        match i {
            0 => u32::MAX,
            _ => self.parts.get(i - 1).copied().unwrap_or(0),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// All partitions of `n`, largest part first, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n as usize);
    extend_partitions(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn extend_partitions(
    remaining: u32,
    max_part: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::canonicalize(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        extend_partitions(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// Transpose of the Ferrers diagram: `λ'_j = #{i : λ_i ≥ j}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.parts.first().copied().unwrap_or(0);
    let parts = (1..=first)
        .map(|j| lambda.parts.iter().take_while(|&&p| p >= j).count() as u32)
        .collect();
    Partition { parts, n: lambda.n }
}

pub fn is_self_conjugate(lambda: &Partition) -> bool {
    // λ = λ' iff λ_i = #{k : λ_k ≥ i} for every row.
    let parts = &lambda.parts;
    if parts.first().copied().unwrap_or(0) as usize != parts.len() {
        return false;
    }
    parts
        .iter()
        .enumerate()
        .all(|(i, &p)| parts.iter().take_while(|&&q| q as usize > i).count() == p as usize)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CornerKind {
    Removable,
    Addable,
}

/// A removable or addable cell `(row, col)` of a Ferrers diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
    pub kind: CornerKind,
    pub diagonal: bool,
}

impl Corner {
    fn new(row: usize, col: usize, kind: CornerKind) -> Self {
        Self {
            row,
            col,
            kind,
            diagonal: row == col,
        }
    }
}

/// Removable corners (top to bottom) followed by addable corners (top to bottom).
pub fn corners(lambda: &Partition) -> Vec<Corner> {
    let len = lambda.len();
    let removable = (1..=len)
        .filter(|&i| lambda.part(i) > lambda.part(i + 1))
        .map(|i| Corner::new(i, lambda.part(i) as usize, CornerKind::Removable));
    let addable = (1..=len + 1)
        .filter(|&i| lambda.part(i - 1) > lambda.part(i))
        .map(|i| Corner::new(i, lambda.part(i) as usize + 1, CornerKind::Addable));
    removable.chain(addable).collect()
}

/// `λ_i = i` and `λ_{i+1} < i`.
pub fn has_removable_diagonal_corner(lambda: &Partition) -> bool {
    (1..=lambda.len()).any(|i| lambda.part(i) as usize == i && (lambda.part(i + 1) as usize) < i)
}

/// `λ_i = i − 1` and `λ_{i−1} ≥ i`.
pub fn has_addable_diagonal_corner(lambda: &Partition) -> bool {
    (1..=lambda.len() + 1)
        .any(|i| lambda.part(i) as usize + 1 == i && lambda.part(i - 1) as u64 >= i as u64)
}

/// Every partition reachable by moving one unit from one part to a different
/// (possibly new, empty) part, excluding `λ` itself.
pub fn transfer_neighbors(lambda: &Partition) -> BTreeSet<Partition> {
    // Equal parts produce equal results, so iterate over distinct values only.
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &p in &lambda.parts {
        match values.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => values.push((p, 1)),
        }
    }
    let mut out = BTreeSet::new();
    for &(donor, donor_mult) in &values {
        let receivers = values.iter().map(|&(v, _)| v).chain(std::iter::once(0));
        for receiver in receivers {
            if receiver == donor && donor_mult < 2 {
                continue;
            }
            let mut parts = lambda.parts.clone();
            let di = parts
                .iter()
                .position(|&p| p == donor)
                .expect("donor present");
            parts[di] -= 1;
            if receiver == 0 {
                parts.push(1);
            } else {
                let ri = parts
                    .iter()
                    .enumerate()
                    .position(|(k, &p)| k != di && p == receiver)
                    .expect("receiver present");
                parts[ri] += 1;
            }
            let mu = Partition::canonicalize(parts);
            if mu != *lambda {
                out.insert(mu);
            }
        }
    }
    out
}
