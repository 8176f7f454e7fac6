//! Integer partitions, dominance, and the column-filling statistics.
//!
//! A [`Partition`] indexes two different objects in gl_n: the Jordan type of
//! a nilpotent orbit and the block sizes of a standard Levi. Which role a
//! partition plays is always spelled out by the caller; nothing in this
//! module conjugates implicitly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default largest `n` accepted by [`Partition::enumerate`].
pub const DEFAULT_ENUMERATE_CAP: u32 = 30;
/// Default largest `n` accepted by [`dominance_hasse`].
pub const DEFAULT_HASSE_CAP: u32 = 15;

/// A non-increasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts, so sorting in reverse
/// gives the reverse-lexicographic order used for all listings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from parts, dropping zeros. Parts must be non-increasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts: Vec<u32> = parts.into().into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be non-increasing, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Build from parts in any order.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts: Vec<u32> = parts.into().into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Total size `n`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `Σ_{i≤k} p_i`, with parts beyond the length read as zero.
    pub fn partial_sum(&self, k: usize) -> u32 {
        self.0.iter().take(k).sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Dominance `self ⪰ other` by partial sums.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (n, m) = (self.size(), other.size());
        if n != m {
            return Err(Error::IncomparableSizes(n, m));
        }
        let len = self.len().max(other.len());
        Ok((1..=len).all(|u| self.partial_sum(u) >= other.partial_sum(u)))
    }

    /// All partitions of `n` in reverse-lexicographic order.
    pub fn enumerate(n: u32, cap: u32) -> Result<Vec<Partition>> {
        if n > cap {
            return Err(Error::cap(format!("partition size {n}"), cap as usize));
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        enumerate_into(n, n, &mut current, &mut out);
        Ok(out)
    }

    /// Column-filling statistics for the first `k` boxes.
    ///
    /// Boxes are placed into the columns of the diagram of `self` top to
    /// bottom, leftmost column first. `φ_u` is the column of the `u`-th box.
    pub fn fill_stats(&self, k: u32) -> Result<FillStats> {
        if k > self.size() {
            return Err(Error::OutOfRange(format!(
                "k = {k} for a partition of {}",
                self.size()
            )));
        }
        let columns = self.conjugate();
        let mut phi = Vec::with_capacity(k as usize);
        let mut filled = Vec::new();
        let mut left = k;
        for (c, &height) in columns.parts().iter().enumerate() {
            if left == 0 {
                break;
            }
            let take = height.min(left);
            phi.extend(std::iter::repeat_n(c as u32 + 1, take as usize));
            filled.push(take);
            left -= take;
        }
        let psi = phi.iter().map(|&c| u64::from(c - 1)).sum();
        // Filled column heights are non-increasing, so this is a partition.
        let eta_min = Partition(filled).conjugate();
        Ok(FillStats {
            k,
            phi,
            psi,
            eta_min,
        })
    }

    /// Parse either `"4,4,2"` or the exponent shorthand `"3^2,1^4"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

fn enumerate_into(left: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(left)).rev() {
        current.push(part);
        enumerate_into(left - part, part, current, out);
        current.pop();
    }
}

/// Orbit-closure order: `O_a ⊆ closure(O_b)` iff `b ⪰ a`.
pub fn closure_leq(a: &Partition, b: &Partition) -> Result<bool> {
    b.dominates(a)
}

/// Covering pairs `(a, b)` of dominance on partitions of `n`; `a` covers `b`.
///
/// Edges are listed in enumeration order of `a`, then of `b`.
pub fn dominance_hasse(n: u32, cap: u32) -> Result<Vec<(Partition, Partition)>> {
    if n > cap {
        return Err(Error::cap(format!("partition size {n}"), cap as usize));
    }
    let parts = Partition::enumerate(n, u32::MAX)?;
    let strict = strict_dominance_matrix(&parts);
    let count = parts.len();
    let mut edges = Vec::new();
    for a in 0..count {
        for b in 0..count {
            if strict[a][b] && !(0..count).any(|c| strict[a][c] && strict[c][b]) {
                edges.push((parts[a].clone(), parts[b].clone()));
            }
        }
    }
    Ok(edges)
}

pub(crate) fn strict_dominance_matrix(parts: &[Partition]) -> Vec<Vec<bool>> {
    parts
        .iter()
        .map(|a| {
            parts
                .iter()
                .map(|b| a != b && a.dominates(b).unwrap_or(false))
                .collect()
        })
        .collect()
}

/// Statistics of filling `k` boxes column by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillStats {
    pub k: u32,
    /// 1-based column index of each box.
    pub phi: Vec<u32>,
    pub psi: u64,
    /// Row lengths of the filled region.
    pub eta_min: Partition,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let bad = |item: &str| Error::Parse(format!("bad partition item {item:?} in {text:?}"));
        let mut parts = Vec::new();
        if trimmed.trim().is_empty() {
            return Ok(Partition::default());
        }
        for item in trimmed.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: u32 = base.parse().map_err(|_| bad(item))?;
            let exp: usize = exp.parse().map_err(|_| bad(item))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// `C(x, 2)`.
pub(crate) fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}
