//! Integer partitions and weak compositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are stripped on
/// construction; the empty sequence is the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped, an unsorted input is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// `(k^n)`, the rectangle with `n` rows of length `k`.
    pub fn rectangle(k: usize, n: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition(vec![k; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition((0..cols).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect())
    }

    /// `n * lambda`, every part multiplied by `n`.
    pub fn scale(&self, n: usize) -> Partition {
        assert!(n >= 1, "scale factor must be positive");
        Partition(self.0.iter().map(|p| p * n).collect())
    }

    /// Number of parts equal to `j`.
    pub fn mult_count(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.get(i) <= self.get(i))
    }

    /// Componentwise sum (as padded vectors).
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, usize::MAX)
    }

    /// Partitions of `n` with largest part at most `max_part` and at most `max_len` parts,
    /// in decreasing lexicographic order.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, max: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions contained in this one (including empty and itself).
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i >= outer.len() {
                return;
            }
            for p in 1..=max.min(outer.get(i)) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(self, 0, self.first(), &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `4,2,1`; the empty string or `0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// Parse a comma-separated list of non-negative integers; blank input is empty.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a comma-separated list of integers, got {s:?}")))
        })
        .collect()
}

/// A weak composition: non-negative parts, zeros allowed (contents and weights).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The partition obtained by sorting the nonzero parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(&self.0)
    }

    /// Whether the parts, with trailing zeros removed, already form a partition.
    pub fn is_partition(&self) -> bool {
        Partition::new(self.0.clone()).is_ok()
    }

    /// Drop trailing zeros.
    pub fn trimmed(&self) -> Composition {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Composition(v)
    }

    /// All weak compositions of `n` with exactly `len` parts, in lexicographic order.
    pub fn all(n: usize, len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(rest: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if left == 0 {
                if rest == 0 {
                    out.push(Composition(cur.clone()));
                }
                return;
            }
            for p in 0..=rest {
                cur.push(p);
                rec(rest - p, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(n, len, &mut cur, &mut out);
        out
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_list(s)?))
    }
}
