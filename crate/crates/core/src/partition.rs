//! Integer partitions and skew shapes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

/// Weakly decreasing sequence of positive integers. Ordered lexicographically
/// on the parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// # Panics
    /// If `parts` is not weakly decreasing.
    pub fn from_slice(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self / inner` has at most one cell per column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| self.part(i + 1) <= inner.part(i))
    }

    /// `self / inner` has at most one cell per row.
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| self.part(i) <= inner.part(i) + 1)
    }

    /// Cells `(row, col)` (1-based) of `self / inner`, row by row.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for r in 1..=self.len() {
            for c in (inner.part(r) + 1)..=self.part(r) {
                out.push((r as i64, c as i64));
            }
        }
        out
    }

    /// Adds a box in row `i` (1-based); `None` if the result is not a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 {
            return None;
        }
        if i > 1 && self.part(i - 1) == self.part(i) {
            return None;
        }
        let mut p = self.0.clone();
        if i == p.len() + 1 {
            p.push(1);
        } else {
            p[i - 1] += 1;
        }
        Some(Partition(p))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self` (including `∅` and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(
            outer: &Partition,
            i: usize,
            max: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if i > outer.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=outer.part(i).min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 1, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Compact label used in subscripts: `522` when every part is a single
    /// digit, `10,3,1` otherwise, `∅` for the empty partition.
    pub fn label(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts; the empty string, `0` and `∅` denote `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<(i64, i64)> {
        self.outer.skew_cells(&self.inner)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer.label())
        } else {
            write!(f, "{}/{}", self.outer.label(), self.inner.label())
        }
    }
}

impl FromStr for SkewShape {
    type Err = PartitionError;

    /// `outer` or `outer/inner`; an all-digit part list such as `22` is
    /// read digit by digit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.splitn(2, '/');
        let outer = parse_shape_part(it.next().unwrap_or(""))?;
        let inner = match it.next() {
            Some(t) => parse_shape_part(t)?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}

/// Parses `8,3,1`, or a comma-free digit string such as `221` as single-digit
/// parts.
pub fn parse_shape_part(s: &str) -> Result<Partition, PartitionError> {
    let t = s.trim();
    if !t.contains(',') && t.len() > 1 && t.chars().all(|c| c.is_ascii_digit()) {
        let parts = t.chars().map(|c| c.to_digit(10).unwrap()).collect();
        return Partition::new(parts);
    }
    t.parse()
}
