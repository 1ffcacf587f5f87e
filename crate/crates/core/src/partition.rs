//! Integer partitions and the shapes built from them.
//!
//! A [`Partition`] is stored without trailing zeros, so the empty partition
//! is simply the empty vector. Every cell-wise comparison reads missing parts
//! as zero, which is the usual Young-diagram convention.
//!
//! The text form `3,2,1` (and `-` for the empty partition) is shared by the
//! command line and the JSON encoding.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions order first by size and then in decreasing lexicographic
/// order, so sorted collections list `(3), (2,1), (1,1,1)` in the same
/// order as [`enumerate_partitions`].
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                input: join_parts(&parts),
                reason: format!("parts must be weakly decreasing, found {} before {}", w[0], w[1]),
            });
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for vectors already known to be valid.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_sorted(vec![1; n])
    }

    /// The hook `(n - t, 1^t)`; requires `t < n`.
    pub fn hook(n: usize, t: usize) -> Result<Self> {
        if n == 0 || t >= n {
            return Err(Error::IndexOutOfRange {
                name: "t",
                value: t,
                min: 0,
                max: n.saturating_sub(1),
            });
        }
        let mut parts = vec![n - t];
        parts.extend(std::iter::repeat_n(1, t));
        Ok(Partition::from_sorted(parts))
    }

    /// The rectangle `(k^m)`: `m` rows of length `k`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition::from_sorted(vec![k; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (zero-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, zero for the empty partition.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Diagram containment: `other_i <= self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cell-wise intersection of the two diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self.parts.iter().zip(&other.parts).map(|(&a, &b)| a.min(b)).collect();
        Partition::from_sorted(parts)
    }

    /// `|self \ other|`, the number of cells of `self` outside `other`.
    pub fn set_difference_size(&self, other: &Partition) -> usize {
        self.size() - self.intersection(other).size()
    }

    /// The distance `|λ \ μ|` between two partitions of the same number.
    pub fn distance(&self, other: &Partition) -> Result<usize> {
        check_same_size(self, other)?;
        Ok(self.set_difference_size(other))
    }

    /// `2·λ`: every part doubled.
    pub fn double_rows(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|p| 2 * p).collect())
    }

    /// `2*λ`: the partition with Frobenius coordinates `(λ_1,…,λ_k | λ_1−1,…,λ_k−1)`.
    ///
    /// Only defined when the parts of `self` are distinct.
    pub fn double_diagonal(&self) -> Result<Partition> {
        if !self.has_distinct_parts() {
            return Err(Error::NonDistinctParts(self.clone()));
        }
        let arms = self.parts.clone();
        let legs = self.parts.iter().map(|p| p - 1).collect();
        FrobeniusCoordinates::new(arms, legs)?.to_partition()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Number of cells whose removal leaves a partition, which is the number
    /// of distinct part values.
    pub fn inner_corners(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.is_empty())
    }

    /// Length of the main diagonal of the Young diagram.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }

    pub fn frobenius(&self) -> FrobeniusCoordinates {
        FrobeniusCoordinates::from_partition(self)
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// `f^λ`, the number of standard Young tableaux, from the hook-length formula.
    pub fn num_standard_tableaux(&self) -> Result<u64> {
        arith::factorial_quotient(self.size(), &self.hook_lengths())
    }

    /// Row-by-row list of the diagram's cells as `(row, column)`, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (0..row).map(move |j| (i, j)))
    }
}

/// Free-function form of [`Partition::conjugate`].
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub(crate) fn check_same_size(a: &Partition, b: &Partition) -> Result<usize> {
    let (left, right) = (a.size(), b.size());
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(left)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "-".to_owned();
    }
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,2,1`, or `-` for the empty partition.
    ///
    /// Input that is not weakly decreasing is rejected rather than sorted.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(fail("empty input; use `-` for the empty partition"));
        }
        let parts = s
            .split(',')
            .map(|tok| match tok.parse::<usize>() {
                Ok(0) => Err(fail("parts must be positive")),
                Ok(p) if tok.bytes().all(|b| b.is_ascii_digit()) => Ok(p),
                _ => Err(fail(&format!("`{tok}` is not a positive integer"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(fail("parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Frobenius coordinates `(a_1,…,a_d | b_1,…,b_d)`: arm and leg lengths of
/// the diagonal cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusCoordinates {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusCoordinates {
    /// Checks that arms and legs have equal length and are strictly decreasing.
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "{} arms but {} legs",
                arms.len(),
                legs.len()
            )));
        }
        for (name, seq) in [("arms", &arms), ("legs", &legs)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFrobenius(format!(
                    "{name} {seq:?} are not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusCoordinates { arms, legs })
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        let d = lambda.durfee();
        let conj = lambda.conjugate();
        FrobeniusCoordinates {
            arms: (0..d).map(|i| lambda.part(i) - i - 1).collect(),
            legs: (0..d).map(|i| conj.part(i) - i - 1).collect(),
        }
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Result<Partition> {
        let d = self.rank();
        // Column j (< d) has length legs[j] + j + 1.
        let column_len = |j: usize| self.legs[j] + j + 1;
        let depth = if d == 0 { 0 } else { column_len(0) };
        let mut parts = Vec::with_capacity(depth);
        for i in 0..depth {
            if i < d {
                parts.push(self.arms[i] + i + 1);
            } else {
                parts.push((0..d).filter(|&j| column_len(j) > i).count());
            }
        }
        Partition::new(parts)
    }
}

/// The cells of `outer` not in `inner`, with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
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

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Cells of the skew shape as `(row, column)`, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer
            .parts()
            .iter()
            .enumerate()
            .flat_map(move |(i, &row)| (self.inner.part(i)..row).map(move |j| (i, j)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `λ ⊕ μ`: the diagrams of `λ` and `μ` placed diagonally, `λ` up and to the
/// right of `μ`, so that no row or column meets both.
pub fn oplus(lambda: &Partition, mu: &Partition) -> SkewShape {
    let shift = mu.width();
    let mut outer: Vec<usize> = lambda.parts().iter().map(|p| p + shift).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![shift; lambda.len()];
    SkewShape {
        outer: Partition::from_sorted(outer),
        inner: Partition::from_sorted(inner),
    }
}

/// An ordered pair of partitions, indexing an irreducible character of the
/// hyperoctahedral group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    first: Partition,
    second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.first, self.second)
    }
}

/// All partitions of `n` with at most `max_length` parts (`None` for no
/// bound), in decreasing lexicographic order.
///
/// `enumerate_partitions(0, _)` is `[∅]`.
pub fn enumerate_partitions(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    let max_length = max_length.unwrap_or(n);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, max_length, &mut current, &mut out);
    out
}

fn fill(remaining: usize, cap: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(remaining)).rev() {
        // The remaining slots must be able to absorb what is left.
        if p * slots < remaining {
            break;
        }
        current.push(p);
        fill(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Partitions of `n` into distinct parts, in decreasing lexicographic order.
pub fn distinct_part_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n, None)
        .into_iter()
        .filter(Partition::has_distinct_parts)
        .collect()
}

/// All bipartitions `(μ, ν)` with `|μ| + |ν| = n`, ordered by `|ν|` and then
/// by the enumeration order of each component.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for second_size in 0..=n {
        for first in enumerate_partitions(n - second_size, None) {
            for second in enumerate_partitions(second_size, None) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out
}
