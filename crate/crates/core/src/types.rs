//! Shared domain types. Every vertex and car index is 1-based.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};

/// A closed vertex interval `[lo, hi]` with `1 <= lo <= hi`.
///
/// Traverse paths, parking components, Naples components and obstruction
/// blocks are all intervals of the lot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: usize,
    hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub(crate) fn raw(lo: usize, hi: usize) -> Self {
        debug_assert!(lo >= 1 && lo <= hi);
        Self { lo, hi }
    }

    pub fn singleton(v: usize) -> Result<Self> {
        Self::new(v, v)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    /// Always false; an interval holds at least one vertex.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Smallest interval covering both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::raw(self.lo.min(other.lo), self.hi.max(other.hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}..{})", self.lo, self.hi)
    }
}

/// A directed path of `total` vertices, optionally with one obstructed block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lot {
    total: usize,
    obstruction: Option<Interval>,
}

impl Lot {
    pub fn new(total: usize, obstruction: Option<Interval>) -> Result<Self> {
        if let Some(block) = obstruction {
            if block.hi() > total {
                return Err(Error::InvalidLot(
                    "obstruction extends past the end of the lot",
                ));
            }
        }
        Ok(Self { total, obstruction })
    }

    /// A lot without obstructions.
    pub fn open(total: usize) -> Self {
        Self {
            total,
            obstruction: None,
        }
    }

    /// `n + k` vertices with the first `k` obstructed; no obstruction when `k == 0`.
    pub fn left_obstructed(n: usize, k: usize) -> Self {
        Self {
            total: n + k,
            obstruction: (k > 0).then(|| Interval::raw(1, k)),
        }
    }

    /// `n + k` vertices with `k` obstructed vertices starting at `start`.
    pub fn with_block(n: usize, k: usize, start: usize) -> Result<Self> {
        if k == 0 {
            return Ok(Self::open(n));
        }
        let block = Interval::new(start, start + k - 1)?;
        Self::new(n + k, Some(block))
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn obstruction(&self) -> Option<Interval> {
        self.obstruction
    }

    /// Length of the obstructed block (0 when absent).
    pub fn obstruction_len(&self) -> usize {
        self.obstruction.map_or(0, |b| b.len())
    }

    /// Vertices available for parking.
    pub fn capacity(&self) -> usize {
        self.total - self.obstruction_len()
    }

    pub fn is_obstructed(&self, v: usize) -> bool {
        self.obstruction.is_some_and(|b| b.contains(v))
    }
}

/// An ordered sequence of car preferences; car `j` (1-based) prefers `self[j - 1]`.
///
/// Entries are at least 1. The upper bound depends on the lot and is checked
/// by [`validate`] and by every operation that takes a vertex count.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrefSeq(Vec<usize>);

impl PrefSeq {
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        if let Some(pos) = prefs.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPreference {
                car: pos + 1,
                value: 0,
            });
        }
        Ok(Self(prefs))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub(crate) fn from_raw(prefs: Vec<usize>) -> Self {
        debug_assert!(prefs.iter().all(|&p| p >= 1));
        Self(prefs)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Preference of car `car` (1-based).
    pub fn pref(&self, car: usize) -> usize {
        self.0[car - 1]
    }

    /// The first `len` cars.
    pub fn prefix(&self, len: usize) -> PrefSeq {
        PrefSeq(self.0[..len].to_vec())
    }

    /// Checks every entry lies in `[1, total]`.
    pub fn check_within(&self, total: usize) -> Result<()> {
        match self.0.iter().position(|&p| p == 0 || p > total) {
            Some(pos) => Err(Error::InvalidPreference {
                car: pos + 1,
                value: self.0[pos],
            }),
            None => Ok(()),
        }
    }
}

impl Deref for PrefSeq {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for PrefSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Returns the pair unchanged when the preferences fit the lot.
pub fn validate(prefs: PrefSeq, lot: Lot) -> Result<(PrefSeq, Lot)> {
    prefs.check_within(lot.total())?;
    Ok((prefs, lot))
}

/// How a car ended up relative to its preferred vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    At,
    Backward,
    Forward,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::At => "at",
            Mode::Backward => "backward",
            Mode::Forward => "forward",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CarRecord {
    pub preferred: usize,
    pub parked: usize,
    pub mode: Mode,
    /// Traverse path; for Naples parking this includes the backward scan.
    pub traverse: Interval,
}

impl CarRecord {
    /// Distance in edges between preferred and parked vertex.
    pub fn traverse_len(&self) -> usize {
        self.parked.abs_diff(self.preferred)
    }
}

/// Per-car parking trace. On failure, `cars` holds the records of the cars
/// that parked before car `failed_at`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParkOutcome {
    pub(crate) cars: Vec<CarRecord>,
    pub(crate) failed_at: Option<usize>,
}

impl ParkOutcome {
    pub fn cars(&self) -> &[CarRecord] {
        &self.cars
    }

    /// 1-based index of the first car that could not park.
    pub fn failed_at(&self) -> Option<usize> {
        self.failed_at
    }

    pub fn is_success(&self) -> bool {
        self.failed_at.is_none()
    }

    /// Record of car `car` (1-based).
    pub fn car(&self, car: usize) -> &CarRecord {
        &self.cars[car - 1]
    }

    pub fn parked(&self) -> Vec<usize> {
        self.cars.iter().map(|c| c.parked).collect()
    }

    /// Parked spots in increasing order.
    pub fn occupied(&self) -> Vec<usize> {
        let mut spots = self.parked();
        spots.sort_unstable();
        spots
    }

    pub(crate) fn require_success(&self) -> Result<()> {
        if self.is_success() {
            Ok(())
        } else {
            Err(Error::NotAParkingFunction)
        }
    }
}

/// One sub-tuple of a k-decomposition: cars `start..start + len` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    pub start: usize,
    pub len: usize,
}

impl Part {
    /// Last car of the part.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// Split of a preference sequence into maximal runs that alternate between
/// at/backward parkers (odd parts) and forward parkers (even parts).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KDecomposition {
    parts: Vec<Part>,
}

impl KDecomposition {
    pub(crate) fn from_parts(parts: Vec<Part>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Number of parts, `d`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_lens(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len).collect()
    }

    /// Number of cars in the first `count` parts.
    pub fn prefix_len(&self, count: usize) -> usize {
        self.parts[..count].iter().map(|p| p.len).sum()
    }

    /// Part `i` (1-based) is made of at/backward parkers iff `i` is odd.
    pub fn is_backward_class(i: usize) -> bool {
        i % 2 == 1
    }

    /// First car of each part after the first: `b_1, ..., b_{d-1}`.
    pub fn boundary_cars(&self) -> Vec<usize> {
        self.parts.iter().skip(1).map(|p| p.start).collect()
    }

    /// Preferences of part `i` (1-based).
    pub fn slice<'a>(&self, prefs: &'a [usize], i: usize) -> &'a [usize] {
        let part = self.parts[i - 1];
        &prefs[part.start - 1..part.end()]
    }
}

/// Tie changes at the part boundaries, one entry in `{-1, 0, 1}` per boundary.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TieChangeTuple(Vec<i8>);

impl TieChangeTuple {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().any(|e| !(-1..=1).contains(e)) {
            return Err(Error::BrokenInvariant(
                "tie change entries must lie in {-1, 0, 1}",
            ));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn last(&self) -> Option<i8> {
        self.0.last().copied()
    }

    pub fn negated(&self) -> TieChangeTuple {
        TieChangeTuple(self.0.iter().map(|e| -e).collect())
    }
}
