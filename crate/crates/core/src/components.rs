//! Parking, Naples and obstruction components of a parking outcome.
//!
//! A component is a maximal union of traverse paths linked by overlap (shared
//! vertices, not mere adjacency). Vertices crossed by no traverse path belong
//! to no component.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::types::{Interval, Lot, ParkOutcome};

/// Merges overlapping intervals into maximal disjoint intervals sorted by `lo`.
pub fn merge_overlapping<I>(intervals: I) -> Vec<Interval>
where
    I: IntoIterator<Item = Interval>,
{
    let mut sorted: Vec<Interval> = intervals.into_iter().collect();
    sorted.sort_unstable();
    let mut merged: Vec<Interval> = Vec::with_capacity(sorted.len());
    for iv in sorted {
        match merged.last_mut() {
            Some(last) if iv.lo() <= last.hi() => *last = last.hull(&iv),
            _ => merged.push(iv),
        }
    }
    merged
}

/// The component containing `v`, if any.
pub fn component_of(components: &[Interval], v: usize) -> Option<Interval> {
    let idx = components.partition_point(|c| c.hi() < v);
    components.get(idx).copied().filter(|c| c.contains(v))
}

/// Parking components of a successful classical or obstructed outcome.
/// Obstructed blocks are not merged in; see [`obstruction_components`].
pub fn parking_components(outcome: &ParkOutcome) -> Result<Vec<Interval>> {
    outcome.require_success()?;
    Ok(merge_overlapping(outcome.cars().iter().map(|c| c.traverse)))
}

/// Naples components of a successful k-Naples outcome; traverse paths there
/// already include the backward scan.
pub fn naples_components(outcome: &ParkOutcome) -> Result<Vec<Interval>> {
    parking_components(outcome)
}

/// Parking components that miss the obstruction, plus one component made of
/// the obstruction block and every parking component meeting it.
pub fn obstruction_components(outcome: &ParkOutcome, lot: &Lot) -> Result<Vec<Interval>> {
    let components = parking_components(outcome)?;
    let block = lot.obstruction().ok_or(Error::InvalidLot(
        "obstruction components need an obstructed block",
    ))?;
    let mut merged = block;
    let mut out: Vec<Interval> = Vec::with_capacity(components.len() + 1);
    for c in components {
        if c.intersects(&block) {
            merged = merged.hull(&c);
        } else {
            out.push(c);
        }
    }
    out.push(merged);
    out.sort_unstable();
    Ok(out)
}
