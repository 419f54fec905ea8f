//! Reflections of parking configurations and the left-shift injection.
//!
//! Each reflection moves whole components onto their mirror image inside a
//! window `[a, b]` of the lot. A car keeps its offset from the left end of its
//! component, so traverse lengths and the order of preferences within a
//! component are unchanged.

use alloc::vec::Vec;

use crate::components::{
    component_of, naples_components, obstruction_components, parking_components,
};
use crate::error::{Error, Result};
use crate::rules::{is_contained, park_classical, park_naples, park_obstructed};
use crate::types::{Interval, Lot, PrefSeq};

/// Where component `c` lands when the window `[a, b]` is mirrored.
fn mirrored(c: Interval, a: usize, b: usize) -> Interval {
    let lo = a + b - c.hi();
    Interval::raw(lo, lo + c.len() - 1)
}

/// Moves every preference lying in a component inside `[a, b]` onto the
/// mirrored component; other preferences are left alone.
fn reflect_window(prefs: &[usize], components: &[Interval], a: usize, b: usize) -> Vec<usize> {
    let window = Interval::raw(a, b);
    prefs
        .iter()
        .map(|&p| match component_of(components, p) {
            Some(c) if window.contains_interval(&c) => mirrored(c, a, b).lo() + (p - c.lo()),
            _ => p,
        })
        .collect()
}

/// The parking reflection on classical parking functions of `n` vertices.
pub fn phi(f: &PrefSeq, n: usize) -> Result<PrefSeq> {
    let outcome = park_classical(f, n)?;
    let components = parking_components(&outcome)?;
    if n == 0 {
        return Ok(f.clone());
    }
    Ok(PrefSeq::from_raw(reflect_window(f, &components, 1, n)))
}

/// Reflects only the Naples components lying in `[a, b]`, where `a` is the
/// left end and `b` the right end of Naples components of `f`.
pub fn phi_restricted(f: &PrefSeq, n: usize, k: usize, a: usize, b: usize) -> Result<PrefSeq> {
    if !is_contained(f, n, k)? {
        return Err(Error::NotContained);
    }
    let outcome = park_naples(f, n, k)?;
    let components = naples_components(&outcome)?;
    if !components.iter().any(|c| c.lo() == a) {
        return Err(Error::EndpointNotComponentBoundary { vertex: a });
    }
    if !components.iter().any(|c| c.hi() == b) || b < a {
        return Err(Error::EndpointNotComponentBoundary { vertex: b });
    }
    let image = PrefSeq::from_raw(reflect_window(f, &components, a, b));
    if !is_contained(&image, n, k)? {
        return Err(Error::BrokenInvariant(
            "restricted reflection left the contained functions",
        ));
    }
    Ok(image)
}

/// The obstructed reflection. Components are obstruction components when the
/// lot has a block and plain parking components otherwise; the block moves
/// with its component and the relocated lot is returned.
pub fn phi_bar(f: &PrefSeq, lot: &Lot) -> Result<(PrefSeq, Lot)> {
    let outcome = park_obstructed(f, lot)?;
    let total = lot.total();
    let Some(block) = lot.obstruction() else {
        let components = parking_components(&outcome)?;
        let image = if total == 0 {
            f.clone()
        } else {
            PrefSeq::from_raw(reflect_window(f, &components, 1, total))
        };
        return Ok((image, *lot));
    };
    let components = obstruction_components(&outcome, lot)?;
    let image = reflect_window(f, &components, 1, total);
    let home = component_of(&components, block.lo()).ok_or(Error::BrokenInvariant(
        "obstruction lies outside every component",
    ))?;
    let start = mirrored(home, 1, total).lo() + (block.lo() - home.lo());
    let moved = Lot::new(total, Some(Interval::raw(start, start + block.len() - 1)))?;
    Ok((PrefSeq::from_raw(image), moved))
}

/// Shifts every preference of a classical parking function on `n` vertices
/// by `k`, onto a lot of `n + k` vertices whose first `k` are obstructed.
pub fn iota(f: &PrefSeq, n: usize, k: usize) -> Result<(PrefSeq, Lot)> {
    park_classical(f, n)?.require_success()?;
    let shifted = f.iter().map(|&p| p + k).collect();
    Ok((PrefSeq::from_raw(shifted), Lot::left_obstructed(n, k)))
}
