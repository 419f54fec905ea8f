//! The k-decomposition, the staged bijection from contained k-Naples parking
//! functions onto classical ones, its inverse, and the extension of the
//! bijection to an injection into left-obstructed parking functions.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::reflections::{iota, phi, phi_bar};
use crate::rules::{is_contained, park_classical, park_naples, park_obstructed};
use crate::types::{KDecomposition, Lot, Mode, Part, PrefSeq};

/// Splits a k-Naples parking function into maximal runs of at/backward
/// parkers and forward parkers. The first part is always at/backward because
/// car 1 parks at its preference.
pub fn k_decompose(f: &PrefSeq, n: usize, k: usize) -> Result<KDecomposition> {
    let outcome = park_naples(f, n, k)?;
    outcome.require_success()?;
    let mut parts: Vec<Part> = Vec::new();
    let mut current_forward = false;
    for (i, car) in outcome.cars().iter().enumerate() {
        let forward = car.mode == Mode::Forward;
        match parts.last_mut() {
            Some(part) if forward == current_forward => part.len += 1,
            _ => {
                if parts.is_empty() && forward {
                    return Err(Error::BrokenInvariant("first car parked forward"));
                }
                parts.push(Part {
                    start: i + 1,
                    len: 1,
                });
                current_forward = forward;
            }
        }
    }
    Ok(KDecomposition::from_parts(parts))
}

fn mirror(p: usize, n: usize) -> usize {
    n + 1 - p
}

fn unshift(p: usize, k: usize) -> Result<usize> {
    p.checked_sub(k)
        .filter(|&q| q >= 1)
        .ok_or(Error::BrokenInvariant(
            "forward parker prefers a vertex at most k",
        ))
}

/// Maps a contained k-Naples parking function on `n` vertices to a classical
/// parking function. Odd parts are mirrored (`p -> n + 1 - p`), even parts
/// are shifted left by `k`, and the prefix built so far is reflected before
/// each new part is appended.
pub fn xi(f: &PrefSeq, n: usize, k: usize) -> Result<PrefSeq> {
    if !is_contained(f, n, k)? {
        return Err(Error::NotContained);
    }
    let decomposition = k_decompose(f, n, k)?;
    let mut built = PrefSeq::empty();
    for i in 1..=decomposition.len() {
        if i >= 2 {
            built = phi(&built, n)?;
        }
        let mut next = built.into_vec();
        for &p in decomposition.slice(f, i) {
            next.push(if KDecomposition::is_backward_class(i) {
                mirror(p, n)
            } else {
                unshift(p, k)?
            });
        }
        built = PrefSeq::from_raw(next);
    }
    if !park_classical(&built, n)?.is_success() {
        return Err(Error::BrokenInvariant("image does not park classically"));
    }
    Ok(built)
}

/// Inverse of [`xi`]: repeatedly peels the maximal suffix of cars sharing the
/// class (traverse length at most `k`, or more) of the last car, undoes its
/// map, and reflects what remains.
pub fn xi_inverse(g: &PrefSeq, n: usize, k: usize) -> Result<PrefSeq> {
    park_classical(g, n)?.require_success()?;
    let mut rest = g.clone();
    let mut peeled: Vec<Vec<usize>> = Vec::new();
    while !rest.is_empty() {
        let outcome = park_classical(&rest, n)?;
        let short = |car: usize| outcome.cars()[car].traverse_len() <= k;
        let last_short = short(rest.len() - 1);
        let mut start = rest.len() - 1;
        while start > 0 && short(start - 1) == last_short {
            start -= 1;
        }
        let chunk = rest[start..]
            .iter()
            .map(|&p| if last_short { mirror(p, n) } else { p + k })
            .collect();
        peeled.push(chunk);
        rest = phi(&rest.prefix(start), n)?;
    }
    let f: Vec<usize> = peeled.into_iter().rev().flatten().collect();
    f.iter().position(|&p| p > n).map_or(Ok(()), |_| {
        Err(Error::BrokenInvariant("preimage leaves the lot"))
    })?;
    Ok(PrefSeq::from_raw(f))
}

/// Injects a k-Naples parking function on `n` vertices into the parking
/// functions on `n + k` vertices whose first `k` vertices are obstructed.
///
/// Contained inputs go through `iota(xi(f))`. Otherwise the image is built in
/// stages like [`xi`], except that the second stage adds the obstruction via
/// `iota`, later stages reflect with [`phi_bar`], forward parts are appended
/// verbatim, and an odd number of parts ends with one more reflection.
pub fn xi_bar(f: &PrefSeq, n: usize, k: usize) -> Result<(PrefSeq, Lot)> {
    park_naples(f, n, k)?.require_success()?;
    if is_contained(f, n, k)? {
        let g = xi(f, n, k)?;
        return iota(&g, n, k);
    }
    let decomposition = k_decompose(f, n, k)?;
    let d = decomposition.len();
    let (mut built, mut lot) = partial_stage(f, &decomposition, d, n, k)?;
    if d % 2 == 1 {
        (built, lot) = phi_bar(&built, &lot)?;
    }
    if lot != Lot::left_obstructed(n, k) {
        return Err(Error::BrokenInvariant(
            "obstruction did not end on the left",
        ));
    }
    if !park_obstructed(&built, &lot)?.is_success() {
        return Err(Error::BrokenInvariant(
            "image does not park on the obstructed lot",
        ));
    }
    Ok((built, lot))
}

/// Intermediate stages of [`xi_bar`] for a non-contained input, in order.
/// The last entry is the final image. Contained inputs yield a single entry.
pub fn xi_bar_stages(f: &PrefSeq, n: usize, k: usize) -> Result<Vec<(PrefSeq, Lot)>> {
    park_naples(f, n, k)?.require_success()?;
    if is_contained(f, n, k)? {
        return Ok(alloc::vec![xi_bar(f, n, k)?]);
    }
    let decomposition = k_decompose(f, n, k)?;
    let mut stages = Vec::new();
    for i in 1..=decomposition.len() {
        let len = decomposition.prefix_len(i);
        let prefix = f.prefix(len);
        let stage = partial_stage(&prefix, &decomposition, i, n, k)?;
        stages.push(stage);
    }
    if decomposition.len() % 2 == 1 {
        let (last, lot) = stages
            .last()
            .cloned()
            .expect("d >= 2 for non-contained input");
        stages.push(phi_bar(&last, &lot)?);
    }
    Ok(stages)
}

fn partial_stage(
    f: &PrefSeq,
    decomposition: &KDecomposition,
    upto: usize,
    n: usize,
    k: usize,
) -> Result<(PrefSeq, Lot)> {
    let mut built = PrefSeq::empty();
    let mut lot = Lot::open(n);
    for i in 1..=upto {
        if i == 2 {
            (built, lot) = iota(&phi(&built, n)?, n, k)?;
        } else if i > 2 {
            (built, lot) = phi_bar(&built, &lot)?;
        }
        let mut next = built.into_vec();
        for &p in decomposition.slice(f, i) {
            next.push(if KDecomposition::is_backward_class(i) {
                mirror(p, n)
            } else {
                p
            });
        }
        built = PrefSeq::from_raw(next);
    }
    Ok((built, lot))
}
