//! Ascent/descent/tie statistics and the tie-switching involutions on
//! contained k-Naples parking functions.
//!
//! `psi_small` negates the last tie change that [`xi`] causes at a part
//! boundary; `psi_big` peels parts from the right, applying `psi_small` at
//! each step, and so negates every tie change at once.

use alloc::vec::Vec;

use crate::bijection::{k_decompose, xi};
use crate::components::naples_components;
use crate::error::{Error, Result};
use crate::reflections::phi_restricted;
use crate::rules::{is_contained, park_naples};
use crate::types::{Interval, KDecomposition, PrefSeq, TieChangeTuple};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TieStats {
    pub ascents: usize,
    pub descents: usize,
    pub ties: usize,
}

/// Counts ascents, descents and ties over adjacent car pairs.
pub fn stats(f: &[usize]) -> TieStats {
    let mut out = TieStats::default();
    for w in f.windows(2) {
        match w[0].cmp(&w[1]) {
            core::cmp::Ordering::Less => out.ascents += 1,
            core::cmp::Ordering::Greater => out.descents += 1,
            core::cmp::Ordering::Equal => out.ties += 1,
        }
    }
    out
}

fn is_tie(f: &[usize], car: usize) -> bool {
    f[car - 2] == f[car - 1]
}

fn require_contained(f: &PrefSeq, n: usize, k: usize) -> Result<()> {
    if is_contained(f, n, k)? {
        Ok(())
    } else {
        Err(Error::NotContained)
    }
}

/// First car of each part after the first.
pub fn boundary_cars(f: &PrefSeq, n: usize, k: usize) -> Result<Vec<usize>> {
    Ok(k_decompose(f, n, k)?.boundary_cars())
}

fn tie_changes(f: &PrefSeq, image: &PrefSeq, boundaries: &[usize]) -> Result<TieChangeTuple> {
    let entries = boundaries
        .iter()
        .map(|&b| match (is_tie(f, b), is_tie(image, b)) {
            (false, true) => 1,
            (true, false) => -1,
            _ => 0,
        })
        .collect();
    TieChangeTuple::new(entries)
}

/// Tie changes caused by [`xi`] at each boundary pair `(b_i - 1, b_i)`.
pub fn delta_ties(f: &PrefSeq, n: usize, k: usize) -> Result<TieChangeTuple> {
    require_contained(f, n, k)?;
    let image = xi(f, n, k)?;
    tie_changes(f, &image, &boundary_cars(f, n, k)?)
}

/// Covering interval of the Naples components of the first `prefix_parts`
/// parts that meet the Naples traverse path of car `c` (taken in the full
/// `f`) and do not lie strictly right of `f(c)`.
///
/// When no such component exists the car's own traverse path is returned.
pub fn tcomp(f: &PrefSeq, n: usize, k: usize, c: usize, prefix_parts: usize) -> Result<Interval> {
    require_contained(f, n, k)?;
    let decomposition = k_decompose(f, n, k)?;
    if c == 0 || c > f.len() || prefix_parts > decomposition.len() {
        return Err(Error::InvalidFamilyParams("car or prefix out of range"));
    }
    let path = park_naples(f, n, k)?.car(c).traverse;
    let prefix = f.prefix(decomposition.prefix_len(prefix_parts));
    let components = naples_components(&park_naples(&prefix, n, k)?)?;
    let pref = f.pref(c);
    Ok(components
        .iter()
        .filter(|comp| comp.intersects(&path) && comp.lo() <= pref)
        .copied()
        .reduce(|a, b| a.hull(&b))
        .unwrap_or(path))
}

/// Everything `psi_small` needs about the last boundary of `f`.
struct LastBoundary {
    decomposition: KDecomposition,
    /// `b_{d-1}`.
    car: usize,
    change: i8,
    /// `Phi^{b<, b>}` applied to the first `d - 1` parts.
    reflected_prefix: PrefSeq,
    image: PrefSeq,
}

fn last_boundary(f: &PrefSeq, n: usize, k: usize) -> Result<Option<LastBoundary>> {
    require_contained(f, n, k)?;
    let decomposition = k_decompose(f, n, k)?;
    let d = decomposition.len();
    if d < 2 {
        return Ok(None);
    }
    let image = xi(f, n, k)?;
    let boundaries = decomposition.boundary_cars();
    let changes = tie_changes(f, &image, &boundaries)?;
    let change = changes.last().expect("d >= 2");
    let car = boundaries[d - 2];
    let window = tcomp(f, n, k, car, d - 1)?;
    let prefix = f.prefix(car - 1);
    let reflected_prefix = if change == 0 {
        prefix
    } else {
        phi_restricted(&prefix, n, k, window.lo(), window.hi())?
    };
    Ok(Some(LastBoundary {
        decomposition,
        car,
        change,
        reflected_prefix,
        image,
    }))
}

fn aim_of(boundary: &LastBoundary, n: usize) -> Result<usize> {
    let b = boundary.car;
    let base = boundary.reflected_prefix.pref(b - 1);
    let gap = boundary.image.pref(b - 1) as isize - boundary.image.pref(b) as isize;
    let aim = base as isize + gap;
    if aim < 1 || aim as usize > n {
        return Err(Error::BrokenInvariant("aim falls outside the lot"));
    }
    Ok(aim as usize)
}

/// The unique preference that makes `(b_{d-1} - 1, b_{d-1})` a tie after
/// mapping `psi_small(f)` through [`xi`]. Defined when the last tie change is -1.
pub fn aim(f: &PrefSeq, n: usize, k: usize) -> Result<usize> {
    match last_boundary(f, n, k)? {
        Some(boundary) if boundary.change == -1 => aim_of(&boundary, n),
        _ => Err(Error::WrongTieCase),
    }
}

/// Involution negating the last entry of [`delta_ties`] and fixing the rest.
///
/// Cars of the last part preferring `f(b_{d-1})` are re-aimed at the target
/// vertex. Cars of the last part already preferring the target take
/// `f(b_{d-1})` in exchange; without the exchange two inputs can collide,
/// e.g. `(2,2,3,3,2)` and `(2,2,3,3,3)` for `n = 5, k = 1`.
pub fn psi_small(f: &PrefSeq, n: usize, k: usize) -> Result<PrefSeq> {
    let Some(boundary) = last_boundary(f, n, k)? else {
        return Ok(f.clone());
    };
    if boundary.change == 0 {
        return Ok(f.clone());
    }
    let b = boundary.car;
    let target = if boundary.change == 1 {
        boundary.reflected_prefix.pref(b - 1)
    } else {
        aim_of(&boundary, n)?
    };
    let shared = f.pref(b);
    let last = boundary.decomposition.len();
    let mut out = boundary.reflected_prefix.into_vec();
    out.extend(
        boundary
            .decomposition
            .slice(f, last)
            .iter()
            .map(|&p| match p {
                _ if p == shared => target,
                _ if p == target => shared,
                _ => p,
            }),
    );
    let out = PrefSeq::from_raw(out);
    require_contained(&out, n, k)
        .map_err(|_| Error::BrokenInvariant("psi left the contained functions"))?;
    Ok(out)
}

/// Last part of `psi_small(f)`; all of `f` when it has a single part.
pub fn out_tail(f: &PrefSeq, n: usize, k: usize) -> Result<PrefSeq> {
    require_contained(f, n, k)?;
    let decomposition = k_decompose(f, n, k)?;
    if decomposition.len() <= 1 {
        return Ok(f.clone());
    }
    let image = psi_small(f, n, k)?;
    let keep = decomposition.prefix_len(decomposition.len() - 1);
    Ok(PrefSeq::from_raw(image[keep..].to_vec()))
}

/// Involution on contained k-Naples parking functions that negates every
/// entry of [`delta_ties`].
pub fn psi_big(f: &PrefSeq, n: usize, k: usize) -> Result<PrefSeq> {
    require_contained(f, n, k)?;
    let mut current = f.clone();
    let mut tails: Vec<PrefSeq> = Vec::new();
    while !current.is_empty() {
        let decomposition = k_decompose(&current, n, k)?;
        let image = psi_small(&current, n, k)?;
        if k_decompose(&image, n, k)?.part_lens() != decomposition.part_lens() {
            return Err(Error::BrokenInvariant("psi changed the part lengths"));
        }
        let keep = decomposition.prefix_len(decomposition.len() - 1);
        tails.push(PrefSeq::from_raw(image[keep..].to_vec()));
        current = image.prefix(keep);
    }
    let out: Vec<usize> = tails.iter().rev().flat_map(|t| t.iter().copied()).collect();
    Ok(PrefSeq::from_raw(out))
}
