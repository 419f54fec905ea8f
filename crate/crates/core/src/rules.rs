//! Parking simulators: classical, k-Naples, contained check and obstructed.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::types::{CarRecord, Interval, Lot, Mode, ParkOutcome, PrefSeq};

/// Occupancy of a path lot. Index 0 is unused.
struct Street {
    taken: Vec<bool>,
}

impl Street {
    fn new(lot: &Lot) -> Self {
        let mut taken = vec![false; lot.total() + 1];
        if let Some(block) = lot.obstruction() {
            taken[block.lo()..=block.hi()].fill(true);
        }
        Self { taken }
    }

    fn total(&self) -> usize {
        self.taken.len() - 1
    }

    /// True when some vertex in `[1, v]` is free.
    fn any_free_through(&self, v: usize) -> bool {
        self.taken[1..=v].iter().any(|t| !t)
    }

    /// Parks one car preferring `pref` that may back up at most `backup` vertices.
    fn park(&mut self, pref: usize, backup: usize) -> Option<CarRecord> {
        let record = if !self.taken[pref] {
            CarRecord {
                preferred: pref,
                parked: pref,
                mode: Mode::At,
                traverse: Interval::raw(pref, pref),
            }
        } else if let Some(spot) = (pref.saturating_sub(backup).max(1)..pref)
            .rev()
            .find(|&v| !self.taken[v])
        {
            CarRecord {
                preferred: pref,
                parked: spot,
                mode: Mode::Backward,
                traverse: Interval::raw(spot, pref),
            }
        } else {
            let spot = (pref + 1..=self.total()).find(|&v| !self.taken[v])?;
            CarRecord {
                preferred: pref,
                parked: spot,
                mode: Mode::Forward,
                traverse: Interval::raw(pref.saturating_sub(backup).max(1), spot),
            }
        };
        self.taken[record.parked] = true;
        Some(record)
    }
}

fn run(prefs: &[usize], lot: &Lot, backup: usize) -> ParkOutcome {
    let mut street = Street::new(lot);
    let mut cars = Vec::with_capacity(prefs.len());
    for (i, &pref) in prefs.iter().enumerate() {
        match street.park(pref, backup) {
            Some(record) => cars.push(record),
            None => {
                return ParkOutcome {
                    cars,
                    failed_at: Some(i + 1),
                }
            }
        }
    }
    ParkOutcome {
        cars,
        failed_at: None,
    }
}

/// Classical forward-only parking on `n` vertices.
pub fn park_classical(prefs: &PrefSeq, n: usize) -> Result<ParkOutcome> {
    prefs.check_within(n)?;
    Ok(run(prefs, &Lot::open(n), 0))
}

/// k-Naples parking on `n` vertices: a car whose preferred vertex is taken
/// first checks the `k` vertices before it, nearest first, then drives forward.
///
/// `k` may exceed `n - 1`; the backward scan is clipped to the lot.
pub fn park_naples(prefs: &PrefSeq, n: usize, k: usize) -> Result<ParkOutcome> {
    prefs.check_within(n)?;
    Ok(run(prefs, &Lot::open(n), k))
}

/// True when `prefs` parks under the k-Naples rule and every car with
/// preference `a <= k` finds some vertex of `[1, a]` free on arrival.
pub fn is_contained(prefs: &PrefSeq, n: usize, k: usize) -> Result<bool> {
    prefs.check_within(n)?;
    let mut street = Street::new(&Lot::open(n));
    for &pref in prefs.iter() {
        if pref <= k && !street.any_free_through(pref) {
            return Ok(false);
        }
        if street.park(pref, k).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Forward-only parking where obstructed vertices count as permanently
/// occupied. Obstructed vertices may still be preferred.
pub fn park_obstructed(prefs: &PrefSeq, lot: &Lot) -> Result<ParkOutcome> {
    prefs.check_within(lot.total())?;
    Ok(run(prefs, lot, 0))
}
