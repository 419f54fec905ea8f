//! Exhaustive enumeration of every parking family, closed-form counters, the
//! Naples counting recursion, and verifiers for the counting identities.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijection::{xi, xi_bar, xi_inverse};
use crate::error::{Error, Result};
use crate::reflections::iota;
use crate::rules::{is_contained, park_classical, park_naples, park_obstructed};
use crate::ties::stats;
use crate::types::{Lot, PrefSeq};

/// Parking families that can be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Classical parking functions `PF(m, n)`.
    Pf,
    /// k-Naples parking functions `PF(m, n; k)`.
    Naples,
    /// Contained k-Naples parking functions `B(m, n; k)`.
    Contained,
    /// Parking functions on `n + k` vertices with a block of `k` obstructed
    /// vertices starting at a given vertex.
    Opf,
    /// Parking functions on `n + k` vertices whose first `k` are obstructed.
    Lpf,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Pf => "pf",
            Family::Naples => "naples",
            Family::Contained => "contained",
            Family::Opf => "opf",
            Family::Lpf => "lpf",
        }
    }
}

/// A family together with its size parameters. `n` is the number of free
/// vertices; obstructed families live on `n + k` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    m: usize,
    n: usize,
    k: usize,
    lot: Lot,
}

impl FamilySpec {
    pub fn new(
        family: Family,
        m: usize,
        n: usize,
        k: usize,
        obstruction_start: Option<usize>,
    ) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidFamilyParams("more cars than free vertices"));
        }
        if obstruction_start.is_some() && family != Family::Opf {
            return Err(Error::InvalidFamilyParams(
                "an obstruction start only applies to OPF",
            ));
        }
        let lot = match family {
            Family::Pf if k != 0 => {
                return Err(Error::InvalidFamilyParams(
                    "classical parking functions take k = 0",
                ))
            }
            Family::Pf | Family::Naples | Family::Contained => Lot::open(n),
            Family::Opf => {
                let start = obstruction_start
                    .ok_or(Error::InvalidFamilyParams("OPF needs an obstruction start"))?;
                Lot::with_block(n, k, start)
                    .map_err(|_| Error::InvalidFamilyParams("obstruction does not fit the lot"))?
            }
            Family::Lpf => Lot::left_obstructed(n, k),
        };
        Ok(Self {
            family,
            m,
            n,
            k,
            lot,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lot(&self) -> Lot {
        self.lot
    }

    /// Size of the preference alphabet, `N`.
    pub fn total(&self) -> usize {
        self.lot.total()
    }

    /// `N^m`, saturating.
    pub fn candidate_count(&self) -> u128 {
        let mut count: u128 = 1;
        for _ in 0..self.m {
            count = count.saturating_mul(self.total() as u128);
        }
        count
    }

    /// Membership test through the simulators.
    pub fn contains(&self, prefs: &PrefSeq) -> bool {
        if prefs.len() != self.m || prefs.check_within(self.total()).is_err() {
            return false;
        }
        let parked = match self.family {
            Family::Pf => park_classical(prefs, self.n),
            Family::Naples => park_naples(prefs, self.n, self.k),
            Family::Contained => return is_contained(prefs, self.n, self.k).unwrap_or(false),
            Family::Opf | Family::Lpf => park_obstructed(prefs, &self.lot),
        };
        parked.is_ok_and(|o| o.is_success())
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> Members {
        Members::new(*self, None)
    }

    /// Members whose first car prefers `first`, in lexicographic order.
    /// Concatenating these for `first = 1..=N` gives [`FamilySpec::members`].
    pub fn members_with_first(&self, first: usize) -> Members {
        Members::new(*self, Some(first))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(m={}, n={}, k={})",
            self.family.as_str(),
            self.m,
            self.n,
            self.k
        )
    }
}

/// Lexicographic walk over `[N]^m`, keeping members of the family.
#[derive(Debug, Clone)]
pub struct Members {
    spec: FamilySpec,
    next: Option<Vec<usize>>,
    /// Positions below this index never change.
    pinned: usize,
}

impl Members {
    fn new(spec: FamilySpec, first: Option<usize>) -> Self {
        let total = spec.total();
        let start = match first {
            _ if spec.m > 0 && total == 0 => None,
            Some(_) if spec.m == 0 => None,
            Some(p) if p == 0 || p > total => None,
            Some(p) => {
                let mut v = vec![1; spec.m];
                v[0] = p;
                Some(v)
            }
            None => Some(vec![1; spec.m]),
        };
        Self {
            spec,
            next: start,
            pinned: usize::from(first.is_some()),
        }
    }

    fn advance(&mut self) {
        let total = self.spec.total();
        let Some(current) = self.next.as_mut() else {
            return;
        };
        for i in (self.pinned..current.len()).rev() {
            if current[i] < total {
                current[i] += 1;
                return;
            }
            current[i] = 1;
        }
        self.next = None;
    }
}

impl Iterator for Members {
    type Item = PrefSeq;

    fn next(&mut self) -> Option<PrefSeq> {
        loop {
            let candidate = PrefSeq::from_raw(self.next.clone()?);
            self.advance();
            if self.spec.contains(&candidate) {
                return Some(candidate);
            }
        }
    }
}

/// Source of complete member lists. The std companion crate provides a
/// threaded implementation; results must match [`Sequential`] exactly.
pub trait Enumerator {
    fn members(&self, spec: &FamilySpec) -> Vec<PrefSeq>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Enumerator for Sequential {
    fn members(&self, spec: &FamilySpec) -> Vec<PrefSeq> {
        spec.members().collect()
    }
}

/// Stream of the members of `family`, validated.
pub fn enumerate(
    family: Family,
    m: usize,
    n: usize,
    k: usize,
    obstruction_start: Option<usize>,
) -> Result<Members> {
    Ok(FamilySpec::new(family, m, n, k, obstruction_start)?.members())
}

fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// `(n - m + 1)(n + 1)^(m - 1)`; 1 when `m = 0`.
pub fn count_classical(m: usize, n: usize) -> Result<BigUint> {
    if m > n {
        return Err(Error::InvalidFamilyParams("more cars than vertices"));
    }
    if m == 0 {
        return Ok(BigUint::one());
    }
    Ok(BigUint::from(n - m + 1) * pow(n + 1, m - 1))
}

/// `(n + 1)^(n - 1)`; 1 when `n = 0`.
pub fn count_contained(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    pow(n + 1, n - 1)
}

/// `(k + 1)(k + n + 1)^(n - 1)`; 1 when `n = 0`.
pub fn count_lpf(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(k + 1) * pow(k + n + 1, n - 1)
}

fn binomial_row(t: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..t {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

/// `|PF(n, n; k)|` through the recursion over the position of the last
/// car, with `|B(j, j; k)|` taken from enumeration and `|PF(0, 0; k)| =
/// |B(0, 0; k)| = 1`.
pub fn naples_count_recursive(n: usize, k: usize) -> Result<BigUint> {
    naples_count_recursive_with(n, k, &Sequential)
}

pub fn naples_count_recursive_with(
    n: usize,
    k: usize,
    enumerator: &dyn Enumerator,
) -> Result<BigUint> {
    let mut contained: Vec<BigUint> = Vec::with_capacity(n);
    for j in 0..n {
        let spec = FamilySpec::new(Family::Contained, j, j, k, None)?;
        contained.push(BigUint::from(enumerator.members(&spec).len()));
    }
    let mut naples: Vec<BigUint> = vec![BigUint::one()];
    for t in 0..n {
        let row = binomial_row(t);
        let mut sum = BigUint::zero();
        for i in 0..=t {
            let weight = (i + 1 + k).min(t + 1);
            sum += &row[i] * BigUint::from(weight) * &naples[i] * &contained[t - i];
        }
        naples.push(sum);
    }
    Ok(naples.pop().expect("non-empty"))
}

/// Refuses exhaustive work above `cap` candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guardrail {
    pub cap: u128,
}

impl Guardrail {
    pub const DEFAULT_CAP: u128 = 100_000_000;

    pub fn unlimited() -> Self {
        Self { cap: u128::MAX }
    }

    pub fn check(&self, spec: &FamilySpec) -> Result<()> {
        let candidates = spec.candidate_count();
        if candidates > self.cap {
            return Err(Error::TooLarge {
                candidates,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

impl Default for Guardrail {
    fn default() -> Self {
        Self {
            cap: Self::DEFAULT_CAP,
        }
    }
}

/// Claims that [`verify`] certifies by exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `xi` is a bijection from `B(m, n; k)` onto `PF(m, n)`.
    Bijection { m: usize, n: usize, k: usize },
    /// `B(m, n; k)` and `PF(m, n)` carry the same total number of ties.
    Ties { m: usize, n: usize, k: usize },
    /// `xi_bar` injects `PF(m, n; k)` into `LPF(m, n + k; k)`.
    Injection { m: usize, n: usize, k: usize },
    /// The counting recursion agrees with brute force for `|PF(n, n; k)|`.
    Recursion { n: usize, k: usize },
    /// `|LPF(n, n + k; k)| = (k + 1)(k + n + 1)^(n - 1)`.
    LpfCount { n: usize, k: usize },
    /// `|PF(n, n; k)| <= (k + 1)(k + n + 1)^(n - 1)`, strictly when `k >= 1`.
    Bound { n: usize, k: usize },
}

impl Claim {
    pub fn id(&self) -> &'static str {
        match self {
            Claim::Bijection { .. } => "bijection",
            Claim::Ties { .. } => "ties",
            Claim::Injection { .. } => "injection",
            Claim::Recursion { .. } => "recursion",
            Claim::LpfCount { .. } => "lpf-count",
            Claim::Bound { .. } => "bound",
        }
    }

    pub fn params(&self) -> Params {
        match *self {
            Claim::Bijection { m, n, k }
            | Claim::Ties { m, n, k }
            | Claim::Injection { m, n, k } => Params { m: Some(m), n, k },
            Claim::Recursion { n, k } | Claim::LpfCount { n, k } | Claim::Bound { n, k } => {
                Params { m: None, n, k }
            }
        }
    }

    /// Relation between `lhs` and `rhs` that the claim asserts.
    pub fn relation(&self) -> Relation {
        match *self {
            Claim::Bound { k, .. } if k >= 1 => Relation::Less,
            _ => Relation::Equal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub m: Option<usize>,
    pub n: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Less,
}

impl Relation {
    pub fn holds(&self, lhs: &BigUint, rhs: &BigUint) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::Less => lhs < rhs,
        }
    }
}

/// Outcome of one verification. `ok` holds exactly when `relation` holds
/// between `lhs` and `rhs` and no counterexample was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub claim: &'static str,
    pub params: Params,
    pub relation: Relation,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub ok: bool,
    pub counterexamples: Vec<PrefSeq>,
}

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Default)]
struct Witnesses {
    kept: Vec<PrefSeq>,
    total: usize,
}

impl Witnesses {
    fn push(&mut self, f: &PrefSeq) {
        self.total += 1;
        if self.kept.len() < MAX_COUNTEREXAMPLES {
            self.kept.push(f.clone());
        }
    }
}

fn claim_range(m: Option<usize>, n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n - 1 {
        return Err(Error::InvalidFamilyParams(
            "this claim needs n >= 1 and 0 <= k <= n - 1",
        ));
    }
    if m.is_some_and(|m| m > n) {
        return Err(Error::InvalidFamilyParams("more cars than vertices"));
    }
    Ok(())
}

pub fn verify(claim: Claim, guard: &Guardrail) -> Result<VerifyReport> {
    verify_with(claim, guard, &Sequential)
}

/// Certifies `claim` exhaustively, pulling member lists from `enumerator`.
pub fn verify_with(
    claim: Claim,
    guard: &Guardrail,
    enumerator: &dyn Enumerator,
) -> Result<VerifyReport> {
    let mut witnesses = Witnesses::default();
    let (lhs, rhs) = match claim {
        Claim::Bijection { m, n, k } => {
            claim_range(Some(m), n, k)?;
            let contained = FamilySpec::new(Family::Contained, m, n, k, None)?;
            let classical = FamilySpec::new(Family::Pf, m, n, 0, None)?;
            guard.check(&contained)?;
            let domain = enumerator.members(&contained);
            let mut images = BTreeSet::new();
            for f in &domain {
                let round_trip = xi(f, n, k).and_then(|g| {
                    let back = xi_inverse(&g, n, k)?;
                    Ok((classical.contains(&g) && back == *f, g))
                });
                match round_trip {
                    Ok((true, g)) if images.insert(g.clone()) => {}
                    _ => witnesses.push(f),
                }
            }
            for g in enumerator.members(&classical) {
                let back = xi_inverse(&g, n, k).and_then(|f| Ok(xi(&f, n, k)? == g));
                if back != Ok(true) {
                    witnesses.push(&g);
                }
            }
            (BigUint::from(domain.len()), count_classical(m, n)?)
        }
        Claim::Ties { m, n, k } => {
            claim_range(Some(m), n, k)?;
            let contained = FamilySpec::new(Family::Contained, m, n, k, None)?;
            let classical = FamilySpec::new(Family::Pf, m, n, 0, None)?;
            guard.check(&contained)?;
            let tie_total = |spec: &FamilySpec| -> BigUint {
                enumerator
                    .members(spec)
                    .iter()
                    .map(|f| BigUint::from(stats(f).ties))
                    .sum()
            };
            (tie_total(&contained), tie_total(&classical))
        }
        Claim::Injection { m, n, k } => {
            // Checked for every k, not only k < n.
            if m > n {
                return Err(Error::InvalidFamilyParams("more cars than vertices"));
            }
            let naples = FamilySpec::new(Family::Naples, m, n, k, None)?;
            let target = FamilySpec::new(Family::Lpf, m, n, k, None)?;
            guard.check(&naples)?;
            let domain = enumerator.members(&naples);
            let mut images = BTreeSet::new();
            for f in &domain {
                let good = xi_bar(f, n, k).and_then(|(g, lot)| {
                    let mut good = lot == target.lot() && target.contains(&g);
                    if k >= 1 && g.first().is_some_and(|&p| p <= k) {
                        good = false;
                    }
                    if is_contained(f, n, k)? {
                        good &= iota(&xi(f, n, k)?, n, k)?.0 == g;
                    }
                    Ok(good && images.insert(g))
                });
                if good != Ok(true) {
                    witnesses.push(f);
                }
            }
            (BigUint::from(images.len()), BigUint::from(domain.len()))
        }
        Claim::Recursion { n, k } => {
            claim_range(None, n, k)?;
            let naples = FamilySpec::new(Family::Naples, n, n, k, None)?;
            guard.check(&naples)?;
            let recursive = naples_count_recursive_with(n, k, enumerator)?;
            (recursive, BigUint::from(enumerator.members(&naples).len()))
        }
        Claim::LpfCount { n, k } => {
            let lpf = FamilySpec::new(Family::Lpf, n, n, k, None)?;
            guard.check(&lpf)?;
            (
                BigUint::from(enumerator.members(&lpf).len()),
                count_lpf(n, k),
            )
        }
        Claim::Bound { n, k } => {
            claim_range(None, n, k)?;
            let naples = FamilySpec::new(Family::Naples, n, n, k, None)?;
            guard.check(&naples)?;
            (
                BigUint::from(enumerator.members(&naples).len()),
                count_lpf(n, k),
            )
        }
    };
    let relation = claim.relation();
    let ok = relation.holds(&lhs, &rhs) && witnesses.total == 0;
    Ok(VerifyReport {
        claim: claim.id(),
        params: claim.params(),
        relation,
        lhs,
        rhs,
        ok,
        counterexamples: witnesses.kept,
    })
}
