//! Independent reference implementations used as oracles. They share no code
//! with the library beyond the input types.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// One simulated car: (spot, mode, traverse lo, traverse hi). Mode is one of
/// "at", "backward", "forward".
pub type Trace = Vec<(usize, &'static str, usize, usize)>;

/// Naive k-Naples rule over vertices `1..=total` with `blocked` vertices taken
/// up front. `k = 0` is the classical rule. `None` when some car fails.
pub fn simulate(prefs: &[usize], total: usize, k: usize, blocked: &[usize]) -> Option<Trace> {
    let mut taken: BTreeSet<usize> = blocked.iter().copied().collect();
    let mut trace = Vec::new();
    for &a in prefs {
        if !taken.contains(&a) {
            taken.insert(a);
            trace.push((a, "at", a, a));
            continue;
        }
        let mut spot = None;
        for back in 1..=k {
            if a > back && !taken.contains(&(a - back)) {
                spot = Some((a - back, "backward", a - back, a));
                break;
            }
        }
        if spot.is_none() {
            let free = (a + 1..=total).find(|v| !taken.contains(v))?;
            let lo = a.saturating_sub(k).max(1);
            spot = Some((free, "forward", lo, free));
        }
        let s = spot.unwrap();
        taken.insert(s.0);
        trace.push(s);
    }
    Some(trace)
}

/// Sorted-sequence criterion for classical parking functions.
pub fn is_classical_pf(prefs: &[usize], n: usize) -> bool {
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    // The i-th smallest preference (1-based) is at most n - m + i.
    sorted.len() <= n
        && sorted
            .iter()
            .enumerate()
            .all(|(i, &p)| p >= 1 && p + prefs.len() <= n + i + 1)
}

/// Every car preferring a vertex `<= k` finds a free vertex in `[1, a]`.
pub fn is_contained(prefs: &[usize], n: usize, k: usize) -> bool {
    let Some(trace) = simulate(prefs, n, k, &[]) else {
        return false;
    };
    let mut taken = BTreeSet::new();
    for (&a, &(spot, ..)) in prefs.iter().zip(&trace) {
        if a <= k && (1..=a).all(|v| taken.contains(&v)) {
            return false;
        }
        taken.insert(spot);
    }
    true
}

/// Components from covered edges: vertices `v` and `v + 1` are joined when
/// some traverse path contains both. Returns `(lo, hi)` runs touching at
/// least one traverse path.
pub fn components(
    paths: &[(usize, usize)],
    extra: Option<(usize, usize)>,
    total: usize,
) -> Vec<(usize, usize)> {
    let mut joined = vec![false; total + 2];
    let mut touched = vec![false; total + 2];
    let mut mark = |lo: usize, hi: usize| {
        touched[lo..=hi].fill(true);
        joined[lo..hi].fill(true);
    };
    for &(lo, hi) in paths {
        mark(lo, hi);
    }
    let mut runs = Vec::new();
    let mut v = 1;
    while v <= total {
        if !touched[v] {
            v += 1;
            continue;
        }
        let lo = v;
        while joined[v] {
            v += 1;
        }
        runs.push((lo, v));
        v += 1;
    }
    if let Some((blo, bhi)) = extra {
        // The block absorbs every run it meets.
        let (meet, mut rest): (Vec<_>, Vec<_>) = runs
            .into_iter()
            .partition(|&(lo, hi)| lo <= bhi && blo <= hi);
        let lo = meet.iter().map(|r| r.0).chain([blo]).min().unwrap();
        let hi = meet.iter().map(|r| r.1).chain([bhi]).max().unwrap();
        rest.push((lo, hi));
        rest.sort_unstable();
        runs = rest;
    }
    runs
}

/// Mirror every preference's component inside `[1, total]`.
pub fn reflect(prefs: &[usize], comps: &[(usize, usize)], total: usize) -> Vec<usize> {
    prefs
        .iter()
        .map(|&p| {
            let &(lo, hi) = comps
                .iter()
                .find(|&&(lo, hi)| lo <= p && p <= hi)
                .unwrap_or(&(p, p));
            total + 1 - hi + (p - lo)
        })
        .collect()
}

/// Classical reflection oracle.
pub fn phi(prefs: &[usize], n: usize) -> Option<Vec<usize>> {
    let trace = simulate(prefs, n, 0, &[])?;
    let paths: Vec<_> = trace.iter().map(|t| (t.2, t.3)).collect();
    Some(reflect(prefs, &components(&paths, None, n), n))
}

pub fn ties(f: &[usize]) -> usize {
    f.windows(2).filter(|w| w[0] == w[1]).count()
}

/// All sequences in `[1, total]^m`, lexicographic.
pub fn all_sequences(m: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=total).map(move |p| {
                    let mut t = s.clone();
                    t.push(p);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn pow(b: u64, e: usize) -> u64 {
    (0..e).fold(1, |acc, _| acc * b)
}

/// `(n - m + 1)(n + 1)^(m - 1)`.
pub fn classical_formula(m: usize, n: usize) -> u64 {
    if m == 0 {
        1
    } else {
        (n - m + 1) as u64 * pow(n as u64 + 1, m - 1)
    }
}

/// `(k + 1)(k + n + 1)^(n - 1)`.
pub fn lpf_formula(n: usize, k: usize) -> u64 {
    if n == 0 {
        1
    } else {
        (k + 1) as u64 * pow((k + n + 1) as u64, n - 1)
    }
}
