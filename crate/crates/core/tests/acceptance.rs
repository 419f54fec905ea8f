//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest
//! harness so the lines always appear in `cargo test` output.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use naples_core::bijection::{xi, xi_bar, xi_bar_stages, xi_inverse};
use naples_core::census::{
    count_classical, naples_count_recursive, verify, Claim, Family, FamilySpec, Guardrail,
};
use naples_core::components::{naples_components, obstruction_components, parking_components};
use naples_core::reflections::{phi, phi_bar, phi_restricted};
use naples_core::rules::{park_classical, park_naples, park_obstructed};
use naples_core::ties::{aim, boundary_cars, delta_ties, out_tail, psi_big, psi_small, tcomp};
use naples_core::{Interval, Lot, Mode, PrefSeq};
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TIME_LIMIT: Duration = Duration::from_secs(60);

fn seq(v: &[usize]) -> PrefSeq {
    PrefSeq::new(v.to_vec()).unwrap()
}

fn members(family: Family, m: usize, n: usize, k: usize, start: Option<usize>) -> Vec<PrefSeq> {
    FamilySpec::new(family, m, n, k, start)
        .unwrap()
        .members()
        .collect()
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn expect_report(claim: Claim) -> Result<(), String> {
    let report = verify(claim, &Guardrail::default()).map_err(|e| format!("{claim:?}: {e}"))?;
    check(report.ok && report.counterexamples.is_empty(), || {
        format!(
            "{claim:?}: lhs={} rhs={} cex={:?}",
            report.lhs, report.rhs, report.counterexamples
        )
    })
}

/// Every `(m, n, k)` with `1 <= m <= n <= max_n` and `k` below `k_end(n)`.
fn grid(max_n: usize, k_end: impl Fn(usize) -> usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            for k in 0..k_end(n) {
                out.push((m, n, k));
            }
        }
    }
    out
}

fn classical_counts() -> Outcome {
    let mut cases = 0;
    for n in 1..=6 {
        for m in 1..=n {
            let found = members(Family::Pf, m, n, 0, None).len() as u64;
            let formula = common::classical_formula(m, n);
            check(found == formula, || {
                format!("|PF({m},{n})| = {found}, formula {formula}")
            })?;
            check(
                count_classical(m, n).unwrap() == BigUint::from(formula),
                || format!("count_classical({m},{n})"),
            )?;
            cases += 1;
        }
    }
    check(members(Family::Pf, 3, 3, 0, None).len() == 16, || {
        "|PF(3,3)| != 16".into()
    })?;
    check(members(Family::Pf, 2, 3, 0, None).len() == 8, || {
        "|PF(2,3)| != 8".into()
    })?;
    Ok(format!(
        "{cases} (m,n) pairs; |PF(3,3)| = 16, |PF(2,3)| = 8"
    ))
}

fn contained_counts() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for k in 0..n {
            let found = members(Family::Contained, n, n, k, None).len() as u64;
            let expected = common::pow(n as u64 + 1, n - 1);
            check(found == expected, || {
                format!("|B({n},{n};{k})| = {found}, expected {expected}")
            })?;
            cases += 1;
        }
    }
    let explicit = members(Family::Contained, 2, 2, 1, None);
    check(
        explicit == vec![seq(&[1, 2]), seq(&[2, 1]), seq(&[2, 2])],
        || format!("B(2,2;1) = {explicit:?}"),
    )?;
    Ok(format!("{cases} (n,k) pairs; B(2,2;1) = {{12, 21, 22}}"))
}

fn bijection() -> Outcome {
    let mut checked = 0;
    for (m, n, k) in grid(5, |n| n) {
        let domain = members(Family::Contained, m, n, k, None);
        let target: BTreeSet<Vec<usize>> = common::all_sequences(m, n)
            .into_iter()
            .filter(|g| common::is_classical_pf(g, n))
            .collect();
        let mut images = BTreeSet::new();
        for f in &domain {
            let g = xi(f, n, k).map_err(|e| format!("xi({f}) n={n} k={k}: {e}"))?;
            check(common::is_classical_pf(&g, n), || {
                format!("xi({f}) = {g} is not a PF")
            })?;
            let back = xi_inverse(&g, n, k).map_err(|e| format!("xi_inverse({g}): {e}"))?;
            check(back == *f, || format!("xi_inverse(xi({f})) = {back}"))?;
            check(images.insert(g.to_vec()), || {
                format!("xi not injective at {f}")
            })?;
        }
        check(images == target, || {
            format!("xi(B({m},{n};{k})) != PF({m},{n})")
        })?;
        expect_report(Claim::Bijection { m, n, k })?;
        checked += domain.len();
    }
    Ok(format!("{checked} contained functions, 0 counterexamples"))
}

/// Tie-switching stages: output tails of repeated `psi`, listed first to last.
fn tie_switch_stages(f: &PrefSeq, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut current = f.clone();
    let mut tails: Vec<Vec<usize>> = Vec::new();
    let mut stages = Vec::new();
    while !current.is_empty() {
        let tail = out_tail(&current, n, k).unwrap().to_vec();
        let image = psi_small(&current, n, k).unwrap();
        current = image.prefix(image.len() - tail.len());
        tails.insert(0, tail);
        stages.push(tails.concat());
    }
    stages
}

fn regressions() -> Outcome {
    let mut count = 0;
    let mut eq = |got: Vec<usize>, want: &[usize], what: &str| -> Result<(), String> {
        count += 1;
        check(got == want, || {
            format!("{what}: got {got:?}, want {want:?}")
        })
    };
    let v = |p: PrefSeq| p.to_vec();
    let iv = |i: Interval| vec![i.lo(), i.hi()];

    // Parking rules.
    let o = park_classical(&seq(&[4, 9, 6, 8, 1, 8, 1, 2]), 10).unwrap();
    eq(o.parked(), &[4, 9, 6, 8, 1, 10, 2, 3], "classical parked")?;
    eq(
        iv(o.car(6).traverse),
        &[8, 10],
        "classical traverse of car 6",
    )?;
    let o = park_naples(&seq(&[2, 3, 6, 9, 9, 6, 8, 9, 9]), 10, 4).unwrap();
    eq(o.failed_at().into_iter().collect(), &[9], "naples failure")?;
    let o = park_naples(&seq(&[4, 4, 7, 1, 1, 9, 10, 10, 1]), 10, 4).unwrap();
    let modes: Vec<Mode> = [5, 8, 9].iter().map(|&c| o.car(c).mode).collect();
    check(
        modes == [Mode::Forward, Mode::Backward, Mode::Forward],
        || format!("modes {modes:?}"),
    )?;
    eq(iv(o.car(9).traverse), &[1, 5], "naples traverse of car 9")?;
    let contained = naples_core::rules::is_contained;
    check(
        contained(&seq(&[2, 4, 8, 9, 2, 8, 9, 9, 9, 3]), 10, 4).unwrap(),
        || "contained".into(),
    )?;
    check(
        !contained(&seq(&[2, 4, 6, 9, 2, 6, 2, 9, 3]), 10, 4).unwrap(),
        || "not contained".into(),
    )?;
    let block = |s| Lot::with_block(10, 4, s).unwrap();
    let parks = |f: &[usize], lot: &Lot| park_obstructed(&seq(f), lot).unwrap().is_success();
    check(parks(&[1, 1, 2, 3, 5, 5, 5, 10, 12, 8], &block(9)), || {
        "OPF member".into()
    })?;
    check(!parks(&[3, 3, 1, 1, 6, 7, 8, 9, 8, 8], &block(9)), || {
        "OPF non-member".into()
    })?;
    check(
        parks(&[7, 8, 8, 2, 3, 12, 11, 11, 14, 4], &block(1)),
        || "LPF member".into(),
    )?;

    // Components.
    let flat = |c: Vec<Interval>| {
        c.into_iter()
            .flat_map(|i| [i.lo(), i.hi()])
            .collect::<Vec<_>>()
    };
    let o = park_classical(&seq(&[4, 9, 6, 8, 1, 8, 1, 2]), 10).unwrap();
    eq(
        flat(parking_components(&o).unwrap()),
        &[1, 3, 4, 4, 6, 6, 8, 10],
        "components",
    )?;
    let o = park_classical(&seq(&[2, 3, 4, 2, 4, 7, 7, 8]), 10).unwrap();
    eq(
        flat(parking_components(&o).unwrap()),
        &[2, 6, 7, 9],
        "components",
    )?;
    let o = park_naples(&seq(&[4, 4, 7, 1, 1, 9, 10, 10, 1]), 10, 4).unwrap();
    eq(
        flat(naples_components(&o).unwrap()),
        &[1, 5, 7, 7, 8, 10],
        "naples components",
    )?;
    let o = park_naples(&seq(&[5, 5, 5, 5, 4, 4, 8, 8]), 10, 3).unwrap();
    eq(
        flat(naples_components(&o).unwrap()),
        &[1, 6, 7, 8],
        "naples components",
    )?;
    let o = park_obstructed(&seq(&[1, 1, 11, 10, 10, 14, 6, 2, 4, 4]), &block(7)).unwrap();
    eq(
        flat(obstruction_components(&o, &block(7)).unwrap()),
        &[1, 3, 4, 5, 6, 6, 7, 13, 14, 14],
        "obstruction components",
    )?;

    // Reflections.
    eq(
        v(phi(&seq(&[4, 9, 6, 8, 1, 8, 1, 2]), 10).unwrap()),
        &[7, 2, 5, 1, 8, 1, 8, 9],
        "phi",
    )?;
    eq(
        v(phi(&seq(&[2, 3, 4, 2, 4, 7, 7, 8]), 10).unwrap()),
        &[5, 6, 7, 5, 7, 2, 2, 3],
        "phi",
    )?;
    eq(
        v(phi_restricted(&seq(&[5, 5, 5, 5, 4, 4, 8, 8]), 10, 3, 1, 8).unwrap()),
        &[7, 7, 7, 7, 6, 6, 2, 2],
        "restricted phi",
    )?;
    let (g, lot) = phi_bar(&seq(&[1, 1, 11, 10, 10, 14, 6, 2, 4, 4]), &block(7)).unwrap();
    eq(v(g), &[12, 12, 6, 5, 5, 1, 9, 13, 10, 10], "phi_bar")?;
    eq(iv(lot.obstruction().unwrap()), &[2, 5], "phi_bar block")?;

    // The bijection and its inverse.
    let parts = |f: &[usize], n, k| {
        naples_core::bijection::k_decompose(&seq(f), n, k)
            .unwrap()
            .part_lens()
    };
    eq(
        parts(&[6, 6, 5, 4, 5, 6, 7, 7], 10, 4),
        &[5, 3],
        "decomposition",
    )?;
    eq(
        parts(&[5, 5, 4, 4, 3, 5, 10, 6, 10], 10, 4),
        &[5, 1, 1, 1, 1],
        "decomposition",
    )?;
    eq(
        v(xi(&seq(&[6, 6, 5, 4, 5, 6, 7, 7]), 10, 4).unwrap()),
        &[2, 2, 3, 4, 3, 2, 3, 3],
        "xi",
    )?;
    eq(
        v(xi(&seq(&[5, 5, 4, 4, 3, 5, 10, 6, 10]), 10, 4).unwrap()),
        &[4, 4, 5, 5, 6, 4, 1, 5, 1],
        "xi",
    )?;
    eq(
        v(xi_inverse(&seq(&[2, 2, 3, 4, 3, 2, 3, 3]), 10, 4).unwrap()),
        &[6, 6, 5, 4, 5, 6, 7, 7],
        "xi_inverse",
    )?;
    eq(
        v(xi_inverse(&seq(&[1, 2, 4, 3, 5, 1, 5]), 10, 3).unwrap()),
        &[5, 6, 8, 7, 9, 8, 6],
        "xi_inverse",
    )?;

    // Obstructed injection, first example: every stage as printed.
    let stages = xi_bar_stages(&seq(&[4, 4, 7, 1, 1, 9, 10, 10, 1]), 10, 4).unwrap();
    let printed: [&[usize]; 4] = [
        &[7, 7, 4, 10],
        &[7, 7, 11, 5, 1],
        &[7, 7, 4, 13, 9, 2, 1, 1],
        &[7, 7, 11, 5, 1, 13, 12, 12, 1],
    ];
    check(stages.len() == printed.len(), || "stage count".into())?;
    for (stage, want) in stages.iter().zip(printed) {
        eq(stage.0.to_vec(), want, "xi_bar stage")?;
    }
    eq(
        iv(stages[2].1.obstruction().unwrap()),
        &[9, 12],
        "xi_bar stage 3 block",
    )?;
    eq(
        iv(stages[3].1.obstruction().unwrap()),
        &[1, 4],
        "xi_bar block",
    )?;

    // Second example. Stages 1, 2, 3 and 5 match as printed. Printed stage 4
    // has car 5 at 7 and the printed image has car 10 at 10; neither follows
    // from the neighbouring printed stages, so those two entries are checked
    // against the values the printed neighbours force.
    let f = seq(&[4, 4, 7, 1, 2, 2, 5, 9, 3, 10]);
    let stages = xi_bar_stages(&f, 10, 4).unwrap();
    let printed: [&[usize]; 6] = [
        &[7, 7, 4, 10, 9],
        &[7, 7, 11, 5, 6, 2, 5],
        &[11, 11, 4, 9, 10, 6, 9, 2],
        &[7, 7, 11, 5, 7, 2, 5, 13, 3],
        &[9, 9, 13, 7, 8, 4, 7, 2, 5, 1],
        &[7, 7, 11, 5, 6, 2, 5, 13, 3, 10],
    ];
    check(stages.len() == printed.len(), || "stage count".into())?;
    for i in [0, 1, 2, 4] {
        eq(stages[i].0.to_vec(), printed[i], "xi_bar stage")?;
    }
    let stage3 = (seq(printed[2]), Lot::with_block(10, 4, 5).unwrap());
    let forced4 = phi_bar(&stage3.0, &stage3.1).unwrap().0.to_vec();
    check(
        forced4[..4] == printed[3][..4] && forced4[5..] == printed[3][5..8],
        || "stage 4 differs outside car 5".into(),
    )?;
    eq(
        stages[3].0.to_vec(),
        &[&forced4[..], &[3]].concat(),
        "xi_bar stage 4",
    )?;
    let stage5 = (seq(printed[4]), Lot::with_block(10, 4, 3).unwrap());
    let forced = phi_bar(&stage5.0, &stage5.1).unwrap();
    check(forced.0.as_slice()[..9] == printed[5][..9], || {
        "final image differs outside car 10".into()
    })?;
    eq(
        v(xi_bar(&f, 10, 4).unwrap().0),
        forced.0.as_slice(),
        "xi_bar image",
    )?;
    eq(iv(forced.1.obstruction().unwrap()), &[1, 4], "xi_bar block")?;
    eq(
        v(xi_bar(&seq(&[6, 6, 5, 4, 5, 6, 7, 7]), 10, 4).unwrap().0),
        &[6, 6, 7, 8, 7, 6, 7, 7],
        "xi_bar on a contained input",
    )?;

    // Ties.
    let ties = |f: &[usize], n, k, want: &[i8]| -> Result<(), String> {
        let got = delta_ties(&seq(f), n, k).unwrap();
        check(got.entries() == want, || {
            format!("delta ties of {f:?}: {got:?}")
        })
    };
    eq(
        boundary_cars(&seq(&[5, 5, 5, 5, 4, 4, 8, 8, 8, 8]), 10, 3).unwrap(),
        &[6, 7, 9],
        "boundaries",
    )?;
    eq(
        boundary_cars(&seq(&[5, 5, 5, 5, 4, 4, 8, 9, 8, 8]), 11, 3).unwrap(),
        &[6, 7, 10],
        "boundaries",
    )?;
    ties(&[6, 6, 6, 6, 5, 5, 4, 4], 10, 3, &[-1, 0, -1])?;
    ties(&[6, 6, 6, 6, 5, 6, 8, 8], 10, 3, &[1, 0, -1])?;
    ties(&[5, 5, 5, 5, 4, 4, 8, 9, 8, 8], 11, 3, &[-1, 0, -1])?;
    eq(
        iv(tcomp(&seq(&[5, 5, 5, 5, 4, 4, 8, 8, 8, 8]), 10, 3, 9, 3).unwrap()),
        &[1, 8],
        "tcomp",
    )?;
    eq(
        iv(tcomp(&seq(&[5, 5, 5, 5, 4, 4, 8, 9, 8, 8]), 11, 3, 10, 3).unwrap()),
        &[1, 8],
        "tcomp",
    )?;
    eq(
        vec![aim(&seq(&[5, 5, 5, 5, 4, 4, 8, 9, 8, 8]), 11, 3).unwrap()],
        &[4],
        "aim",
    )?;
    eq(
        vec![aim(&seq(&[6, 6, 6, 6, 5, 5, 4, 4]), 10, 3).unwrap()],
        &[7],
        "aim",
    )?;
    let f = seq(&[5, 5, 5, 5, 4, 4, 8, 9, 8, 8]);
    eq(
        v(xi(&f, 11, 3).unwrap()),
        &[1, 1, 1, 1, 2, 1, 7, 9, 7, 5],
        "xi",
    )?;
    let g = psi_small(&f, 11, 3).unwrap();
    eq(v(g.clone()), &[7, 7, 7, 7, 6, 6, 2, 9, 2, 4], "psi")?;
    eq(
        v(xi(&g, 11, 3).unwrap()),
        &[3, 3, 3, 3, 4, 3, 1, 9, 1, 1],
        "xi of psi",
    )?;
    eq(v(out_tail(&f, 11, 3).unwrap()), &[4], "output tail")?;
    let f = seq(&[6, 6, 6, 6, 5, 5, 4, 4]);
    eq(v(xi(&f, 10, 3).unwrap()), &[1, 1, 1, 1, 2, 1, 4, 1], "xi")?;
    let stages = tie_switch_stages(&f, 10, 3);
    for (got, want) in stages
        .iter()
        .zip([&[7][..], &[4, 7], &[6, 4, 7], &[6, 6, 6, 6, 5, 6, 4, 7]])
    {
        eq(got.clone(), want, "Psi stage")?;
    }
    let h = psi_big(&f, 10, 3).unwrap();
    eq(v(h.clone()), &[6, 6, 6, 6, 5, 6, 4, 7], "Psi")?;
    eq(
        v(xi(&h, 10, 3).unwrap()),
        &[1, 1, 1, 1, 2, 2, 4, 4],
        "xi of Psi",
    )?;
    let f = seq(&[6, 6, 6, 6, 5, 6, 8, 8]);
    eq(v(xi(&f, 10, 3).unwrap()), &[2, 2, 2, 2, 3, 3, 8, 5], "xi")?;
    let stages = tie_switch_stages(&f, 10, 3);
    for (got, want) in stages
        .iter()
        .zip([&[5][..], &[2, 5], &[6, 2, 5], &[7, 7, 7, 7, 6, 6, 2, 5]])
    {
        eq(got.clone(), want, "Psi stage")?;
    }
    let h = psi_big(&f, 10, 3).unwrap();
    eq(v(h.clone()), &[7, 7, 7, 7, 6, 6, 2, 5], "Psi")?;
    eq(
        v(xi(&h, 10, 3).unwrap()),
        &[3, 3, 3, 3, 4, 3, 2, 2],
        "xi of Psi",
    )?;

    Ok(format!(
        "{count} worked-example values; 2 printed obstructed-injection entries checked against the values their printed neighbouring stages force"
    ))
}

fn tie_totals() -> Outcome {
    let mut cases = 0;
    for (m, n, k) in grid(5, |n| n) {
        let contained: usize = members(Family::Contained, m, n, k, None)
            .iter()
            .map(|f| common::ties(f))
            .sum();
        let classical: usize = common::all_sequences(m, n)
            .iter()
            .filter(|g| common::is_classical_pf(g, n))
            .map(|g| common::ties(g))
            .sum();
        check(contained == classical, || {
            format!("ties m={m} n={n} k={k}: {contained} vs {classical}")
        })?;
        expect_report(Claim::Ties { m, n, k })?;
        cases += 1;
    }
    Ok(format!("{cases} (m,n,k) triples, totals equal"))
}

fn involutions() -> Outcome {
    let (mut phis, mut phi_bars, mut psis) = (0, 0, 0);
    for n in 1..=5 {
        for m in 1..=n {
            for f in members(Family::Pf, m, n, 0, None) {
                let g = phi(&f, n).unwrap();
                check(phi(&g, n).unwrap() == f, || format!("phi(phi({f})) n={n}"))?;
                check(common::phi(&f, n).unwrap() == g.to_vec(), || {
                    format!("phi({f}) oracle")
                })?;
                phis += 1;
            }
        }
    }
    for (m, n, k) in grid(5, |n| n) {
        for start in 1..=n + 1 {
            for f in members(Family::Opf, m, n, k, Some(start)) {
                let lot = Lot::with_block(n, k, start).unwrap();
                let (g, moved) = phi_bar(&f, &lot).unwrap();
                check(phi_bar(&g, &moved).unwrap() == (f.clone(), lot), || {
                    format!("phi_bar twice on {f} block start {start}")
                })?;
                phi_bars += 1;
            }
        }
        for f in members(Family::Contained, m, n, k, None) {
            let delta = delta_ties(&f, n, k).unwrap();
            let g = psi_small(&f, n, k).unwrap();
            check(psi_small(&g, n, k).unwrap() == f, || {
                format!("psi twice on {f} n={n} k={k}")
            })?;
            let mut flipped = delta.entries().to_vec();
            if let Some(last) = flipped.last_mut() {
                *last = -*last;
            }
            check(
                delta_ties(&g, n, k).unwrap().entries() == flipped.as_slice(),
                || format!("psi({f}) tie changes"),
            )?;
            let h = psi_big(&f, n, k).unwrap();
            check(psi_big(&h, n, k).unwrap() == f, || {
                format!("Psi twice on {f} n={n} k={k}")
            })?;
            check(delta_ties(&h, n, k).unwrap() == delta.negated(), || {
                format!("Psi({f}) tie changes not negated")
            })?;
            psis += 1;
        }
    }
    Ok(format!(
        "phi on {phis}, phi_bar on {phi_bars}, psi and Psi on {psis} functions; 0 counterexamples"
    ))
}

fn injection() -> Outcome {
    let mut checked = 0;
    for (m, n, k) in grid(5, |_| 4) {
        let blocked: Vec<usize> = (1..=k).collect();
        let mut images = BTreeSet::new();
        for f in members(Family::Naples, m, n, k, None) {
            let (g, lot) = xi_bar(&f, n, k).map_err(|e| format!("xi_bar({f}) n={n} k={k}: {e}"))?;
            check(lot == Lot::left_obstructed(n, k), || {
                format!("xi_bar({f}) lot {lot:?}")
            })?;
            check(common::simulate(&g, n + k, 0, &blocked).is_some(), || {
                format!("xi_bar({f}) = {g} does not park")
            })?;
            check(images.insert(g.to_vec()), || {
                format!("xi_bar collision at {f} n={n} k={k}")
            })?;
            if common::is_contained(&f, n, k) {
                let shifted: Vec<usize> = xi(&f, n, k).unwrap().iter().map(|p| p + k).collect();
                check(g.to_vec() == shifted, || {
                    format!("xi_bar({f}) != iota(xi({f}))")
                })?;
            }
            checked += 1;
        }
        expect_report(Claim::Injection { m, n, k })?;
    }
    Ok(format!(
        "{checked} k-Naples functions (k <= 3), images distinct and parking"
    ))
}

fn naples_count(n: usize, k: usize) -> usize {
    common::all_sequences(n, n)
        .iter()
        .filter(|f| common::simulate(f, n, k, &[]).is_some())
        .count()
}

fn recursion() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for k in 0..n {
            let brute = naples_count(n, k);
            let recursive = naples_count_recursive(n, k).unwrap();
            check(recursive == BigUint::from(brute), || {
                format!("n={n} k={k}: recursion {recursive}, brute force {brute}")
            })?;
            expect_report(Claim::Recursion { n, k })?;
            cases += 1;
        }
    }
    check(
        naples_count_recursive(2, 1).unwrap() == BigUint::from(4u32),
        || "|PF_2,1| != 4".into(),
    )?;
    check(
        naples_count_recursive(3, 1).unwrap() == BigUint::from(24u32),
        || "|PF_3,1| != 24".into(),
    )?;
    Ok(format!("{cases} (n,k) pairs; |PF_2,1| = 4, |PF_3,1| = 24"))
}

fn lpf_count() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for k in 0..=3 {
            let found = members(Family::Lpf, n, n, k, None).len();
            let blocked: Vec<usize> = (1..=k).collect();
            let brute = common::all_sequences(n, n + k)
                .iter()
                .filter(|f| common::simulate(f, n + k, 0, &blocked).is_some())
                .count();
            let formula = common::lpf_formula(n, k);
            check(found as u64 == formula && brute == found, || {
                format!(
                    "|LPF({n},{};{k})| = {found} (brute {brute}), formula {formula}",
                    n + k
                )
            })?;
            expect_report(Claim::LpfCount { n, k })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,k) pairs"))
}

fn bound() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for k in 0..n {
            let count = naples_count(n, k) as u64;
            let limit = common::lpf_formula(n, k);
            let holds = if k == 0 {
                count == limit
            } else {
                count < limit
            };
            check(holds, || format!("n={n} k={k}: {count} vs {limit}"))?;
            expect_report(Claim::Bound { n, k })?;
            cases += 1;
        }
    }
    let (count, limit) = (naples_count(3, 1), common::lpf_formula(3, 1));
    check((count, limit) == (24, 50), || {
        format!("n=3 k=1: {count} vs {limit}")
    })?;
    Ok(format!("{cases} (n,k) pairs; 24 < 50 at n=3, k=1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "classical counts (n-m+1)(n+1)^(m-1), 1 <= m <= n <= 6",
            classical_counts,
        ),
        (
            "contained counts (n+1)^(n-1) for every k < n, n <= 5",
            contained_counts,
        ),
        (
            "xi is a bijection B(m,n;k) -> PF(m,n), m <= n <= 5",
            bijection,
        ),
        ("worked examples reproduce exactly", regressions),
        (
            "tie totals agree on B(m,n;k) and PF(m,n), m <= n <= 5",
            tie_totals,
        ),
        (
            "phi, phi_bar, psi, Psi are involutions; Psi negates tie changes",
            involutions,
        ),
        (
            "xi_bar injects PF(m,n;k) into LPF(m,n+k;k), k <= 3",
            injection,
        ),
        ("counting recursion matches brute force, n <= 5", recursion),
        ("LPF count (k+1)(k+n+1)^(n-1), n <= 5, k <= 3", lpf_count),
        (
            "bound |PF_n,k| <= (k+1)(k+n+1)^(n-1), strict for k >= 1",
            bound,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = run();
        let elapsed = started.elapsed();
        let result = match result {
            Ok(detail) if elapsed > TIME_LIMIT => Err(format!("{detail}; took {elapsed:.1?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "PASS criterion {:>2}: {name} [{detail}] ({elapsed:.2?})",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2}: {name} [{why}] ({elapsed:.2?})",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
