//! JSON, CSV and plain-text renderings. JSON integers of any size are written
//! exactly.

use std::fmt::Display;
use std::io::{self, Write};

use naples_core::census::VerifyReport;
use naples_core::ties::TieStats;
use naples_core::{Interval, KDecomposition, Lot, ParkOutcome, PrefSeq};
use serde_json::{json, Value};

use crate::args::Format;

fn big(x: &impl Display) -> Value {
    serde_json::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

fn joined(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn interval_json(i: Interval) -> Value {
    json!([i.lo(), i.hi()])
}

fn lot_json(lot: &Lot) -> Value {
    json!({
        "total": lot.total(),
        "obstruction": lot.obstruction().map(interval_json),
    })
}

fn lot_plain(lot: &Lot) -> String {
    match lot.obstruction() {
        Some(b) => format!("total={} obstruction={}-{}", lot.total(), b.lo(), b.hi()),
        None => format!("total={} obstruction=none", lot.total()),
    }
}

fn csv_rows<I, R>(out: &mut dyn Write, rows: I) -> io::Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(out);
    for row in rows {
        writer.write_record(row)?;
    }
    writer.flush()
}

fn json_line(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    writeln!(out, "{value}")
}

pub fn outcome(
    out: &mut dyn Write,
    format: Format,
    prefs: &PrefSeq,
    o: &ParkOutcome,
) -> io::Result<()> {
    match format {
        Format::Json => {
            let cars: Vec<Value> = o
                .cars()
                .iter()
                .map(|c| {
                    json!({
                        "pref": c.preferred,
                        "spot": c.parked,
                        "mode": c.mode.as_str(),
                        "path": interval_json(c.traverse),
                    })
                })
                .collect();
            json_line(
                out,
                &json!({ "parked": o.parked(), "failed_at": o.failed_at(), "cars": cars }),
            )
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "car".to_string(),
                "pref".into(),
                "spot".into(),
                "mode".into(),
                "path_lo".into(),
                "path_hi".into(),
            ]];
            for (i, c) in o.cars().iter().enumerate() {
                rows.push(vec![
                    (i + 1).to_string(),
                    c.preferred.to_string(),
                    c.parked.to_string(),
                    c.mode.as_str().into(),
                    c.traverse.lo().to_string(),
                    c.traverse.hi().to_string(),
                ]);
            }
            if let Some(car) = o.failed_at() {
                let pref = prefs.pref(car).to_string();
                rows.push(vec![car.to_string(), pref, String::new(), "failed".into()]);
            }
            csv_rows(out, rows)
        }
        Format::Plain => {
            writeln!(out, "parked={}", joined(&o.parked()))?;
            match o.failed_at() {
                Some(car) => writeln!(out, "failed_at={car}")?,
                None => writeln!(out, "failed_at=none")?,
            }
            for (i, c) in o.cars().iter().enumerate() {
                writeln!(
                    out,
                    "car={} pref={} spot={} mode={} path={}-{}",
                    i + 1,
                    c.preferred,
                    c.parked,
                    c.mode.as_str(),
                    c.traverse.lo(),
                    c.traverse.hi()
                )?;
            }
            Ok(())
        }
    }
}

pub fn sequence(out: &mut dyn Write, format: Format, prefs: &PrefSeq) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, &json!(prefs.as_slice())),
        Format::Csv => csv_rows(out, [prefs.iter().map(usize::to_string)]),
        Format::Plain => writeln!(out, "{}", joined(prefs)),
    }
}

/// An image on a possibly obstructed lot.
pub fn placed_sequence(
    out: &mut dyn Write,
    format: Format,
    prefs: &PrefSeq,
    lot: &Lot,
) -> io::Result<()> {
    match format {
        Format::Json => json_line(
            out,
            &json!({ "prefs": prefs.as_slice(), "lot": lot_json(lot) }),
        ),
        Format::Csv => {
            let block = lot
                .obstruction()
                .map(|b| vec![b.lo().to_string(), b.hi().to_string()])
                .unwrap_or_default();
            let lot_row: Vec<String> = [lot.total().to_string()].into_iter().chain(block).collect();
            csv_rows(
                out,
                [
                    prefs.iter().map(usize::to_string).collect::<Vec<_>>(),
                    lot_row,
                ],
            )
        }
        Format::Plain => {
            writeln!(out, "{}", joined(prefs))?;
            writeln!(out, "{}", lot_plain(lot))
        }
    }
}

pub fn decomposition(
    out: &mut dyn Write,
    format: Format,
    prefs: &PrefSeq,
    d: &KDecomposition,
) -> io::Result<()> {
    let parts: Vec<&[usize]> = (1..=d.len()).map(|i| d.slice(prefs, i)).collect();
    match format {
        Format::Json => json_line(
            out,
            &json!({
                "parts": parts,
                "lengths": d.part_lens(),
                "boundary_cars": d.boundary_cars(),
            }),
        ),
        Format::Csv => csv_rows(out, parts.iter().map(|p| p.iter().map(usize::to_string))),
        Format::Plain => {
            let text: Vec<String> = parts.iter().map(|p| joined(p)).collect();
            writeln!(out, "{}", text.join(" | "))?;
            writeln!(out, "boundary_cars={}", joined(&d.boundary_cars()))
        }
    }
}

pub fn stats(out: &mut dyn Write, format: Format, s: &TieStats) -> io::Result<()> {
    match format {
        Format::Json => json_line(
            out,
            &json!({ "ascents": s.ascents, "descents": s.descents, "ties": s.ties }),
        ),
        Format::Csv => csv_rows(
            out,
            [
                vec!["ascents".to_string(), "descents".into(), "ties".into()],
                vec![
                    s.ascents.to_string(),
                    s.descents.to_string(),
                    s.ties.to_string(),
                ],
            ],
        ),
        Format::Plain => writeln!(
            out,
            "ascents={} descents={} ties={}",
            s.ascents, s.descents, s.ties
        ),
    }
}

/// Writes members as they arrive: a JSON array with one member per line, or
/// one CSV/plain row per member.
pub fn members<I>(out: &mut dyn Write, format: Format, members: I) -> io::Result<()>
where
    I: IntoIterator<Item = PrefSeq>,
{
    match format {
        Format::Json => {
            write!(out, "[")?;
            for (i, f) in members.into_iter().enumerate() {
                let sep = if i == 0 { "\n" } else { ",\n" };
                write!(out, "{sep}{}", json!(f.as_slice()))?;
            }
            writeln!(out, "\n]")
        }
        Format::Csv => csv_rows(
            out,
            members
                .into_iter()
                .map(|f| f.iter().map(usize::to_string).collect::<Vec<_>>()),
        ),
        Format::Plain => {
            for f in members {
                writeln!(out, "{}", joined(&f))?;
            }
            Ok(())
        }
    }
}

pub fn integer(out: &mut dyn Write, value: &impl Display) -> io::Result<()> {
    writeln!(out, "{value}")
}

pub fn report(out: &mut dyn Write, format: Format, r: &VerifyReport) -> io::Result<()> {
    let m = r.params.m;
    match format {
        Format::Json => {
            let mut params = serde_json::Map::new();
            if let Some(m) = m {
                params.insert("m".into(), json!(m));
            }
            params.insert("n".into(), json!(r.params.n));
            params.insert("k".into(), json!(r.params.k));
            let counterexamples: Vec<&[usize]> =
                r.counterexamples.iter().map(|c| c.as_slice()).collect();
            json_line(
                out,
                &json!({
                    "claim": r.claim,
                    "params": params,
                    "lhs": big(&r.lhs),
                    "rhs": big(&r.rhs),
                    "ok": r.ok,
                    "counterexamples": counterexamples,
                }),
            )
        }
        Format::Csv => {
            let cex: Vec<String> = r
                .counterexamples
                .iter()
                .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            csv_rows(
                out,
                [
                    [
                        "claim",
                        "m",
                        "n",
                        "k",
                        "lhs",
                        "rhs",
                        "ok",
                        "counterexamples",
                    ]
                    .map(String::from),
                    [
                        r.claim.to_string(),
                        m.map(|m| m.to_string()).unwrap_or_default(),
                        r.params.n.to_string(),
                        r.params.k.to_string(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        r.ok.to_string(),
                        cex.join(";"),
                    ],
                ],
            )
        }
        Format::Plain => {
            let m = m.map(|m| format!(" m={m}")).unwrap_or_default();
            writeln!(
                out,
                "claim={}{m} n={} k={} lhs={} rhs={} ok={}",
                r.claim, r.params.n, r.params.k, r.lhs, r.rhs, r.ok
            )?;
            for c in &r.counterexamples {
                writeln!(out, "counterexample={}", joined(c))?;
            }
            Ok(())
        }
    }
}
