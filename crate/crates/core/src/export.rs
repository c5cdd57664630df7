//! Text renderings used by the command-line front end: triangle exports
//! (csv, json, oeis) and the plain reports for polynomials, series, roots
//! and statistics.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analytic::{
    clt_report, isolate_roots, mean_gap_holds, mode_in_bracket, moment_stats, variance_defect,
    verify_interlacing, CLT_MONOTONE_SLACK,
};
use crate::error::{Error, Result};
use crate::exact::UniPoly;
use crate::identities::{egf_a_closed, tan_sec_series};
use crate::triangle::{family_poly, named_spec, Family, PolyFamily, TriangleRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
    Oeis,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "oeis" => Ok(Format::Oeis),
            other => Err(format!(
                "unknown format `{other}` (expected csv, json or oeis)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct JsonRow {
    n: usize,
    k_offset: usize,
    entries: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct JsonTriangle {
    family: String,
    rows: Vec<JsonRow>,
}

/// Rows `1..=rows` of a family; the initial row of `E`, `G` and `M` is
/// already row 1.
pub fn triangle_rows(family: Family, rows: usize) -> Vec<TriangleRow> {
    named_spec(family)
        .rows_through(rows)
        .into_iter()
        .filter(|r| r.n() >= 1)
        .collect()
}

fn join(row: &TriangleRow, sep: &str) -> String {
    row.entries()
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Serializes rows `1..=rows`. In csv each line is one row over its
/// support; oeis flattens the same values one per line.
pub fn emit_triangle(family: Family, rows: usize, format: Format) -> Result<String> {
    if rows == 0 {
        return Err(Error::OutOfBounds {
            what: "triangle export",
            n: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let data = triangle_rows(family, rows);
    Ok(match format {
        Format::Csv => data.iter().map(|r| join(r, ",") + "\n").collect(),
        Format::Oeis => data.iter().map(|r| join(r, "\n") + "\n").collect(),
        Format::Json => {
            let doc = JsonTriangle {
                family: family.symbol().to_string(),
                rows: data
                    .iter()
                    .map(|r| JsonRow {
                        n: r.n(),
                        k_offset: r.k_offset(),
                        entries: r.entries().iter().map(BigInt::to_string).collect(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    })
}

/// Inverse of the json export.
pub fn parse_triangle_json(text: &str) -> Result<(Family, Vec<TriangleRow>)> {
    let doc: JsonTriangle =
        serde_json::from_str(text).map_err(|e| Error::UnknownFamily(format!("bad json: {e}")))?;
    let family: Family = doc.family.parse()?;
    let rows = doc
        .rows
        .into_iter()
        .map(|r| {
            let entries = r
                .entries
                .iter()
                .map(|e| {
                    e.parse::<BigInt>()
                        .map_err(|_| Error::UnknownFamily(format!("bad integer `{e}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TriangleRow::new(r.n, r.k_offset, entries))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((family, rows))
}

/// `c0 + c1*x + ...` for the `n`-th member of a named family.
pub fn render_poly(name: &str, n: usize) -> Result<String> {
    let family: PolyFamily = name.parse()?;
    let p = family_poly(name, n)?;
    Ok(p.display_in(family.var()) + "\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Tan,
    Sec,
    Eulerian,
}

impl FromStr for SeriesKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tan" => Ok(SeriesKind::Tan),
            "sec" => Ok(SeriesKind::Sec),
            "eulerian" => Ok(SeriesKind::Eulerian),
            other => Err(format!(
                "unknown series `{other}` (expected tan, sec or eulerian)"
            )),
        }
    }
}

/// EGF coefficients `n! [t^n]` for `n = 0..=order`, one per line.
pub fn render_series(kind: SeriesKind, order: usize) -> String {
    let coeffs: Vec<UniPoly> = match kind {
        SeriesKind::Tan | SeriesKind::Sec => {
            let pair = tan_sec_series(order);
            let s = if kind == SeriesKind::Tan {
                pair.tan
            } else {
                pair.sec
            };
            (0..=order).map(|n| s.egf_coeff(n)).collect()
        }
        SeriesKind::Eulerian => {
            let s = egf_a_closed(order);
            (0..=order).map(|n| s.egf_coeff(n)).collect()
        }
    };
    coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| format!("t^{n}/{n}!: {}\n", c.display_in("x")))
        .collect()
}

/// Sturm count, isolating intervals and interlacing for `N_n`.
pub fn render_roots(n: usize) -> Result<String> {
    let p = family_poly("N", n)?;
    let mut out = String::new();
    let _ = writeln!(out, "N_{n}(x) = {}", p.display_in("x"));
    if n == 0 {
        let _ = writeln!(out, "constant polynomial, no roots");
        return Ok(out);
    }
    let intervals = isolate_roots(&p)?;
    let _ = writeln!(out, "distinct real roots: {}", intervals.len());
    for (a, b) in &intervals {
        let _ = writeln!(out, "  root in ({a}, {b}]");
    }
    if n >= 2 {
        let r = verify_interlacing(n)?;
        let verdict = if r.holds() { "holds" } else { "FAILS" };
        let _ = writeln!(
            out,
            "interlacing with N_{}: {verdict} ({})",
            n - 1,
            r.detail
        );
    }
    Ok(out)
}

/// One tab-separated line of exact statistics per `n = 1..=max_n`.
pub fn render_stats(max_n: usize) -> Result<String> {
    let mut out = String::from(
        "n\tN_n(1)\tN_n'(1)\tN_n''(1)\tmean\tvariance\tvariance-(2n+1)/24\tmodes\tmean_gap_ok\tmode_ok\n",
    );
    for n in 1..=max_n {
        let r = moment_stats(n)?;
        let _ = writeln!(
            out,
            "{n}\t{}\t{}\t{}\t{}\t{}\t{}\t{:?}\t{}\t{}",
            r.total,
            r.first_derivative,
            r.second_derivative,
            r.mean,
            r.variance,
            variance_defect(&r),
            r.modes,
            n < 2 || mean_gap_holds(&r),
            n < 2 || mode_in_bracket(&r),
        );
    }
    Ok(out)
}

/// Sup-distances to the normal CDF; a diagnostic, in double precision.
pub fn render_clt(ns: &[usize]) -> Result<String> {
    let r = clt_report(ns)?;
    let mut out = format!(
        "# sup_k |F_n(k) - Phi((k - mu_n)/sigma_n)|, double precision; monotone slack {CLT_MONOTONE_SLACK}\n"
    );
    for (n, d) in r.ns.iter().zip(&r.distances) {
        let _ = writeln!(out, "{n}\t{d:.6}");
    }
    let _ = writeln!(
        out,
        "# nonincreasing within slack: {}",
        r.monotone_with_slack
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_examples() {
        let n = emit_triangle(Family::N, 4, Format::Csv).unwrap();
        assert_eq!(n.lines().last(), Some("8,60,36,1"));
        let a = emit_triangle(Family::Worpitzky, 4, Format::Csv).unwrap();
        assert_eq!(a.lines().last(), Some("1,15,50,60,24"));
        assert_eq!(emit_triangle(Family::S, 1, Format::Csv).unwrap(), "1\n");
        assert!(emit_triangle(Family::A, 0, Format::Csv).is_err());
    }

    #[test]
    fn oeis_flattens() {
        let text = emit_triangle(Family::A, 3, Format::Oeis).unwrap();
        assert_eq!(text, "1\n1\n1\n1\n4\n1\n");
    }

    #[test]
    fn json_round_trip() {
        for family in Family::ALL {
            let text = emit_triangle(family, 15, Format::Json).unwrap();
            let (back, rows) = parse_triangle_json(&text).unwrap();
            assert_eq!(back, family);
            assert_eq!(rows, triangle_rows(family, 15));
        }
    }

    #[test]
    fn renders() {
        assert_eq!(render_poly("N", 3).unwrap(), "4*x + 10*x^2 + 1*x^3\n");
        assert!(render_poly("Z", 3).is_err());
        let s = render_series(SeriesKind::Tan, 3);
        assert!(s.ends_with("t^3/3!: 2\n"), "{s}");
        let e = render_series(SeriesKind::Eulerian, 3);
        assert!(e.ends_with("t^3/3!: 1*x + 4*x^2 + 1*x^3\n"), "{e}");
        let r = render_roots(3).unwrap();
        assert!(r.contains("distinct real roots: 3"));
        assert!(r.contains("holds"));
        assert!(render_stats(4).unwrap().lines().count() == 5);
        assert!(render_clt(&[10, 40]).unwrap().starts_with('#'));
    }
}
