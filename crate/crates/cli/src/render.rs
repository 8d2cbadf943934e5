use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Flat view of a record for the csv and text formats.
pub trait Row {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

/// Writes the records: a JSON object for a single record and an array
/// otherwise; csv and text get a header line.
pub fn emit<T: Serialize + Row>(out: &mut impl Write, records: &[T], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = if records.len() == 1 {
                serde_json::to_string(&records[0])
            } else {
                serde_json::to_string(records)
            }
            .map_err(std::io::Error::other)?;
            writeln!(out, "{text}")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(T::headers())?;
            for r in records {
                w.write_record(r.cells())?;
            }
            w.flush()
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = std::iter::once(T::headers().iter().map(|s| s.to_string()).collect())
                .chain(records.iter().map(|r| r.cells()))
                .collect();
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
                .collect();
            for row in &rows {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  ").trim_end())?;
            }
            Ok(())
        }
    }
}

/// Coefficients low to high, comma separated.
pub fn coeffs(reps: &[u64]) -> String {
    if reps.is_empty() {
        return "0".into();
    }
    reps.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// A polynomial in the delay operator, e.g. `1+D^2`.
pub fn d_poly(reps: &[u64]) -> String {
    let terms: Vec<String> = reps
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}D"),
                _ => format!("{coef}D^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}
