//! Stable file formats: the matrix text format, JSON reports, and the
//! family-comparison table in its three renderings.
//!
//! Identical inputs always produce byte-identical output, JSON key order
//! included. Integers stay exact everywhere; the only float printed is
//! the simulator error rate, fixed at six decimals.

use anyhow::{bail, Result};
use ptmc_core::{CodeMatrix, CorrelationReport, FamilyRow, SimReport};
use serde::Serialize;
use std::fmt::Write as _;

/// Matrix text format: one line per user, space-separated 0/1 entries,
/// newline-terminated, no trailing spaces.
pub fn matrix_to_text(matrix: &CodeMatrix) -> String {
    let mut out = String::with_capacity(matrix.rows() * (2 * matrix.cols()).max(1));
    for row in matrix.row_iter() {
        let mut first = true;
        for &bit in row {
            if !first {
                out.push(' ');
            }
            out.push(if bit == 1 { '1' } else { '0' });
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Header line written before a generated matrix, ignored by the parser.
pub fn matrix_header(users: usize, weight: usize, length: usize) -> String {
    format!("# ptmc N={users} W={weight} L={length}\n")
}

/// Parses the matrix text format. Lines starting with `#` and blank
/// lines are skipped; rows must be rectangular with entries 0 or 1.
pub fn matrix_from_text(input: &str) -> Result<CodeMatrix> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (index, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            match token {
                "0" => row.push(0),
                "1" => row.push(1),
                other => bail!("line {}: entry {other:?} is not 0 or 1", index + 1),
            }
        }
        if let Some(width) = rows.first().map(Vec::len) {
            if row.len() != width {
                bail!(
                    "line {}: row has {} entries, expected {width}",
                    index + 1,
                    row.len()
                );
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no matrix rows found");
    }
    Ok(CodeMatrix::from_rows(&rows)?)
}

#[derive(Serialize)]
struct MatrixJson {
    users: usize,
    weight: usize,
    length: usize,
    rows: Vec<Vec<u8>>,
}

/// JSON rendering of a generated matrix with its spec parameters.
pub fn matrix_to_json(matrix: &CodeMatrix, users: usize, weight: usize) -> String {
    let doc = MatrixJson {
        users,
        weight,
        length: matrix.cols(),
        rows: matrix.row_iter().map(<[u8]>::to_vec).collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("plain integers serialize");
    out.push('\n');
    out
}

/// Verification report as single-line JSON.
pub fn report_to_json(report: &CorrelationReport) -> String {
    let mut out = serde_json::to_string(report).expect("plain integers serialize");
    out.push('\n');
    out
}

/// Comparison rows as a single-line JSON array.
pub fn family_rows_to_json(rows: &[FamilyRow]) -> String {
    let mut out = serde_json::to_string(rows).expect("plain values serialize");
    out.push('\n');
    out
}

/// Comparison rows as CSV. Field content never contains commas.
pub fn family_rows_to_csv(rows: &[FamilyRow]) -> String {
    let mut out = String::from("family,param,users,weight,lambda,length,notes\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.family, row.params, row.users, row.weight, row.lambda, row.length, row.notes
        );
    }
    out
}

/// Comparison rows as an aligned text table.
pub fn family_rows_to_table(rows: &[FamilyRow]) -> String {
    let header = ["family", "param", "users", "weight", "lambda", "length", "notes"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|row| {
            [
                row.family.to_string(),
                row.params.to_string(),
                row.users.to_string(),
                row.weight.to_string(),
                row.lambda.to_string(),
                row.length.to_string(),
                row.notes.clone(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..7)
        .map(|col| {
            cells
                .iter()
                .map(|row| row[col].len())
                .chain([header[col].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    if let Some(first) = rows.first() {
        let _ = writeln!(
            out,
            "requested users={} weight={}",
            first.requested_users, first.requested_weight
        );
    }
    render_table_line(&mut out, &header.map(String::from), &widths);
    for row in &cells {
        render_table_line(&mut out, row, &widths);
    }
    out
}

fn render_table_line(out: &mut String, cells: &[String; 7], widths: &[usize]) {
    // users, weight, lambda, length right-aligned; the rest left-aligned.
    for (col, cell) in cells.iter().enumerate() {
        if col > 0 {
            out.push_str("  ");
        }
        let width = widths[col];
        if (2..=5).contains(&col) {
            let _ = write!(out, "{cell:>width$}");
        } else {
            let _ = write!(out, "{cell:<width$}");
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out.push('\n');
}

/// Simulation report as single-line JSON; `error_rate` is printed with
/// fixed six-decimal formatting.
pub fn sim_report_to_json(report: &SimReport) -> String {
    format!(
        "{{\"trials\":{},\"bit_errors\":{},\"bits_total\":{},\"error_rate\":{:.6},\"max_interference_observed\":{}}}\n",
        report.trials,
        report.bit_errors,
        report.bits_total,
        report.error_rate(),
        report.max_interference_observed
    )
}
