//! Reference values for `--check`, and the comparison against a report.

use serde::Serialize;

use super::document::{Cell, Report, Row, Table};
use super::Command;

/// Experimental helium energies, ryd.
pub const EXPERIMENT_GROUND: f64 = -5.8070;
pub const EXPERIMENT_EXCITED: f64 = -4.3504;

const OSC_TOL: f64 = 2e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub computed: Option<f64>,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckLine {
    fn new(label: String, computed: Option<f64>, expected: f64, tolerance: f64) -> CheckLine {
        let pass = computed.is_some_and(|c| (c - expected).abs() <= tolerance);
        CheckLine {
            label,
            computed,
            expected,
            tolerance,
            pass,
        }
    }
}

/// (row, b, value) triples.
const TABLE1: &[(&str, f64, f64)] = &[
    ("conventional PT, 2nd order", 0.01, 1.4318427),
    ("conventional PT, 2nd order", 0.05, 1.5279252),
    ("variational", 0.01, 1.4333279),
    ("variational", 0.05, 1.5968858),
    ("variational", 0.25, 2.0664772),
    ("present", 0.01, 1.4327276),
    ("present", 0.05, 1.5912088),
    ("present", 0.25, 2.0412648),
    ("exact, shooting", 0.01, 1.4327725),
    ("exact, shooting", 0.05, 1.5922195),
    ("exact, shooting", 0.25, 2.0474629),
    ("½mΩ0² (eV Å⁻²)", 0.01, 0.5770839),
    ("½mΩ0² (eV Å⁻²)", 0.05, 0.8227827),
    ("½mΩ0² (eV Å⁻²)", 0.25, 1.6423320),
];

/// (row, column, value) at b = 0.05.
const TABLE2: &[(&str, usize, f64)] = &[
    ("conventional PT", 0, 1.6659633),
    ("conventional PT", 1, 1.5279252),
    ("variational", 0, 1.5968858),
    ("present", 0, 1.5968858),
    ("present", 1, 1.5912088),
];

/// (row, value) at b = 0.05.
const TABLE3: &[(&str, f64)] = &[
    ("conventional PT, 2nd order", 4.484801),
    ("variational", 5.106102),
    ("present", 5.092412),
    ("present, as-printed closed form", 5.092412),
    ("exact, shooting", 5.091282),
    ("½mΩ1² (eV Å⁻²)", 0.990354),
];

/// (table prefix, row, value, tolerance).
const HELIUM: &[(&str, &str, f64, f64)] = &[
    ("ground state", "Z*", 1.6875, 1e-12),
    ("ground state", "variational", -5.6953, 1e-4),
    ("ground state", "second order", -0.0249, 1e-3),
    ("ground state", "total", -5.7202, 1e-3),
    ("first excited", "Z*", 1.8497, 1e-4),
    ("first excited", "variational", -4.2765, 1e-4),
];

fn column_of(table: &Table, b: f64) -> Option<usize> {
    table.columns.iter().position(|c| *c == format!("b = {b}"))
}

fn cell(table: &Table, row: &str, col: usize) -> Option<f64> {
    table.row(row).and_then(|r| r.cells.get(col)).and_then(Cell::as_value)
}

pub fn check_report(command: Command, report: &Report) -> Vec<CheckLine> {
    let mut out = Vec::new();
    match command {
        Command::Table1 => {
            let t = &report.tables[0];
            for &(row, b, v) in TABLE1 {
                if let Some(c) = column_of(t, b) {
                    out.push(CheckLine::new(format!("{row}, b = {b}"), cell(t, row, c), v, OSC_TOL));
                }
            }
            if let Some(c) = column_of(t, 0.25) {
                let flagged = t
                    .row("conventional PT, 2nd order")
                    .and_then(|r| r.cells.get(c))
                    .is_some_and(|cell| matches!(cell, Cell::Value { flag: Some(_), .. }));
                out.push(CheckLine::new(
                    "conventional PT flagged divergent, b = 0.25".into(),
                    Some(if flagged { 1.0 } else { 0.0 }),
                    1.0,
                    0.0,
                ));
            }
        }
        Command::Table2 => {
            if let Some(t) = report.tables.iter().find(|t| t.title.ends_with("b = 0.05")) {
                for &(row, col, v) in TABLE2 {
                    let order = if col == 0 { "1st" } else { "2nd" };
                    out.push(CheckLine::new(format!("{row}, {order} order"), cell(t, row, col), v, OSC_TOL));
                }
            }
        }
        Command::Table3 => {
            let t = &report.tables[0];
            if let Some(c) = column_of(t, 0.05) {
                for &(row, v) in TABLE3 {
                    out.push(CheckLine::new(format!("{row}, b = 0.05"), cell(t, row, c), v, OSC_TOL));
                }
            }
        }
        Command::Helium => {
            for &(prefix, row, v, tol) in HELIUM {
                let computed = report.table(prefix).and_then(|t| cell(t, row, 0));
                out.push(CheckLine::new(format!("{prefix}: {row}"), computed, v, tol));
            }
        }
        Command::Sweep => {}
    }
    out
}

pub fn check_table(lines: &[CheckLine]) -> Table {
    let mut t = Table::new(
        "check against published values",
        ["computed", "published", "|difference|", "tolerance", "status"].map(String::from).to_vec(),
    );
    for l in lines {
        let diff = l.computed.map(|c| (c - l.expected).abs());
        t.push(Row::new(
            l.label.clone(),
            vec![
                l.computed.map_or(Cell::Empty, Cell::value),
                Cell::value(l.expected),
                diff.map_or(Cell::Empty, |d| Cell::text(format!("{d:.2e}"))),
                Cell::text(format!("{:.0e}", l.tolerance)),
                Cell::text(if l.pass { "PASS" } else { "FAIL" }),
            ],
        ));
    }
    if lines.is_empty() {
        t.push(Row::new("no published values for this grid", vec![Cell::Empty; 5]));
    }
    t
}
