//! Report model and its three renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cell {
    Empty,
    Value {
        value: f64,
        #[serde(skip_serializing_if = "Option::is_none")]
        percent: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        flag: Option<String>,
    },
    Text {
        text: String,
    },
    Failed {
        reason: String,
    },
}

impl Cell {
    pub fn value(value: f64) -> Cell {
        Cell::Value {
            value,
            percent: None,
            flag: None,
        }
    }

    /// `value` with its ratio to `reference` in percent, when a reference exists.
    pub fn relative(value: f64, reference: Option<f64>) -> Cell {
        Cell::Value {
            value,
            percent: reference.map(|r| 100.0 * value / r),
            flag: None,
        }
    }

    pub fn text(text: impl Into<String>) -> Cell {
        Cell::Text { text: text.into() }
    }

    pub fn flagged(self, flag: Option<&str>) -> Cell {
        match (self, flag) {
            (Cell::Value { value, percent, .. }, Some(f)) => Cell::Value {
                value,
                percent,
                flag: Some(f.to_string()),
            },
            (cell, _) => cell,
        }
    }

    pub fn as_value(&self) -> Option<f64> {
        match self {
            Cell::Value { value, .. } => Some(*value),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub cells: Vec<Cell>,
}

impl Row {
    pub fn new(label: impl Into<String>, cells: Vec<Cell>) -> Row {
        Row {
            label: label.into(),
            cells,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: Vec<String>) -> Table {
        Table {
            title: title.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn row(&self, label: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.label == label)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn table(&self, title_prefix: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.title.starts_with(title_prefix))
    }
}

/// Seven significant digits, fixed notation.
pub fn sig7(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.000000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (6 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.9999996 → 10.000000)
    let digits = s.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').count();
    if digits > 7 && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

fn percent_text(p: f64) -> String {
    format!("{p:.3}%")
}

fn cell_markdown(cell: &Cell) -> String {
    match cell {
        Cell::Empty => String::new(),
        Cell::Value { value, percent, flag } => {
            let mut s = sig7(*value);
            if let Some(p) = percent {
                let _ = write!(s, " ({})", percent_text(*p));
            }
            if let Some(f) = flag {
                let _ = write!(s, " [{f}]");
            }
            s
        }
        Cell::Text { text } => text.clone(),
        Cell::Failed { reason } => format!("FAILED: {reason}"),
    }
}

pub fn render_markdown(report: &Report) -> String {
    let mut out = format!("# {}\n", report.title);
    for t in &report.tables {
        let _ = write!(out, "\n## {}\n\n| |", t.title);
        for c in &t.columns {
            let _ = write!(out, " {c} |");
        }
        out.push_str("\n|---|");
        for _ in &t.columns {
            out.push_str("---|");
        }
        out.push('\n');
        for r in &t.rows {
            let _ = write!(out, "| {} |", r.label);
            for c in &r.cells {
                let _ = write!(out, " {} |", cell_markdown(c).replace('|', "\\|"));
            }
            out.push('\n');
        }
    }
    if !report.notes.is_empty() {
        out.push('\n');
        for n in &report.notes {
            let _ = writeln!(out, "- {n}");
        }
    }
    out
}

/// Long format: one line per cell.
pub fn render_csv(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["table", "row", "column", "value", "percent", "note"])
        .expect("in-memory write");
    for t in &report.tables {
        for r in &t.rows {
            for (col, cell) in t.columns.iter().zip(&r.cells) {
                let (value, percent, note) = match cell {
                    Cell::Empty => continue,
                    Cell::Value { value, percent, flag } => {
                        (sig7(*value), percent.map(sig7).unwrap_or_default(), flag.clone().unwrap_or_default())
                    }
                    Cell::Text { text } => (String::new(), String::new(), text.clone()),
                    Cell::Failed { reason } => (String::new(), String::new(), format!("failed: {reason}")),
                };
                w.write_record([t.title.as_str(), &r.label, col, &value, &percent, &note])
                    .expect("in-memory write");
            }
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes") + "\n"
}
