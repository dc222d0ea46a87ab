use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;
use tridirep::families::ReportValue;

/// Simple fixed-width table.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&self.header);
        for row in &self.rows {
            line(row);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// `re+imi`, or just `re` when the imaginary part is exactly zero.
pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        real(z.re)
    } else {
        format!("{:.16e}{:+.16e}i", z.re, z.im)
    }
}

pub fn report_value(v: &ReportValue) -> String {
    match *v {
        ReportValue::Real(x) => real(x),
        ReportValue::Complex(z) => complex(z),
    }
}

pub fn json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes `content` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => {
            fs::write(p, content)?;
            log::info!("wrote {}", p.display());
            Ok(())
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}
