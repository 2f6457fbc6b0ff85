//! Tabular export of trajectories and phase portraits as CSV and JSON.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use rfa_core::dynamics::{PhasePortrait, Projection};
use rfa_core::Traj;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

/// Column headers and rows of reals, one row per time step.
#[derive(Clone, Debug, PartialEq)]
pub struct ExportTable {
    headers: Vec<String>,
    rows: Vec<Vec<f64>>,
}

/// What a column holds, recovered from its header.
#[derive(Clone, Debug, PartialEq)]
enum Column<'a> {
    Time,
    Crisp(&'a str),
    Re(&'a str),
    Fu(&'a str),
    Lower(&'a str, &'a str),
    Upper(&'a str, &'a str),
}

fn column(h: &str) -> Column<'_> {
    if h == "t" {
        return Column::Time;
    }
    if let Some(v) = h.strip_suffix("_re") {
        return Column::Re(v);
    }
    if let Some(v) = h.strip_suffix("_fu") {
        return Column::Fu(v);
    }
    for (suffix, upper) in [("_lo", false), ("_hi", true)] {
        if let Some((var, alpha)) = h.strip_suffix(suffix).and_then(|s| s.rsplit_once("_a")) {
            if alpha.parse::<f64>().is_ok() {
                return if upper {
                    Column::Upper(var, alpha)
                } else {
                    Column::Lower(var, alpha)
                };
            }
        }
    }
    Column::Crisp(h)
}

fn alpha_label(alpha: f64) -> String {
    format!("{alpha}")
}

fn fuzzy_headers(var: &str, alphas: &[f64]) -> Vec<String> {
    let mut h = vec![format!("{var}_re"), format!("{var}_fu")];
    for &a in alphas {
        let a = alpha_label(a);
        h.push(format!("{var}_a{a}_lo"));
        h.push(format!("{var}_a{a}_hi"));
    }
    h
}

impl ExportTable {
    pub fn new(headers: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if let Some((i, r)) = rows
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != headers.len())
        {
            return Err(CliError::Config(format!(
                "row {i} has {} values for {} columns",
                r.len(),
                headers.len()
            )));
        }
        Ok(Self { headers, rows })
    }

    /// `t`, then `<var>_re`, `<var>_fu` and the α-band edges of each variable.
    pub fn from_trajectory(traj: &Traj) -> Self {
        let alphas = traj.bands().map(|b| b.alphas.clone()).unwrap_or_default();
        let mut headers = vec!["t".to_string()];
        for name in traj.names() {
            headers.extend(fuzzy_headers(name, &alphas));
        }
        let rows = traj
            .times()
            .iter()
            .zip(traj.states())
            .enumerate()
            .map(|(k, (&t, state))| {
                let mut row = vec![t];
                for (v, z) in state.iter().enumerate() {
                    row.extend([z.re, z.fu]);
                    if let Some(b) = traj.bands() {
                        row.extend(
                            b.bands[k][v]
                                .iter()
                                .flat_map(|band| [band.lower, band.upper]),
                        );
                    }
                }
                row
            })
            .collect();
        Self { headers, rows }
    }

    /// `t`, the crisp coordinate, then the fuzzy coordinate with its bands.
    /// `names` are the trajectory's variable names `(x, y)`.
    pub fn from_phase(portrait: &PhasePortrait<f64>, names: (&str, &str)) -> Self {
        let (fuzzy, crisp) = match portrait.projection {
            Projection::XVsS => (names.0.to_string(), "s".to_string()),
            Projection::RVsY => (names.1.to_string(), "r".to_string()),
        };
        let mut headers = vec!["t".to_string(), crisp];
        headers.extend(fuzzy_headers(&fuzzy, &portrait.alphas));
        let rows = portrait
            .points
            .iter()
            .map(|p| {
                let mut row = vec![p.t, p.crisp, p.fuzzy.re, p.fuzzy.fu];
                row.extend(p.bands.iter().flat_map(|b| [b.lower, b.upper]));
                row
            })
            .collect();
        Self { headers, rows }
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// CSV with every value printed to 17 significant digits, which is
    /// enough to read back the identical `f64`.
    pub fn write_csv_to<W: Write>(&self, w: W) -> Result<(), csv::Error> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.headers)?;
        for row in &self.rows {
            out.write_record(row.iter().map(|v| format!("{v:.16e}")))?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv_to(&mut buf)
            .expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(|e| CliError::io(path, e))?;
        self.write_csv_to(BufWriter::new(file))
            .map_err(|e| csv_error(path, e))
    }

    pub fn read_csv_from<R: Read>(r: R) -> Result<Self, csv::Error> {
        let mut input = csv::Reader::from_reader(r);
        let headers: Vec<String> = input.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for record in input.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|f| {
                    f.trim().parse::<f64>().map_err(|e| {
                        csv::Error::from(std::io::Error::new(
                            std::io::ErrorKind::InvalidData,
                            format!("`{f}`: {e}"),
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(Self { headers, rows })
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|e| CliError::io(path, e))?;
        Self::read_csv_from(file).map_err(|e| csv_error(path, e))
    }

    /// `{"columns": [...], "alphas": [...], "rows": [...]}` where each row is an
    /// object with `t`, crisp columns, and one object per fuzzy variable holding
    /// `re`, `fu` and `levels` keyed by α.
    pub fn to_json(&self) -> Value {
        let cols: Vec<Column> = self.headers.iter().map(|h| column(h)).collect();
        let mut alphas: Vec<f64> = Vec::new();
        for c in &cols {
            if let Column::Lower(_, a) = c {
                let a: f64 = a.parse().expect("checked when classifying");
                if !alphas.contains(&a) {
                    alphas.push(a);
                }
            }
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (c, &v) in cols.iter().zip(row) {
                    match *c {
                        Column::Time => {
                            obj.insert("t".into(), json!(v));
                        }
                        Column::Crisp(name) => {
                            obj.insert(name.into(), json!(v));
                        }
                        Column::Re(var) => {
                            var_entry(&mut obj, var).insert("re".into(), json!(v));
                        }
                        Column::Fu(var) => {
                            var_entry(&mut obj, var).insert("fu".into(), json!(v));
                        }
                        Column::Lower(var, a) | Column::Upper(var, a) => {
                            let key = if matches!(c, Column::Lower(..)) {
                                "lo"
                            } else {
                                "hi"
                            };
                            let levels = var_entry(&mut obj, var)
                                .entry("levels")
                                .or_insert_with(|| Value::Object(Map::new()))
                                .as_object_mut()
                                .expect("levels is an object");
                            levels
                                .entry(a)
                                .or_insert_with(|| Value::Object(Map::new()))
                                .as_object_mut()
                                .expect("level is an object")
                                .insert(key.into(), json!(v));
                        }
                    }
                }
                Value::Object(obj)
            })
            .collect();
        json!({ "columns": self.headers, "alphas": alphas, "rows": rows })
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(|e| CliError::io(path, e))?;
        let mut w = BufWriter::new(file);
        serde_json::to_writer_pretty(&mut w, &self.to_json())
            .map_err(|e| CliError::io(path, e.into()))?;
        w.flush().map_err(|e| CliError::io(path, e))
    }
}

fn var_entry<'m>(obj: &'m mut Map<String, Value>, var: &str) -> &'m mut Map<String, Value> {
    obj.entry(var)
        .or_insert_with(|| Value::Object(Map::new()))
        .as_object_mut()
        .expect("variable entry is an object")
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => CliError::io(path, io),
        other => CliError::io(
            path,
            std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{other:?}")),
        ),
    }
}
