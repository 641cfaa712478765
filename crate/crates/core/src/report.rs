//! Serialization of evaluation rows to CSV or JSON.
//!
//! Field names match the row struct fields. Levels are written with six
//! decimals, percentages with two.

use serde_json::{Map, Number, Value};

use crate::evaluation::{ComponentRow, ForecastRow, OverlapRow};
use crate::series::MonthStamp;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Month(MonthStamp),
    /// Index level, six decimals.
    Level(f64),
    /// Percentage, two decimals.
    Percent(f64),
}

impl Cell {
    fn text(&self) -> String {
        match *self {
            Cell::Month(m) => m.to_string(),
            Cell::Level(v) => format!("{v:.6}"),
            Cell::Percent(v) => format!("{v:.2}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Month(m) => Value::String(m.to_string()),
            // round through the text form so JSON and CSV agree
            Cell::Level(_) | Cell::Percent(_) => {
                let v: f64 = self.text().parse().expect("formatted float");
                Number::from_f64(v).map_or(Value::Null, Value::Number)
            }
        }
    }
}

/// A row type that can appear in a report.
pub trait ReportRow {
    const FIELDS: &'static [&'static str];

    /// One cell per entry of `FIELDS`, in order.
    fn cells(&self) -> Vec<Cell>;
}

impl ReportRow for ForecastRow {
    const FIELDS: &'static [&'static str] = &["stamp", "actual", "forecast", "error_pct"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Month(self.stamp),
            Cell::Level(self.actual),
            Cell::Level(self.forecast),
            Cell::Percent(self.error_pct),
        ]
    }
}

impl ReportRow for ComponentRow {
    const FIELDS: &'static [&'static str] = &[
        "stamp",
        "actual_trend",
        "actual_seasonal",
        "actual_sum",
        "forecast_trend",
        "past_seasonal",
        "forecast_sum",
        "error_pct",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Month(self.stamp),
            Cell::Level(self.actual_trend),
            Cell::Level(self.actual_seasonal),
            Cell::Level(self.actual_sum),
            Cell::Level(self.forecast_trend),
            Cell::Level(self.past_seasonal),
            Cell::Level(self.forecast_sum),
            Cell::Percent(self.error_pct),
        ]
    }
}

impl ReportRow for OverlapRow {
    const FIELDS: &'static [&'static str] = &[
        "stamp",
        "trend1",
        "seasonal1",
        "sum1",
        "trend2",
        "seasonal2",
        "sum2",
        "variation_pct",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Month(self.stamp),
            Cell::Level(self.trend1),
            Cell::Level(self.seasonal1),
            Cell::Level(self.sum1),
            Cell::Level(self.trend2),
            Cell::Level(self.seasonal2),
            Cell::Level(self.sum2),
            Cell::Percent(self.variation_pct),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub fn write_report<R: ReportRow>(rows: &[R], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(R::FIELDS).expect("in-memory");
            for row in rows {
                w.write_record(row.cells().iter().map(Cell::text)).expect("in-memory");
            }
            String::from_utf8(w.into_inner().expect("in-memory")).expect("ASCII")
        }
        ReportFormat::Json => {
            let array = rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = R::FIELDS
                        .iter()
                        .zip(row.cells())
                        .map(|(k, c)| (k.to_string(), c.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&Value::Array(array)).expect("plain values");
            out.push('\n');
            out
        }
    }
}
