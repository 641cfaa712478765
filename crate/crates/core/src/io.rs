//! CSV ingestion and the decomposition / forecast CSV layouts.
//!
//! All text formats are UTF-8 with LF line endings and `.` as the decimal
//! separator. Months are written `YYYY-MM`, dates ISO-8601. Undefined
//! values are empty cells.

use chrono::NaiveDate;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::holt_winters::Forecast;
use crate::series::{DailyRecord, MonthStamp, MonthlySeries};

pub const DAILY_HEADER: [&str; 2] = ["date", "value"];
pub const MONTHLY_HEADER: [&str; 2] = ["month", "value"];
pub const DECOMPOSITION_HEADER: [&str; 5] = ["month", "aggregate", "trend", "seasonal", "random"];
pub const FORECAST_HEADER: [&str; 2] = ["month", "forecast"];

/// `(line, key, value)` for each data row after a validated two-column header.
fn read_pairs(content: &[u8], header: [&str; 2]) -> Result<Vec<(usize, String, String)>> {
    let text = std::str::from_utf8(content).map_err(|e| {
        let line = 1 + content[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
        Error::parse(line, "input is not valid UTF-8")
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();

    let first = records
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing header `{}`", header.join(","))))?
        .map_err(|e| Error::parse(1, e.to_string()))?;
    let got: Vec<&str> = first.iter().map(str::trim).collect();
    if got != header {
        return Err(Error::parse(
            1,
            format!("expected header `{}`, found `{}`", header.join(","), got.join(",")),
        ));
    }

    let mut rows = Vec::new();
    for rec in records {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::parse(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() == 1 && rec[0].trim().is_empty() {
            continue;
        }
        if rec.len() != 2 {
            return Err(Error::parse(line, format!("expected 2 fields, found {}", rec.len())));
        }
        rows.push((line, rec[0].trim().to_string(), rec[1].trim().to_string()));
    }
    if rows.is_empty() {
        return Err(Error::parse(2, "no data rows"));
    }
    Ok(rows)
}

fn parse_value(line: usize, raw: &str) -> Result<f64> {
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::parse(line, format!("`{raw}` is not a finite decimal number"))),
    }
}

/// Parses `date,value` rows in file order.
pub fn read_daily_csv(content: &[u8]) -> Result<Vec<DailyRecord>> {
    read_pairs(content, DAILY_HEADER)?
        .into_iter()
        .map(|(line, date, value)| {
            let date = NaiveDate::parse_from_str(&date, "%Y-%m-%d")
                .map_err(|_| Error::parse(line, format!("`{date}` is not an ISO date")))?;
            Ok(DailyRecord {
                date,
                value: parse_value(line, &value)?,
            })
        })
        .collect()
}

/// Parses `month,value` rows; months must be strictly consecutive.
pub fn read_monthly_csv(content: &[u8]) -> Result<MonthlySeries> {
    let rows = read_pairs(content, MONTHLY_HEADER)?;
    let mut start = None;
    let mut prev: Option<MonthStamp> = None;
    let mut values = Vec::with_capacity(rows.len());
    for (line, month, value) in rows {
        let stamp: MonthStamp = month
            .parse()
            .map_err(|_| Error::parse(line, format!("`{month}` is not a YYYY-MM month")))?;
        if let Some(p) = prev {
            let expected = p.add_months(1);
            if stamp != expected {
                return Err(Error::parse(
                    line,
                    format!("month {stamp} follows {p}; expected {expected}"),
                ));
            }
        }
        start.get_or_insert(stamp);
        prev = Some(stamp);
        values.push(parse_value(line, &value)?);
    }
    MonthlySeries::new(start.expect("at least one row"), values)
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("in-memory writer cannot fail");
    String::from_utf8(bytes).expect("csv output is ASCII")
}

fn fixed6(v: f64) -> String {
    format!("{v:.6}")
}

fn opt6(v: Option<f64>) -> String {
    v.map(fixed6).unwrap_or_default()
}

/// `month,value` with six decimals.
pub fn write_monthly_csv(series: &MonthlySeries) -> String {
    let mut w = csv_writer();
    w.write_record(MONTHLY_HEADER).expect("in-memory");
    for (stamp, v) in series.iter() {
        w.write_record([stamp.to_string(), fixed6(v)]).expect("in-memory");
    }
    finish(w)
}

/// `month,aggregate,trend,seasonal,random`, one row per source month.
pub fn write_decomposition_csv(d: &Decomposition) -> String {
    let mut w = csv_writer();
    w.write_record(DECOMPOSITION_HEADER).expect("in-memory");
    for (i, (stamp, y)) in d.source.iter().enumerate() {
        w.write_record([
            stamp.to_string(),
            fixed6(y),
            opt6(d.trend.get(i)),
            fixed6(d.seasonal.values()[i]),
            opt6(d.random.get(i)),
        ])
        .expect("in-memory");
    }
    finish(w)
}

/// `month,forecast`, one row per horizon step.
pub fn write_forecast_csv(f: &Forecast) -> String {
    let mut w = csv_writer();
    w.write_record(FORECAST_HEADER).expect("in-memory");
    for (stamp, v) in f.stamps().zip(&f.values) {
        w.write_record([stamp.to_string(), fixed6(*v)]).expect("in-memory");
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose_additive;
    use crate::fixture::{embedded_fixture, AUTO_SECTOR};

    fn ms(y: i32, m: u32) -> MonthStamp {
        MonthStamp::new(y, m).unwrap()
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn daily_one_record() {
        let recs = read_daily_csv(b"date,value\n2010-01-04,7380.5\n").unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].date, NaiveDate::from_ymd_opt(2010, 1, 4).unwrap());
        assert_eq!(recs[0].value, 7380.5);
    }

    #[test]
    fn daily_errors_carry_lines() {
        assert_eq!(line_of(read_daily_csv(b"value,date\n2010-01-04,1\n").unwrap_err()), 1);
        assert_eq!(line_of(read_daily_csv(b"date,value\n2010-01-04,abc\n").unwrap_err()), 2);
        assert_eq!(line_of(read_daily_csv(b"date,value\n2010-01-04,1\n04/01/2010,2\n").unwrap_err()), 3);
        assert_eq!(line_of(read_daily_csv(b"date,value\n").unwrap_err()), 2);
        assert_eq!(line_of(read_daily_csv(b"").unwrap_err()), 1);
        assert_eq!(line_of(read_daily_csv(b"date,value\n2010-01-04,1,2\n").unwrap_err()), 2);
        assert_eq!(line_of(read_daily_csv(b"date,value\n2010-01-04,NaN\n").unwrap_err()), 2);
    }

    #[test]
    fn monthly_basic() {
        let s = read_monthly_csv(b"month,value\n2010-01,7380\n2010-02,6958\n").unwrap();
        assert_eq!(s.start(), ms(2010, 1));
        assert_eq!(s.values(), &[7380.0, 6958.0]);
        let one = read_monthly_csv(b"month,value\n1999-12,1.5\n").unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn monthly_gap_names_months() {
        let err = read_monthly_csv(b"month,value\n2010-01,1\n2010-03,2\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2010-02") && msg.contains("2010-03"), "{msg}");
        assert_eq!(line_of(err), 3);
        let back = read_monthly_csv(b"month,value\n2010-02,1\n2010-01,2\n").unwrap_err();
        assert_eq!(line_of(back), 3);
    }

    #[test]
    fn crlf_input_is_accepted() {
        let s = read_monthly_csv(b"month,value\r\n2010-01,1\r\n2010-02,2\r\n").unwrap();
        assert_eq!(s.values(), &[1.0, 2.0]);
    }

    #[test]
    fn decomposition_rows() {
        let d = decompose_additive(&embedded_fixture(AUTO_SECTOR).unwrap(), 12).unwrap();
        let csv = write_decomposition_csv(&d);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "month,aggregate,trend,seasonal,random");
        assert_eq!(lines.len(), 73);
        assert_eq!(lines[1], "2010-01,7380.000000,,63.611111,");
        assert_eq!(lines[7], "2010-07,8315.000000,8552.250000,-293.705556,56.455556");
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn decomposition_aggregate_column_parses_back() {
        let src = embedded_fixture(AUTO_SECTOR).unwrap();
        let d = decompose_additive(&src, 12).unwrap();
        let csv = write_decomposition_csv(&d);
        let mut monthly = String::from("month,value\n");
        for line in csv.lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            monthly.push_str(&format!("{},{}\n", f[0], f[1]));
        }
        assert_eq!(read_monthly_csv(monthly.as_bytes()).unwrap(), src);
    }
}
