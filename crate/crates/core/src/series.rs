//! Calendar months, monthly series containers and daily-to-monthly aggregation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

/// A calendar month. Orders chronologically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonthStamp {
    year: i32,
    month: u32,
}

impl MonthStamp {
    pub fn new(year: i32, month: u32) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return Err(Error::Contract(format!("month {month} not in 1..=12")));
        }
        Ok(Self { year, month })
    }

    pub fn of_date(date: NaiveDate) -> Self {
        Self {
            year: date.year(),
            month: date.month(),
        }
    }

    pub fn year(self) -> i32 {
        self.year
    }

    /// Month number, 1 = January.
    pub fn month(self) -> u32 {
        self.month
    }

    /// Zero-based month of year, 0 = January.
    pub fn month0(self) -> usize {
        (self.month - 1) as usize
    }

    /// Months elapsed since year 0, January.
    fn ordinal(self) -> i64 {
        i64::from(self.year) * 12 + i64::from(self.month) - 1
    }

    fn from_ordinal(ordinal: i64) -> Self {
        Self {
            year: ordinal.div_euclid(12) as i32,
            month: ordinal.rem_euclid(12) as u32 + 1,
        }
    }

    /// Advance by `k` calendar months; `k` may be negative.
    pub fn add_months(self, k: i64) -> Self {
        Self::from_ordinal(self.ordinal() + k)
    }

    /// Signed number of months from `self` to `other`.
    pub fn months_until(self, other: MonthStamp) -> i64 {
        other.ordinal() - self.ordinal()
    }
}

/// Shifts `stamp` by `k` months with year carry.
pub fn month_add(stamp: MonthStamp, k: i64) -> MonthStamp {
    stamp.add_months(k)
}

impl fmt::Display for MonthStamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl FromStr for MonthStamp {
    type Err = Error;

    /// Parses `YYYY-MM`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Data(format!("`{s}` is not a YYYY-MM month"));
        let (y, m) = s.split_once('-').ok_or_else(bad)?;
        if y.len() != 4 || m.len() != 2 || !y.bytes().chain(m.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let year: i32 = y.parse().map_err(|_| bad())?;
        let month: u32 = m.parse().map_err(|_| bad())?;
        MonthStamp::new(year, month).map_err(|_| bad())
    }
}

/// One raw daily observation of an index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DailyRecord {
    pub date: NaiveDate,
    pub value: f64,
}

impl DailyRecord {
    pub fn new(date: NaiveDate, value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Data(format!("non-finite value on {date}")));
        }
        Ok(Self { date, value })
    }
}

/// Contiguous monthly values beginning at `start`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonthlySeries {
    start: MonthStamp,
    values: Vec<f64>,
}

impl MonthlySeries {
    pub fn new(start: MonthStamp, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Data("monthly series is empty".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Data(format!(
                "non-finite value at {}",
                start.add_months(i as i64)
            )));
        }
        Ok(Self { start, values })
    }

    pub fn start(&self) -> MonthStamp {
        self.start
    }

    /// Last covered month.
    pub fn end(&self) -> MonthStamp {
        self.stamp_at(self.values.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn stamp_at(&self, index: usize) -> MonthStamp {
        self.start.add_months(index as i64)
    }

    /// Position of `stamp`, if covered.
    pub fn index_of(&self, stamp: MonthStamp) -> Option<usize> {
        let offset = self.start.months_until(stamp);
        (offset >= 0 && (offset as usize) < self.values.len()).then_some(offset as usize)
    }

    fn require_index(&self, stamp: MonthStamp) -> Result<usize> {
        self.index_of(stamp).ok_or(Error::OutOfRange {
            stamp,
            start: self.start,
            end: self.end(),
        })
    }

    pub fn value_at(&self, stamp: MonthStamp) -> Result<f64> {
        Ok(self.values[self.require_index(stamp)?])
    }

    /// Copy of the inclusive sub-span `[start, end]`.
    pub fn window(&self, start: MonthStamp, end: MonthStamp) -> Result<MonthlySeries> {
        if start > end {
            return Err(Error::Contract(format!("window start {start} after end {end}")));
        }
        let i = self.require_index(start)?;
        let j = self.require_index(end)?;
        Ok(MonthlySeries {
            start,
            values: self.values[i..=j].to_vec(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (MonthStamp, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.stamp_at(i), v))
    }

    /// Adds `c` to every value.
    pub fn shifted(&self, c: f64) -> Result<MonthlySeries> {
        MonthlySeries::new(self.start, self.values.iter().map(|v| v + c).collect())
    }
}

/// Monthly values where some positions are undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSeries {
    start: MonthStamp,
    values: Vec<Option<f64>>,
}

impl PartialSeries {
    pub fn new(start: MonthStamp, values: Vec<Option<f64>>) -> Self {
        Self { start, values }
    }

    pub fn start(&self) -> MonthStamp {
        self.start
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Option<f64>] {
        &self.values
    }

    pub fn get(&self, index: usize) -> Option<f64> {
        self.values.get(index).copied().flatten()
    }

    /// Value at `stamp`; `None` if undefined or outside the span.
    pub fn at(&self, stamp: MonthStamp) -> Option<f64> {
        let offset = self.start.months_until(stamp);
        if offset < 0 {
            return None;
        }
        self.get(offset as usize)
    }

    pub fn stamp_at(&self, index: usize) -> MonthStamp {
        self.start.add_months(index as i64)
    }

    pub fn defined_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    /// The single contiguous run of defined values as a `MonthlySeries`.
    ///
    /// Fails if nothing is defined or if the defined values have holes.
    pub fn defined_span(&self) -> Result<MonthlySeries> {
        let first = self
            .values
            .iter()
            .position(Option::is_some)
            .ok_or_else(|| Error::Data("partial series has no defined values".into()))?;
        let last = self.values.iter().rposition(Option::is_some).unwrap_or(first);
        let values = self.values[first..=last]
            .iter()
            .map(|v| v.ok_or_else(|| Error::Data("defined values are not contiguous".into())))
            .collect::<Result<Vec<_>>>()?;
        MonthlySeries::new(self.stamp_at(first), values)
    }
}

/// Averages daily records into one value per calendar month.
///
/// Within a month the values are summed in sorted order so the result does
/// not depend on record order.
pub fn aggregate_daily(records: &[DailyRecord]) -> Result<MonthlySeries> {
    if records.is_empty() {
        return Err(Error::Data("no daily records".into()));
    }
    let mut by_month: BTreeMap<MonthStamp, Vec<f64>> = BTreeMap::new();
    for r in records {
        if !r.value.is_finite() {
            return Err(Error::Data(format!("non-finite value on {}", r.date)));
        }
        by_month.entry(MonthStamp::of_date(r.date)).or_default().push(r.value);
    }
    let first = *by_month.keys().next().expect("non-empty");
    let mut values = Vec::with_capacity(by_month.len());
    for (i, (stamp, mut vals)) in by_month.into_iter().enumerate() {
        let expected = first.add_months(i as i64);
        if stamp != expected {
            return Err(Error::MissingMonth(expected));
        }
        vals.sort_by(f64::total_cmp);
        values.push(vals.iter().sum::<f64>() / vals.len() as f64);
    }
    MonthlySeries::new(first, values)
}
