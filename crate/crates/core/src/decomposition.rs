//! Classical additive decomposition `y = trend + seasonal + random`.
//!
//! The trend is a centered moving average over one seasonal period (for even
//! periods the `2 x p` form with half weights on the two end points), so it is
//! undefined for the first and last `p / 2` months. Seasonal figures are the
//! per-slot means of the detrended series, re-centered to sum to zero.
//!
//! Seasonal slots are aligned to the calendar: the slot of month `t` is
//! `(calendar month index of t) mod p`, which for `p = 12` is just the
//! calendar month.

use crate::error::{Error, Result};
use crate::series::{MonthStamp, MonthlySeries, PartialSeries};

/// Additive offsets per seasonal slot; they sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SeasonalFigures {
    figures: Vec<f64>,
}

impl SeasonalFigures {
    pub fn period(&self) -> usize {
        self.figures.len()
    }

    /// Figures in slot order; for a 12-month period index 0 is January.
    pub fn as_slice(&self) -> &[f64] {
        &self.figures
    }

    /// Figure for calendar month `month` (1..=12).
    pub fn by_month(&self, month: u32) -> f64 {
        self.figures[(month as usize - 1) % self.figures.len()]
    }

    pub fn for_stamp(&self, stamp: MonthStamp) -> f64 {
        self.figures[stamp.month0() % self.figures.len()]
    }

    pub fn sum(&self) -> f64 {
        self.figures.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub source: MonthlySeries,
    pub trend: PartialSeries,
    pub figures: SeasonalFigures,
    pub seasonal: MonthlySeries,
    pub random: PartialSeries,
}

impl Decomposition {
    pub fn period(&self) -> usize {
        self.figures.period()
    }
}

fn check_period(period: usize) -> Result<()> {
    if period < 2 {
        return Err(Error::Contract(format!("period {period} must be at least 2")));
    }
    if period % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "odd period {period}; only even periods are supported"
        )));
    }
    Ok(())
}

/// Centered moving average of even length `period`.
///
/// Position `t` is defined iff `p/2 <= t <= n-1-p/2`.
pub fn centered_ma(series: &MonthlySeries, period: usize) -> Result<PartialSeries> {
    check_period(period)?;
    let y = series.values();
    let n = y.len();
    if n < period + 1 {
        return Err(Error::Data(format!(
            "series of {n} months is too short for a centered average of period {period}"
        )));
    }
    let half = period / 2;
    let out = (0..n)
        .map(|t| {
            (t >= half && t + half < n).then(|| {
                let inner: f64 = y[t + 1 - half..t + half].iter().sum();
                (0.5 * y[t - half] + inner + 0.5 * y[t + half]) / period as f64
            })
        })
        .collect();
    Ok(PartialSeries::new(series.start(), out))
}

/// Per-slot means of `series - trend`, shifted so the figures sum to zero.
pub fn seasonal_figures(
    series: &MonthlySeries,
    trend: &PartialSeries,
    period: usize,
) -> Result<SeasonalFigures> {
    check_period(period)?;
    if trend.start() != series.start() || trend.len() != series.len() {
        return Err(Error::Contract("trend does not cover the same months as the series".into()));
    }
    let mut sums = vec![0.0; period];
    let mut counts = vec![0usize; period];
    for (i, (stamp, y)) in series.iter().enumerate() {
        if let Some(t) = trend.get(i) {
            let slot = stamp.month0() % period;
            sums[slot] += y - t;
            counts[slot] += 1;
        }
    }
    if let Some(slot) = counts.iter().position(|&c| c == 0) {
        return Err(Error::Data(format!(
            "seasonal slot {} has no detrended observations",
            slot + 1
        )));
    }
    let raw: Vec<f64> = sums.iter().zip(&counts).map(|(s, &c)| s / c as f64).collect();
    let grand = raw.iter().sum::<f64>() / period as f64;
    Ok(SeasonalFigures {
        figures: raw.into_iter().map(|r| r - grand).collect(),
    })
}

pub fn decompose_additive(series: &MonthlySeries, period: usize) -> Result<Decomposition> {
    check_period(period)?;
    if series.len() < 2 * period {
        return Err(Error::Data(format!(
            "decomposition needs at least {} months, got {}",
            2 * period,
            series.len()
        )));
    }
    let trend = centered_ma(series, period)?;
    let figures = seasonal_figures(series, &trend, period)?;
    let seasonal_values: Vec<f64> = series.iter().map(|(s, _)| figures.for_stamp(s)).collect();
    let random = series
        .values()
        .iter()
        .zip(trend.values())
        .zip(&seasonal_values)
        .map(|((y, t), s)| t.map(|t| y - t - s))
        .collect();
    Ok(Decomposition {
        source: series.clone(),
        seasonal: MonthlySeries::new(series.start(), seasonal_values)?,
        trend,
        figures,
        random: PartialSeries::new(series.start(), random),
    })
}

/// `trend + seasonal + random` wherever all three are defined.
pub fn recompose(d: &Decomposition) -> PartialSeries {
    let values = d
        .trend
        .values()
        .iter()
        .zip(d.seasonal.values())
        .zip(d.random.values())
        .map(|((t, s), r)| Some((*t)? + s + (*r)?))
        .collect();
    PartialSeries::new(d.source.start(), values)
}
