//! Forecast evaluation protocols over a monthly series.
//!
//! * [`method_one`]: a single fixed-origin Holt-Winters fit forecasting a
//!   whole horizon.
//! * [`method_two`]: rolling origin, refitting on an expanding window and
//!   forecasting one month ahead each time.
//! * [`method_three`]: forecasts the decomposed trend with Holt's linear
//!   method and adds back the training window's seasonal figures.
//! * [`method_four`]: decomposes two overlapping windows and compares their
//!   trend + seasonal sums month by month.

use crate::decomposition::decompose_additive;
use crate::error::{Error, Result};
use crate::holt_winters::{hw_fit, hw_forecast};
use crate::series::{MonthStamp, MonthlySeries};

const PERIOD: usize = 12;
const HALF: i64 = (PERIOD / 2) as i64;

/// `(forecast - actual) / actual * 100`.
pub fn error_pct(actual: f64, forecast: f64) -> Result<f64> {
    if actual == 0.0 {
        return Err(Error::Domain("percentage error undefined for actual value 0".into()));
    }
    Ok((forecast - actual) / actual * 100.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForecastRow {
    pub stamp: MonthStamp,
    pub actual: f64,
    pub forecast: f64,
    pub error_pct: f64,
}

impl ForecastRow {
    pub fn new(stamp: MonthStamp, actual: f64, forecast: f64) -> Result<Self> {
        Ok(Self {
            stamp,
            actual,
            forecast,
            error_pct: error_pct(actual, forecast)?,
        })
    }
}

/// Actual versus forecast trend + seasonal for one month.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentRow {
    pub stamp: MonthStamp,
    pub actual_trend: f64,
    pub actual_seasonal: f64,
    pub actual_sum: f64,
    pub forecast_trend: f64,
    pub past_seasonal: f64,
    pub forecast_sum: f64,
    pub error_pct: f64,
}

/// Trend + seasonal of one month as seen from two decomposition windows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapRow {
    pub stamp: MonthStamp,
    pub trend1: f64,
    pub seasonal1: f64,
    pub sum1: f64,
    pub trend2: f64,
    pub seasonal2: f64,
    pub sum2: f64,
    pub variation_pct: f64,
}

fn check_within(series: &MonthlySeries, stamp: MonthStamp, what: &str) -> Result<()> {
    if series.index_of(stamp).is_none() {
        return Err(Error::Data(format!(
            "{what} {stamp} is outside the series span {}..{}",
            series.start(),
            series.end()
        )));
    }
    Ok(())
}

/// Fits a trend + additive seasonal model on `[start, train_end]` and
/// forecasts `horizon` months.
pub fn method_one(
    series: &MonthlySeries,
    train_end: MonthStamp,
    horizon: usize,
) -> Result<Vec<ForecastRow>> {
    if horizon < 1 {
        return Err(Error::Contract("horizon must be at least 1".into()));
    }
    check_within(series, train_end, "training end")?;
    check_within(series, train_end.add_months(horizon as i64), "forecast month")?;
    let training = series.window(series.start(), train_end)?;
    let model = hw_fit(&training, PERIOD, true, true)?;
    let forecast = hw_forecast(&model, horizon)?;
    forecast
        .stamps()
        .zip(&forecast.values)
        .map(|(stamp, &f)| ForecastRow::new(stamp, series.value_at(stamp)?, f))
        .collect()
}

/// One-month-ahead forecasts for every month in `[eval_start, eval_end]`,
/// each from a model fitted on all data before that month.
pub fn method_two(
    series: &MonthlySeries,
    eval_start: MonthStamp,
    eval_end: MonthStamp,
) -> Result<Vec<ForecastRow>> {
    if eval_start > eval_end {
        return Err(Error::Contract(format!(
            "evaluation start {eval_start} after end {eval_end}"
        )));
    }
    check_within(series, eval_start, "evaluation start")?;
    check_within(series, eval_end, "evaluation end")?;
    if eval_start <= series.start() {
        return Err(Error::Data(format!(
            "no training history before {eval_start}"
        )));
    }
    let months = eval_start.months_until(eval_end) + 1;
    (0..months)
        .map(|k| {
            let target = eval_start.add_months(k);
            let training = series.window(series.start(), target.add_months(-1))?;
            let model = hw_fit(&training, PERIOD, true, true)?;
            let forecast = hw_forecast(&model, 1)?;
            ForecastRow::new(target, series.value_at(target)?, forecast.values[0])
        })
        .collect()
}

/// Trend-component projection.
///
/// The training window `[start, train_end]` is decomposed; its trend stops
/// six months before `train_end`. Holt's linear method (no seasonal term) is
/// fitted to that trend and run `6 + eval_months` steps, keeping the last
/// `eval_months`. Each is added to the training window's seasonal figure and
/// compared with trend + seasonal from decomposing the whole series.
pub fn method_three(
    series: &MonthlySeries,
    train_end: MonthStamp,
    eval_months: usize,
) -> Result<Vec<ComponentRow>> {
    if eval_months < 1 {
        return Err(Error::Contract("at least one evaluation month is required".into()));
    }
    check_within(series, train_end, "training end")?;
    let last_needed = train_end.add_months(eval_months as i64 + HALF);
    if series.index_of(last_needed).is_none() {
        return Err(Error::Data(format!(
            "actual trend for {} needs data through {last_needed}; series ends {}",
            train_end.add_months(eval_months as i64),
            series.end()
        )));
    }

    let training = decompose_additive(&series.window(series.start(), train_end)?, PERIOD)?;
    let trend = training.trend.defined_span()?;
    let lead = trend.end().months_until(train_end);
    let model = hw_fit(&trend, PERIOD, true, false)?;
    let forecast = hw_forecast(&model, lead as usize + eval_months)?;
    let full = decompose_additive(series, PERIOD)?;

    forecast
        .stamps()
        .zip(&forecast.values)
        .skip(lead as usize)
        .map(|(stamp, &forecast_trend)| {
            let actual_trend = full.trend.at(stamp).ok_or_else(|| {
                Error::Data(format!("actual trend undefined at {stamp}"))
            })?;
            let actual_seasonal = full.figures.for_stamp(stamp);
            let past_seasonal = training.figures.for_stamp(stamp);
            let actual_sum = actual_trend + actual_seasonal;
            let forecast_sum = forecast_trend + past_seasonal;
            Ok(ComponentRow {
                stamp,
                actual_trend,
                actual_seasonal,
                actual_sum,
                forecast_trend,
                past_seasonal,
                forecast_sum,
                error_pct: error_pct(actual_sum, forecast_sum)?,
            })
        })
        .collect()
}

/// Compares trend + seasonal between two independently decomposed windows
/// on every month where both trends are defined.
pub fn method_four(
    series: &MonthlySeries,
    window1: (MonthStamp, MonthStamp),
    window2: (MonthStamp, MonthStamp),
) -> Result<Vec<OverlapRow>> {
    let d1 = decompose_additive(&series.window(window1.0, window1.1)?, PERIOD)?;
    let d2 = decompose_additive(&series.window(window2.0, window2.1)?, PERIOD)?;
    let from = window1.0.max(window2.0).add_months(HALF);
    let to = window1.1.min(window2.1).add_months(-HALF);
    if from > to {
        return Err(Error::Data(format!(
            "windows {}..{} and {}..{} share no month with a defined trend",
            window1.0, window1.1, window2.0, window2.1
        )));
    }
    (0..=from.months_until(to))
        .map(|k| {
            let stamp = from.add_months(k);
            let trend1 = d1.trend.at(stamp).expect("inside window 1 interior");
            let trend2 = d2.trend.at(stamp).expect("inside window 2 interior");
            let seasonal1 = d1.figures.for_stamp(stamp);
            let seasonal2 = d2.figures.for_stamp(stamp);
            let sum1 = trend1 + seasonal1;
            let sum2 = trend2 + seasonal2;
            Ok(OverlapRow {
                stamp,
                trend1,
                seasonal1,
                sum1,
                trend2,
                seasonal2,
                sum2,
                variation_pct: error_pct(sum1, sum2)?,
            })
        })
        .collect()
}
