//! Additive Holt-Winters exponential smoothing.
//!
//! With level `L`, slope `B` and seasonal state `S` (one entry per seasonal
//! slot), each observation `y_t` updates
//!
//! ```text
//! L_t = alpha (y_t - S_{t-p}) + (1 - alpha)(L_{t-1} + B_{t-1})
//! B_t = beta (L_t - L_{t-1}) + (1 - beta) B_{t-1}
//! S_t = gamma (y_t - L_t) + (1 - gamma) S_{t-p}
//! ```
//!
//! and the one-step prediction made before seeing `y_t` is
//! `L_{t-1} + B_{t-1} + S_{t-p}`. A model without a trend term keeps `B = 0`;
//! a model without a seasonal term keeps `S = 0`.
//!
//! Seasonal state is indexed by calendar slot (`month0 % period`), the same
//! convention as [`crate::decomposition::SeasonalFigures`].

use crate::decomposition::decompose_additive;
use crate::error::{Error, Result};
use crate::optimizer::{grid_search, nelder_mead, Bounds, NelderMeadConfig};
use crate::series::{MonthStamp, MonthlySeries, PartialSeries};

/// Smoothing constants. `None` disables the corresponding term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HwParams {
    pub alpha: f64,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
}

impl HwParams {
    pub fn new(alpha: f64, beta: Option<f64>, gamma: Option<f64>) -> Result<Self> {
        let ok = |v: f64| (0.0..=1.0).contains(&v);
        if !ok(alpha) || !beta.map_or(true, ok) || !gamma.map_or(true, ok) {
            return Err(Error::Contract(format!(
                "smoothing parameters must lie in [0, 1]: alpha={alpha}, beta={beta:?}, gamma={gamma:?}"
            )));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Number of free parameters.
    pub fn dim(&self) -> usize {
        1 + usize::from(self.beta.is_some()) + usize::from(self.gamma.is_some())
    }

    /// `[alpha, beta?, gamma?]`.
    pub fn to_point(&self) -> Vec<f64> {
        std::iter::once(self.alpha).chain(self.beta).chain(self.gamma).collect()
    }

    fn from_point(point: &[f64], with_trend: bool, with_seasonal: bool) -> Self {
        let mut it = point.iter().copied();
        let alpha = it.next().expect("alpha");
        let beta = if with_trend { it.next() } else { None };
        let gamma = if with_seasonal { it.next() } else { None };
        Self { alpha, beta, gamma }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HwState {
    pub level: f64,
    pub slope: Option<f64>,
    /// One entry per seasonal slot.
    pub seasonal: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HwModel {
    pub params: HwParams,
    pub period: usize,
    pub initial_state: HwState,
    pub final_state: HwState,
    pub one_step_predictions: PartialSeries,
    /// Sum of squared one-step errors over the defined predictions.
    pub sse: f64,
    pub training_span: (MonthStamp, MonthStamp),
}

impl HwModel {
    pub fn has_trend(&self) -> bool {
        self.params.beta.is_some()
    }

    pub fn has_seasonal(&self) -> bool {
        self.params.gamma.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Forecast {
    /// Last training month.
    pub origin: MonthStamp,
    pub horizon: usize,
    pub values: Vec<f64>,
}

impl Forecast {
    pub fn stamps(&self) -> impl Iterator<Item = MonthStamp> + '_ {
        (1..=self.horizon).map(|h| self.origin.add_months(h as i64))
    }
}

/// Months consumed by initialization before the first prediction.
fn burn_in(period: usize, with_seasonal: bool) -> usize {
    if with_seasonal {
        2 * period
    } else {
        1
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Initial state.
///
/// Seasonal models take the seasonal state from a classical decomposition of
/// the first two cycles, the level from the mean of cycle one and the slope
/// from the difference of the two cycle means. Non-seasonal models start at
/// `y[0]` with slope `y[1] - y[0]`.
pub fn hw_init(
    series: &MonthlySeries,
    period: usize,
    with_trend: bool,
    with_seasonal: bool,
) -> Result<HwState> {
    let y = series.values();
    if with_seasonal {
        if period < 2 {
            return Err(Error::Contract(format!("period {period} must be at least 2")));
        }
        if y.len() < 2 * period {
            return Err(Error::Data(format!(
                "seasonal initialization needs {} months, got {}",
                2 * period,
                y.len()
            )));
        }
        let head = series.window(series.start(), series.stamp_at(2 * period - 1))?;
        let figures = decompose_additive(&head, period)?.figures;
        let m1 = mean(&y[..period]);
        let m2 = mean(&y[period..2 * period]);
        Ok(HwState {
            level: m1,
            slope: with_trend.then(|| (m2 - m1) / period as f64),
            seasonal: Some(figures.as_slice().to_vec()),
        })
    } else {
        if y.len() < 2 {
            return Err(Error::Data(format!(
                "initialization needs at least 2 months, got {}",
                y.len()
            )));
        }
        Ok(HwState {
            level: y[0],
            slope: with_trend.then(|| y[1] - y[0]),
            seasonal: None,
        })
    }
}

fn check_consistent(params: &HwParams, init: &HwState, period: usize) -> Result<()> {
    if params.beta.is_some() != init.slope.is_some() {
        return Err(Error::Contract("slope state present iff beta present".into()));
    }
    if params.gamma.is_some() != init.seasonal.is_some() {
        return Err(Error::Contract("seasonal state present iff gamma present".into()));
    }
    if let Some(s) = &init.seasonal {
        if s.len() != period {
            return Err(Error::Contract(format!(
                "seasonal state has {} entries, period is {period}",
                s.len()
            )));
        }
    }
    if period == 0 {
        return Err(Error::Contract("period must be positive".into()));
    }
    Ok(())
}

/// Runs the recursion from `first` to the end of `y`; returns SSE and the
/// final state. `first_slot` is the seasonal slot of `y[0]`.
fn run_recursion(
    y: &[f64],
    first_slot: usize,
    first: usize,
    params: &HwParams,
    init: &HwState,
    period: usize,
    mut predictions: Option<&mut Vec<Option<f64>>>,
) -> (f64, HwState) {
    let alpha = params.alpha;
    let mut level = init.level;
    let mut slope = init.slope.unwrap_or(0.0);
    let mut seasonal = init.seasonal.clone();
    let mut sse = 0.0;
    for (t, &obs) in y.iter().enumerate().skip(first) {
        let slot = (first_slot + t) % period;
        let s_prev = seasonal.as_ref().map_or(0.0, |s| s[slot]);
        let prediction = level + slope + s_prev;
        let err = obs - prediction;
        sse += err * err;
        if let Some(p) = predictions.as_deref_mut() {
            p[t] = Some(prediction);
        }

        let new_level = alpha * (obs - s_prev) + (1.0 - alpha) * (level + slope);
        if let Some(beta) = params.beta {
            slope = beta * (new_level - level) + (1.0 - beta) * slope;
        }
        if let (Some(gamma), Some(s)) = (params.gamma, seasonal.as_mut()) {
            s[slot] = gamma * (obs - new_level) + (1.0 - gamma) * s_prev;
        }
        level = new_level;
    }
    let state = HwState {
        level,
        slope: init.slope.map(|_| slope),
        seasonal,
    };
    (sse, state)
}

/// Filters `series` with fixed parameters, recording one-step predictions
/// after the initialization burn-in.
pub fn hw_filter(
    series: &MonthlySeries,
    params: HwParams,
    init: HwState,
    period: usize,
) -> Result<HwModel> {
    check_consistent(&params, &init, period)?;
    let y = series.values();
    let first = burn_in(period, params.gamma.is_some());
    let mut predictions = vec![None; y.len()];
    let (sse, final_state) = run_recursion(
        y,
        series.start().month0(),
        first,
        &params,
        &init,
        period,
        Some(&mut predictions),
    );
    Ok(HwModel {
        params,
        period,
        initial_state: init,
        final_state,
        one_step_predictions: PartialSeries::new(series.start(), predictions),
        sse,
        training_span: (series.start(), series.end()),
    })
}

/// Search settings for [`hw_fit_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub grid_steps: usize,
    pub nelder_mead: NelderMeadConfig,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            grid_steps: 6,
            nelder_mead: NelderMeadConfig::default(),
        }
    }
}

/// Fits the smoothing constants by minimizing one-step SSE over `[0, 1]^d`.
pub fn hw_fit(
    series: &MonthlySeries,
    period: usize,
    with_trend: bool,
    with_seasonal: bool,
) -> Result<HwModel> {
    hw_fit_with(series, period, with_trend, with_seasonal, &FitConfig::default())
}

/// [`hw_fit`] with explicit search settings: a uniform grid seeds a
/// Nelder-Mead refinement from the best grid point.
pub fn hw_fit_with(
    series: &MonthlySeries,
    period: usize,
    with_trend: bool,
    with_seasonal: bool,
    config: &FitConfig,
) -> Result<HwModel> {
    let init = hw_init(series, period, with_trend, with_seasonal)?;
    let y = series.values();
    let first_slot = series.start().month0();
    let first = burn_in(period, with_seasonal);
    let sse_at = |point: &[f64]| {
        let params = HwParams::from_point(point, with_trend, with_seasonal);
        run_recursion(y, first_slot, first, &params, &init, period, None).0
    };

    let dim = 1 + usize::from(with_trend) + usize::from(with_seasonal);
    let bounds = Bounds::unit(dim)?;
    let seed = grid_search(sse_at, &bounds, config.grid_steps)?;
    let refined = nelder_mead(sse_at, &seed.point, &bounds, config.nelder_mead)?;
    let best = if refined.value <= seed.value {
        refined.point
    } else {
        seed.point
    };
    let params = HwParams::from_point(&best, with_trend, with_seasonal);
    hw_filter(series, params, init, period)
}

/// `h`-step forecasts from the model's final state.
pub fn hw_forecast(model: &HwModel, horizon: usize) -> Result<Forecast> {
    if horizon < 1 {
        return Err(Error::Contract("forecast horizon must be at least 1".into()));
    }
    let origin = model.training_span.1;
    let state = &model.final_state;
    let slope = state.slope.unwrap_or(0.0);
    let values = (1..=horizon)
        .map(|h| {
            let target = origin.add_months(h as i64);
            let seasonal = state
                .seasonal
                .as_ref()
                .map_or(0.0, |s| s[target.month0() % model.period]);
            state.level + h as f64 * slope + seasonal
        })
        .collect();
    Ok(Forecast {
        origin,
        horizon,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(y: i32, m: u32) -> MonthStamp {
        MonthStamp::new(y, m).unwrap()
    }

    fn series(values: Vec<f64>) -> MonthlySeries {
        MonthlySeries::new(ms(2010, 1), values).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(HwParams::new(0.5, Some(1.0), Some(0.0)).is_ok());
        assert!(HwParams::new(1.1, None, None).is_err());
        assert!(HwParams::new(0.5, Some(-0.1), None).is_err());
        assert_eq!(HwParams::new(0.5, None, Some(0.2)).unwrap().to_point(), vec![0.5, 0.2]);
    }

    #[test]
    fn init_trend_only() {
        let c = hw_init(&series(vec![5.0; 10]), 12, true, false).unwrap();
        assert_eq!((c.level, c.slope), (5.0, Some(0.0)));
        let ramp = series((0..10).map(|t| 2.0 + 3.0 * t as f64).collect());
        let s = hw_init(&ramp, 12, true, false).unwrap();
        assert_eq!((s.level, s.slope, s.seasonal), (2.0, Some(3.0), None));
        let l = hw_init(&ramp, 12, false, false).unwrap();
        assert_eq!(l.slope, None);
    }

    #[test]
    fn init_errors() {
        assert!(matches!(hw_init(&series(vec![1.0]), 12, true, false), Err(Error::Data(_))));
        assert!(matches!(hw_init(&series(vec![1.0; 23]), 12, true, true), Err(Error::Data(_))));
    }

    #[test]
    fn init_seasonal_levels() {
        let y: Vec<f64> = (0..24).map(|t| 100.0 + t as f64 + [5.0, -5.0][t % 2]).collect();
        let s = hw_init(&series(y.clone()), 12, true, true).unwrap();
        assert!((s.level - mean(&y[..12])).abs() < 1e-12);
        assert!((s.slope.unwrap() - 1.0).abs() < 1e-12);
        assert!(s.seasonal.as_ref().unwrap().iter().sum::<f64>().abs() < 1e-9);
    }

    #[test]
    fn filter_constant_is_fixed_point() {
        let init = HwState {
            level: 7.0,
            slope: Some(0.0),
            seasonal: Some(vec![0.0; 12]),
        };
        let params = HwParams::new(0.3, Some(0.6), Some(0.9)).unwrap();
        let m = hw_filter(&series(vec![7.0; 40]), params, init.clone(), 12).unwrap();
        assert_eq!(m.sse, 0.0);
        assert_eq!(m.final_state, init);
        assert!(m.one_step_predictions.values()[24..].iter().all(|p| *p == Some(7.0)));
        assert!(m.one_step_predictions.values()[..24].iter().all(Option::is_none));
    }

    #[test]
    fn filter_ramp_exact() {
        let ramp = series((0..30).map(|t| 2.0 + 3.0 * t as f64).collect());
        let init = hw_init(&ramp, 12, true, false).unwrap();
        for &(a, b) in &[(0.0, 0.0), (0.4, 0.7), (1.0, 1.0)] {
            let params = HwParams::new(a, Some(b), None).unwrap();
            let m = hw_filter(&ramp, params, init.clone(), 12).unwrap();
            assert_eq!(m.sse, 0.0);
        }
    }

    #[test]
    fn filter_rejects_inconsistent_init() {
        let s = series(vec![1.0; 30]);
        let init = HwState {
            level: 1.0,
            slope: None,
            seasonal: None,
        };
        let p = HwParams::new(0.5, Some(0.5), None).unwrap();
        assert!(matches!(hw_filter(&s, p, init.clone(), 12), Err(Error::Contract(_))));
        let p = HwParams::new(0.5, None, Some(0.5)).unwrap();
        assert!(matches!(hw_filter(&s, p, init, 12), Err(Error::Contract(_))));
        let bad_len = HwState {
            level: 1.0,
            slope: None,
            seasonal: Some(vec![0.0; 4]),
        };
        assert!(hw_filter(&s, p, bad_len, 12).is_err());
    }

    #[test]
    fn fit_constant_and_ramp() {
        let m = hw_fit(&series(vec![3.0; 36]), 12, true, true).unwrap();
        assert_eq!(m.sse, 0.0);
        let ramp = series((0..30).map(|t| 2.0 + 3.0 * t as f64).collect());
        let m = hw_fit(&ramp, 12, true, false).unwrap();
        assert!(m.sse <= 1e-9);
    }

    #[test]
    fn forecast_linear() {
        let model = HwModel {
            params: HwParams::new(0.5, Some(0.5), None).unwrap(),
            period: 12,
            initial_state: HwState {
                level: 0.0,
                slope: Some(0.0),
                seasonal: None,
            },
            final_state: HwState {
                level: 10.0,
                slope: Some(2.5),
                seasonal: None,
            },
            one_step_predictions: PartialSeries::new(ms(2010, 1), vec![]),
            sse: 0.0,
            training_span: (ms(2010, 1), ms(2012, 12)),
        };
        let f = hw_forecast(&model, 3).unwrap();
        assert_eq!(f.values, vec![12.5, 15.0, 17.5]);
        assert_eq!(f.origin, ms(2012, 12));
        assert!(hw_forecast(&model, 0).is_err());
    }

    #[test]
    fn forecast_seasonal_calendar_order() {
        let seasonal: Vec<f64> = (0..12).map(|m| m as f64 * 10.0).collect();
        let model = HwModel {
            params: HwParams::new(0.5, None, Some(0.5)).unwrap(),
            period: 12,
            initial_state: HwState {
                level: 0.0,
                slope: None,
                seasonal: Some(vec![0.0; 12]),
            },
            final_state: HwState {
                level: 100.0,
                slope: None,
                seasonal: Some(seasonal.clone()),
            },
            one_step_predictions: PartialSeries::new(ms(2010, 1), vec![]),
            sse: 0.0,
            // origin in June: first forecast is July (slot 6)
            training_span: (ms(2010, 1), ms(2012, 6)),
        };
        let f = hw_forecast(&model, 24).unwrap();
        for (h, v) in f.values.iter().enumerate() {
            assert_eq!(*v, 100.0 + seasonal[(6 + h) % 12]);
        }
        assert_eq!(f.stamps().next(), Some(ms(2012, 7)));
    }
}
