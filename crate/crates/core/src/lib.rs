//! Classical additive decomposition and Holt-Winters forecasting for monthly
//! index series.
//!
//! A monthly series is split into a centered-moving-average trend, twelve
//! zero-sum seasonal figures and a random remainder. On top of that the crate
//! provides additive Holt-Winters smoothing fitted by one-step SSE
//! minimization, four evaluation protocols (fixed origin, rolling origin,
//! trend projection and window comparison), CSV/JSON/SVG output, and a small
//! batch CLI. The embedded `auto-sector` fixture holds 72 months of the Indian
//! auto sector index (2010-2015).
//!
//! ```
//! use tsdecomp::{decompose_additive, embedded_fixture, MonthStamp};
//!
//! let series = embedded_fixture("auto-sector").unwrap();
//! let d = decompose_additive(&series, 12).unwrap();
//! let july = MonthStamp::new(2010, 7).unwrap();
//! assert_eq!(d.trend.at(july), Some(8552.25));
//! ```

pub mod chart;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod evaluation;
pub mod fixture;
pub mod holt_winters;
pub mod io;
pub mod optimizer;
pub mod report;
pub mod series;

pub use chart::render_decomposition_svg;
pub use decomposition::{centered_ma, decompose_additive, recompose, seasonal_figures, Decomposition, SeasonalFigures};
pub use error::{Error, Result};
pub use evaluation::{error_pct, method_four, method_one, method_three, method_two, ComponentRow, ForecastRow, OverlapRow};
pub use fixture::{embedded_fixture, Fixture, AUTO_SECTOR};
pub use holt_winters::{hw_filter, hw_fit, hw_fit_with, hw_forecast, hw_init, FitConfig, Forecast, HwModel, HwParams, HwState};
pub use optimizer::{grid_search, nelder_mead, Bounds, NelderMeadConfig, OptResult};
pub use report::{write_report, ReportFormat, ReportRow};
pub use series::{aggregate_daily, month_add, DailyRecord, MonthStamp, MonthlySeries, PartialSeries};
