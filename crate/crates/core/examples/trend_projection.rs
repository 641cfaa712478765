//! Forecast the trend component alone and add back last year's seasonal
//! figures, then compare with the decomposed actuals.
//!
//!     cargo run --example trend_projection

use tsdecomp::{embedded_fixture, method_three, MonthStamp, AUTO_SECTOR};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let rows = method_three(&series, MonthStamp::new(2014, 12)?, 6)?;
    println!("month     trend  seas.     sum | f.trend  seas.  f.sum   error");
    for r in &rows {
        println!(
            "{}  {:>7.0} {:>6.0} {:>7.0} | {:>7.0} {:>6.0} {:>6.0} {:>6.2}%",
            r.stamp, r.actual_trend, r.actual_seasonal, r.actual_sum, r.forecast_trend, r.past_seasonal, r.forecast_sum, r.error_pct
        );
    }
    Ok(())
}
