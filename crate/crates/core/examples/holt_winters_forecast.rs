//! Fixed-origin forecast: fit on 2010-2014, forecast all of 2015.
//!
//!     cargo run --example holt_winters_forecast

use tsdecomp::{embedded_fixture, hw_fit, hw_forecast, method_one, MonthStamp, AUTO_SECTOR};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let train_end = MonthStamp::new(2014, 12)?;

    let model = hw_fit(&series.window(series.start(), train_end)?, 12, true, true)?;
    println!(
        "alpha {:.4}  beta {:.4}  gamma {:.4}  one-step SSE {:.1}",
        model.params.alpha,
        model.params.beta.unwrap(),
        model.params.gamma.unwrap(),
        model.sse
    );
    let forecast = hw_forecast(&model, 12)?;
    for (stamp, v) in forecast.stamps().zip(&forecast.values) {
        println!("  {stamp}  {v:>10.2}");
    }

    println!("\nagainst the actuals:");
    let rows = method_one(&series, train_end, 12)?;
    for r in &rows {
        println!("  {}  actual {:>8.0}  forecast {:>10.2}  error {:>6.2}%", r.stamp, r.actual, r.forecast, r.error_pct);
    }
    let mape = rows.iter().map(|r| r.error_pct.abs()).sum::<f64>() / rows.len() as f64;
    println!("MAPE {mape:.2}%");
    Ok(())
}
