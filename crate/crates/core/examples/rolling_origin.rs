//! Rolling-origin evaluation: refit each month on all data so far and
//! forecast one step ahead.
//!
//!     cargo run --example rolling_origin

use tsdecomp::{embedded_fixture, method_two, MonthStamp, AUTO_SECTOR};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let rows = method_two(&series, MonthStamp::new(2015, 1)?, MonthStamp::new(2015, 12)?)?;
    for r in &rows {
        println!("{}  actual {:>8.0}  forecast {:>10.2}  error {:>6.2}%", r.stamp, r.actual, r.forecast, r.error_pct);
    }
    let mape = rows.iter().map(|r| r.error_pct.abs()).sum::<f64>() / rows.len() as f64;
    println!("MAPE {mape:.2}%");
    Ok(())
}
