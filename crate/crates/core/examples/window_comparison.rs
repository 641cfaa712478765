//! Decompose two overlapping five-year windows and compare trend + seasonal
//! on the months both windows can estimate.
//!
//!     cargo run --example window_comparison

use tsdecomp::{embedded_fixture, method_four, MonthStamp, AUTO_SECTOR};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let ms = MonthStamp::new;
    let rows = method_four(&series, (ms(2010, 1)?, ms(2014, 12)?), (ms(2011, 1)?, ms(2015, 12)?))?;
    for r in &rows {
        println!(
            "{}  {:>9.2} {:>8.2} {:>9.2} | {:>9.2} {:>8.2} {:>9.2}  {:>6.2}%",
            r.stamp, r.trend1, r.seasonal1, r.sum1, r.trend2, r.seasonal2, r.sum2, r.variation_pct
        );
    }
    let worst = rows.iter().map(|r| r.variation_pct.abs()).fold(0.0, f64::max);
    println!("{} overlap months, largest |variation| {worst:.2}%", rows.len());
    Ok(())
}
