//! Decompose the embedded auto-sector index and print the components.
//!
//!     cargo run --example decompose_fixture

use tsdecomp::{decompose_additive, embedded_fixture, AUTO_SECTOR};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let d = decompose_additive(&series, 12)?;

    println!("seasonal figures (sum {:.1e}):", d.figures.sum());
    for m in 1..=12 {
        println!("  month {m:>2}: {:>10.3}", d.figures.by_month(m));
    }

    println!("\nmonth    aggregate      trend   seasonal     random");
    for (i, (stamp, y)) in series.iter().enumerate() {
        let cell = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |v| format!("{v:.3}"));
        println!(
            "{stamp} {y:>10.0} {:>10} {:>10.3} {:>10}",
            cell(d.trend.get(i)),
            d.seasonal.values()[i],
            cell(d.random.get(i)),
        );
    }
    Ok(())
}
