//! Average daily closes into monthly values, then read a CSV of daily data.
//!
//!     cargo run --example aggregate_daily

use chrono::NaiveDate;
use tsdecomp::io::{read_daily_csv, write_monthly_csv};
use tsdecomp::{aggregate_daily, DailyRecord};

fn main() -> tsdecomp::Result<()> {
    // three months of synthetic trading days, Monday to Friday
    let mut records = Vec::new();
    let mut day = NaiveDate::from_ymd_opt(2024, 1, 1).unwrap();
    let end = NaiveDate::from_ymd_opt(2024, 3, 31).unwrap();
    let mut level = 1000.0;
    while day <= end {
        use chrono::Datelike;
        if day.weekday().number_from_monday() <= 5 {
            level += 1.5;
            records.push(DailyRecord::new(day, level)?);
        }
        day = day.succ_opt().unwrap();
    }
    let monthly = aggregate_daily(&records)?;
    print!("{}", write_monthly_csv(&monthly));

    let csv = b"date,value\n2023-11-30,98.5\n2023-12-01,99\n2023-12-29,101\n";
    let parsed = read_daily_csv(csv)?;
    print!("\n{}", write_monthly_csv(&aggregate_daily(&parsed)?));

    // a gap is an error, not an interpolation
    let gappy = b"date,value\n2023-10-02,1\n2023-12-01,2\n";
    match aggregate_daily(&read_daily_csv(gappy)?) {
        Err(e) => println!("\ngap rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
