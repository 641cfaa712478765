//! Evaluation rows as CSV and JSON reports, plus the decomposition and
//! forecast CSV layouts.
//!
//!     cargo run --example reports

use tsdecomp::io::{write_decomposition_csv, write_forecast_csv};
use tsdecomp::{
    decompose_additive, embedded_fixture, hw_fit, hw_forecast, method_one, write_report, MonthStamp, ReportFormat,
    AUTO_SECTOR,
};

fn main() -> tsdecomp::Result<()> {
    let series = embedded_fixture(AUTO_SECTOR)?;
    let train_end = MonthStamp::new(2014, 12)?;

    let rows = method_one(&series, train_end, 3)?;
    print!("{}", write_report(&rows, ReportFormat::Csv));
    print!("{}", write_report(&rows, ReportFormat::Json));

    let decomposition = write_decomposition_csv(&decompose_additive(&series, 12)?);
    for line in decomposition.lines().take(9) {
        println!("{line}");
    }

    let model = hw_fit(&series.window(series.start(), train_end)?, 12, true, true)?;
    print!("{}", write_forecast_csv(&hw_forecast(&model, 3)?));
    Ok(())
}
