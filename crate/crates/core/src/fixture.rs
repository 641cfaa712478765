//! Series embedded in the library so that golden tests never depend on files.

use crate::error::{Error, Result};
use crate::series::{MonthStamp, MonthlySeries};

pub const AUTO_SECTOR: &str = "auto-sector";

/// Names accepted by [`embedded_fixture`].
pub const FIXTURE_NAMES: &[&str] = &[AUTO_SECTOR];

/// Monthly averages of the daily Indian auto-sector index, Jan 2010 to Dec 2015.
const AUTO_SECTOR_VALUES: [f64; 72] = [
    // 2010
    7380.0, 6958.0, 7584.0, 7702.0, 7581.0, 8034.0, 8315.0, 8710.0, 9269.0, 9844.0, 10127.0, 10100.0,
    // 2011
    9426.0, 8547.0, 8806.0, 9515.0, 9061.0, 8626.0, 8902.0, 8390.0, 8656.0, 8866.0, 8771.0, 8359.0,
    // 2012
    8576.0, 9883.0, 9979.0, 10363.0, 9568.0, 9154.0, 9215.0, 9394.0, 9841.0, 10299.0, 10620.0, 11139.0,
    // 2013
    11379.0, 10809.0, 10499.0, 10164.0, 11091.0, 10731.0, 10672.0, 10255.0, 10893.0, 11776.0, 12103.0, 12247.0,
    // 2014
    11983.0, 11985.0, 12783.0, 13437.0, 14078.0, 15118.0, 15688.0, 16418.0, 17798.0, 17700.0, 18712.0, 18752.0,
    // 2015
    18907.0, 19565.0, 19397.0, 19041.0, 18799.0, 18357.0, 18806.0, 18918.0, 17348.0, 17738.0, 18535.0, 18317.0,
];

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub series: MonthlySeries,
    pub citation: &'static str,
}

pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        AUTO_SECTOR => Ok(Fixture {
            name: AUTO_SECTOR,
            series: MonthlySeries::new(
                MonthStamp::new(2010, 1).expect("valid month"),
                AUTO_SECTOR_VALUES.to_vec(),
            )
            .expect("fixture values are finite"),
            citation: "Indian auto sector index, monthly mean of daily levels, 2010-01 to 2015-12",
        }),
        other => Err(Error::UnknownFixture {
            name: other.to_string(),
            known: FIXTURE_NAMES.join(", "),
        }),
    }
}

pub fn embedded_fixture(name: &str) -> Result<MonthlySeries> {
    fixture(name).map(|f| f.series)
}
