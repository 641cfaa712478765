//! Reference values for the auto-sector fixture and independent oracles
//! shared by the integration tests.
//!
//! The oracles here deliberately re-derive everything from raw `f64` slices
//! and never call into the library's numerical code.
#![allow(dead_code)]

use tsdecomp::MonthStamp;

pub fn ms(y: i32, m: u32) -> MonthStamp {
    MonthStamp::new(y, m).unwrap()
}

/// Monthly aggregates, 2010-01 .. 2015-12.
pub const AGGREGATE: [f64; 72] = [
    7380., 6958., 7584., 7702., 7581., 8034., 8315., 8710., 9269., 9844., 10127., 10100.,
    9426., 8547., 8806., 9515., 9061., 8626., 8902., 8390., 8656., 8866., 8771., 8359.,
    8576., 9883., 9979., 10363., 9568., 9154., 9215., 9394., 9841., 10299., 10620., 11139.,
    11379., 10809., 10499., 10164., 11091., 10731., 10672., 10255., 10893., 11776., 12103., 12247.,
    11983., 11985., 12783., 13437., 14078., 15118., 15688., 16418., 17798., 17700., 18712., 18752.,
    18907., 19565., 19397., 19041., 18799., 18357., 18806., 18918., 17348., 17738., 18535., 18317.,
];

/// Published trend for 2010-07 .. 2015-06 (60 values).
pub const TREND: [f64; 60] = [
    8552.250, 8703.708, 8820.833, 8947.292, 9084.500, 9170.833,
    9219.958, 9231.083, 9192.208, 9125.917, 9028.667, 8899.625,
    8791.667, 8811.917, 8916.458, 9000.667, 9057.125, 9100.250,
    9135.292, 9190.167, 9281.375, 9390.458, 9527.208, 9720.083,
    9952.708, 10108.083, 10168.333, 10181.708, 10236.875, 10366.042,
    10492.458, 10589.042, 10668.750, 10774.125, 10897.458, 11005.417,
    11076.750, 11150.917, 11295.083, 11526.625, 11787.458, 12094.708,
    12486.500, 12952.292, 13496.792, 14031.333, 14553.542, 15099.958,
    15659.500, 16263.833, 16855.250, 17364.333, 17794.542, 18126.208,
    18391.083, 18625.167, 18710.583, 18693.417, 18687.625, 18662.125,
];

/// Published seasonal figures, January .. December.
pub const SEASONAL: [f64; 12] = [
    63.611111, -5.280556, -22.672222, 55.419444, -65.030556, -325.772222,
    -293.705556, -419.822222, 34.677778, 247.344444, 428.969444, 302.261111,
];

/// Published random component for 2010-07 .. 2015-06 (60 values).
pub const RANDOM: [f64; 60] = [
    56.455556, 426.113889, 413.488889, 649.363889, 613.530556, 626.905556,
    142.430556, -678.802778, -363.536111, 333.663889, 97.363889, 52.147222,
    404.038889, -2.094444, -295.136111, -382.011111, -715.094444, -1043.511111,
    -622.902778, 698.113889, 720.297222, 917.122222, 105.822222, -240.311111,
    -444.002778, -294.261111, -362.011111, -130.052778, -45.844444, 470.697222,
    822.930556, 225.238889, -147.077778, -665.544444, 258.572222, 51.355556,
    -111.044444, -476.094444, -436.761111, 2.030556, -113.427778, -149.969444,
    -567.111111, -962.011111, -691.119444, -649.752778, -410.511111, 343.813889,
    322.205556, 573.988889, 908.072222, 88.322222, 488.488889, 323.530556,
    452.305556, 945.113889, 709.088889, 292.163889, 176.405556, 20.647222,
];

/// Fixed-origin forecasts for 2015 from a model trained through 2014-12.
pub const FIXED_ORIGIN_FORECAST: [f64; 12] = [
    18507.47, 17988.12, 18383.55, 19365.45, 19545.82, 19544.08,
    19872.57, 20349.92, 21221.72, 21926.94, 22486.62, 22685.94,
];

/// Rolling one-step forecasts for 2015.
pub const ROLLING_FORECAST: [f64; 12] = [
    18507., 18426., 19825., 20307., 19687., 18937.,
    18609., 19077., 19794., 18038., 18104., 18470.,
];

/// Trend-projection table, Jan .. Jun 2015:
/// actual trend, actual seasonal, actual sum, past seasonal.
pub const TREND_PROJECTION: [[f64; 4]; 6] = [
    [18391., 64., 18455., 61.],
    [18625., -5., 18620., -131.],
    [18710., -23., 18687., -90.],
    [18693., 55., 18748., 93.],
    [18688., -65., 18623., 1.],
    [18662., -326., 18336., 221.],
];

/// Window comparison table, 2011-07 .. 2014-06:
/// trend1, seasonal1, sum1, trend2, seasonal2, sum2, variation %.
pub const WINDOW_COMPARISON: [[f64; 7]; 36] = [
    [8792., -264., 8498., 8792., -258., 8534., 0.36],
    [8812., -452., 8360., 8812., -477., 8335., -0.30],
    [8916., -82., 8834., 8916., -19., 8897., 0.71],
    [9000., 336., 9336., 9000., 134., 9134., -2.16],
    [9057., 417., 9474., 9057., 325., 9382., -0.97],
    [9100., 332., 9432., 9100., 195., 9295., -1.45],
    [9135., 61., 9196., 9135., 77., 9212., 0.17],
    [9190., -131., 9059., 9190., 214., 9404., 3.80],
    [9281., -90., 9191., 9281., 118., 9399., 2.26],
    [9390., 93., 9483., 9390., 21., 9411., -0.76],
    [9527., 1., 9528., 9527., -40., 9487., -0.43],
    [9720., -221., 9499., 9720., -289., 9431., -0.72],
    [9952., -264., 9688., 9952., -258., 9694., -0.06],
    [10108., -452., 9656., 10108., -477., 9631., -0.26],
    [10168., -82., 10086., 10168., -19., 10149., 0.62],
    [10181., 336., 10517., 10181., 134., 10315., -1.92],
    [10236., 417., 10653., 10236., 325., 10561., -0.86],
    [10366., 332., 10698., 10366., 195., 10561., -1.28],
    [10492., 61., 10553., 10492., 77., 10569., 0.15],
    [10582., -131., 10451., 10589., 214., 10803., 3.37],
    [10669., -90., 10579., 10669., 118., 10787., 1.97],
    [10774., 93., 10867., 10774., 21., 10795., -0.66],
    [10897., 1., 10898., 10897., -40., 10857., -0.37],
    [11005., -221., 10784., 11005., -289., 10716., -0.63],
    [11077., -264., 10813., 11077., -258., 10819., 0.06],
    [11151., -452., 10699., 11151., -477., 10674., -0.23],
    [11295., -82., 11213., 11295., -19., 11276., 0.56],
    [11527., 336., 11863., 11526., 134., 11660., -1.71],
    [11787., 417., 12204., 11787., 325., 12112., -0.75],
    [12095., 332., 12427., 12095., 195., 12290., -1.10],
    [12487., 61., 12548., 12487., 77., 12564., 0.13],
    [12952., -131., 12821., 12952., 214., 13166., 2.69],
    [13497., -90., 13407., 13497., 118., 13615., 1.55],
    [14031., 93., 14124., 14031., 21., 14052., -0.51],
    [14553., 1., 14554., 14553., -40., 14513., -0.28],
    [15100., -221., 14879., 15100., -289., 14811., -0.46],
];

/// A printed comparison row is usable as a golden row only if its sums and
/// percentage follow from its own columns (percentage within 0.05 points).
pub fn comparison_row_consistent(row: &[f64; 7]) -> bool {
    let [t1, s1, c, t2, s2, f, v] = *row;
    let pct = (f - c) / c * 100.0;
    t1 + s1 == c && t2 + s2 == f && (pct - v).abs() <= 0.05
}

// ---------------------------------------------------------------------------
// Oracles

/// 2x12 centered moving average written out as explicit 13 weights.
pub fn oracle_trend(y: &[f64]) -> Vec<Option<f64>> {
    let mut weights = [1.0 / 12.0; 13];
    weights[0] = 1.0 / 24.0;
    weights[12] = 1.0 / 24.0;
    (0..y.len())
        .map(|t| {
            if t < 6 || t + 6 >= y.len() {
                return None;
            }
            let mut acc = 0.0;
            for (k, w) in weights.iter().enumerate() {
                acc += w * y[t + k - 6];
            }
            Some(acc)
        })
        .collect()
}

/// Seasonal figures keyed by calendar month, for a series whose first
/// observation falls in calendar month index `first_month0`.
pub fn oracle_figures(y: &[f64], first_month0: usize) -> [f64; 12] {
    let trend = oracle_trend(y);
    let mut buckets: [Vec<f64>; 12] = Default::default();
    for (t, tr) in trend.iter().enumerate() {
        if let Some(tr) = tr {
            buckets[(first_month0 + t) % 12].push(y[t] - tr);
        }
    }
    let raw: Vec<f64> = buckets.iter().map(|b| b.iter().sum::<f64>() / b.len() as f64).collect();
    let centre = raw.iter().sum::<f64>() / 12.0;
    let mut out = [0.0; 12];
    for m in 0..12 {
        out[m] = raw[m] - centre;
    }
    out
}

/// One-step SSE of additive Holt-Winters (trend + seasonal) with the
/// two-cycle initialization, computed from scratch.
pub fn oracle_hw_sse(y: &[f64], first_month0: usize, alpha: f64, beta: f64, gamma: f64) -> f64 {
    let mean = |s: &[f64]| s.iter().sum::<f64>() / s.len() as f64;
    let mut level = mean(&y[..12]);
    let mut slope = (mean(&y[12..24]) - level) / 12.0;
    let mut season = oracle_figures(&y[..24], first_month0);
    let mut sse = 0.0;
    for t in 24..y.len() {
        let m = (first_month0 + t) % 12;
        let predicted = level + slope + season[m];
        sse += (y[t] - predicted).powi(2);
        let prev_level = level;
        level = alpha * (y[t] - season[m]) + (1.0 - alpha) * (prev_level + slope);
        slope = beta * (level - prev_level) + (1.0 - beta) * slope;
        season[m] = gamma * (y[t] - level) + (1.0 - gamma) * season[m];
    }
    sse
}

/// One-step SSE of Holt's linear method started from `y[0]`, `y[1] - y[0]`.
pub fn oracle_holt_sse(y: &[f64], alpha: f64, beta: f64) -> f64 {
    let mut level = y[0];
    let mut slope = y[1] - y[0];
    let mut sse = 0.0;
    for &obs in &y[1..] {
        sse += (obs - level - slope).powi(2);
        let prev = level;
        level = alpha * obs + (1.0 - alpha) * (prev + slope);
        slope = beta * (level - prev) + (1.0 - beta) * slope;
    }
    sse
}

/// Minimum of `f` over the uniform `steps^dim` lattice on the unit cube.
pub fn lattice_min(dim: usize, steps: usize, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
    let total = steps.pow(dim as u32);
    let mut best = f64::INFINITY;
    let mut p = vec![0.0; dim];
    for mut code in 0..total {
        for slot in p.iter_mut() {
            *slot = (code % steps) as f64 / (steps - 1) as f64;
            code /= steps;
        }
        best = best.min(f(&p));
    }
    best
}

/// Relative slack for comparing SSE values computed by two independent code
/// paths at the same parameter point.
pub const SSE_REL_SLACK: f64 = 1e-12;
