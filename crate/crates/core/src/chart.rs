//! Four-panel SVG chart of a decomposition: observed, trend, seasonal and
//! random, stacked vertically and sharing the time axis.

use std::fmt::Write;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};

const LEFT: f64 = 64.0;
const RIGHT: f64 = 16.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 28.0;
const GAP: f64 = 18.0;

pub const MIN_SIZE_PX: u32 = 100;

struct Panel<'a> {
    name: &'a str,
    values: Vec<Option<f64>>,
}

fn fmt_px(v: f64) -> String {
    format!("{v:.2}")
}

/// Runs of consecutive defined values, as `(first index, values)`.
fn runs(values: &[Option<f64>]) -> Vec<(usize, Vec<f64>)> {
    let mut out: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut open = false;
    for (i, v) in values.iter().enumerate() {
        match (v, open) {
            (Some(v), true) => out.last_mut().expect("open run").1.push(*v),
            (Some(v), false) => {
                out.push((i, vec![*v]));
                open = true;
            }
            (None, _) => open = false,
        }
    }
    out
}

pub fn render_decomposition_svg(d: &Decomposition, width_px: u32, height_px: u32) -> Result<String> {
    if width_px < MIN_SIZE_PX || height_px < MIN_SIZE_PX {
        return Err(Error::Contract(format!(
            "chart must be at least {MIN_SIZE_PX}x{MIN_SIZE_PX} px, got {width_px}x{height_px}"
        )));
    }
    let (w, h) = (f64::from(width_px), f64::from(height_px));
    let n = d.source.len();
    let panels = [
        Panel {
            name: "observed",
            values: d.source.values().iter().copied().map(Some).collect(),
        },
        Panel {
            name: "trend",
            values: d.trend.values().to_vec(),
        },
        Panel {
            name: "seasonal",
            values: d.seasonal.values().iter().copied().map(Some).collect(),
        },
        Panel {
            name: "random",
            values: d.random.values().to_vec(),
        },
    ];

    let plot_w = (w - LEFT - RIGHT).max(1.0);
    let panel_h = ((h - TOP - BOTTOM - GAP * 3.0) / 4.0).max(1.0);
    let x_of = |i: usize| {
        if n > 1 {
            LEFT + plot_w * i as f64 / (n - 1) as f64
        } else {
            LEFT + plot_w / 2.0
        }
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" viewBox="0 0 {width_px} {height_px}" font-family="sans-serif" font-size="10">"#
    );
    for (k, panel) in panels.iter().enumerate() {
        let top = TOP + k as f64 * (panel_h + GAP);
        let bottom = top + panel_h;
        let defined: Vec<f64> = panel.values.iter().flatten().copied().collect();
        let (lo, hi) = defined
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        let (lo, hi) = if defined.is_empty() {
            (-1.0, 1.0)
        } else if hi - lo < 1e-12 {
            (lo - 1.0, hi + 1.0)
        } else {
            (lo, hi)
        };
        let y_of = |v: f64| bottom - (v - lo) / (hi - lo) * panel_h;

        let _ = writeln!(svg, r#"<g class="panel" id="{}">"#, panel.name);
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-weight="bold">{}</text>"#,
            fmt_px(LEFT),
            fmt_px(top - 4.0),
            panel.name
        );
        let _ = writeln!(
            svg,
            r##"<line class="axis" x1="{l}" y1="{t}" x2="{l}" y2="{b}" stroke="#444"/>"##,
            l = fmt_px(LEFT),
            t = fmt_px(top),
            b = fmt_px(bottom)
        );
        let _ = writeln!(
            svg,
            r##"<line class="axis" x1="{l}" y1="{b}" x2="{r}" y2="{b}" stroke="#444"/>"##,
            l = fmt_px(LEFT),
            r = fmt_px(LEFT + plot_w),
            b = fmt_px(bottom)
        );
        for (v, anchor_y) in [(hi, top + 4.0), (lo, bottom)] {
            let _ = writeln!(
                svg,
                r#"<text class="y-label" x="{}" y="{}" text-anchor="end">{:.0}</text>"#,
                fmt_px(LEFT - 4.0),
                fmt_px(anchor_y),
                v
            );
        }
        for (i, (stamp, _)) in d.source.iter().enumerate() {
            if stamp.month() == 1 {
                let x = fmt_px(x_of(i));
                let _ = writeln!(
                    svg,
                    r##"<line class="tick" x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#444"/>"##,
                    fmt_px(bottom),
                    fmt_px(bottom + 4.0)
                );
                if k == panels.len() - 1 {
                    let _ = writeln!(
                        svg,
                        r#"<text class="year" x="{x}" y="{}" text-anchor="middle">{}</text>"#,
                        fmt_px(bottom + 15.0),
                        stamp.year()
                    );
                }
            }
        }
        for (first, run) in runs(&panel.values) {
            let points: Vec<String> = run
                .iter()
                .enumerate()
                .map(|(j, &v)| format!("{},{}", fmt_px(x_of(first + j)), fmt_px(y_of(v))))
                .collect();
            let _ = writeln!(
                svg,
                r##"<polyline fill="none" stroke="#1f77b4" stroke-width="1.2" points="{}"/>"##,
                points.join(" ")
            );
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
