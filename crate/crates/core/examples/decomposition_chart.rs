//! Render the four-panel decomposition chart as SVG.
//!
//!     cargo run --example decomposition_chart -- chart.svg

use tsdecomp::{decompose_additive, embedded_fixture, render_decomposition_svg, AUTO_SECTOR};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = decompose_additive(&embedded_fixture(AUTO_SECTOR)?, 12)?;
    let svg = render_decomposition_svg(&d, 900, 720)?;
    match std::env::args_os().nth(1) {
        Some(path) => {
            std::fs::write(&path, &svg)?;
            eprintln!("wrote {} bytes to {}", svg.len(), path.to_string_lossy());
        }
        None => print!("{svg}"),
    }
    Ok(())
}
