//! The box-constrained optimizers on their own, on Rosenbrock's valley
//! inside [0, 2]^2.
//!
//!     cargo run --example nelder_mead

use tsdecomp::{grid_search, nelder_mead, Bounds, NelderMeadConfig};

fn rosenbrock(x: &[f64]) -> f64 {
    100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2)
}

fn main() -> tsdecomp::Result<()> {
    let bounds = Bounds::new(vec![0.0, 0.0], vec![2.0, 2.0])?;
    let seed = grid_search(rosenbrock, &bounds, 6)?;
    println!("6x6 grid    {:?}  f = {:.4}  ({} evaluations)", seed.point, seed.value, seed.evaluations);

    // Projection can flatten a simplex that starts on a face, so refine from
    // an interior point.
    let r = nelder_mead(rosenbrock, &[0.1, 0.1], &bounds, NelderMeadConfig::default())?;
    println!(
        "nelder-mead [{:.6}, {:.6}]  f = {:.3e}  ({} evaluations, converged: {})",
        r.point[0], r.point[1], r.value, r.evaluations, r.converged
    );

    // an optimum outside the box ends up on the boundary
    let r = nelder_mead(|x| (x[0] - 3.0).powi(2) + x[1].powi(2), &[1.0, 1.0], &bounds, NelderMeadConfig::default())?;
    println!("clamped     [{:.6}, {:.6}]  f = {:.6}", r.point[0], r.point[1], r.value);
    Ok(())
}
