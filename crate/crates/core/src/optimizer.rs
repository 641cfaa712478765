//! Derivative-free minimization over an axis-aligned box.
//!
//! Both routines are deterministic. Every point handed to the objective lies
//! inside the box: Nelder-Mead trial points are clamped onto it before
//! evaluation.

use std::cell::Cell;

use crate::error::{Error, Result};

/// Axis-aligned box `lower[i] <= x[i] <= upper[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::Contract("bounds have different dimensions".into()));
        }
        if lower.is_empty() {
            return Err(Error::Contract("bounds have dimension 0".into()));
        }
        if lower.iter().zip(&upper).any(|(l, u)| !(l <= u) || !l.is_finite() || !u.is_finite()) {
            return Err(Error::Contract("each lower bound must be finite and <= its upper bound".into()));
        }
        Ok(Self { lower, upper })
    }

    /// The unit cube `[0, 1]^dim`.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(vec![0.0; dim], vec![1.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| l <= v && v <= u)
    }

    /// Clamps each coordinate onto the box.
    pub fn project(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*l, *u);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    pub point: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub converged: bool,
}

pub const MAX_GRID_DIM: usize = 4;

/// Evaluates the uniform lattice with `steps_per_axis` points per axis,
/// faces included, and returns the best point.
///
/// The lattice is walked in lexicographic order and only strict improvements
/// replace the incumbent, so ties go to the lexicographically smallest point.
pub fn grid_search<F>(mut objective: F, bounds: &Bounds, steps_per_axis: usize) -> Result<OptResult>
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = bounds.dim();
    if dim > MAX_GRID_DIM {
        return Err(Error::Contract(format!(
            "grid search dimension {dim} exceeds {MAX_GRID_DIM}"
        )));
    }
    if steps_per_axis < 2 {
        return Err(Error::Contract("grid search needs at least 2 steps per axis".into()));
    }
    let coord = |axis: usize, k: usize| {
        if k + 1 == steps_per_axis {
            bounds.upper[axis]
        } else {
            let (l, u) = (bounds.lower[axis], bounds.upper[axis]);
            l + (u - l) * k as f64 / (steps_per_axis - 1) as f64
        }
    };

    let mut index = vec![0usize; dim];
    let mut point = vec![0.0; dim];
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut evaluations = 0;
    loop {
        for (axis, &k) in index.iter().enumerate() {
            point[axis] = coord(axis, k);
        }
        let value = objective(&point);
        evaluations += 1;
        let better = match &best {
            None => true,
            // NaN never wins against a number
            Some((_, b)) => value < *b || (b.is_nan() && !value.is_nan()),
        };
        if better {
            best = Some((point.clone(), value));
        }

        // odometer increment, last axis fastest
        let mut axis = dim;
        loop {
            if axis == 0 {
                let (point, value) = best.expect("at least one evaluation");
                return Ok(OptResult {
                    point,
                    value,
                    evaluations,
                    converged: true,
                });
            }
            axis -= 1;
            index[axis] += 1;
            if index[axis] < steps_per_axis {
                break;
            }
            index[axis] = 0;
        }
    }
}

/// Tuning knobs for [`nelder_mead`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadConfig {
    /// Stop once `max f - min f` over the simplex drops below this.
    pub tolerance: f64,
    pub max_evals: usize,
    /// Initial simplex edge as a fraction of each axis' box width.
    pub initial_step: f64,
}

impl Default for NelderMeadConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-8,
            max_evals: 2000,
            initial_step: 0.1,
        }
    }
}

const REFLECTION: f64 = 1.0;
const EXPANSION: f64 = 2.0;
const CONTRACTION: f64 = 0.5;
const SHRINK: f64 = 0.5;

struct Vertex {
    x: Vec<f64>,
    f: f64,
}

/// Box-constrained Nelder-Mead.
///
/// The initial simplex is `start` plus one vertex per axis offset by
/// `initial_step * (upper - lower)`, flipped to the negative side when the
/// positive offset would leave the box.
pub fn nelder_mead<F>(
    mut objective: F,
    start: &[f64],
    bounds: &Bounds,
    config: NelderMeadConfig,
) -> Result<OptResult>
where
    F: FnMut(&[f64]) -> f64,
{
    let n = bounds.dim();
    if !bounds.contains(start) {
        return Err(Error::Contract(format!("start point {start:?} lies outside the box")));
    }
    if !(config.tolerance > 0.0) {
        return Err(Error::Contract("tolerance must be positive".into()));
    }
    if config.max_evals < n + 1 {
        return Err(Error::Contract(format!(
            "max_evals {} is below dimension + 1 = {}",
            config.max_evals,
            n + 1
        )));
    }

    let evaluations = Cell::new(0usize);
    let mut eval = |x: &[f64]| {
        evaluations.set(evaluations.get() + 1);
        let f = objective(x);
        // NaN sorts last
        if f.is_nan() {
            f64::INFINITY
        } else {
            f
        }
    };

    let mut simplex = Vec::with_capacity(n + 1);
    simplex.push(Vertex {
        x: start.to_vec(),
        f: eval(start),
    });
    for axis in 0..n {
        let width = bounds.upper[axis] - bounds.lower[axis];
        let step = config.initial_step * width;
        let mut x = start.to_vec();
        x[axis] = if start[axis] + step <= bounds.upper[axis] {
            start[axis] + step
        } else {
            start[axis] - step
        };
        bounds.project(&mut x);
        let f = eval(&x);
        simplex.push(Vertex { x, f });
    }

    let along = |from: &[f64], to: &[f64], t: f64| -> Vec<f64> {
        let mut p: Vec<f64> = from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect();
        bounds.project(&mut p);
        p
    };

    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.f.total_cmp(&b.f));
        let spread = simplex[n].f - simplex[0].f;
        if spread < config.tolerance {
            converged = true;
            break;
        }
        if evaluations.get() >= config.max_evals {
            break;
        }

        let mut centroid = vec![0.0; n];
        for v in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(&v.x) {
                *c += xi / n as f64;
            }
        }
        let worst = &simplex[n];

        // centroid + t * (centroid - worst)
        let xr = along(&centroid, &worst.x, -REFLECTION);
        let fr = eval(&xr);

        if fr < simplex[0].f {
            let xe = along(&centroid, &worst.x, -EXPANSION);
            let fe = eval(&xe);
            simplex[n] = if fe < fr { Vertex { x: xe, f: fe } } else { Vertex { x: xr, f: fr } };
            continue;
        }
        if fr < simplex[n - 1].f {
            simplex[n] = Vertex { x: xr, f: fr };
            continue;
        }

        let accepted = if fr < worst.f {
            let xc = along(&centroid, &xr, CONTRACTION);
            let fc = eval(&xc);
            (fc <= fr).then_some(Vertex { x: xc, f: fc })
        } else {
            let xc = along(&centroid, &worst.x, CONTRACTION);
            let fc = eval(&xc);
            (fc < worst.f).then_some(Vertex { x: xc, f: fc })
        };
        match accepted {
            Some(v) => simplex[n] = v,
            None => {
                let best = simplex[0].x.clone();
                for v in simplex.iter_mut().skip(1) {
                    v.x = along(&best, &v.x, SHRINK);
                    v.f = eval(&v.x);
                }
            }
        }
    }

    let best = simplex.swap_remove(0);
    Ok(OptResult {
        point: best.x,
        value: best.f,
        evaluations: evaluations.get(),
        converged,
    })
}
