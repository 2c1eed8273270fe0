use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::barycentric::{limit_constant, refine_fvector};
use crate::error::{Error, Result};
use crate::genfun::{dim_avg_plus, variance_plus, FVector};
use crate::rational::to_f64;

use super::enumerate::delta;
use super::random::{sample_er_indexed, ErParams};

/// One step of an iterated refinement of f-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryPoint {
    pub step: usize,
    pub fvector: FVector,
    pub dim_avg_plus: BigRational,
    pub variance_plus: BigRational,
}

/// Dim⁺ (and Var⁺) of fv, A·fv, A²·fv, …, for `steps` refinements.
pub fn refinement_trajectory(fv: &FVector, steps: usize) -> Vec<TrajectoryPoint> {
    let mut out = Vec::with_capacity(steps + 1);
    let mut current = fv.clone();
    for step in 0..=steps {
        out.push(TrajectoryPoint {
            step,
            fvector: current.clone(),
            dim_avg_plus: dim_avg_plus(&current),
            variance_plus: variance_plus(&current),
        });
        if step < steps {
            current = refine_fvector(&current);
        }
    }
    out
}

/// ln |Dim⁺ − C_d| per trajectory point, for plotting the convergence rate.
/// `-inf` where the gap is exactly zero.
pub fn log_gaps(trajectory: &[TrajectoryPoint]) -> Vec<f64> {
    let Some(first) = trajectory.first() else {
        return Vec::new();
    };
    let d = first.fvector.dim().max(0) as usize;
    let limit = limit_constant(d);
    trajectory
        .iter()
        .map(|pt| {
            let gap = &pt.dim_avg_plus - &limit;
            if gap.is_zero() {
                f64::NEG_INFINITY
            } else {
                to_f64(&gap).abs().ln()
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub p: BigRational,
    pub mean_delta: BigRational,
    pub samples: u64,
}

/// Monte-Carlo mean of δ over G(n, p) for each p in `grid`. Sample s uses the
/// random stream (seed, s) for every p, so rows are coupled across the grid.
/// Means are exact averages of exact per-sample values.
pub fn er_survey(
    n: usize,
    grid: &[BigRational],
    samples: u64,
    seed: u64,
) -> Result<Vec<SurveyRow>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    grid.iter()
        .map(|p| {
            let params = ErParams::new(n, p.clone(), seed)?;
            let total = (0..samples)
                .into_par_iter()
                .map(|s| delta(&sample_er_indexed(&params, s).whitney_complex()))
                .reduce(BigRational::zero, |a, b| a + b);
            Ok(SurveyRow {
                p: p.clone(),
                mean_delta: total / BigInt::from(samples),
                samples,
            })
        })
        .collect()
}

/// Evenly spaced grid a, a + (b−a)/steps, …, b (steps + 1 points).
pub fn rational_grid(a: &BigRational, b: &BigRational, steps: usize) -> Vec<BigRational> {
    if steps == 0 {
        return vec![a.clone()];
    }
    let h = (b - a) / BigInt::from(steps);
    (0..=steps).map(|i| a + &h * BigInt::from(i)).collect()
}
