//! Measurement-angle search: a dense scan of the one-parameter family
//! `(0, 2t, t, 3t)`, a grid plus pattern-search optimizer over all four
//! angles, and random sweeps over product states.

use std::f64::consts::TAU;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::functional::{s_value, AngleConfig};
use crate::sampling::{random_angle_config, random_ket, seeded_rng};
use crate::spin::{product_state, Angle, Ket, SpinState};

/// Default coarse grid points per axis for [`optimize_angles`].
pub const DEFAULT_GRID: usize = 12;
/// Default number of pattern-search rounds for [`optimize_angles`].
pub const DEFAULT_REFINE_ITERS: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// `(t, S)` in ascending `t`.
    pub samples: Vec<(Angle, f64)>,
    pub best_t: Angle,
    pub best_s: f64,
}

impl ScanResult {
    /// The sample whose `t` is closest to `t`.
    pub fn nearest(&self, t: Angle) -> (Angle, f64) {
        *self
            .samples
            .iter()
            .min_by(|a, b| {
                let da = (a.0.radians() - t.radians()).abs();
                let db = (b.0.radians() - t.radians()).abs();
                da.total_cmp(&db)
            })
            .expect("scan has at least two samples")
    }
}

/// Evaluates `S` along `(0, 2t, t, 3t)` at `steps` evenly spaced `t`
/// including both endpoints. Ties go to the smallest `t`.
pub fn scan_family(
    state: &SpinState,
    t_min: Angle,
    t_max: Angle,
    steps: usize,
) -> Result<ScanResult> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "steps = {steps}, need >= 2"
        )));
    }
    let (lo, hi) = (t_min.radians(), t_max.radians());
    if lo >= hi {
        return Err(Error::InvalidArgument(format!(
            "t_min {lo} must be < t_max {hi}"
        )));
    }
    let last = (steps - 1) as f64;
    let mut samples = Vec::with_capacity(steps);
    for i in 0..steps {
        let t = if i + 1 == steps {
            hi
        } else {
            lo + (hi - lo) * (i as f64 / last)
        };
        let t = Angle::from_radians(t)?;
        samples.push((t, s_value(state, &AngleConfig::family(t)).s));
    }
    let (best_t, best_s) = samples.iter().fold(
        samples[0],
        |best, &cur| if cur.1 > best.1 { cur } else { best },
    );
    Ok(ScanResult {
        samples,
        best_t,
        best_s,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Each angle reduced to `[0, 2pi)`.
    pub best_angles: AngleConfig,
    pub best_s: f64,
    pub evaluations: usize,
    /// Every accepted improvement, in order.
    pub trace: Vec<(AngleConfig, f64)>,
    /// Best value after the grid stage, then after each refinement round.
    pub round_best: Vec<f64>,
}

/// True when `D(b) (x) D(b)` leaves the state unchanged up to a phase, in
/// which case `S` depends only on angle differences.
pub fn is_rotation_invariant(state: &SpinState) -> bool {
    [0.7, 2.3, 4.1].iter().all(|&b| {
        let beta = Angle::from_radians(b).expect("finite");
        (state.overlap_sqr(&state.rotated_jointly(beta)) - 1.0).abs() < 1e-12
    })
}

fn free_axes(state: &SpinState) -> Vec<usize> {
    // beta1 is pinned for invariant states
    if is_rotation_invariant(state) {
        vec![1, 2, 3]
    } else {
        vec![0, 1, 2, 3]
    }
}

fn evaluate(state: &SpinState, angles: [f64; 4]) -> (AngleConfig, f64) {
    let cfg = AngleConfig::from_radians(angles.map(|a| a.rem_euclid(TAU)))
        .expect("finite grid angles")
        .normalized();
    (cfg, s_value(state, &cfg).s)
}

/// Coarse grid over `[0, 2pi)` on each free axis, then [`refine`] from the
/// best grid point with initial step `2pi / grid_per_axis`.
pub fn optimize_angles(
    state: &SpinState,
    grid_per_axis: usize,
    refine_iters: usize,
    seed: u64,
) -> Result<OptimizationResult> {
    if grid_per_axis < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid_per_axis = {grid_per_axis}, need >= 2"
        )));
    }
    let axes = free_axes(state);
    let h = TAU / grid_per_axis as f64;
    let total = grid_per_axis.pow(axes.len() as u32);

    let mut best: Option<(AngleConfig, f64)> = None;
    for code in 0..total {
        let mut angles = [0.0; 4];
        let mut rest = code;
        // last free axis varies fastest
        for &axis in axes.iter().rev() {
            angles[axis] = (rest % grid_per_axis) as f64 * h;
            rest /= grid_per_axis;
        }
        let cand = evaluate(state, angles);
        if best.is_none_or(|b| cand.1 > b.1) {
            best = Some(cand);
        }
    }
    let (start, _) = best.expect("grid has at least 2 points per axis");
    let mut out = refine_on_axes(state, start, h, refine_iters, seed, &axes);
    out.evaluations += total;
    Ok(out)
}

/// Derivative-free pattern search starting at `start`. Each round polls
/// `+step` then `-step` along every free axis in a seeded order, moving on
/// the first strict improvement per axis; a round without improvement
/// halves the step.
pub fn refine(
    state: &SpinState,
    start: AngleConfig,
    initial_step: f64,
    rounds: usize,
    seed: u64,
) -> Result<OptimizationResult> {
    if !(initial_step.is_finite() && initial_step > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "initial step {initial_step} must be positive"
        )));
    }
    Ok(refine_on_axes(
        state,
        start,
        initial_step,
        rounds,
        seed,
        &free_axes(state),
    ))
}

fn refine_on_axes(
    state: &SpinState,
    start: AngleConfig,
    initial_step: f64,
    rounds: usize,
    seed: u64,
    axes: &[usize],
) -> OptimizationResult {
    let mut rng = seeded_rng(seed);
    let (mut cfg, mut s) = evaluate(state, start.as_array().map(Angle::radians));
    let mut evaluations = 1;
    let mut trace = vec![(cfg, s)];
    let mut round_best = vec![s];
    let mut step = initial_step;
    let mut order = axes.to_vec();

    for _ in 0..rounds {
        order.shuffle(&mut rng);
        let mut improved = false;
        for &axis in &order {
            for sign in [1.0, -1.0] {
                let mut angles = cfg.as_array().map(Angle::radians);
                angles[axis] += sign * step;
                let cand = evaluate(state, angles);
                evaluations += 1;
                if cand.1 > s {
                    (cfg, s) = cand;
                    trace.push(cand);
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
        round_best.push(s);
    }

    OptimizationResult {
        best_angles: cfg,
        best_s: s,
        evaluations,
        trace,
        round_best,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductWitness {
    pub ket1: Ket,
    pub ket2: Ket,
    pub angles: AngleConfig,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductSweep {
    pub worst_s: f64,
    pub witness: ProductWitness,
    pub evaluations: usize,
}

/// Largest `S` found over `n_states` random pure product states, each paired
/// with `n_configs` random angle settings. The first maximizer wins ties.
pub fn product_adversarial_sweep(
    n_states: usize,
    n_configs: usize,
    seed: u64,
) -> Result<ProductSweep> {
    if n_states == 0 || n_configs == 0 {
        return Err(Error::InvalidArgument(
            "n_states and n_configs must be >= 1".into(),
        ));
    }
    let mut rng = seeded_rng(seed);
    let mut best: Option<ProductSweep> = None;
    for _ in 0..n_states {
        let ket1 = random_ket(&mut rng);
        let ket2 = random_ket(&mut rng);
        let state = product_state(&ket1, &ket2)?;
        for _ in 0..n_configs {
            let angles = random_angle_config(&mut rng);
            let s = s_value(&state, &angles).s;
            if best.is_none_or(|b| s > b.worst_s) {
                best = Some(ProductSweep {
                    worst_s: s,
                    witness: ProductWitness { ket1, ket2, angles },
                    evaluations: 0,
                });
            }
        }
    }
    let mut out = best.expect("at least one evaluation");
    out.evaluations = n_states * n_configs;
    Ok(out)
}

/// Same search restricted to the nine basis product states `|m1>|m2>` on a
/// `grid_per_axis^4` angle grid.
pub fn basis_product_sweep(grid_per_axis: usize) -> Result<ProductSweep> {
    if grid_per_axis < 1 {
        return Err(Error::InvalidArgument("grid_per_axis must be >= 1".into()));
    }
    let basis = |i: usize| {
        let mut k = [num_complex::Complex64::new(0.0, 0.0); 3];
        k[i] = num_complex::Complex64::new(1.0, 0.0);
        k
    };
    let h = TAU / grid_per_axis as f64;
    let n = grid_per_axis;
    let mut best: Option<ProductSweep> = None;
    let mut evaluations = 0;
    for i in 0..3 {
        for j in 0..3 {
            let (ket1, ket2) = (basis(i), basis(j));
            let state = product_state(&ket1, &ket2)?;
            for code in 0..n.pow(4) {
                let angles = [
                    code % n,
                    (code / n) % n,
                    (code / n / n) % n,
                    code / n / n / n,
                ]
                .map(|k| k as f64 * h);
                let angles = AngleConfig::from_radians(angles)?;
                let s = s_value(&state, &angles).s;
                evaluations += 1;
                if best.is_none_or(|b| s > b.worst_s) {
                    best = Some(ProductSweep {
                        worst_s: s,
                        witness: ProductWitness { ket1, ket2, angles },
                        evaluations: 0,
                    });
                }
            }
        }
    }
    let mut out = best.expect("nine states");
    out.evaluations = evaluations;
    Ok(out)
}
