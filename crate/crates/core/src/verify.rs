//! Randomized invariant checks behind the `verify` command.
//!
//! Every check draws from one seeded generator so a run is reproducible;
//! each reports the worst deviation it saw next to the tolerance it was held
//! to.

use std::f64::consts::TAU;

use rand::Rng;

use crate::functional::{
    ch_form_value, ch_lemma_value, s_product_closed_form, s_singlet_closed_form, s_value,
    AngleConfig, ChLemmaInputs,
};
use crate::lhv::{classical_bound, lhv_s_value, random_lhv_model};
use crate::sampling::{random_angle, random_angle_config, random_state, seeded_rng, SeededRng};
use crate::spin::{
    joint_prob_table, rotation_matrix, singlet_rotated_expansion, singlet_state, Angle, Outcome,
    RotationMatrix,
};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed deviation (or the checked value, for bound checks).
    pub observed: f64,
    pub tolerance: f64,
    pub samples: usize,
}

fn check(name: &'static str, observed: f64, tolerance: f64, samples: usize) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: observed <= tolerance,
        observed,
        tolerance,
        samples,
    }
}

/// Largest sample; a NaN sample poisons the result so the check fails.
fn worst<F: FnMut(&mut SeededRng) -> f64>(rng: &mut SeededRng, n: usize, mut f: F) -> f64 {
    (0..n)
        .map(|_| f(rng))
        .fold(0.0, |acc, v| if v.is_nan() || v > acc { v } else { acc })
}

fn sin4_half(x: f64) -> f64 {
    (0.5 * x).sin().powi(4)
}

pub fn rotation_orthogonality(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let w = worst(rng, n, |r| {
        rotation_matrix(random_angle(r)).orthogonality_defect()
    });
    check("rotation_orthogonality", w, 1e-12, n)
}

pub fn rotation_determinant(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let w = worst(rng, n, |r| {
        (rotation_matrix(random_angle(r)).determinant() - 1.0).abs()
    });
    check("rotation_determinant", w, 1e-12, n)
}

pub fn rotation_composition(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let w = worst(rng, n, |r| {
        let (a, b) = (random_angle(r), random_angle(r));
        let sum = Angle::from_radians(a.radians() + b.radians()).expect("finite");
        rotation_matrix(a)
            .mul(&rotation_matrix(b))
            .max_abs_diff(&rotation_matrix(sum))
    });
    check("rotation_composition", w, 1e-11, n)
}

pub fn rotation_identity() -> CheckOutcome {
    let d = rotation_matrix(Angle::ZERO).max_abs_diff(&RotationMatrix::identity());
    check("rotation_identity_at_zero", d, 0.0, 1)
}

pub fn singlet_rotational_invariance(rng: &mut SeededRng) -> CheckOutcome {
    let n = 100;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let rotated = singlet.rotated_jointly(random_angle(r));
        rotated
            .amplitudes()
            .iter()
            .zip(singlet.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    });
    check("singlet_rotational_invariance", w, 1e-12, n)
}

pub fn table_normalization(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let w = worst(rng, n, |r| {
        let state = random_state(r);
        let t = joint_prob_table(&state, random_angle(r), random_angle(r));
        let min = t.probs().iter().flatten().copied().fold(f64::MAX, f64::min);
        // a negative entry beyond -1e-14 fails regardless of the sum
        if min < -1e-14 {
            f64::INFINITY
        } else {
            (t.total() - 1.0).abs()
        }
    });
    check("table_normalization", w, 1e-12, n)
}

pub fn singlet_p11_closed_form(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let (a, b) = (random_angle(r), random_angle(r));
        let p = joint_prob_table(&singlet, a, b).get(Outcome::Up, Outcome::Up);
        (p - sin4_half(a.radians() - b.radians()) / 3.0).abs()
    });
    check("singlet_p11_closed_form", w, 1e-12, n)
}

pub fn singlet_block_identity(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let (a, b) = (random_angle(r), random_angle(r));
        let block = joint_prob_table(&singlet, a, b).not_up_block();
        (block - (1.0 + sin4_half(a.radians() - b.radians())) / 3.0).abs()
    });
    check("singlet_block_identity", w, 1e-12, n)
}

pub fn expansion_consistency(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let (a, b) = (random_angle(r), random_angle(r));
        let coeffs = singlet_rotated_expansion(a, b);
        let t = joint_prob_table(&singlet, a, b);
        t.probs()
            .iter()
            .flatten()
            .zip(coeffs)
            .map(|(p, c)| (p - c * c).abs())
            .fold(0.0, f64::max)
    });
    check("expansion_consistency", w, 1e-12, n)
}

pub fn singlet_s_closed_form(rng: &mut SeededRng) -> CheckOutcome {
    let n = 10_000;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let a = random_angle_config(r);
        (s_singlet_closed_form(&a) - s_value(&singlet, &a).s).abs()
    });
    check("singlet_s_closed_form", w, 1e-12, n)
}

pub fn singlet_translation_invariance(rng: &mut SeededRng) -> CheckOutcome {
    let n = 1000;
    let singlet = singlet_state();
    let w = worst(rng, n, |r| {
        let a = random_angle_config(r);
        let shifted = a.shifted(r.random_range(0.0..TAU)).expect("finite");
        (s_value(&singlet, &a).s - s_value(&singlet, &shifted).s).abs()
    });
    check("singlet_translation_invariance", w, 1e-12, n)
}

pub fn product_closed_form_bound(rng: &mut SeededRng) -> CheckOutcome {
    let n = 10_000;
    let max = (0..n)
        .map(|_| s_product_closed_form(&random_angle_config(rng)))
        .fold(f64::MIN, f64::max);
    check("product_closed_form_bound", max - 1.0, 1e-12, n)
}

/// `S` for `|+1>|-1>` equals the lemma form at `x = cos^4(b1/2)`,
/// `x' = cos^4(b1'/2)`, `y = sin^4(b2/2)`, `y' = sin^4(b2'/2)`.
pub fn product_substitution_identity(rng: &mut SeededRng) -> CheckOutcome {
    let n = 10_000;
    let w = worst(rng, n, |r| {
        let a = random_angle_config(r);
        let [b1, b1p, b2, b2p] = a.as_array().map(Angle::radians);
        let c4 = |x: f64| (0.5 * x).cos().powi(4);
        let form = ch_form_value(c4(b1), c4(b1p), sin4_half(b2), sin4_half(b2p))
            .expect("fourth powers lie in [0, 1]");
        (s_product_closed_form(&a) - form).abs()
    });
    check("product_substitution_identity", w, 1e-12, n)
}

/// Random in-box samples stay in `[-XY, 0]`; on the 16 vertices the maximum
/// is exactly 0 and the minimum exactly `-XY`.
pub fn ch_lemma_bounds(rng: &mut SeededRng) -> CheckOutcome {
    let n = 100_000;
    let mut w: f64 = 0.0;
    for _ in 0..n {
        let (xm, ym) = (r_unit(rng), r_unit(rng));
        let i = ChLemmaInputs {
            x: rng.random_range(0.0..=xm),
            x_prime: rng.random_range(0.0..=xm),
            x_max: xm,
            y: rng.random_range(0.0..=ym),
            y_prime: rng.random_range(0.0..=ym),
            y_max: ym,
        };
        let v = ch_lemma_value(&i).expect("in box");
        w = w.max(v).max(-xm * ym - v);
    }
    for _ in 0..100 {
        let (xm, ym) = (r_unit(rng), r_unit(rng));
        let (mut lo, mut hi) = (f64::MAX, f64::MIN);
        for code in 0..16u32 {
            let pick = |bit: u32, top: f64| if code & (1 << bit) != 0 { top } else { 0.0 };
            let v = ch_lemma_value(&ChLemmaInputs {
                x: pick(0, xm),
                x_prime: pick(1, xm),
                x_max: xm,
                y: pick(2, ym),
                y_prime: pick(3, ym),
                y_max: ym,
            })
            .expect("vertex");
            lo = lo.min(v);
            hi = hi.max(v);
        }
        w = w.max(hi.abs()).max((lo + xm * ym).abs());
    }
    check("ch_lemma_bounds", w, 1e-12, n + 1600)
}

/// Uniform on `(0, 1]`.
fn r_unit(rng: &mut SeededRng) -> f64 {
    1.0 - rng.random_range(0.0..1.0)
}

pub fn lhv_exhaustive_bound() -> CheckOutcome {
    let b = classical_bound();
    let defect = f64::from((b.exact_max - 1).abs());
    check("lhv_exhaustive_bound", defect, 0.0, 256)
}

pub fn lhv_mixture_bound(rng: &mut SeededRng) -> CheckOutcome {
    let n = 10_000;
    let max = (0..n)
        .map(|_| {
            let k = rng.random_range(1..=16);
            let model = random_lhv_model(rng.random(), k).expect("k >= 1");
            lhv_s_value(&model)
        })
        .fold(f64::MIN, f64::max);
    check("lhv_mixture_bound", max - 1.0, 1e-12, n)
}

pub fn paper_violation() -> CheckOutcome {
    let a = AngleConfig::from_degrees([0.0, 295.4, 147.7, 443.1]).expect("finite");
    let s = s_value(&singlet_state(), &a).s;
    check("singlet_violation_at_147_7_deg", (s - 1.12).abs(), 5e-3, 1)
}

/// Runs every check in a fixed order from one seeded generator.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    let mut rng = seeded_rng(seed);
    let r = &mut rng;
    vec![
        rotation_identity(),
        rotation_orthogonality(r),
        rotation_determinant(r),
        rotation_composition(r),
        singlet_rotational_invariance(r),
        table_normalization(r),
        singlet_p11_closed_form(r),
        singlet_block_identity(r),
        expansion_consistency(r),
        singlet_s_closed_form(r),
        singlet_translation_invariance(r),
        product_closed_form_bound(r),
        product_substitution_identity(r),
        ch_lemma_bounds(r),
        lhv_exhaustive_bound(),
        lhv_mixture_bound(r),
        paper_violation(),
    ]
}
