//! Independent oracles for the spin kinematics.
//!
//! - Wigner's factorial sum for the spin-1 small-d matrix.
//! - Outcome projectors of `n . S` with `n = (sin b, 0, cos b)`, built by
//!   Lagrange interpolation `P_m = prod_{k != m} (n.S - k) / (m - k)`, which
//!   needs neither the rotation matrix nor an eigen-solver.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;
use qutrit_bell::functional::{s_product_closed_form, s_value, AngleConfig};
use qutrit_bell::sampling::{random_angle, random_state, seeded_rng};
use qutrit_bell::spin::{
    joint_prob_table, product_state, rotation_matrix, singlet_state, Angle, Outcome, SpinState,
};
use rand::Rng;

type M3 = [[f64; 3]; 3];

fn fact(n: i32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `d^1_{row, col}(beta)` with quantum numbers `row, col in {1, 0, -1}`.
fn wigner_small_d(row: i32, col: i32, beta: f64) -> f64 {
    let j = 1;
    let (mp, m) = (row, col);
    let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    let pre = (fact(j + mp) * fact(j - mp) * fact(j + m) * fact(j - m)).sqrt();
    let mut sum = 0.0;
    for k in 0..=2 * j {
        let d = [j + m - k, k, j - k - mp, k - m + mp];
        if d.iter().any(|&x| x < 0) {
            continue;
        }
        let sign = if (k - m + mp).rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        };
        sum += sign * pre / d.iter().map(|&x| fact(x)).product::<f64>()
            * c.powi(2 * j - 2 * k + m - mp)
            * s.powi(2 * k - m + mp);
    }
    sum
}

fn quantum_number(i: usize) -> i32 {
    1 - i as i32
}

fn spin_along(beta: f64) -> M3 {
    let r = FRAC_1_SQRT_2;
    let (s, c) = beta.sin_cos();
    [[c, s * r, 0.0], [s * r, 0.0, s * r], [0.0, s * r, -c]]
}

fn mat_mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn projector(beta: f64, m: i32) -> M3 {
    let sn = spin_along(beta);
    let mut p = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for k in [1, 0, -1] {
        if k == m {
            continue;
        }
        let mut f = sn;
        for (i, row) in f.iter_mut().enumerate() {
            row[i] -= f64::from(k);
            for v in row.iter_mut() {
                *v /= f64::from(m - k);
            }
        }
        p = mat_mul(&p, &f);
    }
    p
}

/// `<psi| P_m1 (x) P_m2 |psi>` by explicit 9x9 contraction.
fn oracle_prob(state: &SpinState, b1: f64, b2: f64, m1: i32, m2: i32) -> f64 {
    let (p1, p2) = (projector(b1, m1), projector(b2, m2));
    let psi = state.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    acc += psi[3 * i + j].conj() * (p1[i][k] * p2[j][l]) * psi[3 * k + l];
                }
            }
        }
    }
    acc.re
}

#[test]
fn rotation_matrix_matches_wigner_formula() {
    let mut rng = seeded_rng(11);
    for _ in 0..500 {
        let b = random_angle(&mut rng);
        let d = rotation_matrix(b);
        for r in 0..3 {
            for c in 0..3 {
                let want = wigner_small_d(quantum_number(r), quantum_number(c), b.radians());
                assert!(
                    (d.entries()[r][c] - want).abs() < 1e-13,
                    "beta {b:?} ({r},{c})"
                );
            }
        }
    }
}

#[test]
fn half_pi_matrix_frozen_from_wigner_formula() {
    let want = [
        [0.5, -FRAC_1_SQRT_2, 0.5],
        [FRAC_1_SQRT_2, 0.0, -FRAC_1_SQRT_2],
        [0.5, FRAC_1_SQRT_2, 0.5],
    ];
    let d = rotation_matrix(Angle::from_radians(TAU / 4.0).unwrap());
    for (r, row) in want.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let w = wigner_small_d(quantum_number(r), quantum_number(c), TAU / 4.0);
            assert!((w - v).abs() < 1e-12);
            assert!((d.entries()[r][c] - v).abs() < 1e-12);
        }
    }
}

#[test]
fn rotated_eigenvectors_are_eigenvectors_of_the_rotated_spin() {
    let mut rng = seeded_rng(5);
    for _ in 0..200 {
        let b = random_angle(&mut rng);
        let sn = spin_along(b.radians());
        for m in Outcome::ALL {
            let v = rotation_matrix(b).column(m);
            let q = f64::from(m.quantum_number());
            for i in 0..3 {
                let sv: f64 = (0..3).map(|k| sn[i][k] * v[k]).sum();
                assert!((sv - q * v[i]).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn joint_tables_match_projector_oracle() {
    let mut rng = seeded_rng(21);
    for trial in 0..300 {
        let state = if trial % 3 == 0 {
            singlet_state()
        } else {
            random_state(&mut rng)
        };
        let (b1, b2) = (random_angle(&mut rng), random_angle(&mut rng));
        let t = joint_prob_table(&state, b1, b2);
        for m1 in Outcome::ALL {
            for m2 in Outcome::ALL {
                let want = oracle_prob(
                    &state,
                    b1.radians(),
                    b2.radians(),
                    i32::from(m1.quantum_number()),
                    i32::from(m2.quantum_number()),
                );
                assert!((t.get(m1, m2) - want).abs() < 1e-12);
            }
        }
    }
}

/// S for the singlet at the paper's configuration, frozen from the
/// projector oracle.
#[test]
fn frozen_singlet_values() {
    let s_oracle = |deg: [f64; 4]| {
        let r = deg.map(f64::to_radians);
        let st = singlet_state();
        let p11 = |a, b| oracle_prob(&st, a, b, 1, 1);
        let block: f64 = [(0, 0), (0, -1), (-1, 0), (-1, -1)]
            .iter()
            .map(|&(m, n)| oracle_prob(&st, r[1], r[2], m, n))
            .sum();
        p11(r[0], r[2]) - p11(r[0], r[3]) + p11(r[1], r[3]) + block
    };
    let paper = [0.0, 295.4, 147.7, 443.1];
    let frozen = 1.120_067_876_421_664;
    assert!((s_oracle(paper) - frozen).abs() < 1e-12);
    let got = s_value(&singlet_state(), &AngleConfig::from_degrees(paper).unwrap()).s;
    assert!((got - frozen).abs() < 1e-12);
    assert!((got - 1.12).abs() < 5e-3);

    assert!((s_oracle([0.0, 180.0, 90.0, 270.0]) - 0.5).abs() < 1e-12);
    assert!((s_oracle([33.0; 4]) - 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn product_closed_form_matches_oracle_for_up_down() {
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::new(0.0, 0.0);
    let st = product_state(&[one, z, z], &[z, z, one]).unwrap();
    let mut rng = seeded_rng(3);
    for _ in 0..200 {
        let r: [f64; 4] = [(); 4].map(|_| rng.random_range(0.0..TAU));
        let p11 = |a, b| oracle_prob(&st, a, b, 1, 1);
        let block: f64 = [(0, 0), (0, -1), (-1, 0), (-1, -1)]
            .iter()
            .map(|&(m, n)| oracle_prob(&st, r[1], r[2], m, n))
            .sum();
        let want = p11(r[0], r[2]) - p11(r[0], r[3]) + p11(r[1], r[3]) + block;
        let a = AngleConfig::from_radians(r).unwrap();
        assert!((s_product_closed_form(&a) - want).abs() < 1e-12);
    }
}
