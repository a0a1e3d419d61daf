//! Spin-1 kinematics: measurement angles, the y-axis rotation matrix,
//! two-particle states and joint outcome probabilities under rotated
//! Stern-Gerlach analyzers.
//!
//! Basis ordering is `(+1, 0, -1)` everywhere. Two-particle amplitudes are
//! stored row-major by `(m1, m2)`, so index `3 * m1.index() + m2.index()`.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `|<psi|psi> - 1|` accepted by [`SpinState::from_amplitudes`].
pub const NORM_TOL: f64 = 1e-12;

/// A single-particle spin-1 ket in the `(+1, 0, -1)` basis.
pub type Ket = [Complex64; 3];

/// Analyzer direction in the x-z plane, stored as a finite rotation angle
/// about y in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Angle(radians))
        } else {
            Err(Error::NonFiniteAngle(radians))
        }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        if !degrees.is_finite() {
            return Err(Error::NonFiniteAngle(degrees));
        }
        Self::from_radians(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// The angle reduced to `[0, 2pi)`.
    pub fn normalized(self) -> f64 {
        let r = self.0.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU for tiny negative inputs
        if r >= TAU {
            0.0
        } else {
            r
        }
    }

    /// `self + delta`, with the sum kept finite.
    pub fn shifted(self, delta: f64) -> Result<Self> {
        Self::from_radians(self.0 + delta)
    }
}

/// Spin projection quantum number of one particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Up,
    Zero,
    Down,
}

impl Outcome {
    pub const ALL: [Outcome; 3] = [Outcome::Up, Outcome::Zero, Outcome::Down];

    /// Row/column index: `+1 -> 0`, `0 -> 1`, `-1 -> 2`.
    pub fn index(self) -> usize {
        match self {
            Outcome::Up => 0,
            Outcome::Zero => 1,
            Outcome::Down => 2,
        }
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn quantum_number(self) -> i8 {
        match self {
            Outcome::Up => 1,
            Outcome::Zero => 0,
            Outcome::Down => -1,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Outcome::Up => "+1",
            Outcome::Zero => "0",
            Outcome::Down => "-1",
        })
    }
}

/// Real 3x3 spin-1 rotation about y. Row index is the z-basis outcome,
/// column index the rotated-basis outcome, so column `m` is the rotated
/// eigenvector `|m'>` expanded in the z basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix {
    entries: [[f64; 3]; 3],
}

impl RotationMatrix {
    pub fn identity() -> Self {
        let mut entries = [[0.0; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { entries }
    }

    pub fn from_entries(entries: [[f64; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.entries
    }

    pub fn get(&self, row: Outcome, col: Outcome) -> f64 {
        self.entries[row.index()][col.index()]
    }

    pub fn column(&self, col: Outcome) -> [f64; 3] {
        let c = col.index();
        [self.entries[0][c], self.entries[1][c], self.entries[2][c]]
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Self { entries: out }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        Self { entries: out }
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `max |(D^T D - I)_ij|`.
    pub fn orthogonality_defect(&self) -> f64 {
        self.transpose().mul(self).max_abs_diff(&Self::identity())
    }
}

/// Spin-1 rotation about y by `beta`:
///
/// ```text
/// [ cos^2(b/2)   -sin b/sqrt2   sin^2(b/2) ]
/// [ sin b/sqrt2   cos b        -sin b/sqrt2 ]
/// [ sin^2(b/2)    sin b/sqrt2   cos^2(b/2) ]
/// ```
pub fn rotation_matrix(beta: Angle) -> RotationMatrix {
    let b = beta.normalized();
    let (s, c) = b.sin_cos();
    let (sh, ch) = (0.5 * b).sin_cos();
    let (cc, ss) = (ch * ch, sh * sh);
    let r = s * FRAC_1_SQRT_2;
    RotationMatrix::from_entries([[cc, -r, ss], [r, c, -r], [ss, r, cc]])
}

/// z-basis components of the eigenvector of `S(beta)` with eigenvalue `m`.
pub fn rotated_eigenvector(beta: Angle, m: Outcome) -> [f64; 3] {
    rotation_matrix(beta).column(m)
}

/// Normalized pure state of two spin-1 particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinState {
    amps: [Complex64; 9],
}

impl SpinState {
    /// Accepts amplitudes that are already unit norm within [`NORM_TOL`].
    pub fn from_amplitudes(amps: [Complex64; 9]) -> Result<Self> {
        let defect = (norm_sqr(&amps) - 1.0).abs();
        if !defect.is_finite() || defect > NORM_TOL {
            return Err(Error::NotNormalized(defect));
        }
        Ok(Self { amps })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amps: [Complex64; 9]) -> Result<Self> {
        let n = norm_sqr(&amps).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::ZeroNorm);
        }
        Ok(Self {
            amps: amps.map(|a| a / n),
        })
    }

    pub fn amplitudes(&self) -> &[Complex64; 9] {
        &self.amps
    }

    pub fn amplitude(&self, m1: Outcome, m2: Outcome) -> Complex64 {
        self.amps[pair_index(m1, m2)]
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amps)
    }

    /// Applies `D(beta) (x) D(beta)` to the amplitude vector.
    pub fn rotated_jointly(&self, beta: Angle) -> SpinState {
        let d = rotation_matrix(beta);
        let e = d.entries();
        let mut out = [Complex64::new(0.0, 0.0); 9];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..3 {
                    for l in 0..3 {
                        acc += self.amps[3 * k + l] * (e[i][k] * e[j][l]);
                    }
                }
                out[3 * i + j] = acc;
            }
        }
        SpinState { amps: out }
    }

    /// `|<self|other>|^2`.
    pub fn overlap_sqr(&self, other: &SpinState) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .norm_sqr()
    }
}

fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

pub(crate) fn pair_index(m1: Outcome, m2: Outcome) -> usize {
    3 * m1.index() + m2.index()
}

/// `(|+1,-1> - |0,0> + |-1,+1>) / sqrt 3`, the total-spin-zero state.
pub fn singlet_state() -> SpinState {
    let a = 1.0 / 3f64.sqrt();
    let mut amps = [Complex64::new(0.0, 0.0); 9];
    amps[pair_index(Outcome::Up, Outcome::Down)] = Complex64::new(a, 0.0);
    amps[pair_index(Outcome::Zero, Outcome::Zero)] = Complex64::new(-a, 0.0);
    amps[pair_index(Outcome::Down, Outcome::Up)] = Complex64::new(a, 0.0);
    SpinState { amps }
}

/// Normalized tensor product `ket1 (x) ket2`.
pub fn product_state(ket1: &Ket, ket2: &Ket) -> Result<SpinState> {
    let k1 = normalize_ket(ket1)?;
    let k2 = normalize_ket(ket2)?;
    let mut amps = [Complex64::new(0.0, 0.0); 9];
    for i in 0..3 {
        for j in 0..3 {
            amps[3 * i + j] = k1[i] * k2[j];
        }
    }
    SpinState::normalized(amps)
}

pub fn normalize_ket(ket: &Ket) -> Result<Ket> {
    let n = norm_sqr(ket).sqrt();
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::ZeroNorm);
    }
    Ok(ket.map(|a| a / n))
}

/// Outcome distribution of a single spin-1 particle measured along `beta`.
pub fn outcome_distribution(ket: &Ket, beta: Angle) -> Result<[f64; 3]> {
    let k = normalize_ket(ket)?;
    let d = rotation_matrix(beta);
    Ok(Outcome::ALL.map(|m| {
        let v = d.column(m);
        (0..3)
            .map(|j| k[j] * v[j])
            .sum::<Complex64>()
            .norm_sqr()
            .clamp(0.0, 1.0)
    }))
}

/// Amplitudes `<m1'| (x) <m2'| psi>` in the product basis rotated by
/// `(beta1, beta2)`, row-major by `(m1, m2)`.
pub fn rotated_amplitudes(state: &SpinState, beta1: Angle, beta2: Angle) -> [Complex64; 9] {
    let d1 = rotation_matrix(beta1);
    let d2 = rotation_matrix(beta2);
    let (e1, e2) = (d1.entries(), d2.entries());
    let psi = state.amplitudes();
    // D1^T Psi D2, with Psi the 3x3 amplitude matrix
    let mut half = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (a, row) in half.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|j| psi[3 * j + k] * e1[j][a]).sum();
        }
    }
    let mut out = [Complex64::new(0.0, 0.0); 9];
    for a in 0..3 {
        for b in 0..3 {
            out[3 * a + b] = (0..3).map(|k| half[a][k] * e2[k][b]).sum();
        }
    }
    out
}

/// Joint outcome probabilities `P_{m1 m2}(beta1, beta2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointProbTable {
    pub beta1: Angle,
    pub beta2: Angle,
    probs: [[f64; 3]; 3],
}

impl JointProbTable {
    pub fn get(&self, m1: Outcome, m2: Outcome) -> f64 {
        self.probs[m1.index()][m2.index()]
    }

    pub fn probs(&self) -> &[[f64; 3]; 3] {
        &self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().flatten().sum()
    }

    /// `P00 + P0,-1 + P-1,0 + P-1,-1`: neither particle gives `+1`.
    pub fn not_up_block(&self) -> f64 {
        let lo = [Outcome::Zero, Outcome::Down];
        lo.iter()
            .flat_map(|&a| lo.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.get(a, b))
            .sum()
    }
}

pub fn joint_prob_table(state: &SpinState, beta1: Angle, beta2: Angle) -> JointProbTable {
    let amps = rotated_amplitudes(state, beta1, beta2);
    let mut probs = [[0.0; 3]; 3];
    for (i, row) in probs.iter_mut().enumerate() {
        for (j, p) in row.iter_mut().enumerate() {
            *p = amps[3 * i + j].norm_sqr().clamp(0.0, 1.0);
        }
    }
    JointProbTable {
        beta1,
        beta2,
        probs,
    }
}

/// Real coefficients of the singlet in the `(beta1, beta2)` rotated basis.
pub fn singlet_rotated_expansion(beta1: Angle, beta2: Angle) -> [f64; 9] {
    rotated_amplitudes(&singlet_state(), beta1, beta2).map(|a| a.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn rad(r: f64) -> Angle {
        Angle::from_radians(r).unwrap()
    }

    #[test]
    fn non_finite_angles_rejected() {
        assert!(matches!(
            Angle::from_radians(f64::NAN),
            Err(Error::NonFiniteAngle(_))
        ));
        assert!(Angle::from_degrees(f64::INFINITY).is_err());
        assert!(Angle::from_radians(f64::NEG_INFINITY).is_err());
        assert!(rad(1.0).shifted(f64::INFINITY).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        for r in [-7.5, -TAU, -1e-300, 0.0, 3.0, TAU, 1e6] {
            let n = rad(r).normalized();
            assert!((0.0..TAU).contains(&n), "{r} -> {n}");
            assert_eq!(rad(n).normalized(), n);
        }
    }

    #[test]
    fn rotation_at_zero_is_exact_identity() {
        assert_eq!(rotation_matrix(Angle::ZERO), RotationMatrix::identity());
    }

    #[test]
    fn rotation_at_pi_is_flip() {
        let d = rotation_matrix(rad(PI));
        let want =
            RotationMatrix::from_entries([[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]]);
        assert!(d.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn rotation_at_half_pi() {
        let h = FRAC_1_SQRT_2;
        let want = RotationMatrix::from_entries([[0.5, -h, 0.5], [h, 0.0, -h], [0.5, h, 0.5]]);
        let d = rotation_matrix(rad(FRAC_PI_2));
        assert!(d.max_abs_diff(&want) < 1e-12);
        assert!(d.orthogonality_defect() < 1e-12);
    }

    #[test]
    fn rotated_eigenvector_examples() {
        assert_eq!(
            rotated_eigenvector(Angle::ZERO, Outcome::Up),
            [1.0, 0.0, 0.0]
        );
        let v = rotated_eigenvector(rad(PI), Outcome::Up);
        for (a, b) in v.iter().zip([0.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        let v = rotated_eigenvector(rad(FRAC_PI_2), Outcome::Zero);
        for (a, b) in v.iter().zip([-FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_amplitudes() {
        let s = singlet_state();
        let a = 1.0 / 3f64.sqrt();
        assert_eq!(s.amplitude(Outcome::Zero, Outcome::Zero), c(-a));
        assert_eq!(s.amplitude(Outcome::Up, Outcome::Up), c(0.0));
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn product_state_examples() {
        let z = c(0.0);
        let s = product_state(&[c(1.0), z, z], &[z, z, c(1.0)]).unwrap();
        for m1 in Outcome::ALL {
            for m2 in Outcome::ALL {
                let want = if (m1, m2) == (Outcome::Up, Outcome::Down) {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(s.amplitude(m1, m2), c(want));
            }
        }

        let s = product_state(&[c(2.0), z, z], &[z, c(2.0), z]).unwrap();
        assert!((s.amplitude(Outcome::Up, Outcome::Zero) - c(1.0)).norm() < 1e-15);

        let h = FRAC_1_SQRT_2;
        let s = product_state(&[c(h), c(h), z], &[c(1.0), z, z]).unwrap();
        assert!((s.amplitude(Outcome::Up, Outcome::Up) - c(h)).norm() < 1e-15);
        assert!((s.amplitude(Outcome::Zero, Outcome::Up) - c(h)).norm() < 1e-15);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_norm_ket_rejected() {
        let z = c(0.0);
        assert_eq!(
            product_state(&[z; 3], &[c(1.0), z, z]),
            Err(Error::ZeroNorm)
        );
        assert_eq!(
            product_state(&[c(1.0), z, z], &[z; 3]),
            Err(Error::ZeroNorm)
        );
    }

    #[test]
    fn unnormalized_amplitudes_rejected() {
        let mut amps = [c(0.0); 9];
        amps[0] = c(1.1);
        assert!(matches!(
            SpinState::from_amplitudes(amps),
            Err(Error::NotNormalized(_))
        ));
        assert!(SpinState::normalized(amps).is_ok());
        assert_eq!(SpinState::normalized([c(0.0); 9]), Err(Error::ZeroNorm));
    }

    #[test]
    fn singlet_equal_settings_never_both_up() {
        for deg in [0.0, 33.0, 147.7, 270.0, -1000.0] {
            let b = Angle::from_degrees(deg).unwrap();
            let t = joint_prob_table(&singlet_state(), b, b);
            assert!(t.get(Outcome::Up, Outcome::Up) < 1e-15);
        }
    }

    #[test]
    fn singlet_table_at_zero() {
        let t = joint_prob_table(&singlet_state(), Angle::ZERO, Angle::ZERO);
        assert!((t.get(Outcome::Zero, Outcome::Zero) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn singlet_table_at_paper_setting() {
        // (1/3) sin^4(73.85 deg), evaluated independently
        let t = joint_prob_table(
            &singlet_state(),
            Angle::ZERO,
            Angle::from_degrees(147.7).unwrap(),
        );
        let p = t.get(Outcome::Up, Outcome::Up);
        assert!((p - 0.283_749_269_428_773_8).abs() < 1e-12);
        assert!((p - 0.28372).abs() < 1e-4);
    }

    #[test]
    fn expansion_magnitudes_at_zero_difference() {
        let r3 = 1.0 / 3f64.sqrt();
        let want = [0.0, 0.0, r3, 0.0, r3, 0.0, r3, 0.0, 0.0];
        let b = Angle::from_degrees(40.0).unwrap();
        let got = singlet_rotated_expansion(b, b);
        for (g, w) in got.iter().zip(want) {
            assert!((g.abs() - w).abs() < 1e-12);
        }
    }

    #[test]
    fn expansion_at_pi_difference() {
        let r3 = 1.0 / 3f64.sqrt();
        let got = singlet_rotated_expansion(rad(PI), Angle::ZERO);
        assert!((got[pair_index(Outcome::Up, Outcome::Up)].abs() - r3).abs() < 1e-12);
        assert!(got[pair_index(Outcome::Up, Outcome::Down)].abs() < 1e-12);
        assert!((got[pair_index(Outcome::Zero, Outcome::Zero)].abs() - r3).abs() < 1e-12);
    }

    #[test]
    fn expansion_at_half_pi_difference() {
        let (b1, b2) = (rad(FRAC_PI_2 + 0.3), rad(0.3));
        let got = singlet_rotated_expansion(b1, b2);
        let sq = got[pair_index(Outcome::Up, Outcome::Zero)].powi(2);
        assert!((sq - 1.0 / 6.0).abs() < 1e-12);
        let t = joint_prob_table(&singlet_state(), b1, b2);
        assert!((t.get(Outcome::Up, Outcome::Zero) - sq).abs() < 1e-12);
    }

    #[test]
    fn outcome_distribution_of_basis_kets() {
        let z = c(0.0);
        let b = Angle::from_degrees(70.0).unwrap();
        let up = outcome_distribution(&[c(1.0), z, z], b).unwrap();
        assert!((up[0] - (0.5 * b.radians()).cos().powi(4)).abs() < 1e-14);
        let down = outcome_distribution(&[z, z, c(1.0)], b).unwrap();
        assert!((down[0] - (0.5 * b.radians()).sin().powi(4)).abs() < 1e-14);
        assert!((down.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }
}
