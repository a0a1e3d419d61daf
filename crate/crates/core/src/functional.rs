//! The four-setting functional
//!
//! ```text
//! S = P11(b1, b2) - P11(b1, b2') + P11(b1', b2') + [P00 + P0,-1 + P-1,0 + P-1,-1](b1', b2)
//! ```
//!
//! which every local hidden variable model keeps at or below 1, together with
//! closed forms for the singlet and for the `|+1>|-1>` product state and the
//! Clauser-Horne algebraic lemma the bound rests on.

use crate::error::{Error, Result};
use crate::spin::{joint_prob_table, Angle, Outcome, SpinState};

/// The four analyzer angles `(b1, b1', b2, b2')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleConfig {
    pub beta1: Angle,
    pub beta1_prime: Angle,
    pub beta2: Angle,
    pub beta2_prime: Angle,
}

impl AngleConfig {
    pub fn new(beta1: Angle, beta1_prime: Angle, beta2: Angle, beta2_prime: Angle) -> Self {
        Self {
            beta1,
            beta1_prime,
            beta2,
            beta2_prime,
        }
    }

    /// Angles in the order `[b1, b1', b2, b2']`, in degrees.
    pub fn from_degrees(deg: [f64; 4]) -> Result<Self> {
        Ok(Self::new(
            Angle::from_degrees(deg[0])?,
            Angle::from_degrees(deg[1])?,
            Angle::from_degrees(deg[2])?,
            Angle::from_degrees(deg[3])?,
        ))
    }

    pub fn from_radians(rad: [f64; 4]) -> Result<Self> {
        Ok(Self::new(
            Angle::from_radians(rad[0])?,
            Angle::from_radians(rad[1])?,
            Angle::from_radians(rad[2])?,
            Angle::from_radians(rad[3])?,
        ))
    }

    /// The one-parameter family `b1 = 0, b1' = 2t, b2 = t, b2' = 3t`.
    pub fn family(t: Angle) -> Self {
        let r = t.radians();
        Self::from_radians([0.0, 2.0 * r, r, 3.0 * r]).expect("multiples of a finite angle")
    }

    pub fn as_array(&self) -> [Angle; 4] {
        [self.beta1, self.beta1_prime, self.beta2, self.beta2_prime]
    }

    pub fn from_array(a: [Angle; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_degrees(&self) -> [f64; 4] {
        self.as_array().map(Angle::degrees)
    }

    /// Every angle rotated by the same `delta`.
    pub fn shifted(&self, delta: f64) -> Result<Self> {
        Ok(Self::new(
            self.beta1.shifted(delta)?,
            self.beta1_prime.shifted(delta)?,
            self.beta2.shifted(delta)?,
            self.beta2_prime.shifted(delta)?,
        ))
    }

    /// Each angle reduced to `[0, 2pi)`.
    pub fn normalized(&self) -> Self {
        Self::from_array(
            self.as_array()
                .map(|a| Angle::from_radians(a.normalized()).expect("finite")),
        )
    }
}

/// The terms of `S`. `p11_b` is stored as a probability and enters `s` with
/// a minus sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SBreakdown {
    pub p11_a: f64,
    pub p11_b: f64,
    pub p11_c: f64,
    pub block: f64,
    pub s: f64,
}

impl SBreakdown {
    pub fn from_terms(p11_a: f64, p11_b: f64, p11_c: f64, block: f64) -> Self {
        Self {
            p11_a,
            p11_b,
            p11_c,
            block,
            s: p11_a - p11_b + p11_c + block,
        }
    }

    /// True when the local bound `S <= 1` is exceeded.
    pub fn violates_local_bound(&self) -> bool {
        self.s > 1.0
    }
}

/// Evaluates `S` from full joint probability tables of `state`.
pub fn s_value(state: &SpinState, angles: &AngleConfig) -> SBreakdown {
    let up = Outcome::Up;
    let t_a = joint_prob_table(state, angles.beta1, angles.beta2);
    let t_b = joint_prob_table(state, angles.beta1, angles.beta2_prime);
    let t_c = joint_prob_table(state, angles.beta1_prime, angles.beta2_prime);
    let t_block = joint_prob_table(state, angles.beta1_prime, angles.beta2);
    SBreakdown::from_terms(
        t_a.get(up, up),
        t_b.get(up, up),
        t_c.get(up, up),
        t_block.not_up_block().clamp(0.0, 1.0),
    )
}

fn sin4_half(x: f64) -> f64 {
    (0.5 * x.rem_euclid(std::f64::consts::TAU)).sin().powi(4)
}

fn cos4_half(x: f64) -> f64 {
    (0.5 * x.rem_euclid(std::f64::consts::TAU)).cos().powi(4)
}

/// `S` for the singlet from `P11 = sin^4(d/2)/3` and
/// `block = (1 + sin^4(d/2))/3`, where `d` is the angle difference.
pub fn s_singlet_closed_form(angles: &AngleConfig) -> f64 {
    let [b1, b1p, b2, b2p] = angles.as_array().map(Angle::radians);
    let f = |x: f64| sin4_half(x);
    (f(b1 - b2) - f(b1 - b2p) + f(b1p - b2p) + 1.0 + f(b1p - b2)) / 3.0
}

/// `S` for the product state `|+1> (x) |-1>`:
///
/// ```text
/// cos^4(b1/2) sin^4(b2/2) - cos^4(b1/2) sin^4(b2'/2) + cos^4(b1'/2) sin^4(b2'/2)
///     + (1 - cos^4(b1'/2)) (1 - sin^4(b2/2))
/// ```
pub fn s_product_closed_form(angles: &AngleConfig) -> f64 {
    let [b1, b1p, b2, b2p] = angles.as_array().map(Angle::radians);
    let (x, xp) = (cos4_half(b1), cos4_half(b1p));
    let (y, yp) = (sin4_half(b2), sin4_half(b2p));
    x * y - x * yp + xp * yp + (1.0 - xp) * (1.0 - y)
}

/// Inputs of the Clauser-Horne lemma: `0 <= x, x' <= X` and `0 <= y, y' <= Y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChLemmaInputs {
    pub x: f64,
    pub x_prime: f64,
    pub x_max: f64,
    pub y: f64,
    pub y_prime: f64,
    pub y_max: f64,
}

impl ChLemmaInputs {
    pub fn validate(&self) -> Result<()> {
        let boxed = [
            ("x", self.x, self.x_max),
            ("x_prime", self.x_prime, self.x_max),
            ("y", self.y, self.y_max),
            ("y_prime", self.y_prime, self.y_max),
        ];
        for (name, value, hi) in boxed {
            if !(value.is_finite() && hi.is_finite() && (0.0..=hi).contains(&value)) {
                return Err(Error::OutOfRange {
                    name,
                    value,
                    lo: 0.0,
                    hi,
                });
            }
        }
        Ok(())
    }
}

/// `xy - xy' + x'y + x'y' - x'Y - Xy`, which lies in `[-XY, 0]`.
pub fn ch_lemma_value(inputs: &ChLemmaInputs) -> Result<f64> {
    inputs.validate()?;
    let ChLemmaInputs {
        x,
        x_prime,
        x_max,
        y,
        y_prime,
        y_max,
    } = *inputs;
    Ok(x * y - x * y_prime + x_prime * y + x_prime * y_prime - x_prime * y_max - x_max * y)
}

/// `xy - xy' + x'y' + (1 - x')(1 - y)`, bounded above by 1 on `[0, 1]^4`.
pub fn ch_form_value(x: f64, x_prime: f64, y: f64, y_prime: f64) -> Result<f64> {
    for (name, value) in [
        ("x", x),
        ("x_prime", x_prime),
        ("y", y),
        ("y_prime", y_prime),
    ] {
        if !(value.is_finite() && (0.0..=1.0).contains(&value)) {
            return Err(Error::OutOfRange {
                name,
                value,
                lo: 0.0,
                hi: 1.0,
            });
        }
    }
    Ok(x * y - x * y_prime + x_prime * y_prime + (1.0 - x_prime) * (1.0 - y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{product_state, singlet_state};
    use num_complex::Complex64;

    fn deg(a: [f64; 4]) -> AngleConfig {
        AngleConfig::from_degrees(a).unwrap()
    }

    #[test]
    fn paper_configuration_violates() {
        let b = s_value(&singlet_state(), &deg([0.0, 295.4, 147.7, 443.1]));
        assert!((b.s - 1.12).abs() < 5e-3, "{}", b.s);
        assert!(b.violates_local_bound());
        assert!((b.s - (b.p11_a - b.p11_b + b.p11_c + b.block)).abs() < 1e-14);
        assert!((s_singlet_closed_form(&deg([0.0, 295.4, 147.7, 443.1])) - 1.12).abs() < 5e-3);
    }

    #[test]
    fn equal_angles_give_one_third() {
        let a = deg([57.0; 4]);
        assert!((s_value(&singlet_state(), &a).s - 1.0 / 3.0).abs() < 1e-12);
        assert!((s_singlet_closed_form(&a) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn family_at_ninety_degrees() {
        let t = Angle::from_degrees(90.0).unwrap();
        let a = AngleConfig::family(t);
        // (1/3)[1 + 3 sin^4(45) - sin^4(135)] = 0.5
        assert!((s_value(&singlet_state(), &a).s - 0.5).abs() < 1e-12);
        assert!((s_singlet_closed_form(&deg([0.0, 180.0, 90.0, 270.0])) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn product_closed_form_examples() {
        for b2 in [0.0, 30.0, 147.7, 300.0] {
            let a = deg([0.0, 0.0, b2, 211.0]);
            let want = (0.5 * b2.to_radians()).sin().powi(4);
            assert!((s_product_closed_form(&a) - want).abs() < 1e-14);
        }
        assert!((s_product_closed_form(&deg([90.0; 4])) - 0.625).abs() < 1e-12);
        assert!((s_product_closed_form(&deg([0.0, 180.0, 0.0, 0.0])) - 1.0).abs() < 1e-15);
        assert!((s_product_closed_form(&deg([180.0, 180.0, 0.0, 90.0])) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn product_closed_form_matches_up_down_state() {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        let state = product_state(&[o, z, z], &[z, z, o]).unwrap();
        for a in [
            [0.0, 180.0, 0.0, 90.0],
            [12.0, 77.0, 301.0, 145.0],
            [90.0; 4],
        ] {
            let a = deg(a);
            assert!((s_value(&state, &a).s - s_product_closed_form(&a)).abs() < 1e-12);
        }
    }

    #[test]
    fn ch_lemma_examples() {
        let v = |x, xp, y, yp| {
            ch_lemma_value(&ChLemmaInputs {
                x,
                x_prime: xp,
                x_max: 1.0,
                y,
                y_prime: yp,
                y_max: 1.0,
            })
            .unwrap()
        };
        assert_eq!(v(1.0, 1.0, 1.0, 1.0), 0.0);
        assert_eq!(v(1.0, 0.0, 1.0, 0.0), 0.0);
        assert_eq!(v(0.0, 1.0, 0.0, 0.0), -1.0);
    }

    #[test]
    fn ch_lemma_rejects_out_of_box() {
        let mut i = ChLemmaInputs {
            x: 0.5,
            x_prime: 0.5,
            x_max: 0.4,
            y: 0.1,
            y_prime: 0.1,
            y_max: 1.0,
        };
        assert!(matches!(
            ch_lemma_value(&i),
            Err(Error::OutOfRange { name: "x", .. })
        ));
        i.x_max = 1.0;
        i.y_prime = -0.1;
        assert!(ch_lemma_value(&i).is_err());
        i.y_prime = f64::NAN;
        assert!(ch_lemma_value(&i).is_err());
    }

    #[test]
    fn ch_form_examples() {
        for y in [0.0, 0.3, 1.0] {
            assert!((ch_form_value(1.0, 1.0, y, 0.7).unwrap() - y).abs() < 1e-15);
        }
        assert_eq!(ch_form_value(0.0, 0.0, 0.0, 0.0).unwrap(), 1.0);
        assert!((ch_form_value(0.25, 0.25, 0.25, 0.25).unwrap() - 0.625).abs() < 1e-15);
        assert!(ch_form_value(1.2, 0.0, 0.0, 0.0).is_err());
        assert!(ch_form_value(0.0, 0.0, -0.01, 0.0).is_err());
    }

    #[test]
    fn periodic_angle_differences_need_no_special_case() {
        let a = deg([0.0, 720.0, 360.0, -360.0]);
        assert!((s_value(&singlet_state(), &a).s - 1.0 / 3.0).abs() < 1e-12);
        assert!((s_singlet_closed_form(&a) - 1.0 / 3.0).abs() < 1e-12);
    }
}
