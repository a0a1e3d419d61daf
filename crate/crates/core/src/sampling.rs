//! Seeded random sampling of kets, states and measurement settings.
//!
//! Pure states are drawn with independent standard normal real and imaginary
//! parts and then normalized, which is the unitarily invariant measure.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::functional::AngleConfig;
use crate::spin::{normalize_ket, Angle, Ket, SpinState};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_ket<R: Rng + ?Sized>(rng: &mut R) -> Ket {
    loop {
        let raw = [(); 3].map(|_| gaussian_complex(rng));
        if let Ok(k) = normalize_ket(&raw) {
            return k;
        }
    }
}

/// Random (generally entangled) two-particle pure state.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> SpinState {
    loop {
        let raw = [(); 9].map(|_| gaussian_complex(rng));
        if let Ok(s) = SpinState::normalized(raw) {
            return s;
        }
    }
}

/// Uniform angle in `[0, 2pi)`.
pub fn random_angle<R: Rng + ?Sized>(rng: &mut R) -> Angle {
    Angle::from_radians(rng.random_range(0.0..TAU)).expect("finite by construction")
}

pub fn random_angle_config<R: Rng + ?Sized>(rng: &mut R) -> AngleConfig {
    AngleConfig::new(
        random_angle(rng),
        random_angle(rng),
        random_angle(rng),
        random_angle(rng),
    )
}
