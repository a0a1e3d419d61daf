//! The Clauser-Horne lemma: for 0 <= x, x' <= X and 0 <= y, y' <= Y,
//! -XY <= xy - xy' + x'y + x'y' - x'Y - Xy <= 0.
//!
//! ```sh
//! cargo run -p qutrit-bell --example ch_lemma
//! ```

use qutrit_bell::functional::{ch_form_value, ch_lemma_value, ChLemmaInputs};
use rand::Rng;

fn main() {
    let mut rng = qutrit_bell::sampling::seeded_rng(1);
    let (mut lo, mut hi) = (f64::MAX, f64::MIN);
    for _ in 0..100_000 {
        let (xm, ym): (f64, f64) = (rng.random_range(0.01..=1.0), rng.random_range(0.01..=1.0));
        let i = ChLemmaInputs {
            x: rng.random_range(0.0..=xm),
            x_prime: rng.random_range(0.0..=xm),
            x_max: xm,
            y: rng.random_range(0.0..=ym),
            y_prime: rng.random_range(0.0..=ym),
            y_max: ym,
        };
        let v = ch_lemma_value(&i).unwrap() / (xm * ym);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    println!("lemma value / XY over 100000 samples: [{lo:.6}, {hi:.6}]  (bounds [-1, 0])");

    println!(
        "x=x'=y=y'=0 -> {}",
        ch_form_value(0.0, 0.0, 0.0, 0.0).unwrap()
    );
    println!(
        "x=x'=1, y=0.3 -> {}",
        ch_form_value(1.0, 1.0, 0.3, 0.9).unwrap()
    );
    println!(
        "out of box: {}",
        ch_lemma_value(&ChLemmaInputs {
            x: 2.0,
            x_prime: 0.0,
            x_max: 1.0,
            y: 0.0,
            y_prime: 0.0,
            y_max: 1.0,
        })
        .unwrap_err()
    );
}
