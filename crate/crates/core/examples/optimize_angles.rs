//! Four-angle search: coarse grid, then pattern-search refinement.
//!
//! ```sh
//! cargo run -p qutrit-bell --example optimize_angles
//! ```

use num_complex::Complex64;
use qutrit_bell::optimizer::{optimize_angles, DEFAULT_GRID, DEFAULT_REFINE_ITERS};
use qutrit_bell::spin::{product_state, singlet_state};

fn main() {
    let r = optimize_angles(&singlet_state(), DEFAULT_GRID, DEFAULT_REFINE_ITERS, 42).unwrap();
    println!(
        "singlet: best S = {:.10} at {:?} deg",
        r.best_s,
        r.best_angles.to_degrees()
    );
    println!(
        "  {} evaluations, {} improvements",
        r.evaluations,
        r.trace.len() - 1
    );
    for (round, s) in r.round_best.iter().enumerate().step_by(5) {
        println!("  after round {round:>2}: {s:.10}");
    }

    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let up_down = product_state(&[one, zero, zero], &[zero, zero, one]).unwrap();
    let p = optimize_angles(&up_down, DEFAULT_GRID, DEFAULT_REFINE_ITERS, 42).unwrap();
    println!(
        "|+1>|-1>: best S = {:.10} at {:?} deg",
        p.best_s,
        p.best_angles.to_degrees()
    );
}
