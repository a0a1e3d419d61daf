//! Scans S along (b1, b1', b2, b2') = (0, 2t, t, 3t) for the singlet and
//! prints `t_deg,s_value` CSV on stdout.
//!
//! ```sh
//! cargo run -p qutrit-bell --example family_scan > scan.csv
//! ```

use qutrit_bell::optimizer::scan_family;
use qutrit_bell::spin::{singlet_state, Angle};

fn main() {
    let scan = scan_family(
        &singlet_state(),
        Angle::from_degrees(0.0).unwrap(),
        Angle::from_degrees(360.0).unwrap(),
        7201,
    )
    .unwrap();
    println!("t_deg,s_value");
    for (t, s) in &scan.samples {
        println!("{:.2},{s:.10}", t.degrees());
    }
    let (t, s) = scan.nearest(Angle::from_degrees(147.7).unwrap());
    eprintln!("S({:.2} deg) = {s:.6}", t.degrees());
    eprintln!(
        "best S = {:.9} at t = {:.2} deg",
        scan.best_s,
        scan.best_t.degrees()
    );
}
