//! Certifies S <= 1 for local hidden variable models by enumerating all 256
//! deterministic strategies, then checks random mixtures and shows that the
//! bound fails once responses may sum past 1.
//!
//! ```sh
//! cargo run -p qutrit-bell --example local_bound
//! ```

use qutrit_bell::lhv::{
    classical_bound, enumerate_deterministic, lhv_s_value, random_lhv_model, relaxed_vertex_bound,
};

fn main() {
    let b = classical_bound();
    let a = b.argmax;
    println!(
        "max S over {} strategies = {} at a = ({}, {}), b = ({}, {})",
        enumerate_deterministic().len(),
        b.exact_max,
        a.a_primary,
        a.a_primed,
        a.b_primary,
        a.b_primed
    );

    let worst = (0..10_000u64)
        .map(|seed| lhv_s_value(&random_lhv_model(seed, 1 + (seed % 16) as usize).unwrap()))
        .fold(f64::MIN, f64::max);
    println!("largest S over 10000 random mixtures = {worst:.6}");

    for cap in [1.0, 1.25, 1.5, 2.0] {
        let (s, rows) = relaxed_vertex_bound(cap).unwrap();
        println!("response sums <= {cap}: max S = {s}  rows {rows:?}");
    }
}
