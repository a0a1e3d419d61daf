//! Product states never exceed S = 1: the closed form for |+1>|-1>, a
//! random sweep over pure product states, and the basis states on a grid.
//!
//! ```sh
//! cargo run -p qutrit-bell --example product_states
//! ```

use qutrit_bell::functional::{s_product_closed_form, AngleConfig};
use qutrit_bell::lhv::{lhv_s_value, LhvModel};
use qutrit_bell::optimizer::{basis_product_sweep, product_adversarial_sweep};

fn main() {
    for deg in [
        [90.0; 4],
        [0.0, 180.0, 0.0, 0.0],
        [0.0, 295.4, 147.7, 443.1],
    ] {
        let a = AngleConfig::from_degrees(deg).unwrap();
        println!("|+1>|-1> at {deg:?}: S = {:.10}", s_product_closed_form(&a));
    }

    let sweep = product_adversarial_sweep(1000, 100, 7).unwrap();
    let w = sweep.witness;
    println!(
        "random sweep ({} evaluations): max S = {:.10} at {:?} deg",
        sweep.evaluations,
        sweep.worst_s,
        w.angles.to_degrees()
    );
    let model = LhvModel::from_product_kets(&w.ket1, &w.ket2, &w.angles).unwrap();
    println!(
        "  the same statistics as a local model: S = {:.10}",
        lhv_s_value(&model)
    );

    let basis = basis_product_sweep(8).unwrap();
    println!(
        "basis states on an 8^4 grid: max S = {:.10} at {:?} deg",
        basis.worst_s,
        basis.witness.angles.to_degrees()
    );
}
