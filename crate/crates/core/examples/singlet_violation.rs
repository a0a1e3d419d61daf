//! The singlet exceeds the local bound S <= 1 at
//! (b1, b1', b2, b2') = (0, 295.4, 147.7, 443.1) degrees.
//!
//! ```sh
//! cargo run -p qutrit-bell --example singlet_violation
//! ```

use qutrit_bell::functional::{s_singlet_closed_form, s_value, AngleConfig};
use qutrit_bell::spin::singlet_state;

fn main() {
    let angles = AngleConfig::from_degrees([0.0, 295.4, 147.7, 443.1]).unwrap();
    let b = s_value(&singlet_state(), &angles);
    println!("P11(b1, b2)   = {:.10}", b.p11_a);
    println!("P11(b1, b2')  = {:.10}  (subtracted)", b.p11_b);
    println!("P11(b1', b2') = {:.10}", b.p11_c);
    println!("block(b1', b2) = {:.10}", b.block);
    println!(
        "S = {:.10}   closed form {:.10}",
        b.s,
        s_singlet_closed_form(&angles)
    );
    println!("violates S <= 1: {}", b.violates_local_bound());
}
