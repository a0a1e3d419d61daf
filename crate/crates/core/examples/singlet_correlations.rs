//! Joint outcome probabilities of the spin-1 singlet and its expansion in a
//! rotated product basis.
//!
//! ```sh
//! cargo run -p qutrit-bell --example singlet_correlations -- 0 147.7
//! ```

use qutrit_bell::spin::{
    joint_prob_table, singlet_rotated_expansion, singlet_state, Angle, Outcome,
};

fn main() {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("angle in degrees"))
        .collect();
    let (b1, b2) = match args[..] {
        [a, b] => (a, b),
        _ => (0.0, 147.7),
    };
    let (beta1, beta2) = (
        Angle::from_degrees(b1).unwrap(),
        Angle::from_degrees(b2).unwrap(),
    );

    let table = joint_prob_table(&singlet_state(), beta1, beta2);
    println!("P(m1, m2) at beta1 = {b1} deg, beta2 = {b2} deg");
    print!("        ");
    for m2 in Outcome::ALL {
        print!("{m2:>12}");
    }
    println!();
    for m1 in Outcome::ALL {
        print!("{m1:>6}  ");
        for m2 in Outcome::ALL {
            print!("{:>12.8}", table.get(m1, m2));
        }
        println!();
    }
    println!("sum = {:.15}", table.total());

    let f = (0.5 * (beta1.radians() - beta2.radians())).sin().powi(4);
    println!(
        "P(+1,+1) = {:.12}   sin^4(d/2)/3 = {:.12}",
        table.get(Outcome::Up, Outcome::Up),
        f / 3.0
    );
    println!(
        "no +1 block = {:.12}   (1 + sin^4(d/2))/3 = {:.12}",
        table.not_up_block(),
        (1.0 + f) / 3.0
    );

    println!("singlet coefficients in the rotated basis:");
    let c = singlet_rotated_expansion(beta1, beta2);
    for (i, m1) in Outcome::ALL.iter().enumerate() {
        println!(
            "    {m1:>2}: {:+.8} {:+.8} {:+.8}",
            c[3 * i],
            c[3 * i + 1],
            c[3 * i + 2]
        );
    }
}
