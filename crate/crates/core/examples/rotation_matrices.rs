//! Spin-1 rotation matrices and rotated eigenvectors.
//!
//! ```sh
//! cargo run -p qutrit-bell --example rotation_matrices
//! ```

use qutrit_bell::spin::{rotated_eigenvector, rotation_matrix, Angle, Outcome};

fn main() {
    for deg in [0.0, 90.0, 147.7, 180.0] {
        let beta = Angle::from_degrees(deg).unwrap();
        let d = rotation_matrix(beta);
        println!(
            "D({deg} deg)   det = {:+.12}   |D^T D - I| = {:.1e}",
            d.determinant(),
            d.orthogonality_defect()
        );
        for row in d.entries() {
            println!("    [{:+.6} {:+.6} {:+.6}]", row[0], row[1], row[2]);
        }
        for m in Outcome::ALL {
            let v = rotated_eigenvector(beta, m);
            println!("    |{m}'> = ({:+.6}, {:+.6}, {:+.6})", v[0], v[1], v[2]);
        }
    }

    let (a, b) = (
        Angle::from_degrees(50.0).unwrap(),
        Angle::from_degrees(75.0).unwrap(),
    );
    let sum = Angle::from_degrees(125.0).unwrap();
    let err = rotation_matrix(a)
        .mul(&rotation_matrix(b))
        .max_abs_diff(&rotation_matrix(sum));
    println!("D(50) D(75) vs D(125): {err:.1e}");
}
