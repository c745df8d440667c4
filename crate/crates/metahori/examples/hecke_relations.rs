//! The quadratic, braid and Bernstein relations of the vector operators.

use metahori::verify;

fn main() {
    let r = verify::hecke(&[(2, 3), (3, 3)], 1);
    println!("Hecke relations: {} checked, {} failures", r.checked, r.failures.len());
    let r = verify::tau_unitarity(&[(2, 2), (3, 2)]);
    println!("scattering unitarity: {} checked, {} failures", r.checked, r.failures.len());
}
