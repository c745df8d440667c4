//! Whittaker values from the vector Demazure–Whittaker operators.

use metahori::whittaker::{self, tau_coeffs};
use metahori::Permutation;

fn main() -> metahori::Result<()> {
    let e = Permutation::identity(2);
    let s1 = Permutation::simple(2, 1);
    let base = whittaker::base_case(2, &[0, 0], &e)?;
    println!("base case:\n{base}");
    println!("T_1 base:\n{}", whittaker::apply_t(1, &base)?);
    println!("T_1^-1 base:\n{}", whittaker::apply_t_inv(1, &base)?);
    println!("phi_(0,1),s1 = {}", whittaker::evaluate(2, &[0, 1], &s1, &[0, 0], &e)?);

    let t = tau_coeffs(3, 2, 1, &[2, 0]);
    println!("tau at theta = (2,0), n = 3: diag {}, off {}", t.diag, t.off);

    let w0 = Permutation::longest(3);
    let phi = whittaker::evaluate_vector(3, &w0, &[1, 0, 0], &Permutation::identity(3))?;
    println!("phi_w0 at lambda = (1,0,0), n = 3:\n{phi}");
    Ok(())
}
