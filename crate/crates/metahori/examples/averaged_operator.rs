//! The averaged operator and the Chinta–Gunnells action.

use metahori::whittaker::{self, WhittakerVector};
use metahori::LaurentPoly;

fn main() -> metahori::Result<()> {
    for s in ["1", "z1", "z1^-1*z2^2"] {
        let p = LaurentPoly::parse(2, 2, s)?;
        let avg = whittaker::averaged_t(1, &p)?;
        let via_vector = whittaker::apply_t(1, &WhittakerVector::lift(&p))?.component_sum();
        println!("f = {p}");
        println!("  s1 * f = {}", whittaker::cg_star(1, &p));
        println!("  averaged T_1 f = {avg} (vector route agrees: {})", avg == via_vector);
    }
    Ok(())
}
