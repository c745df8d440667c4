//! Laurent polynomials over the coefficient ring: products, the Weyl group
//! action and exact division.

use metahori::{LaurentPoly, Permutation};

fn main() -> metahori::Result<()> {
    let p = LaurentPoly::parse(2, 3, "g[1]*z1^-1*z2 + (1 + -v)*z3^2")?;
    let q = LaurentPoly::parse(2, 3, "z1 + -z2")?;
    println!("p = {p}");
    println!("p * q = {}", &p * &q);
    println!("(p * q) / q = {}", (&p * &q).exact_div(&q)?);

    let w = Permutation::parse(3, "s1 s2")?;
    println!("w = [{w}], w p = {}", p.weyl_act(&w));

    match LaurentPoly::parse(2, 3, "z1^2 + z3")?.exact_div(&q) {
        Ok(d) => println!("unexpected quotient {d}"),
        Err(e) => println!("z1^2 + z3 by z1 - z2: {e}"),
    }
    Ok(())
}
