//! Arithmetic in the Gauss-sum coefficient ring.

use metahori::{GaussElem, GaussRing, GaussValues};
use num::BigRational;
use rand::SeedableRng;

fn main() -> metahori::Result<()> {
    let ring = GaussRing::new(3);
    let g1 = ring.gauss_symbol(1);
    let g2 = ring.gauss_symbol(2);
    println!("n = 3: g(0) = {}", ring.gauss_symbol(0));
    println!("g(1) * g(2) = {}", &g1 * &g2);
    println!("g(1)^2 = {}", g1.pow(2));
    println!("g(1)^-1 = {}", g1.invert()?);

    let x = GaussElem::parse(3, "1 + -v*g[1]^2")?;
    println!("x = {x}, x * g(2) = {}", &x * &g2);

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let vals = GaussValues::random(3, &mut rng);
    let at = x.specialize_numeric(&vals.v, &vals)?;
    println!("x at v = {}: {}", vals.v, at);

    let half = BigRational::new(1.into(), 2.into());
    println!("x / 2 = {}", x.scale(&half));
    println!("json: {}", x.to_json());
    Ok(())
}
