//! The symmetric group: reduced words, paths and almost-dominant weights.

use metahori::weyl::{almost_dominant_decompose, bruhat_path, Permutation};

fn main() -> metahori::Result<()> {
    let w = Permutation::parse(3, "3 1 2")?;
    println!("w = [{w}] = {}, length {}", w.word_string(), w.length());
    for step in bruhat_path(&Permutation::identity(3), &w0()) {
        println!("  s{} {}", step.index, if step.ascent { "up" } else { "down" });
    }
    for mu in [[2, 3, 0], [0, 0, 1], [1, 1, 1]] {
        let pair = almost_dominant_decompose(&mu);
        println!("mu = {mu:?}: w' = {}, lambda = {:?}", pair.w_prime.word_string(), pair.lambda);
    }
    Ok(())
}

fn w0() -> Permutation {
    Permutation::longest(3)
}
