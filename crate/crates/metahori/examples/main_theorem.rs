//! Partition functions against Whittaker values for every boundary datum.

use metahori::verify::{self, Bounds, Suite};

fn main() {
    let b = Bounds { max_n: 2, max_r: 3, max_mu: 2, ..Bounds::default() };
    for suite in [Suite::GroundState, Suite::MainTheorem, Suite::Recursion] {
        let r = verify::run(suite, &b);
        println!("{suite:>14}: {} checked, {} failures", r.checked, r.failures.len());
    }
    let r = verify::main_theorem(&[(3, 2)], 2);
    println!("main theorem at n = 3, r = 2: {} checked, {} failures", r.checked, r.failures.len());
}
