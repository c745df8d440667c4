//! R-matrix weights and the three Yang–Baxter equations.

use metahori::lattice::HSpin;
use metahori::ybe::{self, RContext, Vars};

fn main() {
    let ctx = RContext { n: 2, r: 2, c: 1, w: 1 };
    let (a, b, x) = (HSpin::Color(1), HSpin::Color(2), HSpin::Scolor(0));
    let vars = Vars::pair();
    println!("R(a,a,a,a) = {}", ybe::r_weight_mono(&ctx, vars, a, a, a, a));
    println!("R(a,b,a,b) = {}", ybe::r_weight_mono(&ctx, vars, a, b, a, b));
    println!("R(x,a,a,x) = {}", ybe::r_weight_mono(&ctx, vars, x, a, a, x));

    let report = |name: &str, r: ybe::Report| println!("{name:>24}: {} checked, {} failures", r.checked, r.failures.len());
    report("aux RTT n=r=2", ybe::verify_aux_ybe(2, 2));
    report("aux RTT n=r=3 numeric", ybe::verify_aux_ybe_numeric(3, 3, 20, 1));
    report("fused RTT n=r=2", ybe::verify_fused_rtt(2, 2));
    report("RRR n=r=2", ybe::verify_rrr(2, 2));
    report("RRR n=3 r=2 numeric", ybe::verify_rrr_numeric(3, 2, 20, 1));
}
