//! End-to-end acceptance run: one pass/fail line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use metahori::error::polynomiality_events;
use metahori::verify;
use metahori::ybe;
use metahori::Report;

fn grid(ns: std::ops::RangeInclusive<u32>, rs: std::ops::RangeInclusive<usize>) -> Vec<(u32, usize)> {
    ns.flat_map(|n| rs.clone().map(move |r| (n, r))).collect()
}

fn line(k: usize, name: &str, t: Instant, rep: &Report) -> bool {
    let status = if rep.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {k:>2} {status} {name}: {} checked, {} failures ({:.1}s)",
        rep.checked,
        rep.failures.len(),
        t.elapsed().as_secs_f64()
    );
    for f in rep.failures.iter().take(5) {
        println!("    {}: lhs = {}, rhs = {}", f.boundary, f.lhs, f.rhs);
    }
    rep.passed()
}

fn main() -> ExitCode {
    let mut ok = true;

    let t = Instant::now();
    ok &= line(1, "ground-state law", t, &verify::ground_state(&grid(1..=3, 1..=3), 4));

    let t = Instant::now();
    let mut cases = grid(1..=2, 1..=3);
    cases.push((3, 2));
    ok &= line(2, "main theorem", t, &verify::main_theorem(&cases, 3));

    let t = Instant::now();
    let mut rep: Report = grid(1..=3, 1..=3).into_iter().map(|(n, r)| ybe::verify_aux_ybe(n, r)).collect();
    rep.merge(ybe::verify_aux_ybe_numeric(4, 4, 1000, 7));
    ok &= line(3, "auxiliary Yang-Baxter", t, &rep);

    let t = Instant::now();
    ok &= line(4, "fused RTT Yang-Baxter", t, &verify::fused_rtt(&[(2, 2), (1, 2), (2, 1)]));

    let t = Instant::now();
    let mut rep = ybe::verify_rrr(2, 2);
    rep.merge(ybe::verify_rrr_numeric(3, 2, 200, 11));
    ok &= line(5, "RRR Yang-Baxter", t, &rep);

    let t = Instant::now();
    ok &= line(6, "Hecke relations", t, &verify::hecke(&grid(1..=3, 2..=3), 3));

    let t = Instant::now();
    ok &= line(7, "scattering unitarity", t, &verify::tau_unitarity(&grid(1..=3, 2..=2)));

    let t = Instant::now();
    ok &= line(8, "fusion invariance", t, &verify::fusion(&grid(1..=3, 1..=3), 3));

    let t = Instant::now();
    ok &= line(9, "averaged operator", t, &verify::averaged(&grid(1..=3, 2..=3)));

    let events = polynomiality_events();
    let rep = Report {
        checked: 1,
        failures: if events == 0 {
            vec![]
        } else {
            vec![metahori::Failure::new("all sweeps", format!("{events} events"), "0 events")]
        },
    };
    ok &= line(10, "polynomiality guard", Instant::now(), &rep);

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
