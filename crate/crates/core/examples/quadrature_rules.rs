// Levenshtein 1/N-quadrature rules on S^d and their exactness.
//
// cargo run --example quadrature_rules

use lpbounds::quadrature::{build_rule, dgs_bound, lev_function, verify_exactness};

pub fn run_example() -> lpbounds::Result<()> {
    for (d, n) in [(2u32, 4u64), (2, 6), (2, 12), (3, 24), (8, 240), (8, 1000)] {
        let rule = build_rule(d, n)?;
        let defect = verify_exactness(&rule, rule.tau);
        println!(
            "d={d} N={n}: tau={} s={:.12} nodes={} mass={:.15} defect={defect:.2e}",
            rule.tau,
            rule.s,
            rule.nodes.len(),
            rule.total_mass()
        );
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            println!("    {x:>22.16} {w:>22.16e}");
        }
    }

    // the 240 minimal vectors of E8 meet the design bound for degree 7 in S^7
    println!("D(8, 7) = {}", dgs_bound(8, 7));
    println!("L(8, 1/2) = {:.12}", lev_function(8, 0.5)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quadrature example");
}
