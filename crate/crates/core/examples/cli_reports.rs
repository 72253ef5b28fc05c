// The text reports the command-line tool writes, produced in-process.
//
// cargo run --example cli_reports

use lpbounds::energy::Potential;
use lpbounds::lattice::{theta_coefficients, Lattice, ThetaMode};
use lpbounds::quadrature::build_rule;
use lpbounds::report::{bounds_csv, BoundReport, GaussReport, UlbReport};

pub fn run_example() -> lpbounds::Result<()> {
    let reports = [BoundReport::compute(1, 2.0, 1e-10)?, BoundReport::compute(2, 4.0, 1e-10)?];
    print!("{}", bounds_csv(&reports));
    println!("{}", build_rule(2, 4)?.to_json());
    print!("{}", UlbReport::compute(2, 6, &"riesz:4".parse::<Potential>()?)?.to_csv());
    println!("{}", GaussReport::compute(2, 1.0, 1.0)?.to_json());
    print!("{}", theta_coefficients(Lattice::E8, 4, ThetaMode::Formula)?.to_csv());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli reports example");
}
