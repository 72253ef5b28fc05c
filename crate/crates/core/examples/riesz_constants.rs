// Lower bounds Θ, ξ and A for the hypersingular Riesz constant C_{s,d},
// and the common residue of (s-d) C_{s,d} at s = d.
//
// cargo run --release --example riesz_constants

use lpbounds::energy::{residue_check, residue_target, BoundKind};
use lpbounds::report::BoundReport;

pub fn run_example() -> lpbounds::Result<()> {
    println!("{:>3} {:>5} {:>14} {:>14} {:>14} {:>6}", "d", "s", "theta", "xi", "A", "zeros");
    for d in [1u32, 2, 3, 4, 8] {
        for ds in [0.5, 1.0, 3.0] {
            let s = d as f64 + ds;
            let r = BoundReport::compute(d, s, 1e-10)?;
            let flag = if r.xi_flag { "*" } else { " " };
            println!(
                "{d:>3} {s:>5.1} {:>14.8} {:>13.8}{flag} {:>14.8} {:>6}",
                r.theta, r.xi, r.a_sd, r.a_sd_terms_used
            );
        }
    }
    println!("(* : outside the range where xi is known to bound C_s,d)");

    for d in [1u32, 2, 3] {
        let target = residue_target(d);
        for delta in [1e-2, 1e-3, 1e-4] {
            let a = residue_check(d, BoundKind::Asd, delta)?;
            let x = residue_check(d, BoundKind::Xi, delta)?;
            println!("d={d} delta={delta:e}: (s-d)A={a:.8} (s-d)xi={x:.8} target={target:.8}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("riesz constants example");
}
