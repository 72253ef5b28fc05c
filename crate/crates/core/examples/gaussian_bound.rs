// Lower bound for Gaussian energy of infinite configurations of given
// density in R^d.
//
// cargo run --example gaussian_bound

use lpbounds::energy::gauss_bound;

pub fn run_example() -> lpbounds::Result<()> {
    for d in [1u32, 2, 3, 8] {
        for alpha in [0.25, 1.0, 4.0] {
            let v = gauss_bound(d, alpha, 1.0)?;
            println!(
                "d={d} alpha={alpha:<5} rho=1: {:.15e} ({} zeros, tail {:.1e})",
                v.value, v.terms_used, v.tail_bound
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("gaussian bound example");
}
