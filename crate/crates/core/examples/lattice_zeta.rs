// Theta series, Epstein zeta functions, and the conjectured constants
// C̃_{s,d} for A2, D4, E8 and the Leech lattice.
//
// cargo run --release --example lattice_zeta

use lpbounds::lattice::{
    c_tilde_with_tol, epstein_zeta, ramanujan_tau, theta_coefficients, Lattice, ThetaMode,
};

pub fn run_example() -> lpbounds::Result<()> {
    for l in [Lattice::A2, Lattice::D4, Lattice::E8, Lattice::Leech] {
        let mode = if l == Lattice::A2 { ThetaMode::Enumeration } else { ThetaMode::Formula };
        let t = theta_coefficients(l, 6, mode)?;
        let counts: Vec<String> = t.counts().iter().map(|c| c.to_string()).collect();
        println!("{:>5}: N(1..6) = {}", l.spec().name, counts.join(", "));
    }
    let taus: Vec<String> = (1..=8).map(|m| ramanujan_tau(m).map(|t| t.to_string())).collect::<Result<_, _>>()?;
    println!("tau(1..8) = {}", taus.join(", "));

    let z = epstein_zeta(Lattice::A2, 4.0, 1e-12)?;
    println!("zeta_A2(4) = {:.12} (tail bound {:.1e}, {} shells)", z.value, z.tail_bound, z.m_max);
    for (d, s) in [(2u32, 4.0), (4, 6.0), (8, 12.0), (24, 30.0)] {
        let c = c_tilde_with_tol(d, s, 1e-10)?;
        println!("C~({s}, {d}) = {:.12e} +- {:.1e}", c.value, c.tail_bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lattice zeta example");
}
