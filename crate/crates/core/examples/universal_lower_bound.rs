// Universal lower bound for Riesz energy of N points on S^2, compared with
// the tetrahedron and octahedron and with the asymptotic constant A_{4,2}.
//
// cargo run --release --example universal_lower_bound

use lpbounds::energy::{asd_bound, ulb_energy, Potential};
use lpbounds::special::sphere_area;

pub fn run_example() -> lpbounds::Result<()> {
    let s = 4.0;
    let h = Potential::Riesz { s };
    let tetra = 12.0 * (8.0f64 / 3.0).powf(-s / 2.0);
    let octa = 24.0 * 2f64.powf(-s / 2.0) + 6.0 * 2f64.powf(-s);
    println!("N=4: bound {:.15} tetrahedron {tetra:.15}", ulb_energy(2, 4, &h)?);
    println!("N=6: bound {:.15} octahedron  {octa:.15}", ulb_energy(2, 6, &h)?);

    let a = asd_bound(2, s, 1e-12)?.value;
    let area = sphere_area(2);
    println!("A_(4,2) = {a:.12}");
    println!("{:>4} {:>6} {:>18} {:>12}", "k", "N", "scaled bound", "rel. gap");
    for k in [1u64, 2, 5, 10, 20, 40] {
        let n = (k + 1) * (k + 1);
        let e = ulb_energy(2, n, &h)?;
        let scaled = e * area.powf(s / 2.0) / (n as f64).powf(1.0 + s / 2.0);
        println!("{k:>4} {n:>6} {scaled:>18.12} {:>12.3e}", (a - scaled) / a);
    }

    let g = Potential::Gaussian { alpha_scaled: 1.0 };
    println!("Gaussian ULB, N=12 on S^2: {:.12}", ulb_energy(2, 12, &g)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("universal lower bound example");
}
