// The packing-density bound L_d, the best known lattice densities, and the
// ratio B_d = (L_d / Δ_d)^(1/d).
//
// cargo run --example packing_table

use lpbounds::report::{table_bd, table_bd_csv};

pub fn run_example() -> lpbounds::Result<()> {
    let rows = table_bd()?;
    for r in &rows {
        let note = if r.conjectured { " (lattice optimality conjectured)" } else { "" };
        println!(
            "d={:>2} {:>5}: density {:.10} L_d {:.10} B_d {:.8}{note}",
            r.d, r.lattice, r.density, r.l_d, r.b_d
        );
    }
    print!("{}", table_bd_csv(&rows));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("packing table example");
}
