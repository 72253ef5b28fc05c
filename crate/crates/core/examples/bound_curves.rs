// Curve data comparing the conjectured constant with the lower bound A:
// f(s) = (C̃_{s,d} / A_{s,d})^(1/s) rises from 1 at s = d toward B_d.
//
// cargo run --release --example bound_curves > curves.csv

use lpbounds::report::{plot_fs, plot_fs_csv, SRange};

pub fn run_example() -> lpbounds::Result<()> {
    for d in [2u32, 4, 8, 24] {
        let df = d as f64;
        let range = SRange {
            start: df + 0.1 * df,
            stop: 4.0 * df,
            step: 0.3 * df,
        };
        let rows = plot_fs(d, &range, 1e-10)?;
        println!("# d = {d}");
        print!("{}", plot_fs_csv(&rows));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bound curves example");
}
