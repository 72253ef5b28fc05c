// Bessel zeros, adjacent Jacobi polynomials and their kernels.
//
// cargo run --example special_functions

use lpbounds::special::{
    bessel_j, bessel_zeros, cd_kernel, jacobi_eval, largest_zero, lambda_d, JacobiBasis,
};

pub fn run_example() -> lpbounds::Result<()> {
    for nu in [0.5, 1.0, 4.0, 12.0] {
        let t = bessel_zeros(nu, 5)?;
        let zs: Vec<String> = t.zeros.iter().map(|z| format!("{z:.12}")).collect();
        println!("J_{nu} zeros: {}", zs.join(" "));
        println!("    J_{}(z_1) = {:.6e}", nu + 1.0, bessel_j(nu + 1.0, t.zeros[0])?);
    }
    for d in [2u32, 3, 8] {
        let b = JacobiBasis::new(d, 1, 0)?;
        println!(
            "d={d}: lambda_d={:.12} P_5^(1,0)(0.3)={:.12} top zero of P_5^(1,0)={:.12} Q_4(0.2,-0.5)={:.12}",
            lambda_d(d)?,
            jacobi_eval(&b, 5, 0.3)?,
            largest_zero(&b, 5)?,
            cd_kernel(&b, 4, 0.2, -0.5)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("special functions example");
}
