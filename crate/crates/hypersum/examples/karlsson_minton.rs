//! Integer-displacement parameter families and their expansion coefficients.
//!
//! A family pairs each lower parameter d_i with an integer displacement m_i,
//! so the series carries upper parameters d_i + m_i over lower d_i. The
//! expansion coefficients C_k admit three independent constructions which
//! must agree exactly. Run with: cargo run --example karlsson_minton

use hypersum::exact::{rat, ratio};
use hypersum::hyper::HyperSpec;
use hypersum::km::{
    km_coefficients_hyper, km_coefficients_stirling, km_coefficients_vandermonde, KMFamily,
};

fn main() -> hypersum::Result<()> {
    let family = KMFamily::parse("2:1,5/2:2")?;
    println!("family {family}: Lambda = {}", family.lambda());

    let stirling = km_coefficients_stirling(&family);
    let hyper = km_coefficients_hyper(&family)?;
    for k in 0..=family.total_m() as usize {
        println!(
            "  C_{k} = {}  (combinatorial route {} hypergeometric route)",
            stirling.coeff(k),
            if stirling.coeff(k) == hyper.coeff(k) { "==" } else { "!=" }
        );
    }

    // With a single pair the coefficients collapse to binomials over a
    // rising factorial.
    let single = km_coefficients_vandermonde(&ratio(5, 2), 3)?;
    println!(
        "single pair 5/2:3 coefficients: {:?}",
        (0..=3).map(|k| single.coeff(k).to_string()).collect::<Vec<_>>()
    );

    // The family's unit-argument series evaluates in closed form; here the
    // numeric engine confirms 3F2(1, 1, 3; 5, 2; 1) = 5/3 with a certified
    // tail bound.
    let spec = HyperSpec::new(vec![rat(1), rat(1), rat(3)], vec![rat(5), rat(2)])?;
    let value = spec.eval_numeric(&rat(1), 40, 1_000_000)?;
    println!(
        "3F2(1,1,3;5,2;1) = {} (error <= {}), contains 5/3: {}",
        value.estimate_string(40),
        value.tail_bound_string(),
        value.contains(&ratio(5, 3))
    );
    Ok(())
}
