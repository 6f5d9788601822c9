//! Verify series transformations by exact coefficient comparison.
//!
//! Both sides of each identity are expanded as truncated power series with
//! rational coefficients; the check passes only if every coefficient agrees
//! exactly. Run with: cargo run --example formal_checks

use hypersum::exact::{rat, ratio};
use hypersum::ramanujan::{entry8_check, eq31_check, theorem1_check, theorem2_check, Phi};

fn main() -> hypersum::Result<()> {
    let order = 20;

    // A derivative-data transform: the left side uses phi-derivatives at 0,
    // the right side the derivatives at 1.
    for phi in [Phi::Exp, Phi::Cosh, Phi::Gaussian, Phi::PowerLaw { b: ratio(5, 2) }] {
        let check = entry8_check(&ratio(3, 2), &phi, order)?;
        println!(
            "{} with phi={}: {}",
            check.id,
            phi.name(),
            if check.passed() { "all coefficients agree" } else { "MISMATCH" }
        );
    }

    // The three-parameter version carries a transformed parameter
    // f = d(b-a-1)/(d-a) on the right-hand side.
    let check = theorem1_check(&rat(1), &rat(4), &rat(3), &Phi::Exp, order)?;
    println!("{}: passed = {}", check.id, check.passed());

    // The even/odd split: at d = 2a the odd block vanishes identically.
    let check = theorem2_check(&ratio(3, 2), &rat(3), &Phi::Gaussian, order)?;
    println!("{} at d = 2a: passed = {}", check.id, check.passed());

    // Specializing phi to concrete functions yields classical-looking
    // summation formulas; here is one with its first series coefficients.
    let check = eq31_check(&rat(1), &rat(3), 6)?;
    println!(
        "{}: lhs coefficients {:?}",
        check.id,
        check.lhs.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    // A failing comparison names the first bad coefficient. Comparing two
    // different identities' sides demonstrates the witness.
    let lhs = eq31_check(&rat(1), &rat(3), 6)?;
    let rhs = eq31_check(&rat(2), &rat(3), 6)?;
    if let Some((i, a, b)) = lhs.lhs.first_mismatch(&rhs.lhs) {
        println!("first difference between a=1 and a=2 expansions: x^{i}: {a} vs {b}");
    }
    Ok(())
}
