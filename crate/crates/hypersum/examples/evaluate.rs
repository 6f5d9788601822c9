//! Evaluate hypergeometric series exactly and with certified error bounds.
//!
//! Run with: cargo run --example evaluate

use hypersum::exact::{rat, ratio};
use hypersum::HyperSpec;

fn main() -> hypersum::Result<()> {
    // A terminating series is a finite sum of rationals, so it evaluates
    // exactly: 3F2(-2, 1, 4; 3, 3; 2).
    let spec = HyperSpec::new(
        vec![rat(-2), rat(1), rat(4)],
        vec![rat(3), rat(3)],
    )?;
    println!("{spec} at z=2  =  {}", spec.eval_terminating(&rat(2))?);

    // Non-terminating series inside the unit disc sum with a rigorous
    // geometric tail bound. Every printed digit is certified.
    let spec = HyperSpec::new(vec![ratio(1, 2), rat(1)], vec![rat(2)])?;
    let value = spec.eval_numeric(&ratio(1, 3), 30, 100_000)?;
    println!(
        "{spec} at z=1/3  =  {}  (error <= {}, {} terms)",
        value.estimate_string(30),
        value.tail_bound_string(),
        value.terms_used
    );

    // At the unit argument the term ratio approaches 1 and plain geometric
    // bounds fail; a telescoping correction still certifies the tail.
    let spec = HyperSpec::new(vec![rat(1), rat(1), rat(3)], vec![rat(5), rat(2)])?;
    let value = spec.eval_numeric(&rat(1), 50, 1_000_000)?;
    println!(
        "{spec} at z=1  =  {}  (error <= {}, exact value 5/3)",
        value.estimate_string(50),
        value.tail_bound_string()
    );

    // Requests outside the convergence domain are rejected, not guessed at.
    let spec = HyperSpec::new(vec![rat(1), rat(1)], vec![rat(2)])?;
    match spec.eval_numeric(&rat(2), 20, 1_000) {
        Err(e) => println!("{spec} at z=2 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
