//! Series whose closed forms are digamma differences.
//!
//! The sum over k of (a)_k / (k (c)_k) equals psi(c) - psi(c - a) whenever
//! c - a > 0; adding an integer-displacement family contributes an explicit
//! rational correction. Run with: cargo run --example digamma_sums

use hypersum::closed_forms::{entry9, entry9_extended, entry9_lhs, entry9_r1};
use hypersum::exact::{rat, ratio};
use hypersum::km::KMFamily;
use hypersum::special::{digamma, PrecisionContext};

fn main() -> hypersum::Result<()> {
    let ctx = PrecisionContext::new(50);

    // Integer a gives exact rational values: psi(3) - psi(2) = 1/2.
    let value = entry9(&rat(1), &rat(3), &ctx)?;
    println!("sum (1)_k / (k (3)_k)            = {}", value.display_string(50));

    // Non-integer parameters fall back to certified digamma evaluation.
    let value = entry9(&ratio(1, 2), &rat(3), &ctx)?;
    println!("sum (1/2)_k / (k (3)_k)          = {}", value.display_string(50));

    // The extended sum with family {2:1} shifts the closed form by an
    // explicit correction: here the total is 7/12.
    let family = KMFamily::single(rat(2), 1)?;
    let value = entry9_extended(&rat(1), &rat(4), Some(&family), &ctx)?;
    println!("extended sum, family 2:1         = {}", value.display_string(50));

    // The single-pair corollary agrees with the general form.
    let value = entry9_r1(&rat(1), &rat(4), &rat(2), 1, &ctx)?;
    println!("single-pair corollary            = {}", value.display_string(50));

    // Direct certified summation of the series confirms the closed form.
    let direct = entry9_lhs(&rat(1), &rat(4), Some(&family), 50, 1_000_000)?;
    println!(
        "direct summation                 = {} (error <= {})",
        direct.estimate_string(50),
        direct.tail_bound_string()
    );

    // The underlying digamma evaluator is itself certified.
    let psi = digamma(&ratio(5, 2), &ctx)?;
    println!(
        "psi(5/2)                         = {}...",
        hypersum::certified::decimal_string(&psi.approx, 40)
    );
    Ok(())
}
