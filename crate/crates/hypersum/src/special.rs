//! High-precision digamma and log-gamma for positive rational arguments,
//! plus the exact psi-difference used by the infinite-sum identities.
//!
//! Both functions lift the argument above a threshold with the recurrences
//! `psi(x+1) = psi(x) + 1/x` and `lnGamma(x+1) = lnGamma(x) + ln x`, then
//! apply the Bernoulli asymptotic series. The remainder of either series is
//! bounded by the magnitude of the first omitted term, which is folded into
//! the certified error bound.

use num_traits::{One, Signed, Zero};

use crate::certified::{ln_rational, pi, pow10_neg, CertifiedReal};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, rat, ratio, Rational};

/// Working precision: `digits` requested, `guard` extra digits carried
/// internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    pub digits: u32,
    pub guard: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            digits: 50,
            guard: 10,
        }
    }
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Self {
        assert!(digits >= 20, "precision context requires at least 20 digits");
        Self { digits, guard: 10 }
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Recurrence-lift threshold.
    fn lift_threshold(&self) -> u32 {
        20.max(self.digits / 2)
    }
}

/// Digamma of a positive rational argument, certified to `ctx.digits`.
pub fn digamma(x: &Rational, ctx: &PrecisionContext) -> Result<CertifiedReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let w = ctx.working_digits();
    let mut threshold = rat(ctx.lift_threshold() as i64);
    loop {
        // psi(x) = psi(y) - sum_{i} 1/(x+i) with y = x + n >= threshold
        let mut shift = Rational::zero();
        let mut y = x.clone();
        while y < threshold {
            shift += Rational::one() / &y;
            y += Rational::one();
        }
        // psi(y) = ln y - 1/(2y) - sum B_{2n} / (2n y^{2n}) + R
        let y2 = &y * &y;
        let mut pow = y2.clone();
        let mut sum = Rational::zero();
        let eps = pow10_neg(w);
        let mut n = 1u64;
        let remainder = loop {
            let term = bernoulli(2 * n) / (rat(2 * n as i64) * &pow);
            if term.abs() < eps {
                break term.abs();
            }
            let next = bernoulli(2 * n + 2) / (rat(2 * n as i64 + 2) * &pow * &y2);
            if next.abs() >= term.abs() {
                // asymptotic series bottomed out above target: lift higher
                break Rational::one();
            }
            sum += term;
            pow *= &y2;
            n += 1;
        };
        if remainder >= eps {
            threshold *= rat(2);
            continue;
        }
        let ln_y = ln_rational(&y, w + 2);
        let approx = &ln_y.approx - Rational::one() / (rat(2) * &y) - sum - shift;
        let err = ln_y.err + remainder;
        return Ok(CertifiedReal::new(approx, err).compressed(w + 4));
    }
}

/// Log-gamma of a positive rational argument, certified to `ctx.digits`.
pub fn log_gamma(x: &Rational, ctx: &PrecisionContext) -> Result<CertifiedReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    let w = ctx.working_digits();
    let mut threshold = rat(ctx.lift_threshold() as i64);
    loop {
        // lnGamma(x) = lnGamma(y) - sum_i ln(x+i), y = x + n >= threshold
        let mut y = x.clone();
        let mut lift = Rational::one();
        while y < threshold {
            lift *= &y;
            y += Rational::one();
        }
        // Stirling: lnGamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2
        //           + sum_n B_{2n} / (2n(2n-1) y^{2n-1}) + R
        let y2 = &y * &y;
        let mut pow = y.clone();
        let mut sum = Rational::zero();
        let eps = pow10_neg(w);
        let mut n = 1u64;
        let remainder = loop {
            let term = bernoulli(2 * n)
                / (rat(2 * n as i64) * rat(2 * n as i64 - 1) * &pow);
            if term.abs() < eps {
                break term.abs();
            }
            let next = bernoulli(2 * n + 2)
                / (rat(2 * n as i64 + 2) * rat(2 * n as i64 + 1) * &pow * &y2);
            if next.abs() >= term.abs() {
                break Rational::one();
            }
            sum += term;
            pow *= &y2;
            n += 1;
        };
        if remainder >= eps {
            threshold *= rat(2);
            continue;
        }
        let ln_y = ln_rational(&y, w + 4);
        let half_ln_2pi = {
            let p = pi(w + 4);
            let two_pi = p.scale(&rat(2));
            crate::certified::ln_certified(&two_pi, w + 4).scale(&ratio(1, 2))
        };
        let main = ln_y.scale(&(&y - ratio(1, 2)));
        let mut value = main.add(&half_ln_2pi);
        value = value.add_exact(&(-&y + sum));
        if !lift.is_one() {
            let ln_lift = ln_rational(&lift, w + 4);
            value = value.sub(&ln_lift);
        }
        return Ok(CertifiedReal::new(value.approx, value.err + remainder).compressed(w + 4));
    }
}

/// Exact value of `psi(c) - psi(c-a)` for positive integer `a`:
/// the telescoped sum `sum_{j=1}^{a} 1/(c-j)`.
pub fn psi_diff_exact(a: u64, c: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for j in 1..=a {
        let d = c - rat(j as i64);
        if d.is_zero() {
            return Err(Error::Pole {
                param: format!("c-{j}"),
                index: j,
            });
        }
        acc += Rational::one() / d;
    }
    Ok(acc)
}

/// Gamma-function ratio `Gamma(x)/Gamma(y)` when `x - y` is an integer and
/// no pole is crossed: a pure Pochhammer ratio, hence exact.
pub fn gamma_ratio_exact(x: &Rational, y: &Rational) -> Option<Rational> {
    let diff = x - y;
    if !diff.is_integer() {
        return None;
    }
    let n: i64 = diff.to_integer().try_into().ok()?;
    if n >= 0 {
        let p = crate::exact::pochhammer(y, n as u64);
        (!p.is_zero()).then_some(p)
    } else {
        let p = crate::exact::pochhammer(x, (-n) as u64);
        (!p.is_zero()).then(|| Rational::one() / p)
    }
}
