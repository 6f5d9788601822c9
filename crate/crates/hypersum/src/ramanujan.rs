//! Derivative-sum transforms: identities equating a weighted sum of the
//! derivatives of a function at 0 to a weighted sum of its derivatives
//! at 1, verified formally.
//!
//! Each check expands both sides as truncated power series in a free
//! variable `x` with exact rational coefficients and compares them
//! coefficient by coefficient, so a verdict is exact equality, never a
//! numeric tolerance. The function library (`Phi`) is closed under the
//! operations needed: every k-th derivative generator produces a series
//! whose lowest-degree term is at least `x^k`, which makes truncating the
//! derivative sums at the working order exact.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::series::{cosh_series, exp_series, sinh_series, TruncatedSeries};
use crate::exact::{
    factorial, hermite_series, is_non_positive_integer, parse_rational, pochhammer,
    pochhammer_is_zero, rat, ratio, Rational,
};
use crate::hyper::HyperSpec;

/// Library of functions with exactly expressible derivative sequences.
/// For `power_law`, the identity sides are normalized by an overall
/// `x^b` and written in the variable `z = 1/(x-1)`, which keeps every
/// coefficient rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Phi {
    /// `exp(x t)`
    Exp,
    /// `cosh(x t)`
    Cosh,
    /// `(x - t)^{-b}`, normalized as described above
    PowerLaw { b: Rational },
    /// `exp(-x^2 t^2 / 4)`
    Gaussian,
}

impl Phi {
    pub fn name(&self) -> String {
        match self {
            Phi::Exp => "exp".into(),
            Phi::Cosh => "cosh".into(),
            Phi::PowerLaw { b } => format!("power_law:{b}"),
            Phi::Gaussian => "gaussian".into(),
        }
    }

    /// Parse `exp`, `cosh`, `gaussian`, or `power_law:<b>`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(Phi::Exp),
            "cosh" => Ok(Phi::Cosh),
            "gaussian" => Ok(Phi::Gaussian),
            other => {
                if let Some(b) = other.strip_prefix("power_law:") {
                    Ok(Phi::PowerLaw {
                        b: parse_rational(b)?,
                    })
                } else {
                    Err(Error::Parse(format!(
                        "unknown function id {other:?} (expected exp, cosh, gaussian, power_law:<b>)"
                    )))
                }
            }
        }
    }

    /// k-th derivative at `t = 0` as a truncated series in the free
    /// variable; the lowest nonzero degree is always >= k.
    pub fn deriv_at_0(&self, k: u64, order: usize) -> TruncatedSeries {
        let ku = k as usize;
        match self {
            Phi::Exp => TruncatedSeries::one(order).mul_xpow(ku),
            Phi::Cosh => {
                if k % 2 == 0 {
                    TruncatedSeries::one(order).mul_xpow(ku)
                } else {
                    TruncatedSeries::zero(order)
                }
            }
            Phi::PowerLaw { b } => {
                // (b)_k z^k (1+z)^{-k}
                TruncatedSeries::binomial_series(&rat(-(k as i64)), order)
                    .mul_xpow(ku)
                    .scaled(&pochhammer(b, k))
            }
            Phi::Gaussian => {
                if k % 2 == 0 {
                    let m = k / 2;
                    let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
                    let c = sign * Rational::from_integer(factorial(k))
                        / (Rational::from_integer(factorial(m)) * rat(2).pow(k as i32));
                    TruncatedSeries::one(order).mul_xpow(ku).scaled(&c)
                } else {
                    TruncatedSeries::zero(order)
                }
            }
        }
    }

    /// k-th derivative at `t = 1`; lowest nonzero degree >= k.
    pub fn deriv_at_1(&self, k: u64, order: usize) -> TruncatedSeries {
        let ku = k as usize;
        match self {
            Phi::Exp => exp_series(&rat(1), order).mul_xpow(ku),
            Phi::Cosh => {
                if k % 2 == 0 {
                    cosh_series(order).mul_xpow(ku)
                } else {
                    sinh_series(order).mul_xpow(ku)
                }
            }
            Phi::PowerLaw { b } => {
                // (b)_k (1+z)^b z^k
                TruncatedSeries::binomial_series(b, order)
                    .mul_xpow(ku)
                    .scaled(&pochhammer(b, k))
            }
            Phi::Gaussian => {
                // (-1)^k (x/2)^k exp(-x^2/4) H_k(x/2)
                let x_half = TruncatedSeries::x(order).scaled(&ratio(1, 2));
                let h = hermite_series(k, &x_half);
                let gauss = exp_series(&ratio(-1, 4), order).stretched(2);
                let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                (&h[ku] * &gauss)
                    .mul_xpow(ku)
                    .scaled(&(sign / rat(2).pow(k as i32)))
            }
        }
    }
}

/// Outcome of a formal identity check: both sides as series of the same
/// order.
#[derive(Debug, Clone)]
pub struct TransformCheck {
    pub id: String,
    pub order: usize,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl TransformCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    /// First differing coefficient index with both values, if any.
    pub fn first_mismatch(&self) -> Option<(usize, Rational, Rational)> {
        self.lhs.first_mismatch(&self.rhs)
    }
}

/// Rational weight `prod(numer pochhammers) / prod(denom pochhammers)`;
/// `Ok(None)` when the numerator vanishes (term drops out), an error when
/// a denominator factor vanishes under a nonzero numerator.
fn weight(numer: &[(Rational, u64)], denom: &[(Rational, u64)]) -> Result<Option<Rational>> {
    let mut top = Rational::one();
    for (base, n) in numer {
        top *= pochhammer(base, *n);
    }
    if top.is_zero() {
        return Ok(None);
    }
    let mut bottom = Rational::one();
    for (base, n) in denom {
        if pochhammer_is_zero(base, *n) {
            return Err(Error::Pole {
                param: base.to_string(),
                index: *n,
            });
        }
        bottom *= pochhammer(base, *n);
    }
    Ok(Some(top / bottom))
}

fn check(id: &str, order: usize, lhs: TruncatedSeries, rhs: TruncatedSeries) -> TransformCheck {
    TransformCheck {
        id: id.to_string(),
        order,
        lhs,
        rhs,
    }
}

/// `sum_k 2^k (a)_k phi^(k)(0) / ((2a)_k k!)
///  = sum_k phi^(2k)(1) / (2^(2k) (a+1/2)_k k!)`.
pub fn entry8_check(a: &Rational, phi: &Phi, order: usize) -> Result<TransformCheck> {
    let mut lhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let Some(w) = weight(
            &[(a.clone(), k)],
            &[(rat(2) * a, k), (Rational::one(), k)],
        )?
        else {
            break;
        };
        lhs = &lhs + &phi.deriv_at_0(k, order).scaled(&(w * rat(2).pow(k as i32)));
    }
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=(order as u64) / 2 {
        let Some(w) = weight(&[], &[(a + ratio(1, 2), k), (Rational::one(), k)])? else {
            break;
        };
        rhs = &rhs + &phi.deriv_at_1(2 * k, order).scaled(&(w / rat(4).pow(k as i32)));
    }
    Ok(check("entry8", order, lhs, rhs))
}

/// `sum_k (a)_k phi^(k)(0) / ((b)_k k!)
///  = sum_k (-1)^k (b-a)_k phi^(k)(1) / ((b)_k k!)`.
pub fn entry20_check(a: &Rational, b: &Rational, phi: &Phi, order: usize) -> Result<TransformCheck> {
    let mut lhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let Some(w) = weight(&[(a.clone(), k)], &[(b.clone(), k), (Rational::one(), k)])? else {
            break;
        };
        lhs = &lhs + &phi.deriv_at_0(k, order).scaled(&w);
    }
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let w = weight(&[(b - a, k)], &[(b.clone(), k), (Rational::one(), k)])?;
        let Some(w) = w else { continue };
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        rhs = &rhs + &phi.deriv_at_1(k, order).scaled(&(sign * w));
    }
    Ok(check("entry20", order, lhs, rhs))
}

/// `sum_k (a)_k (d+1)_k phi^(k)(0) / ((b)_k (d)_k k!)
///  = sum_k (-1)^k (b-a-1)_k (f+1)_k phi^(k)(1) / ((b)_k (f)_k k!)`
/// with `f = d(b-a-1)/(d-a)`.
pub fn theorem1_check(
    a: &Rational,
    b: &Rational,
    d: &Rational,
    phi: &Phi,
    order: usize,
) -> Result<TransformCheck> {
    if d == a {
        return Err(Error::SingularParameter(
            "d = a makes the transformed parameter infinite".into(),
        ));
    }
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    let f = d * (b - a - rat(1)) / (d - a);
    if is_non_positive_integer(&f) {
        return Err(Error::SingularParameter(format!(
            "transformed parameter f = {f} is a non-positive integer"
        )));
    }
    let mut lhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let Some(w) = weight(
            &[(a.clone(), k), (d + rat(1), k)],
            &[(b.clone(), k), (d.clone(), k), (Rational::one(), k)],
        )?
        else {
            break;
        };
        lhs = &lhs + &phi.deriv_at_0(k, order).scaled(&w);
    }
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let w = weight(
            &[(b - a - rat(1), k), (&f + rat(1), k)],
            &[(b.clone(), k), (f.clone(), k), (Rational::one(), k)],
        )?;
        let Some(w) = w else { continue };
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        rhs = &rhs + &phi.deriv_at_1(k, order).scaled(&(sign * w));
    }
    Ok(check("theorem1", order, lhs, rhs))
}

/// `sum_k 2^k (a)_k (d+1)_k phi^(k)(0) / ((2a+1)_k (d)_k k!)
///  = sum_k phi^(2k)(1) / (2^(2k) (a+1/2)_k k!)
///    - (1-2a/d)/(2a+1) * sum_k phi^(2k+1)(1) / (2^(2k) (a+3/2)_k k!)`.
pub fn theorem2_check(
    a: &Rational,
    d: &Rational,
    phi: &Phi,
    order: usize,
) -> Result<TransformCheck> {
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    if (rat(2) * a + rat(1)).is_zero() {
        return Err(Error::Domain("a = -1/2 is excluded".into()));
    }
    let mut lhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let Some(w) = weight(
            &[(a.clone(), k), (d + rat(1), k)],
            &[
                (rat(2) * a + rat(1), k),
                (d.clone(), k),
                (Rational::one(), k),
            ],
        )?
        else {
            break;
        };
        lhs = &lhs + &phi.deriv_at_0(k, order).scaled(&(w * rat(2).pow(k as i32)));
    }
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=(order as u64) / 2 {
        let Some(w) = weight(&[], &[(a + ratio(1, 2), k), (Rational::one(), k)])? else {
            break;
        };
        rhs = &rhs + &phi.deriv_at_1(2 * k, order).scaled(&(w / rat(4).pow(k as i32)));
    }
    let prefactor = (Rational::one() - rat(2) * a / d) / (rat(2) * a + rat(1));
    if !prefactor.is_zero() {
        let mut odd = TruncatedSeries::zero(order);
        for k in 0..=(order as u64) / 2 {
            let Some(w) = weight(&[], &[(a + ratio(3, 2), k), (Rational::one(), k)])? else {
                break;
            };
            odd = &odd + &phi.deriv_at_1(2 * k + 1, order).scaled(&(w / rat(4).pow(k as i32)));
        }
        rhs = &rhs - &odd.scaled(&prefactor);
    }
    Ok(check("theorem2", order, lhs, rhs))
}

fn hyper_series(
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    scale: &Rational,
    order: usize,
) -> Result<TruncatedSeries> {
    HyperSpec::new(upper, lower)?.eval_series(scale, order)
}

/// `exp(-x) F(a, d+1; 2a+1, d; 2x)
///  = F(; a+1/2; x^2/4) - (1-2a/d) x / (2a+1) * F(; a+3/2; x^2/4)`.
pub fn eq31_check(a: &Rational, d: &Rational, order: usize) -> Result<TransformCheck> {
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    let f22 = hyper_series(
        vec![a.clone(), d + rat(1)],
        vec![rat(2) * a + rat(1), d.clone()],
        &rat(2),
        order,
    )?;
    let lhs = &exp_series(&rat(-1), order) * &f22;
    let even = hyper_series(vec![], vec![a + ratio(1, 2)], &ratio(1, 4), order)?.stretched(2);
    let odd = hyper_series(vec![], vec![a + ratio(3, 2)], &ratio(1, 4), order)?.stretched(2);
    let prefactor = (Rational::one() - rat(2) * a / d) / (rat(2) * a + rat(1));
    let rhs = &even - &odd.mul_xpow(1).scaled(&prefactor);
    Ok(check("eq31", order, lhs, rhs))
}

/// `F(a/2, a/2+1/2, d+1; 1/2, a+1/2, a+1, d; x^2)
///  = cosh(x) F(; a+1/2; x^2/4)
///    - (1-a/d) x sinh(x) / (2a+1) * F(; a+3/2; x^2/4)`.
pub fn eq32_check(a: &Rational, d: &Rational, order: usize) -> Result<TransformCheck> {
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    let half_a = a * ratio(1, 2);
    let lhs = hyper_series(
        vec![half_a.clone(), &half_a + ratio(1, 2), d + rat(1)],
        vec![ratio(1, 2), a + ratio(1, 2), a + rat(1), d.clone()],
        &rat(1),
        order,
    )?
    .stretched(2);
    let even = hyper_series(vec![], vec![a + ratio(1, 2)], &ratio(1, 4), order)?.stretched(2);
    let odd = hyper_series(vec![], vec![a + ratio(3, 2)], &ratio(1, 4), order)?.stretched(2);
    let prefactor = (Rational::one() - a / d) / (rat(2) * a + rat(1));
    let rhs = &(&cosh_series(order) * &even)
        - &(&sinh_series(order) * &odd).mul_xpow(1).scaled(&prefactor);
    Ok(check("eq32", order, lhs, rhs))
}

/// In the variable `z = 1/(x-1)`:
/// `(1+z)^{-b} F(a, b, d+1; 2a+1, d; 2z/(1+z))
///  = F(b/2, b/2+1/2; a+1/2; z^2)
///    - (1-2a/d) b z / (2a+1) * F(b/2+1/2, b/2+1; a+3/2; z^2)`.
pub fn eq33_check(
    a: &Rational,
    b: &Rational,
    d: &Rational,
    order: usize,
) -> Result<TransformCheck> {
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    let f32 = hyper_series(
        vec![a.clone(), b.clone(), d + rat(1)],
        vec![rat(2) * a + rat(1), d.clone()],
        &rat(1),
        order,
    )?;
    // 2z/(1+z) = 2z * (1+z)^{-1}
    let inner = TruncatedSeries::binomial_series(&rat(-1), order)
        .mul_xpow(1)
        .scaled(&rat(2));
    let lhs = &f32.compose(&inner) * &TruncatedSeries::binomial_series(&(-b), order);
    let half_b = b * ratio(1, 2);
    let even = hyper_series(
        vec![half_b.clone(), &half_b + ratio(1, 2)],
        vec![a + ratio(1, 2)],
        &rat(1),
        order,
    )?
    .stretched(2);
    let odd = hyper_series(
        vec![&half_b + ratio(1, 2), &half_b + rat(1)],
        vec![a + ratio(3, 2)],
        &rat(1),
        order,
    )?
    .stretched(2);
    let prefactor = (Rational::one() - rat(2) * a / d) * b / (rat(2) * a + rat(1));
    let rhs = &even - &odd.mul_xpow(1).scaled(&prefactor);
    Ok(check("eq33", order, lhs, rhs))
}

/// Hermite-weighted sum of even order:
/// `sum_k (x/4)^{2k} H_{2k}(x/2) / ((a+1/2)_k k!)`.
fn hermite_sum_even(a_shift: &Rational, order: usize) -> Result<TruncatedSeries> {
    let x_half = TruncatedSeries::x(order).scaled(&ratio(1, 2));
    let h = hermite_series(order as u64, &x_half);
    let mut sum = TruncatedSeries::zero(order);
    for k in 0..=(order as u64) / 2 {
        let Some(w) = weight(&[], &[(a_shift.clone(), k), (Rational::one(), k)])? else {
            break;
        };
        let c = w / rat(16).pow(k as i32);
        sum = &sum + &h[2 * k as usize].mul_xpow(2 * k as usize).scaled(&c);
    }
    Ok(sum)
}

/// Hermite-weighted sum of odd order:
/// `sum_k (x/4)^{2k} H_{2k+1}(x/2) / ((a+3/2)_k k!)` — note the even power
/// of `x/4` against the odd-order polynomial.
fn hermite_sum_odd(a_shift: &Rational, order: usize) -> Result<TruncatedSeries> {
    let x_half = TruncatedSeries::x(order).scaled(&ratio(1, 2));
    let h = hermite_series(order as u64 + 1, &x_half);
    let mut sum = TruncatedSeries::zero(order);
    for k in 0..=(order as u64) / 2 {
        let Some(w) = weight(&[], &[(a_shift.clone(), k), (Rational::one(), k)])? else {
            break;
        };
        let c = w / rat(16).pow(k as i32);
        sum = &sum + &h[2 * k as usize + 1].mul_xpow(2 * k as usize).scaled(&c);
    }
    Ok(sum)
}

/// `exp(x^2/4) F(a/2, a/2+1/2, d+1; a+1/2, a+1, d; -x^2)
///  = sum_k (x/4)^{2k} H_{2k}(x/2) / ((a+1/2)_k k!)
///    + (1-a/d)/(a+1/2) sum_k (x/4)^{2k+1} H_{2k+1}(x/2) / ((a+3/2)_k k!)`.
pub fn eq34_check(a: &Rational, d: &Rational, order: usize) -> Result<TransformCheck> {
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    if is_non_positive_integer(&(a + ratio(1, 2))) {
        return Err(Error::Domain(format!(
            "a = {a} is excluded (a + 1/2 must not be a non-positive integer)"
        )));
    }
    let half_a = a * ratio(1, 2);
    let f33 = hyper_series(
        vec![half_a.clone(), &half_a + ratio(1, 2), d + rat(1)],
        vec![a + ratio(1, 2), a + rat(1), d.clone()],
        &rat(-1),
        order,
    )?
    .stretched(2);
    let lhs = &exp_series(&ratio(1, 4), order).stretched(2) * &f33;
    let even = hermite_sum_even(&(a + ratio(1, 2)), order)?;
    let odd = hermite_sum_odd(&(a + ratio(3, 2)), order)?;
    let prefactor = (Rational::one() - a / d) / (a + ratio(1, 2));
    // the odd sum above carries (x/4)^{2k}; one more x/4 makes (x/4)^{2k+1}
    let rhs = &even + &odd.mul_xpow(1).scaled(&(prefactor / rat(4)));
    Ok(check("eq34", order, lhs, rhs))
}

/// `sum_k (x/4)^{2k} H_{2k}(x/2) / ((a+1/2)_k k!)
///  = exp(x^2/4) F(a/2, a/2+1/2; a, a+1/2; -x^2)`.
pub fn hermite_2f2_even_check(a: &Rational, order: usize) -> Result<TransformCheck> {
    let lhs = hermite_sum_even(&(a + ratio(1, 2)), order)?;
    let half_a = a * ratio(1, 2);
    let f22 = hyper_series(
        vec![half_a.clone(), &half_a + ratio(1, 2)],
        vec![a.clone(), a + ratio(1, 2)],
        &rat(-1),
        order,
    )?
    .stretched(2);
    let rhs = &exp_series(&ratio(1, 4), order).stretched(2) * &f22;
    Ok(check("hermite-2f2-even", order, lhs, rhs))
}

/// `sum_k (x/4)^{2k} H_{2k+1}(x/2) / ((a+3/2)_k k!)
///  = x exp(x^2/4) F(a/2+1, a/2+3/2; a+3/2, a+2; -x^2)`.
pub fn hermite_2f2_odd_check(a: &Rational, order: usize) -> Result<TransformCheck> {
    let lhs = hermite_sum_odd(&(a + ratio(3, 2)), order)?;
    let half_a = a * ratio(1, 2);
    let f22 = hyper_series(
        vec![&half_a + rat(1), &half_a + ratio(3, 2)],
        vec![a + ratio(3, 2), a + rat(2)],
        &rat(-1),
        order,
    )?
    .stretched(2);
    let rhs = (&exp_series(&ratio(1, 4), order).stretched(2) * &f22).mul_xpow(1);
    Ok(check("hermite-2f2-odd", order, lhs, rhs))
}

/// `F(alpha, beta; gamma, delta; z) - F(alpha, beta; gamma, delta+1; z)
///  = alpha beta z / (gamma delta (delta+1))
///    * F(alpha+1, beta+1; gamma+1, delta+2; z)`.
pub fn contiguous_2f2_check(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    order: usize,
) -> Result<TransformCheck> {
    let base = hyper_series(
        vec![alpha.clone(), beta.clone()],
        vec![gamma.clone(), delta.clone()],
        &rat(1),
        order,
    )?;
    let shifted = hyper_series(
        vec![alpha.clone(), beta.clone()],
        vec![gamma.clone(), delta + rat(1)],
        &rat(1),
        order,
    )?;
    let lhs = &base - &shifted;
    if gamma.is_zero() || delta.is_zero() || (delta + rat(1)).is_zero() {
        return Err(Error::Domain(
            "gamma, delta, delta+1 must be nonzero".into(),
        ));
    }
    let factor = alpha * beta / (gamma * delta * (delta + rat(1)));
    let rhs = hyper_series(
        vec![alpha + rat(1), beta + rat(1)],
        vec![gamma + rat(1), delta + rat(2)],
        &rat(1),
        order,
    )?
    .mul_xpow(1)
    .scaled(&factor);
    Ok(check("contiguous-2f2", order, lhs, rhs))
}

/// `exp(x^2) F(a/2, a/2+1/2, d+1; b/2, b/2+1/2, d; -x^2)
///  = sum_k (b-a-1)_k (f+1)_k x^k H_k(x) / ((b)_k (f)_k k!)`
/// with `f = 2d(b-a-1)/(2d-a)`.
pub fn closing_3f3_check(
    a: &Rational,
    b: &Rational,
    d: &Rational,
    order: usize,
) -> Result<TransformCheck> {
    let two_d = rat(2) * d;
    if two_d == *a {
        return Err(Error::SingularParameter(
            "2d = a makes the transformed parameter infinite".into(),
        ));
    }
    if is_non_positive_integer(d) {
        return Err(Error::Domain(format!(
            "d = {d} is excluded (non-positive integer)"
        )));
    }
    let f = &two_d * (b - a - rat(1)) / (&two_d - a);
    if is_non_positive_integer(&f) {
        return Err(Error::SingularParameter(format!(
            "transformed parameter f = {f} is a non-positive integer"
        )));
    }
    let half_a = a * ratio(1, 2);
    let half_b = b * ratio(1, 2);
    let f33 = hyper_series(
        vec![half_a.clone(), &half_a + ratio(1, 2), d + rat(1)],
        vec![half_b.clone(), &half_b + ratio(1, 2), d.clone()],
        &rat(-1),
        order,
    )?
    .stretched(2);
    let lhs = &exp_series(&rat(1), order).stretched(2) * &f33;

    let x = TruncatedSeries::x(order);
    let h = hermite_series(order as u64, &x);
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=order as u64 {
        let w = weight(
            &[(b - a - rat(1), k), (&f + rat(1), k)],
            &[(b.clone(), k), (f.clone(), k), (Rational::one(), k)],
        )?;
        let Some(w) = w else { continue };
        rhs = &rhs + &h[k as usize].mul_xpow(k as usize).scaled(&w);
    }
    Ok(check("closing-3f3", order, lhs, rhs))
}

/// Two constructions of the same series:
/// `F(; a+1/2; x^2/4)` directly, and via the Bessel-style coefficient
/// recipe `sum_k (x/2)^{2k} G(a+1/2)/(k! G(k+a+1/2))`.
pub fn bessel_form_check(a: &Rational, order: usize) -> Result<TransformCheck> {
    let nu_shift = a + ratio(1, 2);
    if is_non_positive_integer(&nu_shift) {
        return Err(Error::Domain(format!(
            "a + 1/2 = {nu_shift} must not be a non-positive integer"
        )));
    }
    let lhs = hyper_series(vec![], vec![nu_shift.clone()], &ratio(1, 4), order)?.stretched(2);
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=(order as u64) / 2 {
        // Gamma(a+1/2)/Gamma(k+a+1/2) = 1/(a+1/2)_k
        let gamma_ratio = Rational::one() / pochhammer(&nu_shift, k);
        let c = gamma_ratio
            / (Rational::from_integer(factorial(k)) * rat(4).pow(k as i32));
        rhs = &rhs + &TruncatedSeries::one(order).mul_xpow(2 * k as usize).scaled(&c);
    }
    Ok(check("bessel-form", order, lhs, rhs))
}

/// Verify the inversion hypothesis for a library function:
/// `phi^(k)(0) = sum_{n>=k} (-1)^n (-n)_k phi^(n)(1) / n!`, truncated
/// consistently at the working order.
pub fn inversion_check(phi: &Phi, k: u64, order: usize) -> bool {
    let direct = phi.deriv_at_0(k, order);
    let mut sum = TruncatedSeries::zero(order);
    for n in k..=order as u64 {
        // (-1)^n (-n)_k / n! = (-1)^(n+k) / (n-k)!
        let sign = if (n + k) % 2 == 0 { rat(1) } else { rat(-1) };
        let c = sign / Rational::from_integer(factorial(n - k));
        sum = &sum + &phi.deriv_at_1(n, order).scaled(&c);
    }
    direct == sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_passes(c: TransformCheck) {
        if let Some((i, l, r)) = c.first_mismatch() {
            panic!("{}: coefficient {i} differs: {l} vs {r}", c.id);
        }
        assert!(c.passed());
    }

    #[test]
    fn phi_parse_round_trip() {
        for phi in [
            Phi::Exp,
            Phi::Cosh,
            Phi::Gaussian,
            Phi::PowerLaw { b: ratio(5, 2) },
        ] {
            assert_eq!(Phi::parse(&phi.name()).unwrap(), phi);
        }
        assert!(Phi::parse("sin").is_err());
    }

    #[test]
    fn gaussian_derivatives_match_direct_expansion() {
        // phi(t) = exp(-x^2 t^2/4) = sum_m (-1)^m x^(2m) t^(2m) / (4^m m!):
        // the k-th t-derivative at 0 reads off the t^k coefficient
        let phi = Phi::Gaussian;
        for k in 0..=6u64 {
            let d0 = phi.deriv_at_0(k, 16);
            if k % 2 == 1 {
                assert!(d0.is_zero());
            } else {
                let m = (k / 2) as i64;
                let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
                let expect = sign * Rational::from_integer(factorial(k))
                    / (Rational::from_integer(factorial(k / 2)) * rat(4).pow(m as i32));
                assert_eq!(d0.coeff(k as usize), expect, "k = {k}");
            }
        }
    }

    #[test]
    fn inversion_holds_for_library() {
        for phi in [
            Phi::Exp,
            Phi::Cosh,
            Phi::Gaussian,
            Phi::PowerLaw { b: ratio(-3, 2) },
            Phi::PowerLaw { b: rat(2) },
        ] {
            for k in [0u64, 1, 2, 5] {
                assert!(inversion_check(&phi, k, 20), "phi = {}, k = {k}", phi.name());
            }
        }
    }

    #[test]
    fn entry8_cases() {
        assert_passes(entry8_check(&rat(1), &Phi::Exp, 16).unwrap());
        assert_passes(entry8_check(&ratio(3, 2), &Phi::PowerLaw { b: rat(2) }, 12).unwrap());
        assert_passes(entry8_check(&ratio(2, 3), &Phi::Cosh, 14).unwrap());
        // constant function: only the k=0 terms survive on both sides
        let c = entry8_check(&ratio(7, 5), &Phi::PowerLaw { b: rat(0) }, 10).unwrap();
        assert_passes(c);
    }

    #[test]
    fn entry20_cases() {
        assert_passes(entry20_check(&rat(1), &rat(3), &Phi::Exp, 16).unwrap());
        assert_passes(entry20_check(&ratio(1, 2), &rat(2), &Phi::Cosh, 12).unwrap());
        assert_passes(entry20_check(&ratio(2, 5), &ratio(7, 3), &Phi::Gaussian, 12).unwrap());
        // b = a: the weights (b-a)_k collapse the right side to phi(1)
        let c = entry20_check(&ratio(3, 4), &ratio(3, 4), &Phi::Exp, 12).unwrap();
        assert_passes(c);
    }

    #[test]
    fn theorem1_cases() {
        assert_passes(theorem1_check(&rat(1), &rat(4), &rat(3), &Phi::Exp, 14).unwrap());
        assert_passes(theorem1_check(&rat(1), &rat(3), &rat(2), &Phi::Exp, 14).unwrap());
        assert_passes(
            theorem1_check(&ratio(1, 2), &rat(3), &ratio(5, 2), &Phi::Cosh, 12).unwrap(),
        );
        assert!(matches!(
            theorem1_check(&rat(2), &rat(4), &rat(2), &Phi::Exp, 8),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn theorem2_cases() {
        assert_passes(theorem2_check(&rat(1), &rat(3), &Phi::Exp, 16).unwrap());
        assert_passes(theorem2_check(&ratio(1, 2), &rat(1), &Phi::Gaussian, 12).unwrap());
        assert_passes(theorem2_check(&ratio(5, 4), &ratio(2, 3), &Phi::Cosh, 12).unwrap());
        assert_passes(
            theorem2_check(&ratio(3, 2), &rat(2), &Phi::PowerLaw { b: ratio(1, 2) }, 12).unwrap(),
        );
        assert!(theorem2_check(&rat(1), &rat(0), &Phi::Exp, 8).is_err());
        assert!(theorem2_check(&ratio(-1, 2), &rat(1), &Phi::Exp, 8).is_err());
    }

    #[test]
    fn theorem2_at_d_equals_2a_reduces() {
        // the odd-block prefactor vanishes; the remaining statement is the
        // plain two-sided transform
        for a in [rat(1), ratio(3, 4), ratio(5, 2)] {
            let d = rat(2) * &a;
            let c = theorem2_check(&a, &d, &Phi::Exp, 14).unwrap();
            assert_passes(c);
        }
    }

    #[test]
    fn eq31_cases() {
        let c = eq31_check(&rat(1), &rat(3), 14).unwrap();
        // hand value: coefficient of x^1 on the left is -1 + 2*(1*4)/(3*3)
        assert_eq!(c.lhs.coeff(1), ratio(-1, 9));
        assert_eq!(c.rhs.coeff(1), ratio(-1, 9));
        assert_passes(c);
        assert_passes(eq31_check(&ratio(1, 2), &ratio(3, 2), 16).unwrap());
        assert!(eq31_check(&rat(1), &rat(0), 8).is_err());
    }

    #[test]
    fn eq32_cases() {
        assert_passes(eq32_check(&rat(1), &rat(3), 16).unwrap());
        assert_passes(eq32_check(&ratio(3, 2), &ratio(5, 3), 14).unwrap());
    }

    #[test]
    fn eq33_cases() {
        // z = 0 gives 1 on both sides automatically (constant coefficients)
        let c = eq33_check(&rat(1), &ratio(1, 2), &rat(3), 12).unwrap();
        assert_eq!(c.lhs.coeff(0), rat(1));
        assert_eq!(c.rhs.coeff(0), rat(1));
        assert_passes(c);
        assert_passes(eq33_check(&ratio(3, 2), &rat(2), &ratio(5, 2), 12).unwrap());
    }

    #[test]
    fn eq34_cases() {
        assert_passes(eq34_check(&rat(1), &rat(3), 16).unwrap());
        assert_passes(eq34_check(&ratio(1, 2), &ratio(4, 3), 12).unwrap());
        assert!(eq34_check(&ratio(-1, 2), &rat(1), 8).is_err());
        assert!(eq34_check(&ratio(-3, 2), &rat(1), 8).is_err());
    }

    #[test]
    fn hermite_2f2_cases() {
        assert_passes(hermite_2f2_even_check(&rat(1), 16).unwrap());
        assert_passes(hermite_2f2_even_check(&ratio(5, 2), 12).unwrap());
        assert_passes(hermite_2f2_odd_check(&rat(1), 16).unwrap());
        assert_passes(hermite_2f2_odd_check(&ratio(3, 4), 12).unwrap());
    }

    #[test]
    fn contiguous_2f2_cases() {
        assert_passes(contiguous_2f2_check(&rat(1), &rat(2), &rat(3), &rat(1), 10).unwrap());
        assert_passes(
            contiguous_2f2_check(&ratio(1, 2), &ratio(5, 3), &ratio(7, 4), &rat(2), 12).unwrap(),
        );
    }

    #[test]
    fn closing_3f3_cases() {
        assert_passes(closing_3f3_check(&rat(1), &rat(4), &rat(3), 14).unwrap());
        assert_passes(closing_3f3_check(&ratio(1, 2), &rat(3), &rat(2), 12).unwrap());
        assert!(matches!(
            closing_3f3_check(&rat(4), &rat(6), &rat(2), 8),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn eq34_chain_through_hermite_forms() {
        // replacing both Hermite sums in the two-block identity by their
        // hypergeometric forms must reproduce the final series identity
        let (a, d) = (rat(1), rat(3));
        let order = 14;
        let even = hermite_sum_even(&(&a + ratio(1, 2)), order).unwrap();
        let even_f = hermite_2f2_even_check(&a, order).unwrap();
        assert_eq!(even, even_f.lhs);
        let odd = hermite_sum_odd(&(&a + ratio(3, 2)), order).unwrap();
        let odd_f = hermite_2f2_odd_check(&a, order).unwrap();
        assert_eq!(odd, odd_f.lhs);
        // substitute: lhs(eq34) = even_f.rhs + pref*(x/4)*odd_f.rhs
        let c = eq34_check(&a, &d, order).unwrap();
        let prefactor = (Rational::one() - &a / &d) / (&a + ratio(1, 2));
        let substituted = &even_f.rhs
            + &odd_f.rhs.mul_xpow(1).scaled(&(prefactor / rat(4)));
        assert_eq!(c.lhs, substituted);
    }

    #[test]
    fn bessel_form_cases() {
        let c = bessel_form_check(&ratio(1, 2), 12).unwrap();
        assert_eq!(c.lhs.coeff(0), rat(1));
        assert_passes(c);
        assert_passes(bessel_form_check(&ratio(3, 2), 8).unwrap());
        assert!(bessel_form_check(&ratio(-1, 2), 8).is_err());
    }
}
