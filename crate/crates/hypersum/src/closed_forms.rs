//! Closed-form right-hand sides for the summation identities in the
//! catalog: terminating argument-2 sums, the integer-excess unit-argument
//! summation (gamma-ratio weighted finite sum), and the digamma-valued
//! infinite sums with their finite corrections.
//!
//! Every function returns either an exact rational or a certified numeric
//! value, and each is paired (in the identity registry and tests) with an
//! independent evaluation of the series it claims to sum.

use num_traits::{One, Signed, Zero};

use crate::certified::{decimal_string, exp_certified, CertifiedReal};
use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::{factorial, pochhammer, pochhammer_is_zero, rat, ratio, Rational};
use crate::hyper::{NumericValue, UnitSeries};
use crate::km::{km_coefficients_stirling, KMFamily};
use crate::special::{digamma, gamma_ratio_exact, log_gamma, psi_diff_exact, PrecisionContext};

/// An identity side: exact rational when the parameters allow it,
/// certified numeric otherwise.
#[derive(Debug, Clone)]
pub enum Value {
    Exact(Rational),
    Numeric(CertifiedReal),
}

impl Value {
    pub fn as_certified(&self) -> CertifiedReal {
        match self {
            Value::Exact(x) => CertifiedReal::exact(x.clone()),
            Value::Numeric(v) => v.clone(),
        }
    }

    pub fn add_exact(&self, c: &Rational) -> Value {
        match self {
            Value::Exact(x) => Value::Exact(x + c),
            Value::Numeric(v) => Value::Numeric(v.add_exact(c)),
        }
    }

    /// Agreement with an independently computed series value, within the
    /// combined error budgets.
    pub fn agrees_with_numeric(&self, v: &NumericValue) -> bool {
        let me = self.as_certified();
        (&me.approx - &v.estimate).abs() <= &me.err + &v.tail_bound
    }

    pub fn display_string(&self, digits: u32) -> String {
        match self {
            Value::Exact(x) => x.to_string(),
            Value::Numeric(v) => decimal_string(&v.approx, digits),
        }
    }
}

/// Even terminating argument-2 sum
/// `3F2(-2n, a, d+1; 2a+1, d; 2) = (1/2)_n / (a+1/2)_n`,
/// independent of `d`.
pub fn f32_even(n: u64, a: &Rational, _d: &Rational) -> Result<Rational> {
    let half_shift = a + ratio(1, 2);
    if pochhammer_is_zero(&half_shift, n) {
        return Err(Error::Domain(format!(
            "(a+1/2)_n vanishes for a = {a}, n = {n}"
        )));
    }
    Ok(pochhammer(&ratio(1, 2), n) / pochhammer(&half_shift, n))
}

/// Odd terminating argument-2 sum
/// `3F2(-2n-1, a, d+1; 2a+1, d; 2) = (1-2a/d)/(2a+1) * (3/2)_n / (a+3/2)_n`.
pub fn f32_odd(n: u64, a: &Rational, d: &Rational) -> Result<Rational> {
    if d.is_zero() {
        return Err(Error::Domain("d = 0 is excluded".into()));
    }
    if (rat(2) * a + rat(1)).is_zero() {
        return Err(Error::Domain("a = -1/2 is excluded".into()));
    }
    let shift = a + ratio(3, 2);
    if pochhammer_is_zero(&shift, n) {
        return Err(Error::Domain(format!(
            "(a+3/2)_n vanishes for a = {a}, n = {n}"
        )));
    }
    let prefactor = (Rational::one() - rat(2) * a / d) / (rat(2) * a + rat(1));
    Ok(prefactor * pochhammer(&ratio(3, 2), n) / pochhammer(&shift, n))
}

/// `2F1(-2n, a; 2a; 2) = (1/2)_n / (a+1/2)_n`.
pub fn f21_even(n: u64, a: &Rational) -> Result<Rational> {
    if pochhammer_is_zero(&(rat(2) * a), 2 * n) {
        return Err(Error::Domain(format!("(2a)_k vanishes in range for a = {a}")));
    }
    let half_shift = a + ratio(1, 2);
    if pochhammer_is_zero(&half_shift, n) {
        return Err(Error::Domain(format!(
            "(a+1/2)_n vanishes for a = {a}, n = {n}"
        )));
    }
    Ok(pochhammer(&ratio(1, 2), n) / pochhammer(&half_shift, n))
}

/// `2F1(-2n-1, a; 2a; 2) = 0`.
pub fn f21_odd(n: u64, a: &Rational) -> Result<Rational> {
    if pochhammer_is_zero(&(rat(2) * a), 2 * n + 1) {
        return Err(Error::Domain(format!("(2a)_k vanishes in range for a = {a}")));
    }
    Ok(Rational::zero())
}

/// Gamma-ratio factor `G(c) G(c-a-b) / (G(c-a) G(c-b))`, exact when the
/// arguments pair off with integer differences.
fn gamma_quotient(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    ctx: &PrecisionContext,
) -> Result<Value> {
    let cab = c - a - b;
    let ca = c - a;
    let cb = c - b;
    // pairing G(c)/G(c-a) * G(c-a-b)/G(c-b) needs integer a;
    // pairing G(c)/G(c-b) * G(c-a-b)/G(c-a) needs integer b
    for (x1, y1, x2, y2) in [(c, &ca, &cab, &cb), (c, &cb, &cab, &ca)] {
        if let (Some(p), Some(q)) = (gamma_ratio_exact(x1, y1), gamma_ratio_exact(x2, y2)) {
            return Ok(Value::Exact(p * q));
        }
    }
    for arg in [c, &cab, &ca, &cb] {
        if !arg.is_positive() {
            return Err(Error::Domain(format!(
                "gamma argument {arg} is not positive and does not reduce exactly"
            )));
        }
    }
    let w = PrecisionContext::new(ctx.working_digits());
    let lg = log_gamma(c, &w)?
        .add(&log_gamma(&cab, &w)?)
        .sub(&log_gamma(&ca, &w)?)
        .sub(&log_gamma(&cb, &w)?);
    Ok(Value::Numeric(exp_certified(&lg, w.working_digits())))
}

/// Closed form for the unit-argument series with integer-excess parameter
/// pairs:
/// `F(a, b, (d+m); c, (d); 1)
///    = G(c)G(c-a-b)/(G(c-a)G(c-b)) * sum_k (-1)^k (a)_k (b)_k C_k / (1+a+b-c)_k`,
/// valid for `c - a - b > m`.
pub fn karlsson_minton_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    family: &KMFamily,
    ctx: &PrecisionContext,
) -> Result<Value> {
    let m = family.total_m();
    if c - a - b <= rat(m as i64) {
        return Err(Error::ConvergenceDomain(format!(
            "requires c - a - b > m: got {} <= {m}",
            c - a - b
        )));
    }
    let table = km_coefficients_stirling(family);
    let base = Rational::one() + a + b - c;
    let mut sum = Rational::zero();
    for k in 0..=m as u64 {
        let numer = pochhammer(a, k) * pochhammer(b, k) * &table.coeffs[k as usize];
        if pochhammer_is_zero(&base, k) {
            if !numer.is_zero() {
                return Err(Error::Pole {
                    param: base.to_string(),
                    index: k,
                });
            }
            continue;
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        sum += sign * numer / pochhammer(&base, k);
    }
    match gamma_quotient(a, b, c, ctx)? {
        Value::Exact(g) => Ok(Value::Exact(g * sum)),
        Value::Numeric(g) => Ok(Value::Numeric(g.scale(&sum))),
    }
}

/// `sum_{k>=1} (a)_k / (k (c)_k) = psi(c) - psi(c-a)` for `c - a > 0`;
/// exact when `a` is a non-negative integer.
pub fn entry9(a: &Rational, c: &Rational, ctx: &PrecisionContext) -> Result<Value> {
    if !(c - a).is_positive() {
        return Err(Error::ConvergenceDomain(format!(
            "requires c - a > 0: got {}",
            c - a
        )));
    }
    if a.is_integer() && !a.is_negative() {
        let n: u64 = a.to_integer().try_into().unwrap();
        return Ok(Value::Exact(psi_diff_exact(n, c)?));
    }
    if !c.is_positive() {
        return Err(Error::Domain(format!(
            "digamma path requires c > 0, got {c}"
        )));
    }
    let psi_c = digamma(c, ctx)?;
    let psi_ca = digamma(&(c - a), ctx)?;
    Ok(Value::Numeric(psi_c.sub(&psi_ca)))
}

/// Finite correction `sum_{k=1}^m (-1)^k (a)_k (k-1)! C_k / (1+a-c)_k`.
fn excess_correction(a: &Rational, c: &Rational, family: &KMFamily) -> Result<Rational> {
    let table = km_coefficients_stirling(family);
    let base = Rational::one() + a - c;
    let mut sum = Rational::zero();
    for k in 1..=family.total_m() as u64 {
        let numer =
            pochhammer(a, k) * Rational::from_integer(factorial(k - 1)) * &table.coeffs[k as usize];
        if pochhammer_is_zero(&base, k) {
            if !numer.is_zero() {
                return Err(Error::Pole {
                    param: base.to_string(),
                    index: k,
                });
            }
            continue;
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        sum += sign * numer / pochhammer(&base, k);
    }
    Ok(sum)
}

/// Extension of `entry9` to integer-excess parameter pairs:
/// `sum_{k>=1} (a)_k prod_i (d_i+k)_{m_i} / (k (c)_k prod_i (d_i)_{m_i})`
/// equals `psi(c) - psi(c-a)` plus a finite correction; valid `c - a > m`.
/// `family = None` means no excess pairs (the plain `entry9`).
pub fn entry9_extended(
    a: &Rational,
    c: &Rational,
    family: Option<&KMFamily>,
    ctx: &PrecisionContext,
) -> Result<Value> {
    let Some(family) = family else {
        return entry9(a, c, ctx);
    };
    let m = family.total_m();
    if c - a <= rat(m as i64) {
        return Err(Error::ConvergenceDomain(format!(
            "requires c - a > m: got {} <= {m}",
            c - a
        )));
    }
    let correction = excess_correction(a, c, family)?;
    Ok(entry9(a, c, ctx)?.add_exact(&correction))
}

/// Single-pair specialization with the binomial coefficient form:
/// `psi(c) - psi(c-a) + m! sum_{k=1}^m (-1)^k (a)_k / (k (m-k)! (1+a-c)_k (d)_k)`.
pub fn entry9_r1(
    a: &Rational,
    c: &Rational,
    d: &Rational,
    m: u32,
    ctx: &PrecisionContext,
) -> Result<Value> {
    if m == 0 {
        return entry9(a, c, ctx);
    }
    if c - a <= rat(m as i64) {
        return Err(Error::ConvergenceDomain(format!(
            "requires c - a > m: got {} <= {m}",
            c - a
        )));
    }
    let base = Rational::one() + a - c;
    let mut sum = Rational::zero();
    for k in 1..=m as u64 {
        let numer = pochhammer(a, k);
        if pochhammer_is_zero(&base, k) || pochhammer_is_zero(d, k) {
            if !numer.is_zero() {
                return Err(Error::Pole {
                    param: format!("(1+a-c)_k or (d)_k at a={a}, c={c}, d={d}"),
                    index: k,
                });
            }
            continue;
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        sum += sign * numer
            / (rat(k as i64)
                * Rational::from_integer(factorial(m as u64 - k))
                * pochhammer(&base, k)
                * pochhammer(d, k));
    }
    sum *= Rational::from_integer(factorial(m as u64));
    Ok(entry9(a, c, ctx)?.add_exact(&sum))
}

/// Independent numeric evaluation of the series side of `entry9` /
/// `entry9_extended`: `sum_{k>=1} (a)_k prod_i (d_i+k)_{m_i}
/// / (k (c)_k prod_i (d_i)_{m_i})`, via certified unit-argument summation.
pub fn entry9_lhs(
    a: &Rational,
    c: &Rational,
    family: Option<&KMFamily>,
    digits: u32,
    max_terms: u64,
) -> Result<NumericValue> {
    if crate::exact::is_non_positive_integer(c) {
        return Err(Error::Pole {
            param: c.to_string(),
            index: 0,
        });
    }
    // term ratio t_{k+1}/t_k = k (a+k) prod(d_i+m_i+k) / ((k+1)(c+k) prod(d_i+k))
    let mut num = &Poly::x_plus(Rational::zero()) * &Poly::x_plus(a.clone());
    let mut den = &Poly::x_plus(Rational::one()) * &Poly::x_plus(c.clone());
    let mut first = a / c;
    if let Some(f) = family {
        for (d, m) in f.pairs() {
            num = &num * &Poly::x_plus(d + rat(*m as i64));
            den = &den * &Poly::x_plus(d.clone());
            first *= pochhammer(&(d + rat(1)), *m as u64) / pochhammer(d, *m as u64);
        }
    }
    let series = UnitSeries {
        first_index: 1,
        first_term: first,
        num,
        den,
    };
    series.sum_certified(digits, max_terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certified::pow10_neg;
    use crate::hyper::HyperSpec;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    /// Direct-summation oracle for the terminating argument-2 sums.
    fn lhs_3f2(top: i64, a: &Rational, d: &Rational) -> Rational {
        let spec = HyperSpec::new(
            vec![rat(top), a.clone(), d + rat(1)],
            vec![rat(2) * a + rat(1), d.clone()],
        )
        .unwrap();
        spec.eval_terminating(&rat(2)).unwrap()
    }

    #[test]
    fn f32_even_examples() {
        assert_eq!(f32_even(1, &rat(1), &rat(3)).unwrap(), ratio(1, 3));
        assert_eq!(f32_even(0, &ratio(5, 7), &rat(2)).unwrap(), rat(1));
        assert_eq!(f32_even(2, &ratio(1, 2), &rat(1)).unwrap(), ratio(3, 8));
        assert!(f32_even(2, &ratio(-3, 2), &rat(1)).is_err());
    }

    #[test]
    fn f32_even_matches_series_and_ignores_d() {
        for (n, a) in [(1i64, ratio(1, 3)), (2, rat(2)), (3, ratio(5, 2))] {
            let mut seen = None;
            for d in [rat(1), ratio(7, 3), rat(11), ratio(-5, 2)] {
                let rhs = f32_even(n as u64, &a, &d).unwrap();
                assert_eq!(lhs_3f2(-2 * n, &a, &d), rhs, "n={n} a={a} d={d}");
                if let Some(prev) = &seen {
                    assert_eq!(prev, &rhs, "value depends on d");
                }
                seen = Some(rhs);
            }
        }
    }

    #[test]
    fn f32_odd_examples() {
        assert_eq!(f32_odd(0, &rat(1), &rat(1)).unwrap(), ratio(-1, 3));
        assert_eq!(f32_odd(0, &rat(1), &rat(4)).unwrap(), ratio(1, 6));
        assert!(f32_odd(1, &rat(1), &rat(0)).is_err());
        assert!(f32_odd(1, &ratio(-1, 2), &rat(1)).is_err());
    }

    #[test]
    fn f32_odd_matches_series_and_vanishes_at_2a() {
        for (n, a, d) in [
            (0i64, rat(1), rat(3)),
            (1, ratio(2, 3), rat(2)),
            (2, ratio(5, 4), ratio(1, 2)),
        ] {
            let rhs = f32_odd(n as u64, &a, &d).unwrap();
            assert_eq!(lhs_3f2(-2 * n - 1, &a, &d), rhs, "n={n} a={a} d={d}");
        }
        for n in 0u64..4 {
            assert_eq!(f32_odd(n, &ratio(3, 4), &ratio(3, 2)).unwrap(), rat(0));
        }
    }

    #[test]
    fn f21_examples() {
        assert_eq!(f21_even(1, &rat(1)).unwrap(), ratio(1, 3));
        assert_eq!(f21_even(0, &ratio(9, 5)).unwrap(), rat(1));
        assert_eq!(f21_odd(1, &rat(1)).unwrap(), rat(0));
        // against series: 2F1(-2n, a; 2a; 2)
        for (n, a) in [(1i64, ratio(3, 2)), (2, ratio(2, 5)), (3, rat(3))] {
            let even = HyperSpec::new(vec![rat(-2 * n), a.clone()], vec![rat(2) * &a])
                .unwrap()
                .eval_terminating(&rat(2))
                .unwrap();
            assert_eq!(even, f21_even(n as u64, &a).unwrap());
            let odd = HyperSpec::new(vec![rat(-2 * n - 1), a.clone()], vec![rat(2) * &a])
                .unwrap()
                .eval_terminating(&rat(2))
                .unwrap();
            assert_eq!(odd, rat(0));
        }
    }

    #[test]
    fn karlsson_minton_exact_example() {
        let family = KMFamily::single(rat(2), 1).unwrap();
        let v = karlsson_minton_rhs(&rat(1), &rat(1), &rat(5), &family, &ctx()).unwrap();
        match v {
            Value::Exact(x) => assert_eq!(x, ratio(5, 3)),
            Value::Numeric(_) => panic!("integer parameters should reduce exactly"),
        }
    }

    #[test]
    fn karlsson_minton_a_zero_is_one() {
        let family = KMFamily::parse("3:2").unwrap();
        let v = karlsson_minton_rhs(&rat(0), &ratio(1, 2), &rat(7), &family, &ctx()).unwrap();
        match v {
            Value::Exact(x) => assert_eq!(x, rat(1)),
            Value::Numeric(_) => panic!("a = 0 should be exact"),
        }
    }

    #[test]
    fn karlsson_minton_matches_series_exact_case() {
        let family = KMFamily::single(rat(2), 1).unwrap();
        let rhs = karlsson_minton_rhs(&rat(1), &rat(1), &rat(5), &family, &ctx()).unwrap();
        let lhs = HyperSpec::new(vec![rat(1), rat(1), rat(3)], vec![rat(5), rat(2)])
            .unwrap()
            .eval_numeric(&rat(1), 40, 100_000)
            .unwrap();
        assert!(rhs.agrees_with_numeric(&lhs));
    }

    #[test]
    fn karlsson_minton_matches_series_numeric_case() {
        // non-integer a and b: gamma factor evaluated numerically
        let family = KMFamily::single(rat(3), 1).unwrap();
        let (a, b, c) = (ratio(1, 2), ratio(1, 2), rat(4));
        let rhs = karlsson_minton_rhs(&a, &b, &c, &family, &ctx()).unwrap();
        let lhs = HyperSpec::new(
            vec![a.clone(), b.clone(), rat(4)],
            vec![c.clone(), rat(3)],
        )
        .unwrap()
        .eval_numeric(&rat(1), 42, 2_000_000)
        .unwrap();
        assert!(matches!(rhs, Value::Numeric(_)));
        assert!(rhs.agrees_with_numeric(&lhs), "rhs {} lhs {}", rhs.display_string(30), lhs.estimate_string(30));
    }

    #[test]
    fn karlsson_minton_domain_errors() {
        let family = KMFamily::single(rat(2), 1).unwrap();
        assert!(matches!(
            karlsson_minton_rhs(&rat(1), &rat(1), &rat(3), &family, &ctx()),
            Err(Error::ConvergenceDomain(_))
        ));
    }

    #[test]
    fn entry9_exact_examples() {
        match entry9(&rat(1), &rat(3), &ctx()).unwrap() {
            Value::Exact(x) => assert_eq!(x, ratio(1, 2)),
            _ => panic!("integer a must be exact"),
        }
        match entry9(&rat(0), &ratio(7, 2), &ctx()).unwrap() {
            Value::Exact(x) => assert_eq!(x, rat(0)),
            _ => panic!(),
        }
        assert!(entry9(&rat(3), &rat(2), &ctx()).is_err());
    }

    #[test]
    fn entry9_matches_series() {
        // exact case
        let rhs = entry9(&rat(1), &rat(3), &ctx()).unwrap();
        let lhs = entry9_lhs(&rat(1), &rat(3), None, 45, 100_000).unwrap();
        assert!(rhs.agrees_with_numeric(&lhs));
        assert!(lhs.tail_bound < pow10_neg(45));
        // numeric case: a = 1/2, c = 2
        let a = ratio(1, 2);
        let rhs = entry9(&a, &rat(2), &ctx()).unwrap();
        let lhs = entry9_lhs(&a, &rat(2), None, 40, 2_000_000).unwrap();
        assert!(matches!(rhs, Value::Numeric(_)));
        assert!(rhs.agrees_with_numeric(&lhs));
    }

    #[test]
    fn entry9_extended_examples() {
        let family = KMFamily::single(rat(2), 1).unwrap();
        match entry9_extended(&rat(1), &rat(4), Some(&family), &ctx()).unwrap() {
            Value::Exact(x) => assert_eq!(x, ratio(7, 12)),
            _ => panic!(),
        }
        // m = 0 reduction
        match entry9_extended(&rat(1), &rat(3), None, &ctx()).unwrap() {
            Value::Exact(x) => assert_eq!(x, ratio(1, 2)),
            _ => panic!(),
        }
        assert!(matches!(
            entry9_extended(&rat(3), &rat(3), Some(&family), &ctx()),
            Err(Error::ConvergenceDomain(_))
        ));
    }

    #[test]
    fn entry9_extended_matches_series() {
        let family = KMFamily::single(rat(3), 1).unwrap();
        let rhs = entry9_extended(&rat(2), &rat(6), Some(&family), &ctx()).unwrap();
        let lhs = entry9_lhs(&rat(2), &rat(6), Some(&family), 45, 200_000).unwrap();
        assert!(rhs.agrees_with_numeric(&lhs), "rhs {}", rhs.display_string(20));

        let fam2 = KMFamily::parse("2:1,5/2:1").unwrap();
        let rhs = entry9_extended(&ratio(3, 2), &rat(7), Some(&fam2), &ctx()).unwrap();
        let lhs = entry9_lhs(&ratio(3, 2), &rat(7), Some(&fam2), 40, 2_000_000).unwrap();
        assert!(rhs.agrees_with_numeric(&lhs));
    }

    #[test]
    fn entry9_r1_matches_extended() {
        match entry9_r1(&rat(1), &rat(4), &rat(2), 1, &ctx()).unwrap() {
            Value::Exact(x) => assert_eq!(x, ratio(7, 12)),
            _ => panic!(),
        }
        for (a, c, d, m) in [
            (rat(1), rat(5), rat(3), 2u32),
            (ratio(1, 3), rat(6), ratio(5, 2), 2),
            (rat(2), rat(9), rat(4), 3),
        ] {
            let fam = KMFamily::single(d.clone(), m).unwrap();
            let via_r1 = entry9_r1(&a, &c, &d, m, &ctx()).unwrap();
            let via_ext = entry9_extended(&a, &c, Some(&fam), &ctx()).unwrap();
            match (via_r1, via_ext) {
                (Value::Exact(x), Value::Exact(y)) => assert_eq!(x, y),
                (x, y) => assert!(
                    (x.as_certified().approx - y.as_certified().approx).abs() < pow10_neg(40)
                ),
            }
        }
    }
}
