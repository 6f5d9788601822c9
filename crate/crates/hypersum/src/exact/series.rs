//! Truncated formal power series with exact rational coefficients.
//!
//! The series carries coefficients of `x^0 .. x^N` and every ring operation
//! truncates consistently at order `N`. Binary operations between series of
//! different orders truncate to the smaller one.

use num_traits::{One, Zero};

use super::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The monomial `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Binomial series `(1 + x)^e` for arbitrary rational exponent `e`.
    pub fn binomial_series(e: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        coeffs.push(c.clone());
        for k in 0..order {
            // C(e, k+1) = C(e, k) * (e - k) / (k + 1)
            c = c * (e - rat(k as i64)) / rat(k as i64 + 1);
            coeffs.push(c.clone());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`, truncating at the order.
    pub fn mul_xpow(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        Self { coeffs }
    }

    /// Replace `x` by `x^factor`, keeping the same truncation order.
    pub fn stretched(&self, factor: usize) -> Self {
        assert!(factor >= 1);
        let n = self.coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            match k.checked_mul(factor) {
                Some(i) if i < n => coeffs[i] = c.clone(),
                _ => break,
            }
        }
        Self { coeffs }
    }

    /// Substitute `inner` (which must have zero constant term) for `x`.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "composition requires zero constant term"
        );
        let order = self.order().min(inner.order());
        let mut acc = Self::constant(self.coeff(order), order);
        for k in (0..order).rev() {
            acc = &(&acc * &inner.truncated(order)) + &Self::constant(self.coeff(k), order);
        }
        acc
    }

    /// Termwise derivative, truncated at the same order (top coefficient 0).
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        for k in 1..n {
            coeffs[k - 1] = &self.coeffs[k] * rat(k as i64);
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Self {
        assert!(!self.coeffs[0].is_zero(), "inverse requires unit constant term");
        let n = self.coeffs.len();
        let c0 = self.coeffs[0].clone();
        let mut inv = vec![Rational::zero(); n];
        inv[0] = Rational::one() / &c0;
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 0..k {
                acc += &inv[j] * &self.coeffs[k - j];
            }
            inv[k] = -acc / &c0;
        }
        Self { coeffs: inv }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// First index where the two series differ (compared through the smaller
    /// order), with both coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, Rational, Rational)> {
        let order = self.order().min(other.order());
        (0..=order).find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then_some((k, a, b))
        })
    }
}

impl std::ops::Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }
}

impl std::ops::Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| self.coeff(k) - rhs.coeff(k)).collect(),
        }
    }
}

impl std::ops::Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let b = rhs.coeff(j);
                if !b.is_zero() {
                    coeffs[i + j] += &a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl std::ops::Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scaled(&rat(-1))
    }
}

/// `exp(c x)` to the given order.
pub fn exp_series(c: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 0..order {
        term = term * c / rat(k as i64 + 1);
        coeffs.push(term.clone());
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `cosh(x)` to the given order.
pub fn cosh_series(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut inv_fact = Rational::one();
    for n in 0..=order {
        if n > 0 {
            inv_fact /= rat(n as i64);
        }
        if n % 2 == 0 {
            coeffs[n] = inv_fact.clone();
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `sinh(x)` to the given order.
pub fn sinh_series(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut inv_fact = Rational::one();
    for n in 0..=order {
        if n > 0 {
            inv_fact /= rat(n as i64);
        }
        if n % 2 == 1 {
            coeffs[n] = inv_fact.clone();
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn exp_series_matches_factorials() {
        let e = exp_series(&rat(1), 4);
        assert_eq!(e.coeffs(), &[rat(1), rat(1), ratio(1, 2), ratio(1, 6), ratio(1, 24)]);
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-x) composed with 2x gives 1/(1-2x)
        let geo = TruncatedSeries::from_coeffs((0..=6).map(|_| rat(1)).collect());
        let inner = TruncatedSeries::x(6).scaled(&rat(2));
        let got = geo.compose(&inner);
        for k in 0..=6usize {
            assert_eq!(got.coeff(k), rat(1i64 << k));
        }
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let mut one_minus_x = TruncatedSeries::one(5);
        one_minus_x = &one_minus_x - &TruncatedSeries::x(5);
        let inv = one_minus_x.inverse();
        assert!((0..=5).all(|k| inv.coeff(k) == rat(1)));
    }

    #[test]
    fn binomial_series_integer_exponent() {
        let s = TruncatedSeries::binomial_series(&rat(3), 5);
        assert_eq!(
            &s.coeffs()[..4],
            &[rat(1), rat(3), rat(3), rat(1)],
        );
        assert_eq!(s.coeff(4), rat(0));
    }

    #[test]
    fn binomial_series_multiplicative() {
        let a = ratio(1, 2);
        let b = ratio(-5, 3);
        let lhs = &TruncatedSeries::binomial_series(&a, 10)
            * &TruncatedSeries::binomial_series(&b, 10);
        let rhs = TruncatedSeries::binomial_series(&(a + b), 10);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn stretch_and_shift() {
        let s = exp_series(&rat(1), 8).stretched(2).mul_xpow(1);
        // x * exp(x^2): coefficient of x^5 is 1/2!
        assert_eq!(s.coeff(5), ratio(1, 2));
        assert_eq!(s.coeff(4), rat(0));
    }

    #[test]
    fn derivative_of_exp_is_exp() {
        let e = exp_series(&rat(1), 6);
        assert_eq!(&e.derivative().coeffs()[..6], &e.coeffs()[..6]);
    }
}
