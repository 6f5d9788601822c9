//! Dense univariate polynomials over the rationals. Small helper used for
//! the sigma-coefficient expansion and for certified tail bounds, where the
//! term ratio of a series is a ratio of two polynomials in the index.

use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    /// Coefficients, lowest degree first. No trailing zeros except for the
    /// zero polynomial, which is `[0]`.
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![Rational::zero()])
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x + c`
    pub fn x_plus(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `x -> x + 1`.
    pub fn shift_by_one(&self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &Poly::x_plus(Rational::one())) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of absolute values of all coefficients.
    pub fn abs_coeff_sum(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Sum of |coefficients| of all terms of degree < degree().
    pub fn abs_lower_coeff_sum(&self) -> Rational {
        self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .sum()
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: Self) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: Self) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: Self) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

/// `(d + x)_m` as a polynomial in `x`.
pub fn rising_factorial_poly(d: &Rational, m: u32) -> Poly {
    let mut acc = Poly::one();
    for i in 0..m {
        acc = &acc * &Poly::x_plus(d + rat(i as i64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rising_factorial_expansion() {
        // (2 + x)_1 = 2 + x
        assert_eq!(rising_factorial_poly(&rat(2), 1).coeffs(), &[rat(2), rat(1)]);
        // (1 + x)_2 = (1+x)(2+x) = 2 + 3x + x^2
        assert_eq!(
            rising_factorial_poly(&rat(1), 2).coeffs(),
            &[rat(2), rat(3), rat(1)]
        );
    }

    #[test]
    fn shift_matches_eval() {
        let p = Poly::new(vec![ratio(1, 3), rat(-2), rat(5)]);
        let q = p.shift_by_one();
        for x in -4..4 {
            assert_eq!(q.eval(&rat(x)), p.eval(&rat(x + 1)));
        }
    }
}
