//! Evaluation of generalized hypergeometric series: terminating series
//! exactly, non-terminating series numerically with a certified truncation
//! bound, and as truncated formal power series in the argument.
//!
//! The unit-argument numeric path sums an exact rational partial sum and
//! then evaluates the tail by telescoping: a rational function `g` with
//! `g(j) - r(j) g(j+1) = 1 + delta(j)` is constructed from the term ratio
//! `r(j)` (exact Laurent algebra in `1/j`), giving
//! `sum_{j>=K} t_j = t_K g(K) - sum_{j>=K} t_j delta(j)`. The leftover is
//! bounded rigorously from the exact coefficients of `delta`, so the
//! reported `tail_bound` is a true bound even at 50-digit targets where a
//! bare partial sum of a polynomially decaying series could never reach.

use num_traits::{One, Signed, Zero};

use crate::certified::{decimal_string, pow10_neg, sci_string};
use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::series::TruncatedSeries;
use crate::exact::{as_non_positive_integer, rat, ratio, Rational};

/// Parameter rows of a `pFq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperSpec {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

/// A numeric evaluation: `estimate` is exact rational data whose distance
/// to the true sum is at most `tail_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericValue {
    pub estimate: Rational,
    pub tail_bound: Rational,
    pub terms_used: u64,
}

impl NumericValue {
    pub fn exact(value: Rational, terms_used: u64) -> Self {
        Self {
            estimate: value,
            tail_bound: Rational::zero(),
            terms_used,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (&self.estimate - x).abs() <= self.tail_bound
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        (&self.estimate - &other.estimate).abs() <= &self.tail_bound + &other.tail_bound
    }

    pub fn estimate_string(&self, digits: u32) -> String {
        decimal_string(&self.estimate, digits)
    }

    pub fn tail_bound_string(&self) -> String {
        sci_string(&self.tail_bound, 3)
    }
}

impl std::fmt::Display for HyperSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_row = |row: &[Rational]| {
            row.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}F{}[{}; {}]", self.upper.len(), self.lower.len(), fmt_row(&self.upper), fmt_row(&self.lower))
    }
}

impl HyperSpec {
    /// A lower parameter may be a non-positive integer only when termination
    /// cuts the series off before the pole is reached.
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        let spec = Self { upper, lower };
        if let Some(pole) = spec.unrescued_pole(u64::MAX) {
            return Err(pole);
        }
        Ok(spec)
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    /// Smallest `n` such that some upper parameter equals `-n`.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.iter().filter_map(as_non_positive_integer).min()
    }

    /// A pole of `1/(l)_k` reached within `range` terms and not rescued by
    /// earlier termination.
    fn unrescued_pole(&self, range: u64) -> Option<Error> {
        let cutoff = self.termination_index().unwrap_or(u64::MAX);
        for l in &self.lower {
            if let Some(pole_at) = as_non_positive_integer(l) {
                // (l)_k first vanishes at k = pole_at + 1
                if pole_at < cutoff && pole_at < range {
                    return Some(Error::Pole {
                        param: l.to_string(),
                        index: pole_at + 1,
                    });
                }
            }
        }
        None
    }

    /// Exact sum of a terminating series.
    pub fn eval_terminating(&self, z: &Rational) -> Result<Rational> {
        let n = self.termination_index().ok_or(Error::NotTerminating)?;
        if let Some(pole) = self.unrescued_pole(n + 1) {
            return Err(pole);
        }
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for k in 0..n {
            let kq = rat(k as i64);
            for u in &self.upper {
                term *= u + &kq;
            }
            for l in &self.lower {
                term /= l + &kq;
            }
            term *= z / (&kq + rat(1));
            sum += &term;
        }
        Ok(sum)
    }

    /// Truncated formal power series: coefficient of `x^k` is
    /// `prod(upper)_k / prod(lower)_k * scale^k / k!`.
    pub fn eval_series(&self, scale: &Rational, order: usize) -> Result<TruncatedSeries> {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        let mut c = Rational::one();
        'outer: for k in 0..order {
            let kq = rat(k as i64);
            for u in &self.upper {
                let f = u + &kq;
                if f.is_zero() {
                    break 'outer; // series terminated; rest stays zero
                }
                c *= f;
            }
            for l in &self.lower {
                let f = l + &kq;
                if f.is_zero() {
                    return Err(Error::Pole {
                        param: l.to_string(),
                        index: k as u64 + 1,
                    });
                }
                c /= f;
            }
            c *= scale / (&kq + rat(1));
            coeffs[k + 1] = c.clone();
        }
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }

    /// Numeric evaluation with a certified truncation bound.
    pub fn eval_numeric(&self, z: &Rational, digits: u32, max_terms: u64) -> Result<NumericValue> {
        if let Some(n) = self.termination_index() {
            if let Some(pole) = self.unrescued_pole(n + 1) {
                return Err(pole);
            }
            return Ok(NumericValue::exact(self.eval_terminating(z)?, n + 1));
        }
        if let Some(pole) = self.unrescued_pole(u64::MAX) {
            return Err(pole);
        }
        if z.is_zero() {
            return Ok(NumericValue::exact(Rational::one(), 1));
        }
        let p = self.upper.len();
        let q = self.lower.len();
        if p > q + 1 {
            return Err(Error::ConvergenceDomain(format!(
                "{self} diverges for z != 0 without termination"
            )));
        }
        if z.abs() > Rational::one() {
            return Err(Error::ConvergenceDomain(format!(
                "{self} diverges for |z| > 1"
            )));
        }
        let num: Poly = self
            .upper
            .iter()
            .fold(Poly::one(), |acc, u| &acc * &Poly::x_plus(u.clone()));
        let den = self
            .lower
            .iter()
            .fold(Poly::x_plus(Rational::one()), |acc, l| {
                &acc * &Poly::x_plus(l.clone())
            });
        if z == &Rational::one() && p == q + 1 {
            let series = UnitSeries {
                first_index: 0,
                first_term: Rational::one(),
                num,
                den,
            };
            return series.sum_certified(digits, max_terms);
        }
        if z.abs() == Rational::one() && p == q + 1 {
            // z = -1 on the boundary: not needed by the catalog
            return Err(Error::ConvergenceDomain(format!(
                "{self} at z = -1 is outside the supported numeric domain"
            )));
        }
        sum_geometric(&num, &den, z, digits, max_terms)
    }
}

/// A series `sum_{j >= first_index} t_j` with `t_{first_index} = first_term`
/// and exact rational term ratio `t_{j+1}/t_j = num(j)/den(j)`, argument 1.
/// Both polynomials must be monic of the same degree.
#[derive(Debug, Clone)]
pub struct UnitSeries {
    pub first_index: u64,
    pub first_term: Rational,
    pub num: Poly,
    pub den: Poly,
}

impl UnitSeries {
    /// Sub-leading coefficient gap: the term ratio behaves as `1 - s/j`.
    /// Convergence of the sum requires `s > 1`.
    pub fn decay_exponent(&self) -> Rational {
        let d = self.den.degree();
        self.den.coeff(d - 1) - self.num.coeff(d - 1)
    }

    pub fn sum_certified(&self, digits: u32, max_terms: u64) -> Result<NumericValue> {
        assert_eq!(self.num.degree(), self.den.degree(), "ratio must tend to 1");
        assert!(self.num.leading().is_one() && self.den.leading().is_one());
        let d = self.den.degree();
        let s = self.decay_exponent();
        if s <= Rational::one() {
            return Err(Error::ConvergenceDomain(format!(
                "unit-argument series with decay exponent {s} <= 1 does not converge"
            )));
        }
        let mu = (&s + rat(1)) / rat(2);
        let target = pow10_neg(digits);

        // start of the certified regime: positive factors and a valid
        // power-law majorant |r(j)| <= 1 - mu/(j+1)
        let positivity = rational_ceil(&self.num.abs_lower_coeff_sum())
            .max(rational_ceil(&self.den.abs_lower_coeff_sum()));
        let majorant_poly = &(&Poly::x_plus(Rational::one() - &mu) * &self.den)
            - &(&Poly::x_plus(Rational::one()) * &self.num);
        debug_assert_eq!(majorant_poly.coeff(d), &s - &mu);
        let majorant_from =
            rational_ceil(&(majorant_poly.abs_lower_coeff_sum() / (&s - &mu)));
        let warmup = self.first_index + 2 * d as u64 + 20;
        let mut k_start = (positivity.max(majorant_from) + 1).max(warmup).max(32);

        let mut expansion_order = 16usize;
        loop {
            if k_start.saturating_sub(self.first_index) > max_terms {
                return Err(Error::BudgetExceeded {
                    budget: max_terms,
                    target: sci_string(&target, 2),
                });
            }
            // exact partial sum through k_start - 1, plus t_{k_start}
            let mut term = self.first_term.clone();
            let mut partial = Rational::zero();
            for j in self.first_index..k_start {
                partial += &term;
                let jq = rat(j as i64);
                term = term * self.num.eval(&jq) / self.den.eval(&jq);
            }
            let tail = self.telescoped_tail(k_start, &term, &mu, expansion_order);
            if let Some((correction, bound)) = tail {
                if bound < target {
                    let estimate = partial + correction;
                    return Ok(NumericValue {
                        estimate,
                        tail_bound: bound,
                        terms_used: k_start - self.first_index,
                    });
                }
            }
            if expansion_order < 48 {
                expansion_order += 16;
            } else {
                k_start *= 2;
            }
        }
    }

    /// Tail `sum_{j >= k} t_j` as `t_k g(k)` plus a rigorous bound on the
    /// residual, where `g` solves `g(j) - r(j) g(j+1) = 1` through order
    /// `m` in `1/j`.
    fn telescoped_tail(
        &self,
        k: u64,
        t_k: &Rational,
        mu: &Rational,
        m: usize,
    ) -> Option<(Rational, Rational)> {
        let d = self.den.degree();
        let order = m + 1;
        // term ratio as a power series in w = 1/j
        let reversed = |p: &Poly| {
            TruncatedSeries::from_coeffs((0..=order).map(|i| p.coeff(d.wrapping_sub(i))).collect())
        };
        let num_hat = reversed(&self.num);
        let den_hat = reversed(&self.den);
        let r_hat = &num_hat * &den_hat.inverse();

        // L[j] = j - r(j) (j+1): series ((1 - r)/w) - r
        let one = TruncatedSeries::one(order);
        let one_minus_r = &one - &r_hat;
        debug_assert!(one_minus_r.coeff(0).is_zero());
        let mut shifted = vec![Rational::zero(); order + 1];
        for i in 0..order {
            shifted[i] = one_minus_r.coeff(i + 1);
        }
        let l_linear = &TruncatedSeries::from_coeffs(shifted) - &r_hat;

        // L[w^i] = w^i (1 - r(j) (1+w)^{-i})
        let l_basis: Vec<TruncatedSeries> = (0..m)
            .map(|i| {
                let shift = TruncatedSeries::binomial_series(&rat(-(i as i64)), order);
                let inner = &one - &(&r_hat * &shift);
                inner.mul_xpow(i)
            })
            .collect();

        // triangular solve for g = c_{-1} j + sum c_i w^i
        let mut residual = TruncatedSeries::one(order);
        let lead = l_linear.coeff(0);
        if lead.is_zero() {
            return None;
        }
        let c_lin = residual.coeff(0) / &lead;
        residual = &residual - &l_linear.scaled(&c_lin);
        let mut c = Vec::with_capacity(m);
        for (i, basis) in l_basis.iter().enumerate() {
            let pivot = basis.coeff(i + 1);
            if pivot.is_zero() {
                return None;
            }
            let ci = residual.coeff(i + 1) / &pivot;
            residual = &residual - &basis.scaled(&ci);
            c.push(ci);
        }
        debug_assert!((0..=m).all(|i| residual.coeff(i).is_zero()));

        // g(x) = n_poly(x) / x^(m-1)
        let mpow = m.saturating_sub(1);
        let mut n_coeffs = vec![Rational::zero(); m + 1];
        n_coeffs[m] = c_lin;
        for (i, ci) in c.iter().enumerate() {
            n_coeffs[m - 1 - i] = ci.clone();
        }
        let n_poly = Poly::new(n_coeffs);

        // delta(j) = [den*N(j)*(j+1)^mp - num*N(j+1)*j^mp - den*j^mp*(j+1)^mp]
        //            / (den(j) * j^mp * (j+1)^mp)
        let x_mp = Poly::x_plus(Rational::zero()).pow(mpow);
        let x1_mp = Poly::x_plus(Rational::one()).pow(mpow);
        let numerator = &(&(&self.den * &n_poly) * &x1_mp)
            - &(&(&(&self.num * &n_poly.shift_by_one()) * &x_mp) + &(&(&self.den * &x_mp) * &x1_mp));
        let kq = rat(k as i64);
        let full_deg = d + 2 * mpow;
        if numerator.is_zero() {
            // exact telescoping, no residual at all
            let g_k = n_poly.eval(&kq) / kq.pow(mpow as i32);
            return Some((t_k * g_k, Rational::zero()));
        }
        if numerator.degree() + 1 > full_deg {
            return None; // no usable decay from this expansion order
        }
        // sup_{j>=k} |delta(j)|
        let mut weighted = Rational::zero();
        for (i, coeff) in numerator.coeffs().iter().enumerate() {
            weighted += coeff.abs() * kq.pow(i as i32);
        }
        let den_low = Rational::one() - self.den.abs_lower_coeff_sum() / &kq;
        if !den_low.is_positive() {
            return None;
        }
        let sup_delta = weighted / (kq.pow(full_deg as i32) * den_low);

        // crude bound on sum_{j>=k} |t_j| from the power-law majorant
        let mu_ceil = rational_ceil(mu) as i32;
        let crude = t_k.abs() * &kq * (Rational::one() + Rational::one() / &kq).pow(mu_ceil)
            / (mu - rat(1));

        let g_k = n_poly.eval(&kq) / kq.pow(mpow as i32);
        Some((t_k * g_k, sup_delta * crude))
    }
}

fn rational_ceil(x: &Rational) -> u64 {
    let c = x.ceil().to_integer();
    if c.is_negative() {
        0
    } else {
        c.try_into().unwrap_or(u64::MAX)
    }
}

/// Plain summation with a geometric tail bound, for `|z| < 1` or when the
/// term ratio tends to zero.
fn sum_geometric(
    num: &Poly,
    den: &Poly,
    z: &Rational,
    digits: u32,
    max_terms: u64,
) -> Result<NumericValue> {
    let target = pow10_neg(digits);
    let z_abs = z.abs();
    let rho = if num.degree() == den.degree() {
        (Rational::one() + &z_abs) / rat(2)
    } else {
        z_abs.clone().max(ratio(1, 2))
    };
    // j from which rho * den(j) - |z| * num(j) >= 0 is certified
    let lead_gap = if num.degree() == den.degree() {
        &rho - &z_abs
    } else {
        rho.clone()
    };
    let slack = &rho * den.abs_lower_coeff_sum() + &z_abs * num.abs_coeff_sum();
    let certified_from = rational_ceil(&(slack / lead_gap)) + 1;

    let geom_factor = &rho / (Rational::one() - &rho);
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    let mut j = 0u64;
    loop {
        sum += &term;
        let jq = rat(j as i64);
        term = term * num.eval(&jq) * z / den.eval(&jq);
        j += 1;
        if j >= certified_from {
            let bound = term.abs() * &geom_factor;
            if bound < target {
                return Ok(NumericValue {
                    estimate: sum + &term,
                    tail_bound: bound,
                    terms_used: j + 1,
                });
            }
        }
        if j >= max_terms {
            return Err(Error::BudgetExceeded {
                budget: max_terms,
                target: sci_string(&target, 2),
            });
        }
    }
}
