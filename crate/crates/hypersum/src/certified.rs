//! High-precision real arithmetic with certified error bounds.
//!
//! A value is carried as an exact rational approximant together with a
//! rational upper bound on the distance to the true real number. Every
//! operation propagates the bound rigorously, so a result is always a
//! mathematically valid enclosure. Elementary functions (`ln`, `exp`,
//! `atan`) are computed from rational series with explicit tail bounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rat, ratio, Rational};

/// `x.approx` approximates an (often irrational) real to within `x.err`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedReal {
    pub approx: Rational,
    pub err: Rational,
}

/// `10^(-digits)` as a rational.
pub fn pow10_neg(digits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits))
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::from(2u32).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(2u32).pow((-e) as u32))
    }
}

impl CertifiedReal {
    pub fn exact(x: Rational) -> Self {
        Self {
            approx: x,
            err: Rational::zero(),
        }
    }

    pub fn new(approx: Rational, err: Rational) -> Self {
        debug_assert!(!err.is_negative());
        Self { approx, err }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    /// Upper bound on the absolute value of the true number.
    pub fn abs_upper(&self) -> Rational {
        self.approx.abs() + &self.err
    }

    /// Lower bound on the true number.
    pub fn lower(&self) -> Rational {
        &self.approx - &self.err
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.approx + &rhs.approx, &self.err + &rhs.err)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.approx - &rhs.approx, &self.err + &rhs.err)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.approx.clone(), self.err.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let err = self.approx.abs() * &rhs.err
            + rhs.approx.abs() * &self.err
            + &self.err * &rhs.err;
        Self::new(&self.approx * &rhs.approx, err)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.approx * c, &self.err * c.abs())
    }

    pub fn add_exact(&self, c: &Rational) -> Self {
        Self::new(&self.approx + c, self.err.clone())
    }

    /// Division; requires the divisor interval to exclude zero.
    pub fn div(&self, rhs: &Self) -> Self {
        let b = rhs.approx.abs();
        assert!(b > rhs.err, "certified division by interval containing zero");
        let denom_low = &b - &rhs.err;
        let err = (&self.err * &b + self.approx.abs() * &rhs.err) / (&b * &denom_low);
        Self::new(&self.approx / &rhs.approx, err)
    }

    /// Shrink the rational representation: round the approximant to
    /// `digits` decimal places and absorb the rounding into the bound.
    pub fn compressed(&self, digits: u32) -> Self {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.approx * Rational::from_integer(scale.clone());
        let rounded = (scaled + ratio(1, 2)).floor();
        Self::new(
            rounded / Rational::from_integer(scale),
            &self.err + pow10_neg(digits),
        )
    }

    /// Do the two enclosures overlap (i.e. are the values consistent)?
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        (&self.approx - &rhs.approx).abs() <= &self.err + &rhs.err
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (&self.approx - x).abs() <= self.err
    }
}

/// Decimal string of a rational with `digits` fractional digits, rounded.
pub fn decimal_string(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let q = (scaled + ratio(1, 2)).floor().to_integer();
    let int_part = &q / &scale;
    let frac_part = &q % &scale;
    let sign = if x.is_negative() && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

/// Scientific-notation string with `sig` significant digits ("2.41e-36").
pub fn sci_string(x: &Rational, sig: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let abs = x.abs();
    // first guess from digit counts, then correct by comparison
    let mut e = abs.numer().to_string().trim_start_matches('-').len() as i64
        - abs.denom().to_string().len() as i64;
    let ten = rat(10);
    let mut p = pow10(e);
    while abs >= &p * &ten {
        p = &p * &ten;
        e += 1;
    }
    while abs < p {
        p = &p / &ten;
        e -= 1;
    }
    let mantissa = &abs / &p; // in [1, 10)
    let scale = BigInt::from(10u32).pow(sig - 1);
    let mut m = (mantissa * Rational::from_integer(scale.clone()) + ratio(1, 2))
        .floor()
        .to_integer();
    if m >= &scale * BigInt::from(10u32) {
        m /= BigInt::from(10u32);
        e += 1;
    }
    let digits = m.to_string();
    let sign = if x.is_negative() { "-" } else { "" };
    if sig == 1 {
        format!("{sign}{digits}e{e}")
    } else {
        format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
    }
}

fn pow10(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::from(10u32).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(10u32).pow((-e) as u32))
    }
}

/// `atanh(t)` for rational `|t| < 1/2`, to absolute accuracy `10^-digits`.
fn atanh_rational(t: &Rational, digits: u32) -> CertifiedReal {
    let eps = pow10_neg(digits);
    let t2 = t * t;
    debug_assert!(t2 < ratio(1, 4));
    let mut term = t.clone();
    let mut sum = Rational::zero();
    let mut k = 0u32;
    loop {
        sum += &term / rat(2 * k as i64 + 1);
        term *= &t2;
        k += 1;
        // tail <= |term| / ((2k+1)(1-t^2)) <= 2|term|
        let tail = term.abs() * rat(2);
        if tail < eps {
            return CertifiedReal::new(sum, tail).compressed(digits + 4);
        }
    }
}

/// `atan(t)` for rational `|t| < 1`, alternating series with tail bound.
fn atan_rational(t: &Rational, digits: u32) -> CertifiedReal {
    let eps = pow10_neg(digits);
    let t2 = t * t;
    let mut term = t.clone();
    let mut sum = Rational::zero();
    let mut k = 0u32;
    loop {
        sum += &term / rat(2 * k as i64 + 1) * if k % 2 == 0 { rat(1) } else { rat(-1) };
        term *= &t2;
        k += 1;
        let tail = term.abs() / rat(2 * k as i64 + 1);
        if tail < eps {
            return CertifiedReal::new(sum, tail).compressed(digits + 4);
        }
    }
}

/// `ln 2` to absolute accuracy `10^-digits`.
pub fn ln2(digits: u32) -> CertifiedReal {
    atanh_rational(&ratio(1, 3), digits + 1).scale(&rat(2))
}

/// `pi` via Machin's formula.
pub fn pi(digits: u32) -> CertifiedReal {
    let a = atan_rational(&ratio(1, 5), digits + 3).scale(&rat(16));
    let b = atan_rational(&ratio(1, 239), digits + 3).scale(&rat(4));
    a.sub(&b)
}

/// Natural logarithm of a positive rational to accuracy `10^-digits`.
pub fn ln_rational(x: &Rational, digits: u32) -> CertifiedReal {
    assert!(x.is_positive(), "ln of non-positive rational");
    let mut m = x.clone();
    let mut e: i64 = 0;
    while m > ratio(3, 2) {
        m /= rat(2);
        e += 1;
    }
    while m < ratio(3, 4) {
        m *= rat(2);
        e -= 1;
    }
    let t = (&m - rat(1)) / (&m + rat(1));
    let core = atanh_rational(&t, digits + 2).scale(&rat(2));
    if e == 0 {
        core
    } else {
        core.add(&ln2(digits + 6).scale(&rat(e)))
    }
}

/// Natural logarithm of a certified positive value.
pub fn ln_certified(x: &CertifiedReal, digits: u32) -> CertifiedReal {
    let low = x.lower();
    assert!(low.is_positive(), "ln of interval reaching zero");
    let base = ln_rational(&x.approx, digits);
    // |ln(a +- e) - ln a| <= e / (a - e)
    let extra = &x.err / low;
    CertifiedReal::new(base.approx, base.err + extra)
}

/// `exp` of a certified value, to relative accuracy about `10^-digits`.
pub fn exp_certified(x: &CertifiedReal, digits: u32) -> CertifiedReal {
    assert!(
        x.err < ratio(1, 4),
        "exp argument error bound too large to be useful"
    );
    let l2 = ln2(digits + 8);
    let m_rat = &x.approx / &l2.approx;
    let m = (m_rat + ratio(1, 2)).floor().to_integer();
    let m_i64 = m.to_i64().expect("exp argument out of supported range");
    let r = (&x.approx - &l2.approx * Rational::from_integer(m.clone()))
        .reduced();
    // |r| <= ln2/2 + slack < 0.6
    debug_assert!(r.abs() < ratio(7, 10));
    let delta = &x.err + l2.err * Rational::from_integer(m.abs());

    let eps = pow10_neg(digits + 4);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut k = 1i64;
    loop {
        term = term * &r / rat(k);
        sum += &term;
        k += 1;
        // once |r|/k < 1/2 the tail is below 2|next term|
        if k > 2 && term.abs() * rat(2) < eps {
            break;
        }
    }
    let series_err = term.abs() * rat(2);
    // |e^(r+d) - e^r| <= e^|r| (e^d - 1) <= 4 d for |r| <= 0.7, d <= 1/4
    let err = series_err + &delta * rat(4);
    let scale = pow2(m_i64);
    CertifiedReal::new(sum * &scale, err * scale).compressed(digits + 6)
}
