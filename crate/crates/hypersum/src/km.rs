//! Coefficient tables for hypergeometric series whose upper parameters
//! exceed lower parameters by positive integers: families of pairs
//! `(d_i, m_i)` contribute parameters `d_i + m_i` above and `d_i` below.
//! The closed forms for such series are finite sums weighted by rational
//! coefficients `C_k`, computed here by two independent routes (a Stirling
//! number expansion and a terminating hypergeometric sum) that serve as
//! cross-checks of one another.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::{rising_factorial_poly, Poly};
use crate::exact::{
    binomial, factorial, is_non_positive_integer, parse_rational, pochhammer, rat, stirling2,
    Rational,
};
use crate::hyper::HyperSpec;

/// Ordered list of pairs `(d_i, m_i)` with `m_i >= 1` and no `d_i` a
/// non-positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMFamily {
    pairs: Vec<(Rational, u32)>,
}

impl KMFamily {
    pub fn new(pairs: Vec<(Rational, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::ParamDomain(
                "a parameter family needs at least one (d, m) pair".into(),
            ));
        }
        for (d, m) in &pairs {
            if *m == 0 {
                return Err(Error::ParamDomain(format!(
                    "pair ({d}, {m}): the integer excess must be positive"
                )));
            }
            if is_non_positive_integer(d) {
                return Err(Error::SingularParameter(format!(
                    "d = {d} is a non-positive integer; (d)_m degenerates"
                )));
            }
        }
        Ok(Self { pairs })
    }

    pub fn single(d: Rational, m: u32) -> Result<Self> {
        Self::new(vec![(d, m)])
    }

    /// Parse `"d1:m1,d2:m2,..."` with rational `d` and positive integer `m`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let (d, m) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected d:m, got {part:?}")))?;
            let d = parse_rational(d.trim())?;
            let m: u32 = m
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad multiplicity {m:?}: {e}")))?;
            pairs.push((d, m));
        }
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[(Rational, u32)] {
        &self.pairs
    }

    pub fn r(&self) -> usize {
        self.pairs.len()
    }

    /// Total excess `m = m_1 + ... + m_r`.
    pub fn total_m(&self) -> u32 {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    /// `Lambda = (d_1)_{m_1} ... (d_r)_{m_r}`.
    pub fn lambda(&self) -> Rational {
        self.pairs
            .iter()
            .map(|(d, m)| pochhammer(d, *m as u64))
            .product()
    }

    /// Upper-row parameters `d_i + m_i`.
    pub fn shifted_params(&self) -> Vec<Rational> {
        self.pairs.iter().map(|(d, m)| d + rat(*m as i64)).collect()
    }

    /// Lower-row parameters `d_i`.
    pub fn base_params(&self) -> Vec<Rational> {
        self.pairs.iter().map(|(d, _)| d.clone()).collect()
    }
}

impl std::fmt::Display for KMFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(d, m)| format!("{d}:{m}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exact coefficient data attached to a family: the total excess `m`, the
/// product `Lambda`, the expansion `prod (d_i + x)_{m_i} = sum sigma_j x^j`,
/// and the weights `C_0..C_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMCoefficientTable {
    pub m: u32,
    pub lambda: Rational,
    pub sigma: Vec<Rational>,
    pub coeffs: Vec<Rational>,
}

impl KMCoefficientTable {
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }
}

/// Coefficients `sigma_0..sigma_m` of `prod_i (d_i + x)_{m_i}`.
pub fn sigma_coefficients(family: &KMFamily) -> Vec<Rational> {
    let poly = family
        .pairs()
        .iter()
        .fold(Poly::one(), |acc, (d, m)| &acc * &rising_factorial_poly(d, *m));
    let m = family.total_m() as usize;
    (0..=m).map(|j| poly.coeff(j)).collect()
}

/// Weights via the Stirling-number expansion
/// `C_k = (1/Lambda) sum_{j=k}^m sigma_j S(j, k)`.
pub fn km_coefficients_stirling(family: &KMFamily) -> KMCoefficientTable {
    let m = family.total_m();
    let lambda = family.lambda();
    let sigma = sigma_coefficients(family);
    let coeffs = (0..=m as u64)
        .map(|k| {
            let mut acc = Rational::zero();
            for j in k..=m as u64 {
                acc += &sigma[j as usize] * Rational::from_integer(stirling2(j, k));
            }
            acc / &lambda
        })
        .collect();
    KMCoefficientTable {
        m,
        lambda,
        sigma,
        coeffs,
    }
}

/// Weights via the terminating hypergeometric representation
/// `C_k = ((-1)^k / k!) F(-k, (d+m); (d); 1)`.
pub fn km_coefficients_hyper(family: &KMFamily) -> Result<KMCoefficientTable> {
    let m = family.total_m();
    let lambda = family.lambda();
    let sigma = sigma_coefficients(family);
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    for k in 0..=m as i64 {
        let mut upper = vec![rat(-k)];
        upper.extend(family.shifted_params());
        let spec = HyperSpec::new(upper, family.base_params())?;
        let f = spec.eval_terminating(&Rational::one())?;
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        coeffs.push(sign * f / Rational::from_integer(factorial(k as u64)));
    }
    Ok(KMCoefficientTable {
        m,
        lambda,
        sigma,
        coeffs,
    })
}

/// Closed form for a single pair: `C_k = binom(m, k) / (d)_k`.
pub fn km_coefficients_vandermonde(d: &Rational, m: u32) -> Result<KMCoefficientTable> {
    let family = KMFamily::single(d.clone(), m)?;
    let lambda = family.lambda();
    let sigma = sigma_coefficients(&family);
    let coeffs = (0..=m as u64)
        .map(|k| Rational::from_integer(binomial(m as u64, k)) / pochhammer(d, k))
        .collect();
    Ok(KMCoefficientTable {
        m,
        lambda,
        sigma,
        coeffs,
    })
}
