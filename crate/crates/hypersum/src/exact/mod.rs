//! Arbitrary-precision rational arithmetic and the combinatorial primitives
//! the rest of the crate is built on: rising factorials, Stirling numbers of
//! the second kind, Bernoulli numbers and Hermite polynomials.
//!
//! All values are exact; nothing here ever rounds.

pub mod poly;
pub mod series;

use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Rational = num_rational::BigRational;
pub type Integer = BigInt;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse the external "p/q" (or "p") form, sign on the numerator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))
}

/// Is `x` an integer `<= 0`? Such values are poles of `1/(x)_k` for large
/// enough `k`.
pub fn is_non_positive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.numer().is_positive()
}

/// If `x` is a non-positive integer `-n`, return `n`.
pub fn as_non_positive_integer(x: &Rational) -> Option<u64> {
    if is_non_positive_integer(x) {
        (-x.to_integer()).try_into().ok()
    } else {
        None
    }
}

/// Rising factorial (Pochhammer symbol) `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `(a)_n` is zero iff `a` is a non-positive integer with `|a| < n`.
pub fn pochhammer_is_zero(a: &Rational, n: u64) -> bool {
    match as_non_positive_integer(a) {
        Some(m) => m < n,
        None => false,
    }
}

pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

static STIRLING2: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());

/// Stirling number of the second kind `S(j, k)` via the recurrence
/// `S(j,k) = k S(j-1,k) + S(j-1,k-1)`. Rows are memoized per process.
pub fn stirling2(j: u64, k: u64) -> Integer {
    if k > j {
        return Integer::zero();
    }
    let j = j as usize;
    let k = k as usize;
    let mut table = STIRLING2.lock().unwrap();
    if table.is_empty() {
        table.push(vec![Integer::one()]);
    }
    while table.len() <= j {
        let prev = table.last().unwrap();
        let n = table.len();
        let mut row = vec![Integer::zero(); n + 1];
        for (i, item) in row.iter_mut().enumerate().skip(1) {
            let mut v = prev[i - 1].clone();
            if i < prev.len() {
                v += &prev[i] * Integer::from(i);
            }
            *item = v;
        }
        table.push(row);
    }
    table[j][k].clone()
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` (convention `B_1 = -1/2`), from the recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0`. Memoized per process.
pub fn bernoulli(n: u64) -> Rational {
    let n = n as usize;
    let mut table = BERNOULLI.lock().unwrap();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n {
        let m = table.len();
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u64 + 1, j as u64)) * b;
        }
        acc /= -rat(m as i64 + 1);
        table.push(acc);
    }
    table[n].clone()
}

/// Physicists' Hermite polynomial `H_k` at a rational point, via
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite(k: u64, x: &Rational) -> Rational {
    let two_x = x * rat(2);
    let mut h_prev = Rational::one();
    if k == 0 {
        return h_prev;
    }
    let mut h = two_x.clone();
    for i in 1..k {
        let next = &two_x * &h - rat(2 * i as i64) * &h_prev;
        h_prev = h;
        h = next;
    }
    h
}

/// `H_0 .. H_kmax` evaluated at a truncated series argument.
pub fn hermite_series(kmax: u64, x: &series::TruncatedSeries) -> Vec<series::TruncatedSeries> {
    let order = x.order();
    let two_x = x.scaled(&rat(2));
    let mut out = Vec::with_capacity(kmax as usize + 1);
    out.push(series::TruncatedSeries::constant(Rational::one(), order));
    if kmax >= 1 {
        out.push(two_x.clone());
    }
    for k in 1..kmax {
        let next = &(&two_x * &out[k as usize]) - &out[k as usize - 1].scaled(&rat(2 * k as i64));
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&ratio(7, 3), 0), rat(1));
        assert_eq!(pochhammer(&rat(1), 5), rat(120));
        assert_eq!(pochhammer(&ratio(1, 2), 2), ratio(3, 4));
    }

    #[test]
    fn pochhammer_zero_detection() {
        assert!(pochhammer_is_zero(&rat(-3), 4));
        assert!(!pochhammer_is_zero(&rat(-3), 3));
        assert!(!pochhammer_is_zero(&ratio(-3, 2), 10));
    }

    #[test]
    fn stirling_edges() {
        assert_eq!(stirling2(4, 4), Integer::one());
        assert_eq!(stirling2(5, 1), Integer::one());
        assert_eq!(stirling2(2, 5), Integer::zero());
    }

    /// Independent oracle: enumerate set partitions of {0..j-1} and count the
    /// ones with exactly k blocks.
    fn stirling2_brute(j: usize, k: usize) -> u64 {
        fn go(item: usize, j: usize, blocks: &mut Vec<Vec<usize>>, k: usize, count: &mut u64) {
            if item == j {
                if blocks.len() == k {
                    *count += 1;
                }
                return;
            }
            for i in 0..blocks.len() {
                blocks[i].push(item);
                go(item + 1, j, blocks, k, count);
                blocks[i].pop();
            }
            blocks.push(vec![item]);
            go(item + 1, j, blocks, k, count);
            blocks.pop();
        }
        let mut count = 0;
        go(0, j, &mut Vec::new(), k, &mut count);
        count
    }

    #[test]
    fn stirling_vs_partition_enumeration() {
        assert_eq!(stirling2_brute(3, 2), 3);
        for j in 0..=7u64 {
            for k in 0..=j {
                assert_eq!(
                    stirling2(j, k),
                    Integer::from(stirling2_brute(j as usize, k as usize)),
                    "S({j},{k})"
                );
            }
        }
    }

    /// Bell numbers by the independent binomial recurrence
    /// `B_{n+1} = sum_k C(n,k) B_k`.
    #[test]
    fn stirling_row_sums_are_bell_numbers() {
        let mut bell = vec![Integer::one()];
        for n in 0..12usize {
            let mut next = Integer::zero();
            for (k, b) in bell.iter().enumerate() {
                next += binomial(n as u64, k as u64) * b;
            }
            bell.push(next);
        }
        for j in 0..=12u64 {
            let row_sum: Integer = (0..=j).map(|k| stirling2(j, k)).sum();
            assert_eq!(row_sum, bell[j as usize], "row {j}");
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(3), rat(0));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn hermite_at_zero() {
        // H_2(x) = 4x^2 - 2
        assert_eq!(hermite(2, &rat(0)), rat(-2));
        // H_{2m}(0) = (-1)^m (2m)!/m!, H_{2m+1}(0) = 0
        for m in 0..8u64 {
            let expect = Rational::new(
                if m % 2 == 0 {
                    factorial(2 * m)
                } else {
                    -factorial(2 * m)
                },
                factorial(m),
            );
            assert_eq!(hermite(2 * m, &rat(0)), expect, "H_{}(0)", 2 * m);
            assert_eq!(hermite(2 * m + 1, &rat(0)), rat(0));
        }
    }

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(rat(7).to_string(), "7");
    }
}
