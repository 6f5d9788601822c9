//! The identity registry: a fixed catalog mapping stable string ids to
//! builders for both sides of each identity, together with parameter
//! schemas and verification modes. The command-line interface and the
//! test suite both drive their checks through `run_check`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Signed;
use serde::Serialize;

use crate::certified::{decimal_string, sci_string};
use crate::closed_forms::{
    entry9, entry9_extended, entry9_lhs, entry9_r1, f21_even, f21_odd, f32_even, f32_odd,
    karlsson_minton_rhs, Value,
};
use crate::error::{Error, Result};
use crate::exact::series::TruncatedSeries;
use crate::exact::{parse_rational, rat, Rational};
use crate::hyper::HyperSpec;
use crate::km::KMFamily;
use crate::ramanujan::{
    bessel_form_check, closing_3f3_check, contiguous_2f2_check, entry20_check, entry8_check,
    eq31_check, eq32_check, eq33_check, eq34_check, hermite_2f2_even_check, hermite_2f2_odd_check,
    theorem1_check, theorem2_check, Phi, TransformCheck,
};
use crate::special::PrecisionContext;

/// How an identity is verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// both sides are exact rationals; verdict is rational equality
    ExactRational,
    /// both sides are truncated power series; verdict is coefficient-wise
    /// equality
    FormalSeries,
    /// one side is a certified numeric estimate; verdict is agreement
    /// within the combined error bounds
    NumericBounded,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::ExactRational => "exact-rational",
            Mode::FormalSeries => "formal-series",
            Mode::NumericBounded => "numeric-bounded",
        }
    }
}

/// Kind of a named parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Rational,
    NonNegativeInteger,
    Family,
    Phi,
}

impl ParamKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParamKind::Rational => "rational",
            ParamKind::NonNegativeInteger => "non-negative integer",
            ParamKind::Family => "family (d:m,...)",
            ParamKind::Phi => "function id",
        }
    }
}

/// Registry entry: id, a one-line statement, verification mode, and the
/// named parameters the check expects.
#[derive(Debug, Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    pub mode: Mode,
    pub params: &'static [(&'static str, ParamKind)],
}

const R: ParamKind = ParamKind::Rational;
const N: ParamKind = ParamKind::NonNegativeInteger;

static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "f32-even",
        summary: "terminating 3F2(-2n, a, d+1; 2a+1, d; 2) = (1/2)_n/(a+1/2)_n, independent of d",
        mode: Mode::ExactRational,
        params: &[("n", N), ("a", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "f32-odd",
        summary: "terminating 3F2(-2n-1, a, d+1; 2a+1, d; 2) = (1-2a/d)/(2a+1) * (3/2)_n/(a+3/2)_n",
        mode: Mode::ExactRational,
        params: &[("n", N), ("a", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "f21-even",
        summary: "terminating 2F1(-2n, a; 2a; 2) = (1/2)_n/(a+1/2)_n",
        mode: Mode::ExactRational,
        params: &[("n", N), ("a", R)],
    },
    IdentityDescriptor {
        id: "f21-odd",
        summary: "terminating 2F1(-2n-1, a; 2a; 2) = 0",
        mode: Mode::ExactRational,
        params: &[("n", N), ("a", R)],
    },
    IdentityDescriptor {
        id: "karlsson-minton",
        summary: "unit-argument F(a, b, (d+m); c, (d); 1) equals a gamma-ratio-weighted finite sum, for c-a-b > m",
        mode: Mode::NumericBounded,
        params: &[("a", R), ("b", R), ("c", R), ("family", ParamKind::Family)],
    },
    IdentityDescriptor {
        id: "entry9",
        summary: "sum_k (a)_k/(k (c)_k) = psi(c) - psi(c-a), for c-a > 0",
        mode: Mode::NumericBounded,
        params: &[("a", R), ("c", R)],
    },
    IdentityDescriptor {
        id: "entry9-ext",
        summary: "the psi-difference sum extended by integer-excess parameter pairs, for c-a > m",
        mode: Mode::NumericBounded,
        params: &[("a", R), ("c", R), ("family", ParamKind::Family)],
    },
    IdentityDescriptor {
        id: "entry9-r1",
        summary: "single-pair specialization of the extended psi-difference sum, with binomial coefficients",
        mode: Mode::NumericBounded,
        params: &[("a", R), ("c", R), ("d", R), ("m", N)],
    },
    IdentityDescriptor {
        id: "entry8",
        summary: "derivative transform: sum 2^k (a)_k phi^(k)(0)/((2a)_k k!) = sum phi^(2k)(1)/(4^k (a+1/2)_k k!)",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("phi", ParamKind::Phi)],
    },
    IdentityDescriptor {
        id: "entry20",
        summary: "derivative transform: sum (a)_k phi^(k)(0)/((b)_k k!) = sum (-1)^k (b-a)_k phi^(k)(1)/((b)_k k!)",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("b", R), ("phi", ParamKind::Phi)],
    },
    IdentityDescriptor {
        id: "theorem1",
        summary: "derivative transform with one integer-excess pair on the left and transformed parameter f = d(b-a-1)/(d-a) on the right",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("b", R), ("d", R), ("phi", ParamKind::Phi)],
    },
    IdentityDescriptor {
        id: "theorem2",
        summary: "derivative transform with lower parameter 2a+1 and one excess pair: even block minus (1-2a/d)/(2a+1) times odd block",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("d", R), ("phi", ParamKind::Phi)],
    },
    IdentityDescriptor {
        id: "eq31",
        summary: "exp(-x) 2F2(a, d+1; 2a+1, d; 2x) as a combination of two 0F1(x^2/4) series",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "eq32",
        summary: "3F4(x^2) as cosh/sinh-weighted combination of two 0F1(x^2/4) series",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "eq33",
        summary: "(1+z)^(-b) 3F2(2z/(1+z)) as a combination of two 2F1(z^2) series",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("b", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "eq34",
        summary: "exp(x^2/4) 3F3(-x^2) as two Hermite-polynomial sums",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "hermite-2f2-even",
        summary: "even-order Hermite sum equals exp(x^2/4) times a 2F2(-x^2)",
        mode: Mode::FormalSeries,
        params: &[("a", R)],
    },
    IdentityDescriptor {
        id: "hermite-2f2-odd",
        summary: "odd-order Hermite sum equals x exp(x^2/4) times a 2F2(-x^2)",
        mode: Mode::FormalSeries,
        params: &[("a", R)],
    },
    IdentityDescriptor {
        id: "contiguous-2f2",
        summary: "difference of 2F2 series contiguous in the second lower parameter",
        mode: Mode::FormalSeries,
        params: &[("alpha", R), ("beta", R), ("gamma", R), ("delta", R)],
    },
    IdentityDescriptor {
        id: "closing-3f3",
        summary: "exp(x^2) 3F3(-x^2) as a Hermite sum with transformed parameter f = 2d(b-a-1)/(2d-a)",
        mode: Mode::FormalSeries,
        params: &[("a", R), ("b", R), ("d", R)],
    },
    IdentityDescriptor {
        id: "bessel-form",
        summary: "0F1(; a+1/2; x^2/4) built two ways (series definition vs gamma-ratio coefficients)",
        mode: Mode::FormalSeries,
        params: &[("a", R)],
    },
];

pub fn list_identities() -> &'static [IdentityDescriptor] {
    REGISTRY
}

pub fn find_identity(id: &str) -> Result<&'static IdentityDescriptor> {
    REGISTRY.iter().find(|d| d.id == id).ok_or_else(|| {
        Error::UnknownIdentity {
            id: id.to_string(),
            known: REGISTRY
                .iter()
                .map(|d| d.id.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        }
    })
}

/// Raw named parameter strings as received from a caller.
pub type Bindings = BTreeMap<String, String>;

/// Verification options.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub order: usize,
    pub digits: u32,
    pub max_terms: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            order: 24,
            digits: 50,
            max_terms: 1_000_000,
        }
    }
}

/// Witness for a failed series comparison.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FirstBadCoeff {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Machine-readable outcome of one check. Byte-stable across reruns for
/// identical inputs, except `elapsed_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub mode: String,
    pub verdict: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_diff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_coeff: Option<FirstBadCoeff>,
    pub terms_used: u64,
    pub elapsed_ms: u64,
}

fn get_raw<'a>(id: &str, bindings: &'a Bindings, name: &str) -> Result<&'a str> {
    bindings
        .get(name)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::ParamDomain(format!("identity {id} requires parameter {name}")))
}

fn get_rational(id: &str, bindings: &Bindings, name: &str) -> Result<Rational> {
    parse_rational(get_raw(id, bindings, name)?)
}

fn get_nonneg(id: &str, bindings: &Bindings, name: &str) -> Result<u64> {
    let raw = get_raw(id, bindings, name)?;
    raw.parse()
        .map_err(|e| Error::ParamDomain(format!("parameter {name} = {raw:?} of {id}: {e}")))
}

fn get_family(id: &str, bindings: &Bindings, name: &str) -> Result<KMFamily> {
    KMFamily::parse(get_raw(id, bindings, name)?)
}

fn get_phi(id: &str, bindings: &Bindings, name: &str) -> Result<Phi> {
    Phi::parse(get_raw(id, bindings, name)?)
}

/// Re-render the bindings canonically (parsed and printed back) so that
/// reports do not depend on input spelling like `2/4` vs `1/2`.
fn canonical_params(desc: &IdentityDescriptor, bindings: &Bindings) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (name, kind) in desc.params {
        let canonical = match kind {
            ParamKind::Rational => get_rational(desc.id, bindings, name)?.to_string(),
            ParamKind::NonNegativeInteger => get_nonneg(desc.id, bindings, name)?.to_string(),
            ParamKind::Family => get_family(desc.id, bindings, name)?.to_string(),
            ParamKind::Phi => get_phi(desc.id, bindings, name)?.name(),
        };
        out.insert(name.to_string(), canonical);
    }
    for name in bindings.keys() {
        if !desc.params.iter().any(|(p, _)| p == name) {
            return Err(Error::ParamDomain(format!(
                "identity {} does not take a parameter named {name}",
                desc.id
            )));
        }
    }
    Ok(out)
}

/// Deterministic short rendering of a series: all coefficients up to the
/// order, as exact rationals.
fn series_digest(s: &TruncatedSeries) -> String {
    let parts: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

struct Outcome {
    verdict: bool,
    lhs: String,
    rhs: String,
    abs_diff: Option<String>,
    first_bad_coeff: Option<FirstBadCoeff>,
    terms_used: u64,
}

fn outcome_exact(lhs: Rational, rhs: Rational, terms_used: u64) -> Outcome {
    Outcome {
        verdict: lhs == rhs,
        abs_diff: Some((&lhs - &rhs).abs().to_string()),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        first_bad_coeff: None,
        terms_used,
    }
}

fn outcome_series(check: TransformCheck) -> Outcome {
    let first_bad_coeff = check
        .first_mismatch()
        .map(|(index, l, r)| FirstBadCoeff {
            index,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
    Outcome {
        verdict: check.passed(),
        lhs: series_digest(&check.lhs),
        rhs: series_digest(&check.rhs),
        abs_diff: None,
        first_bad_coeff,
        terms_used: check.order as u64 + 1,
    }
}

fn outcome_numeric(
    lhs: crate::hyper::NumericValue,
    rhs: Value,
    digits: u32,
) -> Outcome {
    let verdict = rhs.agrees_with_numeric(&lhs);
    let rhs_cert = rhs.as_certified();
    let diff = (&lhs.estimate - &rhs_cert.approx).abs();
    Outcome {
        verdict,
        lhs: format!(
            "{} (tail_bound {})",
            decimal_string(&lhs.estimate, digits),
            lhs.tail_bound_string()
        ),
        rhs: match &rhs {
            Value::Exact(x) => x.to_string(),
            Value::Numeric(v) => format!(
                "{} (err_bound {})",
                decimal_string(&v.approx, digits),
                sci_string(&v.err, 3)
            ),
        },
        abs_diff: Some(sci_string(&diff, 3)),
        first_bad_coeff: None,
        terms_used: lhs.terms_used,
    }
}

/// Run one identity check with named parameters.
pub fn run_check(id: &str, bindings: &Bindings, options: &CheckOptions) -> Result<CheckReport> {
    let desc = find_identity(id)?;
    let mut params = canonical_params(desc, bindings)?;
    let started = Instant::now();
    let ctx = PrecisionContext::new(options.digits.max(20));
    let order = options.order;

    let outcome = match id {
        "f32-even" | "f32-odd" => {
            let n = get_nonneg(id, bindings, "n")?;
            let a = get_rational(id, bindings, "a")?;
            let d = get_rational(id, bindings, "d")?;
            let (top, rhs) = if id == "f32-even" {
                (-2 * n as i64, f32_even(n, &a, &d)?)
            } else {
                (-2 * n as i64 - 1, f32_odd(n, &a, &d)?)
            };
            let spec = HyperSpec::new(
                vec![rat(top), a.clone(), &d + rat(1)],
                vec![rat(2) * &a + rat(1), d.clone()],
            )?;
            let lhs = spec.eval_terminating(&rat(2))?;
            outcome_exact(lhs, rhs, n + 1)
        }
        "f21-even" | "f21-odd" => {
            let n = get_nonneg(id, bindings, "n")?;
            let a = get_rational(id, bindings, "a")?;
            let (top, rhs) = if id == "f21-even" {
                (-2 * n as i64, f21_even(n, &a)?)
            } else {
                (-2 * n as i64 - 1, f21_odd(n, &a)?)
            };
            let spec = HyperSpec::new(vec![rat(top), a.clone()], vec![rat(2) * &a])?;
            let lhs = spec.eval_terminating(&rat(2))?;
            outcome_exact(lhs, rhs, n + 1)
        }
        "karlsson-minton" => {
            let a = get_rational(id, bindings, "a")?;
            let b = get_rational(id, bindings, "b")?;
            let c = get_rational(id, bindings, "c")?;
            let family = get_family(id, bindings, "family")?;
            let rhs = karlsson_minton_rhs(&a, &b, &c, &family, &ctx)?;
            let mut upper = vec![a.clone(), b.clone()];
            upper.extend(family.shifted_params());
            let mut lower = vec![c.clone()];
            lower.extend(family.base_params());
            let lhs = HyperSpec::new(upper, lower)?.eval_numeric(
                &rat(1),
                options.digits,
                options.max_terms,
            )?;
            outcome_numeric(lhs, rhs, options.digits)
        }
        "entry9" => {
            let a = get_rational(id, bindings, "a")?;
            let c = get_rational(id, bindings, "c")?;
            let rhs = entry9(&a, &c, &ctx)?;
            let lhs = entry9_lhs(&a, &c, None, options.digits, options.max_terms)?;
            outcome_numeric(lhs, rhs, options.digits)
        }
        "entry9-ext" => {
            let a = get_rational(id, bindings, "a")?;
            let c = get_rational(id, bindings, "c")?;
            let family = get_family(id, bindings, "family")?;
            let rhs = entry9_extended(&a, &c, Some(&family), &ctx)?;
            let lhs = entry9_lhs(&a, &c, Some(&family), options.digits, options.max_terms)?;
            outcome_numeric(lhs, rhs, options.digits)
        }
        "entry9-r1" => {
            let a = get_rational(id, bindings, "a")?;
            let c = get_rational(id, bindings, "c")?;
            let d = get_rational(id, bindings, "d")?;
            let m = get_nonneg(id, bindings, "m")? as u32;
            let rhs = entry9_r1(&a, &c, &d, m, &ctx)?;
            let family = if m == 0 {
                None
            } else {
                Some(KMFamily::single(d.clone(), m)?)
            };
            let lhs = entry9_lhs(&a, &c, family.as_ref(), options.digits, options.max_terms)?;
            outcome_numeric(lhs, rhs, options.digits)
        }
        "entry8" => {
            let a = get_rational(id, bindings, "a")?;
            let phi = get_phi(id, bindings, "phi")?;
            outcome_series(entry8_check(&a, &phi, order)?)
        }
        "entry20" => {
            let a = get_rational(id, bindings, "a")?;
            let b = get_rational(id, bindings, "b")?;
            let phi = get_phi(id, bindings, "phi")?;
            outcome_series(entry20_check(&a, &b, &phi, order)?)
        }
        "theorem1" => {
            let a = get_rational(id, bindings, "a")?;
            let b = get_rational(id, bindings, "b")?;
            let d = get_rational(id, bindings, "d")?;
            let phi = get_phi(id, bindings, "phi")?;
            if &d != &a {
                let f = &d * (&b - &a - rat(1)) / (&d - &a);
                params.insert("f".into(), f.to_string());
            }
            outcome_series(theorem1_check(&a, &b, &d, &phi, order)?)
        }
        "theorem2" => {
            let a = get_rational(id, bindings, "a")?;
            let d = get_rational(id, bindings, "d")?;
            let phi = get_phi(id, bindings, "phi")?;
            outcome_series(theorem2_check(&a, &d, &phi, order)?)
        }
        "eq31" => {
            let a = get_rational(id, bindings, "a")?;
            let d = get_rational(id, bindings, "d")?;
            outcome_series(eq31_check(&a, &d, order)?)
        }
        "eq32" => {
            let a = get_rational(id, bindings, "a")?;
            let d = get_rational(id, bindings, "d")?;
            outcome_series(eq32_check(&a, &d, order)?)
        }
        "eq33" => {
            let a = get_rational(id, bindings, "a")?;
            let b = get_rational(id, bindings, "b")?;
            let d = get_rational(id, bindings, "d")?;
            outcome_series(eq33_check(&a, &b, &d, order)?)
        }
        "eq34" => {
            let a = get_rational(id, bindings, "a")?;
            let d = get_rational(id, bindings, "d")?;
            outcome_series(eq34_check(&a, &d, order)?)
        }
        "hermite-2f2-even" => {
            let a = get_rational(id, bindings, "a")?;
            outcome_series(hermite_2f2_even_check(&a, order)?)
        }
        "hermite-2f2-odd" => {
            let a = get_rational(id, bindings, "a")?;
            outcome_series(hermite_2f2_odd_check(&a, order)?)
        }
        "contiguous-2f2" => {
            let alpha = get_rational(id, bindings, "alpha")?;
            let beta = get_rational(id, bindings, "beta")?;
            let gamma = get_rational(id, bindings, "gamma")?;
            let delta = get_rational(id, bindings, "delta")?;
            outcome_series(contiguous_2f2_check(&alpha, &beta, &gamma, &delta, order)?)
        }
        "closing-3f3" => {
            let a = get_rational(id, bindings, "a")?;
            let b = get_rational(id, bindings, "b")?;
            let d = get_rational(id, bindings, "d")?;
            if rat(2) * &d != a {
                let f = rat(2) * &d * (&b - &a - rat(1)) / (rat(2) * &d - &a);
                params.insert("f".into(), f.to_string());
            }
            outcome_series(closing_3f3_check(&a, &b, &d, order)?)
        }
        "bessel-form" => {
            let a = get_rational(id, bindings, "a")?;
            outcome_series(bessel_form_check(&a, order)?)
        }
        _ => unreachable!("descriptor table and dispatch must agree"),
    };

    Ok(CheckReport {
        identity: id.to_string(),
        params,
        mode: desc.mode.as_str().to_string(),
        verdict: if outcome.verdict { "pass" } else { "fail" }.to_string(),
        lhs: outcome.lhs,
        rhs: outcome.rhs,
        abs_diff: outcome.abs_diff,
        first_bad_coeff: outcome.first_bad_coeff,
        terms_used: outcome.terms_used,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(pairs: &[(&str, &str)]) -> Bindings {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn registry_is_complete_and_unique() {
        let ids: Vec<&str> = list_identities().iter().map(|d| d.id).collect();
        assert_eq!(ids.len(), 21);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate identity ids");
        for required in ["theorem2", "entry9-ext", "f32-even", "bessel-form"] {
            assert!(ids.contains(&required), "{required} missing");
        }
    }

    #[test]
    fn unknown_identity_lists_known_ids() {
        let err = run_check("nope", &Bindings::new(), &CheckOptions::default()).unwrap_err();
        match err {
            Error::UnknownIdentity { id, known } => {
                assert_eq!(id, "nope");
                assert!(known.contains("entry9"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn run_check_entry9_exact() {
        let report = run_check(
            "entry9",
            &bind(&[("a", "1"), ("c", "3")]),
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(report.verdict, "pass");
        assert_eq!(report.rhs, "1/2");
        assert_eq!(report.mode, "numeric-bounded");
    }

    #[test]
    fn run_check_theorem2_with_degenerate_odd_block() {
        let report = run_check(
            "theorem2",
            &bind(&[("a", "1"), ("d", "2"), ("phi", "exp")]),
            &CheckOptions {
                order: 16,
                ..CheckOptions::default()
            },
        )
        .unwrap();
        assert_eq!(report.verdict, "pass");
        assert!(report.first_bad_coeff.is_none());
    }

    #[test]
    fn run_check_rejects_domain_violations() {
        let err = run_check(
            "f32-odd",
            &bind(&[("n", "0"), ("a", "1"), ("d", "0")]),
            &CheckOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));

        let err = run_check(
            "theorem1",
            &bind(&[("a", "1"), ("b", "4"), ("d", "1"), ("phi", "exp")]),
            &CheckOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::SingularParameter(_)));

        let err = run_check(
            "entry9",
            &bind(&[("a", "1")]),
            &CheckOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ParamDomain(_)));

        let err = run_check(
            "entry9",
            &bind(&[("a", "1"), ("c", "3"), ("zz", "1")]),
            &CheckOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ParamDomain(_)));
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = CheckOptions::default();
        let bindings = bind(&[("a", "1"), ("c", "4"), ("family", "2:1")]);
        let mut a = run_check("entry9-ext", &bindings, &opts).unwrap();
        let mut b = run_check("entry9-ext", &bindings, &opts).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.verdict, "pass");
        assert!(a.rhs.starts_with("7/12"));
    }

    #[test]
    fn canonicalizes_parameter_spelling() {
        let opts = CheckOptions::default();
        let report = run_check("f21-even", &bind(&[("n", "1"), ("a", "2/2")]), &opts).unwrap();
        assert_eq!(report.params["a"], "1");
        assert_eq!(report.verdict, "pass");
    }

    #[test]
    fn every_identity_has_a_passing_sample() {
        let opts = CheckOptions {
            order: 12,
            digits: 30,
            max_terms: 500_000,
        };
        let samples: Vec<(&str, Bindings)> = vec![
            ("f32-even", bind(&[("n", "1"), ("a", "1"), ("d", "3")])),
            ("f32-odd", bind(&[("n", "1"), ("a", "1"), ("d", "3")])),
            ("f21-even", bind(&[("n", "2"), ("a", "3/2")])),
            ("f21-odd", bind(&[("n", "2"), ("a", "3/2")])),
            (
                "karlsson-minton",
                bind(&[("a", "1"), ("b", "1"), ("c", "5"), ("family", "2:1")]),
            ),
            ("entry9", bind(&[("a", "1"), ("c", "3")])),
            (
                "entry9-ext",
                bind(&[("a", "1"), ("c", "4"), ("family", "2:1")]),
            ),
            (
                "entry9-r1",
                bind(&[("a", "1"), ("c", "4"), ("d", "2"), ("m", "1")]),
            ),
            ("entry8", bind(&[("a", "1"), ("phi", "exp")])),
            ("entry20", bind(&[("a", "1"), ("b", "3"), ("phi", "cosh")])),
            (
                "theorem1",
                bind(&[("a", "1"), ("b", "4"), ("d", "3"), ("phi", "exp")]),
            ),
            (
                "theorem2",
                bind(&[("a", "1"), ("d", "3"), ("phi", "gaussian")]),
            ),
            ("eq31", bind(&[("a", "1"), ("d", "3")])),
            ("eq32", bind(&[("a", "1"), ("d", "3")])),
            ("eq33", bind(&[("a", "1"), ("b", "1/2"), ("d", "3")])),
            ("eq34", bind(&[("a", "1"), ("d", "3")])),
            ("hermite-2f2-even", bind(&[("a", "1")])),
            ("hermite-2f2-odd", bind(&[("a", "1")])),
            (
                "contiguous-2f2",
                bind(&[("alpha", "1"), ("beta", "2"), ("gamma", "3"), ("delta", "1")]),
            ),
            ("closing-3f3", bind(&[("a", "1"), ("b", "4"), ("d", "3")])),
            ("bessel-form", bind(&[("a", "1/2")])),
        ];
        assert_eq!(samples.len(), list_identities().len());
        for (id, bindings) in samples {
            let report = run_check(id, &bindings, &opts).unwrap();
            assert_eq!(report.verdict, "pass", "{id} failed: {report:?}");
        }
    }
}
