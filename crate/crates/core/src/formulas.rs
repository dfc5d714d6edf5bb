//! Closed-form invariants of determinantal schemes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::{binomial, check_range, ladder_minor_count, minor_count};

/// `(m-t+1)(n-t+1)`.
pub fn expected_codim(m: usize, n: usize, t: usize) -> Result<usize> {
    check_range(m, n, t)?;
    Ok((m - t + 1) * (n - t + 1))
}

/// Cohen-Macaulay type of `R/I_t` for a generic `m x n` matrix:
/// `prod_{i=1}^{t-1} C(n-i, n-m) / C(n-m+t-1-i, n-m)`.
///
/// This counts semistandard tableaux of rectangular shape `(t-1) x (n-m)`
/// with entries at most `m`; the result is checked to be an integer.
pub fn cm_type(m: usize, n: usize, t: usize) -> Result<BigRational> {
    check_range(m, n, t)?;
    let k = (n - m) as u64;
    let mut acc = BigRational::one();
    for i in 1..t as u64 {
        let num = binomial(n as u64 - i, k);
        let den = binomial(k + t as u64 - 1 - i, k);
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    if !acc.is_integer() {
        return Err(Error::Precondition(format!(
            "type formula produced the non-integer {acc} at ({m}, {n}, {t})"
        )));
    }
    Ok(acc)
}

/// Whether `R/I_t` is Gorenstein, i.e. the type is 1.
pub fn is_gorenstein(m: usize, n: usize, t: usize) -> Result<bool> {
    Ok(cm_type(m, n, t)?.is_one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CiVariant {
    FullMinors,
    Ladder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CiClass {
    CompleteIntersection,
    NotCi,
}

/// Generic `I_t(M)` is a complete intersection iff `t = 1` or `t = m = n`;
/// the corner ladder ideal iff `t = 1`, `t = m = n - 1`, or `t = m = n`
/// (where it is the zero ideal).
pub fn ci_classification(m: usize, n: usize, t: usize, variant: CiVariant) -> Result<CiClass> {
    check_range(m, n, t)?;
    let ci = match variant {
        CiVariant::FullMinors => t == 1 || (t == m && m == n),
        CiVariant::Ladder => t == 1 || (t == m && (n == m + 1 || n == m)),
    };
    Ok(if ci {
        CiClass::CompleteIntersection
    } else {
        CiClass::NotCi
    })
}

/// Counting oracle: a complete intersection iff the number of generators
/// equals the height.
pub fn ci_by_count(m: usize, n: usize, t: usize, variant: CiVariant) -> Result<CiClass> {
    let c = expected_codim(m, n, t)? as u128;
    let (count, height) = match variant {
        CiVariant::FullMinors => (minor_count(m, n, t)?, c),
        CiVariant::Ladder => (ladder_minor_count(m, n, t)?, c - 1),
    };
    Ok(if count == height {
        CiClass::CompleteIntersection
    } else {
        CiClass::NotCi
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaetaValues {
    pub holds: bool,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigInt,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `(mn - t^2)(m-1)...(m-t+2)(n-1)...(n-t+2) > (t!)^2` for `2 <= t <= m-1`,
/// `m <= n`. Empty descending products are 1.
pub fn gaeta_inequality(m: usize, n: usize, t: usize) -> Result<GaetaValues> {
    if t < 2 || t + 1 > m || m > n {
        return Err(Error::OutOfRange(format!(
            "need 2 <= t <= m-1 and m <= n, got m={m}, n={n}, t={t}"
        )));
    }
    let mut lhs = BigInt::from(m * n) - BigInt::from(t * t);
    for k in 1..t - 1 {
        lhs *= BigInt::from(m - k) * BigInt::from(n - k);
    }
    let fact: BigInt = (1..=t).map(BigInt::from).product();
    let rhs = &fact * &fact;
    Ok(GaetaValues {
        holds: lhs > rhs,
        lhs,
        rhs,
    })
}

/// One row of the formulas table.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaSummary {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub expected_codim: usize,
    pub minor_count: String,
    pub ladder_minor_count: String,
    pub cm_type: String,
    pub gorenstein: bool,
    pub ci_full_minors: CiClass,
    pub ci_ladder: CiClass,
    pub gaeta: Option<GaetaValues>,
}

pub fn formula_summary(m: usize, n: usize, t: usize) -> Result<FormulaSummary> {
    let ty = cm_type(m, n, t)?;
    Ok(FormulaSummary {
        m,
        n,
        t,
        expected_codim: expected_codim(m, n, t)?,
        minor_count: minor_count(m, n, t)?.to_string(),
        ladder_minor_count: ladder_minor_count(m, n, t)?.to_string(),
        gorenstein: ty.is_one(),
        cm_type: ty.to_integer().to_string(),
        ci_full_minors: ci_classification(m, n, t, CiVariant::FullMinors)?,
        ci_ladder: ci_classification(m, n, t, CiVariant::Ladder)?,
        gaeta: gaeta_inequality(m, n, t).ok(),
    })
}
