//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{format_scalar, Field};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial in `num_vars` variables.
///
/// Terms are kept sorted strictly decreasing in the canonical (grevlex)
/// order, with no zero coefficients, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    num_vars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, num_vars: usize) -> Self {
        Self {
            field,
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: F, num_vars: usize, c: F::Elem) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field, num_vars);
        }
        Self {
            field,
            num_vars,
            terms: vec![(Monomial::one(num_vars), c)],
        }
    }

    pub fn one(field: F, num_vars: usize) -> Self {
        let c = field.one();
        Self::constant(field, num_vars, c)
    }

    /// The variable `x_index`.
    pub fn var(field: F, num_vars: usize, index: usize) -> Self {
        assert!(index < num_vars, "variable x{index} out of range");
        let c = field.one();
        Self {
            field,
            num_vars,
            terms: vec![(Monomial::variable(num_vars, index), c)],
        }
    }

    pub fn monomial(field: F, m: Monomial, c: F::Elem) -> Self {
        let num_vars = m.num_vars();
        if field.is_zero(&c) {
            return Self::zero(field, num_vars);
        }
        Self {
            field,
            num_vars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms; duplicates are combined and
    /// zero coefficients dropped.
    pub fn from_terms<I>(field: F, num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.num_vars(), num_vars);
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Self {
            field,
            num_vars,
            terms,
        }
    }

    /// Terms already sorted decreasing in the canonical order with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_unchecked(
        field: F,
        num_vars: usize,
        terms: Vec<(Monomial, F::Elem)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Self {
            field,
            num_vars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some() || self.is_zero()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .iter()
            .filter_map(|(m, _)| m.support().last())
            .max()
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.spec().to_string(),
                right: other.field.spec().to_string(),
            });
        }
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate { f.neg(c) } else { c.clone() };
            (m.clone(), c)
        }));
        Self::from_sorted_unchecked(self.field.clone(), self.num_vars, out)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone(), self.num_vars);
        }
        let f = &self.field;
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(c, m);
        }
        let products = self.terms.iter().flat_map(|(ma, ca)| {
            other
                .terms
                .iter()
                .map(move |(mb, cb)| (ma.mul(mb), f.mul(ca, cb)))
        });
        Self::from_terms(self.field.clone(), self.num_vars, products)
    }

    /// `c * m * self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f.clone(), self.num_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), f.mul(cc, c)))
            .collect();
        Self::from_sorted_unchecked(f.clone(), self.num_vars, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(c, &Monomial::one(self.num_vars))
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(c)))
            .collect();
        Self::from_sorted_unchecked(self.field.clone(), self.num_vars, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.num_vars);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn make_monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }
}

/// Exact `p op q`.
pub fn poly_arith<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>, op: ArithOp) -> Result<Polynomial<F>> {
    match op {
        ArithOp::Add => p.checked_add(q),
        ArithOp::Sub => p.checked_sub(q),
        ArithOp::Mul => p.checked_mul(q),
    }
}

// Operator sugar for code that already guarantees compatibility; panics on
// field or variable-count mismatch.
impl<F: Field> std::ops::Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> std::ops::Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> std::ops::Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (num, den) = self.field.to_integer_repr(c);
            let negative = num.sign() == num_bigint::Sign::Minus;
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = if negative { -num } else { num };
            let unit = den.is_none() && abs == 1.into();
            if m.is_one() {
                write!(f, "{}", format_scalar(&abs, &den))?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_scalar(&abs, &den))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.field.spec())
    }
}
