//! Monomials in `x0, ..., xr` and the term orders on them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector. The total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Self {
            exps: vec![0; num_vars],
            degree: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Self { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|e| e * k).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The canonical storage order of polynomial terms is graded reverse
/// lexicographic with `x0 > x1 > ... > xr`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.cmp(&b.exps)
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    GrevLex,
    Lex,
    DiagonalWeighted,
}

/// A term order on monomials. Variables are ranked `x0 > x1 > ... > xr`.
///
/// `DiagonalWeighted` compares a weighted degree (all weights 1 unless given)
/// and breaks ties lexicographically. With row-major numbering of a generic
/// matrix this makes the main-diagonal term the leading term of every minor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        Self {
            kind: OrderKind::GrevLex,
            weights: None,
        }
    }

    pub fn lex() -> Self {
        Self {
            kind: OrderKind::Lex,
            weights: None,
        }
    }

    pub fn diagonal() -> Self {
        Self {
            kind: OrderKind::DiagonalWeighted,
            weights: None,
        }
    }

    pub fn diagonal_weighted(weights: Vec<u32>) -> Self {
        Self {
            kind: OrderKind::DiagonalWeighted,
            weights: Some(weights),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(Self::grevlex()),
            "lex" => Ok(Self::lex()),
            "diag" | "diagonal" => Ok(Self::diagonal()),
            other => Err(Error::Malformed(format!("unknown monomial order `{other}`"))),
        }
    }

    /// Checks that the order is a term order on `num_vars` variables.
    pub fn validate(&self, num_vars: usize) -> Result<()> {
        if let Some(w) = &self.weights {
            if w.len() != num_vars {
                return Err(Error::Malformed(format!(
                    "weight vector has length {} but there are {num_vars} variables",
                    w.len()
                )));
            }
            if w.contains(&0) {
                return Err(Error::Malformed(
                    "weights must be positive for a term order".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::GrevLex => grevlex(a, b),
            OrderKind::Lex => lex(a, b),
            OrderKind::DiagonalWeighted => {
                let wa = self.weighted_degree(a);
                let wb = self.weighted_degree(b);
                wa.cmp(&wb).then_with(|| lex(a, b))
            }
        }
    }

    fn weighted_degree(&self, m: &Monomial) -> u64 {
        match &self.weights {
            None => m.degree() as u64,
            Some(w) => m
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &wi)| e as u64 * wi as u64)
                .sum(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::GrevLex => write!(f, "grevlex"),
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::DiagonalWeighted => write!(f, "diag"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::grevlex();
        // x0*x3 < x1*x2 in grevlex: x3 is the last variable and appears on the left
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn diagonal_order_prefers_main_diagonal() {
        let o = MonomialOrder::diagonal();
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn weights_are_validated() {
        assert!(MonomialOrder::diagonal_weighted(vec![1, 2]).validate(3).is_err());
        assert!(MonomialOrder::diagonal_weighted(vec![1, 0, 1]).validate(3).is_err());
        assert!(MonomialOrder::diagonal_weighted(vec![1, 2, 1]).validate(3).is_ok());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 4).prop_map(Monomial::from_exponents)
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grevlex(),
            MonomialOrder::lex(),
            MonomialOrder::diagonal(),
            MonomialOrder::diagonal_weighted(vec![3, 1, 2, 1]),
        ]
    }

    proptest! {
        #[test]
        fn term_order_axioms(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let one = Monomial::one(4);
            for o in orders() {
                // multiplicative
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // 1 is minimal
                prop_assert_ne!(o.cmp(&a, &one), Ordering::Less);
                // total: antisymmetric, equal only on identical monomials
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            }
        }

        #[test]
        fn lcm_and_quotient(a in arb_mono(), b in arb_mono()) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            let q = a.quotient_of(&l).unwrap();
            prop_assert_eq!(q.mul(&a), l);
        }
    }
}
