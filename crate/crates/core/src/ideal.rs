//! Homogeneous ideals, reduced Gröbner bases, normal forms and heights.
//!
//! Bases come from Buchberger's algorithm with the normal selection strategy
//! and both of Buchberger's criteria. Dimension is read off the leading
//! monomials: `dim R/I` is the largest set of variables containing the
//! support of no leading monomial, so the height is the size of a smallest
//! set of variables meeting every leading-monomial support.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::polynomial::Polynomial;

/// Default cap on elementary reduction steps for one basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 50_000_000;

type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// A polynomial with its terms sorted decreasing under a specific order.
#[derive(Clone)]
struct Ordered<F: Field> {
    terms: Terms<F>,
    lead_mask: u64,
}

impl<F: Field> Ordered<F> {
    fn new(p: &Polynomial<F>, order: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self::from_terms(terms)
    }

    fn from_terms(terms: Terms<F>) -> Self {
        let lead_mask = terms.first().map(|(m, _)| mask(m)).unwrap_or(0);
        Self { terms, lead_mask }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn into_polynomial(self, field: &F, num_vars: usize) -> Polynomial<F> {
        let mut terms = self.terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial::from_sorted_unchecked(field.clone(), num_vars, terms)
    }
}

fn mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | 1 << (i % 64))
}

/// Counts elementary reduction steps against a budget.
struct StepCounter {
    used: u64,
    budget: u64,
}

impl StepCounter {
    fn new(budget: u64) -> Self {
        Self { used: 0, budget }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }
}

/// `p[start..] - c * m * g`, all sorted decreasing under `order`.
fn sub_scaled<F: Field>(
    field: &F,
    order: &MonomialOrder,
    p: &[(Monomial, F::Elem)],
    c: &F::Elem,
    m: &Monomial,
    g: &[(Monomial, F::Elem)],
) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), field.mul(gc, c))).peekable();
    while i < p.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().expect("peeked");
                out.push((gm, field.neg(&gc)));
            }
            Ordering::Equal => {
                let (_, gc) = gi.next().expect("peeked");
                let v = field.sub(&p[i].1, &gc);
                if !field.is_zero(&v) {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(gi.map(|(gm, gc)| (gm, field.neg(&gc))));
    out
}

/// Full reduction of `p` by monic `reducers`.
fn reduce_full<F: Field>(
    field: &F,
    order: &MonomialOrder,
    mut p: Terms<F>,
    reducers: &[Ordered<F>],
    steps: &mut StepCounter,
) -> Result<Terms<F>> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (lead, lc) = &p[start];
        let lmask = mask(lead);
        let reducer = reducers.iter().find(|g| {
            !g.terms.is_empty() && g.lead_mask & !lmask == 0 && g.lm().divides(lead)
        });
        match reducer {
            Some(g) => {
                steps.tick()?;
                let q = g.lm().quotient_of(lead).expect("divisibility checked");
                let c = lc.clone();
                p = sub_scaled(field, order, &p[start..], &c, &q, &g.terms);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

fn make_monic<F: Field>(field: &F, terms: &mut Terms<F>) {
    if let Some((_, lc)) = terms.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc).expect("nonzero");
            for (_, c) in terms.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
    }
}

fn s_polynomial<F: Field>(
    field: &F,
    order: &MonomialOrder,
    a: &Ordered<F>,
    b: &Ordered<F>,
    lcm: &Monomial,
) -> Terms<F> {
    // both monic: S = (lcm/lm a) a - (lcm/lm b) b
    let qa = a.lm().quotient_of(lcm).expect("lcm");
    let qb = b.lm().quotient_of(lcm).expect("lcm");
    let lhs: Terms<F> = a.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&qa), c.clone()))
        .collect();
    sub_scaled(field, order, &lhs, &field.one(), &qb, &b.terms[1..])
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn buchberger<F: Field>(
    field: &F,
    order: &MonomialOrder,
    generators: &[Polynomial<F>],
    budget: u64,
) -> Result<Vec<Ordered<F>>> {
    let mut steps = StepCounter::new(budget);
    let mut basis: Vec<Ordered<F>> = Vec::new();
    for g in generators {
        let mut o = Ordered::new(g, order);
        if o.terms.is_empty() {
            continue;
        }
        make_monic(field, &mut o.terms);
        basis.push(Ordered::from_terms(o.terms));
    }
    if basis.iter().any(|g| g.lm().is_one()) {
        let one = Polynomial::one(field.clone(), generators[0].num_vars());
        return Ok(vec![Ordered::new(&one, order)]);
    }

    let pair_cmp = |a: &Pair, b: &Pair| {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
    };

    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push(Pair {
                i,
                j,
                lcm: basis[i].lm().lcm(basis[j].lm()),
            });
            pending_set.insert((i, j));
        }
    }
    pending.sort_by(|a, b| pair_cmp(b, a));

    while let Some(pair) = pending.pop() {
        pending_set.remove(&(pair.i, pair.j));
        let (a, b) = (&basis[pair.i], &basis[pair.j]);
        // product criterion
        if a.lm().is_coprime(b.lm()) {
            continue;
        }
        // chain criterion
        let key = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !pending_set.contains(&key(pair.i, k))
                && !pending_set.contains(&key(pair.j, k))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(field, order, a, b, &pair.lcm);
        let mut r = reduce_full(field, order, s, &basis, &mut steps)?;
        if r.is_empty() {
            continue;
        }
        make_monic(field, &mut r);
        let new = Ordered::from_terms(r);
        if new.lm().is_one() {
            return Ok(vec![new]);
        }
        let j = basis.len();
        for i in 0..j {
            pending.push(Pair {
                i,
                j,
                lcm: basis[i].lm().lcm(new.lm()),
            });
            pending_set.insert((i, j));
        }
        basis.push(new);
        pending.sort_by(|a, b| pair_cmp(b, a));
    }

    // minimal basis: drop elements whose leading monomial is divisible by another's
    let n = basis.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            !(0..n).any(|k| {
                k != i
                    && basis[k].lm().divides(basis[i].lm())
                    && (basis[k].lm() != basis[i].lm() || k < i)
            })
        })
        .collect();
    let minimal: Vec<Ordered<F>> = keep.iter().map(|&i| basis[i].clone()).collect();

    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<Ordered<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, o)| o.clone())
            .collect();
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(reduce_full(field, order, g.terms[1..].to_vec(), &others, &mut steps)?);
        make_monic(field, &mut terms);
        reduced.push(Ordered::from_terms(terms));
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(reduced)
}

/// A reduced Gröbner basis together with its order-sorted working form.
struct Basis<F: Field> {
    polys: Vec<Polynomial<F>>,
    ordered: Vec<Ordered<F>>,
}

/// A homogeneous ideal given by generators, with an optional cached reduced
/// Gröbner basis for its monomial order.
#[derive(Clone)]
pub struct IdealHandle<F: Field> {
    field: F,
    num_vars: usize,
    generators: Vec<Polynomial<F>>,
    order: MonomialOrder,
    basis: Option<Arc<Basis<F>>>,
}

impl<F: Field> IdealHandle<F> {
    /// Builds an ideal; zero generators are dropped and nonhomogeneous ones
    /// are rejected.
    pub fn new(
        field: F,
        num_vars: usize,
        generators: Vec<Polynomial<F>>,
        order: MonomialOrder,
    ) -> Result<Self> {
        order.validate(num_vars)?;
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.field() != &field {
                return Err(Error::FieldMismatch {
                    left: field.spec().to_string(),
                    right: g.field().spec().to_string(),
                });
            }
            if g.num_vars() != num_vars {
                return Err(Error::VarCountMismatch {
                    left: num_vars,
                    right: g.num_vars(),
                });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            gens.push(g);
        }
        Ok(Self {
            field,
            num_vars,
            generators: gens,
            order,
            basis: None,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn cached_basis(&self) -> Option<&[Polynomial<F>]> {
        self.basis.as_ref().map(|b| b.polys.as_slice())
    }

    /// Same generators under another order; the cache is dropped.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(self.field.clone(), self.num_vars, self.generators.clone(), order)
    }

    /// Computes and caches the reduced basis if absent.
    pub fn compute_basis(&mut self, budget: u64) -> Result<()> {
        if self.basis.is_some() {
            return Ok(());
        }
        let ordered = buchberger(&self.field, &self.order, &self.generators, budget)?;
        let polys = ordered
            .iter()
            .map(|o| o.clone().into_polynomial(&self.field, self.num_vars))
            .collect();
        self.basis = Some(Arc::new(Basis { polys, ordered }));
        Ok(())
    }

    pub fn with_basis(mut self, budget: u64) -> Result<Self> {
        self.compute_basis(budget)?;
        Ok(self)
    }

    /// Normal form of `p` modulo the cached basis.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        let basis = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        if p.field() != &self.field {
            return Err(Error::FieldMismatch {
                left: self.field.spec().to_string(),
                right: p.field().spec().to_string(),
            });
        }
        if p.num_vars() != self.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: p.num_vars(),
            });
        }
        let mut steps = StepCounter::new(u64::MAX);
        let terms = Ordered::new(p, &self.order).terms;
        let r = reduce_full(&self.field, &self.order, terms, &basis.ordered, &mut steps)?;
        Ok(Ordered::<F>::from_terms(r).into_polynomial(&self.field, self.num_vars))
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Leading monomials of the cached basis.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        let basis = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        Ok(basis.ordered.iter().map(|o| o.lm().clone()).collect())
    }

    /// `dim R/I`, computing the basis on demand.
    pub fn krull_dimension(&mut self, budget: u64) -> Result<usize> {
        self.compute_basis(budget)?;
        let lms = self.leading_monomials()?;
        let cover = min_transversal(&lms, self.num_vars)?;
        Ok(self.num_vars - cover)
    }

    /// `(r+1) - dim R/I`.
    pub fn height(&mut self, budget: u64) -> Result<usize> {
        let d = self.krull_dimension(budget)?;
        Ok(self.num_vars - d)
    }

    /// Checks the reduced Gröbner basis axioms: generators and all
    /// S-polynomials of basis pairs reduce to zero, and the basis is
    /// auto-reduced with monic elements.
    pub fn verify_basis(&self) -> Result<bool> {
        let basis = self.basis.as_ref().ok_or(Error::MissingBasis)?;
        let f = &self.field;
        let mut steps = StepCounter::new(u64::MAX);
        for g in &self.generators {
            if !self.normal_form(g)?.is_zero() {
                return Ok(false);
            }
        }
        let b = &basis.ordered;
        for i in 0..b.len() {
            if !f.is_one(&b[i].terms[0].1) {
                return Ok(false);
            }
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                // no term of b[i] is divisible by the leading monomial of b[j]
                if b[i].terms.iter().any(|(m, _)| b[j].lm().divides(m)) {
                    return Ok(false);
                }
                if i < j {
                    let lcm = b[i].lm().lcm(b[j].lm());
                    let s = s_polynomial(f, &self.order, &b[i], &b[j], &lcm);
                    if !reduce_full(f, &self.order, s, b, &mut steps)?.is_empty() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Size of a minimal homogeneous generating set, found greedily in
    /// increasing degree.
    pub fn minimal_generator_count(&self, budget: u64) -> Result<usize> {
        let mut gens: Vec<&Polynomial<F>> = self.generators.iter().collect();
        gens.sort_by_key(|g| g.homogeneous_degree());
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        for g in gens {
            let redundant = if kept.is_empty() {
                false
            } else {
                let sub = IdealHandle::new(
                    self.field.clone(),
                    self.num_vars,
                    kept.clone(),
                    self.order.clone(),
                )?
                .with_basis(budget)?;
                sub.contains(g)?
            };
            if !redundant {
                kept.push(g.clone());
            }
        }
        Ok(kept.len())
    }
}

impl<F: Field> fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealHandle")
            .field("field", &self.field.spec())
            .field("num_vars", &self.num_vars)
            .field("generators", &self.generators)
            .field("order", &self.order)
            .field("basis", &self.cached_basis())
            .finish()
    }
}

/// Returns a copy of `ideal` carrying its reduced Gröbner basis. Idempotent.
pub fn groebner_basis<F: Field>(ideal: &IdealHandle<F>, budget: u64) -> Result<IdealHandle<F>> {
    ideal.clone().with_basis(budget)
}

pub fn normal_form<F: Field>(p: &Polynomial<F>, ideal: &IdealHandle<F>) -> Result<Polynomial<F>> {
    ideal.normal_form(p)
}

pub fn krull_dimension<F: Field>(ideal: &IdealHandle<F>, budget: u64) -> Result<usize> {
    ideal.clone().krull_dimension(budget)
}

pub fn height<F: Field>(ideal: &IdealHandle<F>, budget: u64) -> Result<usize> {
    ideal.clone().height(budget)
}

/// Smallest number of variables meeting the support of every monomial.
fn min_transversal(lms: &[Monomial], num_vars: usize) -> Result<usize> {
    if num_vars > 128 {
        return Err(Error::OutOfRange(format!(
            "dimension computation supports at most 128 variables, got {num_vars}"
        )));
    }
    let mut sets: Vec<u128> = Vec::with_capacity(lms.len());
    for m in lms {
        if m.is_one() {
            return Err(Error::EmptyScheme);
        }
        sets.push(m.support().fold(0u128, |acc, i| acc | 1 << i));
    }
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // a hitting set for a subset hits every superset
    let mut minimal: Vec<u128> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    let mut best = usize::MAX;
    search(&minimal, 0, 0, &mut best);
    Ok(if best == usize::MAX { 0 } else { best })
}

fn search(sets: &[u128], chosen: u128, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    let unhit: Vec<u128> = sets.iter().copied().filter(|s| s & chosen == 0).collect();
    if unhit.is_empty() {
        *best = count;
        return;
    }
    // pairwise disjoint unhit sets each need their own variable
    let mut used = 0u128;
    let mut packing = 0;
    for &s in &unhit {
        if s & used == 0 {
            used |= s;
            packing += 1;
        }
    }
    if count + packing >= *best {
        return;
    }
    let pivot = *unhit
        .iter()
        .min_by_key(|s| s.count_ones())
        .expect("nonempty");
    let mut bits = pivot;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        search(sets, chosen | 1 << v, count + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;

    const B: u64 = DEFAULT_STEP_BUDGET;

    fn ideal(gens: &[&str], n: usize) -> IdealHandle<Rationals> {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, Rationals, n).unwrap())
            .collect();
        IdealHandle::new(Rationals, n, gens, MonomialOrder::grevlex()).unwrap()
    }

    #[test]
    fn monomial_generators_are_their_own_basis() {
        let i = groebner_basis(&ideal(&["x0", "x1"], 4), B).unwrap();
        let basis: Vec<String> = i.cached_basis().unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(basis, vec!["x1", "x0"]);
    }

    #[test]
    fn principal_ideal_basis() {
        let i = groebner_basis(&ideal(&["x0*x3 - x1*x2"], 4), B).unwrap();
        assert_eq!(i.cached_basis().unwrap().len(), 1);
        assert!(i.verify_basis().unwrap());
    }

    #[test]
    fn two_by_three_minors_under_diagonal_order() {
        // generic 2x3: x0 x1 x2 / x3 x4 x5
        let gens = ["x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"];
        let i = ideal(&gens, 6)
            .with_order(MonomialOrder::diagonal())
            .unwrap()
            .with_basis(B)
            .unwrap();
        let basis = i.cached_basis().unwrap();
        assert_eq!(basis.len(), 3);
        for g in gens {
            let p = parse_polynomial(g, Rationals, 6).unwrap();
            assert!(basis.contains(&p), "{g} missing from basis");
        }
        assert!(i.verify_basis().unwrap());
    }

    #[test]
    fn basis_is_idempotent() {
        let i = groebner_basis(&ideal(&["x0^2 - x1*x2", "x0*x1 - x2^2"], 3), B).unwrap();
        let again = groebner_basis(&i, B).unwrap();
        assert_eq!(i.cached_basis(), again.cached_basis());
        assert!(i.verify_basis().unwrap());
    }

    #[test]
    fn normal_forms() {
        let i = groebner_basis(&ideal(&["x0*x3 - x1*x2"], 5), B).unwrap();
        let g = parse_polynomial("x0*x3 - x1*x2", Rationals, 5).unwrap();
        assert!(i.normal_form(&g).unwrap().is_zero());
        let one = Polynomial::one(Rationals, 5);
        assert_eq!(i.normal_form(&one).unwrap(), one);
        let multiple = parse_polynomial("x4*(x0*x3 - x1*x2)", Rationals, 5).unwrap();
        assert!(i.normal_form(&multiple).unwrap().is_zero());
    }

    #[test]
    fn normal_form_requires_basis() {
        let i = ideal(&["x0"], 2);
        let p = parse_polynomial("x0", Rationals, 2).unwrap();
        assert_eq!(i.normal_form(&p), Err(Error::MissingBasis));
    }

    #[test]
    fn dimensions() {
        assert_eq!(krull_dimension(&ideal(&["x0", "x1"], 4), B).unwrap(), 2);
        assert_eq!(krull_dimension(&ideal(&["x0^2"], 3), B).unwrap(), 2);
        let minors = ["x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"];
        assert_eq!(krull_dimension(&ideal(&minors, 6), B).unwrap(), 4);
        assert_eq!(height(&ideal(&minors, 6), B).unwrap(), 2);
        assert_eq!(height(&ideal(&[], 3), B).unwrap(), 0);
    }

    #[test]
    fn unit_ideal_is_signalled() {
        let i = ideal(&["x0", "x1"], 2);
        let gens = vec![
            parse_polynomial("x0^2", Rationals, 2).unwrap(),
            Polynomial::one(Rationals, 2),
        ];
        let unit = IdealHandle::new(Rationals, 2, gens, MonomialOrder::grevlex()).unwrap();
        assert_eq!(krull_dimension(&unit, B), Err(Error::EmptyScheme));
        assert_eq!(height(&i, B).unwrap(), 2);
    }

    #[test]
    fn nonhomogeneous_generators_are_rejected() {
        let p = parse_polynomial("x0^2 - x1", Rationals, 2).unwrap();
        let r = IdealHandle::new(Rationals, 2, vec![p], MonomialOrder::grevlex());
        assert!(matches!(r, Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let gens = ["x0^3 - x1*x2^2", "x1^3 - x0*x2^2", "x0^2*x1 - x2^3"];
        let r = groebner_basis(&ideal(&gens, 3), 2);
        assert_eq!(r.err(), Some(Error::BudgetExceeded { budget: 2 }));
    }

    #[test]
    fn twisted_quartic_over_prime_field() {
        let f = PrimeField::default();
        let gens = ["x0*x3 - x1*x2", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2", "x0*x2^2 - x1^2*x3"]
            .iter()
            .map(|s| parse_polynomial(s, f, 4).unwrap())
            .collect();
        let i = IdealHandle::new(f, 4, gens, MonomialOrder::grevlex())
            .unwrap()
            .with_basis(B)
            .unwrap();
        assert!(i.verify_basis().unwrap());
        assert_eq!(krull_dimension(&i, B).unwrap(), 2);
    }

    #[test]
    fn transversal_search() {
        let m = |e: &[u16]| Monomial::from_exponents(e.to_vec());
        // a 5-cycle needs 3 vertices
        let cycle = [
            m(&[1, 1, 0, 0, 0]),
            m(&[0, 1, 1, 0, 0]),
            m(&[0, 0, 1, 1, 0]),
            m(&[0, 0, 0, 1, 1]),
            m(&[1, 0, 0, 0, 1]),
        ];
        assert_eq!(min_transversal(&cycle, 5).unwrap(), 3);
        assert_eq!(min_transversal(&[], 5).unwrap(), 0);
    }
}
