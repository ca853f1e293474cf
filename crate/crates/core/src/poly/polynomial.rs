use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{Monomial, Rational, Ring};
use crate::error::{Error, Result};

/// A nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// A polynomial with terms strictly descending under the ring order.
///
/// The empty term list is the zero polynomial. A `Poly` does not carry its
/// ring; every operation that depends on the order takes the ring
/// explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: vec![Term::new(c, ring.one())],
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Poly::constant(ring, Rational::one())
    }

    /// `c * x_index`.
    pub fn variable(ring: &Ring, index: usize) -> Self {
        Poly {
            terms: vec![Term::new(Rational::one(), ring.var(index))],
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, combines
    /// like monomials and drops zero coefficients.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Rational, Monomial)>,
    ) -> Result<Self> {
        let mut raw: Vec<Term> = Vec::new();
        for (coeff, mono) in terms {
            ring.check(&mono)?;
            raw.push(Term::new(coeff, mono));
        }
        raw.sort_by(|a, b| ring.cmp_unchecked(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Ok(Poly { terms })
    }

    /// Wraps terms that are already strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        Poly { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Result<&Rational> {
        self.leading_term().map(|t| &t.coeff)
    }

    fn check_ring(&self, ring: &Ring) -> Result<()> {
        self.terms.iter().try_for_each(|t| ring.check(&t.mono))
    }

    pub fn add(&self, other: &Poly, ring: &Ring) -> Result<Poly> {
        self.check_ring(ring)?;
        other.check_ring(ring)?;
        Ok(self.add_scaled(&Rational::one(), None, other, ring))
    }

    pub fn sub(&self, other: &Poly, ring: &Ring) -> Result<Poly> {
        self.check_ring(ring)?;
        other.check_ring(ring)?;
        Ok(self.add_scaled(&-Rational::one(), None, other, ring))
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// `t * self`; the monomial order is multiplicative so term order is kept.
    pub fn mul_term(&self, t: &Term, ring: &Ring) -> Result<Poly> {
        ring.check(&t.mono)?;
        self.check_ring(ring)?;
        Ok(self.mul_term_unchecked(&t.coeff, &t.mono))
    }

    pub(crate) fn mul_term_unchecked(&self, coeff: &Rational, mono: &Monomial) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * coeff, t.mono.mul_unchecked(mono)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly, ring: &Ring) -> Result<Poly> {
        self.check_ring(ring)?;
        other.check_ring(ring)?;
        let mut acc = Poly::zero();
        for t in &other.terms {
            acc = acc.add_scaled(&t.coeff, Some(&t.mono), self, ring);
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32, ring: &Ring) -> Result<Poly> {
        let mut acc = Poly::one(ring);
        for _ in 0..exp {
            acc = acc.mul(self, ring)?;
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Result<Poly> {
        let lc = self.leading_coeff()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.recip()))
    }

    /// Returns `self + coeff * mono * other`. `mono = None` stands for the
    /// constant monomial.
    pub(crate) fn add_scaled(
        &self,
        coeff: &Rational,
        mono: Option<&Monomial>,
        other: &Poly,
        ring: &Ring,
    ) -> Poly {
        Poly {
            terms: merge_scaled(&self.terms, coeff, mono, &other.terms, ring),
        }
    }

    /// Checks the representation invariant against `ring`.
    pub fn is_canonical(&self, ring: &Ring) -> bool {
        self.check_ring(ring).is_ok()
            && self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| ring.cmp_unchecked(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }
}

/// Merges two descending term lists into `lhs + coeff * mono * rhs`.
pub(crate) fn merge_scaled(
    lhs: &[Term],
    coeff: &Rational,
    mono: Option<&Monomial>,
    rhs: &[Term],
    ring: &Ring,
) -> Vec<Term> {
    if coeff.is_zero() || rhs.is_empty() {
        return lhs.to_vec();
    }
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let mut lhs = lhs.iter().peekable();
    let mut rhs = rhs.iter().map(|t| {
        let m = match mono {
            Some(m) => t.mono.mul_unchecked(m),
            None => t.mono.clone(),
        };
        Term::new(&t.coeff * coeff, m)
    });
    let mut pending = rhs.next();
    loop {
        match (lhs.peek(), pending.as_ref()) {
            (None, None) => break,
            (Some(_), None) => {
                out.extend(lhs.by_ref().cloned());
                break;
            }
            (None, Some(_)) => {
                out.extend(pending.take());
                out.extend(rhs.by_ref());
                break;
            }
            (Some(a), Some(b)) => match ring.cmp_unchecked(&a.mono, &b.mono) {
                Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    pending = rhs.next();
                }
                Ordering::Equal => {
                    let a = lhs.next().unwrap();
                    let b = pending.take().unwrap();
                    let c = &a.coeff + b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, b.mono));
                    }
                    pending = rhs.next();
                }
            },
        }
    }
    out
}
