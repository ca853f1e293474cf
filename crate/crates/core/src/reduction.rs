//! S-polynomials and multivariate division with quotient certificates.

use std::borrow::Borrow;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::polynomial::merge_scaled;
use crate::poly::{Poly, Ring, Term};

/// Outcome of dividing a polynomial by an ordered list of divisors.
///
/// `dividend = sum(quotients[i] * divisors[i]) + remainder`, and no term of
/// `remainder` is divisible by the leading monomial of any divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub remainder: Poly,
    pub quotients: Vec<Poly>,
}

/// `(L / LT(f)) * f - (L / LT(g)) * g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Poly, g: &Poly, ring: &Ring) -> Result<Poly> {
    let lf = f.leading_term()?;
    let lg = g.leading_term()?;
    ring.check(&lf.mono)?;
    ring.check(&lg.mono)?;
    Ok(s_polynomial_unchecked(f, g, ring))
}

pub(crate) fn s_polynomial_unchecked(f: &Poly, g: &Poly, ring: &Ring) -> Poly {
    let lf = &f.terms()[0];
    let lg = &g.terms()[0];
    let lcm = lf.mono.lcm_unchecked(&lg.mono);
    let left = f.mul_term_unchecked(&lf.coeff.recip(), &lcm.div_unchecked(&lf.mono));
    left.add_scaled(
        &-lg.coeff.recip(),
        Some(&lcm.div_unchecked(&lg.mono)),
        g,
        ring,
    )
}

/// Full multivariate division of `f` by `divisors`.
///
/// The greatest remaining term is cancelled against the first divisor, in
/// list order, whose leading monomial divides it; otherwise it moves to the
/// remainder. The remainder is not normalized.
pub fn reduce_full<P: Borrow<Poly>>(
    f: &Poly,
    divisors: &[P],
    ring: &Ring,
) -> Result<DivisionResult> {
    check_divisors(f, divisors, ring)?;
    let mut quotients = vec![Vec::new(); divisors.len()];
    let remainder = divide(f, divisors, ring, Some(&mut quotients));
    Ok(DivisionResult {
        remainder,
        quotients: quotients.into_iter().map(Poly::from_sorted_unchecked).collect(),
    })
}

/// The remainder of [`reduce_full`] without building quotients.
pub fn normal_form<P: Borrow<Poly>>(f: &Poly, divisors: &[P], ring: &Ring) -> Result<Poly> {
    check_divisors(f, divisors, ring)?;
    Ok(divide(f, divisors, ring, None))
}

fn check_divisors<P: Borrow<Poly>>(f: &Poly, divisors: &[P], ring: &Ring) -> Result<()> {
    if !f.is_canonical(ring) {
        return Err(invalid_ring(f, ring));
    }
    for d in divisors {
        let d = d.borrow();
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !d.is_canonical(ring) {
            return Err(invalid_ring(d, ring));
        }
    }
    Ok(())
}

fn invalid_ring(p: &Poly, ring: &Ring) -> Error {
    let found = p
        .terms()
        .iter()
        .map(|t| t.mono.len())
        .find(|&n| n != ring.num_vars())
        .unwrap_or(ring.num_vars());
    Error::InvalidRing {
        expected: ring.num_vars(),
        found,
    }
}

pub(crate) fn divide<P: Borrow<Poly>>(
    f: &Poly,
    divisors: &[P],
    ring: &Ring,
    mut quotients: Option<&mut Vec<Vec<Term>>>,
) -> Poly {
    let mut work: Vec<Term> = f.terms().to_vec();
    // Live terms are work[start..].
    let mut start = 0;
    let mut remainder = Vec::new();
    while start < work.len() {
        let lead = &work[start];
        let hit = divisors.iter().enumerate().find_map(|(i, d)| {
            let lt = &d.borrow().terms()[0];
            lt.mono.divides_unchecked(&lead.mono).then_some((i, lt))
        });
        match hit {
            Some((i, lt)) => {
                let coeff = &lead.coeff / &lt.coeff;
                let mono = lead.mono.div_unchecked(&lt.mono);
                work = merge_scaled(
                    &work[start..],
                    &-coeff.clone(),
                    Some(&mono),
                    divisors[i].borrow().terms(),
                    ring,
                );
                start = 0;
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push(Term::new(coeff, mono));
                }
            }
            None => {
                remainder.push(lead.clone());
                start += 1;
            }
        }
    }
    Poly::from_sorted_unchecked(remainder)
}

/// Checks the division identity and the irreducibility of the remainder.
pub fn verify_division<P: Borrow<Poly>>(
    f: &Poly,
    divisors: &[P],
    result: &DivisionResult,
    ring: &Ring,
) -> bool {
    if result.quotients.len() != divisors.len()
        || !result.remainder.is_canonical(ring)
        || !result.quotients.iter().all(|q| q.is_canonical(ring))
    {
        return false;
    }
    let mut rebuilt = result.remainder.clone();
    for (q, d) in result.quotients.iter().zip(divisors) {
        let d = d.borrow();
        if !d.is_canonical(ring) {
            return false;
        }
        for t in q.terms() {
            rebuilt = rebuilt.add_scaled(&t.coeff, Some(&t.mono), d, ring);
        }
    }
    if rebuilt != *f {
        return false;
    }
    let leads: Vec<_> = divisors
        .iter()
        .filter_map(|d| d.borrow().leading_monomial().ok())
        .collect();
    result
        .remainder
        .terms()
        .iter()
        .all(|t| leads.iter().all(|l| !l.divides_unchecked(&t.mono)))
}

/// True when `p` is a nonzero constant, i.e. a unit of the ring.
pub fn is_unit(p: &Poly) -> bool {
    p.is_constant() && !p.terms()[0].coeff.is_zero()
}
