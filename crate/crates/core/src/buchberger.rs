//! Serial Buchberger algorithm and basis post-processing.
//!
//! This is the single-threaded reference the threaded driver is checked
//! against. Pairs are processed first-in first-out: the initial pairs in
//! lexicographic order of `(i, j)`, then the pairs created by every new
//! element in creation order.

use std::collections::VecDeque;

use crate::error::Result;
use crate::poly::{Poly, Ring};
use crate::reduction::{is_unit, normal_form, s_polynomial_unchecked};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime. Off by default; with
    /// it on, the pair count no longer matches the classical algorithm.
    pub coprime_criterion: bool,
}

/// Classical Buchberger: returns the nonzero inputs followed by every
/// nonzero remainder, in discovery order.
pub fn buchberger(gens: &[Poly], ring: &Ring) -> Result<Vec<Poly>> {
    buchberger_with(gens, ring, BuchbergerOptions::default())
}

pub fn buchberger_with(
    gens: &[Poly],
    ring: &Ring,
    options: BuchbergerOptions,
) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    // Validates every generator against the ring.
    normal_form(&Poly::zero(), &basis, ring)?;
    if basis.iter().any(is_unit) {
        return Ok(basis);
    }
    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop_front() {
        if options.coprime_criterion && coprime_leads(&basis[i], &basis[j]) {
            continue;
        }
        let s = s_polynomial_unchecked(&basis[i], &basis[j], ring);
        let r = normal_form(&s, &basis, ring)?;
        if r.is_zero() {
            continue;
        }
        let unit = is_unit(&r);
        basis.push(r);
        if unit {
            break;
        }
        let k = basis.len() - 1;
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(basis)
}

fn coprime_leads(f: &Poly, g: &Poly) -> bool {
    let (a, b) = (&f.terms()[0].mono, &g.terms()[0].mono);
    a.exponents()
        .iter()
        .zip(b.exponents())
        .all(|(x, y)| *x == 0 || *y == 0)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
///
/// Zero entries are ignored.
pub fn is_groebner(basis: &[Poly], ring: &Ring) -> bool {
    let basis: Vec<&Poly> = basis.iter().filter(|g| !g.is_zero()).collect();
    if normal_form(&Poly::zero(), &basis, ring).is_err() {
        return false;
    }
    (0..basis.len()).all(|i| {
        (i + 1..basis.len()).all(|j| {
            let s = s_polynomial_unchecked(basis[i], basis[j], ring);
            normal_form(&s, &basis, ring).is_ok_and(|r| r.is_zero())
        })
    })
}

/// Nulls every element whose leading monomial is divisible by the leading
/// monomial of a retained element and makes survivors monic.
///
/// Among equal leading monomials the element at the later position is
/// kept. The input must be a Gröbner basis.
pub fn minimalize(basis: &[Poly], ring: &Ring) -> Vec<Option<Poly>> {
    let slots: Vec<Option<&Poly>> = basis.iter().map(Some).collect();
    minimalize_slots(&slots, ring)
}

/// Minimalizes, then replaces each survivor by its normal form against the
/// other survivors, made monic. The non-null entries form the reduced
/// Gröbner basis.
pub fn interreduce(basis: &[Poly], ring: &Ring) -> Vec<Option<Poly>> {
    let slots: Vec<Option<&Poly>> = basis.iter().map(Some).collect();
    interreduce_slots(&slots, ring)
}

pub(crate) fn minimalize_slots(slots: &[Option<&Poly>], ring: &Ring) -> Vec<Option<Poly>> {
    let leads: Vec<_> = slots
        .iter()
        .map(|s| s.filter(|p| !p.is_zero()).map(|p| &p.terms()[0].mono))
        .collect();
    slots
        .iter()
        .enumerate()
        .map(|(i, slot)| {
            let lead = leads[i]?;
            // Divisibility is transitive, so some minimal divisor survives
            // whenever an element is dropped.
            let dominated = leads.iter().enumerate().any(|(j, other)| {
                other.is_some_and(|m| {
                    j != i && m.divides_unchecked(lead) && (m != lead || j > i)
                })
            });
            if dominated {
                None
            } else {
                slot.and_then(|p| p.make_monic().ok())
            }
        })
        .inspect(|p| debug_assert!(p.as_ref().is_none_or(|p| p.is_canonical(ring))))
        .collect()
}

pub(crate) fn interreduce_slots(slots: &[Option<&Poly>], ring: &Ring) -> Vec<Option<Poly>> {
    let minimal = minimalize_slots(slots, ring);
    let survivors: Vec<(usize, &Poly)> = minimal
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
        .collect();
    let mut out = vec![None; minimal.len()];
    for &(i, p) in &survivors {
        let others: Vec<&Poly> = survivors
            .iter()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| *q)
            .collect();
        // The leading term cannot be reduced in a minimal basis, so the
        // normal form is nonzero.
        let reduced = normal_form(p, &others, ring).expect("survivors share the ring");
        out[i] = Some(reduced.make_monic().expect("normal form of a survivor is nonzero"));
    }
    out
}
