//! Shared test helpers: an independent dictionary-based polynomial oracle
//! and random ideal generators.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use tgb::poly::{Monomial, MonomialOrder, Poly, Rational, Ring};

/// Oracle polynomial: monomial exponent vector -> coefficient. Ordering is
/// recomputed from scratch by [`oracle_cmp`] on every lookup.
pub type DictPoly = BTreeMap<Vec<u32>, Rational>;

pub fn oracle_cmp(order: MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        MonomialOrder::Lex => {
            for (x, y) in a.iter().zip(b) {
                if x != y {
                    return x.cmp(y);
                }
            }
            Ordering::Equal
        }
        MonomialOrder::GrevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            if da != db {
                return da.cmp(&db);
            }
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
    }
}

pub fn to_dict(p: &Poly) -> DictPoly {
    p.terms()
        .iter()
        .map(|t| (t.mono.exponents().to_vec(), t.coeff.clone()))
        .collect()
}

pub fn from_dict(d: &DictPoly, ring: &Ring) -> Poly {
    Poly::from_terms(
        ring,
        d.iter().map(|(e, c)| (c.clone(), Monomial::new(e.clone()))),
    )
    .unwrap()
}

pub fn dict_lead(order: MonomialOrder, p: &DictPoly) -> Option<(Vec<u32>, Rational)> {
    p.iter()
        .max_by(|a, b| oracle_cmp(order, a.0, b.0))
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// `p += c * x^m * q`
pub fn dict_axpy(p: &mut DictPoly, c: &Rational, m: &[u32], q: &DictPoly) {
    for (e, qc) in q {
        let key: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
        let entry = p.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c * qc;
        if entry.is_zero() {
            p.remove(&key);
        }
    }
}

pub fn dict_spoly(order: MonomialOrder, f: &DictPoly, g: &DictPoly) -> DictPoly {
    let (lf, cf) = dict_lead(order, f).unwrap();
    let (lg, cg) = dict_lead(order, g).unwrap();
    let lcm: Vec<u32> = lf.iter().zip(&lg).map(|(a, b)| *a.max(b)).collect();
    let mf: Vec<u32> = lcm.iter().zip(&lf).map(|(a, b)| a - b).collect();
    let mg: Vec<u32> = lcm.iter().zip(&lg).map(|(a, b)| a - b).collect();
    let mut out = DictPoly::new();
    dict_axpy(&mut out, &cf.recip(), &mf, f);
    dict_axpy(&mut out, &-cg.recip(), &mg, g);
    out
}

/// Textbook division, first divisor in list order wins.
pub fn dict_remainder(order: MonomialOrder, f: &DictPoly, divisors: &[DictPoly]) -> DictPoly {
    let mut p = f.clone();
    let mut rem = DictPoly::new();
    while let Some((m, c)) = dict_lead(order, &p) {
        let hit = divisors.iter().find_map(|d| {
            let (ld, cd) = dict_lead(order, d)?;
            ld.iter().zip(&m).all(|(a, b)| a <= b).then_some((d, ld, cd))
        });
        match hit {
            Some((d, ld, cd)) => {
                let q: Vec<u32> = m.iter().zip(&ld).map(|(a, b)| a - b).collect();
                dict_axpy(&mut p, &-(&c / &cd), &q, d);
            }
            None => {
                p.remove(&m);
                rem.insert(m, c);
            }
        }
    }
    rem
}

/// Random polynomial in `nvars` variables with up to `max_terms` terms of
/// total degree <= `max_deg` and integer coefficients in [-c, c].
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &Ring,
    max_terms: usize,
    max_deg: u32,
    c: i64,
) -> Poly {
    let n = ring.num_vars();
    let terms: Vec<(Rational, Monomial)> = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            let mut exps = vec![0u32; n];
            let deg = rng.gen_range(0..=max_deg);
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            let coeff = Rational::from_integer(rng.gen_range(-c..=c).into());
            (coeff, Monomial::new(exps))
        })
        .collect();
    Poly::from_terms(ring, terms).unwrap()
}

/// Random nonzero generator list for the oracle-equivalence checks.
pub fn random_ideal<R: Rng>(rng: &mut R, ring: &Ring) -> Vec<Poly> {
    let k = rng.gen_range(2..=4);
    (0..k)
        .map(|_| loop {
            let p = random_poly(rng, ring, 4, 3, 4);
            if !p.is_zero() {
                break p;
            }
        })
        .collect()
}

/// Monic, sorted by leading monomial.
pub fn canonical_set(polys: impl IntoIterator<Item = Poly>, ring: &Ring) -> Vec<Poly> {
    let mut out: Vec<Poly> = polys.into_iter().map(|p| p.make_monic().unwrap()).collect();
    out.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .unwrap()
    });
    out
}

pub fn is_one(p: &Poly) -> bool {
    p.is_constant() && p.terms()[0].coeff.is_one()
}

pub fn load(name: &str) -> tgb::cli::ProblemSpec {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    tgb::cli::parse_input(&std::fs::read_to_string(path).unwrap()).unwrap()
}
