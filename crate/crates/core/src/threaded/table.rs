use std::collections::BTreeMap;

use super::Lineage;
use crate::buchberger::{interreduce_slots, minimalize_slots};
use crate::poly::{Poly, Ring};

/// Map from lineage keys to basis polynomials, or `None` once an entry has
/// been removed by minimalization.
///
/// Iteration follows the canonical key order: leaf keys by index, then pair
/// keys by string form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineageTable {
    ring: Ring,
    num_generators: usize,
    entries: BTreeMap<Lineage, Option<Poly>>,
}

impl LineageTable {
    /// Seeds leaf keys `0..gens.len()`; zero generators become null.
    pub fn from_generators(ring: Ring, gens: &[Poly]) -> Self {
        let entries = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (Lineage::leaf(i), (!g.is_zero()).then(|| g.clone())))
            .collect();
        LineageTable {
            ring,
            num_generators: gens.len(),
            entries,
        }
    }

    pub(crate) fn from_parts(
        ring: Ring,
        num_generators: usize,
        entries: BTreeMap<Lineage, Option<Poly>>,
    ) -> Self {
        LineageTable {
            ring,
            num_generators,
            entries,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `None` if the key is absent, `Some(None)` if it maps to null.
    pub fn get(&self, key: &Lineage) -> Option<Option<&Poly>> {
        self.entries.get(key).map(Option::as_ref)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Lineage, Option<&Poly>)> {
        self.entries.iter().map(|(k, v)| (k, v.as_ref()))
    }

    pub fn keys(&self) -> impl Iterator<Item = &Lineage> {
        self.entries.keys()
    }

    /// Keys of elements added during the run.
    pub fn pair_keys(&self) -> impl Iterator<Item = &Lineage> {
        self.entries.keys().filter(|k| !k.is_leaf())
    }

    pub fn null_keys(&self) -> impl Iterator<Item = &Lineage> {
        self.entries
            .iter()
            .filter(|(_, v)| v.is_none())
            .map(|(k, _)| k)
    }

    /// All non-null values in canonical key order.
    pub fn matrix(&self) -> Vec<Poly> {
        self.entries.values().flatten().cloned().collect()
    }

    /// Same keys; entries whose leading monomial is divisible by that of a
    /// retained entry become null and survivors are made monic.
    pub fn minimalize(&self) -> LineageTable {
        self.map_values(minimalize_slots)
    }

    /// Minimalizes, then replaces each survivor by its monic normal form
    /// against the other survivors.
    pub fn reduce(&self) -> LineageTable {
        self.map_values(interreduce_slots)
    }

    fn map_values(&self, f: impl Fn(&[Option<&Poly>], &Ring) -> Vec<Option<Poly>>) -> LineageTable {
        let slots: Vec<Option<&Poly>> = self.entries.values().map(Option::as_ref).collect();
        let values = f(&slots, &self.ring);
        LineageTable {
            ring: self.ring.clone(),
            num_generators: self.num_generators,
            entries: self.entries.keys().cloned().zip(values).collect(),
        }
    }
}
