use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// A finite integer combination of elementary chains `f[A]` in one dimension.
///
/// Terms are keyed by `(cell index, coefficient word)`; the word is expected
/// to be in canonical form, which [`super::Resolution`] guarantees for every
/// chain it returns. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    terms: BTreeMap<(usize, Vec<crate::AtomId>), i64>,
}

impl Chain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn elementary(cell: usize, coefficient: Vec<crate::AtomId>) -> Self {
        let mut c = Chain::new();
        c.add_term(cell, coefficient, 1);
        c
    }

    pub fn add_term(&mut self, cell: usize, coefficient: Vec<crate::AtomId>, multiplicity: i64) {
        if multiplicity == 0 {
            return;
        }
        match self.terms.entry((cell, coefficient)) {
            Entry::Vacant(v) => {
                v.insert(multiplicity);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += multiplicity;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Chain, k: i64) {
        for ((cell, w), m) in &other.terms {
            self.add_term(*cell, w.clone(), k * m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, cell: usize, coefficient: &[crate::AtomId]) -> i64 {
        self.terms
            .get(&(cell, coefficient.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// `(cell, coefficient, multiplicity)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &[crate::AtomId], i64)> + '_ {
        self.terms.iter().map(|((c, w), m)| (*c, w.as_slice(), *m))
    }

    pub fn negated(&self) -> Chain {
        let mut c = self.clone();
        for m in c.terms.values_mut() {
            *m = -*m;
        }
        c
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, -1);
        c
    }
}
