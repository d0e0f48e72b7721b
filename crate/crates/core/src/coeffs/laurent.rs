use std::collections::BTreeMap;

use crate::linalg::{format_poly, Field, Poly, PolyRing};

/// An element of `F[t, t⁻¹]`: exponent → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<E> {
    terms: BTreeMap<i64, E>,
}

impl<E: Clone> LaurentPoly<E> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(field, exponent, c);
        p
    }

    pub fn from_poly<F: Field<Elem = E>>(field: &F, p: &Poly<E>) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(field, i as i64, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &E)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> Option<&E> {
        self.terms.get(&exponent)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, exponent: i64, c: E) {
        if field.is_zero(&c) {
            return;
        }
        let sum = match self.terms.get(&exponent) {
            Some(old) => field.add(old, &c),
            None => c,
        };
        if field.is_zero(&sum) {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, sum);
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(field, e, c.clone());
        }
        out
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            for (f, d) in other.terms() {
                out.add_term(field, e + f, field.mul(c, d));
            }
        }
        out
    }

    /// `t^k · self`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The polynomial `self` when no exponent is negative.
    pub fn to_poly<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Option<Poly<E>> {
        if self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let len = self.max_exponent().map_or(0, |e| e as usize + 1);
        let mut coeffs = vec![ring.field.zero(); len];
        for (e, c) in self.terms() {
            coeffs[e as usize] = c.clone();
        }
        Some(ring.from_coeffs(coeffs))
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        let Some(lo) = self.min_exponent() else {
            return "0".into();
        };
        let hi = self.max_exponent().unwrap_or(lo);
        let mut dense = vec![field.zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            dense[(e - lo) as usize] = c.clone();
        }
        format_poly(field, &dense, lo)
    }
}
