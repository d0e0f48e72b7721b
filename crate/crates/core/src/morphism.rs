//! Division, lcms and canonical forms on atom words, computed by reversing
//! against the pairwise lcm table.
//!
//! Every recursion here acts on words of strictly smaller total length, as
//! long as the table is length-homogeneous; a quotient whose length does not
//! match is reported as [`Error::Inconsistent`] instead of looping.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure, ObjectId, PairLcm};

/// Budget for a single lcm computation.
const LCM_FUEL: u64 = 20_000_000;

/// Left-lcm of a family of atoms with the complement of each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftLcm {
    pub lcm: AtomWord,
    /// `(a, c_a)` with `c_a · a = lcm`, in the order the parts were given.
    pub complements: Vec<(AtomId, AtomWord)>,
}

impl LeftLcm {
    pub fn complement(&self, a: AtomId) -> Option<&AtomWord> {
        self.complements.iter().find(|(b, _)| *b == a).map(|(_, w)| w)
    }
}

impl GaussianStructure {
    /// Word `g` with `g · a = f`, or `None` when `a` does not right-divide `f`.
    pub(crate) fn quotient_atoms(&self, f: &[AtomId], a: AtomId) -> Result<Option<Vec<AtomId>>> {
        let Some((&b, h)) = f.split_last() else {
            return Ok(None);
        };
        if b == a {
            return Ok(Some(h.to_vec()));
        }
        match self.pair(a, b) {
            PairLcm::Lcm { comp_a, comp_b } => {
                let Some(mut q) = self.quotient_by_atoms(h, comp_b)? else {
                    return Ok(None);
                };
                q.extend_from_slice(comp_a);
                if self.length_of(&q) + self.atom(a).length as u64 != self.length_of(f) {
                    return Err(Error::Inconsistent(format!(
                        "lcm table is not length-homogeneous around atoms `{}` and `{}`",
                        self.atom(a).name,
                        self.atom(b).name
                    )));
                }
                Ok(Some(q))
            }
            PairLcm::Same | PairLcm::None => Ok(None),
        }
    }

    /// Word `g` with `g · w = f`.
    pub(crate) fn quotient_by_atoms(&self, f: &[AtomId], w: &[AtomId]) -> Result<Option<Vec<AtomId>>> {
        let mut rest = f.to_vec();
        for &c in w.iter().rev() {
            match self.quotient_atoms(&rest, c)? {
                Some(q) => rest = q,
                None => return Ok(None),
            }
        }
        Ok(Some(rest))
    }

    /// Whether the atom `a` right-divides `f`, i.e. `f = g · a` for some `g`.
    pub fn right_divides(&self, a: AtomId, f: &AtomWord) -> Result<bool> {
        if self.atom(a).target != f.target() {
            return Err(Error::Precondition(format!(
                "atom `{}` and the word do not share a target",
                self.atom(a).name
            )));
        }
        Ok(self.quotient_atoms(f.atoms(), a)?.is_some())
    }

    /// The unique `g` with `g · a = f`, in canonical form for the ascending-id ordering.
    pub fn left_quotient(&self, f: &AtomWord, a: AtomId) -> Result<AtomWord> {
        if self.atom(a).target != f.target() {
            return Err(Error::Precondition(format!(
                "atom `{}` and the word do not share a target",
                self.atom(a).name
            )));
        }
        let q = self.quotient_atoms(f.atoms(), a)?.ok_or_else(|| {
            Error::Division(format!(
                "`{}` does not right-divide `{}`",
                self.atom(a).name,
                self.format_word(f)
            ))
        })?;
        let source = f.source();
        let word = AtomWord::from_parts(source, self.atom(a).source, q);
        self.canonical_form(&word, &AtomOrdering::identity(self))
    }

    /// The `g` with `g · divisor = f`, when it exists. Not canonicalized.
    pub fn quotient_by_word(&self, f: &AtomWord, divisor: &AtomWord) -> Result<Option<AtomWord>> {
        if f.target() != divisor.target() {
            return Err(Error::Precondition("words do not share a target".into()));
        }
        Ok(self
            .quotient_by_atoms(f.atoms(), divisor.atoms())?
            .map(|q| AtomWord::from_parts(f.source(), divisor.source(), q)))
    }

    /// `p · u = q · c` for the left-lcm of the word `u` and the atom `c`.
    fn lcm_word_atom(
        &self,
        u: &[AtomId],
        c: AtomId,
        fuel: &Cell<u64>,
    ) -> Result<Option<(Vec<AtomId>, Vec<AtomId>)>> {
        burn(fuel)?;
        let Some((&b, rest)) = u.split_last() else {
            return Ok(Some((vec![c], Vec::new())));
        };
        if b == c {
            return Ok(Some((Vec::new(), rest.to_vec())));
        }
        match self.pair(b, c) {
            PairLcm::Lcm { comp_a, comp_b } => {
                let Some((p, mut q)) = self.lcm_words(rest, comp_a, fuel)? else {
                    return Ok(None);
                };
                q.extend_from_slice(comp_b);
                Ok(Some((p, q)))
            }
            PairLcm::Same | PairLcm::None => Ok(None),
        }
    }

    /// `p · u = q · v` for the left-lcm of two words sharing a target.
    fn lcm_words(
        &self,
        u: &[AtomId],
        v: &[AtomId],
        fuel: &Cell<u64>,
    ) -> Result<Option<(Vec<AtomId>, Vec<AtomId>)>> {
        burn(fuel)?;
        let Some((&c, v_rest)) = v.split_last() else {
            return Ok(Some((Vec::new(), u.to_vec())));
        };
        let Some((p1, q1)) = self.lcm_word_atom(u, c, fuel)? else {
            return Ok(None);
        };
        let Some((mut p2, q2)) = self.lcm_words(&q1, v_rest, fuel)? else {
            return Ok(None);
        };
        p2.extend_from_slice(&p1);
        Ok(Some((p2, q2)))
    }

    /// Left-lcm of a word and an atom: `(p, q)` with `p · u = q · a`.
    pub fn lcm_with_atom(&self, u: &AtomWord, a: AtomId) -> Result<Option<(AtomWord, AtomWord)>> {
        let atom = self.atom(a);
        if atom.target != u.target() {
            return Err(Error::Precondition(format!(
                "atom `{}` and the word do not share a target",
                atom.name
            )));
        }
        let fuel = Cell::new(LCM_FUEL);
        let Some((p, q)) = self.lcm_word_atom(u.atoms(), a, &fuel)? else {
            return Ok(None);
        };
        let start = self.start_of(&p, u.source());
        Ok(Some((
            AtomWord::from_parts(start, u.source(), p),
            AtomWord::from_parts(start, atom.source, q),
        )))
    }

    /// Left-lcm of two words: `(p, q)` with `p · u = q · v`.
    pub fn lcm_of_words(&self, u: &AtomWord, v: &AtomWord) -> Result<Option<(AtomWord, AtomWord)>> {
        if u.target() != v.target() {
            return Err(Error::Precondition("words do not share a target".into()));
        }
        let fuel = Cell::new(LCM_FUEL);
        let Some((p, q)) = self.lcm_words(u.atoms(), v.atoms(), &fuel)? else {
            return Ok(None);
        };
        let start = if p.is_empty() {
            self.start_of(&q, v.source())
        } else {
            self.atom(p[0]).source
        };
        Ok(Some((
            AtomWord::from_parts(start, u.source(), p),
            AtomWord::from_parts(start, v.source(), q),
        )))
    }

    fn start_of(&self, word: &[AtomId], fallback: ObjectId) -> ObjectId {
        word.first().map_or(fallback, |&a| self.atom(a).source)
    }

    /// Left-lcm of a nonempty family of atoms sharing a target, or `None` when
    /// they have no common left-multiple.
    pub fn left_lcm(&self, parts: &[AtomId]) -> Result<Option<LeftLcm>> {
        let Some((&first, rest)) = parts.split_first() else {
            return Err(Error::Precondition("left_lcm needs at least one atom".into()));
        };
        let target = self.atom(first).target;
        if rest.iter().any(|&a| self.atom(a).target != target) {
            return Err(Error::Precondition("atoms do not share a target".into()));
        }
        let mut lcm = self.atom_word(first);
        let mut complements = vec![(first, AtomWord::identity(self.atom(first).source))];
        for &a in rest {
            let Some((p, q)) = self.lcm_with_atom(&lcm, a)? else {
                return Ok(None);
            };
            lcm = p.concat_unchecked(&lcm);
            for (_, c) in complements.iter_mut() {
                *c = p.concat_unchecked(c);
            }
            complements.push((a, q));
        }
        let ordering = AtomOrdering::identity(self);
        let lcm = self.canonical_form(&lcm, &ordering)?;
        let complements = complements
            .into_iter()
            .map(|(a, c)| Ok((a, self.canonical_form(&c, &ordering)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(LeftLcm { lcm, complements }))
    }

    /// `md(f)` and the quotient `f / md(f)` as raw atoms.
    pub(crate) fn md_split(
        &self,
        f: &[AtomId],
        ordering: &AtomOrdering,
    ) -> Result<(AtomId, Vec<AtomId>)> {
        let Some(&last) = f.last() else {
            return Err(Error::Precondition("md of an identity".into()));
        };
        let target = self.atom(last).target;
        for &a in ordering.at_target(target) {
            if let Some(q) = self.quotient_atoms(f, a)? {
                return Ok((a, q));
            }
        }
        Err(Error::Inconsistent(
            "no atom right-divides a nonempty word".into(),
        ))
    }

    /// The least atom, in `ordering`, that right-divides `f`.
    pub fn md(&self, f: &AtomWord, ordering: &AtomOrdering) -> Result<AtomId> {
        if f.is_identity() {
            return Err(Error::Precondition("md is undefined on identities".into()));
        }
        Ok(self.md_split(f.atoms(), ordering)?.0)
    }

    pub(crate) fn canonical_atoms(&self, f: &[AtomId], ordering: &AtomOrdering) -> Result<Vec<AtomId>> {
        let mut rest = f.to_vec();
        let mut reversed = Vec::with_capacity(f.len());
        while !rest.is_empty() {
            let (a, q) = self.md_split(&rest, ordering)?;
            reversed.push(a);
            rest = q;
        }
        reversed.reverse();
        Ok(reversed)
    }

    /// The word `a_k ⋯ a_1` with `a_1 = md(f)`, `a_2 = md(f / a_1)`, and so on.
    pub fn canonical_form(&self, f: &AtomWord, ordering: &AtomOrdering) -> Result<AtomWord> {
        let atoms = self.canonical_atoms(f.atoms(), ordering)?;
        Ok(AtomWord::from_parts(f.source(), f.target(), atoms))
    }

    /// Whether two words represent the same morphism.
    pub fn word_equal(&self, f: &AtomWord, g: &AtomWord) -> Result<bool> {
        if f.source() != g.source() || f.target() != g.target() {
            return Ok(false);
        }
        if self.length(f) != self.length(g) {
            return Ok(false);
        }
        let ordering = AtomOrdering::identity(self);
        Ok(self.canonical_atoms(f.atoms(), &ordering)? == self.canonical_atoms(g.atoms(), &ordering)?)
    }
}

fn burn(fuel: &Cell<u64>) -> Result<()> {
    let left = fuel.get();
    if left == 0 {
        return Err(Error::Inconsistent(
            "lcm computation did not terminate; the lcm table is probably incomplete".into(),
        ));
    }
    fuel.set(left - 1);
    Ok(())
}
