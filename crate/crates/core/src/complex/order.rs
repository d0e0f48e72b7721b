//! The well-founded order `⊏` on elementary chains.

use std::collections::HashMap;

use super::resolution::Resolution;
use crate::error::Result;
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure};

/// Whether `v = u · h` for some `h`, i.e. `u` left-divides `v`.
///
/// Only right-division is available from the lcm table, so this peels atoms
/// off the right of `v` until the length of `u` is reached. Intermediate
/// quotients are memoized by canonical form.
pub fn left_divides(s: &GaussianStructure, u: &AtomWord, v: &AtomWord) -> Result<bool> {
    if u.source() != v.source() {
        return Ok(false);
    }
    let target_len = s.length(u);
    let ordering = AtomOrdering::identity(s);
    let u_form = s.canonical_atoms(u.atoms(), &ordering)?;
    let mut seen: HashMap<Vec<AtomId>, bool> = HashMap::new();
    search(s, &ordering, &u_form, target_len, v.atoms().to_vec(), &mut seen)
}

fn search(
    s: &GaussianStructure,
    ordering: &AtomOrdering,
    u_form: &[AtomId],
    target_len: u64,
    v: Vec<AtomId>,
    seen: &mut HashMap<Vec<AtomId>, bool>,
) -> Result<bool> {
    let len = s.length_of(&v);
    if len < target_len {
        return Ok(false);
    }
    let form = s.canonical_atoms(&v, ordering)?;
    if len == target_len {
        return Ok(form == u_form);
    }
    if let Some(&hit) = seen.get(&form) {
        return Ok(hit);
    }
    let target = s.atom(*v.last().expect("longer than u")).target;
    let mut found = false;
    for &a in ordering.at_target(target) {
        if let Some(q) = s.quotient_atoms(&v, a)? {
            if search(s, ordering, u_form, target_len, q, seen)? {
                found = true;
                break;
            }
        }
    }
    seen.insert(form, found);
    Ok(found)
}

/// `f[A] ⊏ g[B]` for elementary `n`-chains given by cell index and coefficient.
///
/// Holds when `f·lcm(A)` is a proper left-divisor of `g·lcm(B)`, or when the
/// two are equal, `n > 0` and `A₁ < B₁`.
pub fn chain_precedes(
    res: &Resolution<'_>,
    n: usize,
    lhs: (usize, &[AtomId]),
    rhs: (usize, &[AtomId]),
) -> Result<bool> {
    let s = res.structure();
    let (a, b) = (res.cells().cell(n, lhs.0), res.cells().cell(n, rhs.0));
    let word = |f: &[AtomId], lcm: &AtomWord| -> AtomWord {
        let atoms = [f, lcm.atoms()].concat();
        let source = f.first().map_or(lcm.source(), |&x| s.atom(x).source);
        crate::structure::AtomWord::from_parts(source, lcm.target(), atoms)
    };
    let (u, v) = (word(lhs.1, &a.lcm), word(rhs.1, &b.lcm));
    if u.source() != v.source() {
        return Ok(false);
    }
    if s.length(&u) < s.length(&v) {
        return left_divides(s, &u, &v);
    }
    if n > 0 && s.length(&u) == s.length(&v) && s.word_equal(&u, &v)? {
        let ord = res.ordering();
        return Ok(ord.less(a.atoms[0], b.atoms[0]));
    }
    Ok(false)
}
