//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use dlcomplex::{AtomId, AtomOrdering, GaussianStructure, LcmStatus};
use rand::Rng;

/// The defining relations `c_a · a = c_b · b` as raw atom sequences.
pub fn relations(s: &GaussianStructure) -> Vec<(Vec<AtomId>, Vec<AtomId>)> {
    s.lcm_entries()
        .filter_map(|e| match &e.status {
            LcmStatus::Exists {
                complement_a,
                complement_b,
            } => {
                let mut l = complement_a.atoms().to_vec();
                l.push(e.a);
                let mut r = complement_b.atoms().to_vec();
                r.push(e.b);
                Some((l, r))
            }
            LcmStatus::NoCommonMultiple => None,
        })
        .collect()
}

/// Every word reachable from `w` by replacing one side of a relation by the
/// other. Finite when relations preserve the number of atoms.
pub fn class_of(rels: &[(Vec<AtomId>, Vec<AtomId>)], w: &[AtomId]) -> BTreeSet<Vec<AtomId>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(u) = queue.pop_front() {
        for (l, r) in rels {
            for (from, to) in [(l, r), (r, l)] {
                if from.len() > u.len() {
                    continue;
                }
                for i in 0..=u.len() - from.len() {
                    if &u[i..i + from.len()] == from.as_slice() {
                        let mut v = u[..i].to_vec();
                        v.extend_from_slice(to);
                        v.extend_from_slice(&u[i + from.len()..]);
                        if seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    seen
}

/// Atoms `a` with `w = g · a` for some `g`: last letters over the class.
pub fn right_divisors(rels: &[(Vec<AtomId>, Vec<AtomId>)], w: &[AtomId]) -> BTreeSet<AtomId> {
    class_of(rels, w).iter().filter_map(|v| v.last().copied()).collect()
}

pub fn oracle_md(rels: &[(Vec<AtomId>, Vec<AtomId>)], w: &[AtomId], ord: &AtomOrdering) -> AtomId {
    right_divisors(rels, w)
        .into_iter()
        .min_by_key(|&a| ord.rank(a))
        .expect("nonempty word")
}

/// A random composable word with `len` atoms, or shorter if it gets stuck.
pub fn random_word<R: Rng>(s: &GaussianStructure, len: usize, rng: &mut R) -> Vec<AtomId> {
    let mut w: Vec<AtomId> = Vec::new();
    for _ in 0..len {
        let candidates: Vec<AtomId> = match w.last() {
            None => s.atoms().iter().map(|a| a.id).collect(),
            Some(&prev) => s
                .atoms()
                .iter()
                .filter(|a| a.source == s.atom(prev).target)
                .map(|a| a.id)
                .collect(),
        };
        if candidates.is_empty() {
            break;
        }
        w.push(candidates[rng.gen_range(0..candidates.len())]);
    }
    w
}

/// A random composable word ending at `target`.
pub fn random_word_to<R: Rng>(
    s: &GaussianStructure,
    target: dlcomplex::ObjectId,
    len: usize,
    rng: &mut R,
) -> Vec<AtomId> {
    let mut w: Vec<AtomId> = Vec::new();
    let mut at = target;
    for _ in 0..len {
        let candidates: Vec<AtomId> = s.atoms().iter().filter(|a| a.target == at).map(|a| a.id).collect();
        if candidates.is_empty() {
            break;
        }
        let a = candidates[rng.gen_range(0..candidates.len())];
        w.push(a);
        at = s.atom(a).source;
    }
    w.reverse();
    w
}

/// Integer coefficients of `Φ_n` from the primitive `n`-th roots of unity.
pub fn numeric_cyclotomic(n: u64) -> Vec<i64> {
    let mut coeffs: Vec<(f64, f64)> = vec![(1.0, 0.0)];
    for k in 1..=n {
        if gcd(k, n) != 1 {
            continue;
        }
        let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let (zr, zi) = (angle.cos(), angle.sin());
        // multiply by (t - z)
        let mut next = vec![(0.0, 0.0); coeffs.len() + 1];
        for (i, &(cr, ci)) in coeffs.iter().enumerate() {
            next[i + 1].0 += cr;
            next[i + 1].1 += ci;
            next[i].0 -= cr * zr - ci * zi;
            next[i].1 -= cr * zi + ci * zr;
        }
        coeffs = next;
    }
    coeffs.iter().map(|&(r, _)| r.round() as i64).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A data file from `$DLCOMPLEX_DATA_DIR` or `tests/data`, if present.
pub fn data_file(name: &str) -> Option<std::path::PathBuf> {
    let dirs = [
        std::env::var_os("DLCOMPLEX_DATA_DIR").map(std::path::PathBuf::from),
        Some(std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")),
    ];
    dirs.into_iter()
        .flatten()
        .map(|d| d.join(name))
        .find(|p| p.is_file())
}
