//! Dual braid monoid of type `A_n`: atoms are the transpositions of `S_{n+1}`
//! and simples are the elements below the Coxeter element `(1 2 … n+1)` for
//! reflection length. All tables are computed by brute force over the group.

use crate::error::{Error, Result};
use crate::structure::{AtomId, GaussianStructure, StructureBuilder};

/// Largest supported rank.
pub const MAX_DUAL_RANK: usize = 4;

type Perm = Vec<u8>;

/// `(p * q)(i) = p(q(i))`; a word `r_1 r_2 ⋯ r_k` maps to `r_1 * r_2 * ⋯ * r_k`.
fn compose(p: &[u8], q: &[u8]) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn inverse(p: &[u8]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

/// Reflection length in the symmetric group: points minus cycles.
fn reflection_length(p: &[u8]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
        }
    }
    p.len() - cycles
}

fn all_permutations(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

struct DualData {
    transpositions: Vec<Perm>,
    simples: Vec<Perm>,
}

impl DualData {
    fn new(points: usize) -> Self {
        let coxeter: Perm = (0..points).map(|i| ((i + 1) % points) as u8).collect();
        let lc = reflection_length(&coxeter);
        let mut transpositions = Vec::new();
        for i in 0..points {
            for j in i + 1..points {
                let mut t: Perm = (0..points as u8).collect();
                t.swap(i, j);
                transpositions.push(t);
            }
        }
        let simples = all_permutations(points)
            .into_iter()
            .filter(|u| {
                reflection_length(u) + reflection_length(&compose(&inverse(u), &coxeter)) == lc
            })
            .collect();
        DualData {
            transpositions,
            simples,
        }
    }

    /// Whether `a` right-divides the simple `u` inside the interval.
    fn right_divides(&self, a: &[u8], u: &[u8]) -> bool {
        reflection_length(&compose(u, &inverse(a))) + 1 == reflection_length(u)
    }

    /// A word of transposition indices for a simple element, least index last.
    fn word(&self, u: &[u8]) -> Vec<usize> {
        let mut rest = u.to_vec();
        let mut reversed = Vec::new();
        while reflection_length(&rest) > 0 {
            let (i, t) = self
                .transpositions
                .iter()
                .enumerate()
                .find(|(_, t)| self.right_divides(t, &rest))
                .expect("a nontrivial simple has a reflection right-divisor");
            reversed.push(i);
            rest = compose(&rest, &inverse(t));
        }
        reversed.reverse();
        reversed
    }
}

/// The dual braid monoid of type `A_n` for `1 <= n <= 4`.
pub fn dual_type_a_structure(n: usize) -> Result<GaussianStructure> {
    if n == 0 || n > MAX_DUAL_RANK {
        return Err(Error::Config(format!(
            "dual type A generator supports ranks 1..={MAX_DUAL_RANK}, got {n}"
        )));
    }
    let points = n + 1;
    let data = DualData::new(points);
    let mut b = StructureBuilder::new();
    let x = b.add_object("*")?;
    let mut ids = Vec::new();
    for i in 0..points {
        for j in i + 1..points {
            ids.push(b.add_atom(&format!("t{}{}", i + 1, j + 1), x, x, 1)?);
        }
    }
    let mut by_len: Vec<&Perm> = data.simples.iter().collect();
    by_len.sort_by_key(|u| reflection_length(u));
    let to_atoms = |w: Vec<usize>| -> Vec<AtomId> { w.into_iter().map(|i| ids[i]).collect() };
    for (i, a) in data.transpositions.iter().enumerate() {
        for (j, c) in data.transpositions.iter().enumerate().skip(i + 1) {
            // The interval is a lattice, so the shortest common multiple is the lcm.
            let lcm = by_len
                .iter()
                .find(|u| data.right_divides(a, u) && data.right_divides(c, u))
                .expect("the Coxeter element is a common multiple");
            let comp_a = data.word(&compose(lcm, &inverse(a)));
            let comp_c = data.word(&compose(lcm, &inverse(c)));
            b.set_lcm(ids[i], ids[j], &to_atoms(comp_a), &to_atoms(comp_c))?;
        }
    }
    b.build()
}
