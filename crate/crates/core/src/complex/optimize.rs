//! Bounds on the number of 2-cells and the greedy choice of an atom ordering.
//!
//! A 2-cell `[α, β]` has `α = md(α ∨ β)`, so the 2-cells with lcm `ℓ` are the
//! pairs `(min 𝒜_ℓ, β)` with `min 𝒜_ℓ ∨ β = ℓ`. Ordering the atoms amounts to
//! choosing, for each `ℓ`, which atom of `𝒜_ℓ` comes first.

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;

use crate::error::Result;
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure, ObjectId};

/// One element `ℓ ∈ L_x`: a left-lcm of two distinct atoms with target `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmClass {
    pub target: ObjectId,
    /// Canonical for the ascending-id ordering.
    pub lcm: AtomWord,
    /// `𝒜_ℓ`: atoms right-dividing `ℓ`, ascending ids.
    pub divisors: Vec<AtomId>,
    /// `n(a, ℓ)` for each `a` in `divisors`, same order.
    pub counts: Vec<u64>,
}

impl LcmClass {
    pub fn count(&self, a: AtomId) -> Option<u64> {
        let i = self.divisors.iter().position(|&b| b == a)?;
        Some(self.counts[i])
    }

    pub fn min_count(&self) -> u64 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    pub fn max_count(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// `L_x` for every object `x`, classes ordered by target then lcm word.
pub fn lcm_classes(s: &GaussianStructure) -> Result<Vec<LcmClass>> {
    let ordering = AtomOrdering::identity(s);
    let mut out = Vec::new();
    for x in 0..s.num_objects() {
        let x = ObjectId(x as u32);
        let atoms = s.atoms_with_target(x);
        let mut pair_lcm = Vec::new();
        for (i, &a) in atoms.iter().enumerate() {
            for &b in &atoms[i + 1..] {
                if let Some(l) = s.left_lcm(&[a, b])? {
                    pair_lcm.push((a, b, l.lcm));
                }
            }
        }
        // left_lcm already returns canonical words, so equality is sequence equality.
        let lcms: BTreeSet<AtomWord> = pair_lcm.iter().map(|(_, _, l)| l.clone()).collect();
        for lcm in lcms {
            let mut divisors = Vec::new();
            for &a in atoms {
                if s.right_divides(a, &lcm)? {
                    divisors.push(a);
                }
            }
            let counts = divisors
                .iter()
                .map(|&a| {
                    pair_lcm
                        .iter()
                        .filter(|(p, q, l)| (*p == a || *q == a) && *l == lcm)
                        .count() as u64
                })
                .collect();
            debug_assert_eq!(s.canonical_form(&lcm, &ordering).ok().as_ref(), Some(&lcm));
            out.push(LcmClass {
                target: x,
                lcm,
                divisors,
                counts,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCellBounds {
    /// `(x, lower, upper)` for each object with at least one lcm.
    pub per_object: Vec<(ObjectId, u64, u64)>,
    pub lower: u64,
    pub upper: u64,
}

pub fn bounds_from_classes(s: &GaussianStructure, classes: &[LcmClass]) -> TwoCellBounds {
    let mut per_object = Vec::new();
    for x in 0..s.num_objects() {
        let x = ObjectId(x as u32);
        let mine: Vec<&LcmClass> = classes.iter().filter(|c| c.target == x).collect();
        if mine.is_empty() {
            continue;
        }
        let lo = mine.iter().map(|c| c.min_count()).sum();
        let hi = mine.iter().map(|c| c.max_count()).sum();
        per_object.push((x, lo, hi));
    }
    TwoCellBounds {
        lower: per_object.iter().map(|p| p.1).sum(),
        upper: per_object.iter().map(|p| p.2).sum(),
        per_object,
    }
}

/// Lower and upper bounds on the number of 2-cells over all orderings.
pub fn two_cell_bounds(s: &GaussianStructure) -> Result<TwoCellBounds> {
    Ok(bounds_from_classes(s, &lcm_classes(s)?))
}

/// The condition "`witness` is the least atom of `𝒜_ℓ`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub witness: AtomId,
    /// Index into the class list it was built from.
    pub class: usize,
    pub lcm: AtomWord,
    /// `(witness, b)` for every `b ∈ 𝒜_ℓ`.
    pub relation_pairs: Vec<(AtomId, AtomId)>,
    /// `n(witness, ℓ) − min_b n(b, ℓ)`; zero for an optimal condition.
    pub excess: u64,
}

impl Condition {
    pub fn is_optimal(&self) -> bool {
        self.excess == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizedOrdering {
    pub ordering: AtomOrdering,
    pub chosen: Vec<Condition>,
    pub bounds: TwoCellBounds,
}

/// Whether the union of the pairs has no cycle (self-pairs ignored).
fn acyclic(nodes: &[AtomId], n_atoms: usize, pairs: &[(AtomId, AtomId)]) -> bool {
    topological(n_atoms, pairs, nodes).is_some()
}

/// Kahn's algorithm on `nodes`, smallest id first.
fn topological(n_atoms: usize, pairs: &[(AtomId, AtomId)], nodes: &[AtomId]) -> Option<Vec<AtomId>> {
    let mut present = vec![false; n_atoms];
    for a in nodes {
        present[a.index()] = true;
    }
    let mut out_edges = vec![Vec::new(); n_atoms];
    let mut indegree = vec![0usize; n_atoms];
    let edges: BTreeSet<(AtomId, AtomId)> = pairs
        .iter()
        .copied()
        .filter(|(a, b)| a != b && present[a.index()] && present[b.index()])
        .collect();
    for (a, b) in edges {
        out_edges[a.index()].push(b);
        indegree[b.index()] += 1;
    }
    let mut ready: BinaryHeap<Reverse<AtomId>> = nodes
        .iter()
        .copied()
        .filter(|a| indegree[a.index()] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(nodes.len());
    while let Some(Reverse(a)) = ready.pop() {
        order.push(a);
        for &b in &out_edges[a.index()] {
            indegree[b.index()] -= 1;
            if indegree[b.index()] == 0 {
                ready.push(Reverse(b));
            }
        }
    }
    (order.len() == nodes.len()).then_some(order)
}

/// Greedy maximal family of compatible conditions, refined to a total order.
///
/// At each step the compatible condition with the least excess is added;
/// ties go to the smallest `(lcm word, witness id)`. The induced partial order
/// on each `𝒜(−, x)` is completed by a topological sort taking the smallest
/// available atom id first.
pub fn optimize_ordering_detailed(s: &GaussianStructure) -> Result<OptimizedOrdering> {
    let classes = lcm_classes(s)?;
    let bounds = bounds_from_classes(s, &classes);
    let n_atoms = s.num_atoms();
    let mut sequence = Vec::with_capacity(n_atoms);
    let mut chosen_all = Vec::new();
    for x in 0..s.num_objects() {
        let x = ObjectId(x as u32);
        let mut candidates: Vec<Condition> = Vec::new();
        for (ci, class) in classes.iter().enumerate().filter(|(_, c)| c.target == x) {
            let min = class.min_count();
            for (&a, &count) in class.divisors.iter().zip(&class.counts) {
                candidates.push(Condition {
                    witness: a,
                    class: ci,
                    lcm: class.lcm.clone(),
                    relation_pairs: class.divisors.iter().map(|&b| (a, b)).collect(),
                    excess: count - min,
                });
            }
        }
        candidates.sort_by(|p, q| {
            (p.excess, p.lcm.atoms(), p.witness).cmp(&(q.excess, q.lcm.atoms(), q.witness))
        });
        let mut pairs: Vec<(AtomId, AtomId)> = Vec::new();
        let mut used = vec![false; candidates.len()];
        loop {
            let mut pick = None;
            for (i, c) in candidates.iter().enumerate() {
                if used[i] {
                    continue;
                }
                let mut trial = pairs.clone();
                trial.extend_from_slice(&c.relation_pairs);
                if acyclic(s.atoms_with_target(x), n_atoms, &trial) {
                    pick = Some(i);
                    break;
                }
            }
            let Some(i) = pick else { break };
            used[i] = true;
            pairs.extend_from_slice(&candidates[i].relation_pairs);
            chosen_all.push(candidates[i].clone());
        }
        let order = topological(n_atoms, &pairs, s.atoms_with_target(x))
            .expect("the chosen conditions are compatible");
        sequence.extend(order);
    }
    let ordering = AtomOrdering::from_sequence(s, &sequence)?;
    Ok(OptimizedOrdering {
        ordering,
        chosen: chosen_all,
        bounds,
    })
}

pub fn optimize_ordering(s: &GaussianStructure) -> Result<AtomOrdering> {
    Ok(optimize_ordering_detailed(s)?.ordering)
}
