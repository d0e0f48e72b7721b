use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{AtomId, GaussianStructure, ObjectId};

/// A total order on the atoms of a structure. Only its restriction to each
/// set of atoms sharing a target matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomOrdering {
    rank: Vec<u32>,
    by_target: Vec<Vec<AtomId>>,
}

impl AtomOrdering {
    /// Orders atoms as listed, smallest first. `sequence` must be a permutation of the atoms.
    pub fn from_sequence(structure: &GaussianStructure, sequence: &[AtomId]) -> Result<Self> {
        let n = structure.num_atoms();
        if sequence.len() != n {
            return Err(Error::Precondition(format!(
                "ordering lists {} atoms, structure has {n}",
                sequence.len()
            )));
        }
        let mut rank = vec![u32::MAX; n];
        for (i, &a) in sequence.iter().enumerate() {
            if a.index() >= n || rank[a.index()] != u32::MAX {
                return Err(Error::Precondition(
                    "ordering must list every atom exactly once".into(),
                ));
            }
            rank[a.index()] = i as u32;
        }
        let by_target = (0..structure.num_objects())
            .map(|x| {
                let mut atoms = structure.atoms_with_target(ObjectId(x as u32)).to_vec();
                atoms.sort_by_key(|a| rank[a.index()]);
                atoms
            })
            .collect();
        Ok(AtomOrdering { rank, by_target })
    }

    /// Ascending atom ids.
    pub fn identity(structure: &GaussianStructure) -> Self {
        let seq: Vec<AtomId> = structure.atoms().iter().map(|a| a.id).collect();
        Self::from_sequence(structure, &seq).expect("identity ordering is a permutation")
    }

    /// The order given by the structure's `ORDER` line, if any.
    pub fn declared(structure: &GaussianStructure) -> Option<Self> {
        structure
            .declared_order()
            .map(|seq| Self::from_sequence(structure, seq).expect("validated by the builder"))
    }

    #[inline]
    pub fn rank(&self, a: AtomId) -> u32 {
        self.rank[a.index()]
    }

    pub fn less(&self, a: AtomId, b: AtomId) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// Atoms with the given target, smallest first.
    #[inline]
    pub fn at_target(&self, target: ObjectId) -> &[AtomId] {
        &self.by_target[target.index()]
    }

    /// All atoms, smallest first.
    pub fn sequence(&self) -> Vec<AtomId> {
        let mut seq: Vec<AtomId> = (0..self.rank.len() as u32).map(AtomId).collect();
        seq.sort_by_key(|a| self.rank(*a));
        seq
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn display<'a>(&'a self, structure: &'a GaussianStructure) -> impl fmt::Display + 'a {
        OrderingDisplay {
            ordering: self,
            structure,
        }
    }
}

struct OrderingDisplay<'a> {
    ordering: &'a AtomOrdering,
    structure: &'a GaussianStructure,
}

impl fmt::Display for OrderingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .ordering
            .sequence()
            .into_iter()
            .map(|a| self.structure.atom(a).name.as_str())
            .collect();
        write!(f, "{}", names.join(" < "))
    }
}
