use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure, ObjectId};

/// An `n`-cell `[α₁, …, α_n]` with its cached left-lcm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Strictly increasing in the ordering; empty for the 0-cell `[∅]_x`.
    pub atoms: Vec<AtomId>,
    pub target: ObjectId,
    /// `lcm(α₁, …, α_n)` in canonical form, or the identity at `target`.
    pub lcm: AtomWord,
    /// `α₁/(α₂…α_n)`: the word `h` with `h · lcm(tail) = lcm`.
    pub head: AtomWord,
    /// Index of `[α₂, …, α_n]` one dimension down; `None` for 0-cells.
    pub tail: Option<usize>,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.atoms.len()
    }

    pub fn source(&self) -> ObjectId {
        self.lcm.source()
    }

    pub fn first(&self) -> Option<AtomId> {
        self.atoms.first().copied()
    }
}

/// Cells of every dimension up to some bound, with lookup tables.
#[derive(Clone, Debug, Default)]
pub struct CellSet {
    by_dim: Vec<Vec<Cell>>,
    /// `(α, index of A)` to the index of `[α, A]`, per dimension.
    extensions: Vec<HashMap<(AtomId, usize), usize>>,
    zero_cells: HashMap<ObjectId, usize>,
}

impl CellSet {
    pub fn max_dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    pub fn dim(&self, n: usize) -> &[Cell] {
        self.by_dim.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn cell(&self, n: usize, index: usize) -> &Cell {
        &self.by_dim[n][index]
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn zero_cell(&self, object: ObjectId) -> usize {
        self.zero_cells[&object]
    }

    /// Index of the `(n+1)`-cell `[α, A]` where `A` is the `n`-cell `tail`.
    pub fn extension(&self, n: usize, alpha: AtomId, tail: usize) -> Option<usize> {
        self.extensions.get(n + 1)?.get(&(alpha, tail)).copied()
    }

    /// Index of the cell with the given atoms at `target`.
    pub fn find(&self, target: ObjectId, atoms: &[AtomId]) -> Option<usize> {
        let mut idx = *self.zero_cells.get(&target)?;
        for (n, &a) in atoms.iter().rev().enumerate() {
            idx = self.extension(n, a, idx)?;
        }
        Some(idx)
    }
}

/// All cells of dimension at most `max_dim`, in a deterministic order: by
/// tail, then by the new first atom.
pub fn enumerate_cells(
    structure: &GaussianStructure,
    ordering: &AtomOrdering,
    max_dim: usize,
) -> Result<CellSet> {
    let zero: Vec<Cell> = structure
        .objects()
        .iter()
        .map(|o| Cell {
            atoms: Vec::new(),
            target: o.id,
            lcm: AtomWord::identity(o.id),
            head: AtomWord::identity(o.id),
            tail: None,
        })
        .collect();
    let mut set = CellSet {
        zero_cells: zero.iter().enumerate().map(|(i, c)| (c.target, i)).collect(),
        by_dim: vec![zero],
        extensions: vec![HashMap::new()],
    };
    for n in 1..=max_dim {
        let prev = &set.by_dim[n - 1];
        let grown: Vec<Vec<Cell>> = prev
            .par_iter()
            .enumerate()
            .map(|(i, tail)| extend_cell(structure, ordering, tail, i))
            .collect::<Result<_>>()?;
        let cells: Vec<Cell> = grown.into_iter().flatten().collect();
        let ext = cells
            .iter()
            .enumerate()
            .map(|(j, c)| ((c.atoms[0], c.tail.expect("positive dimension")), j))
            .collect();
        set.by_dim.push(cells);
        set.extensions.push(ext);
    }
    Ok(set)
}

fn extend_cell(
    s: &GaussianStructure,
    ordering: &AtomOrdering,
    tail: &Cell,
    tail_index: usize,
) -> Result<Vec<Cell>> {
    let mut out = Vec::new();
    for &alpha in ordering.at_target(tail.target) {
        if let Some(first) = tail.first() {
            if !ordering.less(alpha, first) {
                break;
            }
        }
        let Some((p, _)) = s.lcm_with_atom(&tail.lcm, alpha)? else {
            continue;
        };
        let lcm = p.concat_unchecked(&tail.lcm);
        let (md, _) = s.md_split(lcm.atoms(), ordering)?;
        if md != alpha {
            continue;
        }
        let mut atoms = Vec::with_capacity(tail.atoms.len() + 1);
        atoms.push(alpha);
        atoms.extend_from_slice(&tail.atoms);
        out.push(Cell {
            atoms,
            target: tail.target,
            lcm: s.canonical_form(&lcm, ordering)?,
            head: s.canonical_form(&p, ordering)?,
            tail: Some(tail_index),
        });
    }
    Ok(out)
}
