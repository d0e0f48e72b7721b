use std::borrow::Cow;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use rayon::prelude::*;

use super::cells::{enumerate_cells, Cell, CellSet};
use super::chain::Chain;
use crate::error::{Error, Result};
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure, ObjectId};

/// The differential `∂`, contracting homotopy `s` and reduction `r` of the
/// order complex, over a fixed structure and ordering.
///
/// `∂` is cached per cell unless memoization is turned off. `r` is only ever
/// needed on chains `α_{/A}[A]` with `[α, A]` a cell, where it equals
/// `α_{/A}[A] − ∂[α, A]`, so the `∂` cache serves both.
pub struct Resolution<'s> {
    structure: &'s GaussianStructure,
    ordering: AtomOrdering,
    cells: CellSet,
    boundaries: Vec<Vec<OnceLock<Chain>>>,
    canonical: DashMap<Vec<AtomId>, Vec<AtomId>>,
    memo: bool,
}

/// Priority of an elementary chain in the worklist of `s`: the length of
/// `f · lcm(A)`, then the rank of `A₁`. Any term produced while reducing
/// `f[A]` is strictly smaller.
type WorkKey = (u64, u32, usize, Vec<AtomId>);

impl<'s> Resolution<'s> {
    /// Enumerates cells up to `max_dim`. `∂` is available up to `max_dim`,
    /// `s` and `r` up to `max_dim - 1`.
    pub fn new(
        structure: &'s GaussianStructure,
        ordering: AtomOrdering,
        max_dim: usize,
        memo: bool,
    ) -> Result<Self> {
        let cells = enumerate_cells(structure, &ordering, max_dim)?;
        Ok(Self::from_cells(structure, ordering, cells, memo))
    }

    pub fn from_cells(
        structure: &'s GaussianStructure,
        ordering: AtomOrdering,
        cells: CellSet,
        memo: bool,
    ) -> Self {
        let boundaries = (0..=cells.max_dim())
            .map(|n| (0..cells.dim(n).len()).map(|_| OnceLock::new()).collect())
            .collect();
        Resolution {
            structure,
            ordering,
            cells,
            boundaries,
            canonical: DashMap::new(),
            memo,
        }
    }

    pub fn structure(&self) -> &'s GaussianStructure {
        self.structure
    }

    pub fn ordering(&self) -> &AtomOrdering {
        &self.ordering
    }

    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    pub fn into_cells(self) -> CellSet {
        self.cells
    }

    pub fn max_dim(&self) -> usize {
        self.cells.max_dim()
    }

    /// Canonical form of a raw composable atom sequence.
    pub fn canonical(&self, atoms: &[AtomId]) -> Result<Vec<AtomId>> {
        if atoms.len() <= 1 {
            return Ok(atoms.to_vec());
        }
        if let Some(hit) = self.canonical.get(atoms) {
            return Ok(hit.clone());
        }
        let form = self.structure.canonical_atoms(atoms, &self.ordering)?;
        if self.memo {
            self.canonical.insert(atoms.to_vec(), form.clone());
        }
        Ok(form)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n > self.max_dim() {
            return Err(Error::Precondition(format!(
                "dimension {n} exceeds the enumerated range 0..={}",
                self.max_dim()
            )));
        }
        Ok(())
    }

    /// `f[A]` with `f` brought to canonical form; checks composability.
    pub fn elementary(&self, n: usize, cell: usize, f: &AtomWord) -> Result<Chain> {
        self.check_dim(n)?;
        let c = self.cells.cell(n, cell);
        if f.target() != c.source() {
            return Err(Error::Precondition(
                "coefficient does not end at the source of the cell".into(),
            ));
        }
        Ok(Chain::elementary(cell, self.canonical(f.atoms())?))
    }

    /// `g · chain` for a raw word `g` ending where every term's coefficient starts.
    pub fn left_multiply(&self, g: &[AtomId], chain: &Chain) -> Result<Chain> {
        let mut out = Chain::new();
        for (cell, w, m) in chain.terms() {
            out.add_term(cell, self.canonical(&[g, w].concat())?, m);
        }
        Ok(out)
    }

    fn total(&self, f: &[AtomId], cell: &Cell) -> Vec<AtomId> {
        [f, cell.lcm.atoms()].concat()
    }

    fn key(&self, n: usize, cell: usize, f: &[AtomId]) -> WorkKey {
        let c = self.cells.cell(n, cell);
        let len = self.structure.length_of(f) + self.structure.length(&c.lcm);
        let rank = c.first().map_or(0, |a| self.ordering.rank(a) + 1);
        (len, rank, cell, f.to_vec())
    }

    /// `md(f · lcm(A))`, or `None` when `f · lcm(A)` is an identity.
    fn md_of_term(&self, n: usize, cell: usize, f: &[AtomId]) -> Result<Option<AtomId>> {
        let c = self.cells.cell(n, cell);
        let total = self.total(f, c);
        if total.is_empty() {
            return Ok(None);
        }
        Ok(self.canonical(&total)?.last().copied())
    }

    /// Whether `f[A]` is irreducible: `1_x[∅]_x`, or `A₁ = md(f · lcm(A))`.
    pub fn is_irreducible(&self, n: usize, cell: usize, f: &[AtomId]) -> Result<bool> {
        self.check_dim(n)?;
        let c = self.cells.cell(n, cell);
        if n == 0 {
            return Ok(f.is_empty());
        }
        Ok(self.md_of_term(n, cell, f)? == c.first())
    }

    /// `∂_n[A]` for an `n`-cell, `n >= 1`.
    pub fn boundary(&self, n: usize, cell: usize) -> Result<Cow<'_, Chain>> {
        self.check_dim(n)?;
        if n == 0 {
            return Err(Error::Precondition(
                "the boundary of a 0-cell is the augmentation".into(),
            ));
        }
        if !self.memo {
            return Ok(Cow::Owned(self.compute_boundary(n, cell)?));
        }
        let slot = &self.boundaries[n][cell];
        if let Some(hit) = slot.get() {
            return Ok(Cow::Borrowed(hit));
        }
        let value = self.compute_boundary(n, cell)?;
        let _ = slot.set(value);
        Ok(Cow::Borrowed(slot.get().expect("just set")))
    }

    /// `∂[α, A] = α_{/A}[A] − r(α_{/A}[A])`.
    fn compute_boundary(&self, n: usize, cell: usize) -> Result<Chain> {
        let c = self.cells.cell(n, cell);
        let tail = c.tail.expect("positive dimension");
        let head = Chain::elementary(tail, c.head.atoms().to_vec());
        let r = self.reduce_elementary(n - 1, tail, c.head.atoms())?;
        Ok(head.sub(&r))
    }

    /// Fills the `∂` cache dimension by dimension, in parallel over cells.
    pub fn compute_all(&self) -> Result<()> {
        for n in 1..=self.max_dim() {
            (0..self.cells.dim(n).len())
                .into_par_iter()
                .try_for_each(|i| self.boundary(n, i).map(|_| ()))?;
        }
        Ok(())
    }

    /// `r_n(f[A])`.
    pub fn reduce_elementary(&self, n: usize, cell: usize, f: &[AtomId]) -> Result<Chain> {
        self.check_dim(n)?;
        if n == 0 {
            if f.is_empty() {
                return Ok(Chain::elementary(cell, Vec::new()));
            }
            let source = self.structure.atom(f[0]).source;
            return Ok(Chain::elementary(self.cells.zero_cell(source), Vec::new()));
        }
        let d = self.boundary(n, cell)?;
        let moved = self.left_multiply(f, &d)?;
        self.contract(n - 1, &moved)
    }

    /// `r_n`, extended `ℤ`-linearly.
    pub fn reduce(&self, n: usize, chain: &Chain) -> Result<Chain> {
        let mut out = Chain::new();
        for (cell, f, m) in chain.terms() {
            out.add_scaled(&self.reduce_elementary(n, cell, f)?, m);
        }
        Ok(out)
    }

    /// `r_n(α_{/A}[A])` for the `(n+1)`-cell `[α, A]`.
    fn reduce_head(&self, n: usize, up: usize) -> Result<Chain> {
        let c = self.cells.cell(n + 1, up);
        let tail = c.tail.expect("positive dimension");
        if self.memo && n + 1 <= self.max_dim() {
            let d = self.boundary(n + 1, up)?;
            let mut r = d.negated();
            r.add_term(tail, c.head.atoms().to_vec(), 1);
            return Ok(r);
        }
        self.reduce_elementary(n, tail, c.head.atoms())
    }

    /// `s_n`, extended `ℤ`-linearly. Terms are processed from the largest
    /// down, so contributions to a term are collected before it is expanded.
    pub fn contract(&self, n: usize, chain: &Chain) -> Result<Chain> {
        if n + 1 > self.max_dim() {
            return Err(Error::Precondition(format!(
                "s_{n} needs cells of dimension {}; enumerated up to {}",
                n + 1,
                self.max_dim()
            )));
        }
        let mut pending: BTreeMap<WorkKey, i64> = BTreeMap::new();
        for (cell, f, m) in chain.terms() {
            *pending.entry(self.key(n, cell, f)).or_default() += m;
        }
        let mut out = Chain::new();
        while let Some((key, m)) = pending.pop_last() {
            if m == 0 {
                continue;
            }
            let (_, _, cell, f) = &key;
            let (cell, f) = (*cell, f.as_slice());
            if n == 0 && f.is_empty() {
                continue;
            }
            let Some(alpha) = self.md_of_term(n, cell, f)? else {
                continue;
            };
            let c = self.cells.cell(n, cell);
            if n > 0 && c.first() == Some(alpha) {
                continue;
            }
            let up = self.cells.extension(n, alpha, cell).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "[{}, A] is not a cell although {} = md(f lcm(A))",
                    self.structure.atom(alpha).name,
                    self.structure.atom(alpha).name
                ))
            })?;
            let head = &self.cells.cell(n + 1, up).head;
            let g = self
                .structure
                .quotient_by_atoms(f, head.atoms())?
                .ok_or_else(|| {
                    Error::Inconsistent("the head of a cell does not right-divide f".into())
                })?;
            let g = self.canonical(&g)?;
            out.add_term(up, g.clone(), m);
            let r = self.reduce_head(n, up)?;
            for (rc, w, k) in r.terms() {
                let coeff = self.canonical(&[g.as_slice(), w].concat())?;
                let next = self.key(n, rc, &coeff);
                if next >= key {
                    return Err(Error::Inconsistent(
                        "the reduction did not decrease; the lcm table is probably incomplete"
                            .into(),
                    ));
                }
                *pending.entry(next).or_default() += m * k;
            }
        }
        Ok(out)
    }

    /// `s_{-1}(1)` at an object: the 0-cell `[∅]_x`.
    pub fn contract_unit(&self, object: ObjectId) -> Chain {
        Chain::elementary(self.cells.zero_cell(object), Vec::new())
    }

    /// `∂_n`, extended `ℤ𝒞`-linearly: `∂(f[A]) = f · ∂[A]`.
    pub fn differentiate(&self, n: usize, chain: &Chain) -> Result<Chain> {
        let mut out = Chain::new();
        for (cell, f, m) in chain.terms() {
            let d = self.boundary(n, cell)?;
            out.add_scaled(&self.left_multiply(f, &d)?, m);
        }
        Ok(out)
    }

    /// The augmentation `ε(Σ m f[∅]) = Σ m`.
    pub fn augment(&self, chain: &Chain) -> i64 {
        chain.terms().map(|(_, _, m)| m).sum()
    }
}
