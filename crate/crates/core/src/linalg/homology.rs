use rayon::prelude::*;

use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::ring::EuclideanRing;
use super::snf::smith_normal_form;

/// `R^free_rank ⊕ ⨁ R/(d)` with `d` running over `torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<E> {
    pub free_rank: usize,
    /// Non-unit invariant factors, normalized, each dividing the next.
    pub torsion: Vec<E>,
}

impl<E> HomologyGroup<E> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Homology of `C_0 ← C_1 ← … ← C_N`, where `boundaries[n]` is the matrix of
/// `∂_n : C_n → C_{n-1}` (rows indexed by `(n-1)`-cells, columns by `n`-cells)
/// for `n ≥ 1`; `boundaries[0]` is ignored. `counts[n]` is the rank of `C_n`.
///
/// Returns `H_0 … H_{N-1}`; `H_N` would need `∂_{N+1}`.
pub fn homology<R: EuclideanRing>(
    ring: &R,
    counts: &[usize],
    boundaries: &[Matrix<R::Elem>],
) -> Result<Vec<HomologyGroup<R::Elem>>> {
    if boundaries.len() != counts.len() {
        return Err(Error::Shape("one boundary matrix per dimension expected".into()));
    }
    for n in 1..counts.len() {
        let m = &boundaries[n];
        if m.rows() != counts[n - 1] || m.cols() != counts[n] {
            return Err(Error::Shape(format!(
                "boundary in degree {n} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                counts[n - 1],
                counts[n]
            )));
        }
    }
    let forms: Vec<_> = boundaries[1..]
        .par_iter()
        .map(|m| smith_normal_form(ring, m, false))
        .collect();
    let mut ranks = vec![0usize; counts.len() + 1];
    let mut factors: Vec<Vec<R::Elem>> = vec![Vec::new(); counts.len() + 1];
    for (k, snf) in forms.into_iter().enumerate() {
        ranks[k + 1] = snf.rank();
        factors[k + 1] = snf
            .diagonal
            .into_iter()
            .filter(|d| !ring.is_unit(d))
            .collect();
    }
    let top = counts.len().saturating_sub(1);
    Ok((0..top)
        .map(|n| HomologyGroup {
            free_rank: counts[n] - ranks[n] - ranks[n + 1],
            torsion: std::mem::take(&mut factors[n + 1]),
        })
        .collect())
}

/// `H_n` alone, from `∂_n` (or `None` when `n = 0`) and `∂_{n+1}`.
pub fn homology_at<R: EuclideanRing>(
    ring: &R,
    rank_cn: usize,
    incoming: Option<&Matrix<R::Elem>>,
    outgoing: &Matrix<R::Elem>,
) -> Result<HomologyGroup<R::Elem>> {
    if outgoing.rows() != rank_cn || incoming.is_some_and(|m| m.cols() != rank_cn) {
        return Err(Error::Shape("boundary matrices do not match the chain rank".into()));
    }
    let r_in = incoming.map_or(0, |m| smith_normal_form(ring, m, false).rank());
    let snf = smith_normal_form(ring, outgoing, false);
    Ok(HomologyGroup {
        free_rank: rank_cn - r_in - snf.rank(),
        torsion: snf
            .diagonal
            .into_iter()
            .filter(|d| !ring.is_unit(d))
            .collect(),
    })
}

/// Text such as `Z^2 + Z/2 + Z/6`, or `0`.
pub fn format_group<R: EuclideanRing>(ring: &R, base: &str, g: &HomologyGroup<R::Elem>) -> String {
    let mut parts = Vec::new();
    match g.free_rank {
        0 => {}
        1 => parts.push(base.to_string()),
        k => parts.push(format!("{base}^{k}")),
    }
    for d in &g.torsion {
        let text = ring.format(d);
        if text.contains(' ') {
            parts.push(format!("{base}/({text})"));
        } else {
            parts.push(format!("{base}/{text}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
