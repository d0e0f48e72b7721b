use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::laurent::LaurentPoly;
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Poly, PolyRing, PrimeField};
use crate::structure::{AtomId, AtomWord, GaussianStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    /// Every atom acts by 1.
    Trivial,
    /// An atom of length `k` acts by `(−1)^k`.
    Sign,
    /// An atom of length `k` acts by `t^k`.
    Laurent,
}

impl FromStr for CoefficientKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "trivial" => Ok(CoefficientKind::Trivial),
            "sign" => Ok(CoefficientKind::Sign),
            "laurent" => Ok(CoefficientKind::Laurent),
            other => Err(Error::Config(format!("unknown coefficient system `{other}`"))),
        }
    }
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientKind::Trivial => "trivial",
            CoefficientKind::Sign => "sign",
            CoefficientKind::Laurent => "laurent",
        })
    }
}

/// The ring of scalars: `ℤ`, `ℚ` or `𝔽_p`; Laurent systems use `k[t, t⁻¹]`
/// over it and need a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    Rationals,
    Prime(u64),
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => f.write_str("Z"),
            BaseRing::Rationals => f.write_str("Q"),
            BaseRing::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientSystem {
    pub kind: CoefficientKind,
    pub base: BaseRing,
}

impl CoefficientSystem {
    pub fn new(kind: CoefficientKind, base: BaseRing) -> Result<Self> {
        if let BaseRing::Prime(p) = base {
            PrimeField::new(p)?;
        }
        if kind == CoefficientKind::Laurent && base == BaseRing::Integers {
            return Err(Error::Config(
                "Laurent coefficients need a field (Q or F_p)".into(),
            ));
        }
        Ok(CoefficientSystem { kind, base })
    }

    pub fn trivial() -> Self {
        CoefficientSystem {
            kind: CoefficientKind::Trivial,
            base: BaseRing::Integers,
        }
    }

    pub fn sign() -> Self {
        CoefficientSystem {
            kind: CoefficientKind::Sign,
            base: BaseRing::Integers,
        }
    }

    pub fn laurent_rational() -> Self {
        CoefficientSystem {
            kind: CoefficientKind::Laurent,
            base: BaseRing::Rationals,
        }
    }

    pub fn laurent_prime(p: u64) -> Result<Self> {
        Self::new(CoefficientKind::Laurent, BaseRing::Prime(p))
    }
}

impl fmt::Display for CoefficientSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.kind, self.base)
    }
}

/// `sign · t^exponent`; every scalar of a rank-one system has this shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub sign: i64,
    pub exponent: i64,
}

impl Scalar {
    pub const ONE: Scalar = Scalar { sign: 1, exponent: 0 };

    pub fn mul(self, other: Scalar) -> Scalar {
        Scalar {
            sign: self.sign * other.sign,
            exponent: self.exponent + other.exponent,
        }
    }
}

/// `ℓ(u_source) + ℓ(f) − ℓ(u_target)` for a raw atom sequence, or `ℓ(f)`
/// on a single object.
fn exponent_of(s: &GaussianStructure, atoms: &[AtomId]) -> Result<i64> {
    let (Some(&first), Some(&last)) = (atoms.first(), atoms.last()) else {
        return Ok(0);
    };
    let len = s.length_of(atoms) as i64;
    if s.num_objects() == 1 {
        return Ok(len);
    }
    let lengths = s.path_lengths().ok_or_else(|| {
        Error::Config("this structure has several objects but no path lengths".into())
    })?;
    let (src, tgt) = (s.atom(first).source, s.atom(last).target);
    Ok(lengths[src.index()] + len - lengths[tgt.index()])
}

fn needs_transport(s: &GaussianStructure, system: CoefficientSystem) -> Result<()> {
    if system.kind != CoefficientKind::Trivial && s.num_objects() > 1 && s.path_lengths().is_none() {
        return Err(Error::Config(
            "sign and Laurent coefficients on several objects need path lengths".into(),
        ));
    }
    Ok(())
}

fn scalar_of_atoms(s: &GaussianStructure, atoms: &[AtomId], system: CoefficientSystem) -> Result<Scalar> {
    match system.kind {
        CoefficientKind::Trivial => Ok(Scalar::ONE),
        CoefficientKind::Sign => {
            let e = exponent_of(s, atoms)?;
            Ok(Scalar {
                sign: if e.rem_euclid(2) == 0 { 1 } else { -1 },
                exponent: 0,
            })
        }
        CoefficientKind::Laurent => Ok(Scalar {
            sign: 1,
            exponent: exponent_of(s, atoms)?,
        }),
    }
}

/// The scalar by which `word` acts.
pub fn scalar_of(s: &GaussianStructure, word: &AtomWord, system: CoefficientSystem) -> Result<Scalar> {
    needs_transport(s, system)?;
    scalar_of_atoms(s, word.atoms(), system)
}

/// A specialized differential with entries `Σ m t^e`, stored as exponent →
/// integer multiplicity. Trivial and sign systems only produce `e = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    /// Column-major: `columns[j]` maps a row to its entry.
    columns: Vec<BTreeMap<usize, BTreeMap<i64, i64>>>,
}

impl ScalarMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)` as exponent → multiplicity; empty when zero.
    pub fn entry(&self, i: usize, j: usize) -> BTreeMap<i64, i64> {
        self.columns[j].get(&i).cloned().unwrap_or_default()
    }

    /// Nonzero entries of column `j`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &BTreeMap<i64, i64>)> {
        self.columns[j].iter().map(|(&i, e)| (i, e))
    }

    pub fn to_integers(&self) -> Matrix<BigInt> {
        let mut m = Matrix::filled(self.rows, self.cols, BigInt::from(0));
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, e) in col {
                m[(i, j)] = BigInt::from(e.values().sum::<i64>());
            }
        }
        m
    }

    /// Evaluation at `t = 1` into a field.
    pub fn to_field<F: Field>(&self, field: &F) -> Matrix<F::Elem> {
        let mut m = Matrix::filled(self.rows, self.cols, field.zero());
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, e) in col {
                m[(i, j)] = field.from_i64(e.values().sum::<i64>());
            }
        }
        m
    }

    pub fn to_laurent<F: Field>(&self, field: &F) -> Matrix<LaurentPoly<F::Elem>> {
        let mut m = Matrix::filled(self.rows, self.cols, LaurentPoly::zero());
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, e) in col {
                let mut p = LaurentPoly::zero();
                for (&k, &c) in e {
                    p.add_term(field, k, field.from_i64(c));
                }
                m[(i, j)] = p;
            }
        }
        m
    }
}

/// Entrywise application of `scalar_of` to `∂_n` for `n = 1 ..= max_dim`.
/// Index `0` holds the empty `0 × |C_0|` matrix.
pub fn specialize(
    s: &GaussianStructure,
    complex: &CellComplex,
    system: CoefficientSystem,
) -> Result<Vec<ScalarMatrix>> {
    needs_transport(s, system)?;
    let counts = complex.counts();
    let mut out = vec![ScalarMatrix {
        rows: 0,
        cols: counts[0],
        columns: vec![BTreeMap::new(); counts[0]],
    }];
    for n in 1..=complex.max_dim() {
        let columns = complex.differentials[n]
            .par_iter()
            .map(|chain| {
                let mut col: BTreeMap<usize, BTreeMap<i64, i64>> = BTreeMap::new();
                for (row, f, m) in chain.terms() {
                    let sc = scalar_of_atoms(s, f, system)?;
                    let entry = col.entry(row).or_default();
                    let v = entry.entry(sc.exponent).or_default();
                    *v += sc.sign * m;
                    if *v == 0 {
                        entry.remove(&sc.exponent);
                    }
                }
                col.retain(|_, e| !e.is_empty());
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(ScalarMatrix {
            rows: counts[n - 1],
            cols: counts[n],
            columns,
        });
    }
    Ok(out)
}

/// How negative exponents are removed before working in `k[t]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Clearing {
    /// Each column times `t^N`, `N` its own most negative exponent.
    #[default]
    PerColumn,
    /// The whole matrix times one power of `t`.
    Global,
}

/// A Laurent matrix made polynomial by multiplying columns by powers of `t`.
pub fn clear_denominators<F: Field>(
    ring: &PolyRing<F>,
    m: &Matrix<LaurentPoly<F::Elem>>,
    mode: Clearing,
) -> Matrix<Poly<F::Elem>> {
    let min_of = |j: usize| {
        (0..m.rows())
            .filter_map(|i| m[(i, j)].min_exponent())
            .min()
            .unwrap_or(0)
            .min(0)
    };
    let shifts: Vec<i64> = match mode {
        Clearing::PerColumn => (0..m.cols()).map(min_of).collect(),
        Clearing::Global => {
            let g = (0..m.cols()).map(min_of).min().unwrap_or(0);
            vec![g; m.cols()]
        }
    };
    let mut out = Matrix::zeros(ring, m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)]
                .shift(-shifts[j])
                .to_poly(ring)
                .expect("no negative exponents after clearing");
        }
    }
    out
}
