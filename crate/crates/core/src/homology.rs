//! Homology of a structure with coefficients in a rank-one system.

use std::fmt;

use num_bigint::BigInt;

use crate::coeffs::{
    clear_denominators, cyclotomic_factorization, format_cyclotomic, specialize, BaseRing,
    Clearing, CoefficientKind, CoefficientSystem, ScalarMatrix,
};
use crate::complex::{build_complex, CellComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    homology, EuclideanRing, Field, FieldRing, HomologyGroup, Integers, PolyRing, PrimeField,
    Rationals,
};
use crate::ordering::AtomOrdering;
use crate::structure::GaussianStructure;

/// One invariant factor of a torsion part, already normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torsion {
    /// `6`, or a polynomial such as `t^2 - t + 1`.
    pub text: String,
    pub integer: Option<BigInt>,
    /// `[(n, e)]` for `∏ Φ_n^e`, when the divisor is such a product.
    pub cyclotomic: Option<Vec<(u64, u32)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<Torsion>,
}

impl DegreeHomology {
    pub fn integer_torsion(&self) -> Vec<BigInt> {
        self.torsion.iter().filter_map(|t| t.integer.clone()).collect()
    }

    /// Cyclotomic form of every divisor, `None` if one has none.
    pub fn cyclotomic_torsion(&self) -> Option<Vec<Vec<(u64, u32)>>> {
        self.torsion.iter().map(|t| t.cyclotomic.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub system: CoefficientSystem,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyTable {
    /// `Z`, `Q`, `F2`, `Q[t±]`, …
    pub fn ring_symbol(&self) -> String {
        match self.system.kind {
            CoefficientKind::Laurent => format!("{}[t±]", self.system.base),
            _ => self.system.base.to_string(),
        }
    }

    /// `Z^3 + Z/2`, `Q[t±] + Q[t±]/(t^3 - 1)`, or `0`.
    pub fn format_degree(&self, n: usize) -> String {
        let base = self.ring_symbol();
        let h = &self.degrees[n];
        let mut parts = Vec::new();
        match h.free_rank {
            0 => {}
            1 => parts.push(base.clone()),
            k => parts.push(format!("{base}^{k}")),
        }
        for t in &h.torsion {
            if t.integer.is_some() {
                parts.push(format!("{base}/{}", t.text));
            } else {
                parts.push(format!("{base}/({})", t.text));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `Φ6Φ12` style names of the torsion divisors in degree `n`, where known.
    pub fn cyclotomic_names(&self, n: usize) -> Vec<Option<String>> {
        self.degrees[n]
            .torsion
            .iter()
            .map(|t| t.cyclotomic.as_deref().map(format_cyclotomic))
            .collect()
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..self.degrees.len() {
            write!(f, "H{n} = {}", self.format_degree(n))?;
            let names: Vec<String> = self.cyclotomic_names(n).into_iter().flatten().collect();
            if !names.is_empty() && names.len() == self.degrees[n].torsion.len() {
                write!(f, "  [{}]", names.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn collect<R: EuclideanRing>(
    groups: Vec<HomologyGroup<R::Elem>>,
    torsion: impl Fn(&R::Elem) -> Option<Torsion>,
) -> Vec<DegreeHomology> {
    groups
        .into_iter()
        .enumerate()
        .map(|(degree, g)| DegreeHomology {
            degree,
            free_rank: g.free_rank,
            torsion: g.torsion.iter().filter_map(&torsion).collect(),
        })
        .collect()
}

fn field_table<F: Field>(field: F, counts: &[usize], mats: &[ScalarMatrix]) -> Result<Vec<DegreeHomology>> {
    let ring = FieldRing { field };
    let m: Vec<_> = mats.iter().map(|x| x.to_field(&ring.field)).collect();
    Ok(collect::<FieldRing<F>>(homology(&ring, counts, &m)?, |_| None))
}

fn laurent_table<F: Field>(
    field: F,
    counts: &[usize],
    mats: &[ScalarMatrix],
    clearing: Clearing,
) -> Result<Vec<DegreeHomology>> {
    let ring = PolyRing::new(field);
    let m: Vec<_> = mats
        .iter()
        .map(|x| clear_denominators(&ring, &x.to_laurent(&ring.field), clearing))
        .collect();
    let groups = homology(&ring, counts, &m)?;
    Ok(collect::<PolyRing<F>>(groups, |d| {
        // Powers of t are units in k[t, t⁻¹].
        let d = ring.laurent_normalize(d);
        (!ring.is_unit(&d)).then(|| Torsion {
            text: ring.format(&d),
            integer: None,
            cyclotomic: cyclotomic_factorization(&ring, &d),
        })
    }))
}

/// `H_0 … H_{N−1}` for a complex enumerated up to dimension `N`.
pub fn homology_of_complex(
    s: &GaussianStructure,
    complex: &CellComplex,
    system: CoefficientSystem,
    clearing: Clearing,
) -> Result<HomologyTable> {
    let counts = complex.counts();
    let mats = specialize(s, complex, system)?;
    let degrees = match (system.kind, system.base) {
        (CoefficientKind::Laurent, BaseRing::Rationals) => laurent_table(Rationals, &counts, &mats, clearing)?,
        (CoefficientKind::Laurent, BaseRing::Prime(p)) => {
            laurent_table(PrimeField::new(p)?, &counts, &mats, clearing)?
        }
        (CoefficientKind::Laurent, BaseRing::Integers) => {
            return Err(Error::Config("Laurent coefficients need a field (Q or F_p)".into()))
        }
        (_, BaseRing::Integers) => {
            let m: Vec<_> = mats.iter().map(ScalarMatrix::to_integers).collect();
            collect::<Integers>(homology(&Integers, &counts, &m)?, |d| {
                Some(Torsion {
                    text: d.to_string(),
                    integer: Some(d.clone()),
                    cyclotomic: None,
                })
            })
        }
        (_, BaseRing::Rationals) => field_table(Rationals, &counts, &mats)?,
        (_, BaseRing::Prime(p)) => field_table(PrimeField::new(p)?, &counts, &mats)?,
    };
    Ok(HomologyTable { system, degrees })
}

/// `H_0 … H_{max_dim}`; cells are enumerated one dimension higher.
pub fn compute_homology(
    s: &GaussianStructure,
    ordering: &AtomOrdering,
    system: CoefficientSystem,
    max_dim: usize,
    memo: bool,
) -> Result<HomologyTable> {
    let complex = build_complex(s, ordering, max_dim + 1, memo)?;
    homology_of_complex(s, &complex, system, Clearing::PerColumn)
}

/// The default top degree: atoms at the busiest object, capped at 8.
pub fn default_max_dim(s: &GaussianStructure) -> usize {
    s.max_atoms_per_target().min(8)
}
