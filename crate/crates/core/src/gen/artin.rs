//! Artin monoids of spherical Coxeter systems.

use crate::error::{Error, Result};
use crate::structure::{AtomId, GaussianStructure, StructureBuilder};

/// A symmetric Coxeter matrix with `m[s][s] = 1` and `m[s][t] >= 2` otherwise.
///
/// Whether the system is of spherical type is NOT checked; callers passing an
/// infinite-type matrix get a structure whose lcm table is not complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Precondition("Coxeter matrix must be square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != m[j][i] {
                    return Err(Error::Precondition("Coxeter matrix must be symmetric".into()));
                }
                if i == j && v != 1 {
                    return Err(Error::Precondition("diagonal entries must be 1".into()));
                }
                if i != j && v < 2 {
                    return Err(Error::Precondition(
                        "off-diagonal entries must be at least 2".into(),
                    ));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// Builds the matrix of a Coxeter graph: unlisted pairs commute.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, v) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::Precondition(format!("bad Coxeter edge ({i}, {j})")));
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        Self::new(m)
    }

    /// Spherical types by name: `A<n>`, `B<n>`, `D<n>`, `E6`–`E8`, `F4`, `G2`, `H3`, `H4`, `I2-<m>`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown Coxeter type `{name}`"));
        if let Some(m) = name.strip_prefix("I2-") {
            let m: u32 = m.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Self::from_edges(2, &[(0, 1, m)]);
        }
        let (family, rank) = name.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        let chain = |n: usize| -> Vec<(usize, usize, u32)> { (1..n).map(|i| (i - 1, i, 3)).collect() };
        match family {
            "A" if n >= 1 => Self::from_edges(n, &chain(n)),
            "B" if n >= 2 => {
                let mut e = chain(n);
                e[0].2 = 4;
                Self::from_edges(n, &e)
            }
            "D" if n >= 4 => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1, 3));
                Self::from_edges(n, &e)
            }
            // Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4.
            "E" if (6..=8).contains(&n) => {
                let mut e = vec![(0, 2, 3), (1, 3, 3)];
                e.extend((3..n).map(|i| (i - 1, i, 3)));
                Self::from_edges(n, &e)
            }
            "F" if n == 4 => Self::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            "G" if n == 2 => Self::from_edges(2, &[(0, 1, 6)]),
            "H" if n == 3 => Self::from_edges(3, &[(0, 1, 5), (1, 2, 3)]),
            "H" if n == 4 => Self::from_edges(4, &[(0, 1, 5), (1, 2, 3), (2, 3, 3)]),
            _ => Err(bad()),
        }
    }

    pub fn size(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, s: usize, t: usize) -> u32 {
        self.m[s][t]
    }
}

/// `⟨…, t, s⟩` of length `len` ending in `s`.
fn alternating_ending_in(s: AtomId, t: AtomId, len: u32) -> Vec<AtomId> {
    (0..len)
        .map(|i| if (len - 1 - i) % 2 == 0 { s } else { t })
        .collect()
}

/// One object, one length-1 atom per generator, and `lcm(s, t)` the
/// alternating word of length `m_{s,t}`.
pub fn artin_structure(matrix: &CoxeterMatrix) -> Result<GaussianStructure> {
    let n = matrix.size();
    let names: Vec<String> = if n <= 3 {
        ["s", "t", "u"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("s{i}")).collect()
    };
    let mut b = StructureBuilder::new();
    let x = b.add_object("*")?;
    let ids = names
        .iter()
        .map(|name| b.add_atom(name, x, x, 1))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        for j in i + 1..n {
            let m = matrix.entry(i, j);
            let (s, t) = (ids[i], ids[j]);
            // lcm = comp_s · s = comp_t · t, both alternating of length m - 1.
            let comp_s = alternating_ending_in(t, s, m - 1);
            let comp_t = alternating_ending_in(s, t, m - 1);
            b.set_lcm(s, t, &comp_s, &comp_t)?;
        }
    }
    b.build()
}
