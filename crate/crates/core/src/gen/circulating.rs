//! Garside monoids for the rank-two exceptional braid groups.

use crate::error::Result;
use crate::structure::{GaussianStructure, StructureBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CirculatingFamily {
    /// `abc = bca = cab`; also serves `G11` and `G19`.
    G7,
    /// `abca = bcab = cabc`.
    G12,
    /// `acabc = bcaba, bcab = cabc, cabca = abcab`.
    G13,
    /// `abc = bca, cabcb = abcbc`.
    G15,
    /// `abcab = bcabc = cabca`.
    G22,
}

impl CirculatingFamily {
    pub const ALL: [CirculatingFamily; 5] = [
        CirculatingFamily::G7,
        CirculatingFamily::G12,
        CirculatingFamily::G13,
        CirculatingFamily::G15,
        CirculatingFamily::G22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CirculatingFamily::G7 => "G7",
            CirculatingFamily::G12 => "G12",
            CirculatingFamily::G13 => "G13",
            CirculatingFamily::G15 => "G15",
            CirculatingFamily::G22 => "G22",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "G7" | "G11" | "G19" => Some(CirculatingFamily::G7),
            "G12" => Some(CirculatingFamily::G12),
            "G13" => Some(CirculatingFamily::G13),
            "G15" => Some(CirculatingFamily::G15),
            "G22" => Some(CirculatingFamily::G22),
            _ => None,
        }
    }

    /// `(x, y, comp_x, comp_y)` with `comp_x · x = comp_y · y`.
    fn table(self) -> Vec<LcmRow> {
        match self {
            CirculatingFamily::G7 => circulating_table(3),
            CirculatingFamily::G12 => circulating_table(4),
            CirculatingFamily::G22 => circulating_table(5),
            CirculatingFamily::G13 => rows(&[
                ("a", "b", "cabc", "abca"),
                ("a", "c", "bcab", "acab"),
                ("b", "c", "bca", "cab"),
            ]),
            // a∨b is not one of the two defining relations: abcbc = bcbca follows
            // from abc = bca.
            CirculatingFamily::G15 => rows(&[
                ("a", "b", "bcbc", "cabc"),
                ("a", "c", "bc", "ab"),
                ("b", "c", "cabc", "abcb"),
            ]),
        }
    }
}

type LcmRow = (String, String, String, String);

fn rows(table: &[(&str, &str, &str, &str)]) -> Vec<LcmRow> {
    table
        .iter()
        .map(|&(p, q, cp, cq)| (p.into(), q.into(), cp.into(), cq.into()))
        .collect()
}

/// For `abc… = bca… = cab…` of length `k`: the word of the relation ending in
/// a letter gives that letter's complement.
fn circulating_table(k: usize) -> Vec<LcmRow> {
    const CYCLE: [&str; 3] = ["a", "b", "c"];
    let word_from = |start: usize| -> String { (0..k).map(|i| CYCLE[(start + i) % 3]).collect() };
    // Complement of the letter each relation word ends with.
    let mut complement: [String; 3] = Default::default();
    for start in 0..3 {
        let w = word_from(start);
        let last = (start + k - 1) % 3;
        complement[last] = w[..k - 1].to_string();
    }
    [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(i, j)| {
            (
                CYCLE[i].to_string(),
                CYCLE[j].to_string(),
                complement[i].clone(),
                complement[j].clone(),
            )
        })
        .collect()
}

/// One object, atoms `a`, `b`, `c` of length 1.
pub fn circulating_structure(family: CirculatingFamily) -> Result<GaussianStructure> {
    let mut b = StructureBuilder::new();
    let x = b.add_object("*")?;
    for name in ["a", "b", "c"] {
        b.add_atom(name, x, x, 1)?;
    }
    let ids = |b: &StructureBuilder, w: &str| -> Vec<_> {
        w.chars()
            .map(|ch| b.atom_id(&ch.to_string()).expect("letters a, b, c"))
            .collect()
    };
    for (p, q, cp, cq) in family.table() {
        let (pa, qa) = (b.atom_id(&p).unwrap(), b.atom_id(&q).unwrap());
        let (cpw, cqw) = (ids(&b, &cp), ids(&b, &cq));
        b.set_lcm(pa, qa, &cpw, &cqw)?;
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g7_table_matches_relation() {
        let t = circulating_table(3);
        assert_eq!(t, rows(&[("a", "b", "bc", "ca"), ("a", "c", "bc", "ab"), ("b", "c", "ca", "ab")]));
    }

    #[test]
    fn g12_and_g22_tables() {
        // abca ends in a, bcab in b, cabc in c.
        assert_eq!(circulating_table(4)[0], rows(&[("a", "b", "abc", "bca")])[0]);
        // abcab ends in b, bcabc in c, cabca in a.
        assert_eq!(circulating_table(5)[2], rows(&[("b", "c", "abca", "bcab")])[0]);
    }

    #[test]
    fn aliases() {
        assert_eq!(CirculatingFamily::parse("G19"), Some(CirculatingFamily::G7));
        assert_eq!(CirculatingFamily::parse("G8"), None);
    }
}
