//! Built-in structures and the plain-text interchange format.

mod artin;
mod circulating;
mod dual;
mod format;
pub mod toy;

pub use artin::{artin_structure, CoxeterMatrix};
pub use circulating::{circulating_structure, CirculatingFamily};
pub use dual::{dual_type_a_structure, MAX_DUAL_RANK};
pub use format::{parse_structure, serialize_structure};

use crate::error::{Error, Result};
use crate::structure::GaussianStructure;

/// A built-in structure with the braid group it presents.
#[derive(Clone, Debug)]
pub struct Builtin {
    pub key: String,
    /// Group label as used in homology tables, e.g. `G23 = H3`.
    pub label: String,
    pub structure: GaussianStructure,
}

/// Keys accepted by [`builtin`], for help output.
pub const BUILTIN_KEYS: &[&str] = &[
    "artin:<A1..|B2..|D4..|E6|E7|E8|F4|G2|H3|H4|I2-m>",
    "circ:<G7|G11|G19|G12|G13|G15|G22>",
    "dual:A<1..4>",
    "toy:single-atom",
    "toy:free-cycle",
    "toy:commuting-cover",
];

fn artin_label(ty: &str) -> String {
    let group = match ty {
        "A2" => "G4",
        "A3" => "G25",
        "A4" => "G32",
        "B3" => "G26",
        "H3" => "G23",
        "F4" => "G28",
        "H4" => "G30",
        "E6" => "G35",
        "E7" => "G36",
        "E8" => "G37",
        "I2-4" => "G5",
        "I2-5" => "G20",
        "I2-6" | "G2" => "G6",
        "I2-8" => "G14",
        "I2-10" => "G21",
        _ => return format!("Artin {ty}"),
    };
    format!("Artin {ty} ~ {group}")
}

/// Looks up a built-in by key, e.g. `artin:F4`, `circ:G12`, `dual:A3`.
pub fn builtin(key: &str) -> Result<Builtin> {
    let unknown = || Error::Config(format!("unknown builtin `{key}`"));
    let (kind, name) = key.split_once(':').ok_or_else(unknown)?;
    let (label, structure) = match kind {
        "artin" => (artin_label(name), artin_structure(&CoxeterMatrix::named(name)?)?),
        "circ" => {
            let family = CirculatingFamily::parse(name).ok_or_else(unknown)?;
            (
                format!("circulating {}", family.name()),
                circulating_structure(family)?,
            )
        }
        "dual" => {
            let n: usize = name
                .strip_prefix('A')
                .and_then(|r| r.parse().ok())
                .ok_or_else(unknown)?;
            (format!("dual A{n}"), dual_type_a_structure(n)?)
        }
        "toy" => match name {
            "single-atom" => ("free monoid on one atom".to_string(), toy::single_atom()?),
            "free-cycle" => ("free category on a 2-cycle".to_string(), toy::free_cycle()?),
            "commuting-cover" => (
                "double cover of Z^2".to_string(),
                toy::commuting_cover(0)?,
            ),
            _ => return Err(unknown()),
        },
        _ => return Err(unknown()),
    };
    Ok(Builtin {
        key: key.to_string(),
        label,
        structure,
    })
}

/// Every built-in exercised by the test suites.
pub fn standard_builtins() -> Vec<&'static str> {
    vec![
        "artin:A2", "artin:A3", "artin:B3", "artin:H3", "artin:F4", "artin:I2-4", "circ:G7",
        "circ:G12", "circ:G13", "circ:G15", "circ:G22", "dual:A2", "dual:A3",
        "toy:single-atom", "toy:free-cycle", "toy:commuting-cover",
    ]
}
