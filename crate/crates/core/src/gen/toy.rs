//! Small hand-made structures used as controls.

use crate::error::Result;
use crate::structure::{GaussianStructure, StructureBuilder};

/// The free monoid on one atom.
pub fn single_atom() -> Result<GaussianStructure> {
    let mut b = StructureBuilder::new();
    let x = b.add_object("*")?;
    b.add_atom("a", x, x, 1)?;
    b.build()
}

/// Free category on the cycle `x --a--> y --b--> x`. Its groupoid is `Z`.
pub fn free_cycle() -> Result<GaussianStructure> {
    let mut b = StructureBuilder::new();
    let x = b.add_object("x")?;
    let y = b.add_object("y")?;
    b.add_atom("a", x, y, 1)?;
    b.add_atom("b", y, x, 1)?;
    b.set_basepoint(x);
    b.set_path_length(x, 0)?;
    b.set_path_length(y, 1)?;
    b.build()
}

/// The two-sheeted cover of `⟨s, t | st = ts⟩` along `s`: objects `x`, `y`,
/// atoms `s1: x→y`, `s2: y→x`, `t1: x→x`, `t2: y→y` with `t1 s1 = s1 t2` and
/// `t2 s2 = s2 t1`. Its groupoid is equivalent to `Z²`.
///
/// `shift` is added to `ℓ(u_y)`; any value gives an isomorphic coefficient
/// module, and values other than 0 produce negative exponents.
pub fn commuting_cover(shift: i64) -> Result<GaussianStructure> {
    let mut b = StructureBuilder::new();
    let x = b.add_object("x")?;
    let y = b.add_object("y")?;
    let s1 = b.add_atom("s1", x, y, 1)?;
    let s2 = b.add_atom("s2", y, x, 1)?;
    let t1 = b.add_atom("t1", x, x, 1)?;
    let t2 = b.add_atom("t2", y, y, 1)?;
    b.set_lcm(s1, t2, &[t1], &[s1])?;
    b.set_lcm(s2, t1, &[t2], &[s2])?;
    b.set_basepoint(x);
    b.set_path_length(x, 0)?;
    b.set_path_length(y, 1 + shift)?;
    b.build()
}
