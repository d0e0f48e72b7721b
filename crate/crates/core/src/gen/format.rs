//! The `GAUSSIAN-STRUCTURE v1` interchange format.
//!
//! ```text
//! GAUSSIAN-STRUCTURE v1
//! OBJECT <name>
//! ATOM <name> <sourceObject> <targetObject> <length>
//! LCM <atomA> <atomB> COMPL <word> <word>
//! NOLCM <atomA> <atomB>
//! BASEOBJECT <name>
//! PATHLEN <object> <integer>
//! ORDER <atom> <atom> ...
//! ```
//!
//! Words are atom names joined by `.`, or `-` for the identity. `#` starts a
//! comment. `LCM a b COMPL x y` means `left_lcm(a, b) = x·a = y·b`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::structure::{AtomId, GaussianStructure, LcmStatus, StructureBuilder};

pub const HEADER: &str = "GAUSSIAN-STRUCTURE v1";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn lift(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        Error::Structure(m) | Error::Precondition(m) => err(line, m),
        other => err(line, other.to_string()),
    }
}

fn parse_word(b: &StructureBuilder, token: &str, line: usize) -> Result<Vec<AtomId>> {
    if token == "-" {
        return Ok(Vec::new());
    }
    token
        .split('.')
        .map(|name| {
            b.atom_id(name)
                .ok_or_else(|| err(line, format!("undeclared atom `{name}` in word `{token}`")))
        })
        .collect()
}

pub fn parse_structure(text: &str) -> Result<GaussianStructure> {
    let mut b = StructureBuilder::new();
    let mut seen_header = false;
    let mut last_line = 0;
    let mut basepoint_set = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !seen_header {
            if content != HEADER {
                return Err(err(line, format!("expected header `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let arity = |n: usize| -> Result<()> {
            if tokens.len() != n {
                Err(err(
                    line,
                    format!("`{}` expects {} fields, found {}", tokens[0], n - 1, tokens.len() - 1),
                ))
            } else {
                Ok(())
            }
        };
        let object = |name: &str| {
            b.object_id(name)
                .ok_or_else(|| err(line, format!("undeclared object `{name}`")))
        };
        let atom = |name: &str| {
            b.atom_id(name)
                .ok_or_else(|| err(line, format!("undeclared atom `{name}`")))
        };
        match tokens[0] {
            "OBJECT" => {
                arity(2)?;
                b.add_object(tokens[1]).map_err(lift(line))?;
            }
            "ATOM" => {
                arity(5)?;
                let (src, tgt) = (object(tokens[2])?, object(tokens[3])?);
                let length: u32 = tokens[4]
                    .parse()
                    .map_err(|_| err(line, format!("invalid length `{}`", tokens[4])))?;
                b.add_atom(tokens[1], src, tgt, length).map_err(lift(line))?;
            }
            "LCM" => {
                arity(6)?;
                if tokens[3] != "COMPL" {
                    return Err(err(line, "expected `COMPL` after the two atoms"));
                }
                let (a, c) = (atom(tokens[1])?, atom(tokens[2])?);
                let wa = parse_word(&b, tokens[4], line)?;
                let wc = parse_word(&b, tokens[5], line)?;
                b.set_lcm(a, c, &wa, &wc).map_err(lift(line))?;
            }
            "NOLCM" => {
                arity(3)?;
                let (a, c) = (atom(tokens[1])?, atom(tokens[2])?);
                b.set_no_lcm(a, c).map_err(lift(line))?;
            }
            "BASEOBJECT" => {
                arity(2)?;
                if basepoint_set {
                    return Err(err(line, "duplicate BASEOBJECT"));
                }
                let x = object(tokens[1])?;
                b.set_basepoint(x);
                basepoint_set = true;
            }
            "PATHLEN" => {
                arity(3)?;
                let x = object(tokens[1])?;
                let v: i64 = tokens[2]
                    .parse()
                    .map_err(|_| err(line, format!("invalid integer `{}`", tokens[2])))?;
                b.set_path_length(x, v).map_err(lift(line))?;
            }
            "ORDER" => {
                let order = tokens[1..]
                    .iter()
                    .map(|n| atom(n))
                    .collect::<Result<Vec<_>>>()?;
                b.set_order(order);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    if !seen_header {
        return Err(err(last_line.max(1), format!("missing header `{HEADER}`")));
    }
    b.build().map_err(lift(last_line))
}

fn word_text(s: &GaussianStructure, atoms: &[AtomId]) -> String {
    if atoms.is_empty() {
        return "-".to_string();
    }
    atoms
        .iter()
        .map(|&a| s.atom(a).name.as_str())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn serialize_structure(s: &GaussianStructure) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for o in s.objects() {
        let _ = writeln!(out, "OBJECT {}", o.name);
    }
    for a in s.atoms() {
        let _ = writeln!(
            out,
            "ATOM {} {} {} {}",
            a.name,
            s.object(a.source).name,
            s.object(a.target).name,
            a.length
        );
    }
    for e in s.lcm_entries() {
        let (na, nb) = (&s.atom(e.a).name, &s.atom(e.b).name);
        match &e.status {
            LcmStatus::Exists {
                complement_a,
                complement_b,
            } => {
                let _ = writeln!(
                    out,
                    "LCM {na} {nb} COMPL {} {}",
                    word_text(s, complement_a.atoms()),
                    word_text(s, complement_b.atoms())
                );
            }
            LcmStatus::NoCommonMultiple => {
                let _ = writeln!(out, "NOLCM {na} {nb}");
            }
        }
    }
    if let Some(base) = s.basepoint() {
        let _ = writeln!(out, "BASEOBJECT {}", s.object(base).name);
    }
    if let Some(lengths) = s.path_lengths() {
        for (o, l) in s.objects().iter().zip(lengths) {
            let _ = writeln!(out, "PATHLEN {} {l}", o.name);
        }
    }
    if let Some(order) = s.declared_order() {
        let _ = writeln!(out, "ORDER {}", word_text(s, order).replace('.', " "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = "\
GAUSSIAN-STRUCTURE v1
# the braid monoid on three strands
OBJECT *
ATOM s * * 1
ATOM t * * 1
LCM s t COMPL s.t t.s
";

    #[test]
    fn parses_a2() {
        let s = parse_structure(A2).unwrap();
        assert_eq!(s.num_atoms(), 2);
        let l = s.left_lcm(&[AtomId(0), AtomId(1)]).unwrap().unwrap();
        assert_eq!(l.lcm.len(), 3);
    }

    #[test]
    fn undeclared_object_names_the_line() {
        let text = "GAUSSIAN-STRUCTURE v1\nOBJECT x\nATOM a x y 1\n";
        match parse_structure(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("`y`"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_header() {
        assert!(matches!(
            parse_structure("OBJECT x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_structure(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn missing_lcm_entry_is_reported() {
        let text = "GAUSSIAN-STRUCTURE v1\nOBJECT x\nATOM a x x 1\nATOM b x x 1\n";
        let e = parse_structure(text).unwrap_err();
        assert!(e.to_string().contains("missing lcm entry"), "{e}");
    }

    #[test]
    fn bad_complement_composability() {
        let text = "\
GAUSSIAN-STRUCTURE v1
OBJECT x
OBJECT y
ATOM a x x 1
ATOM b x x 1
ATOM c x y 1
LCM a b COMPL c b
";
        assert!(matches!(
            parse_structure(text),
            Err(Error::Parse { line: 7, .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        for (text, line) in [
            ("GAUSSIAN-STRUCTURE v1\nOBJECT\n", 2),
            ("GAUSSIAN-STRUCTURE v1\nOBJECT x\nATOM a x x one\n", 3),
            ("GAUSSIAN-STRUCTURE v1\nFROB x\n", 2),
            ("GAUSSIAN-STRUCTURE v1\nOBJECT x\nATOM a x x 1\nATOM b x x 1\nLCM a b WITH b a\n", 5),
        ] {
            match parse_structure(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }
}
