//! Bounded sanity checks on a structure's lcm table.
//!
//! None of these prove that the table is complete. They catch the usual
//! transcription mistakes: swapped complements, wrong lengths, tables that
//! fail the cube condition, and reversing verdicts that disagree with the
//! presentation on short words.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::AtomOrdering;
use crate::structure::{AtomId, AtomWord, GaussianStructure, LcmStatus, ObjectId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Symmetry,
    Composability,
    LengthHomogeneity,
    ComplementMismatch,
    Cube,
    WordProblem,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Number of words examined by the bounded word-problem check.
    pub words_checked: usize,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    fn push(&mut self, kind: ViolationKind, message: impl Into<String>) {
        self.violations.push(Violation {
            kind,
            message: message.into(),
        });
    }

    fn internal(&mut self, context: &str, e: Error) {
        self.push(ViolationKind::Internal, format!("{context}: {e}"));
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok ({} words checked)", self.words_checked);
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {:?}: {}", v.kind, v.message)?;
        }
        Ok(())
    }
}

/// Runs every check; `depth` bounds the number of atoms in the words used by
/// the word-problem check.
pub fn validate_structure(s: &GaussianStructure, depth: usize) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_entries(s, &mut report);
    check_cubes(s, &mut report);
    check_words(s, depth, &mut report);
    report
}

fn name(s: &GaussianStructure, a: AtomId) -> &str {
    &s.atom(a).name
}

fn check_entries(s: &GaussianStructure, report: &mut ValidationReport) {
    for entry in s.lcm_entries() {
        let (a, b) = (entry.a, entry.b);
        let pair = format!("({}, {})", name(s, a), name(s, b));
        match s.lcm_entry(b, a) {
            Some(back) if back.swapped() == *entry => {}
            _ => report.push(ViolationKind::Symmetry, format!("entry {pair} is not symmetric")),
        }
        let LcmStatus::Exists {
            complement_a,
            complement_b,
        } = &entry.status
        else {
            continue;
        };
        let (Ok(left), Ok(right)) = (
            complement_a.concat(&s.atom_word(a)),
            complement_b.concat(&s.atom_word(b)),
        ) else {
            report.push(
                ViolationKind::Composability,
                format!("complements of {pair} do not compose with their atoms"),
            );
            continue;
        };
        if left.source() != right.source() {
            report.push(
                ViolationKind::Composability,
                format!("complements of {pair} start at different objects"),
            );
            continue;
        }
        if s.length(&left) != s.length(&right) {
            report.push(
                ViolationKind::LengthHomogeneity,
                format!(
                    "entry {pair}: lengths {} and {} differ",
                    s.length(&left),
                    s.length(&right)
                ),
            );
            continue;
        }
        match s.word_equal(&left, &right) {
            Ok(true) => {}
            Ok(false) => report.push(
                ViolationKind::ComplementMismatch,
                format!("entry {pair}: the two sides are not equal"),
            ),
            Err(e) => report.internal(&format!("entry {pair}"), e),
        }
    }
}

/// Left-lcm of three atoms folded from each starting pair must agree.
fn check_cubes(s: &GaussianStructure, report: &mut ValidationReport) {
    for x in 0..s.num_objects() {
        let atoms = s.atoms_with_target(ObjectId(x as u32));
        for (i, &a) in atoms.iter().enumerate() {
            for (j, &b) in atoms.iter().enumerate().skip(i + 1) {
                for &c in &atoms[j + 1..] {
                    if let Err(e) = check_cube(s, [a, b, c], report) {
                        report.internal(
                            &format!("triple ({}, {}, {})", name(s, a), name(s, b), name(s, c)),
                            e,
                        );
                    }
                }
            }
        }
    }
}

fn check_cube(s: &GaussianStructure, t: [AtomId; 3], report: &mut ValidationReport) -> Result<()> {
    let label = format!("({}, {}, {})", name(s, t[0]), name(s, t[1]), name(s, t[2]));
    let folds = [[t[0], t[1], t[2]], [t[1], t[2], t[0]], [t[0], t[2], t[1]]];
    let mut lcms = Vec::new();
    for order in folds {
        let lcm = s.left_lcm(&order)?;
        if let Some(l) = &lcm {
            for (atom, comp) in &l.complements {
                let product = comp.concat(&s.atom_word(*atom))?;
                if !s.word_equal(&product, &l.lcm)? {
                    report.push(
                        ViolationKind::Cube,
                        format!("triple {label}: complement of {} is wrong", name(s, *atom)),
                    );
                }
            }
        }
        lcms.push(lcm.map(|l| l.lcm));
    }
    let consistent = match (&lcms[0], &lcms[1], &lcms[2]) {
        (None, None, None) => true,
        (Some(p), Some(q), Some(r)) => s.word_equal(p, q)? && s.word_equal(p, r)?,
        _ => false,
    };
    if !consistent {
        report.push(
            ViolationKind::Cube,
            format!("triple {label}: left-lcm depends on the fold order"),
        );
    }
    Ok(())
}

/// All composable words of at most `depth` atoms, grouped by target.
fn short_words(s: &GaussianStructure, depth: usize) -> Vec<AtomWord> {
    let mut out = Vec::new();
    let mut frontier: Vec<AtomWord> = s.atoms().iter().map(|a| s.atom_word(a.id)).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for a in s.atoms() {
                if a.source == w.target() {
                    next.push(w.concat(&s.atom_word(a.id)).expect("composable by construction"));
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out
}

/// Union-find over a fixed word set.
struct Classes {
    parent: Vec<usize>,
}

impl Classes {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut j = i;
        while self.parent[j] != r {
            let next = self.parent[j];
            self.parent[j] = r;
            j = next;
        }
        r
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Compares reversing against the congruence generated by the defining
/// relations, restricted to words of at most `depth` atoms.
fn check_words(s: &GaussianStructure, depth: usize, report: &mut ValidationReport) {
    if depth == 0 {
        return;
    }
    let words = short_words(s, depth);
    report.words_checked = words.len();
    let index: HashMap<&[AtomId], usize> =
        words.iter().enumerate().map(|(i, w)| (w.atoms(), i)).collect();
    let relations: Vec<(Vec<AtomId>, Vec<AtomId>)> = s
        .lcm_entries()
        .filter_map(|e| match &e.status {
            LcmStatus::Exists {
                complement_a,
                complement_b,
            } => {
                let mut l = complement_a.atoms().to_vec();
                l.push(e.a);
                let mut r = complement_b.atoms().to_vec();
                r.push(e.b);
                Some((l, r))
            }
            LcmStatus::NoCommonMultiple => None,
        })
        .collect();
    let mut classes = Classes {
        parent: (0..words.len()).collect(),
    };
    for (i, w) in words.iter().enumerate() {
        let atoms = w.atoms();
        for (l, r) in &relations {
            for (from, to) in [(l, r), (r, l)] {
                if from.len() > atoms.len() {
                    continue;
                }
                for start in 0..=atoms.len() - from.len() {
                    if atoms[start..start + from.len()] != from[..] {
                        continue;
                    }
                    let mut image = atoms[..start].to_vec();
                    image.extend_from_slice(to);
                    image.extend_from_slice(&atoms[start + from.len()..]);
                    if let Some(&j) = index.get(image.as_slice()) {
                        classes.union(i, j);
                    }
                }
            }
        }
    }

    // With atom-count preserving relations the congruence never leaves the
    // word set, so separation by the relations is conclusive too.
    let exact = relations.iter().all(|(l, r)| l.len() == r.len());
    let ordering = AtomOrdering::identity(s);
    let mut by_form: HashMap<Vec<AtomId>, usize> = HashMap::new();
    let mut mismatched = BTreeSet::new();
    for (i, w) in words.iter().enumerate() {
        let form = match s.canonical_form(w, &ordering) {
            Ok(f) => f,
            Err(e) => {
                report.internal(&format!("word {}", s.format_word(w)), e);
                continue;
            }
        };
        if s.length(&form) != s.length(w) {
            report.push(
                ViolationKind::LengthHomogeneity,
                format!("word {} changes length under reversing", s.format_word(w)),
            );
        }
        let mut key = form.into_atoms();
        key.push(AtomId(w.source().0));
        match by_form.get(&key) {
            Some(&j) => {
                if exact && classes.find(i) != classes.find(j) {
                    mismatched.insert((j, i));
                }
            }
            None => {
                by_form.insert(key, i);
            }
        }
    }
    // Words related by the presentation but separated by reversing.
    let mut rep_form: HashMap<usize, Vec<AtomId>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let Ok(form) = s.canonical_form(w, &ordering) else {
            continue;
        };
        let root = classes.find(i);
        match rep_form.get(&root) {
            Some(f) if *f != form.atoms() => {
                report.push(
                    ViolationKind::WordProblem,
                    format!(
                        "{} is equal to an earlier word by the relations but reverses differently",
                        s.format_word(w)
                    ),
                );
            }
            Some(_) => {}
            None => {
                rep_form.insert(root, form.atoms().to_vec());
            }
        }
    }
    for (j, i) in mismatched {
        report.push(
            ViolationKind::WordProblem,
            format!(
                "reversing identifies {} and {}, the relations do not",
                s.format_word(&words[j]),
                s.format_word(&words[i])
            ),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{builtin, parse_structure, serialize_structure, standard_builtins};

    #[test]
    fn builtins_pass() {
        for key in standard_builtins() {
            let s = builtin(key).unwrap().structure;
            let report = validate_structure(&s, 3);
            assert!(report.is_ok(), "{key}: {report}");
            assert!(report.words_checked > 0);
        }
    }

    #[test]
    fn swapped_complements_are_caught() {
        let s = builtin("artin:A3").unwrap().structure;
        let text = serialize_structure(&s).replace("LCM s t COMPL s.t t.s", "LCM s t COMPL t.s s.t");
        assert_ne!(text, serialize_structure(&s));
        let broken = parse_structure(&text).unwrap();
        let report = validate_structure(&broken, 3);
        assert!(!report.is_ok());
    }

    #[test]
    fn length_mismatch_is_caught() {
        let text = "GAUSSIAN-STRUCTURE v1\nOBJECT x\nATOM a x x 1\nATOM b x x 2\nLCM a b COMPL a b\n";
        let s = parse_structure(text).unwrap();
        let report = validate_structure(&s, 2);
        assert_eq!(report.count(ViolationKind::LengthHomogeneity), 1, "{report}");
    }
}
