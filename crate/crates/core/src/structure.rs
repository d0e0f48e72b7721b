//! Finite presentation data for a locally left-Gaussian category.
//!
//! A [`GaussianStructure`] lists objects, atoms (with source, target and a
//! positive length) and, for every pair of distinct atoms sharing a target,
//! either the two complements of their left-lcm or the fact that they have no
//! common left-multiple. Composition is written left to right: the word `fg`
//! means "`f` then `g`".

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomId(pub u32);

impl ObjectId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl AtomId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectRef {
    pub id: ObjectId,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub id: AtomId,
    pub name: String,
    pub source: ObjectId,
    pub target: ObjectId,
    /// Reflection length; always at least 1.
    pub length: u32,
}

/// A composable sequence of atoms together with its endpoints.
///
/// The empty word is the identity at `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomWord {
    source: ObjectId,
    target: ObjectId,
    atoms: Vec<AtomId>,
}

impl AtomWord {
    pub fn identity(object: ObjectId) -> Self {
        AtomWord {
            source: object,
            target: object,
            atoms: Vec::new(),
        }
    }

    /// Builds a word whose composability has already been established.
    pub(crate) fn from_parts(source: ObjectId, target: ObjectId, atoms: Vec<AtomId>) -> Self {
        AtomWord {
            source,
            target,
            atoms,
        }
    }

    pub fn source(&self) -> ObjectId {
        self.source
    }

    pub fn target(&self) -> ObjectId {
        self.target
    }

    pub fn atoms(&self) -> &[AtomId] {
        &self.atoms
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn last(&self) -> Option<AtomId> {
        self.atoms.last().copied()
    }

    pub fn first(&self) -> Option<AtomId> {
        self.atoms.first().copied()
    }

    /// `self` then `other`.
    pub fn concat(&self, other: &AtomWord) -> Result<AtomWord> {
        if self.target != other.source {
            return Err(Error::Precondition(format!(
                "cannot compose a word ending at object {} with one starting at object {}",
                self.target.0, other.source.0
            )));
        }
        let mut atoms = Vec::with_capacity(self.atoms.len() + other.atoms.len());
        atoms.extend_from_slice(&self.atoms);
        atoms.extend_from_slice(&other.atoms);
        Ok(AtomWord {
            source: self.source,
            target: other.target,
            atoms,
        })
    }

    pub(crate) fn concat_unchecked(&self, other: &AtomWord) -> AtomWord {
        debug_assert_eq!(self.target, other.source);
        let mut atoms = Vec::with_capacity(self.atoms.len() + other.atoms.len());
        atoms.extend_from_slice(&self.atoms);
        atoms.extend_from_slice(&other.atoms);
        AtomWord {
            source: self.source,
            target: other.target,
            atoms,
        }
    }

    pub(crate) fn into_atoms(self) -> Vec<AtomId> {
        self.atoms
    }
}

/// Orientation-specific view of a pairwise lcm: `left_lcm(a, b) = comp_a · a = comp_b · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcmStatus {
    Exists {
        complement_a: AtomWord,
        complement_b: AtomWord,
    },
    NoCommonMultiple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmEntry {
    pub a: AtomId,
    pub b: AtomId,
    pub status: LcmStatus,
}

impl LcmEntry {
    /// The same entry seen from `(b, a)`.
    pub fn swapped(&self) -> LcmEntry {
        let status = match &self.status {
            LcmStatus::Exists {
                complement_a,
                complement_b,
            } => LcmStatus::Exists {
                complement_a: complement_b.clone(),
                complement_b: complement_a.clone(),
            },
            LcmStatus::NoCommonMultiple => LcmStatus::NoCommonMultiple,
        };
        LcmEntry {
            a: self.b,
            b: self.a,
            status,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum PairSlot {
    Unrelated,
    Lcm { comp_a: Vec<AtomId>, comp_b: Vec<AtomId> },
    NoLcm,
}

/// Pairwise lookup result used by the reversing recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PairLcm<'a> {
    Same,
    Lcm { comp_a: &'a [AtomId], comp_b: &'a [AtomId] },
    None,
}

/// An immutable locally left-Gaussian presentation.
#[derive(Clone, Debug)]
pub struct GaussianStructure {
    objects: Vec<ObjectRef>,
    atoms: Vec<Atom>,
    /// Canonical entries keyed by `(min id, max id)`, oriented accordingly.
    entries: BTreeMap<(AtomId, AtomId), LcmEntry>,
    pairs: Vec<PairSlot>,
    atoms_by_target: Vec<Vec<AtomId>>,
    basepoint: Option<ObjectId>,
    path_lengths: Option<Vec<i64>>,
    declared_order: Option<Vec<AtomId>>,
    object_names: HashMap<String, ObjectId>,
    atom_names: HashMap<String, AtomId>,
}

impl PartialEq for GaussianStructure {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.atoms == other.atoms
            && self.entries == other.entries
            && self.basepoint == other.basepoint
            && self.path_lengths == other.path_lengths
            && self.declared_order == other.declared_order
    }
}

impl GaussianStructure {
    pub fn objects(&self) -> &[ObjectRef] {
        &self.objects
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        &self.atoms[id.index()]
    }

    pub fn object(&self, id: ObjectId) -> &ObjectRef {
        &self.objects[id.index()]
    }

    pub fn atom_by_name(&self, name: &str) -> Option<AtomId> {
        self.atom_names.get(name).copied()
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.object_names.get(name).copied()
    }

    /// Atoms with the given target, in ascending id order.
    pub fn atoms_with_target(&self, target: ObjectId) -> &[AtomId] {
        &self.atoms_by_target[target.index()]
    }

    pub fn basepoint(&self) -> Option<ObjectId> {
        self.basepoint
    }

    /// `ℓ(u_x)` for each object, when transport data is present.
    pub fn path_lengths(&self) -> Option<&[i64]> {
        self.path_lengths.as_deref()
    }

    pub fn declared_order(&self) -> Option<&[AtomId]> {
        self.declared_order.as_deref()
    }

    /// All lcm entries, one per unordered pair, oriented with `a < b`.
    pub fn lcm_entries(&self) -> impl Iterator<Item = &LcmEntry> {
        self.entries.values()
    }

    /// The entry for `(a, b)` oriented as asked.
    pub fn lcm_entry(&self, a: AtomId, b: AtomId) -> Option<LcmEntry> {
        if a <= b {
            self.entries.get(&(a, b)).cloned()
        } else {
            self.entries.get(&(b, a)).map(LcmEntry::swapped)
        }
    }

    #[inline]
    pub(crate) fn pair(&self, a: AtomId, b: AtomId) -> PairLcm<'_> {
        if a == b {
            return PairLcm::Same;
        }
        match &self.pairs[a.index() * self.atoms.len() + b.index()] {
            PairSlot::Lcm { comp_a, comp_b } => PairLcm::Lcm { comp_a, comp_b },
            PairSlot::NoLcm | PairSlot::Unrelated => PairLcm::None,
        }
    }

    /// Builds and checks a word from atom ids.
    pub fn word(&self, atoms: &[AtomId]) -> Result<AtomWord> {
        let Some(&first) = atoms.first() else {
            return Err(Error::Precondition(
                "an empty word needs an explicit object; use AtomWord::identity".into(),
            ));
        };
        for w in atoms.windows(2) {
            let (f, g) = (self.atom(w[0]), self.atom(w[1]));
            if f.target != g.source {
                return Err(Error::Precondition(format!(
                    "atoms {} and {} are not composable",
                    f.name, g.name
                )));
            }
        }
        let source = self.atom(first).source;
        let target = self.atom(*atoms.last().unwrap()).target;
        Ok(AtomWord::from_parts(source, target, atoms.to_vec()))
    }

    /// Parses a word written as atom names separated by `.`; `-` is the identity
    /// at `object` (which must then be given).
    pub fn word_from_names(&self, text: &str, object: Option<ObjectId>) -> Result<AtomWord> {
        let text = text.trim();
        if text == "-" || text.is_empty() {
            return object.map(AtomWord::identity).ok_or_else(|| {
                Error::Precondition("identity word needs an object".into())
            });
        }
        let ids = text
            .split('.')
            .map(|n| {
                self.atom_by_name(n)
                    .ok_or_else(|| Error::Precondition(format!("unknown atom `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.word(&ids)
    }

    /// Single-character names are joined without separators, longer names with `.`.
    pub fn format_word(&self, word: &AtomWord) -> String {
        if word.is_identity() {
            return format!("1_{}", self.object(word.source()).name);
        }
        let names: Vec<&str> = word
            .atoms()
            .iter()
            .map(|&a| self.atom(a).name.as_str())
            .collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join(".")
        }
    }

    pub fn atom_word(&self, a: AtomId) -> AtomWord {
        let atom = self.atom(a);
        AtomWord::from_parts(atom.source, atom.target, vec![a])
    }

    /// Sum of atom lengths.
    pub fn length(&self, word: &AtomWord) -> u64 {
        self.length_of(word.atoms())
    }

    pub(crate) fn length_of(&self, atoms: &[AtomId]) -> u64 {
        atoms.iter().map(|&a| self.atom(a).length as u64).sum()
    }

    /// Largest number of atoms sharing one target.
    pub fn max_atoms_per_target(&self) -> usize {
        self.atoms_by_target.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Incremental constructor enforcing referential integrity.
#[derive(Clone, Debug, Default)]
pub struct StructureBuilder {
    objects: Vec<ObjectRef>,
    atoms: Vec<Atom>,
    entries: BTreeMap<(AtomId, AtomId), LcmEntry>,
    basepoint: Option<ObjectId>,
    path_lengths: BTreeMap<ObjectId, i64>,
    declared_order: Option<Vec<AtomId>>,
    object_names: HashMap<String, ObjectId>,
    atom_names: HashMap<String, AtomId>,
}

impl StructureBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: &str) -> Result<ObjectId> {
        if self.object_names.contains_key(name) {
            return Err(Error::Structure(format!("duplicate object `{name}`")));
        }
        let id = ObjectId(self.objects.len() as u32);
        self.objects.push(ObjectRef {
            id,
            name: name.to_string(),
        });
        self.object_names.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn object_id(&self, name: &str) -> Option<ObjectId> {
        self.object_names.get(name).copied()
    }

    pub fn atom_id(&self, name: &str) -> Option<AtomId> {
        self.atom_names.get(name).copied()
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        &self.atoms[id.index()]
    }

    pub fn add_atom(
        &mut self,
        name: &str,
        source: ObjectId,
        target: ObjectId,
        length: u32,
    ) -> Result<AtomId> {
        if self.atom_names.contains_key(name) {
            return Err(Error::Structure(format!("duplicate atom `{name}`")));
        }
        if name.is_empty() || name == "-" || name.contains('.') || name.contains(char::is_whitespace) {
            return Err(Error::Structure(format!("invalid atom name `{name}`")));
        }
        if length == 0 {
            return Err(Error::Structure(format!("atom `{name}` has length 0")));
        }
        for o in [source, target] {
            if o.index() >= self.objects.len() {
                return Err(Error::Structure(format!(
                    "atom `{name}` references unknown object {}",
                    o.0
                )));
            }
        }
        let id = AtomId(self.atoms.len() as u32);
        self.atoms.push(Atom {
            id,
            name: name.to_string(),
            source,
            target,
            length,
        });
        self.atom_names.insert(name.to_string(), id);
        Ok(id)
    }

    fn check_complement(&self, comp: &[AtomId], atom: AtomId, start: ObjectId) -> Result<AtomWord> {
        let end = self.atoms[atom.index()].source;
        let mut at = start;
        for &c in comp {
            let ca = &self.atoms[c.index()];
            if ca.source != at {
                return Err(Error::Structure(format!(
                    "complement word for `{}` is not composable at atom `{}`",
                    self.atoms[atom.index()].name,
                    ca.name
                )));
            }
            at = ca.target;
        }
        if at != end {
            return Err(Error::Structure(format!(
                "complement word for `{}` does not end at its source",
                self.atoms[atom.index()].name
            )));
        }
        Ok(AtomWord::from_parts(start, end, comp.to_vec()))
    }

    fn check_pair(&self, a: AtomId, b: AtomId) -> Result<()> {
        let n = self.atoms.len() as u32;
        if a.0 >= n || b.0 >= n {
            return Err(Error::Structure("lcm entry references an unknown atom".into()));
        }
        if a == b {
            return Err(Error::Structure(format!(
                "lcm entry pairs atom `{}` with itself",
                self.atoms[a.index()].name
            )));
        }
        if self.atoms[a.index()].target != self.atoms[b.index()].target {
            return Err(Error::Structure(format!(
                "atoms `{}` and `{}` do not share a target",
                self.atoms[a.index()].name,
                self.atoms[b.index()].name
            )));
        }
        let key = (a.min(b), a.max(b));
        if self.entries.contains_key(&key) {
            return Err(Error::Structure(format!(
                "duplicate lcm entry for `{}`, `{}`",
                self.atoms[a.index()].name,
                self.atoms[b.index()].name
            )));
        }
        Ok(())
    }

    /// Records `left_lcm(a, b) = comp_a · a = comp_b · b`.
    pub fn set_lcm(&mut self, a: AtomId, b: AtomId, comp_a: &[AtomId], comp_b: &[AtomId]) -> Result<()> {
        self.check_pair(a, b)?;
        // Both complements start at the source of the lcm; find it from whichever is nonempty.
        let start = match (comp_a.first(), comp_b.first()) {
            (Some(&c), _) | (None, Some(&c)) => self.atoms[c.index()].source,
            (None, None) => {
                return Err(Error::Structure(format!(
                    "lcm of distinct atoms `{}` and `{}` cannot have two empty complements",
                    self.atoms[a.index()].name,
                    self.atoms[b.index()].name
                )))
            }
        };
        let wa = self.check_complement(comp_a, a, start)?;
        let wb = self.check_complement(comp_b, b, start)?;
        let entry = LcmEntry {
            a,
            b,
            status: LcmStatus::Exists {
                complement_a: wa,
                complement_b: wb,
            },
        };
        let entry = if a < b { entry } else { entry.swapped() };
        self.entries.insert((entry.a, entry.b), entry);
        Ok(())
    }

    pub fn set_no_lcm(&mut self, a: AtomId, b: AtomId) -> Result<()> {
        self.check_pair(a, b)?;
        let (lo, hi) = (a.min(b), a.max(b));
        self.entries.insert(
            (lo, hi),
            LcmEntry {
                a: lo,
                b: hi,
                status: LcmStatus::NoCommonMultiple,
            },
        );
        Ok(())
    }

    pub fn set_basepoint(&mut self, object: ObjectId) {
        self.basepoint = Some(object);
    }

    pub fn set_path_length(&mut self, object: ObjectId, length: i64) -> Result<()> {
        if object.index() >= self.objects.len() {
            return Err(Error::Structure(format!("unknown object {}", object.0)));
        }
        if self.path_lengths.insert(object, length).is_some() {
            return Err(Error::Structure(format!(
                "duplicate path length for object `{}`",
                self.objects[object.index()].name
            )));
        }
        Ok(())
    }

    pub fn set_order(&mut self, order: Vec<AtomId>) {
        self.declared_order = Some(order);
    }

    pub fn build(self) -> Result<GaussianStructure> {
        let n = self.atoms.len();
        let mut atoms_by_target = vec![Vec::new(); self.objects.len()];
        for atom in &self.atoms {
            atoms_by_target[atom.target.index()].push(atom.id);
        }
        let mut pairs = vec![PairSlot::Unrelated; n * n];
        for group in &atoms_by_target {
            for (i, &a) in group.iter().enumerate() {
                for &b in &group[i + 1..] {
                    let Some(entry) = self.entries.get(&(a, b)) else {
                        return Err(Error::Structure(format!(
                            "missing lcm entry for atoms `{}` and `{}`",
                            self.atoms[a.index()].name,
                            self.atoms[b.index()].name
                        )));
                    };
                    match &entry.status {
                        LcmStatus::Exists {
                            complement_a,
                            complement_b,
                        } => {
                            pairs[a.index() * n + b.index()] = PairSlot::Lcm {
                                comp_a: complement_a.atoms().to_vec(),
                                comp_b: complement_b.atoms().to_vec(),
                            };
                            pairs[b.index() * n + a.index()] = PairSlot::Lcm {
                                comp_a: complement_b.atoms().to_vec(),
                                comp_b: complement_a.atoms().to_vec(),
                            };
                        }
                        LcmStatus::NoCommonMultiple => {
                            pairs[a.index() * n + b.index()] = PairSlot::NoLcm;
                            pairs[b.index() * n + a.index()] = PairSlot::NoLcm;
                        }
                    }
                }
            }
        }

        let path_lengths = if self.path_lengths.is_empty() {
            None
        } else {
            if self.path_lengths.len() != self.objects.len() {
                return Err(Error::Structure(
                    "path lengths must cover every object".into(),
                ));
            }
            Some(self.path_lengths.values().copied().collect::<Vec<_>>())
        };
        if let (Some(base), Some(lengths)) = (self.basepoint, &path_lengths) {
            if lengths[base.index()] != 0 {
                return Err(Error::Structure(
                    "the basepoint must have path length 0".into(),
                ));
            }
        }
        if path_lengths.is_some() && self.basepoint.is_none() {
            return Err(Error::Structure(
                "path lengths given without a basepoint".into(),
            ));
        }
        if let Some(order) = &self.declared_order {
            let mut seen = vec![false; n];
            for a in order {
                if a.index() >= n || std::mem::replace(&mut seen[a.index()], true) {
                    return Err(Error::Structure(
                        "declared order must list every atom exactly once".into(),
                    ));
                }
            }
            if order.len() != n {
                return Err(Error::Structure(
                    "declared order must list every atom exactly once".into(),
                ));
            }
        }

        Ok(GaussianStructure {
            objects: self.objects,
            atoms: self.atoms,
            entries: self.entries,
            pairs,
            atoms_by_target,
            basepoint: self.basepoint,
            path_lengths,
            declared_order: self.declared_order,
            object_names: self.object_names,
            atom_names: self.atom_names,
        })
    }
}

impl fmt::Display for AtomWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "1@{}", self.source.0);
        }
        let parts: Vec<String> = self.atoms.iter().map(|a| a.0.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}
