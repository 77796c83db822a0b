//! Atoms (variable names), canonical atom sets and fresh-name generation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// A variable name: an alphabetic base plus an optional numeric index.
///
/// `x` and `x0` are different atoms. The display form is the base followed
/// by the decimal index, if any, and [`FromStr`] reads it back exactly.
///
/// Atoms order lexicographically by base, then by index with "no index"
/// before every index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    base: Arc<str>,
    index: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("atom name is empty")]
    Empty,
    #[error("atom base `{0}` must start with an ASCII letter")]
    BadStart(String),
    #[error("atom base `{0}` may only contain ASCII letters and digits")]
    BadChar(String),
    #[error("atom base `{0}` must not end with a digit")]
    TrailingDigit(String),
    #[error("index of `{0}` has a leading zero")]
    LeadingZero(String),
    #[error("index of `{0}` does not fit in 64 bits")]
    IndexOverflow(String),
}

impl Atom {
    /// Builds an atom from a base name and an optional index.
    ///
    /// The base must match `[a-zA-Z][a-zA-Z0-9]*` and must not end in a
    /// digit, otherwise the display form would not read back as the same atom.
    pub fn new(base: &str, index: Option<u64>) -> Result<Atom, AtomError> {
        let first = base.chars().next().ok_or(AtomError::Empty)?;
        if !first.is_ascii_alphabetic() {
            return Err(AtomError::BadStart(base.to_owned()));
        }
        if !base.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(AtomError::BadChar(base.to_owned()));
        }
        if base.ends_with(|c: char| c.is_ascii_digit()) {
            return Err(AtomError::TrailingDigit(base.to_owned()));
        }
        Ok(Atom {
            base: base.into(),
            index,
        })
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn index(&self) -> Option<u64> {
        self.index
    }

    /// Same base, different index.
    pub fn with_index(&self, index: u64) -> Atom {
        Atom {
            base: Arc::clone(&self.base),
            index: Some(index),
        }
    }
}

/// Parses an atom literal, panicking on malformed input.
///
/// Intended for fixed names in tests and examples; use [`str::parse`] for
/// anything user-supplied.
pub fn atom(name: &str) -> Atom {
    match name.parse() {
        Ok(a) => a,
        Err(e) => panic!("invalid atom literal `{name}`: {e}"),
    }
}

impl FromStr for Atom {
    type Err = AtomError;

    fn from_str(s: &str) -> Result<Atom, AtomError> {
        if s.is_empty() {
            return Err(AtomError::Empty);
        }
        let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (base, digits) = s.split_at(split);
        if base.is_empty() {
            return Err(AtomError::BadStart(s.to_owned()));
        }
        let index = if digits.is_empty() {
            None
        } else {
            if digits.len() > 1 && digits.starts_with('0') {
                return Err(AtomError::LeadingZero(s.to_owned()));
            }
            Some(
                digits
                    .parse::<u64>()
                    .map_err(|_| AtomError::IndexOverflow(s.to_owned()))?,
            )
        };
        Atom::new(base, index)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base)?;
        if let Some(i) = self.index {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite set of atoms kept sorted and duplicate-free, so two sets with
/// the same elements are structurally equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AtomSet {
    elems: Vec<Atom>,
}

impl AtomSet {
    pub fn new() -> AtomSet {
        AtomSet::default()
    }

    pub fn singleton(a: Atom) -> AtomSet {
        AtomSet { elems: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.elems.binary_search(a).is_ok()
    }

    /// Returns true if the atom was not already present.
    pub fn insert(&mut self, a: Atom) -> bool {
        match self.elems.binary_search(&a) {
            Ok(_) => false,
            Err(pos) => {
                self.elems.insert(pos, a);
                true
            }
        }
    }

    /// Returns true if the atom was present.
    pub fn remove(&mut self, a: &Atom) -> bool {
        match self.elems.binary_search(a) {
            Ok(pos) => {
                self.elems.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn without(mut self, a: &Atom) -> AtomSet {
        self.remove(a);
        self
    }

    pub fn union(&self, other: &AtomSet) -> AtomSet {
        let mut elems = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => {
                    elems.push(self.elems[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    elems.push(other.elems[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    elems.push(self.elems[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        elems.extend_from_slice(&self.elems[i..]);
        elems.extend_from_slice(&other.elems[j..]);
        AtomSet { elems }
    }

    pub fn is_subset(&self, other: &AtomSet) -> bool {
        self.elems.iter().all(|a| other.contains(a))
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> std::slice::Iter<'_, Atom> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[Atom] {
        &self.elems
    }
}

impl FromIterator<Atom> for AtomSet {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> AtomSet {
        let mut elems: Vec<Atom> = iter.into_iter().collect();
        elems.sort();
        elems.dedup();
        AtomSet { elems }
    }
}

impl Extend<Atom> for AtomSet {
    fn extend<I: IntoIterator<Item = Atom>>(&mut self, iter: I) {
        self.elems.extend(iter);
        self.elems.sort();
        self.elems.dedup();
    }
}

impl IntoIterator for AtomSet {
    type Item = Atom;
    type IntoIter = std::vec::IntoIter<Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<'a> IntoIterator for &'a AtomSet {
    type Item = &'a Atom;
    type IntoIter = std::slice::Iter<'a, Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Picks an atom outside `avoid`.
///
/// The hint is returned as is when it is not in `avoid`; otherwise the
/// result is the first of `base0`, `base1`, ... (using the hint's base) that
/// is not in `avoid`. The result depends only on the two arguments.
pub fn fresh(avoid: &AtomSet, hint: &Atom) -> Atom {
    if !avoid.contains(hint) {
        return hint.clone();
    }
    // avoid is finite, so this terminates after at most |avoid| + 1 probes
    (0u64..)
        .map(|i| hint.with_index(i))
        .find(|a| !avoid.contains(a))
        .expect("a finite set cannot contain every index")
}
