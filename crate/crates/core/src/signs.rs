//! Sign vectors: topes, element subsets and integer sums.
//!
//! Elements of the ground set are numbered `1..=t` everywhere in the public
//! API. Topes store their entries 0-based internally.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of ground-set elements, at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSize(usize);

impl GroundSize {
    pub fn new(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidGroundSize(t));
        }
        Ok(GroundSize(t))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// A maximal covector: every entry is -1 or +1.
///
/// Ordering is lexicographic with -1 < +1, leftmost entry most significant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tope(Vec<i8>);

impl Tope {
    pub fn from_signs<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<i64>,
    {
        let signs = entries
            .into_iter()
            .map(|s| match s.into() {
                1 => Ok(1),
                -1 => Ok(-1),
                other => Err(Error::InvalidSign(other)),
            })
            .collect::<Result<Vec<i8>>>()?;
        if signs.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Tope(signs))
    }

    /// Sign of element `e` (1-based).
    pub fn sign(&self, e: usize) -> i8 {
        self.0[e - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    fn check_len(&self, other: &Tope) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Tope with element `e` (1-based) flipped.
    pub fn flipped(&self, e: usize) -> Tope {
        let mut signs = self.0.clone();
        signs[e - 1] = -signs[e - 1];
        Tope(signs)
    }

    pub fn as_integers(&self) -> IntegerVector {
        IntegerVector(self.0.iter().map(|&s| s as i64).collect())
    }
}

impl Neg for &Tope {
    type Output = Tope;

    fn neg(self) -> Tope {
        Tope(self.0.iter().map(|s| -s).collect())
    }
}

impl Neg for Tope {
    type Output = Tope;

    fn neg(self) -> Tope {
        -&self
    }
}

impl fmt::Display for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|&x| if x > 0 { '+' } else { '-' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tope({self})")
    }
}

impl FromStr for Tope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::ParseTope(s.to_string())),
            })
            .collect::<Result<Vec<i8>>>()?;
        if signs.is_empty() {
            return Err(Error::ParseTope(s.to_string()));
        }
        Ok(Tope(signs))
    }
}

impl Serialize for Tope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subset of the ground set `{1, .., t}`, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ElementSet(BTreeSet<usize>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(BTreeSet::new())
    }

    /// The full ground set `{1, .., t}`.
    pub fn full(t: usize) -> Self {
        ElementSet((1..=t).collect())
    }

    /// Builds a set and checks every member against `1..=t`.
    pub fn checked<I: IntoIterator<Item = usize>>(t: usize, members: I) -> Result<Self> {
        let set = ElementSet(members.into_iter().collect());
        set.check_within(t)?;
        Ok(set)
    }

    pub fn check_within(&self, t: usize) -> Result<()> {
        match self.0.iter().find(|&&e| e == 0 || e > t) {
            Some(&element) => Err(Error::ElementOutOfRange { element, t }),
            None => Ok(()),
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Componentwise integer vector, e.g. a sum of topes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerVector(pub Vec<i64>);

impl IntegerVector {
    pub fn zeros(t: usize) -> Self {
        IntegerVector(vec![0; t])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// True when this vector equals the given tope entry by entry.
    pub fn equals_tope(&self, tope: &Tope) -> bool {
        self.len() == tope.len()
            && self
                .0
                .iter()
                .zip(tope.entries())
                .all(|(&a, &b)| a == b as i64)
    }

    pub fn add_tope(&mut self, tope: &Tope) -> Result<()> {
        if tope.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: tope.len(),
            });
        }
        for (acc, &s) in self.0.iter_mut().zip(tope.entries()) {
            *acc += s as i64;
        }
        Ok(())
    }
}

/// The all-ones tope of length `t`.
pub fn positive_tope(t: usize) -> Result<Tope> {
    let t = GroundSize::new(t)?;
    Ok(Tope(vec![1; t.get()]))
}

/// Negates the entries of `tope` on the elements of `set`.
pub fn reorient(tope: &Tope, set: &ElementSet) -> Result<Tope> {
    set.check_within(tope.len())?;
    let mut signs = tope.0.clone();
    for e in set.iter() {
        signs[e - 1] = -signs[e - 1];
    }
    Ok(Tope(signs))
}

pub fn negative_part(tope: &Tope) -> ElementSet {
    (1..=tope.len()).filter(|&e| tope.sign(e) < 0).collect()
}

pub fn positive_part(tope: &Tope) -> ElementSet {
    (1..=tope.len()).filter(|&e| tope.sign(e) > 0).collect()
}

/// Elements on which the two topes disagree.
pub fn separation_set(a: &Tope, b: &Tope) -> Result<ElementSet> {
    a.check_len(b)?;
    Ok((1..=a.len()).filter(|&e| a.sign(e) != b.sign(e)).collect())
}

/// Graph distance between two topes: the size of their separation set.
pub fn distance(a: &Tope, b: &Tope) -> Result<usize> {
    a.check_len(b)?;
    Ok(hamming(a, b))
}

/// Hamming distance for topes already known to share a length.
pub(crate) fn hamming(a: &Tope, b: &Tope) -> usize {
    a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count()
}

/// `S(base, a) ⊆ S(base, b)` for equal-length topes.
pub(crate) fn separation_within(base: &Tope, a: &Tope, b: &Tope) -> bool {
    base.0
        .iter()
        .zip(&a.0)
        .zip(&b.0)
        .all(|((z, x), y)| x == z || y != z)
}

/// Componentwise sum; the empty list sums to the zero vector of length `t`.
pub fn tope_sum<'a, I>(t: usize, topes: I) -> Result<IntegerVector>
where
    I: IntoIterator<Item = &'a Tope>,
{
    let mut sum = IntegerVector::zeros(t);
    for tope in topes {
        sum.add_tope(tope)?;
    }
    Ok(sum)
}
