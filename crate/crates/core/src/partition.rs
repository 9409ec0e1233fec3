use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    A,
    B,
    C,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::A, Class::B, Class::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Class::A => 'A',
            Class::B => 'B',
            Class::C => 'C',
        };
        write!(f, "{c}")
    }
}

/// Total assignment of vertices `0..n` to the classes A, B, C.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tripartition {
    labels: Vec<Class>,
}

impl Tripartition {
    pub fn new(labels: Vec<Class>) -> Self {
        Self { labels }
    }

    pub fn all_in(n: usize, class: Class) -> Self {
        Self { labels: vec![class; n] }
    }

    /// Builds a partition from its three classes, which must be disjoint
    /// and cover `0..n`.
    pub fn from_sets(n: usize, sets: [&[Vertex]; 3]) -> Result<Self> {
        let mut labels: Vec<Option<Class>> = vec![None; n];
        for (class, set) in Class::ALL.into_iter().zip(sets) {
            for &v in set {
                let slot = labels
                    .get_mut(v as usize)
                    .ok_or(Error::VertexOutOfRange { vertex: v, n })?;
                if slot.replace(class).is_some() {
                    return Err(Error::OverlappingParts(v));
                }
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::UncoveredVertex(v as Vertex)))
            .collect::<Result<_>>()?;
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Class] {
        &self.labels
    }

    pub fn class_of(&self, v: Vertex) -> Class {
        self.labels[v as usize]
    }

    pub fn set_class(&mut self, v: Vertex, class: Class) {
        self.labels[v as usize] = class;
    }

    pub fn members(&self, class: Class) -> Vec<Vertex> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(v, _)| v as Vertex)
            .collect()
    }

    pub fn sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for c in &self.labels {
            sizes[c.index()] += 1;
        }
        sizes
    }

    /// Exchanges the labels `x` and `y` everywhere.
    pub fn swapped(&self, x: Class, y: Class) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|&c| match c {
                c if c == x => y,
                c if c == y => x,
                c => c,
            })
            .collect();
        Self { labels }
    }

    /// The same partition with class `class` playing the role of C.
    pub fn with_c_role(&self, class: Class) -> Self {
        self.swapped(class, Class::C)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.labels.len() == n {
            Ok(())
        } else {
            Err(Error::PartitionSize { got: self.labels.len(), expected: n })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn other(self) -> Self {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// Total assignment of vertices `0..n` to two sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    labels: Vec<Side>,
}

impl Bipartition {
    pub fn new(labels: Vec<Side>) -> Self {
        Self { labels }
    }

    pub fn all_in(n: usize, side: Side) -> Self {
        Self { labels: vec![side; n] }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Side] {
        &self.labels
    }

    pub fn side_of(&self, v: Vertex) -> Side {
        self.labels[v as usize]
    }

    pub fn set_side(&mut self, v: Vertex, side: Side) {
        self.labels[v as usize] = side;
    }

    pub fn members(&self, side: Side) -> Vec<Vertex> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == side)
            .map(|(v, _)| v as Vertex)
            .collect()
    }

    pub fn flipped(&self) -> Self {
        Self { labels: self.labels.iter().map(|s| s.other()).collect() }
    }
}

/// Multiset of three class labels, stored as per-class counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature([u8; 3]);

impl Signature {
    pub fn from_classes(classes: [Class; 3]) -> Self {
        let mut counts = [0u8; 3];
        for c in classes {
            counts[c.index()] += 1;
        }
        Self(counts)
    }

    /// Counts of A, B and C labels; they sum to 3.
    pub fn counts(self) -> [u8; 3] {
        self.0
    }

    /// All ten signatures.
    pub fn all() -> impl Iterator<Item = Signature> {
        (0..=3u8).flat_map(|a| (0..=3 - a).map(move |b| Signature([a, b, 3 - a - b])))
    }

    pub(crate) fn slot(self) -> usize {
        usize::from(self.0[0]) * 4 + usize::from(self.0[1])
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Parses strings such as `"ABC"` or `"aac"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSignature(s.to_string());
        let classes: Vec<Class> = s
            .chars()
            .map(|ch| match ch.to_ascii_uppercase() {
                'A' => Ok(Class::A),
                'B' => Ok(Class::B),
                'C' => Ok(Class::C),
                _ => Err(bad()),
            })
            .collect::<Result<_>>()?;
        let classes: [Class; 3] = classes.try_into().map_err(|_| bad())?;
        Ok(Self::from_classes(classes))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (class, &count) in Class::ALL.iter().zip(&self.0) {
            for _ in 0..count {
                write!(f, "{class}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_sets_checks_cover_and_disjointness() {
        let p = Tripartition::from_sets(4, [&[0, 3], &[1], &[2]]).unwrap();
        assert_eq!(p.labels(), &[Class::A, Class::B, Class::C, Class::A]);
        assert_eq!(p.sizes(), [2, 1, 1]);
        assert_eq!(
            Tripartition::from_sets(3, [&[0, 1], &[1], &[2]]),
            Err(Error::OverlappingParts(1))
        );
        assert_eq!(Tripartition::from_sets(3, [&[0], &[1], &[]]), Err(Error::UncoveredVertex(2)));
    }

    #[test]
    fn c_role_swaps_two_labels() {
        let p = Tripartition::from_sets(3, [&[0], &[1], &[2]]).unwrap();
        let q = p.with_c_role(Class::A);
        assert_eq!(q.labels(), &[Class::C, Class::B, Class::A]);
        assert_eq!(p.with_c_role(Class::C), p);
    }

    #[test]
    fn signatures() {
        assert_eq!(Signature::all().count(), 10);
        let s: Signature = "CAB".parse().unwrap();
        assert_eq!(s.counts(), [1, 1, 1]);
        assert_eq!(s.to_string(), "ABC");
        assert_eq!("bba".parse::<Signature>().unwrap().to_string(), "ABB");
        assert!("AB".parse::<Signature>().is_err());
        assert!("ABD".parse::<Signature>().is_err());
        let slots: std::collections::HashSet<_> = Signature::all().map(|s| s.slot()).collect();
        assert_eq!(slots.len(), 10);
    }
}
