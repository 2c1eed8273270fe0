use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face of a complex: a non-empty, strictly increasing list of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Sorts and deduplicates the labels. Fails on an empty label list.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Simplex(vertices))
    }

    /// Caller guarantees `vertices` is non-empty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for v in &self.0 {
            for w in rest.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset_of(&self, other: &Simplex) -> bool {
        self.0.len() < other.0.len() && self.is_subset_of(other)
    }

    /// True when one of the two faces strictly contains the other.
    pub fn is_comparable(&self, other: &Simplex) -> bool {
        self.is_proper_subset_of(other) || other.is_proper_subset_of(self)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn shifted(&self, offset: u32) -> Simplex {
        Simplex(self.0.iter().map(|v| v + offset).collect())
    }

    /// All non-empty subsets, including the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 32, "simplex with {n} vertices is too large to expand");
        (1u32..(1 << n)).map(move |mask| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }
}

impl Deref for Simplex {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

/// Canonical order: by cardinality, then lexicographically.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<u32> {
    fn from(s: Simplex) -> Vec<u32> {
        s.0
    }
}

/// A finite set of faces with no closure requirement. Unit spheres and
/// stars live here.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PreComplex {
    faces: Vec<Simplex>,
}

impl PreComplex {
    pub fn new(mut faces: Vec<Simplex>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        PreComplex { faces }
    }

    pub fn empty() -> Self {
        PreComplex::default()
    }

    /// `faces` must already be sorted canonically and free of duplicates.
    pub(crate) fn from_canonical(faces: Vec<Simplex>) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        PreComplex { faces }
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn index_of(&self, x: &Simplex) -> Option<usize> {
        self.faces.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.index_of(x).is_some()
    }

    /// Sorted list of labels used by any face.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.faces.iter().flat_map(|f| f.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_label(&self) -> Option<u32> {
        self.faces.iter().filter_map(|f| f.last().copied()).max()
    }

    /// First face whose proper subset is missing, if any.
    pub fn closure_defect(&self) -> Option<(Simplex, Simplex)> {
        for f in self.faces.iter().filter(|f| f.cardinality() > 1) {
            for i in 0..f.cardinality() {
                let mut sub = f.0.clone();
                sub.remove(i);
                let sub = Simplex(sub);
                if !self.contains(&sub) {
                    return Some((f.clone(), sub));
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.closure_defect().is_none()
    }
}

/// A finite abstract simplicial complex: faces closed under non-empty subsets.
/// The empty set is never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Complex(PreComplex);

impl Complex {
    pub fn empty() -> Self {
        Complex::default()
    }

    /// Wraps a face set after checking closure.
    pub fn from_faces(faces: Vec<Simplex>) -> Result<Self> {
        let pre = PreComplex::new(faces);
        match pre.closure_defect() {
            Some((face, missing)) => Err(Error::NotClosed {
                face: face.0,
                missing: missing.0,
            }),
            None => Ok(Complex(pre)),
        }
    }

    pub(crate) fn from_closed(pre: PreComplex) -> Self {
        debug_assert!(pre.is_closed());
        Complex(pre)
    }

    /// Smallest complex containing every generator.
    pub fn generate<I, V>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u32>>,
    {
        let mut faces = Vec::new();
        for g in generators {
            let s = Simplex::new(g.into())?;
            faces.extend(s.subfaces());
        }
        Ok(Complex(PreComplex::new(faces)))
    }

    pub fn as_pre_complex(&self) -> &PreComplex {
        &self.0
    }

    pub fn into_pre_complex(self) -> PreComplex {
        self.0
    }

    /// Faces that are maximal under inclusion.
    pub fn facets(&self) -> Vec<Simplex> {
        self.faces()
            .iter()
            .filter(|f| !self.faces().iter().any(|g| f.is_proper_subset_of(g)))
            .cloned()
            .collect()
    }
}

impl Deref for Complex {
    type Target = PreComplex;
    fn deref(&self) -> &PreComplex {
        &self.0
    }
}

impl AsRef<PreComplex> for Complex {
    fn as_ref(&self) -> &PreComplex {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn simplex_is_canonical() {
        assert_eq!(s(&[3, 1, 2, 1]).vertices(), &[1, 2, 3]);
        assert_eq!(Simplex::new(vec![]), Err(Error::EmptySimplex));
        assert_eq!(s(&[4, 5]).dimension(), 1);
    }

    #[test]
    fn subset_relations() {
        assert!(s(&[1, 3]).is_subset_of(&s(&[1, 2, 3])));
        assert!(!s(&[1, 4]).is_subset_of(&s(&[1, 2, 3])));
        assert!(s(&[2]).is_proper_subset_of(&s(&[1, 2])));
        assert!(!s(&[1, 2]).is_proper_subset_of(&s(&[1, 2])));
        assert!(s(&[1, 2]).is_comparable(&s(&[1])));
        assert!(!s(&[1]).is_comparable(&s(&[2])));
    }

    #[test]
    fn canonical_order_is_by_size_then_lex() {
        let mut v = vec![s(&[1, 2]), s(&[3]), s(&[1]), s(&[0, 5, 6])];
        v.sort();
        assert_eq!(v, vec![s(&[1]), s(&[3]), s(&[1, 2]), s(&[0, 5, 6])]);
    }

    #[test]
    fn generate_closes_downward() {
        let g = Complex::generate(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(g.len(), 7);
        assert!(g.is_closed());
        assert_eq!(Complex::generate(vec![vec![1]]).unwrap().len(), 1);
        assert_eq!(
            Complex::generate(Vec::<Vec<u32>>::new()).unwrap(),
            Complex::empty()
        );
        assert_eq!(
            Complex::generate(vec![vec![1], vec![]]),
            Err(Error::EmptySimplex)
        );
    }

    #[test]
    fn generate_is_idempotent() {
        let g = Complex::generate(vec![vec![2, 3, 5], vec![1, 4], vec![1, 2], vec![3, 4]]).unwrap();
        let again = Complex::generate(g.faces().iter().map(|f| f.vertices().to_vec())).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn from_faces_rejects_unclosed_sets() {
        let err = Complex::from_faces(vec![s(&[1, 2]), s(&[1])]).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
    }

    #[test]
    fn facets_of_house() {
        let g = Complex::generate(vec![vec![2, 3, 5], vec![1, 4], vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            g.facets(),
            vec![s(&[1, 2]), s(&[1, 4]), s(&[3, 4]), s(&[2, 3, 5])]
        );
    }
}
