//! Abstract simplicial complexes on the ground set `1..=m`.
//!
//! A complex is stored through its facets only. Everything else (faces,
//! f-vector, minimal non-faces) is derived on demand.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A face: a strictly increasing list of vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<usize>);

impl Face {
    /// Builds a face from any list of labels; order and repeats are ignored.
    pub fn new(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = labels.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `#F - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// All subsets of this face, empty face included.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        assert!(k < 64, "face too large to expand");
        (0u64..1 << k).map(move |mask| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    fn with_vertex(&self, v: usize) -> Face {
        let mut out = self.0.clone();
        let pos = out.binary_search(&v).unwrap_or_else(|p| p);
        out.insert(pos, v);
        Face(out)
    }

    fn without_index(&self, i: usize) -> Face {
        let mut out = self.0.clone();
        out.remove(i);
        Face(out)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Orders faces by dimension first, then lexicographically.
pub fn graded_order(a: &Face, b: &Face) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Face counts `(f_{-1}, f_0, ..., f_{dim})`, with `f_{-1}` at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        match counts.first() {
            None => return Err(Error::InvalidVector("f-vector is empty".into())),
            Some(&c) if c != 1 => {
                return Err(Error::InvalidVector(format!("f_(-1) must be 1, got {c}")))
            }
            _ => {}
        }
        if let Some(i) = counts.iter().position(|&c| c == 0) {
            return Err(Error::InvalidVector(format!(
                "f_{} is zero; all entries must be positive",
                i as isize - 1
            )));
        }
        Ok(FVector { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of `i`-faces, `i >= -1`. Zero above the dimension.
    pub fn f(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.counts.get(k).copied())
            .unwrap_or(0)
    }

    /// Dimension of the complex it came from.
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }
}

/// An abstract simplicial complex on `1..=m`, stored as its canonical facet list.
///
/// Facets are pairwise incomparable, duplicate free and sorted
/// lexicographically; every vertex of `1..=m` lies in some facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Canonicalizes a list of candidate facets.
    ///
    /// Duplicates and candidates contained in another candidate are dropped.
    /// Isolated vertices are not inferred from `m`; they must be passed as
    /// singleton facets.
    pub fn from_facets<I, F>(m: usize, candidates: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        if m == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut cands = BTreeSet::new();
        for c in candidates {
            let face = Face::new(c.as_ref().iter().copied());
            if let Some(&label) = face.vertices().iter().find(|&&v| v == 0 || v > m) {
                return Err(Error::LabelOutOfRange { label, m });
            }
            cands.insert(face);
        }
        // Larger faces first so each candidate only needs checking against kept facets.
        let mut by_size: Vec<Face> = cands.into_iter().collect();
        by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut facets: Vec<Face> = Vec::new();
        for f in by_size {
            if !facets.iter().any(|g| f.is_subset_of(g)) {
                facets.push(f);
            }
        }
        let mut covered = vec![false; m + 1];
        for f in &facets {
            for &v in f.vertices() {
                covered[v] = true;
            }
        }
        if let Some(vertex) = (1..=m).find(|&v| !covered[v]) {
            return Err(Error::UncoveredVertex { vertex });
        }
        facets.sort();
        Ok(SimplicialComplex {
            vertex_count: m,
            facets,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    /// Every face, empty face included, sorted by dimension then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        let mut out: Vec<Face> = all.into_iter().collect();
        out.sort_by(graded_order);
        out
    }

    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = vec![0u64; (d + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector::new(counts).expect("face counts of a valid complex")
    }

    /// Membership test for a set of labels; order and repeats are ignored.
    pub fn is_face(&self, labels: &[usize]) -> Result<bool> {
        let m = self.vertex_count;
        if let Some(&label) = labels.iter().find(|&&v| v == 0 || v > m) {
            return Err(Error::LabelOutOfRange { label, m });
        }
        Ok(self.contains_face(&Face::new(labels.iter().copied())))
    }

    pub(crate) fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// Inclusion-minimal non-faces: the generators of the Stanley-Reisner ideal.
    ///
    /// Every minimal non-face `S` has `S \ {max S}` as a face, so it is enough
    /// to try extending each face by a vertex above its largest label.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let m = self.vertex_count;
        let mut out = Vec::new();
        for face in self.faces() {
            let start = face.vertices().last().map_or(1, |&v| v + 1);
            for v in start..=m {
                let cand = face.with_vertex(v);
                if self.contains_face(&cand) {
                    continue;
                }
                let minimal =
                    (0..cand.len()).all(|i| self.contains_face(&cand.without_index(i)));
                if minimal {
                    out.push(cand);
                }
            }
        }
        out.sort_by(graded_order);
        out
    }

    /// The smallest complex containing this one and `face`.
    pub fn with_face(&self, face: &Face) -> Result<Self> {
        let mut facets: Vec<&[usize]> = self.facets.iter().map(Face::vertices).collect();
        facets.push(face.vertices());
        SimplicialComplex::from_facets(self.vertex_count, facets)
    }

    /// Whether this is the full simplex `2^[m]`.
    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.vertex_count
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Labels above 9 make the compact `[12][23]` notation ambiguous.
        let sep = if self.vertex_count > 9 { "," } else { "" };
        for facet in &self.facets {
            let labels: Vec<String> = facet.vertices().iter().map(usize::to_string).collect();
            write!(f, "[{}]", labels.join(sep))?;
        }
        Ok(())
    }
}

/// Wire form of a complex: `{"m": 4, "facets": [[1,2],[2,3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(raw: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_facets(raw.m, raw.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson {
            m: c.vertex_count,
            facets: c.facets.into_iter().map(|f| f.0).collect(),
        }
    }
}
