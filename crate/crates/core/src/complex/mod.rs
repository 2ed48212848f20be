//! Simplicial complexes stored by their facets, with the usual
//! combinatorial operations and face-count vectors.

mod generators;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{LabError, Result};
use crate::monomial::binomial;

pub use generators::{cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary};

/// A face: a sorted set of vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension: cardinality minus one.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: u32) -> Face {
        Face::new(self.0.iter().copied().chain(std::iter::once(v)))
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 32, "face too large to enumerate");
        (0u32..(1u32 << n)).map(move |mask| {
            Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v)
    }
}

/// A simplicial complex on an explicit vertex set, represented by its
/// facets. Faces are all subsets of facets.
///
/// The facet list is kept lexicographically sorted and forms an antichain.
/// A complex with no facets at all is the void complex; the complex whose
/// only face is the empty face has the single facet `{}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Face>,
}

/// Face counts `f_{-1}, f_0, ..., f_{dim}` stored from index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<i64>);

/// `h_0, ..., h_d` with `d = dim + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(
        vertices: impl IntoIterator<Item = u32>,
        faces: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            if let Some(v) = f.vertices().iter().find(|v| !vertices.contains(v)) {
                return Err(LabError::BadParameters(format!(
                    "face {f:?} uses vertex {v} outside the vertex set"
                )));
            }
        }
        Ok(Self::from_parts(vertices.into_iter().collect(), faces.into_iter().collect()))
    }

    /// Complex whose vertex set is the union of the faces.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        let faces: Vec<Face> = faces.into_iter().collect();
        let vertices: BTreeSet<u32> =
            faces.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        Self::from_parts(vertices.into_iter().collect(), faces)
    }

    fn from_parts(vertices: Vec<u32>, mut faces: Vec<Face>) -> Self {
        // longest first so that maximality only needs earlier entries
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Self { vertices, facets }
    }

    /// The complex `{∅}` on an empty vertex set.
    pub fn empty_face_only() -> Self {
        Self { vertices: Vec::new(), facets: vec![Face::empty()] }
    }

    /// The full simplex `2^A`.
    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        Self::from_faces([Face::new(vertices)])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximum facet dimension (`-1` for `{∅}`, `-2` for the void complex).
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(Face::dim).max().unwrap_or(-2)
    }

    /// Vertices that appear in some face.
    pub fn support(&self) -> Vec<u32> {
        let s: BTreeSet<u32> =
            self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        s.into_iter().collect()
    }

    /// The same complex with its vertex set shrunk to its support.
    pub fn restrict_to_support(&self) -> Self {
        Self { vertices: self.support(), facets: self.facets.clone() }
    }

    pub fn is_face(&self, s: &Face) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    fn require_face(&self, s: &Face) -> Result<()> {
        if self.is_face(s) {
            Ok(())
        } else {
            Err(LabError::NotAFace(format!("{s:?}")))
        }
    }

    /// Every face, including the empty one, sorted by size then
    /// lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut all: BTreeSet<Face> = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        let mut v: Vec<Face> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Faces of dimension `k`.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.dim() == k).collect()
    }

    /// `lk_D(s)` on the vertex set `supp(D) \ s`.
    pub fn link(&self, s: &Face) -> Result<Self> {
        self.require_face(s)?;
        let facets: Vec<Face> =
            self.facets.iter().filter(|f| s.is_subset(f)).map(|f| f.minus(s)).collect();
        let vertices: Vec<u32> =
            self.support().into_iter().filter(|v| !s.contains(*v)).collect();
        Ok(Self::from_parts(vertices, facets))
    }

    /// `star_D(s)`: faces whose union with `s` is a face.
    pub fn star(&self, s: &Face) -> Result<Self> {
        self.require_face(s)?;
        let facets: Vec<Face> = self.facets.iter().filter(|f| s.is_subset(f)).cloned().collect();
        Ok(Self::from_parts(self.vertices.clone(), facets))
    }

    /// The join `D1 * D2` over disjoint vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(v) = self.vertices.iter().find(|v| other.vertices.binary_search(v).is_ok()) {
            return Err(LabError::VertexClash(format!("vertex {v} appears in both complexes")));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b));
            }
        }
        let vertices = self.vertices.iter().chain(&other.vertices).copied();
        Self::new(vertices, facets)
    }

    /// Stellar subdivision of `s` with new vertex `j`:
    /// `(D \ star s) ∪ (2^{j} * lk s * ∂s)`.
    pub fn stellar_subdivision(&self, s: &Face, j: u32) -> Result<Self> {
        self.require_face(s)?;
        if s.dim() < 1 {
            return Err(LabError::FaceTooSmall(format!("{s:?}")));
        }
        if self.vertices.binary_search(&j).is_ok() {
            return Err(LabError::VertexClash(format!("new vertex {j} already present")));
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            if !s.is_subset(f) {
                facets.push(f.clone());
                continue;
            }
            for &v in s.vertices() {
                facets.push(f.without(v).with(j));
            }
        }
        let vertices = self.vertices.iter().copied().chain(std::iter::once(j));
        Self::new(vertices, facets)
    }

    pub fn f_vector(&self) -> FVector {
        let d = (self.dim() + 1).max(0) as usize;
        let mut f = vec![0i64; d + 1];
        if self.is_void() {
            return FVector(vec![0]);
        }
        for face in self.faces() {
            f[face.len()] += 1;
        }
        FVector(f)
    }

    /// `h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
    pub fn h_vector(&self) -> HVector {
        let FVector(f) = self.f_vector();
        let d = f.len() - 1;
        let h = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial((d - i) as u64, (k - i) as u64) as i64 * f[i]
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }

    /// Reduced Euler characteristic `sum_{i>=-1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let FVector(f) = self.f_vector();
        f.iter()
            .enumerate()
            .map(|(idx, &c)| if idx % 2 == 1 { c } else { -c })
            .sum()
    }

    /// Whether some vertex is a cone point (lies in every facet).
    pub fn is_cone(&self) -> bool {
        self.vertices.iter().any(|&v| self.facets.iter().all(|f| f.contains(v)))
    }

    /// Smallest label not used by the complex.
    pub fn fresh_vertex(&self) -> u32 {
        self.vertices.last().map_or(0, |v| v + 1)
    }

    /// Faces of `self` that are minimal among non-faces on the vertex set.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let mut out = BTreeSet::new();
        for f in self.faces() {
            let start = f.vertices().last().map_or(0, |&m| m.saturating_add(1));
            for &v in self.vertices.iter().filter(|&&v| v >= start) {
                if f.contains(v) {
                    continue;
                }
                let cand = f.with(v);
                if self.is_face(&cand) {
                    continue;
                }
                if cand.vertices().iter().all(|&u| u == v || self.is_face(&cand.without(u))) {
                    out.insert(cand);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertices.clone(),
            facets: self.facets.iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("complex serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: ComplexJson = serde_json::from_str(s)?;
        raw.into_complex()
    }

    /// SHA-256 of the canonical JSON form, hex encoded.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json_string().as_bytes()))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(vertices={:?}, facets={:?})", self.vertices, self.facets)
    }
}

/// `{"vertices":[...],"facets":[[...],...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexJson {
    pub fn into_complex(self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.vertices, self.facets.into_iter().map(Face::new))
    }
}
