//! Reduced simplicial homology over GF(p) and the Gorenstein* test.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::echelon::{Echelon, SparseRow};
use crate::error::{LabError, Result};
use crate::field::PrimeField;
use crate::par;

/// Augmented chain complex of a simplicial complex over GF(p).
pub struct ChainComplex {
    field: PrimeField,
    /// `faces[k]` lists the faces of dimension `k - 1`.
    faces: Vec<Vec<Face>>,
}

impl ChainComplex {
    pub fn new(d: &SimplicialComplex, field: PrimeField) -> Self {
        let mut faces: Vec<Vec<Face>> = vec![Vec::new(); (d.dim() + 2).max(0) as usize];
        for f in d.faces() {
            faces[f.len()].push(f);
        }
        Self { field, faces }
    }

    /// Columns of the boundary map from dimension `k` to `k - 1`, as sparse
    /// vectors over the faces of dimension `k - 1`.
    pub fn boundary(&self, k: i64) -> Vec<SparseRow> {
        let idx = (k + 1) as usize;
        if k < 0 || idx >= self.faces.len() {
            return Vec::new();
        }
        let lower: HashMap<&Face, u32> =
            self.faces[idx - 1].iter().enumerate().map(|(i, f)| (f, i as u32)).collect();
        let f = &self.field;
        self.faces[idx]
            .iter()
            .map(|face| {
                let mut col: SparseRow = face
                    .vertices()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let sign = if i % 2 == 0 { 1 } else { f.neg(1) };
                        (lower[&face.without(v)], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }

    pub fn rank_of_boundary(&self, k: i64) -> usize {
        let cols = self.boundary(k);
        let idx = (k + 1) as usize;
        if cols.is_empty() {
            return 0;
        }
        let mut e = Echelon::new(self.field, self.faces[idx - 1].len());
        for c in &cols {
            e.insert(c);
            if e.is_full() {
                break;
            }
        }
        e.rank()
    }

    pub fn count(&self, k: i64) -> usize {
        self.faces.get((k + 1) as usize).map_or(0, Vec::len)
    }
}

/// Reduced Betti numbers indexed by dimension `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub prime: u32,
    pub betti: Vec<usize>,
}

impl HomologyProfile {
    /// `β̃_k` for `k >= -1`; zero outside the stored range.
    pub fn get(&self, k: i64) -> usize {
        if k < -1 {
            return 0;
        }
        self.betti.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Homology of a sphere of dimension `dim`.
    pub fn is_sphere_of_dim(&self, dim: i64) -> bool {
        self.betti
            .iter()
            .enumerate()
            .all(|(i, &b)| b == usize::from(i as i64 - 1 == dim))
            && dim + 1 < self.betti.len() as i64
    }
}

pub fn reduced_homology(d: &SimplicialComplex, field: PrimeField) -> Result<HomologyProfile> {
    if d.is_void() {
        return Err(LabError::BadParameters("homology of the void complex".into()));
    }
    let chains = ChainComplex::new(d, field);
    let top = d.dim();
    let ranks: Vec<usize> = (-1..=top + 1).map(|k| chains.rank_of_boundary(k)).collect();
    let betti = (-1..=top)
        .map(|k| {
            let i = (k + 1) as usize;
            chains.count(k) - ranks[i] - ranks[i + 1]
        })
        .collect();
    Ok(HomologyProfile { prime: field.modulus(), betti })
}

/// Outcome of the Gorenstein* test, with the first obstruction found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub is_gorenstein_star: bool,
    pub reason: Option<String>,
}

/// `D` is Gorenstein* over GF(p) iff its support is its vertex set, it is not
/// a cone, and every link (including `D` itself) has the homology of a
/// sphere of the link's dimension.
pub fn gorenstein_star_report(d: &SimplicialComplex, field: PrimeField) -> GorensteinReport {
    let fail = |reason: String| GorensteinReport { is_gorenstein_star: false, reason: Some(reason) };
    if d.is_void() {
        return fail("void complex".into());
    }
    if d.support() != d.vertices() {
        return fail("support differs from vertex set".into());
    }
    if d.is_cone() {
        return fail("complex is a cone".into());
    }
    let faces = d.faces();
    let bad = par::map(&faces, |tau| {
        let link = d.link(tau).expect("face of d");
        let h = reduced_homology(&link, field).expect("link is not void");
        (!h.is_sphere_of_dim(link.dim())).then(|| format!("link of {tau:?} has betti {:?}", h.betti))
    });
    match bad.into_iter().flatten().next() {
        Some(reason) => fail(reason),
        None => GorensteinReport { is_gorenstein_star: true, reason: None },
    }
}

pub fn is_gorenstein_star(d: &SimplicialComplex, field: PrimeField) -> bool {
    gorenstein_star_report(d, field).is_gorenstein_star
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary};

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn sphere_and_circle() {
        let h = reduced_homology(&simplex_boundary(4).unwrap(), f()).unwrap();
        assert_eq!(h.betti, vec![0, 0, 0, 1]);
        let pt = reduced_homology(&SimplicialComplex::simplex([1]), f()).unwrap();
        assert_eq!(pt.betti, vec![0, 0]);
        let sq = SimplicialComplex::from_faces([[1, 2], [2, 3], [3, 4], [1, 4]].map(Face::from));
        assert_eq!(reduced_homology(&sq, f()).unwrap().betti, vec![0, 0, 1]);
        let empty = reduced_homology(&SimplicialComplex::empty_face_only(), f()).unwrap();
        assert_eq!(empty.betti, vec![1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let d = cyclic_polytope_boundary(7, 4).unwrap();
        let chains = ChainComplex::new(&d, f());
        let field = f();
        for k in 1..=d.dim() {
            let upper = chains.boundary(k);
            let lower = chains.boundary(k - 1);
            for col in &upper {
                let mut acc: HashMap<u32, u32> = HashMap::new();
                for &(i, v) in col {
                    for &(j, w) in &lower[i as usize] {
                        let e = acc.entry(j).or_insert(0);
                        *e = field.add(*e, field.mul(v, w));
                    }
                }
                assert!(acc.values().all(|&v| v == 0));
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_f_vector() {
        for d in [cross_polytope_boundary(3).unwrap(), cyclic_polytope_boundary(6, 3).unwrap()] {
            let h = reduced_homology(&d, f()).unwrap();
            assert_eq!(h.euler_characteristic(), d.reduced_euler_characteristic());
        }
    }

    #[test]
    fn gorenstein_star_examples() {
        assert!(is_gorenstein_star(&simplex_boundary(4).unwrap(), f()));
        assert!(!is_gorenstein_star(&SimplicialComplex::simplex([1, 2, 3]), f()));
        assert!(is_gorenstein_star(&cyclic_polytope_boundary(10, 6).unwrap(), f()));
        assert!(is_gorenstein_star(&cross_polytope_boundary(4).unwrap(), f()));
        // a path is a manifold with boundary, not a sphere
        let path = SimplicialComplex::from_faces([[1, 2], [2, 3]].map(Face::from));
        assert!(!is_gorenstein_star(&path, f()));
        // extra isolated label outside the support
        let padded = SimplicialComplex::new(1..=5, simplex_boundary(4).unwrap().facets().to_vec()).unwrap();
        assert!(!is_gorenstein_star(&padded, f()));
    }

    #[test]
    fn links_and_subdivisions_stay_gorenstein() {
        let d = cyclic_polytope_boundary(7, 4).unwrap();
        for s in d.faces().into_iter().filter(|s| !s.is_empty()) {
            let l = d.link(&s).unwrap().restrict_to_support();
            assert!(is_gorenstein_star(&l, f()) || l.dim() < 0, "{s:?}");
            assert_eq!(l.dim(), d.dim() - s.dim() - 1);
            if s.dim() >= 1 {
                let e = d.stellar_subdivision(&s, 100).unwrap();
                assert!(is_gorenstein_star(&e, f()));
            }
        }
    }
}
