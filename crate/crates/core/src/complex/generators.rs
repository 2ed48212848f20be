use super::{Face, SimplicialComplex};
use crate::error::{LabError, Result};

/// `∂(2^A)` for `A = {1, ..., n}`.
pub fn simplex_boundary(n: u32) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(LabError::BadParameters("simplex boundary needs n >= 1".into()));
    }
    let full = Face::new(1..=n);
    let facets = full.vertices().iter().map(|&v| full.without(v));
    SimplicialComplex::new(1..=n, facets)
}

/// Boundary of the `m`-dimensional cross-polytope: the join of `m` copies of
/// `S^0`, with antipodal pairs `{i, i + m}`.
pub fn cross_polytope_boundary(m: u32) -> Result<SimplicialComplex> {
    if m == 0 {
        return Err(LabError::BadParameters("cross-polytope needs m >= 1".into()));
    }
    let mut acc = SimplicialComplex::empty_face_only();
    for i in 1..=m {
        let sphere = SimplicialComplex::new([i, i + m], [Face::new([i]), Face::new([i + m])])?;
        acc = acc.join(&sphere)?;
    }
    Ok(acc)
}

/// Boundary of the cyclic polytope `C(n, dim)` on vertices `1..=n`, via
/// Gale's evenness condition: a `dim`-subset `S` is a facet iff every pair
/// `i < j` outside `S` is separated by an even number of elements of `S`.
pub fn cyclic_polytope_boundary(n: u32, dim: u32) -> Result<SimplicialComplex> {
    if dim < 2 || n <= dim || n > 30 {
        return Err(LabError::BadParameters(format!(
            "cyclic polytope needs n > dim >= 2 (and n <= 30), got n={n}, dim={dim}"
        )));
    }
    let facets = (0u32..(1 << n))
        .filter(|mask| mask.count_ones() == dim)
        .filter(|&mask| gale_evenness(mask, n))
        .map(|mask| Face::new((0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1)));
    SimplicialComplex::new(1..=n, facets)
}

fn gale_evenness(mask: u32, n: u32) -> bool {
    let outside: Vec<u32> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
    outside.windows(2).all(|w| {
        let between = (w[0] + 1..w[1]).filter(|k| mask & (1 << k) != 0).count();
        between % 2 == 0
    })
}
