use std::path::{Path, PathBuf};

use crate::complex::{
    cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary, Face, SimplicialComplex,
};
use crate::error::{LabError, Result};

/// How a complex is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Boundary of the simplex on `{1..n}`.
    SimplexBoundary(u32),
    /// Boundary of the `m`-dimensional cross-polytope.
    CrossPolytope(u32),
    /// Boundary of the cyclic polytope with `n` vertices in dimension `dim`.
    Cyclic(u32, u32),
    File(PathBuf),
}

impl GeneratorSpec {
    pub fn resolve(&self) -> Result<SimplicialComplex> {
        match self {
            Self::SimplexBoundary(n) => simplex_boundary(*n),
            Self::CrossPolytope(m) => cross_polytope_boundary(*m),
            Self::Cyclic(n, dim) => cyclic_polytope_boundary(*n, *dim),
            Self::File(path) => SimplicialComplex::from_json_str(&std::fs::read_to_string(path)?),
        }
    }

    /// Canonical corpus name (file specs use their path).
    pub fn name(&self) -> String {
        match self {
            Self::SimplexBoundary(n) => format!("simplex-boundary-{n}"),
            Self::CrossPolytope(m) => format!("cross-{m}"),
            Self::Cyclic(n, dim) => format!("cyclic{n}-{dim}"),
            Self::File(p) => p.display().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GeneratorSpec,
    pub sigma: Option<Face>,
}

impl CorpusEntry {
    pub fn new(spec: GeneratorSpec) -> Self {
        Self { name: spec.name(), spec, sigma: None }
    }
}

fn parse_u32(s: &str, whole: &str) -> Result<u32> {
    s.parse().map_err(|_| LabError::BadSpec(format!("cannot read {whole:?}")))
}

/// Resolves `simplex-boundary-N`, `tetrahedron`, `cross-M`, `octahedron`,
/// `cyclicN-D`, or a path to a complex JSON file.
pub fn parse_corpus_name(name: &str) -> Result<GeneratorSpec> {
    match name {
        "tetrahedron" => return Ok(GeneratorSpec::SimplexBoundary(4)),
        "octahedron" => return Ok(GeneratorSpec::CrossPolytope(3)),
        _ => {}
    }
    if let Some(n) = name.strip_prefix("simplex-boundary-") {
        return Ok(GeneratorSpec::SimplexBoundary(parse_u32(n, name)?));
    }
    if let Some(m) = name.strip_prefix("cross-") {
        return Ok(GeneratorSpec::CrossPolytope(parse_u32(m, name)?));
    }
    if let Some(rest) = name.strip_prefix("cyclic") {
        if let Some((n, d)) = rest.split_once('-') {
            if let (Ok(n), Ok(d)) = (n.parse(), d.parse()) {
                return Ok(GeneratorSpec::Cyclic(n, d));
            }
        }
    }
    if Path::new(name).is_file() {
        return Ok(GeneratorSpec::File(PathBuf::from(name)));
    }
    Err(LabError::BadSpec(format!("{name:?} is neither a corpus name nor a readable file")))
}

/// The reference complexes, smallest first.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    use GeneratorSpec::*;
    [
        SimplexBoundary(4),
        SimplexBoundary(5),
        SimplexBoundary(6),
        CrossPolytope(2),
        CrossPolytope(3),
        CrossPolytope(4),
        Cyclic(6, 3),
        Cyclic(7, 4),
        Cyclic(10, 6),
    ]
    .into_iter()
    .map(CorpusEntry::new)
    .collect()
}

/// `(complex, face)` pairs for theorem sweeps: for each complex below and
/// each face dimension `1 ..= min(3, dim)`, the first and last face in
/// lexicographic order.
pub fn sweep_instances() -> Result<Vec<(CorpusEntry, Face)>> {
    use GeneratorSpec::*;
    let mut out = Vec::new();
    for spec in [
        SimplexBoundary(4),
        SimplexBoundary(5),
        SimplexBoundary(6),
        CrossPolytope(3),
        CrossPolytope(4),
        Cyclic(6, 3),
        Cyclic(7, 4),
    ] {
        let entry = CorpusEntry::new(spec);
        let d = entry.spec.resolve()?;
        for q in 1..=d.dim().min(3) {
            let faces = d.faces_of_dim(q);
            let mut picks = vec![faces[0].clone()];
            if faces.len() > 1 {
                picks.push(faces[faces.len() - 1].clone());
            }
            out.extend(picks.into_iter().map(|f| (entry.clone(), f)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(parse_corpus_name("tetrahedron").unwrap(), GeneratorSpec::SimplexBoundary(4));
        assert_eq!(parse_corpus_name("cyclic10-6").unwrap(), GeneratorSpec::Cyclic(10, 6));
        assert_eq!(parse_corpus_name("cross-3").unwrap(), GeneratorSpec::CrossPolytope(3));
        assert!(matches!(parse_corpus_name("no-such-thing"), Err(LabError::BadSpec(_))));
        for e in standard_corpus() {
            assert_eq!(parse_corpus_name(&e.name).unwrap(), e.spec);
        }
    }

    #[test]
    fn sweep_covers_all_regimes() {
        let sweep = sweep_instances().unwrap();
        assert!(sweep.len() >= 25);
        let mut regimes = [false; 3];
        for (entry, face) in &sweep {
            let d = (entry.spec.resolve().unwrap().dim() + 1) as usize;
            let (_, p2) = crate::stellar::middle_degrees(d);
            let q = face.dim() as usize;
            regimes[(q.cmp(&p2) as i8 + 1) as usize] = true;
        }
        assert_eq!(regimes, [true; 3]);
    }
}
