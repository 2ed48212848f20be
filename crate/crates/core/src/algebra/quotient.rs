//! Degree-by-degree model of a graded quotient `R/J`.
//!
//! Linear generators are removed first by solving for some variables, so
//! `R/J` is modelled as `R'/J'` with `R'` a smaller polynomial ring. The
//! monomial generators of `J'` are handled combinatorially: the columns of a
//! degree slice are the monomials outside the monomial part, and only the
//! remaining generators contribute rows to the Macaulay matrix.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use crate::echelon::{kernel, Echelon, SparseRow};
use crate::field::PrimeField;
use crate::monomial::{Monomial, RevLex};
use crate::par;
use crate::poly::HomogPoly;

use super::ideal::{minimalize, GradedIdeal};
use super::seq::IntSeq;

/// A linear change of rings `R -> R' = R/(l_1, ..., l_k)`, solving each
/// independent linear form for one variable.
#[derive(Clone, Debug)]
pub struct LinearSubstitution {
    source_nvars: usize,
    target_nvars: usize,
    images: Vec<HomogPoly>,
    free: Vec<usize>,
}

impl LinearSubstitution {
    pub fn identity(nvars: usize) -> Self {
        Self {
            source_nvars: nvars,
            target_nvars: nvars,
            images: (0..nvars).map(|i| HomogPoly::var(nvars, i)).collect(),
            free: (0..nvars).collect(),
        }
    }

    /// Eliminates one variable per independent form, preferring the
    /// highest-indexed variables.
    pub fn from_forms(nvars: usize, forms: &[HomogPoly], field: &PrimeField) -> Self {
        let mut rows: Vec<Vec<u32>> = forms
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| {
                assert_eq!(f.degree(), 1, "only linear forms can be eliminated");
                f.linear_coefficients()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for col in (0..nvars).rev() {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = field.inv(rows[r][col]);
            for e in rows[r].iter_mut() {
                *e = field.mul(*e, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let factor = rows[i][col];
                    for c in 0..nvars {
                        let sub = field.mul(factor, rows[r][c]);
                        rows[i][c] = field.sub(rows[i][c], sub);
                    }
                }
            }
            pivots.push((col, r));
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let pivot_of: HashMap<usize, usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..nvars).filter(|v| !pivot_of.contains_key(v)).collect();
        let target_nvars = free.len();
        let position: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let images = (0..nvars)
            .map(|v| match pivot_of.get(&v) {
                None => HomogPoly::var(target_nvars, position[&v]),
                Some(&row) => {
                    let coeffs: Vec<u32> = (0..target_nvars)
                        .map(|i| field.neg(rows[row][free[i]]))
                        .collect();
                    HomogPoly::linear(&coeffs, field)
                }
            })
            .collect();
        Self { source_nvars: nvars, target_nvars, images, free }
    }

    pub fn source_nvars(&self) -> usize {
        self.source_nvars
    }

    pub fn target_nvars(&self) -> usize {
        self.target_nvars
    }

    /// Number of eliminated variables.
    pub fn rank(&self) -> usize {
        self.source_nvars - self.target_nvars
    }

    /// Source index of each target variable.
    pub fn free_variables(&self) -> &[usize] {
        &self.free
    }

    pub fn apply(&self, p: &HomogPoly, field: &PrimeField) -> HomogPoly {
        assert_eq!(p.nvars(), self.source_nvars, "polynomial in wrong ring");
        p.substitute(&self.images, self.target_nvars, field)
    }
}

/// How linear generators are treated when building a [`QuotientRing`].
#[derive(Clone, Debug, Default)]
pub enum Elimination {
    /// Eliminate every linear generator of the ideal.
    #[default]
    Auto,
    /// Keep the ring as is.
    None,
    /// Eliminate exactly these forms (each must lie in the ideal).
    Forms(Vec<HomogPoly>),
}

/// One graded piece of `R'/J'`.
#[derive(Debug)]
pub struct DegreeSlice {
    degree: usize,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    echelon: Echelon,
    basis: Vec<u32>,
    basis_pos: Vec<u32>,
}

const NOT_BASIS: u32 = u32::MAX;

impl DegreeSlice {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `dim_k (R/J)_m`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomials of `R'_m` outside the monomial part of `J'`, largest first.
    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    /// Rank of the non-monomial part of `J'_m` modulo the monomial part.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Standard monomials of the quotient in this degree.
    pub fn basis(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.basis.iter().map(|&c| &self.columns[c as usize])
    }

    pub fn column_of(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p` (a target-ring polynomial of this degree) over the
    /// columns, dropping monomials that lie in the monomial part of `J'`.
    pub fn project(&self, p: &HomogPoly) -> SparseRow {
        debug_assert_eq!(p.degree(), self.degree);
        let mut row: SparseRow = p
            .terms()
            .iter()
            .filter_map(|(m, c)| self.index.get(m).map(|&i| (i, *c)))
            .collect();
        row.sort_unstable();
        row
    }

    /// Normal form of a vector over the columns, as a sparse vector over
    /// basis positions.
    pub fn reduce_columns(&self, row: &[(u32, u32)]) -> SparseRow {
        self.echelon
            .reduce(row)
            .into_iter()
            .map(|(c, v)| (self.basis_pos[c as usize], v))
            .collect()
    }

    /// Normal form of `p` in `(R/J)_m`, over basis positions.
    pub fn normal_form(&self, p: &HomogPoly) -> SparseRow {
        self.reduce_columns(&self.project(p))
    }

    /// Whether `p` lies in `J'_m`.
    pub fn contains(&self, p: &HomogPoly) -> bool {
        self.normal_form(p).is_empty()
    }
}

/// A subspace of `R'_m`, over all monomials of degree `m` (largest first).
#[derive(Clone, Debug)]
pub struct Subspace {
    columns: Arc<Vec<Monomial>>,
    echelon: Echelon,
}

impl Subspace {
    pub fn new(field: PrimeField, columns: Arc<Vec<Monomial>>) -> Self {
        let n = columns.len();
        Self { columns, echelon: Echelon::new(field, n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Codimension, i.e. the Hilbert function value of the quotient.
    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn rows(&self) -> &[SparseRow] {
        self.echelon.rows()
    }

    /// Adds a vector (sorted sparse coordinates); returns whether the
    /// dimension grew.
    pub fn insert(&mut self, row: &[(u32, u32)]) -> bool {
        self.echelon.insert(row)
    }

    pub fn contains_vector(&self, row: &[(u32, u32)]) -> bool {
        self.echelon.contains(row)
    }

    /// The vector as a polynomial of degree `m` in the column monomials.
    pub fn vector_to_poly(&self, row: &[(u32, u32)]) -> HomogPoly {
        let nvars = self.columns.first().map_or(0, Monomial::nvars);
        let degree = self.columns.first().map_or(0, Monomial::degree);
        let terms = row.iter().map(|&(c, v)| (self.columns[c as usize].clone(), v)).collect::<Vec<_>>();
        HomogPoly::from_terms(nvars, degree, terms, &self.echelon.field())
    }

    fn check_same_ambient(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.columns, &other.columns) || self.columns == other.columns,
            "subspaces live in different ambient spaces"
        );
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.check_same_ambient(other);
        other.rows().iter().all(|r| self.echelon.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.check_same_ambient(other);
        let mut s = self.clone();
        for r in other.rows() {
            s.insert(r);
        }
        s
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

/// Column list shared by subspaces of `R'_m`.
pub fn degree_columns(nvars: usize, degree: usize, order: &RevLex) -> Arc<Vec<Monomial>> {
    let mut cols = Monomial::all_of_degree(nvars, degree);
    order.sort_descending(&mut cols);
    Arc::new(cols)
}

struct MonomialPart {
    gens: Vec<(Monomial, u64)>,
    by_var: Vec<Vec<usize>>,
}

impl MonomialPart {
    fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let gens: Vec<(Monomial, u64)> = minimalize(gens)
            .into_iter()
            .map(|m| {
                let mask = m.support_mask();
                (m, mask)
            })
            .collect();
        let mut by_var = vec![Vec::new(); nvars];
        for (i, (g, _)) in gens.iter().enumerate() {
            for (v, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    by_var[v].push(i);
                }
            }
        }
        Self { gens, by_var }
    }

    fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens.iter().any(|(g, gm)| gm & !mask == 0 && g.divides(m))
    }

    /// Membership of `s * x_var` given that `s` is outside the ideal.
    fn contains_extension(&self, c: &Monomial, var: usize) -> bool {
        let mask = c.support_mask();
        self.by_var[var].iter().any(|&i| {
            let (g, gm) = &self.gens[i];
            gm & !mask == 0 && g.divides(c)
        })
    }

    fn has_unit(&self) -> bool {
        self.gens.iter().any(|(g, _)| g.degree() == 0)
    }
}

/// `R/J` for a homogeneous ideal `J`, with lazily built degree slices.
pub struct QuotientRing {
    field: PrimeField,
    ideal: GradedIdeal,
    subst: LinearSubstitution,
    order: RevLex,
    monomial_part: MonomialPart,
    others: Vec<HomogPoly>,
    slices: RwLock<Vec<Arc<DegreeSlice>>>,
}

impl std::fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientRing")
            .field("nvars", &self.ideal.nvars())
            .field("target_nvars", &self.subst.target_nvars())
            .field("generators", &self.ideal.generators().len())
            .finish()
    }
}

impl QuotientRing {
    pub fn new(field: PrimeField, ideal: GradedIdeal) -> Self {
        Self::with_options(field, ideal, Elimination::Auto, None)
    }

    /// `order` ranks the variables of the reduced ring (natural order when
    /// `None`).
    pub fn with_options(
        field: PrimeField,
        ideal: GradedIdeal,
        elimination: Elimination,
        order: Option<RevLex>,
    ) -> Self {
        let n = ideal.nvars();
        let subst = match elimination {
            Elimination::None => LinearSubstitution::identity(n),
            Elimination::Auto => {
                let linear: Vec<HomogPoly> =
                    ideal.generators().iter().filter(|g| g.degree() == 1).cloned().collect();
                LinearSubstitution::from_forms(n, &linear, &field)
            }
            Elimination::Forms(forms) => LinearSubstitution::from_forms(n, &forms, &field),
        };
        let target = subst.target_nvars();
        let order = order.unwrap_or_else(|| RevLex::natural(target));
        assert_eq!(order.nvars(), target, "order does not match the reduced ring");
        let mut monomials = Vec::new();
        let mut others = Vec::new();
        for g in ideal.generators() {
            let image = subst.apply(g, &field);
            if image.is_zero() {
                continue;
            }
            if image.is_monomial() {
                monomials.push(image.terms()[0].0.clone());
            } else {
                others.push(image);
            }
        }
        Self {
            field,
            monomial_part: MonomialPart::new(target, monomials),
            others,
            ideal,
            subst,
            order,
            slices: RwLock::new(Vec::new()),
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn substitution(&self) -> &LinearSubstitution {
        &self.subst
    }

    pub fn order(&self) -> &RevLex {
        &self.order
    }

    /// Number of variables of the reduced ring `R'`.
    pub fn target_nvars(&self) -> usize {
        self.subst.target_nvars()
    }

    /// Maps a source-ring polynomial into `R'`.
    pub fn to_target(&self, p: &HomogPoly) -> HomogPoly {
        self.subst.apply(p, &self.field)
    }

    /// Whether a target monomial lies in the monomial part of `J'`.
    pub fn in_monomial_part(&self, m: &Monomial) -> bool {
        self.monomial_part.contains(m)
    }

    /// The degree-`m` slice, building lower degrees as needed.
    pub fn slice(&self, m: usize) -> Arc<DegreeSlice> {
        if let Some(s) = self.slices.read().expect("slice cache").get(m) {
            return Arc::clone(s);
        }
        let mut cache = self.slices.write().expect("slice cache");
        while cache.len() <= m {
            let next = self.build_slice(cache.len(), &cache);
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[m])
    }

    /// `HF(R/J, m)` for `0 <= m <= m_max`.
    pub fn hilbert_function(&self, m_max: usize) -> IntSeq {
        IntSeq::from_values(0, (0..=m_max).map(|m| self.slice(m).dim() as i64).collect())
    }

    fn build_slice(&self, m: usize, lower: &[Arc<DegreeSlice>]) -> DegreeSlice {
        let n = self.target_nvars();
        let mut columns: Vec<Monomial> = if m == 0 {
            if self.monomial_part.has_unit() {
                Vec::new()
            } else {
                vec![Monomial::one(n)]
            }
        } else {
            let prev = &lower[m - 1].columns;
            let mp = &self.monomial_part;
            par::flat_map(prev, |s| {
                let start = s.last_var().unwrap_or(0);
                (start..n)
                    .map(|v| (v, s.mul_var(v)))
                    .filter(|(v, c)| !mp.contains_extension(c, *v))
                    .map(|(_, c)| c)
                    .collect()
            })
        };
        self.order.sort_descending(&mut columns);
        let index: HashMap<Monomial, u32> =
            columns.iter().enumerate().map(|(i, c)| (c.clone(), i as u32)).collect();
        let mut echelon = Echelon::new(self.field, columns.len());
        let mut slice_rows: Vec<SparseRow> = Vec::new();
        if !self.others.is_empty() && !columns.is_empty() {
            let project = |p: &HomogPoly| -> SparseRow {
                let mut row: SparseRow = p
                    .terms()
                    .iter()
                    .filter_map(|(mono, c)| index.get(mono).map(|&i| (i, *c)))
                    .collect();
                row.sort_unstable();
                row
            };
            let relevant: Vec<&HomogPoly> = self.others.iter().filter(|g| g.degree() <= m).collect();
            let by_multiplier: usize =
                relevant.iter().map(|g| lower.get(m - g.degree()).map_or(1, |s| s.columns.len())).sum();
            let incremental = if m >= 1 {
                n * lower[m - 1].rank() + relevant.iter().filter(|g| g.degree() == m).count()
            } else {
                usize::MAX
            };
            if incremental < by_multiplier {
                let prev = &lower[m - 1];
                let prev_rows = prev.echelon.rows();
                slice_rows = par::flat_map(prev_rows, |r| {
                    (0..n)
                        .map(|v| {
                            let mut row: SparseRow = r
                                .iter()
                                .filter_map(|&(c, val)| {
                                    let mono = prev.columns[c as usize].mul_var(v);
                                    index.get(&mono).map(|&i| (i, val))
                                })
                                .collect();
                            row.sort_unstable();
                            row
                        })
                        .collect()
                });
                slice_rows.extend(relevant.iter().filter(|g| g.degree() == m).map(|g| project(g)));
            } else {
                for g in &relevant {
                    let e = m - g.degree();
                    if e == m {
                        slice_rows.push(project(g));
                        continue;
                    }
                    let multipliers: &[Monomial] = &lower[e].columns;
                    slice_rows.extend(par::map(multipliers, |u| project(&g.mul_monomial(u))));
                }
            }
            for r in &slice_rows {
                if r.is_empty() {
                    continue;
                }
                echelon.insert(r);
                if echelon.is_full() {
                    break;
                }
            }
        }
        let mut basis_pos = vec![NOT_BASIS; columns.len()];
        let mut basis = Vec::new();
        for (c, pos) in basis_pos.iter_mut().enumerate() {
            if !echelon.is_pivot(c) {
                *pos = basis.len() as u32;
                basis.push(c as u32);
            }
        }
        DegreeSlice { degree: m, columns, index, echelon, basis, basis_pos }
    }

    /// `J'_m` as a subspace of all of `R'_m`.
    pub fn ideal_space(&self, m: usize) -> Subspace {
        let cols = degree_columns(self.target_nvars(), m, &self.order);
        self.ideal_space_in(m, cols)
    }

    /// Like [`Self::ideal_space`] with caller-supplied columns (all monomials
    /// of degree `m`, largest first).
    pub fn ideal_space_in(&self, m: usize, cols: Arc<Vec<Monomial>>) -> Subspace {
        let slice = self.slice(m);
        let full_index: HashMap<&Monomial, u32> =
            cols.iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
        let mut space = Subspace::new(self.field, Arc::clone(&cols));
        for (i, c) in cols.iter().enumerate() {
            if slice.column_of(c).is_none() {
                space.insert(&[(i as u32, 1)]);
            }
        }
        for r in slice.echelon.rows() {
            let mut row: SparseRow =
                r.iter().map(|&(c, v)| (full_index[&slice.columns[c as usize]], v)).collect();
            row.sort_unstable();
            space.insert(&row);
        }
        space
    }

    /// `(J : u)_m` as a subspace of `R'_m`. `u` is a source-ring polynomial.
    pub fn colon_space(&self, u: &HomogPoly, m: usize) -> Subspace {
        let cols = degree_columns(self.target_nvars(), m, &self.order);
        self.colon_space_in(u, m, cols)
    }

    pub fn colon_space_in(&self, u: &HomogPoly, m: usize, cols: Arc<Vec<Monomial>>) -> Subspace {
        let image_u = self.to_target(u);
        let target = self.slice(m + u.degree());
        let images: Vec<SparseRow> =
            par::map(cols.as_slice(), |b| target.normal_form(&image_u.mul_monomial(b)));
        let mut space = Subspace::new(self.field, Arc::clone(&cols));
        for v in kernel(self.field, target.dim(), &images) {
            space.insert(&v);
        }
        space
    }

    /// Leading monomials of `J_m` in the ring's order: every degree-`m`
    /// monomial of the monomial part together with the pivot columns.
    pub fn initial_span(&self, m: usize) -> BTreeSet<Monomial> {
        let slice = self.slice(m);
        let mut out: BTreeSet<Monomial> = Monomial::all_of_degree(self.target_nvars(), m)
            .into_iter()
            .filter(|c| slice.column_of(c).is_none())
            .collect();
        out.extend(slice.echelon.pivots().map(|c| slice.columns[c].clone()));
        out
    }
}

/// Echelonized span of `{u * g : deg(u * g) = m}` over all monomials of
/// degree `m` (largest first), without any of the shortcuts used by
/// [`QuotientRing`].
pub struct DegreeSpan {
    pub columns: Vec<Monomial>,
    pub echelon: Echelon,
}

impl DegreeSpan {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Leading monomials of the span.
    pub fn leading_monomials(&self) -> BTreeSet<Monomial> {
        self.echelon.pivots().map(|c| self.columns[c].clone()).collect()
    }
}

pub fn ideal_degree_span(ideal: &GradedIdeal, m: usize, order: &RevLex, field: PrimeField) -> DegreeSpan {
    let n = ideal.nvars();
    let mut columns = Monomial::all_of_degree(n, m);
    order.sort_descending(&mut columns);
    let index: HashMap<&Monomial, u32> =
        columns.iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
    let mut echelon = Echelon::new(field, columns.len());
    for g in ideal.generators().iter().filter(|g| g.degree() <= m) {
        for u in Monomial::all_of_degree(n, m - g.degree()) {
            let mut row: SparseRow =
                g.terms().iter().map(|(t, c)| (index[&t.mul(&u)], *c)).collect();
            row.sort_unstable();
            echelon.insert(&row);
        }
        if echelon.is_full() {
            break;
        }
    }
    DegreeSpan { columns, echelon }
}

/// `dim R_m - rank(J_m)` through [`ideal_degree_span`].
pub fn macaulay_hilbert_function(ideal: &GradedIdeal, m_max: usize, field: PrimeField) -> IntSeq {
    let order = RevLex::natural(ideal.nvars());
    IntSeq::from_values(
        0,
        (0..=m_max)
            .map(|m| {
                let span = ideal_degree_span(ideal, m, &order, field);
                (span.columns.len() - span.rank()) as i64
            })
            .collect(),
    )
}

#[cfg(test)]
#[path = "quotient_tests.rs"]
mod tests;
