//! Toric input data, Euler-sequence maps and the bundle checks built on them.
//!
//! A smooth toric variety enters as its Cox data: one homogeneous coordinate
//! per ray, the class of each coordinate divisor in the Picard group, and the
//! primitive collections. A bundle is the cokernel of a map
//! `O^r → ⊕ O(D_ρ)` given as a `#rays × r` matrix of sections.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, radical_member, IdealPresentation};
use crate::linalg;
use crate::poly::{parse_poly, Monomial, MonomialOrder, Polynomial, Rational, Variable, VariableTable};
use crate::rings::{class_table, divisor_class, stanley_reisner_ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricData {
    coordinates: Vec<String>,
    picard_rank: usize,
    grading: Vec<Vec<i64>>,
    primitive_collections: Vec<Vec<usize>>,
    irrelevant_generators: Vec<Vec<usize>>,
    table: Arc<VariableTable>,
}

/// Minimal sets meeting every collection, i.e. the squarefree generators of
/// the irrelevant ideal `∩_C ⟨x_ρ : ρ ∈ C⟩`.
fn minimal_transversals(n: usize, collections: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    // all subsets in order of size, so minimality is a subset test against earlier hits
    for k in 0..=n {
        for s in linalg::combinations(n, k) {
            let hits_all = collections.iter().all(|c| c.iter().any(|x| s.contains(x)));
            let minimal = !found.iter().any(|f| f.iter().all(|x| s.contains(x)));
            if hits_all && minimal {
                found.push(s);
            }
        }
    }
    found
}

impl ToricData {
    /// Validates shapes and that the irrelevant generators are the minimal
    /// transversals of the primitive collections.
    pub fn new(
        coordinates: Vec<String>,
        picard_rank: usize,
        grading: Vec<Vec<i64>>,
        primitive_collections: Vec<Vec<usize>>,
        irrelevant_generators: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = coordinates.len();
        if grading.len() != n || grading.iter().any(|row| row.len() != picard_rank) {
            return Err(Error::Dimension(format!(
                "grading matrix must be {n} x {picard_rank} to match the coordinates and Picard rank"
            )));
        }
        let in_range = |sets: &[Vec<usize>]| sets.iter().flatten().all(|&i| i < n);
        if !in_range(&primitive_collections) || !in_range(&irrelevant_generators) {
            return Err(Error::Dimension("coordinate index out of range".into()));
        }
        let canon = |sets: &[Vec<usize>]| -> BTreeSet<BTreeSet<usize>> {
            sets.iter().map(|s| s.iter().copied().collect()).collect()
        };
        let expected = minimal_transversals(n, &primitive_collections);
        if canon(&expected) != canon(&irrelevant_generators) {
            return Err(Error::UnsupportedToric("irrelevant generators do not match the primitive collections".into()));
        }
        let table =
            Arc::new(VariableTable::new(coordinates.iter().map(|c| Variable::generator(c.clone(), 1)).collect())?);
        Ok(ToricData { coordinates, picard_rank, grading, primitive_collections, irrelevant_generators, table })
    }

    /// As [`new`](Self::new) with the irrelevant generators derived from the
    /// primitive collections.
    pub fn from_primitive_collections(
        coordinates: Vec<String>,
        picard_rank: usize,
        grading: Vec<Vec<i64>>,
        primitive_collections: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let irrelevant = minimal_transversals(coordinates.len(), &primitive_collections);
        Self::new(coordinates, picard_rank, grading, primitive_collections, irrelevant)
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    pub fn picard_rank(&self) -> usize {
        self.picard_rank
    }

    /// Row ρ is the class of `D_ρ`.
    pub fn grading(&self) -> &[Vec<i64>] {
        &self.grading
    }

    pub fn primitive_collections(&self) -> &[Vec<usize>] {
        &self.primitive_collections
    }

    pub fn irrelevant_generators(&self) -> &[Vec<usize>] {
        &self.irrelevant_generators
    }

    /// Table of the homogeneous coordinate ring.
    pub fn coordinate_table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn irrelevant_polynomials(&self) -> Vec<Polynomial> {
        self.irrelevant_generators
            .iter()
            .map(|s| {
                let mut e = vec![0; self.coordinates.len()];
                for &i in s {
                    e[i] += 1;
                }
                Polynomial::monomial(self.table.clone(), Monomial::new(e), Rational::one())
            })
            .collect()
    }

    /// Multidegree of a coordinate monomial.
    pub fn class_of(&self, m: &Monomial) -> Vec<i64> {
        let mut class = vec![0i64; self.picard_rank];
        for (rho, &e) in m.exponents().iter().enumerate() {
            for (j, c) in class.iter_mut().enumerate() {
                *c += e as i64 * self.grading[rho][j];
            }
        }
        class
    }

    /// Coordinate groups of a product of projective spaces, one per factor
    /// in column order, or `None` when the data has another shape.
    pub fn projective_factors(&self) -> Option<Vec<Vec<usize>>> {
        let mut groups = vec![Vec::new(); self.picard_rank];
        for (rho, row) in self.grading.iter().enumerate() {
            let j = row.iter().position(|&c| c == 1)?;
            if row.iter().enumerate().any(|(k, &c)| k != j && c != 0) {
                return None;
            }
            groups[j].push(rho);
        }
        if groups.iter().any(|g| g.len() < 2) {
            return None;
        }
        let as_sets = |sets: &[Vec<usize>]| -> BTreeSet<BTreeSet<usize>> {
            sets.iter().map(|s| s.iter().copied().collect()).collect()
        };
        (as_sets(&groups) == as_sets(&self.primitive_collections)).then_some(groups)
    }
}

/// Cox data of `P^{n₁} × … × P^{n_r}` with coordinates `x0, x1, …` grouped
/// by factor.
pub fn product_projective_toric(dims: &[u32]) -> Result<ToricData> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Dimension(format!("expected nonempty positive dimensions, got {dims:?}")));
    }
    let r = dims.len();
    let mut coordinates = Vec::new();
    let mut grading = Vec::new();
    let mut collections = Vec::new();
    for (j, &n) in dims.iter().enumerate() {
        let mut group = Vec::new();
        for _ in 0..=n {
            group.push(coordinates.len());
            coordinates.push(format!("x{}", coordinates.len()));
            let mut row = vec![0; r];
            row[j] = 1;
            grading.push(row);
        }
        collections.push(group);
    }
    ToricData::from_primitive_collections(coordinates, r, grading, collections)
}

/// A `#rays × r` matrix of sections, row ρ in `O(D_ρ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationMatrix {
    toric: ToricData,
    entries: Vec<Vec<Polynomial>>,
}

/// One problem found by [`validate_deformation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    /// `None` for problems with the row as a whole.
    pub column: Option<usize>,
    pub reason: String,
}

impl DeformationMatrix {
    /// Entries must live over the toric coordinate table; shape and degrees
    /// are checked by [`validate_deformation`].
    pub fn new(toric: ToricData, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.iter().flatten().any(|p| !p.is_over(toric.coordinate_table())) {
            return Err(Error::TableMismatch);
        }
        Ok(DeformationMatrix { toric, entries })
    }

    /// Parses each entry with the expression grammar over the coordinates.
    pub fn parse(toric: ToricData, rows: &[Vec<String>]) -> Result<Self> {
        let table = toric.coordinate_table().clone();
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s, table.clone()).map_err(Error::from)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::new(toric, entries)
    }

    pub fn toric(&self) -> &ToricData {
        &self.toric
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(Polynomial::render).collect()).collect()
    }
}

/// The undeformed Euler-sequence map: the column for factor `j` holds that
/// factor's coordinates.
pub fn euler_matrix_default(toric: &ToricData) -> Result<DeformationMatrix> {
    let groups = toric
        .projective_factors()
        .ok_or_else(|| Error::UnsupportedToric("not a product of projective spaces".into()))?;
    let table = toric.coordinate_table();
    let n = toric.coordinates().len();
    let mut entries = vec![vec![Polynomial::zero(table.clone()); toric.picard_rank()]; n];
    for (j, group) in groups.iter().enumerate() {
        for &rho in group {
            entries[rho][j] = Polynomial::monomial(table.clone(), Monomial::var(n, rho, 1), Rational::one());
        }
    }
    DeformationMatrix::new(toric.clone(), entries)
}

/// The two-column family on P¹×P¹ with rows
/// `(x0, e1 x0 + e2 x1)`, `(x1, e3 x0)`, `(g1 x2 + g2 x3, x2)`, `(g3 x2, x3)`.
pub fn p1p1_deformation(eps: &[Rational; 3], gam: &[Rational; 3]) -> DeformationMatrix {
    let toric = product_projective_toric(&[1, 1]).expect("P1 x P1");
    let table = toric.coordinate_table().clone();
    let lin = |coeffs: [(usize, &Rational); 2]| {
        Polynomial::from_terms(table.clone(), coeffs.map(|(i, c)| (Monomial::var(4, i, 1), c.clone())))
    };
    let one = Rational::one();
    let zero = Rational::zero();
    let entries = vec![
        vec![lin([(0, &one), (1, &zero)]), lin([(0, &eps[0]), (1, &eps[1])])],
        vec![lin([(1, &one), (0, &zero)]), lin([(0, &eps[2]), (1, &zero)])],
        vec![lin([(2, &gam[0]), (3, &gam[1])]), lin([(2, &one), (3, &zero)])],
        vec![lin([(2, &gam[2]), (3, &zero)]), lin([(3, &one), (2, &zero)])],
    ];
    DeformationMatrix::new(toric, entries).expect("entries over the coordinate table")
}

/// Checks the shape and that every entry in row ρ is homogeneous of class
/// `D_ρ`. Zero entries are always allowed.
pub fn validate_deformation(m: &DeformationMatrix) -> std::result::Result<(), Vec<Violation>> {
    let toric = m.toric();
    let mut out = Vec::new();
    if m.entries.len() != toric.coordinates().len() {
        out.push(Violation {
            row: m.entries.len().min(toric.coordinates().len()),
            column: None,
            reason: format!("matrix has {} rows, expected {}", m.entries.len(), toric.coordinates().len()),
        });
    }
    for (rho, row) in m.entries.iter().enumerate() {
        if row.len() != toric.picard_rank() {
            out.push(Violation {
                row: rho,
                column: None,
                reason: format!("row has {} columns, expected {}", row.len(), toric.picard_rank()),
            });
        }
        let Some(expected) = toric.grading().get(rho) else { continue };
        for (j, entry) in row.iter().enumerate() {
            if let Some((m, _)) = entry.terms().iter().find(|(m, _)| toric.class_of(m) != *expected) {
                out.push(Violation {
                    row: rho,
                    column: Some(j),
                    reason: format!(
                        "term {} has class {:?}, expected {:?}",
                        Polynomial::monomial(entry.table().clone(), m.clone(), Rational::one()),
                        toric.class_of(m),
                        expected
                    ),
                });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Degree-one and degree-two parts of a total Chern class, in class
/// generators, reduced in the Stanley-Reisner ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub c1: Polynomial,
    pub c2: Polynomial,
}

/// Chern data of `⊕ O(D_ρ)`, which by the Euler sequence is that of any
/// cokernel of `O^r → ⊕ O(D_ρ)`, the tangent bundle included.
pub fn chern_of_twisted_sum(toric: &ToricData) -> Result<ChernData> {
    chern_of_twists(toric, toric.grading())
}

/// Chern data of `⊕ O(class)` over the given twist list.
pub fn chern_of_twists(toric: &ToricData, twists: &[Vec<i64>]) -> Result<ChernData> {
    if let Some(bad) = twists.iter().find(|t| t.len() != toric.picard_rank()) {
        return Err(Error::Dimension(format!(
            "twist {bad:?} has {} entries, expected {}",
            bad.len(),
            toric.picard_rank()
        )));
    }
    let sr = stanley_reisner_ring(toric)?;
    let gb =
        buchberger(&IdealPresentation::new(sr.table().clone(), sr.relations().to_vec(), MonomialOrder::DegRevLex)?);
    let table = class_table(toric.picard_rank());
    let one = Polynomial::one(table.clone());
    let total = twists.iter().fold(one.clone(), |acc, t| &acc * &(&one + &divisor_class(&table, t)));
    let reduced = gb.normal_form(&total)?;
    let part = |d: u32| {
        Polynomial::from_terms(table.clone(), reduced.terms().iter().filter(|(m, _)| m.total_degree() == d).cloned())
    };
    Ok(ChernData { c1: part(1), c2: part(2) })
}

/// Comparison of a bundle's Chern data with the tangent bundle's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmalousReport {
    pub bundle: ChernData,
    pub tangent: ChernData,
    /// `c₂(E) = c₂(T_X)`.
    pub c2_matches: bool,
    /// `c₁(E) = Σ[D_ρ]`, the Chern-class form of `det E^∨ ≅ ω_X`.
    pub c1_matches: bool,
}

impl OmalousReport {
    pub fn is_omalous(&self) -> bool {
        self.c1_matches && self.c2_matches
    }
}

/// Omalous check for the cokernel of a validated matrix. Its twist list is
/// the rows' classes, the same as the tangent bundle's.
pub fn check_omalous(toric: &ToricData, m: &DeformationMatrix) -> Result<OmalousReport> {
    validate_deformation(m).map_err(Error::InvalidDeformation)?;
    if m.toric() != toric {
        return Err(Error::UnsupportedToric("matrix belongs to different toric data".into()));
    }
    check_omalous_twists(toric, toric.grading())
}

/// Omalous check for an arbitrary twist list.
pub fn check_omalous_twists(toric: &ToricData, twists: &[Vec<i64>]) -> Result<OmalousReport> {
    let bundle = chern_of_twists(toric, twists)?;
    let tangent = chern_of_twisted_sum(toric)?;
    Ok(OmalousReport { c2_matches: bundle.c2 == tangent.c2, c1_matches: bundle.c1 == tangent.c1, bundle, tangent })
}

/// Ideal of all maximal (`r × r`) minors in the coordinate ring, in row-subset
/// order; identically zero minors are left out.
pub fn minors_ideal(m: &DeformationMatrix) -> Result<IdealPresentation> {
    let table = m.toric().coordinate_table();
    let r = m.toric().picard_rank();
    if m.entries.len() < r || m.entries.iter().any(|row| row.len() != r) {
        return Err(Error::Dimension(format!("need at least {r} rows of length {r}")));
    }
    let minors = linalg::combinations(m.entries.len(), r)
        .into_iter()
        .map(|rows| {
            let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&i| m.entries[i].clone()).collect();
            linalg::determinant(table, &sub)
        })
        .collect();
    IdealPresentation::new(table.clone(), minors, MonomialOrder::DegRevLex)
}

/// True iff the degeneracy locus of the map lies inside the excluded set,
/// i.e. every irrelevant generator is in the radical of the minors ideal.
/// Decided over ℚ, which settles the question over its algebraic closure.
pub fn check_bundle_regularity(toric: &ToricData, m: &DeformationMatrix) -> Result<bool> {
    validate_deformation(m).map_err(Error::InvalidDeformation)?;
    let minors = minors_ideal(m)?;
    for g in toric.irrelevant_polynomials() {
        if !radical_member(&g, &minors)? {
            return Ok(false);
        }
    }
    Ok(true)
}
