//! Ring presentations and the quotient algebras they define.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_member, GroebnerBasis, IdealPresentation};
use crate::linalg;
use crate::poly::{Block, Monomial, MonomialOrder, Polynomial, Rational, Variable, VariableTable};
use crate::toric::ToricData;

/// Generators plus homogeneous relations.
///
/// A presentation may carry the element the trace is normalized against
/// (the top class); constructors for the standard families set it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    table: Arc<VariableTable>,
    relations: Vec<Polynomial>,
    description: String,
    trace_reference: Option<Polynomial>,
}

impl RingPresentation {
    pub fn new(table: Arc<VariableTable>, relations: Vec<Polynomial>, description: impl Into<String>) -> Result<Self> {
        for r in &relations {
            if !r.is_over(&table) {
                return Err(Error::TableMismatch);
            }
            if r.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !r.is_homogeneous() {
                return Err(Error::Inhomogeneous(r.render()));
            }
        }
        Ok(RingPresentation { table, relations, description: description.into(), trace_reference: None })
    }

    pub fn with_trace_reference(mut self, reference: Polynomial) -> Result<Self> {
        if !reference.is_over(&self.table) {
            return Err(Error::TableMismatch);
        }
        self.trace_reference = Some(reference);
        Ok(self)
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn trace_reference(&self) -> Option<&Polynomial> {
        self.trace_reference.as_ref()
    }

    /// The relation ideal under the block order.
    pub fn ideal(&self) -> IdealPresentation {
        IdealPresentation::new(self.table.clone(), self.relations.clone(), MonomialOrder::block_degrevlex())
            .expect("relations share the table")
    }

    /// One relation per line in canonical text form.
    pub fn render(&self) -> String {
        self.relations.iter().map(|r| format!("{r}\n")).collect()
    }
}

fn check_dims(dims: &[u32]) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Dimension(format!("expected nonempty positive dimensions, got {dims:?}")));
    }
    Ok(())
}

fn indexed(stem: &str, i: usize, count: usize) -> String {
    if count == 1 {
        stem.to_string()
    } else {
        format!("{stem}{}", i + 1)
    }
}

fn projective_table(dims: &[u32], quantum: bool) -> Arc<VariableTable> {
    let r = dims.len();
    let mut vars: Vec<Variable> = (0..r).map(|i| Variable::generator(indexed("H", i, r), 1)).collect();
    if quantum {
        vars.extend(dims.iter().enumerate().map(|(i, &n)| Variable::instanton(indexed("q", i, r), n + 1)));
    }
    Arc::new(VariableTable::new(vars).expect("valid projective table"))
}

fn top_class(table: &Arc<VariableTable>, exponents: &[u32]) -> Polynomial {
    let mut e = exponents.to_vec();
    e.resize(table.len(), 0);
    Polynomial::monomial(table.clone(), Monomial::new(e), Rational::one())
}

fn product_presentation(dims: &[u32], quantum: bool) -> Result<RingPresentation> {
    check_dims(dims)?;
    let table = projective_table(dims, quantum);
    let r = dims.len();
    let relations = dims
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let power = Polynomial::monomial(table.clone(), Monomial::var(table.len(), i, n + 1), Rational::one());
            if quantum {
                let q = Polynomial::monomial(table.clone(), Monomial::var(table.len(), r + i, 1), Rational::one());
                &power - &q
            } else {
                power
            }
        })
        .collect();
    let label = dims.iter().map(|n| format!("P^{n}")).collect::<Vec<_>>().join(" x ");
    let description = if quantum { format!("quantum cohomology of {label}") } else { format!("cohomology of {label}") };
    RingPresentation::new(table.clone(), relations, description)?.with_trace_reference(top_class(&table, dims))
}

/// `ℚ[H₁,…,H_r] / ⟨Hᵢ^{nᵢ+1}⟩`.
pub fn classical_cohomology_products(dims: &[u32]) -> Result<RingPresentation> {
    product_presentation(dims, false)
}

/// `ℚ[H₁,…,H_r][q₁,…,q_r] / ⟨Hᵢ^{nᵢ+1} − qᵢ⟩` with `deg qᵢ = nᵢ + 1`.
pub fn quantum_cohomology_products(dims: &[u32]) -> Result<RingPresentation> {
    product_presentation(dims, true)
}

/// Quantum sheaf cohomology of a deformed tangent bundle on P¹×P¹:
///
/// ```text
/// psi^2  + e1*psi*psit - e2*e3*psit^2 - q1
/// psit^2 + g1*psi*psit - g2*g3*psi^2  - q2
/// ```
pub fn qsc_presentation_p1p1(eps: &[Rational; 3], gam: &[Rational; 3]) -> RingPresentation {
    let table = Arc::new(
        VariableTable::new(vec![
            Variable::generator("psi", 1),
            Variable::generator("psit", 1),
            Variable::instanton("q1", 2),
            Variable::instanton("q2", 2),
        ])
        .expect("valid table"),
    );
    let term = |e: [u32; 4], c: Rational| (Monomial::new(e.to_vec()), c);
    let one = Rational::one();
    let f1 = Polynomial::from_terms(
        table.clone(),
        [
            term([2, 0, 0, 0], one.clone()),
            term([1, 1, 0, 0], eps[0].clone()),
            term([0, 2, 0, 0], -(&eps[1] * &eps[2])),
            term([0, 0, 1, 0], -one.clone()),
        ],
    );
    let f2 = Polynomial::from_terms(
        table.clone(),
        [
            term([0, 2, 0, 0], one.clone()),
            term([1, 1, 0, 0], gam[0].clone()),
            term([2, 0, 0, 0], -(&gam[1] * &gam[2])),
            term([0, 0, 0, 1], -one),
        ],
    );
    let fmt = |v: &[Rational; 3]| v.iter().map(crate::poly::render_rational).collect::<Vec<_>>().join(",");
    RingPresentation::new(
        table.clone(),
        vec![f1, f2],
        format!("quantum sheaf cohomology of P^1 x P^1, epsilon=({}), gamma=({})", fmt(eps), fmt(gam)),
    )
    .and_then(|p| p.with_trace_reference(top_class(&table, &[1, 1])))
    .expect("relations are homogeneous for every parameter choice")
}

/// Substitutes rational values for instanton or parameter variables,
/// removing them from the table. Relations that become zero are dropped.
pub fn substitute(pres: &RingPresentation, assignments: &BTreeMap<String, Rational>) -> Result<RingPresentation> {
    let table = pres.table();
    let mut values = BTreeMap::new();
    for (name, value) in assignments {
        let i = table.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        if table.var(i).block == Block::Generator {
            return Err(Error::GeneratorAssignment(name.clone()));
        }
        values.insert(i, value.clone());
    }
    if values.is_empty() {
        return Ok(pres.clone());
    }
    let dropped: Vec<usize> = values.keys().copied().collect();
    let target = Arc::new(table.without(&dropped));
    let relations: Vec<Polynomial> =
        pres.relations().iter().map(|r| r.substitute_into(&values, &target)).filter(|r| !r.is_zero()).collect();
    let desc = assignments
        .iter()
        .map(|(k, v)| format!("{k}={}", crate::poly::render_rational(v)))
        .collect::<Vec<_>>()
        .join(", ");
    let out = RingPresentation::new(target.clone(), relations, format!("{} at {desc}", pres.description()))?;
    match pres.trace_reference() {
        Some(r) => out.with_trace_reference(r.substitute_into(&values, &target)),
        None => Ok(out),
    }
}

/// Whether renaming `a`'s variables through `rename` (names of `a` to names
/// of `b`) turns `a`'s relation ideal into `b`'s. A rename that changes a
/// degree or block gives `false`; one that is not a bijection between the two
/// tables is an error.
pub fn presentations_isomorphic_by_renaming(
    a: &RingPresentation,
    b: &RingPresentation,
    rename: &BTreeMap<String, String>,
) -> Result<bool> {
    let (ta, tb) = (a.table(), b.table());
    let mut index_map = vec![usize::MAX; ta.len()];
    let mut hit = vec![false; tb.len()];
    for (from, to) in rename {
        let i = ta
            .index_of(from)
            .ok_or_else(|| Error::NonBijectiveRename(format!("`{from}` is not a variable of the source")))?;
        let j = tb
            .index_of(to)
            .ok_or_else(|| Error::NonBijectiveRename(format!("`{to}` is not a variable of the target")))?;
        if hit[j] {
            return Err(Error::NonBijectiveRename(format!("`{to}` is hit twice")));
        }
        hit[j] = true;
        index_map[i] = j;
    }
    if let Some(i) = index_map.iter().position(|&j| j == usize::MAX) {
        return Err(Error::NonBijectiveRename(format!("`{}` is not renamed", ta.var(i).name)));
    }
    if let Some(j) = hit.iter().position(|h| !h) {
        return Err(Error::NonBijectiveRename(format!("`{}` is not hit", tb.var(j).name)));
    }
    let preserves = index_map.iter().enumerate().all(|(i, &j)| {
        let (va, vb) = (ta.var(i), tb.var(j));
        va.degree == vb.degree && va.block == vb.block
    });
    if !preserves {
        return Ok(false);
    }
    let renamed: Vec<Polynomial> = a.relations().iter().map(|r| r.remap(tb, &index_map)).collect();
    let order = MonomialOrder::block_degrevlex();
    let ga = buchberger(&IdealPresentation::new(tb.clone(), renamed.clone(), order.clone())?);
    let gb = buchberger(&b.ideal());
    for r in &renamed {
        if !ideal_member(r, &gb)? {
            return Ok(false);
        }
    }
    for r in b.relations() {
        if !ideal_member(r, &ga)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stanley-Reisner presentation in divisor-class generators: one relation
/// per primitive collection, the product of its divisors written in the class
/// basis through the grading matrix.
pub fn stanley_reisner_ring(toric: &ToricData) -> Result<RingPresentation> {
    let r = toric.picard_rank();
    let rank = linalg::rank(toric.grading());
    if rank != r {
        return Err(Error::RankDeficient { rank, expected: r });
    }
    let table = class_table(r);
    let relations = toric
        .primitive_collections()
        .iter()
        .map(|collection| {
            collection
                .iter()
                .fold(Polynomial::one(table.clone()), |acc, &rho| &acc * &divisor_class(&table, &toric.grading()[rho]))
        })
        .filter(|p| !p.is_zero())
        .collect();
    RingPresentation::new(table, relations, "Stanley-Reisner ring".to_string())
}

/// Table of class generators `h` (rank one) or `h1..hr`.
pub(crate) fn class_table(r: usize) -> Arc<VariableTable> {
    Arc::new(
        VariableTable::new((0..r).map(|i| Variable::generator(indexed("h", i, r), 1)).collect())
            .expect("valid class table"),
    )
}

/// `Σ_j class[j] h_j`.
pub(crate) fn divisor_class(table: &Arc<VariableTable>, class: &[i64]) -> Polynomial {
    Polynomial::from_terms(
        table.clone(),
        class.iter().enumerate().map(|(j, &c)| (Monomial::var(table.len(), j, 1), Rational::from_integer(c.into()))),
    )
}

/// A presentation realized as a free module over the instanton/parameter
/// polynomial ring, with the generator-block staircase as basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    presentation: RingPresentation,
    gb: GroebnerBasis,
    module_basis: Vec<Monomial>,
}

/// Builds the quotient under the block order and enumerates the staircase.
/// Fails with [`Error::DegeneratePresentation`] when the staircase is
/// infinite, i.e. the quotient is not finite over the coefficient ring.
pub fn quotient_algebra(pres: &RingPresentation) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(pres)
}

impl QuotientAlgebra {
    pub fn new(pres: &RingPresentation) -> Result<Self> {
        let gb = buchberger(&pres.ideal());
        let module_basis = staircase(pres.table(), &gb)?;
        Ok(QuotientAlgebra { presentation: pres.clone(), gb, module_basis })
    }

    /// Assembles a quotient from parts without checking that `gb` is a
    /// Gröbner basis of the presentation or that `module_basis` is its
    /// staircase. Meant for test fixtures.
    pub fn from_parts_unchecked(
        presentation: RingPresentation,
        gb: GroebnerBasis,
        module_basis: Vec<Monomial>,
    ) -> Self {
        QuotientAlgebra { presentation, gb, module_basis }
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.presentation.table()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn module_basis(&self) -> &[Monomial] {
        &self.module_basis
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.module_basis
            .iter()
            .map(|m| Polynomial::monomial(self.table().clone(), m.clone(), Rational::one()))
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(p)
    }

    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.gb.reduce(p)
    }

    /// Largest graded degree among basis monomials.
    pub fn top_degree(&self) -> u32 {
        self.module_basis.iter().map(|m| m.graded_degree(self.table())).max().unwrap_or(0)
    }

    /// Number of basis monomials in each degree `0..=top_degree`.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let mut dims = vec![0; self.top_degree() as usize + 1];
        for m in &self.module_basis {
            dims[m.graded_degree(self.table()) as usize] += 1;
        }
        dims
    }

    /// Writes the normal form of `p` as `Σ cᵢ(q) · mᵢ` over the module basis.
    /// Returns the offending monomial when a generator part falls outside the
    /// basis.
    pub fn coordinates(&self, p: &Polynomial) -> std::result::Result<BTreeMap<usize, Polynomial>, Monomial> {
        self.split(&self.reduce(p))
    }

    pub(crate) fn split(&self, nf: &Polynomial) -> std::result::Result<BTreeMap<usize, Polynomial>, Monomial> {
        let table = self.table();
        let gens = table.block_range(Block::Generator);
        let mut parts: BTreeMap<usize, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in nf.terms() {
            let g = m.restrict(gens.clone());
            let idx = self.module_basis.iter().position(|b| *b == g).ok_or_else(|| m.clone())?;
            let rest = Monomial::new(
                m.exponents().iter().enumerate().map(|(i, &e)| if gens.contains(&i) { 0 } else { e }).collect(),
            );
            parts.entry(idx).or_default().push((rest, c.clone()));
        }
        Ok(parts
            .into_iter()
            .map(|(i, terms)| (i, Polynomial::from_terms(table.clone(), terms)))
            .filter(|(_, p)| !p.is_zero())
            .collect())
    }
}

fn staircase(table: &Arc<VariableTable>, gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let gens = table.block_range(Block::Generator);
    let walls: Vec<&Monomial> = gb.leading_monomials().filter(|m| m.supported_in(gens.clone())).collect();
    if walls.iter().any(|m| m.is_one()) {
        return Err(Error::DegeneratePresentation("the relations generate the unit ideal".into()));
    }
    let mut bounds = Vec::with_capacity(gens.len());
    for i in gens.clone() {
        let bound = walls
            .iter()
            .filter(|m| m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.exponents()[i])
            .min();
        match bound {
            Some(b) => bounds.push(b),
            None => {
                return Err(Error::DegeneratePresentation(format!(
                    "no power of `{}` is a leading monomial, so the staircase is infinite",
                    table.var(i).name
                )))
            }
        }
    }
    let mut basis = Vec::new();
    let mut e = vec![0u32; table.len()];
    loop {
        let m = Monomial::new(e.clone());
        if !walls.iter().any(|w| w.divides(&m)) {
            basis.push(m);
        }
        // odometer over the box ∏ [0, bound)
        let mut k = 0;
        loop {
            if k == bounds.len() {
                let order = MonomialOrder::block_degrevlex();
                basis.sort_by(|a, b| {
                    a.graded_degree(table).cmp(&b.graded_degree(table)).then_with(|| order.compare(table, b, a))
                });
                return Ok(basis);
            }
            let idx = gens.start + k;
            e[idx] += 1;
            if e[idx] < bounds[k] {
                break;
            }
            e[idx] = 0;
            k += 1;
        }
    }
}

/// True when every relation's normal form vanishes.
pub fn relations_vanish(qa: &QuotientAlgebra) -> bool {
    qa.presentation().relations().iter().all(|r| qa.reduce(r).is_zero())
}

pub(crate) fn zero_assignments(table: &VariableTable, block: Block) -> BTreeMap<String, Rational> {
    table.block_range(block).map(|i| (table.var(i).name.clone(), Rational::zero())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::poly::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn params(a: [&str; 3]) -> [Rational; 3] {
        a.map(r)
    }

    fn rendered(p: &RingPresentation) -> Vec<String> {
        p.relations().iter().map(|r| r.render()).collect()
    }

    fn rename(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn classical_products() {
        assert_eq!(rendered(&classical_cohomology_products(&[2]).unwrap()), ["H^3"]);
        assert_eq!(rendered(&classical_cohomology_products(&[1, 1]).unwrap()), ["H1^2", "H2^2"]);
        let p1 = quotient_algebra(&classical_cohomology_products(&[1]).unwrap()).unwrap();
        assert_eq!(p1.module_basis().len(), 2);
        assert_eq!(p1.graded_dimensions(), [1, 1]);
        assert!(classical_cohomology_products(&[]).is_err());
    }

    #[test]
    fn quantum_products() {
        let p3 = quantum_cohomology_products(&[3]).unwrap();
        assert_eq!(rendered(&p3), ["H^4 - q"]);
        assert_eq!(p3.table().var(1).degree, 4);
        assert_eq!(rendered(&quantum_cohomology_products(&[1, 1]).unwrap()), ["H1^2 - q1", "H2^2 - q2"]);
        let at_zero = substitute(&p3, &rename_values(&[("q", "0")])).unwrap();
        let classical = classical_cohomology_products(&[3]).unwrap();
        assert_eq!(at_zero.relations(), classical.relations());
        assert_eq!(at_zero.table(), classical.table());
        assert_eq!(at_zero.trace_reference(), classical.trace_reference());
    }

    fn rename_values(pairs: &[(&str, &str)]) -> BTreeMap<String, Rational> {
        pairs.iter().map(|(a, b)| (a.to_string(), r(b))).collect()
    }

    #[test]
    fn qsc_relations_substitute_verbatim() {
        let zero = params(["0", "0", "0"]);
        assert_eq!(rendered(&qsc_presentation_p1p1(&zero, &zero)), ["psi^2 - q1", "psit^2 - q2"]);
        assert_eq!(
            rendered(&qsc_presentation_p1p1(&params(["1", "0", "0"]), &zero)),
            ["psi^2 + psi*psit - q1", "psit^2 - q2"]
        );
        assert_eq!(
            rendered(&qsc_presentation_p1p1(&params(["0", "1", "1"]), &zero)),
            ["psi^2 - psit^2 - q1", "psit^2 - q2"]
        );
        assert_eq!(
            rendered(&qsc_presentation_p1p1(&params(["1/2", "2", "3"]), &params(["-1", "1/3", "3"]))),
            ["psi^2 + 1/2*psi*psit - 6*psit^2 - q1", "-psi^2 - psi*psit + psit^2 - q2"]
        );
    }

    #[test]
    fn staircases() {
        let qh = quotient_algebra(&quantum_cohomology_products(&[2]).unwrap()).unwrap();
        assert_eq!(qh.basis_polynomials().iter().map(|p| p.render()).collect::<Vec<_>>(), ["1", "H", "H^2"]);
        let zero = params(["0", "0", "0"]);
        let qsc = quotient_algebra(&qsc_presentation_p1p1(&zero, &zero)).unwrap();
        assert_eq!(
            qsc.basis_polynomials().iter().map(|p| p.render()).collect::<Vec<_>>(),
            ["1", "psi", "psit", "psi*psit"]
        );
        let deformed =
            quotient_algebra(&qsc_presentation_p1p1(&params(["1", "0", "0"]), &params(["2", "0", "0"]))).unwrap();
        assert_eq!(deformed.module_basis().len(), 4);
        assert_eq!(deformed.graded_dimensions(), [1, 2, 1]);
        let mixed = quotient_algebra(&qsc_presentation_p1p1(&zero, &params(["1", "0", "0"]))).unwrap();
        assert_eq!(
            mixed.basis_polynomials().iter().map(|p| p.render()).collect::<Vec<_>>(),
            ["1", "psi", "psit", "psit^2"]
        );
        for q in [&qh, &qsc, &deformed, &mixed] {
            assert!(relations_vanish(q));
        }
    }

    #[test]
    fn degenerate_parameters() {
        // at q = 0 the two quadrics become proportional
        let d = quotient_algebra(&qsc_presentation_p1p1(&params(["0", "1", "1"]), &params(["0", "1", "1"])));
        assert!(matches!(d, Err(Error::DegeneratePresentation(_))));
        // psi*(psi + psit) and psit*(psi + psit) share a factor at q = 0
        let d = quotient_algebra(&qsc_presentation_p1p1(&params(["1", "0", "0"]), &params(["1", "0", "0"])));
        assert!(matches!(d, Err(Error::DegeneratePresentation(_))));
    }

    #[test]
    fn substitution_rules() {
        let zero = params(["0", "0", "0"]);
        let qsc = qsc_presentation_p1p1(&params(["1", "2", "3"]), &zero);
        assert_eq!(substitute(&qsc, &BTreeMap::new()).unwrap(), qsc);
        let classical = substitute(&qsc, &rename_values(&[("q1", "0"), ("q2", "0")])).unwrap();
        assert_eq!(rendered(&classical), ["psi^2 + psi*psit - 6*psit^2", "psit^2"]);
        assert_eq!(classical.table().len(), 2);
        assert_eq!(substitute(&qsc, &rename_values(&[("psi", "0")])), Err(Error::GeneratorAssignment("psi".into())));
        assert_eq!(substitute(&qsc, &rename_values(&[("z", "0")])), Err(Error::UnknownVariable("z".into())));
    }

    #[test]
    fn renaming_isomorphisms() {
        let zero = params(["0", "0", "0"]);
        let qsc = qsc_presentation_p1p1(&zero, &zero);
        let qh = quantum_cohomology_products(&[1, 1]).unwrap();
        let map = rename(&[("psi", "H1"), ("psit", "H2"), ("q1", "q1"), ("q2", "q2")]);
        assert!(presentations_isomorphic_by_renaming(&qsc, &qh, &map).unwrap());
        let deformed = qsc_presentation_p1p1(&params(["1", "0", "0"]), &zero);
        assert!(!presentations_isomorphic_by_renaming(&deformed, &qh, &map).unwrap());

        let p2 = quantum_cohomology_products(&[2]).unwrap();
        let p3 = quantum_cohomology_products(&[3]).unwrap();
        let id = rename(&[("H", "H"), ("q", "q")]);
        assert!(!presentations_isomorphic_by_renaming(&p2, &p3, &id).unwrap());
        assert!(presentations_isomorphic_by_renaming(&p2, &p2, &id).unwrap());
        // generators of the same ideal written differently
        let t = qh.table().clone();
        let alt = RingPresentation::new(
            t.clone(),
            vec![parse_poly("H1^2 - q1 + H2^2 - q2", t.clone()).unwrap(), parse_poly("H2^2 - q2", t.clone()).unwrap()],
            "alt",
        )
        .unwrap();
        let same = rename(&[("H1", "H1"), ("H2", "H2"), ("q1", "q1"), ("q2", "q2")]);
        assert!(presentations_isomorphic_by_renaming(&alt, &qh, &same).unwrap());

        let bad = rename(&[("H", "H"), ("q", "H")]);
        assert!(matches!(presentations_isomorphic_by_renaming(&p2, &p2, &bad), Err(Error::NonBijectiveRename(_))));
        let short = rename(&[("H", "H")]);
        assert!(matches!(presentations_isomorphic_by_renaming(&p2, &p2, &short), Err(Error::NonBijectiveRename(_))));
    }

    #[test]
    fn inhomogeneous_relations_are_rejected() {
        let t = quantum_cohomology_products(&[2]).unwrap().table().clone();
        let bad = RingPresentation::new(t.clone(), vec![parse_poly("H + H^2", t).unwrap()], "bad");
        assert!(matches!(bad, Err(Error::Inhomogeneous(_))));
    }
}
