//! Gröbner bases over the exact polynomial engine.
//!
//! Working polynomials are kept as term lists sorted descending under the
//! active order, so the leading term is always `terms[0]` and multiplying by
//! a monomial never reorders anything.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Term, VariableTable};

/// Generators of an ideal together with the order to compute under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    table: Arc<VariableTable>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl IdealPresentation {
    /// Zero generators are dropped; all generators must share `table`.
    pub fn new(table: Arc<VariableTable>, generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if generators.iter().any(|g| !g.is_over(&table)) {
            return Err(Error::TableMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealPresentation { table, generators, order })
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
}

/// Reduced, monic Gröbner basis, elements sorted by descending leading
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    table: Arc<VariableTable>,
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    sorted: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    /// Wraps polynomials as a basis without running Buchberger. Elements are
    /// made monic but otherwise taken as given, so the result is only a
    /// Gröbner basis if the input already was one.
    pub fn from_elements_unchecked(table: Arc<VariableTable>, elements: Vec<Polynomial>, order: MonomialOrder) -> Self {
        let ctx = Ctx { table: &table, order: &order };
        let sorted: Vec<Vec<Term>> =
            elements.iter().filter(|p| !p.is_zero()).map(|p| ctx.monic(ctx.sorted(p))).collect();
        let elements = sorted.iter().map(|t| Polynomial::from_terms(table.clone(), t.iter().cloned())).collect();
        GroebnerBasis { table, elements, order, sorted }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials, parallel to [`elements`](Self::elements).
    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|t| &t[0].0)
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|t| t[0].0.is_one())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.is_over(&self.table) {
            return Err(Error::TableMismatch);
        }
        Ok(self.reduce(p))
    }

    /// Normal form for a polynomial already known to share the table.
    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        let ctx = Ctx { table: &self.table, order: &self.order };
        let r = ctx.normal_form(ctx.sorted(p), &self.sorted);
        Polynomial::from_terms(self.table.clone(), r)
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let ctx = Ctx { table: &self.table, order: &self.order };
        (0..self.sorted.len()).all(|i| {
            (i + 1..self.sorted.len())
                .all(|j| ctx.normal_form(ctx.s_poly(&self.sorted[i], &self.sorted[j]), &self.sorted).is_empty())
        })
    }

    /// No term of any element is divisible by another element's leading
    /// monomial and every element is monic.
    pub fn is_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, f)| {
            f[0].1.is_one()
                && self
                    .sorted
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .all(|(_, g)| f.iter().all(|(m, _)| !g[0].0.divides(m)))
        })
    }
}

/// Table and order for the sorted-term routines.
struct Ctx<'a> {
    table: &'a VariableTable,
    order: &'a MonomialOrder,
}

impl Ctx<'_> {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(self.table, a, b)
    }

    fn sorted(&self, p: &Polynomial) -> Vec<Term> {
        let mut t = p.terms().to_vec();
        t.sort_by(|a, b| self.cmp(&b.0, &a.0));
        t
    }

    fn monic(&self, mut terms: Vec<Term>) -> Vec<Term> {
        if let Some((_, lc)) = terms.first() {
            let inv = lc.recip();
            for (_, c) in terms.iter_mut() {
                *c *= &inv;
            }
        }
        terms
    }

    /// `a - c * m * b` for sorted `a`, `b`.
    fn sub_scaled(&self, a: &[Term], c: &Rational, m: &Monomial, b: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), -(bc * c))).peekable();
        let mut ai = a.iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => match self.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let (m, c1) = ai.next().unwrap().clone();
                        let (_, c2) = bi.next().unwrap();
                        let s = c1 + c2;
                        if !s.is_zero() {
                            out.push((m, s));
                        }
                    }
                },
                (Some(_), None) => out.push(ai.next().unwrap().clone()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (None, None) => return out,
            }
        }
    }

    fn s_poly(&self, f: &[Term], g: &[Term]) -> Vec<Term> {
        let (fm, fc) = &f[0];
        let (gm, gc) = &g[0];
        let lcm = fm.lcm(gm);
        let uf = fm.quotient_of(&lcm).expect("lcm divisible");
        let ug = gm.quotient_of(&lcm).expect("lcm divisible");
        let scaled_f: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&uf), c / fc)).collect();
        self.sub_scaled(&scaled_f, &gc.recip(), &ug, g)
    }

    /// Full reduction of `p` against `basis` (each element nonempty, sorted).
    fn normal_form(&self, mut p: Vec<Term>, basis: &[Vec<Term>]) -> Vec<Term> {
        let mut rem = Vec::new();
        while !p.is_empty() {
            let (lm, lc) = p[0].clone();
            match basis.iter().find(|g| g[0].0.divides(&lm)) {
                Some(g) => {
                    let u = g[0].0.quotient_of(&lm).expect("divides");
                    let c = &lc / &g[0].1;
                    p = self.sub_scaled(&p, &c, &u, g);
                }
                None => {
                    rem.push(p.remove(0));
                }
            }
        }
        rem
    }
}

fn check_pair(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.same_table(g) {
        return Err(Error::TableMismatch);
    }
    Ok(())
}

/// `(lcm / LT(f)) f - (lcm / LT(g)) g` with `lcm` the lcm of the leading
/// monomials under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    check_pair(f, g)?;
    let ctx = Ctx { table: f.table(), order };
    let s = ctx.s_poly(&ctx.sorted(f), &ctx.sorted(g));
    Ok(Polynomial::from_terms(f.table().clone(), s))
}

/// Reduces `p` until no term is divisible by a leading monomial of `basis`.
/// Zero basis elements are ignored. Unique when `basis` is a Gröbner basis.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| !g.same_table(p)) {
        return Err(Error::TableMismatch);
    }
    let ctx = Ctx { table: p.table(), order };
    let sorted: Vec<Vec<Term>> = basis.iter().filter(|g| !g.is_zero()).map(|g| ctx.sorted(g)).collect();
    let r = ctx.normal_form(ctx.sorted(p), &sorted);
    Ok(Polynomial::from_terms(p.table().clone(), r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pair {
    degree: u32,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties by pair index) and both the coprime and chain criteria.
/// Returns the reduced monic basis sorted by descending leading monomial.
pub fn buchberger(ideal: &IdealPresentation) -> GroebnerBasis {
    let table = ideal.table();
    let order = ideal.order();
    let ctx = Ctx { table, order };

    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let add = |basis: &mut Vec<Vec<Term>>, pairs: &mut Vec<Pair>, f: Vec<Term>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push(Pair { degree: g[0].0.lcm(&f[0].0).total_degree(), i, j });
        }
        basis.push(f);
    };

    for g in ideal.generators() {
        let r = ctx.normal_form(ctx.sorted(g), &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, ctx.monic(r));
        }
    }

    while let Some(k) = pairs.iter().enumerate().min_by_key(|(_, p)| (p.degree, p.i, p.j)).map(|(k, _)| k) {
        let Pair { i, j, .. } = pairs.swap_remove(k);
        let (mi, mj) = (&basis[i][0].0, &basis[j][0].0);
        if mi.is_coprime(mj) {
            continue;
        }
        let lcm = mi.lcm(mj);
        let pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            pairs.iter().any(|p| p.i == a && p.j == b)
        };
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && basis[k][0].0.divides(&lcm) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        let r = ctx.normal_form(ctx.s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, ctx.monic(r));
        }
    }

    let reduced = reduce_basis(&ctx, basis);
    let elements = reduced.iter().map(|t| Polynomial::from_terms(table.clone(), t.iter().cloned())).collect();
    GroebnerBasis { table: table.clone(), elements, order: order.clone(), sorted: reduced }
}

/// Minimalizes, interreduces and sorts a Gröbner basis.
fn reduce_basis(ctx: &Ctx<'_>, basis: Vec<Vec<Term>>) -> Vec<Vec<Term>> {
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let redundant =
            basis.iter().enumerate().any(|(j, g)| j != i && g[0].0.divides(&f[0].0) && (g[0].0 != f[0].0 || j < i));
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut reduced: Vec<Vec<Term>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Vec<Term>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let head = minimal[i][0].clone();
            let mut out = vec![head];
            out.extend(ctx.normal_form(minimal[i][1..].to_vec(), &others));
            out
        })
        .collect();
    reduced.sort_by(|a, b| ctx.cmp(&b[0].0, &a[0].0));
    reduced
}

/// True iff `p` reduces to zero against `gb`.
pub fn ideal_member(p: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    Ok(gb.normal_form(p)?.is_zero())
}

/// Radical membership by the Rabinowitsch trick: `p` lies in the radical of
/// `I` iff `1` lies in `I + ⟨1 - t·p⟩` for a fresh variable `t`. Computed
/// under degrevlex with `t` last.
pub fn radical_member(p: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    if !p.is_over(ideal.table()) {
        return Err(Error::TableMismatch);
    }
    if p.is_zero() {
        return Ok(true);
    }
    let (ext, t) = ideal.table().with_fresh_parameter("t");
    let ext = Arc::new(ext);
    let mut gens = ideal.generators().iter().map(|g| g.extend_to(&ext)).collect::<Result<Vec<_>>>()?;
    let tvar = Polynomial::monomial(ext.clone(), Monomial::var(ext.len(), t, 1), Rational::one());
    let lifted = p.extend_to(&ext)?;
    gens.push(&Polynomial::one(ext.clone()) - &(&tvar * &lifted));
    let extended = IdealPresentation::new(ext, gens, MonomialOrder::DegRevLex)?;
    Ok(buchberger(&extended).is_unit_ideal())
}
