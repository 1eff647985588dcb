use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::rational::{is_neg, render_rational, Rational};
use super::table::{Block, VariableTable};
use crate::error::{Error, Result};

pub type Term = (Monomial, Rational);

/// Polynomial with exact rational coefficients over a shared variable table.
///
/// Terms are kept strictly descending under degrevlex on the full table, with
/// no zero coefficients and no repeated monomials, so structural equality is
/// mathematical equality and rendering is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    table: Arc<VariableTable>,
    terms: Vec<Term>,
}

fn canonical_cmp(table: &VariableTable, a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::DegRevLex.compare(table, a, b)
}

impl Polynomial {
    pub fn zero(table: Arc<VariableTable>) -> Self {
        Polynomial { table, terms: Vec::new() }
    }

    pub fn one(table: Arc<VariableTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn constant(table: Arc<VariableTable>, c: Rational) -> Self {
        let n = table.len();
        Self::from_terms(table, [(Monomial::one(n), c)])
    }

    pub fn monomial(table: Arc<VariableTable>, m: Monomial, c: Rational) -> Self {
        Self::from_terms(table, [(m, c)])
    }

    pub fn variable(table: Arc<VariableTable>, name: &str) -> Result<Self> {
        let i = table.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let n = table.len();
        Ok(Self::monomial(table, Monomial::var(n, i, 1), Rational::one()))
    }

    /// Builds a normalized polynomial, merging repeated monomials and dropping
    /// zero coefficients.
    pub fn from_terms(table: Arc<VariableTable>, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        debug_assert!(terms.iter().all(|(m, _)| m.len() == table.len()));
        terms.sort_by(|a, b| canonical_cmp(&table, &b.0, &a.0));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial { table, terms: merged }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant polynomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn same_table(&self, other: &Polynomial) -> bool {
        self.is_over(&other.table)
    }

    pub fn is_over(&self, table: &Arc<VariableTable>) -> bool {
        Arc::ptr_eq(&self.table, table) || *self.table == **table
    }

    fn check_table(&self, other: &Polynomial) -> Result<()> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.iter().find(|(tm, _)| tm == m).map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.table.len()))
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&Term> {
        self.terms.iter().max_by(|a, b| order.compare(&self.table, &a.0, &b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        Ok(self.merge(other, &Rational::one()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        Ok(self.merge(other, &-Rational::one()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                *acc.entry(m.exponents().to_vec()).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(self.table.clone(), acc.into_iter().map(|(e, c)| (Monomial::new(e), c))))
    }

    /// `self + factor * other` by a sorted merge.
    fn merge(&self, other: &Polynomial, factor: &Rational) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match canonical_cmp(&self.table, ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb * factor));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb * factor;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), c * factor)));
        Polynomial { table: self.table.clone(), terms: out }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.table.clone());
        }
        Polynomial { table: self.table.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.table.clone());
        }
        Polynomial { table: self.table.clone(), terms: self.terms.iter().map(|(tm, a)| (tm.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.table.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The common graded degree of all terms, or `None` when terms disagree.
    /// The zero polynomial reports degree 0.
    pub fn graded_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.iter().map(|(m, _)| m.graded_degree(&self.table));
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.graded_degree().is_some()
    }

    /// True when no term involves a variable of `block`.
    pub fn free_of(&self, block: Block) -> bool {
        let range = self.table.block_range(block);
        self.terms.iter().all(|(m, _)| m.exponents()[range.clone()].iter().all(|&e| e == 0))
    }

    /// Substitutes rational values for the variables at the given indices and
    /// moves the result onto `target`, which must be the table with exactly
    /// those variables removed.
    pub(crate) fn substitute_into(
        &self,
        values: &BTreeMap<usize, Rational>,
        target: &Arc<VariableTable>,
    ) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let mut coeff = c.clone();
            let mut exps = Vec::with_capacity(target.len());
            for (i, &e) in m.exponents().iter().enumerate() {
                match values.get(&i) {
                    Some(v) => {
                        if e > 0 {
                            coeff *= num_traits::pow(v.clone(), e as usize);
                        }
                    }
                    None => exps.push(e),
                }
            }
            (!coeff.is_zero()).then(|| (Monomial::new(exps), coeff))
        });
        Polynomial::from_terms(target.clone(), terms)
    }

    /// Moves the polynomial onto `target`, sending variable `i` to
    /// `index_map[i]`.
    pub(crate) fn remap(&self, target: &Arc<VariableTable>, index_map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[index_map[i]] += x;
            }
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(target.clone(), terms)
    }

    /// Re-expresses the polynomial over a table that extends this one by
    /// appended variables.
    pub fn extend_to(&self, target: &Arc<VariableTable>) -> Result<Polynomial> {
        if target.len() < self.table.len() || target.vars()[..self.table.len()] != *self.table.vars() {
            return Err(Error::TableMismatch);
        }
        let map: Vec<usize> = (0..self.table.len()).collect();
        Ok(self.remap(target, &map))
    }

    /// Canonical text form; parses back to the same polynomial.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = is_neg(c);
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&m.render(&self.table));
            } else {
                out.push_str(&render_rational(&abs));
                out.push('*');
                out.push_str(&m.render(&self.table));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

// Operator impls panic on table mismatch; use the `checked_*` methods when the
// tables are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across tables")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across tables")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication across tables")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}
