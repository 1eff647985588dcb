//! Trace, pairing, quantum product and three-point correlators on a quotient
//! algebra.
//!
//! The trace is fixed by one normalization: a reference element of top
//! degree and the value it should take. Reducing the reference at `q = 0`
//! lands on a multiple of the single top-degree staircase monomial, which
//! determines the trace on that monomial; the trace of anything else is read
//! off the top-degree coordinate of its normal form, with instanton
//! monomials passing through as coefficients.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Block, Monomial, Polynomial, Rational, VariableTable};
use crate::rings::QuotientAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFunctional {
    pub reference_element: Polynomial,
    pub reference_value: Rational,
    /// Trace of each top-degree basis monomial.
    pub top_coefficients: Vec<(Monomial, Rational)>,
}

#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    algebra: QuotientAlgebra,
    trace: TraceFunctional,
    top_degree: u32,
}

/// Normalizes the trace so that `tr(reference) = value`.
pub fn make_frobenius(qa: QuotientAlgebra, reference: Polynomial, value: Rational) -> Result<FrobeniusAlgebra> {
    FrobeniusAlgebra::new(qa, reference, value)
}

impl FrobeniusAlgebra {
    pub fn new(qa: QuotientAlgebra, reference: Polynomial, value: Rational) -> Result<Self> {
        if !reference.is_over(qa.table()) {
            return Err(Error::TableMismatch);
        }
        let top = qa.top_degree();
        if !reference.free_of(Block::Instanton) || !reference.free_of(Block::Parameter) {
            return Err(Error::TraceDegenerate(format!("reference `{reference}` involves non-generator variables")));
        }
        match reference.graded_degree() {
            Some(d) if d == top && !reference.is_zero() => {}
            _ => {
                return Err(Error::TraceDegenerate(format!(
                    "reference `{reference}` is not homogeneous of top degree {top}"
                )))
            }
        }
        let table = qa.table().clone();
        let top_monomials: Vec<&Monomial> =
            qa.module_basis().iter().filter(|m| m.graded_degree(&table) == top).collect();
        if top_monomials.len() != 1 {
            return Err(Error::TraceDegenerate(format!(
                "top-degree part of the classical quotient has dimension {}",
                top_monomials.len()
            )));
        }
        let top_monomial = top_monomials[0].clone();
        let gens = table.block_range(Block::Generator);
        let classical: Rational = qa
            .reduce(&reference)
            .terms()
            .iter()
            .filter(|(m, _)| m.supported_in(gens.clone()) && *m == top_monomial)
            .map(|(_, c)| c.clone())
            .sum();
        if classical.is_zero() {
            return Err(Error::TraceDegenerate(format!("reference `{reference}` vanishes at q = 0")));
        }
        let trace = TraceFunctional {
            reference_element: reference,
            top_coefficients: vec![(top_monomial, &value / &classical)],
            reference_value: value,
        };
        Ok(FrobeniusAlgebra { algebra: qa, trace, top_degree: top })
    }

    /// Uses the presentation's own reference element with value 1.
    pub fn with_default_trace(qa: QuotientAlgebra) -> Result<Self> {
        let reference = qa
            .presentation()
            .trace_reference()
            .cloned()
            .ok_or_else(|| Error::TraceDegenerate("presentation has no reference element".into()))?;
        Self::new(qa, reference, Rational::from_integer(1.into()))
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    pub fn trace_functional(&self) -> &TraceFunctional {
        &self.trace
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.algebra.table()
    }

    fn check(&self, p: &Polynomial) -> Result<()> {
        if p.is_over(self.table()) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    /// Trace as a polynomial in the instanton variables.
    pub fn trace(&self, x: &Polynomial) -> Result<Polynomial> {
        self.check(x)?;
        Ok(self.trace_of_normal_form(&self.algebra.reduce(x)))
    }

    fn trace_of_normal_form(&self, nf: &Polynomial) -> Polynomial {
        let table = self.table();
        let gens = table.block_range(Block::Generator);
        let terms = nf.terms().iter().filter_map(|(m, c)| {
            let g = m.restrict(gens.clone());
            let (_, d) = self.trace.top_coefficients.iter().find(|(t, _)| *t == g)?;
            let rest = Monomial::new(
                m.exponents().iter().enumerate().map(|(i, &e)| if gens.contains(&i) { 0 } else { e }).collect(),
            );
            Some((rest, c * d))
        });
        Polynomial::from_terms(table.clone(), terms)
    }

    /// Normal form of `a·b`.
    pub fn quantum_product(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.algebra.reduce(&(a * b)))
    }

    /// `tr(a·b)`.
    pub fn pairing(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.check(a)?;
        self.check(b)?;
        self.trace(&(a * b))
    }

    /// Pairing matrix over the module basis with its exact determinant.
    pub fn gram_matrix(&self) -> GramMatrix {
        let basis = self.algebra.basis_polynomials();
        let entries: Vec<Vec<Polynomial>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| self.pairing(a, b).expect("basis shares the table")).collect())
            .collect();
        let determinant = linalg::determinant(self.table(), &entries);
        let nondegenerate = !determinant.constant_term().is_zero();
        GramMatrix { basis, entries, determinant, nondegenerate }
    }

    /// `tr(a·b·c)` as a polynomial in the instanton variables.
    pub fn three_point(&self, a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<CorrelatorResult> {
        self.check(a)?;
        self.check(b)?;
        self.check(c)?;
        Ok(CorrelatorResult { value: self.trace(&(&(a * b) * c))? })
    }

    /// Correlators of all basis triples `i ≤ j ≤ k`, in basis order.
    pub fn correlator_table(&self) -> Vec<([usize; 3], CorrelatorResult)> {
        let basis = self.algebra.basis_polynomials();
        let n = basis.len();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let v = self.three_point(&basis[i], &basis[j], &basis[k]).expect("basis shares the table");
                    rows.push(([i, j, k], v));
                }
            }
        }
        rows
    }

    /// Verifies symmetry of the pairing, `(a, b*c) = (a*b, c)` on all basis
    /// triples, the unit law and vanishing of the trace off top degree.
    pub fn frobenius_check(&self) -> FrobeniusReport {
        let basis = self.algebra.basis_polynomials();
        let table = self.table();
        let one = Polynomial::one(table.clone());
        let n = basis.len();
        let mut failures = Vec::new();
        let pair = |a: &Polynomial, b: &Polynomial| self.pairing(a, b).expect("same table");
        let prod = |a: &Polynomial, b: &Polynomial| self.quantum_product(a, b).expect("same table");
        for i in 0..n {
            let tr = self.trace(&basis[i]).expect("same table");
            if tr != self.trace(&prod(&one, &basis[i])).expect("same table") {
                failures.push(FrobeniusFailure::UnitLaw { i });
            }
            let degree = self.algebra.module_basis()[i].graded_degree(table);
            if degree != self.top_degree && !tr.is_zero() {
                failures.push(FrobeniusFailure::Grading { i });
            }
            for j in 0..n {
                if pair(&basis[i], &basis[j]) != pair(&basis[j], &basis[i]) {
                    failures.push(FrobeniusFailure::Asymmetric { i, j });
                }
                for k in 0..n {
                    let left = pair(&basis[i], &prod(&basis[j], &basis[k]));
                    let right = pair(&prod(&basis[i], &basis[j]), &basis[k]);
                    if left != right {
                        failures.push(FrobeniusFailure::NotInvariant { i, j, k });
                    }
                }
            }
        }
        FrobeniusReport { basis_size: n, triples_checked: n * n * n, pairs_checked: n * n, failures }
    }

    /// True iff every product of two basis monomials reduces onto the basis
    /// with coefficients in the instanton variables alone.
    pub fn closure_check(&self) -> bool {
        let basis = self.algebra.basis_polynomials();
        (0..basis.len()).all(|i| {
            (i..basis.len()).all(|j| {
                let nf = self.algebra.reduce(&(&basis[i] * &basis[j]));
                match self.algebra.split(&nf) {
                    Ok(parts) => parts.values().all(|c| c.free_of(Block::Parameter)),
                    Err(_) => false,
                }
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub basis: Vec<Polynomial>,
    pub entries: Vec<Vec<Polynomial>>,
    pub determinant: Polynomial,
    /// The determinant has a nonzero constant term.
    pub nondegenerate: bool,
}

/// A three-point function, a polynomial in the instanton variables whose
/// `q^β` coefficient is the degree-β contribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelatorResult {
    pub value: Polynomial,
}

impl CorrelatorResult {
    /// Coefficient of `q^β`, `beta` indexed over the instanton variables.
    pub fn instanton_coefficient(&self, beta: &[u32]) -> Result<Rational> {
        let table = self.value.table();
        let range = table.block_range(Block::Instanton);
        if beta.len() != range.len() {
            return Err(Error::Dimension(format!(
                "degree has {} entries, the ring has {} instanton variables",
                beta.len(),
                range.len()
            )));
        }
        let mut e = vec![0; table.len()];
        e[range].copy_from_slice(beta);
        Ok(self.value.coefficient(&Monomial::new(e)))
    }

    /// `(β, coefficient)` for each nonzero term, in canonical term order.
    pub fn by_degree(&self) -> Vec<(Vec<u32>, Rational)> {
        let range = self.value.table().block_range(Block::Instanton);
        self.value.terms().iter().map(|(m, c)| (m.exponents()[range.clone()].to_vec(), c.clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusFailure {
    Asymmetric { i: usize, j: usize },
    NotInvariant { i: usize, j: usize, k: usize },
    UnitLaw { i: usize },
    Grading { i: usize },
}

impl fmt::Display for FrobeniusFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusFailure::Asymmetric { i, j } => write!(f, "pairing not symmetric on basis ({i}, {j})"),
            FrobeniusFailure::NotInvariant { i, j, k } => {
                write!(f, "(a, b*c) != (a*b, c) on basis ({i}, {j}, {k})")
            }
            FrobeniusFailure::UnitLaw { i } => write!(f, "tr(1*x) != tr(x) for basis {i}"),
            FrobeniusFailure::Grading { i } => write!(f, "trace nonzero off top degree for basis {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub basis_size: usize,
    pub triples_checked: usize,
    pub pairs_checked: usize,
    pub failures: Vec<FrobeniusFailure>,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
