//! Oracles shared by the integration tests. Nothing here goes through the
//! library's reduction code: membership is decided by plain linear algebra,
//! QSC degeneracy by a resultant, correlators by direct power reduction.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use qsheaf::{Monomial, Polynomial, Rational, Variable, VariableTable};
use rand::Rng;

pub fn r(s: &str) -> Rational {
    qsheaf::parse_rational(s).unwrap()
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn generators(names: &[&str]) -> Arc<VariableTable> {
    Arc::new(VariableTable::new(names.iter().map(|n| Variable::generator(*n, 1)).collect()).unwrap())
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A small nonzero rational such as `-3/2`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-4..=4);
        if n != 0 {
            return ratio(n, rng.gen_range(1..=3));
        }
    }
}

/// Random homogeneous polynomial of degree `d` over a table of degree-one
/// generators; may be zero.
pub fn random_homogeneous(table: &Arc<VariableTable>, d: u32, density: f64, rng: &mut impl Rng) -> Polynomial {
    let mut terms = Vec::new();
    for e in monomials_of_degree(table.len(), d) {
        if rng.gen_bool(density) {
            terms.push((Monomial::new(e), small_rational(rng)));
        }
    }
    Polynomial::from_terms(table.clone(), terms)
}

/// Random polynomial of degree at most `d`.
pub fn random_polynomial(table: &Arc<VariableTable>, d: u32, density: f64, rng: &mut impl Rng) -> Polynomial {
    (0..=d).fold(Polynomial::zero(table.clone()), |acc, k| &acc + &random_homogeneous(table, k, density, rng))
}

/// Rank of a list of sparse rows by Gaussian elimination.
type SparseRow = BTreeMap<Vec<u32>, Rational>;

fn rank(rows: Vec<SparseRow>) -> usize {
    let mut pivots: Vec<(Vec<u32>, SparseRow)> = Vec::new();
    for mut row in rows {
        for (col, prow) in &pivots {
            if let Some(c) = row.get(col).cloned() {
                for (k, v) in prow {
                    let e = row.entry(k.clone()).or_insert_with(Rational::zero);
                    *e -= &c * v;
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if let Some((col, lead)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
            for v in row.values_mut() {
                *v /= &lead;
            }
            // keep earlier pivot rows reduced against the new one
            for (_, prow) in pivots.iter_mut() {
                if let Some(c) = prow.get(&col).cloned() {
                    for (k, v) in &row {
                        let e = prow.entry(k.clone()).or_insert_with(Rational::zero);
                        *e -= &c * v;
                    }
                    prow.retain(|_, v| !v.is_zero());
                }
            }
            pivots.push((col, row));
        }
    }
    pivots.len()
}

fn sparse(p: &Polynomial) -> SparseRow {
    p.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

/// Membership of a homogeneous `p` in the ideal of homogeneous `gens`,
/// decided in the single graded piece of degree `deg p`: `p ∈ I` iff `p`
/// lies in the span of `m·g` with `deg m + deg g = deg p`.
pub fn homogeneous_member(p: &Polynomial, gens: &[Polynomial]) -> bool {
    if p.is_zero() {
        return true;
    }
    let table = p.table().clone();
    let d = p.graded_degree().expect("homogeneous input");
    let mut span = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.graded_degree().expect("homogeneous generator");
        if dg > d {
            continue;
        }
        for e in monomials_of_degree(table.len(), d - dg) {
            let m = Polynomial::monomial(table.clone(), Monomial::new(e), Rational::one());
            span.push(sparse(&(&m * g)));
        }
    }
    let without = rank(span.clone());
    span.push(sparse(p));
    rank(span) == without
}

/// `(af - cd)² - (ae - bd)(bf - ce)` for the two binary quadrics that
/// remain of the QSC relations on P¹×P¹ at q = 0. Zero iff they share a
/// linear factor.
pub fn qsc_resultant(eps: &[Rational; 3], gam: &[Rational; 3]) -> Rational {
    let (a, b, c) = (Rational::one(), eps[0].clone(), -(&eps[1] * &eps[2]));
    let (d, e, f) = (-(&gam[1] * &gam[2]), gam[0].clone(), Rational::one());
    let t = &a * &f - &c * &d;
    &t * &t - (&a * &e - &b * &d) * (&b * &f - &c * &e)
}

/// Parameters whose two quadrics share the factor `psi + s*psit`.
pub fn degenerate_qsc_parameters(s: &Rational, t: &Rational, u: &Rational) -> ([Rational; 3], [Rational; 3]) {
    // (psi + s psit)(psi + t psit) and (psi + s psit)(u psi + psit/s)
    let eps = [s + t, -(s * t), Rational::one()];
    let gam = [s.recip() + s * u, -u.clone(), Rational::one()];
    (eps, gam)
}

/// Three-point function on QH(P^n) from `H^{n+1} = q`: the trace of
/// `H^k` is `q^{(k-n)/(n+1)}` when `k ≡ n mod (n+1)`, else 0. Returned as
/// the power of q, or None for zero.
pub fn pn_correlator(n: u32, exponents: [u32; 3]) -> Option<u32> {
    let k: u32 = exponents.iter().sum();
    (k % (n + 1) == n).then(|| k / (n + 1))
}

/// Trace of `psi^a psit^b` in the undeformed QSC ring of P¹×P¹, where
/// `psi² = q1`, `psit² = q2`: nonzero only for odd `a` and `b`.
pub fn undeformed_p1p1_trace(a: u32, b: u32) -> Option<(u32, u32)> {
    (a % 2 == 1 && b % 2 == 1).then_some((a / 2, b / 2))
}
