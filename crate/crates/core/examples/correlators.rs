//! Three-point functions and their instanton expansion.
//!
//! Run with `cargo run --example correlators`.

use qsheaf::poly::parse_poly;
use qsheaf::rings::{qsc_presentation_p1p1, quantum_cohomology_products, quotient_algebra};
use qsheaf::{FrobeniusAlgebra, Rational};

fn main() -> qsheaf::Result<()> {
    let p2 = FrobeniusAlgebra::with_default_trace(quotient_algebra(&quantum_cohomology_products(&[2])?)?)?;
    let t = p2.table().clone();
    let e = |s: &str| parse_poly(s, t.clone()).expect("valid expression");
    for [a, b, c] in [["H^2", "H^2", "H"], ["H", "H", "H"], ["1", "H", "H"], ["H^2", "H^2", "H^2"]] {
        let v = p2.three_point(&e(a), &e(b), &e(c))?;
        println!("P^2      <{a}, {b}, {c}> = {}", v.value);
    }

    let zero = [Rational::default(), Rational::default(), Rational::default()];
    let qsc = FrobeniusAlgebra::with_default_trace(quotient_algebra(&qsc_presentation_p1p1(&zero, &zero))?)?;
    let t = qsc.table().clone();
    let x = parse_poly("psi*psit", t.clone()).expect("valid expression");
    let v = qsc.three_point(&x, &x, &x)?;
    println!("P^1xP^1  <psi*psit, psi*psit, psi*psit> = {}", v.value);
    for (beta, c) in v.by_degree() {
        println!("         degree {beta:?}: {c}");
    }
    println!("         q1^1 q2^0 coefficient: {}", v.instanton_coefficient(&[1, 0])?);

    println!("basis correlators of P^1xP^1, i <= j <= k:");
    let basis = qsc.algebra().basis_polynomials();
    for ([i, j, k], v) in qsc.correlator_table() {
        if !v.value.is_zero() {
            println!("  <{}, {}, {}> = {}", basis[i], basis[j], basis[k], v.value);
        }
    }
    Ok(())
}
