//! Trace, pairing, Gram matrix and the Frobenius and closure checks.
//!
//! Run with `cargo run --example frobenius`.

use qsheaf::frobenius::make_frobenius;
use qsheaf::poly::parse_poly;
use qsheaf::rings::{qsc_presentation_p1p1, quantum_cohomology_products, quotient_algebra};
use qsheaf::{parse_rational, FrobeniusAlgebra};

fn report(name: &str, fa: &FrobeniusAlgebra) {
    let g = fa.gram_matrix();
    println!("{name}");
    for row in &g.entries {
        let cells: Vec<String> = row.iter().map(|e| e.render()).collect();
        println!("  [{}]", cells.join(", "));
    }
    println!("  det = {}, nondegenerate: {}", g.determinant, g.nondegenerate);
    let check = fa.frobenius_check();
    println!("  frobenius: {} failures over {} triples", check.failures.len(), check.triples_checked);
    println!("  closure: {}", fa.closure_check());
}

fn main() -> qsheaf::Result<()> {
    let p3 = FrobeniusAlgebra::with_default_trace(quotient_algebra(&quantum_cohomology_products(&[3])?)?)?;
    report("QH(P^3)", &p3);

    let r = |s: &str| parse_rational(s).expect("rational literal");
    let pres = qsc_presentation_p1p1(&["0", "1", "1"].map(r), &["0", "0", "0"].map(r));
    let qa = quotient_algebra(&pres)?;
    let t = qa.table().clone();
    // psit^2 reduces to q2 + ..., so it cannot fix the trace.
    if let Err(e) = make_frobenius(qa.clone(), parse_poly("psit^2", t.clone())?, r("1")) {
        println!("normalizing on psit^2: {e}");
    }
    let fa = make_frobenius(qa, parse_poly("psi*psit", t.clone())?, r("2"))?;
    report("QSC(P^1xP^1), epsilon=(0,1,1), tr(psi*psit) = 2", &fa);
    println!("  tr(psi^2) = {}", fa.trace(&parse_poly("psi^2", t.clone())?)?);
    println!("  tr(psi*psit) = {}", fa.trace(&parse_poly("psi*psit", t.clone())?)?);
    println!("  psi * psit = {}", fa.quantum_product(&parse_poly("psi", t.clone())?, &parse_poly("psit", t)?)?);
    Ok(())
}
