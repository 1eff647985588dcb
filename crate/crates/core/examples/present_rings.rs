//! Presentations of quantum cohomology and quantum sheaf cohomology rings,
//! their staircase bases and graded dimensions.
//!
//! Run with `cargo run --example present_rings`.

use qsheaf::rings::{qsc_presentation_p1p1, quantum_cohomology_products, quotient_algebra};
use qsheaf::{parse_rational, Rational, RingPresentation};

fn show(pres: &RingPresentation) {
    println!("{}", pres.description());
    for r in pres.relations() {
        println!("  {r}");
    }
    match quotient_algebra(pres) {
        Ok(qa) => {
            let basis: Vec<String> = qa.basis_polynomials().iter().map(|b| b.render()).collect();
            println!("  basis: {}", basis.join(", "));
            println!("  graded dimensions: {:?}", qa.graded_dimensions());
        }
        Err(e) => println!("  {e}"),
    }
}

fn params(v: [&str; 3]) -> [Rational; 3] {
    v.map(|s| parse_rational(s).expect("rational literal"))
}

fn main() -> qsheaf::Result<()> {
    for dims in [&[3][..], &[1, 2]] {
        show(&quantum_cohomology_products(dims)?);
    }
    show(&qsc_presentation_p1p1(&params(["1", "0", "0"]), &params(["0", "0", "0"])));
    show(&qsc_presentation_p1p1(&params(["1/2", "-3", "2"]), &params(["1", "1/5", "-1"])));
    // Both relations share the factor psi + psit at q = 0.
    show(&qsc_presentation_p1p1(&params(["1", "0", "0"]), &params(["1", "0", "0"])));
    Ok(())
}
