//! The classical limit q = 0 and the undeformed limit epsilon = gamma = 0.
//!
//! Run with `cargo run --example limits`.

use std::collections::BTreeMap;

use qsheaf::rings::{
    classical_cohomology_products, presentations_isomorphic_by_renaming, qsc_presentation_p1p1,
    quantum_cohomology_products, quotient_algebra, substitute,
};
use qsheaf::{parse_rational, Rational};

fn main() -> qsheaf::Result<()> {
    let zero = Rational::default();
    for n in 1..=3 {
        let qh = quantum_cohomology_products(&[n])?;
        let at_zero = substitute(&qh, &BTreeMap::from([("q".to_string(), zero.clone())]))?;
        let same = presentations_isomorphic_by_renaming(
            &at_zero,
            &classical_cohomology_products(&[n])?,
            &BTreeMap::from([("H".to_string(), "H".to_string())]),
        )?;
        println!(
            "QH(P^{n}) at q=0: {:?}, classical: {same}",
            at_zero.relations().iter().map(|r| r.render()).collect::<Vec<_>>()
        );
    }

    let r = |s: &str| parse_rational(s).expect("rational literal");
    let qsc = qsc_presentation_p1p1(&["1/2", "-3", "2"].map(r), &["1", "1/5", "-1"].map(r));
    let zeros = BTreeMap::from([("q1".to_string(), zero.clone()), ("q2".to_string(), zero.clone())]);
    let classical = quotient_algebra(&substitute(&qsc, &zeros)?)?;
    println!("{} at q=0: graded dimensions {:?}", qsc.description(), classical.graded_dimensions());

    let undeformed =
        qsc_presentation_p1p1(&[zero.clone(), zero.clone(), zero.clone()], &[zero.clone(), zero.clone(), zero]);
    let rename: BTreeMap<String, String> = [("psi", "H1"), ("psit", "H2"), ("q1", "q1"), ("q2", "q2")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let iso = presentations_isomorphic_by_renaming(&undeformed, &quantum_cohomology_products(&[1, 1])?, &rename)?;
    println!("undeformed QSC(P^1xP^1) ~ QH(P^1xP^1) under psi->H1, psit->H2: {iso}");
    Ok(())
}
