//! Toric data, Euler-sequence deformations, bundle regularity and the
//! omalous conditions.
//!
//! Run with `cargo run --example toric_bundle`.

use qsheaf::rings::stanley_reisner_ring;
use qsheaf::toric::{
    check_bundle_regularity, check_omalous, check_omalous_twists, chern_of_twisted_sum, euler_matrix_default,
    minors_ideal, p1p1_deformation, product_projective_toric,
};
use qsheaf::{parse_rational, DeformationMatrix};

fn main() -> qsheaf::Result<()> {
    let toric = product_projective_toric(&[1, 1])?;
    println!("coordinates {:?}, grading {:?}", toric.coordinates(), toric.grading());
    let irrelevant: Vec<String> = toric.irrelevant_polynomials().iter().map(|p| p.render()).collect();
    println!("irrelevant ideal: <{}>", irrelevant.join(", "));
    println!(
        "Stanley-Reisner relations: {:?}",
        stanley_reisner_ring(&toric)?.relations().iter().map(|r| r.render()).collect::<Vec<_>>()
    );

    let tangent = chern_of_twisted_sum(&toric)?;
    println!("c(T) = 1 + ({}) + ({})", tangent.c1, tangent.c2);

    let e0 = euler_matrix_default(&toric)?;
    let minors: Vec<String> = minors_ideal(&e0)?.generators().iter().map(|p| p.render()).collect();
    println!("E0 = {:?}", e0.render_rows());
    println!("  minors: <{}>", minors.join(", "));
    println!("  regular: {}", check_bundle_regularity(&toric, &e0)?);

    let r = |s: &str| parse_rational(s).expect("rational literal");
    let deformed = p1p1_deformation(&["1/2", "-3", "2"].map(r), &["1", "1/5", "-1"].map(r));
    println!("deformation {:?}", deformed.render_rows());
    println!(
        "  regular: {}, omalous: {}",
        check_bundle_regularity(&toric, &deformed)?,
        check_omalous(&toric, &deformed)?.is_omalous()
    );

    let rows = [["x0", "0"], ["x0", "0"], ["0", "x2"], ["0", "x3"]];
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    let duplicated = DeformationMatrix::parse(toric.clone(), &rows)?;
    println!("duplicated row {:?}", duplicated.render_rows());
    println!("  regular: {}", check_bundle_regularity(&toric, &duplicated)?);

    let altered = check_omalous_twists(&toric, &[vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 1]])?;
    println!(
        "twists O(1,0) + O(2,0) + O(0,1)^2: c1 = {}, c2 = {}, omalous: {}",
        altered.bundle.c1,
        altered.bundle.c2,
        altered.is_omalous()
    );
    Ok(())
}
