//! Buchberger's algorithm, normal forms and (radical) ideal membership.
//!
//! Run with `cargo run --example groebner`.

use std::sync::Arc;

use qsheaf::groebner::{buchberger, ideal_member, radical_member, s_polynomial};
use qsheaf::{parse_poly, IdealPresentation, MonomialOrder, Variable, VariableTable};

fn main() -> qsheaf::Result<()> {
    let table = Arc::new(VariableTable::new(vec![Variable::generator("x", 1), Variable::generator("y", 1)])?);
    let p = |s: &str| parse_poly(s, table.clone()).expect("valid expression");

    let ideal = IdealPresentation::new(table.clone(), vec![p("x^2 - y^2"), p("x*y - y^2")], MonomialOrder::DegRevLex)?;
    let gb = buchberger(&ideal);
    println!("reduced basis:");
    for g in gb.elements() {
        println!("  {g}");
    }
    println!("every S-polynomial reduces to zero: {}", gb.is_groebner());
    println!("S(g0, g1) = {}", s_polynomial(&gb.elements()[0], &gb.elements()[1], gb.order())?);

    let h = p("x^3 + x*y^2 - 2*y^3 + x");
    println!("NF({h}) = {}", gb.normal_form(&h)?);
    println!("x^3 - y^3 in I: {}", ideal_member(&p("x^3 - y^3"), &gb)?);
    println!("x - y in I: {}", ideal_member(&p("x - y"), &gb)?);

    // x - y is not in I = <(x - y)(x + y), y(x - y)>, but V(I) is the line x = y
    // together with the origin, so only some power of a multiple of it is.
    println!("(x - y)^2 in I: {}", ideal_member(&p("(x - y)^2"), &gb)?);
    let cusp = IdealPresentation::new(table.clone(), vec![p("x^3"), p("y^2")], MonomialOrder::DegRevLex)?;
    println!("x + y in rad <x^3, y^2>: {}", radical_member(&p("x + y"), &cusp)?);
    println!("x + 1 in rad <x^3, y^2>: {}", radical_member(&p("x + 1"), &cusp)?);
    Ok(())
}
