//! Exact polynomial arithmetic over a graded variable table.
//!
//! Run with `cargo run --example polynomials`.

use std::sync::Arc;

use qsheaf::{parse_poly, MonomialOrder, Variable, VariableTable};

fn main() -> qsheaf::Result<()> {
    // Generators first, then instanton variables. q has degree 3 as on P^2.
    let table = Arc::new(VariableTable::new(vec![
        Variable::generator("x", 1),
        Variable::generator("y", 1),
        Variable::instanton("q", 3),
    ])?);

    let f = parse_poly("(x + 1/2*y)^3 - q", table.clone())?;
    let g = parse_poly("x*y - 2/3*y^2", table.clone())?;
    println!("f       = {f}");
    println!("g       = {g}");
    println!("f + g   = {}", &f + &g);
    println!("f * g   = {}", &f * &g);
    println!("g^2     = {}", g.pow(2));
    println!("deg f   = {:?}, homogeneous: {}", f.graded_degree(), f.is_homogeneous());
    println!("deg f*g = {:?}", (&f * &g).graded_degree());

    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::block_degrevlex()] {
        let (m, c) = f.leading_term(&order).expect("f is nonzero");
        println!("leading term of f under {order:?}: {c} * {:?}", m.exponents());
    }

    match parse_poly("x + z", table) {
        Ok(p) => println!("unexpected: {p}"),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}
