//! Exact Gröbner bases, radical membership, saturation and tangent cones.

use jumploci::polyalg::{groebner_basis, parse_polynomial, Budget, Ideal, MonomialOrder};

fn main() -> jumploci::Result<()> {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let p = |s: &str| parse_polynomial(s, &vars).unwrap();
    let b = Budget::default();

    let gens = vec![p("x*y - z"), p("y*z - x"), p("z*x - y")];
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
        let gb = groebner_basis(&gens, order, b)?;
        println!("{order:?} basis:");
        for g in &gb {
            println!("  {}", g.to_string_with(&vars));
        }
    }

    let i = Ideal::new(3, vec![p("x^2"), p("y^3 - x*y")]);
    println!("x in sqrt(I)? {}", i.radical_contains(&p("x"), b)?);
    println!("y in sqrt(I)? {}", i.radical_contains(&p("y"), b)?);

    // a nodal cubic has two lines through the origin as its tangent cone
    let node = Ideal::new(3, vec![p("y^2 - x^2 - x^3"), p("z")]);
    println!("tangent cone of the node: {:?}", node.tangent_cone(b)?.gen_strings(&vars));

    let sat = Ideal::new(3, vec![p("x*y"), p("x*z")]).saturate(&p("x"), b)?;
    println!("(xy, xz) : x^oo = {:?}", sat.gen_strings(&vars));
    Ok(())
}
