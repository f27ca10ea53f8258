//! Parse a presentation, take Fox derivatives, and build the abelianized
//! Alexander matrix of the trefoil and figure-eight knot groups.

use jumploci::fpgroup::{
    abelianize_presentation, abelianized_alexander_matrix, corpus_presentation, fox_derivative, parse_presentation,
};
use jumploci::polyalg::var_names;

fn main() -> jumploci::Result<()> {
    let p = parse_presentation("group trefoil\ngens x y\nrel x y x y^-1 x^-1 y^-1\n")?;
    let names = &p.generator_names;
    let r = &p.relators[0];
    for i in 0..p.num_generators() {
        let d = fox_derivative(r, i);
        let terms: Vec<String> = d
            .terms()
            .map(|(w, c)| format!("{c:+}·{}", if w.is_empty() { "1".into() } else { w.display_with(names) }))
            .collect();
        println!("d r / d {} = {}", names[i], terms.join(" "));
    }

    for name in ["trefoil", "figure-eight", "z3"] {
        let p = corpus_presentation(name)?;
        let ab = abelianize_presentation(&p);
        let (_, m) = abelianized_alexander_matrix(&p)?;
        let t = var_names("t", ab.rank_b1);
        println!("\n{name}: b1 = {}, torsion {:?}", ab.rank_b1, ab.torsion_orders);
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|e| e.clear_units().to_string_with(&t)).collect();
            println!("  [{}]", row.join(", "));
        }
    }
    Ok(())
}
