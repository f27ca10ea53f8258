//! Resonance varieties R_k from the cup product, read off the relators'
//! quadratic Magnus terms.

use jumploci::fpgroup::{corpus, corpus_presentation, cup_structure, CorpusItem};
use jumploci::jumploci::{resonance_ideal, resonance_matrix};
use jumploci::polyalg::var_names;

fn main() -> jumploci::Result<()> {
    let p = corpus_presentation("ziegler-2134")?;
    let c = cup_structure(&p)?;
    print!("{}", c.to_text());
    let z = var_names("z", c.n);
    let m = resonance_matrix(&c);
    println!("resonance matrix ({}x{}):", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string_with(&z)).collect();
        println!("  [{}]", row.join(", "));
    }
    for k in 1..=c.n {
        let r = resonance_ideal(&c, k);
        println!("R_{k}: {:?}, origin included: {}", r.ideal.gen_strings(&z), r.origin_included());
    }

    let CorpusItem::Cup(surface) = corpus("surface-2-cup")? else { unreachable!() };
    for k in 1..=4 {
        let r = resonance_ideal(&surface, k);
        println!("genus 2, R_{k} generators: {}", r.ideal.gens().len());
    }
    Ok(())
}
