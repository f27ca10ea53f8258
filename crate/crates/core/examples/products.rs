//! Jumping loci of free and direct products.

use jumploci::fpgroup::{corpus_presentation, cup_structure, direct_product, free_product};
use jumploci::jumploci::{charvar_ideal, resonance_ideal};

fn main() -> jumploci::Result<()> {
    let a = corpus_presentation("z2")?;
    let b = corpus_presentation("free-2")?;
    let fp = free_product(&a, &b);
    println!("{}V_1 of the free product is everything: {}", fp.to_text(), charvar_ideal(&fp, 1)?.ideal.is_zero());

    let dp = direct_product(&b, &b);
    let r1 = resonance_ideal(&cup_structure(&dp)?, 1);
    println!("\n{}R_1 of F_2 x F_2: {:?}", dp.to_text(), r1.ideal.gen_strings(&r1.vars));
    Ok(())
}
