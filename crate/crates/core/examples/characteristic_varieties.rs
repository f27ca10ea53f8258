//! Characteristic varieties V_k through Fitting ideals of the Alexander
//! matrix, checked pointwise against the twisted chain complex.

use jumploci::fpgroup::corpus_presentation;
use jumploci::jumploci::{charvar_ideal, charvar_point_test};
use jumploci::polyalg::rat;

fn main() -> jumploci::Result<()> {
    for name in ["trefoil", "figure-eight", "heisenberg", "p3-raag"] {
        let p = corpus_presentation(name)?;
        let v1 = charvar_ideal(&p, 1)?;
        println!("{name}: V_1 = Z{:?} (identity included: {})", v1.ideal.gen_strings(&v1.vars), v1.identity_member());
    }

    // on P3 the locus is the subtorus t2 = 1
    let p = corpus_presentation("p3-raag")?;
    let v1 = charvar_ideal(&p, 1)?;
    for rho in [[rat(2), rat(1), rat(5)], [rat(2), rat(3), rat(5)]] {
        let dim = charvar_point_test(&p, &rho)?;
        let shown: Vec<String> = rho.iter().map(|x| x.to_string()).collect();
        println!("rho = ({}): dim H^1 = {dim}, ideal vanishes: {}", shown.join(", "), v1.ideal.vanishes_at(&rho));
    }
    Ok(())
}
