//! The tangent cone test: TC_1(V_k) must equal R_k for a 1-formal group.

use jumploci::fpgroup::{corpus_presentation, cup_structure};
use jumploci::jumploci::{charvar_ideal, resonance_ideal, tangent_cone_at_identity};
use jumploci::obstruct::{formality_test, Verdict};
use jumploci::polyalg::Budget;

fn main() -> jumploci::Result<()> {
    let b = Budget::default();
    for name in ["heisenberg", "ziegler-2134", "z3", "surface-2"] {
        let p = corpus_presentation(name)?;
        let c = cup_structure(&p)?;
        let v1 = charvar_ideal(&p, 1)?;
        let tc = tangent_cone_at_identity(&v1, b)?;
        let r1 = resonance_ideal(&c, 1);
        println!("{name}: TC_1(V_1) = Z{:?}, R_1 = Z{:?}", tc.ideal.gen_strings(&tc.vars), r1.ideal.gen_strings(&r1.vars));
        let f = formality_test(&p, &c, c.n.min(2), b)?;
        let verdict = match f.verdict {
            Verdict::Fail => "not 1-formal",
            _ => "consistent with 1-formality",
        };
        println!("  -> {verdict}");
    }
    Ok(())
}
