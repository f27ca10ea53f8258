//! Right-angled Artin groups: resonance components from the graph, checked
//! against the algebra, and the quasi-Kähler / Kähler answers.

use jumploci::artin::{raag_kahler_verdict, raag_presentation, raag_resonance_components, raag_serre_verdict, raag_suite};
use jumploci::fpgroup::cup_structure;
use jumploci::jumploci::resonance_ideal;
use jumploci::polyalg::{union_of_subspaces, Budget, LinearSubspace};

fn main() -> jumploci::Result<()> {
    let b = Budget::default();
    for g in raag_suite() {
        let comps = raag_resonance_components(&g)?;
        let spaces: Vec<LinearSubspace> = comps.iter().map(|c| c.subspace.clone()).collect();
        let union = union_of_subspaces(g.num_vertices(), &spaces, true, b)?;
        let r1 = resonance_ideal(&cup_structure(&raag_presentation(&g))?, 1);
        let agrees = r1.variety_ideal().variety_equal(&union, b)?;
        let serre = raag_serre_verdict(&g)?;
        println!(
            "{:8} components {:?}  R_1 agrees: {agrees}  quasi-Kähler: {}  Kähler: {}",
            g.name,
            comps.iter().map(|c| c.p.label()).collect::<Vec<_>>(),
            serre.product.as_deref().unwrap_or("no"),
            raag_kahler_verdict(&g).kahler,
        );
    }
    Ok(())
}
