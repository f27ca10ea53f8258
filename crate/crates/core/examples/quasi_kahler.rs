//! The full obstruction battery on the Ziegler arrangement group with its two
//! resonance components.

use jumploci::fpgroup::{corpus_presentation, cup_structure};
use jumploci::obstruct::{parse_component_file, run_battery, Battery};
use jumploci::polyalg::Budget;

fn main() -> jumploci::Result<()> {
    let p = corpus_presentation("ziegler-2134")?;
    let c = cup_structure(&p)?;
    let (_, comps) = parse_component_file(include_str!("../data/ziegler.comp"))?;
    let report = run_battery(&Battery {
        cup: &c,
        presentation: Some(&p),
        components: Some(&comps),
        k_max: 2,
        budget: Budget::default(),
    })?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
