//! General Artin groups up to Malcev completion: contract odd-labelled edges
//! and test the result for being complete multipartite.

use jumploci::artin::{artin_malcev_verdict, parse_graph_file, LabeledGraph};

fn main() -> jumploci::Result<()> {
    for n in 3..=6 {
        let v = artin_malcev_verdict(&LabeledGraph::braid(n));
        println!("B_{n}: contraction {:?}, pass: {}", v.contraction_vertices, v.pass);
    }
    let even_square = parse_graph_file("graph sq\nvertices a b c d\nedge a b 4\nedge b c\nedge c d 4\nedge d a\n")?;
    let v = artin_malcev_verdict(&even_square);
    println!("even square: pass {} ({})", v.pass, v.product.unwrap_or_default());
    let mixed = parse_graph_file("graph m\nvertices a b c d\nedge a b 3\nedge b c 2\nedge c d 2\n")?;
    let v = artin_malcev_verdict(&mixed);
    println!("mixed path: contraction {:?} edges {:?}, pass {}", v.contraction_vertices, v.contraction_edges, v.pass);
    Ok(())
}
