//! Build a small filtered graph, run the inclusion-only and the
//! forward-backward pipelines, and recover the one-sided diagrams back out
//! of the combined one.
//!
//! ```bash
//! cargo run --example forward_backward_basics
//! ```

use graph_ph::modes::{
    backward_only, fb_persistence, forward_persistence, recover_backward, recover_forward,
};
use graph_ph::{Filtration, Graph};

fn print_diagram(label: &str, diagram: &graph_ph::PersistenceDiagram) {
    println!("{label}:");
    for p in diagram.sorted_pairs() {
        let death = match p.death_step {
            graph_ph::Death::At(d) => d.to_string(),
            graph_ph::Death::Never => "inf".to_string(),
        };
        println!("  dim {}  ({}, {})", p.dim, p.birth_step, death);
    }
}

fn main() -> graph_ph::Result<()> {
    // A 4-cycle with a pendant vertex; values play the role of a degree or
    // height function.
    let graph = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])?;
    let f = Filtration::from_vertex_values(&graph, vec![1.0, 2.0, 1.0, 2.0, 3.0])?;

    // Forward: the cycle is born when the square closes and never dies.
    let forward = forward_persistence(&graph, &f);
    print_diagram("forward", &forward);

    // Forward-backward: contraction finishes every feature off. The cycle
    // now has a finite lifetime and exactly one essential component is left.
    let fb = fb_persistence(&graph, &f)?;
    print_diagram("forward-backward", &fb);
    assert_eq!(fb.essential_count(0), 1);
    assert_eq!(fb.essential_count(1), 0);

    // The one-sided diagrams live inside the combined one.
    let n = f.n_levels() - 1;
    assert!(recover_forward(&fb, n).step_multiset_eq(&forward));
    let backward = backward_only(&graph, &f)?;
    let mut backward_visible = backward.clone();
    backward_visible
        .pairs
        .retain(|p| !(p.birth_step == 0 && p.death_step == graph_ph::Death::At(0)));
    assert!(recover_backward(&fb, n).step_multiset_eq(&backward_visible));
    println!("recovery checks passed");
    Ok(())
}
