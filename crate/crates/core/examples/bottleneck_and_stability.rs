//! Compare function-time diagrams with the exact bottleneck distance and
//! watch the perturbation bound hold over a fuzz run.
//!
//! ```bash
//! cargo run --example bottleneck_and_stability
//! ```

use graph_ph::metrics::{bottleneck_distance, bottleneck_excluding_essential};
use graph_ph::modes::fg_persistence;
use graph_ph::stability::stability_fuzz;
use graph_ph::{Filtration, Graph};

fn main() -> graph_ph::Result<()> {
    let graph = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])?;
    let f = Filtration::from_vertex_values(&graph, vec![1.0, 2.0, 3.0, 2.0, 4.0])?;
    let g = Filtration::from_vertex_values(&graph, vec![2.0, 1.0, 2.0, 3.0, 1.0])?;

    let base = fg_persistence(&graph, &f, &g)?;

    // Nudge one vertex of f by 1/2 and rebuild.
    let mut moved = f.vertex_values().to_vec();
    moved[2] += 0.5;
    let f2 = Filtration::from_vertex_values(&graph, moved)?;
    let perturbed = fg_persistence(&graph, &f2, &g)?;

    let d1 = bottleneck_distance(&base, &perturbed, 1)?;
    let d0 = bottleneck_excluding_essential(&base, &perturbed)?;
    println!("dimension-1 distance: {d1}");
    println!("dimension-0 distance (essential pair excluded): {d0}");
    let bound = 2.0 * 0.5 + 0.0 + (f.max_value() - f2.max_value()).abs();
    println!("perturbation bound:   {bound}");
    assert!(d1 <= bound && d0 <= bound);

    // Diagrams with different essential counts sit at infinite distance.
    let lonely = fg_persistence(&Graph::new(1, &[])?,
        &Filtration::from_vertex_values(&Graph::new(1, &[])?, vec![1.0])?,
        &Filtration::from_vertex_values(&Graph::new(1, &[])?, vec![1.0])?)?;
    let d = bottleneck_distance(&base, &lonely, 1)?;
    println!("distance to an empty dimension-1 diagram: {d}");

    // A fuzz pass: random pairs, random perturbations, zero violations.
    let report = stability_fuzz(7, 200, 9, 0.75)?;
    println!(
        "fuzz: {} trials, {} violations, max distance/bound ratio {:.3}",
        report.trials,
        report.violations.len(),
        report.max_ratio
    );
    assert!(report.passed());
    Ok(())
}
