//! Interleave includes and contracts freely: validation, a separation that
//! only interleaving exposes, and the size-bounded schedule generator.
//!
//! ```bash
//! cargo run --example hourglass_interleaving
//! ```

use graph_ph::generators::threshold_schedule;
use graph_ph::hourglass::{hourglass_persistence, validate_schedule};
use graph_ph::witness::fixture;
use graph_ph::{Filtration, Graph, HourglassSchedule, ScheduleOp};
use rand::SeedableRng;

fn main() -> graph_ph::Result<()> {
    use ScheduleOp::{Contract, Include};

    let graph = Graph::new(4, &[(0, 1), (1, 2), (2, 3)])?;
    let f = Filtration::from_vertex_values(&graph, vec![1.0, 1.0, 2.0, 2.0])?;

    // Contract the first complex before the second is even included.
    let schedule = HourglassSchedule::new(vec![Include(0), Contract(0), Include(1), Contract(1)]);
    validate_schedule(&graph, &f, &schedule)?;
    let diagram = hourglass_persistence(&graph, &f, &schedule)?;
    println!("interleaved diagram: {} pairs", diagram.pairs.len());

    // Invalid schedules are rejected with a specific reason.
    let bad = HourglassSchedule::new(vec![Contract(0), Include(0), Include(1)]);
    println!("bad schedule: {:?}", validate_schedule(&graph, &f, &bad).unwrap_err());

    // Two trees with identical forward-backward diagrams; spawning the
    // middle complex first tells them apart.
    let (g1, f1) = fixture("tree_twin_a")?;
    let (g2, f2) = fixture("tree_twin_b")?;
    let early = HourglassSchedule::new(vec![
        Include(1),
        Include(0),
        Include(2),
        Contract(2),
        Contract(1),
        Contract(0),
    ]);
    let d1 = hourglass_persistence(&g1, &f1, &early)?;
    let d2 = hourglass_persistence(&g2, &f2, &early)?;
    println!("early include separates the twin trees: {}", !d1.step_multiset_eq(&d2));

    // Bounding the live size: contract everything whenever more than
    // `threshold` simplices are alive. Useful when a graph is too large to
    // filter fully before contracting.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let big = graph_ph::generators::sparse_graph(&mut rng, 5000, 100);
    let bf = graph_ph::generators::random_vertex_filtration(&mut rng, &big, 0, 50);
    let (bounded, peak) = threshold_schedule(&big, &bf, 800);
    validate_schedule(&big, &bf, &bounded)?;
    println!(
        "size-bounded schedule over {} complexes: {} ops, peak live {} simplices",
        bf.n_levels(),
        bounded.ops().len(),
        peak
    );
    Ok(())
}
