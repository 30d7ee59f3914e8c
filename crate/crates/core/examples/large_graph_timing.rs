//! Time the engine phases on a larger sparse graph. The forward pass
//! extracts one spanning-forest path per cycle (its deliberate hot spot);
//! the contraction pass re-reduces the shared column basis as edges vanish.
//!
//! ```bash
//! cargo run --release --example large_graph_timing
//! ```

use graph_ph::backward::BackwardState;
use graph_ph::events::fb_events;
use graph_ph::forward::run_forward;
use graph_ph::generators::{random_vertex_filtration, sparse_graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() -> graph_ph::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let graph = sparse_graph(&mut rng, 50_000, 1000);
    let f = random_vertex_filtration(&mut rng, &graph, 0, 255);
    println!(
        "graph: {} vertices, {} edges, {} cycles",
        graph.n_vertices(),
        graph.n_edges(),
        graph.n_edges() - graph.n_vertices() + graph.component_count()
    );

    let t = Instant::now();
    let seq = fb_events(&graph, &f)?;
    println!("schedule resolution: {:?}", t.elapsed());

    let n_forward = seq.forward_steps.unwrap();
    let t = Instant::now();
    let forward = run_forward(&graph, &seq.events[..n_forward], 0);
    println!(
        "forward pass:        {:?} ({} cycle columns)",
        t.elapsed(),
        forward.basis.columns.len()
    );

    let t = Instant::now();
    let mut state = BackwardState::new(&graph, forward);
    for (offset, event) in seq.events[n_forward..].iter().enumerate() {
        state.apply(event, n_forward + offset)?;
    }
    let stats = state.stats;
    let (pairs, _) = state.finish();
    println!("contraction pass:    {:?}", t.elapsed());
    println!(
        "{} pairs; peak columns {}, {} supernode cycles",
        pairs.len(),
        stats.peak_columns,
        stats.supernode_cycles
    );
    Ok(())
}
