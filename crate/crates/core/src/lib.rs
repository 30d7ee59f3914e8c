//! Persistence diagrams of graphs under inclusion and contraction
//! schedules.
//!
//! A filtration builds a graph up level by level; a contraction schedule
//! collapses its intermediate complexes back down to a point. This crate
//! computes the persistence diagrams of any composition of the two:
//!
//! * [`modes::forward_persistence`] - classic sublevel inclusion.
//! * [`modes::backward_only`] - the whole graph at once, then contraction
//!   from the last intermediate complex to the first.
//! * [`modes::fb_persistence`] - inclusion followed by reverse contraction.
//! * [`modes::fg_persistence`] - inclusion by one filtration, contraction
//!   scheduled by a second.
//! * [`modes::sigma_tau_persistence`] - both phases reordered by
//!   permutations of the level indices.
//! * [`modes::extended_fb`] - contraction descending by height, the
//!   ascending-descending pass expressed through contractions.
//! * [`modes::ff_shortcut`] - the `(f, f)` schedule computed directly from
//!   the forward pass alone.
//! * [`hourglass::hourglass_persistence`] - arbitrary valid interleavings
//!   of includes and contracts.
//!
//! Every mode is backed twice: a streaming engine (union-find plus an F2
//! cycle basis) and an independent brute-force oracle (component tracking
//! plus textbook reduction of the coned complex) that exists to check the
//! engine. [`metrics`] provides exact bottleneck distances, [`witness`]
//! bundles small graph pairs separating the modes from each other, and
//! [`stability`] fuzzes the two-function stability bound.
//!
//! The `examples/` directory walks through each capability as a runnable
//! program:
//!
//! ```text
//! cargo run --example forward_backward_basics
//! cargo run --example two_function_schedules
//! cargo run --example permuted_schedules
//! cargo run --example height_descent_vs_reverse
//! cargo run --example hourglass_interleaving
//! cargo run --example oracle_crosscheck
//! cargo run --example bottleneck_and_stability
//! cargo run --example large_graph_timing
//! ```
//!
//! The thin `ph` binary exposes the same pipelines as subcommands
//! (`compute`, `oracle`, `distance`, `witness`, `stability`, `bench`).

pub mod backward;
pub mod complexes;
pub mod diagram;
pub mod error;
pub mod events;
pub mod filtration;
pub mod forward;
pub mod generators;
pub mod graph;
pub mod hourglass;
pub mod metrics;
pub mod modes;
pub mod oracle;
pub mod permutation;
pub mod schedule;
pub mod sparse;
pub mod stability;
pub mod witness;

pub use diagram::{Death, Mode, PersistenceDiagram, PersistencePair};
pub use error::{Error, Result};
pub use filtration::Filtration;
pub use graph::Graph;
pub use permutation::Permutation;
pub use schedule::{HourglassSchedule, ScheduleOp};
