//! Interleaved include/contract schedules.
//!
//! Interleaving breaks the phase separation the streaming engines rely on,
//! so hourglass diagrams are computed through the oracle machinery: the
//! component tracker for dimension 0 and the coned reduction for
//! dimension 1. Diagrams are combinatorial-time only; no function time is
//! defined for interleaved schedules.

use crate::diagram::{Mode, PersistenceDiagram};
use crate::error::Result;
use crate::events::hourglass_events;
use crate::filtration::Filtration;
use crate::graph::Graph;
use crate::oracle::oracle_raw;
use crate::schedule::HourglassSchedule;

/// Checks a schedule against the intermediate complexes of `f`.
pub fn validate_schedule(
    graph: &Graph,
    f: &Filtration,
    schedule: &HourglassSchedule,
) -> Result<()> {
    let n_complexes = f.n_levels();
    let _ = graph;
    schedule.validate(n_complexes)
}

/// Combinatorial-time diagram of an interleaved schedule. Incomplete
/// schedules leave their surviving features open at infinity.
pub fn hourglass_persistence(
    graph: &Graph,
    f: &Filtration,
    schedule: &HourglassSchedule,
) -> Result<PersistenceDiagram> {
    let seq = hourglass_events(graph, f, schedule)?;
    let raw = oracle_raw(graph, &seq);
    Ok(crate::modes::assemble(Mode::Hourglass, raw, &seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::sigma_tau_persistence;
    use crate::permutation::Permutation;
    use crate::schedule::ScheduleOp::{Contract, Include};

    #[test]
    fn phase_separated_schedule_matches_permuted_pipeline() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 2.0, 1.0, 2.0]).unwrap();
        let sigma = Permutation::reverse(2);
        let tau = Permutation::identity(2);
        let schedule = HourglassSchedule::phase_separated(sigma.mapping(), tau.mapping());
        let hourglass = hourglass_persistence(&g, &f, &schedule).unwrap();
        let pipeline = sigma_tau_persistence(&g, &f, &sigma, &tau).unwrap();
        assert!(hourglass.step_multiset_eq(&pipeline));
    }

    #[test]
    fn interleaved_two_level_schedule() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 1.0, 2.0]).unwrap();
        let schedule =
            HourglassSchedule::new(vec![Include(0), Contract(0), Include(1), Contract(1)]);
        let d = hourglass_persistence(&g, &f, &schedule).unwrap();
        assert_eq!(d.essential_count(0), 1);
        assert!(d.pairs.iter().all(|p| p.birth_value.is_none()));
    }

    #[test]
    fn incomplete_schedule_leaves_survivors_open() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 1.0, 2.0, 2.0]).unwrap();
        let schedule = HourglassSchedule::new(vec![Include(0), Include(1), Contract(0)]);
        let d = hourglass_persistence(&g, &f, &schedule).unwrap();
        // The uncontracted component plus the supernode stay open.
        assert_eq!(d.essential_count(0), 2);
    }

    #[test]
    fn early_include_separates_twin_trees() {
        // Two trees with the same forward-backward behaviour: spawning the
        // middle complex first exposes a different component count.
        let g1 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let g2 = Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let f1 =
            Filtration::from_vertex_values(&g1, vec![1.0, 3.0, 2.0, 1.0, 2.0, 1.0]).unwrap();
        let f2 =
            Filtration::from_vertex_values(&g2, vec![1.0, 3.0, 1.0, 2.0, 2.0, 1.0]).unwrap();
        let schedule = HourglassSchedule::new(vec![
            Include(1),
            Include(0),
            Include(2),
            Contract(2),
            Contract(1),
            Contract(0),
        ]);
        let mut d1 = hourglass_persistence(&g1, &f1, &schedule).unwrap();
        let mut d2 = hourglass_persistence(&g2, &f2, &schedule).unwrap();
        assert!(!d1.step_multiset_eq(&d2));
        // After the first include one graph shows two components, the other
        // one; visible once within-step churn is dropped.
        d1.drop_zero_length();
        d2.drop_zero_length();
        let births_at_zero =
            |d: &PersistenceDiagram| d.dim(0).filter(|p| p.birth_step == 0).count();
        assert_eq!(births_at_zero(&d1), 2);
        assert_eq!(births_at_zero(&d2), 1);
    }
}
