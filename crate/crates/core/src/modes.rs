//! User-facing persistence pipelines, one per computation mode, plus the
//! projection transforms that recover the one-sided diagrams from a
//! forward-backward diagram.

use crate::backward::run_engine;
use crate::diagram::{Death, Mode, PersistenceDiagram, PersistencePair};
use crate::error::Result;
use crate::events::{
    backward_events, extended_events, fb_events, fg_events, forward_events, sigma_tau_events,
    EventSequence,
};
use crate::filtration::Filtration;
use crate::forward::{forward_pairs, RawPair};
use crate::graph::Graph;
use crate::permutation::Permutation;

/// Attaches the sequence's time axis to raw step-time pairs.
pub fn assemble(mode: Mode, raw: Vec<RawPair>, seq: &EventSequence) -> PersistenceDiagram {
    let values = seq.step_values.as_deref();
    let pairs = raw
        .into_iter()
        .map(|p| PersistencePair {
            dim: p.dim,
            birth_step: p.birth_step,
            death_step: p.death_step.map(Death::At).unwrap_or(Death::Never),
            birth_value: values.map(|v| v[p.birth_step]),
            death_value: values.map(|v| match p.death_step {
                Some(d) => Death::At(v[d]),
                None => Death::Never,
            }),
        })
        .collect();
    let mut diagram = PersistenceDiagram::new(mode, pairs);
    diagram.shift = seq.shift;
    diagram
}

/// Runs a phase-separated event sequence through the streaming engines.
pub fn engine_diagram(
    graph: &Graph,
    seq: &EventSequence,
    mode: Mode,
) -> Result<PersistenceDiagram> {
    Ok(assemble(mode, run_engine(graph, seq)?, seq))
}

/// Inclusion-only persistence of the sublevel filtration.
pub fn forward_persistence(graph: &Graph, f: &Filtration) -> PersistenceDiagram {
    let seq = forward_events(graph, f);
    let (raw, _) = forward_pairs(graph, &seq);
    assemble(Mode::Forward, raw, &seq)
}

/// Forward by `f`, then contraction of its intermediate complexes from last
/// to first.
pub fn fb_persistence(graph: &Graph, f: &Filtration) -> Result<PersistenceDiagram> {
    let seq = fb_events(graph, f)?;
    let raw = run_engine(graph, &seq)?;
    Ok(assemble(Mode::Fb, raw, &seq))
}

/// Forward by `f`, contraction by the intermediate complexes of `g` in
/// ascending order.
pub fn fg_persistence(graph: &Graph, f: &Filtration, g: &Filtration) -> Result<PersistenceDiagram> {
    let seq = fg_events(graph, f, g);
    let raw = run_engine(graph, &seq)?;
    Ok(assemble(Mode::Fg, raw, &seq))
}

/// Includes intermediate complexes in `sigma` order and contracts them in
/// `tau` order. `(identity, reverse)` coincides with [`fb_persistence`] in
/// combinatorial time.
pub fn sigma_tau_persistence(
    graph: &Graph,
    f: &Filtration,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<PersistenceDiagram> {
    let seq = sigma_tau_events(graph, f, sigma, tau)?;
    let raw = run_engine(graph, &seq)?;
    Ok(assemble(Mode::SigmaTau, raw, &seq))
}

/// The whole graph at step 0, then contraction of the intermediate
/// complexes of `f` from last to first. Combinatorial time only.
pub fn backward_only(graph: &Graph, f: &Filtration) -> Result<PersistenceDiagram> {
    let seq = backward_events(graph, f)?;
    let raw = run_engine(graph, &seq)?;
    Ok(assemble(Mode::Backward, raw, &seq))
}

/// Forward by `f`, then contraction descending by height (the schedule of
/// the negated vertex values), matching the expressive content of an
/// ascending-descending pass.
pub fn extended_fb(graph: &Graph, f: &Filtration) -> Result<PersistenceDiagram> {
    let seq = extended_events(graph, f)?;
    let raw = run_engine(graph, &seq)?;
    Ok(assemble(Mode::Extended, raw, &seq))
}

/// Computes the `(f, f)` forward-backward diagram without running the
/// contraction engine:
/// - a cycle born at step `i` dies at step `n + 1 + i`;
/// - every finite component pair `(b, d)` from the forward pass yields a
///   contraction-born cycle `(n + 1 + b, n + 1 + d)`;
/// - a surviving component born at `b` dies when its level is contracted,
///   at `n + 1 + b`, except the component of the contraction seed.
pub fn ff_shortcut(graph: &Graph, f: &Filtration) -> Result<PersistenceDiagram> {
    f.require_vertex_based(graph)?;
    let seq = fg_events(graph, f, f);
    if graph.n_vertices() == 0 {
        return Ok(assemble(Mode::Fg, Vec::new(), &seq));
    }
    let n_forward = seq.forward_steps.expect("two-function sequences are split");
    let (forward_raw, mut state) = {
        let fwd = forward_events(graph, f);
        let forward = crate::forward::run_forward(graph, &fwd.events, 0);
        let mut pairs = forward.closed_dim0.clone();
        pairs.extend(forward.basis.columns.iter().map(|c| RawPair {
            dim: 1,
            birth_step: c.birth_step,
            death_step: None,
        }));
        (pairs, forward)
    };

    let mut raw = Vec::new();
    for p in &forward_raw {
        match (p.dim, p.death_step) {
            // Forward cycle: contracted together with its own level.
            (1, None) => raw.push(RawPair {
                dim: 1,
                birth_step: p.birth_step,
                death_step: Some(n_forward + p.birth_step),
            }),
            // Forward merge: reappears as a contraction-born cycle when the
            // merged-away component's level is re-identified with the
            // supernode.
            (0, Some(d)) => {
                raw.push(*p);
                raw.push(RawPair {
                    dim: 1,
                    birth_step: n_forward + p.birth_step,
                    death_step: Some(n_forward + d),
                });
            }
            _ => raw.push(*p),
        }
    }

    // Surviving components die when first touched; the seed's component is
    // the essential one. The seed is the lowest-id vertex of the first
    // contracted complex, which for the (f, f) schedule sits at level 0.
    let seed = seq.events[n_forward]
        .vertices
        .first()
        .copied()
        .expect("first contracted complex has vertices");
    let seed_root = state.uf.find(seed);
    for (root, (birth, _)) in state.open_components() {
        if root == seed_root {
            raw.push(RawPair {
                dim: 0,
                birth_step: birth,
                death_step: None,
            });
        } else {
            raw.push(RawPair {
                dim: 0,
                birth_step: birth,
                death_step: Some(n_forward + birth),
            });
        }
    }
    Ok(assemble(Mode::Fg, raw, &seq))
}

/// Restriction of a forward-backward diagram to the forward phase: pairs
/// born by step `n` keep finite deaths up to `n`; later deaths become
/// essential.
pub fn recover_forward(diagram: &PersistenceDiagram, n: usize) -> PersistenceDiagram {
    let pairs = diagram
        .pairs
        .iter()
        .filter(|p| p.birth_step <= n)
        .map(|p| {
            let dies_later = match p.death_step {
                Death::At(d) => d > n,
                Death::Never => true,
            };
            if dies_later {
                PersistencePair {
                    dim: p.dim,
                    birth_step: p.birth_step,
                    death_step: Death::Never,
                    birth_value: p.birth_value,
                    death_value: p.death_value.map(|_| Death::Never),
                }
            } else {
                p.clone()
            }
        })
        .collect();
    PersistenceDiagram::new(Mode::Forward, pairs)
}

/// Restriction of a forward-backward diagram to the contraction phase,
/// re-indexed so the whole graph sits at step 0: features alive when the
/// contraction starts are born at 0, and contraction steps `n + 1 + j`
/// become `1 + j`.
pub fn recover_backward(diagram: &PersistenceDiagram, n: usize) -> PersistenceDiagram {
    let pairs = diagram
        .pairs
        .iter()
        .filter(|p| match p.death_step {
            Death::At(d) => d > n,
            Death::Never => true,
        })
        .map(|p| PersistencePair {
            dim: p.dim,
            birth_step: p.birth_step.saturating_sub(n),
            death_step: match p.death_step {
                Death::At(d) => Death::At(d - n),
                Death::Never => Death::Never,
            },
            birth_value: None,
            death_value: None,
        })
        .collect();
    PersistenceDiagram::new(Mode::Backward, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_witness() -> (Graph, Filtration) {
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (6, 7),
            ],
        )
        .unwrap();
        let f =
            Filtration::from_vertex_values(&g, vec![1.0, 3.0, 2.0, 3.0, 4.0, 1.0, 2.0, 2.0])
                .unwrap();
        (g, f)
    }

    #[test]
    fn forward_degree_witness_matches_frozen_diagram() {
        let (g, f) = degree_witness();
        let diagram = forward_persistence(&g, &f);
        let mut got: Vec<(u8, f64, f64)> = diagram
            .pairs
            .iter()
            .map(|p| {
                (
                    p.dim,
                    p.birth_value.unwrap(),
                    match p.death_value.unwrap() {
                        Death::At(v) => v,
                        Death::Never => f64::INFINITY,
                    },
                )
            })
            .collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut want = vec![
            (1, 3.0, f64::INFINITY),
            (1, 4.0, f64::INFINITY),
            (0, 1.0, f64::INFINITY),
            (0, 1.0, 4.0),
            (0, 2.0, 4.0),
            (0, 2.0, 3.0),
            (0, 2.0, 2.0),
            (0, 3.0, 3.0),
            (0, 3.0, 3.0),
            (0, 4.0, 4.0),
        ];
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn identity_reverse_sigma_tau_equals_fb() {
        let (g, f) = degree_witness();
        let n = f.n_levels();
        let st = sigma_tau_persistence(
            &g,
            &f,
            &Permutation::identity(n),
            &Permutation::reverse(n),
        )
        .unwrap();
        let fb = fb_persistence(&g, &f).unwrap();
        assert!(st.step_multiset_eq(&fb));
    }

    #[test]
    fn fg_with_backward_filtration_schedule_is_fb_on_surviving_levels() {
        // The explicit descending schedule and the negated-filtration
        // schedule contract the same sets; with no swallowed levels the
        // diagrams agree step for step.
        let g = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let f =
            Filtration::from_vertex_values(&g, vec![1.0, 1.0, 2.0, 2.0, 3.0, 3.0]).unwrap();
        let fb = fb_persistence(&g, &f).unwrap();
        let bwd = crate::complexes::backward_filtration(&g, &f).unwrap();
        let fg = fg_persistence(&g, &f, &bwd).unwrap();
        assert!(fb.step_multiset_eq(&fg));
    }

    #[test]
    fn ff_shortcut_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0; 3]).unwrap();
        let short = ff_shortcut(&g, &f).unwrap();
        let full = fg_persistence(&g, &f, &f).unwrap();
        assert!(short.step_multiset_eq(&full));
        assert!(short
            .dim(1)
            .any(|p| p.birth_step == 0 && p.death_step == Death::At(1)));
    }

    #[test]
    fn ff_shortcut_two_components_joined_late() {
        // Components born at levels 0 and 1 merge at level 2: the shortcut
        // emits the mirrored contraction cycle.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![1.0, 3.0, 2.0]).unwrap();
        let short = ff_shortcut(&g, &f).unwrap();
        let full = fg_persistence(&g, &f, &f).unwrap();
        assert!(short.step_multiset_eq(&full));
        // n = 2, so the component pair (1, 2) mirrors to (4, 5).
        assert!(short
            .dim(1)
            .any(|p| p.birth_step == 4 && p.death_step == Death::At(5)));
    }

    #[test]
    fn empty_graph_yields_empty_diagrams() {
        let g = Graph::new(0, &[]).unwrap();
        let f = Filtration::from_vertex_values(&g, vec![]).unwrap();
        assert!(forward_persistence(&g, &f).pairs.is_empty());
        assert!(fb_persistence(&g, &f).unwrap().pairs.is_empty());
        assert!(extended_fb(&g, &f).unwrap().pairs.is_empty());
        assert!(ff_shortcut(&g, &f).unwrap().pairs.is_empty());
        assert!(backward_only(&g, &f).unwrap().pairs.is_empty());
    }

    #[test]
    fn complete_contraction_leaves_one_essential() {
        let (g, f) = degree_witness();
        for diagram in [
            fb_persistence(&g, &f).unwrap(),
            extended_fb(&g, &f).unwrap(),
            backward_only(&g, &f).unwrap(),
        ] {
            let essentials: Vec<_> = diagram
                .pairs
                .iter()
                .filter(|p| p.death_step.is_infinite())
                .collect();
            assert_eq!(essentials.len(), 1, "{:?}", diagram.mode);
            assert_eq!(essentials[0].dim, 0);
        }
    }

    #[test]
    fn recovery_round_trips_forward() {
        let (g, f) = degree_witness();
        let fb = fb_persistence(&g, &f).unwrap();
        let n = f.n_levels() - 1;
        let fwd = recover_forward(&fb, n);
        let standalone = forward_persistence(&g, &f);
        assert!(fwd.step_multiset_eq(&standalone));
    }

    #[test]
    fn recovery_round_trips_backward() {
        let (g, f) = degree_witness();
        let fb = fb_persistence(&g, &f).unwrap();
        let n = f.n_levels() - 1;
        let bwd = recover_backward(&fb, n);
        let mut standalone = backward_only(&g, &f).unwrap();
        // Merges internal to the initial whole-graph step are invisible to
        // the forward-backward diagram.
        standalone
            .pairs
            .retain(|p| !(p.birth_step == 0 && p.death_step == Death::At(0)));
        assert!(bwd.step_multiset_eq(&standalone));
    }
}
