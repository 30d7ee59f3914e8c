//! Resolved event sequences.
//!
//! Every computation mode reduces to an ordered list of steps, each either
//! including a batch of new simplices or contracting an intermediate complex
//! (together with the accumulated supernode point). The streaming engines
//! and the brute-force oracle both consume this shared resolution; only the
//! diagram computation differs between them.

use crate::complexes::{descending_schedule, intermediate_complexes, IntermediateComplex};
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::schedule::{HourglassSchedule, ScheduleOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    Include,
    Contract,
}

/// One combinatorial step. Vertices and edges are sorted ascending; within a
/// step the engines process vertices before edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub kind: EventKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EventSequence {
    pub events: Vec<Event>,
    /// Number of leading include steps when the sequence is phase-separated
    /// (all inclusions before all contractions). Interleaved schedules leave
    /// this unset.
    pub forward_steps: Option<usize>,
    /// Function-time value per step, when the mode defines one.
    pub step_values: Option<Vec<f64>>,
    /// Positivity shift applied to a negative contraction schedule.
    pub shift: Option<f64>,
}

impl EventSequence {
    pub fn n_steps(&self) -> usize {
        self.events.len()
    }

    /// Index of the last include step for phase-separated sequences.
    pub fn last_forward_step(&self) -> Option<usize> {
        self.forward_steps.map(|n| n - 1)
    }
}

fn include_deltas(graph: &Graph, f: &Filtration) -> Vec<Event> {
    let mut events: Vec<Event> = f
        .levels()
        .iter()
        .map(|_| Event {
            kind: EventKind::Include,
            vertices: Vec::new(),
            edges: Vec::new(),
        })
        .collect();
    for v in 0..graph.n_vertices() {
        events[f.step_of(f.vertex_value(v))].vertices.push(v);
    }
    for e in graph.edges() {
        events[f.step_of(f.edge_value(e.id))].edges.push(e.id);
    }
    events
}

fn contract_event(ic: &IntermediateComplex) -> Event {
    Event {
        kind: EventKind::Contract,
        vertices: ic.vertices.clone(),
        edges: ic.edges.clone(),
    }
}

/// Inclusion of intermediate complexes in a permuted order; each event holds
/// the simplices not already present.
fn permuted_includes(
    graph: &Graph,
    ics: &[IntermediateComplex],
    sigma: &Permutation,
) -> Vec<Event> {
    let mut present = vec![false; graph.n_vertices()];
    let mut events = Vec::with_capacity(ics.len());
    for i in 0..ics.len() {
        let ic = &ics[sigma.apply(i)];
        let mut vertices = Vec::new();
        for &v in &ic.vertices {
            if !present[v] {
                present[v] = true;
                vertices.push(v);
            }
        }
        events.push(Event {
            kind: EventKind::Include,
            vertices,
            edges: ic.edges.clone(),
        });
    }
    events
}

/// Plain sublevel inclusion: one step per level, function time is the level.
pub fn forward_events(graph: &Graph, f: &Filtration) -> EventSequence {
    let events = include_deltas(graph, f);
    let n = events.len();
    EventSequence {
        events,
        forward_steps: Some(n),
        step_values: Some(f.levels().to_vec()),
        shift: None,
    }
}

/// Attaches contraction steps driven by a second filtration's intermediate
/// complexes in ascending order. Function time follows the two-function
/// convention: a contraction at schedule level `b` happens at
/// `max(f) + b + shift`, with `shift` making a negative schedule positive.
fn two_function_events(
    graph: &Graph,
    f: &Filtration,
    schedule: &[IntermediateComplex],
    schedule_levels: &[f64],
    shift: f64,
) -> EventSequence {
    let mut events = include_deltas(graph, f);
    let forward_steps = events.len();
    events.extend(schedule.iter().map(contract_event));
    let positive = f.n_levels() > 0
        && f.min_value() > 0.0
        && schedule_levels.iter().all(|&b| b + shift > 0.0);
    let step_values = positive.then(|| {
        let mut values = f.levels().to_vec();
        values.extend(schedule_levels.iter().map(|&b| f.max_value() + b + shift));
        values
    });
    let shift_meta = (positive && shift != 0.0).then_some(shift);
    EventSequence {
        events,
        forward_steps: Some(forward_steps),
        step_values,
        shift: shift_meta,
    }
}

/// Forward by `f`, then contraction of the intermediate complexes of `f`
/// from last to first.
pub fn fb_events(graph: &Graph, f: &Filtration) -> Result<EventSequence> {
    f.require_vertex_based(graph)?;
    let ics = intermediate_complexes(graph, f);
    let schedule: Vec<IntermediateComplex> = ics.into_iter().rev().collect();
    let levels: Vec<f64> = f.levels().iter().rev().map(|&a| -a).collect();
    let shift = if f.n_levels() == 0 {
        0.0
    } else {
        f.max_value() + f.min_value()
    };
    Ok(two_function_events(graph, f, &schedule, &levels, shift))
}

/// Forward by `f`, contraction by the intermediate complexes of `g` in
/// ascending order.
pub fn fg_events(graph: &Graph, f: &Filtration, g: &Filtration) -> EventSequence {
    let schedule = intermediate_complexes(graph, g);
    two_function_events(graph, f, &schedule, g.levels(), 0.0)
}

/// Inclusion of the whole graph at step 0, then contraction from last
/// intermediate complex to first. Combinatorial time only.
pub fn backward_events(graph: &Graph, f: &Filtration) -> Result<EventSequence> {
    f.require_vertex_based(graph)?;
    let mut events = vec![Event {
        kind: EventKind::Include,
        vertices: (0..graph.n_vertices()).collect(),
        edges: (0..graph.n_edges()).collect(),
    }];
    events.extend(intermediate_complexes(graph, f).iter().rev().map(contract_event));
    Ok(EventSequence {
        events,
        forward_steps: Some(1),
        step_values: None,
        shift: None,
    })
}

/// Includes intermediate complexes in `sigma` order, contracts them in
/// `tau` order. Combinatorial time only.
pub fn sigma_tau_events(
    graph: &Graph,
    f: &Filtration,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<EventSequence> {
    f.require_vertex_based(graph)?;
    let n_levels = f.n_levels();
    for p in [sigma, tau] {
        if p.len() != n_levels {
            return Err(Error::NotAPermutation {
                expected: n_levels,
                reason: format!("length {} does not match level count", p.len()),
            });
        }
    }
    let ics = intermediate_complexes(graph, f);
    let mut events = permuted_includes(graph, &ics, sigma);
    events.extend((0..n_levels).map(|j| contract_event(&ics[tau.apply(j)])));
    Ok(EventSequence {
        events,
        forward_steps: Some(n_levels),
        step_values: None,
        shift: None,
    })
}

/// Forward by `f`, then contraction descending by height: the schedule of
/// the negated vertex values.
pub fn extended_events(graph: &Graph, f: &Filtration) -> Result<EventSequence> {
    let schedule = descending_schedule(graph, f)?;
    let levels: Vec<f64> = f.levels().iter().rev().map(|&a| -a).collect();
    let shift = if f.n_levels() == 0 {
        0.0
    } else {
        f.max_value() + f.min_value()
    };
    Ok(two_function_events(graph, f, &schedule, &levels, shift))
}

/// Arbitrary interleaving of includes and contracts over the intermediate
/// complexes of `f`, as given by a validated schedule.
pub fn hourglass_events(
    graph: &Graph,
    f: &Filtration,
    schedule: &HourglassSchedule,
) -> Result<EventSequence> {
    let ics = intermediate_complexes(graph, f);
    schedule.validate(ics.len())?;
    let mut present = vec![false; graph.n_vertices()];
    let mut events = Vec::with_capacity(schedule.ops().len());
    for op in schedule.ops() {
        match *op {
            ScheduleOp::Include(i) => {
                let ic = &ics[i];
                let mut vertices = Vec::new();
                for &v in &ic.vertices {
                    if !present[v] {
                        present[v] = true;
                        vertices.push(v);
                    }
                }
                events.push(Event {
                    kind: EventKind::Include,
                    vertices,
                    edges: ic.edges.clone(),
                });
            }
            ScheduleOp::Contract(i) => events.push(contract_event(&ics[i])),
        }
    }
    Ok(EventSequence {
        events,
        forward_steps: None,
        step_values: None,
        shift: None,
    })
}
