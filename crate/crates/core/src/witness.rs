//! Bundled witness graphs and the separation suite.
//!
//! Each fixture is a small graph/filtration pair where two computation
//! modes provably agree while a third tells the graphs apart. The suite
//! asserts every separation and doubles as the regression gate for the
//! frozen reference diagrams.

use crate::diagram::{Death, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::graph::Graph;
use crate::hourglass::hourglass_persistence;
use crate::modes::{backward_only, extended_fb, fb_persistence, fg_persistence, forward_persistence};
use crate::schedule::{HourglassSchedule, ScheduleOp};

macro_rules! fixture_data {
    ($name:literal) => {
        (
            include_str!(concat!("../fixtures/", $name, ".graph.json")),
            include_str!(concat!("../fixtures/", $name, ".filtration.json")),
        )
    };
}

pub const FIXTURE_NAMES: &[&str] = &[
    "colored_path",
    "colored_star",
    "degree_twin_a",
    "degree_twin_b",
    "tree_twin_a",
    "tree_twin_b",
    "bigon_trio",
    "square_trio",
    "staged_square",
];

/// Loads a bundled fixture by name.
pub fn fixture(name: &str) -> Result<(Graph, Filtration)> {
    let (graph_json, filt_json) = match name {
        "colored_path" => fixture_data!("colored_path"),
        "colored_star" => fixture_data!("colored_star"),
        "degree_twin_a" => fixture_data!("degree_twin_a"),
        "degree_twin_b" => fixture_data!("degree_twin_b"),
        "tree_twin_a" => fixture_data!("tree_twin_a"),
        "tree_twin_b" => fixture_data!("tree_twin_b"),
        "bigon_trio" => fixture_data!("bigon_trio"),
        "square_trio" => fixture_data!("square_trio"),
        "staged_square" => fixture_data!("staged_square"),
        other => return Err(Error::Io(format!("unknown fixture {other:?}"))),
    };
    let graph = Graph::from_json(graph_json)?;
    let filtration = Filtration::from_json(&graph, filt_json)?;
    Ok((graph, filtration))
}

#[derive(Debug, Clone)]
pub struct WitnessCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> WitnessCheck {
    WitnessCheck {
        name,
        passed,
        detail: detail.into(),
    }
}

fn value_multiset(diagram: &PersistenceDiagram, dim: u8) -> Vec<(f64, f64)> {
    let mut v: Vec<(f64, f64)> = diagram
        .dim(dim)
        .map(|p| {
            (
                p.birth_value.expect("function time present"),
                match p.death_value.expect("function time present") {
                    Death::At(x) => x,
                    Death::Never => f64::INFINITY,
                },
            )
        })
        .collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Reference forward diagram of the degree-twin graphs, as
/// `(dim, birth, death)` in function time.
pub const DEGREE_TWIN_FORWARD: &[(u8, f64, f64)] = &[
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

/// Reference dimension-0 forward-backward diagram shared by both tree
/// twins, in function time.
pub const TREE_TWIN_FB_DIM0: &[(f64, f64)] = &[
    (1.0, f64::INFINITY),
    (1.0, 3.0),
    (1.0, 3.0),
    (2.0, 2.0),
    (2.0, 2.0),
    (3.0, 3.0),
];

fn full_value_multiset(diagram: &PersistenceDiagram) -> Vec<(u8, f64, f64)> {
    let mut v: Vec<(u8, f64, f64)> = diagram
        .pairs
        .iter()
        .map(|p| {
            (
                p.dim,
                p.birth_value.expect("function time present"),
                match p.death_value.expect("function time present") {
                    Death::At(x) => x,
                    Death::Never => f64::INFINITY,
                },
            )
        })
        .collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

pub fn run_witness_suite() -> Result<Vec<WitnessCheck>> {
    let mut out = Vec::new();

    // Colored path vs star: same inclusion diagrams, different contraction
    // diagrams.
    {
        let (g1, f1) = fixture("colored_path")?;
        let (g2, f2) = fixture("colored_star")?;
        let fwd_equal = forward_persistence(&g1, &f1)
            .value_multiset_eq(&forward_persistence(&g2, &f2))?;
        out.push(check(
            "colored pair: forward diagrams agree",
            fwd_equal,
            "inclusion-only persistence cannot separate the pair",
        ));
        let bwd_differs = !backward_only(&g1, &f1)?.step_multiset_eq(&backward_only(&g2, &f2)?);
        out.push(check(
            "colored pair: contraction diagrams differ",
            bwd_differs,
            "collapsing the level-2 complex pinches a cycle only in the path",
        ));
    }

    // Degree twins: forward and backward agree (forward matching a frozen
    // reference diagram); the combined pass separates.
    {
        let (g1, f1) = fixture("degree_twin_a")?;
        let (g2, f2) = fixture("degree_twin_b")?;
        let d1 = forward_persistence(&g1, &f1);
        let d2 = forward_persistence(&g2, &f2);
        let mut reference: Vec<(u8, f64, f64)> = DEGREE_TWIN_FORWARD.to_vec();
        reference.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let matches_reference =
            full_value_multiset(&d1) == reference && full_value_multiset(&d2) == reference;
        out.push(check(
            "degree twins: forward diagrams match the reference list",
            matches_reference,
            format!("{} pairs each", d1.pairs.len()),
        ));
        let bwd_equal = backward_only(&g1, &f1)?.step_multiset_eq(&backward_only(&g2, &f2)?);
        out.push(check(
            "degree twins: contraction diagrams agree",
            bwd_equal,
            "both collapse their cycles at the same steps",
        ));
        let fb_differs = !fb_persistence(&g1, &f1)?.step_multiset_eq(&fb_persistence(&g2, &f2)?);
        out.push(check(
            "degree twins: forward-backward separates",
            fb_differs,
            "cycle birth times differ when the middle complex is contracted",
        ));
    }

    // Tree twins: identical forward-backward diagrams (frozen dimension-0
    // reference); an early include separates.
    {
        let (g1, f1) = fixture("tree_twin_a")?;
        let (g2, f2) = fixture("tree_twin_b")?;
        let d1 = fb_persistence(&g1, &f1)?;
        let d2 = fb_persistence(&g2, &f2)?;
        let mut reference = TREE_TWIN_FB_DIM0.to_vec();
        reference.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dim0_match =
            value_multiset(&d1, 0) == reference && value_multiset(&d2, 0) == reference;
        let fb_equal = d1.value_multiset_eq(&d2)?;
        out.push(check(
            "tree twins: forward-backward diagrams agree",
            fb_equal && dim0_match,
            "both reduce to the same six dimension-0 pairs",
        ));
        let schedule = HourglassSchedule::new(vec![
            ScheduleOp::Include(1),
            ScheduleOp::Include(0),
            ScheduleOp::Include(2),
            ScheduleOp::Contract(2),
            ScheduleOp::Contract(1),
            ScheduleOp::Contract(0),
        ]);
        let h1 = hourglass_persistence(&g1, &f1, &schedule)?;
        let h2 = hourglass_persistence(&g2, &f2, &schedule)?;
        out.push(check(
            "tree twins: early include separates",
            !h1.step_multiset_eq(&h2),
            "spawning the middle complex first exposes two components vs one",
        ));
    }

    // Bigon vs square: forward-backward separates, the height descent does
    // not.
    {
        let (g1, f1) = fixture("bigon_trio")?;
        let (g2, f2) = fixture("square_trio")?;
        let fb_differs = !fb_persistence(&g1, &f1)?.step_multiset_eq(&fb_persistence(&g2, &f2)?);
        out.push(check(
            "bigon vs square: forward-backward separates",
            fb_differs,
            "only the bigon's top complex carries a cycle",
        ));
        let ext_equal = extended_fb(&g1, &f1)?.step_multiset_eq(&extended_fb(&g2, &f2)?);
        out.push(check(
            "bigon vs square: height descent agrees",
            ext_equal,
            "descending by height sees identical component and cycle events",
        ));
    }

    // Staged square: the drawn contraction sequence yields cycle pairs
    // (1,4) and (2,3) on the one-based presentation axis.
    {
        let (graph, g) = fixture("staged_square")?;
        let constant =
            Filtration::from_vertex_values(&graph, vec![1.0; graph.n_vertices()])?;
        let mut diagram = fg_persistence(&graph, &constant, &g)?;
        diagram.drop_zero_length();
        let mut got: Vec<(usize, usize)> = diagram
            .dim(1)
            .map(|p| {
                (
                    p.birth_step + 1,
                    match p.death_step {
                        Death::At(d) => d + 1,
                        Death::Never => usize::MAX,
                    },
                )
            })
            .collect();
        got.sort_unstable();
        out.push(check(
            "staged square: contraction cycle pairs",
            got == vec![(1, 4), (2, 3)],
            format!("{got:?}"),
        ));
    }

    Ok(out)
}
