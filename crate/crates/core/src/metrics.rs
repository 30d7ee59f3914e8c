//! Exact bottleneck distances between function-time diagrams.
//!
//! The distance is found by threshold search over the finite set of
//! candidate values (pairwise sup-norm distances and diagonal radii) with a
//! bipartite-matching feasibility test, so integer or dyadic inputs produce
//! exact answers rather than approximations. Essential points match only
//! essential points, at the cost of their birth difference; a mismatch in
//! essential counts makes the distance infinite.

use crate::diagram::{Death, PersistenceDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
struct Point {
    birth: f64,
    death: f64,
}

impl Point {
    fn linf(self, other: Point) -> f64 {
        (self.birth - other.birth)
            .abs()
            .max((self.death - other.death).abs())
    }

    fn diagonal_radius(self) -> f64 {
        (self.death - self.birth).abs() / 2.0
    }
}

fn extract(diagram: &PersistenceDiagram, dim: u8) -> Result<(Vec<Point>, Vec<f64>)> {
    let mut finite = Vec::new();
    let mut essential_births = Vec::new();
    for p in diagram.pairs.iter().filter(|p| p.dim == dim) {
        let birth = p.birth_value.ok_or(Error::MissingFunctionTime)?;
        match p.death_value.ok_or(Error::MissingFunctionTime)? {
            Death::At(death) => finite.push(Point { birth, death }),
            Death::Never => essential_births.push(birth),
        }
    }
    Ok((finite, essential_births))
}

/// Bottleneck distance in dimension `dim`. Finite points may match the
/// diagonal; essential points pair up by birth and force infinity when the
/// two diagrams disagree on how many there are.
pub fn bottleneck_distance(
    d1: &PersistenceDiagram,
    d2: &PersistenceDiagram,
    dim: u8,
) -> Result<f64> {
    let (p1, mut e1) = extract(d1, dim)?;
    let (p2, mut e2) = extract(d2, dim)?;
    if e1.len() != e2.len() {
        return Ok(f64::INFINITY);
    }
    e1.sort_by(|a, b| a.partial_cmp(b).unwrap());
    e2.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let essential_cost = e1
        .iter()
        .zip(&e2)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(essential_cost.max(finite_bottleneck(&p1, &p2)))
}

/// Bottleneck over dimension-0 diagrams with the single essential pair
/// removed from each side.
pub fn bottleneck_excluding_essential(
    d1: &PersistenceDiagram,
    d2: &PersistenceDiagram,
) -> Result<f64> {
    let (p1, e1) = extract(d1, 0)?;
    let (p2, e2) = extract(d2, 0)?;
    if e1.len() != 1 || e2.len() != 1 {
        return Err(Error::EssentialCountMismatch(e1.len(), e2.len()));
    }
    Ok(finite_bottleneck(&p1, &p2))
}

fn finite_bottleneck(p1: &[Point], p2: &[Point]) -> f64 {
    if p1.is_empty() && p2.is_empty() {
        return 0.0;
    }
    let mut candidates = vec![0.0f64];
    for a in p1 {
        for b in p2 {
            candidates.push(a.linf(*b));
        }
        candidates.push(a.diagonal_radius());
    }
    for b in p2 {
        candidates.push(b.diagonal_radius());
    }
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.dedup();

    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    debug_assert!(matches(p1, p2, candidates[hi]));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if matches(p1, p2, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

/// Perfect-matching feasibility at threshold `eps`. Left nodes are the
/// points of the first diagram plus a diagonal slot per point of the
/// second; right nodes symmetrically. Diagonal slots match each other for
/// free, so feasibility reduces to matching every real point either to a
/// close real point or to its diagonal projection.
fn matches(p1: &[Point], p2: &[Point], eps: f64) -> bool {
    let (n1, n2) = (p1.len(), p2.len());
    let left_total = n1 + n2;
    // adjacency[left] = right candidates; right nodes: 0..n2 real, then
    // n2..n2+n1 diagonal slots (diagonal of p1[i] is n2 + i).
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); left_total];
    for (i, a) in p1.iter().enumerate() {
        for (j, b) in p2.iter().enumerate() {
            if a.linf(*b) <= eps {
                adjacency[i].push(j);
            }
        }
        if a.diagonal_radius() <= eps {
            adjacency[i].push(n2 + i);
        }
    }
    for (j, b) in p2.iter().enumerate() {
        // Left diagonal slot for p2[j] is node n1 + j.
        if b.diagonal_radius() <= eps {
            adjacency[n1 + j].push(j);
        }
        for k in 0..n1 {
            adjacency[n1 + j].push(n2 + k);
        }
    }

    let mut match_right: Vec<Option<usize>> = vec![None; n2 + n1];
    let mut matched = 0;
    for left in 0..left_total {
        let mut visited = vec![false; n2 + n1];
        if augment(left, &adjacency, &mut match_right, &mut visited) {
            matched += 1;
        }
    }
    matched == left_total
}

fn augment(
    left: usize,
    adjacency: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &right in &adjacency[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        if match_right[right].is_none()
            || augment(match_right[right].unwrap(), adjacency, match_right, visited)
        {
            match_right[right] = Some(left);
            return true;
        }
    }
    false
}
