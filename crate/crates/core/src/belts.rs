//! Belts, prismatic circuits and flagness.
//!
//! A k-belt is a cyclic sequence of k distinct facets, consecutive ones
//! adjacent, no three sharing a vertex. For k = 4 we additionally require the
//! opposite pairs to be disjoint; 4-cycles that fail only that condition are
//! reported separately by [`degenerate_four_cycles`].
//!
//! A prismatic k-circuit is recorded by the facets it passes through and the
//! edges it crosses, the i-th edge separating facet i from facet i+1. The
//! endpoints of the crossed edges must be pairwise distinct.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::polytope::{EdgeId, FacetId, SimplePolytope3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BeltError {
    #[error("cycle length {k} not supported (expected {expected})")]
    BadLength { k: usize, expected: &'static str },
    #[error("the equivalence is not claimed for the tetrahedron")]
    SimplexExcluded,
}

/// Lexicographically least sequence among all rotations and reflections.
pub fn canonical_cycle(cycle: &[FacetId]) -> Vec<FacetId> {
    let n = cycle.len();
    let mut best = cycle.to_vec();
    for r in 0..n {
        let forward: Vec<FacetId> = (0..n).map(|i| cycle[(r + i) % n]).collect();
        let backward: Vec<FacetId> = (0..n).map(|i| cycle[(r + n - i) % n]).collect();
        best = best.min(forward).min(backward);
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Belt {
    facets: Vec<FacetId>,
}

impl Belt {
    /// Wraps a facet cycle in canonical form without checking it against a
    /// polytope; see [`is_belt`].
    pub fn from_cycle(cycle: &[FacetId]) -> Self {
        Belt {
            facets: canonical_cycle(cycle),
        }
    }

    pub fn facets(&self) -> &[FacetId] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrismaticCircuit {
    facets: Vec<FacetId>,
    edges: Vec<EdgeId>,
}

impl PrismaticCircuit {
    pub fn facets(&self) -> &[FacetId] {
        &self.facets
    }

    /// `edges()[i]` separates `facets()[i]` from `facets()[i + 1]`.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

fn no_common_vertex(p: &SimplePolytope3, cycle: &[FacetId]) -> bool {
    let n = cycle.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if p.vertex_of(cycle[i], cycle[j], cycle[k]).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks the belt conditions for a cycle taken in the given order.
pub fn is_belt(p: &SimplePolytope3, cycle: &[FacetId]) -> bool {
    let n = cycle.len();
    if n < 3 || cycle.iter().any(|&f| f >= p.facet_count()) {
        return false;
    }
    let distinct: BTreeSet<_> = cycle.iter().collect();
    if distinct.len() != n {
        return false;
    }
    if (0..n).any(|i| !p.are_adjacent(cycle[i], cycle[(i + 1) % n])) {
        return false;
    }
    if !no_common_vertex(p, cycle) {
        return false;
    }
    n != 4 || (!p.are_adjacent(cycle[0], cycle[2]) && !p.are_adjacent(cycle[1], cycle[3]))
}

/// Visits each simple k-cycle of the facet adjacency graph once, as a path
/// starting at its smallest facet with `path[1] < path[k-1]`. `admit` is
/// consulted before a facet is appended (including the closing check).
fn for_each_cycle(
    p: &SimplePolytope3,
    k: usize,
    admit: &dyn Fn(&[FacetId], FacetId) -> bool,
    emit: &mut dyn FnMut(&[FacetId]),
) {
    fn walk(
        p: &SimplePolytope3,
        k: usize,
        path: &mut Vec<FacetId>,
        admit: &dyn Fn(&[FacetId], FacetId) -> bool,
        emit: &mut dyn FnMut(&[FacetId]),
    ) {
        let start = path[0];
        let last = *path.last().expect("nonempty path");
        if path.len() == k {
            if path[1] < path[k - 1] && p.are_adjacent(last, start) {
                emit(path);
            }
            return;
        }
        for &next in p.neighbors(last) {
            if next <= start || path.contains(&next) || !admit(path, next) {
                continue;
            }
            path.push(next);
            walk(p, k, path, admit, emit);
            path.pop();
        }
    }
    for start in 0..p.facet_count() {
        let mut path = vec![start];
        walk(p, k, &mut path, admit, emit);
    }
}

/// All k-belts (k ≥ 3), canonical and sorted.
pub fn find_belts(p: &SimplePolytope3, k: usize) -> Result<Vec<Belt>, BeltError> {
    if k < 3 {
        return Err(BeltError::BadLength {
            k,
            expected: "k >= 3",
        });
    }
    let admit = |path: &[FacetId], next: FacetId| {
        (0..path.len()).all(|i| (i + 1..path.len()).all(|j| p.vertex_of(path[i], path[j], next).is_none()))
    };
    let mut out = BTreeSet::new();
    for_each_cycle(p, k, &admit, &mut |cycle| {
        if is_belt(p, cycle) {
            out.insert(Belt::from_cycle(cycle));
        }
    });
    Ok(out.into_iter().collect())
}

/// Facet 4-cycles with no three facets sharing a vertex whose opposite pairs
/// are not both disjoint. They are not belts.
pub fn degenerate_four_cycles(p: &SimplePolytope3) -> Vec<Vec<FacetId>> {
    let mut out = BTreeSet::new();
    for_each_cycle(p, 4, &|_, _| true, &mut |cycle| {
        if no_common_vertex(p, cycle) && !is_belt(p, cycle) {
            out.insert(canonical_cycle(cycle));
        }
    });
    out.into_iter().collect()
}

/// The circuit crossing the edges between consecutive facets of a cycle,
/// if consecutive facets are adjacent and the crossed edges are pairwise
/// vertex-disjoint.
pub fn prismatic_circuit_through(p: &SimplePolytope3, cycle: &[FacetId]) -> Option<PrismaticCircuit> {
    let n = cycle.len();
    let edges: Vec<EdgeId> = (0..n)
        .map(|i| p.shared_edge(cycle[i], cycle[(i + 1) % n]))
        .collect::<Option<_>>()?;
    let endpoints: BTreeSet<_> = edges.iter().flat_map(|&e| p.edge(e).vertices).collect();
    (endpoints.len() == 2 * n).then(|| PrismaticCircuit {
        facets: cycle.to_vec(),
        edges,
    })
}

/// All prismatic k-circuits up to rotation and reflection, for `3 <= k <= 5`.
///
/// For these lengths a circuit cannot pass through a facet twice, so the
/// search over simple facet cycles is exhaustive.
pub fn find_prismatic_circuits(
    p: &SimplePolytope3,
    k: usize,
) -> Result<Vec<PrismaticCircuit>, BeltError> {
    if !(3..=5).contains(&k) {
        return Err(BeltError::BadLength {
            k,
            expected: "3 <= k <= 5",
        });
    }
    let admit = |path: &[FacetId], next: FacetId| {
        let last = path[path.len() - 1];
        let Some(e) = p.shared_edge(last, next) else {
            return false;
        };
        let new = p.edge(e).vertices;
        path.windows(2).all(|w| {
            let old = p.edge(p.shared_edge(w[0], w[1]).expect("path edges exist")).vertices;
            !old.contains(&new[0]) && !old.contains(&new[1])
        })
    };
    let mut out = BTreeSet::new();
    for_each_cycle(p, k, &admit, &mut |cycle| {
        if let Some(c) = prismatic_circuit_through(p, &canonical_cycle(cycle)) {
            out.insert(c);
        }
    });
    Ok(out.into_iter().collect())
}

/// The prismatic circuit determined by a belt.
pub fn belt_to_circuit(p: &SimplePolytope3, belt: &Belt) -> Option<PrismaticCircuit> {
    prismatic_circuit_through(p, belt.facets())
}

/// The belt determined by a prismatic 3- or 4-circuit. Always present for
/// k = 3; for k = 4 present exactly when opposite facets are disjoint, which
/// holds whenever the polytope has no prismatic 3-circuit.
pub fn circuit_to_belt(p: &SimplePolytope3, circuit: &PrismaticCircuit) -> Option<Belt> {
    let facets = circuit.facets();
    is_belt(p, facets).then(|| Belt::from_cycle(facets))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagReport {
    pub flag: bool,
    /// Pairwise adjacent facet triples without a common vertex.
    pub obstructions: Vec<[FacetId; 3]>,
    /// Pairwise adjacent facet quadruples. Each of their triples meets in a
    /// vertex only for the tetrahedron.
    pub four_cliques: Vec<[FacetId; 4]>,
}

/// Flagness from the definition, checked on pairwise adjacent facet triples.
///
/// Larger pairwise adjacent families are enumerated too. A 4-clique all of
/// whose triples meet forces every facet to be a triangle on those four
/// vertices, i.e. the tetrahedron; the search asserts that.
pub fn flag_report(p: &SimplePolytope3) -> FlagReport {
    let n = p.facet_count();
    let mut obstructions = Vec::new();
    let mut four_cliques = Vec::new();
    for a in 0..n {
        for &b in p.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in p.neighbors(b).iter().filter(|&&c| c > b) {
                if !p.are_adjacent(a, c) {
                    continue;
                }
                if p.vertex_of(a, b, c).is_none() {
                    obstructions.push([a, b, c]);
                }
                for &d in p.neighbors(c).iter().filter(|&&d| d > c) {
                    if p.are_adjacent(a, d) && p.are_adjacent(b, d) {
                        four_cliques.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let flag = obstructions.is_empty();
    if flag {
        assert!(
            four_cliques.is_empty() || p.is_simplex(),
            "pairwise adjacent 4 facets {:?} with all triples meeting outside the tetrahedron",
            four_cliques
        );
    }
    FlagReport {
        flag,
        obstructions,
        four_cliques,
    }
}

pub fn is_flag(p: &SimplePolytope3) -> bool {
    flag_report(p).flag
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagCircuitCheck {
    pub flag: bool,
    pub no_prismatic_3: bool,
    pub agree: bool,
}

/// Computes flagness and absence of prismatic 3-circuits independently.
/// The two agree for every simple 3-polytope other than the tetrahedron.
pub fn proposition_p1_check(p: &SimplePolytope3) -> Result<FlagCircuitCheck, BeltError> {
    if p.is_simplex() {
        return Err(BeltError::SimplexExcluded);
    }
    let flag = is_flag(p);
    let no_prismatic_3 = find_prismatic_circuits(p, 3)?.is_empty();
    Ok(FlagCircuitCheck {
        flag,
        no_prismatic_3,
        agree: flag == no_prismatic_3,
    })
}

/// Four facets forming an induced 4-cycle in the facet adjacency graph:
/// `a~b~c~d~a` with `a, c` and `b, d` non-adjacent.
///
/// Searched pair-first: for each non-adjacent pair, two non-adjacent common
/// neighbours.
pub fn induced_four_cycle(p: &SimplePolytope3) -> Option<[FacetId; 4]> {
    let n = p.facet_count();
    for a in 0..n {
        for c in a + 1..n {
            if a == c || p.are_adjacent(a, c) {
                continue;
            }
            let common: Vec<FacetId> = p
                .neighbors(a)
                .iter()
                .copied()
                .filter(|&x| p.are_adjacent(x, c))
                .collect();
            for (i, &b) in common.iter().enumerate() {
                if let Some(&d) = common[i + 1..].iter().find(|&&d| !p.are_adjacent(b, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}
