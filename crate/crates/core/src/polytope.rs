//! Combinatorial simple 3-polytopes.
//!
//! A polytope is given by its facets, each a cyclic list of vertex labels.
//! Everything else (edges, vertices, facet adjacency) is derived and checked
//! on construction. Internally a vertex is identified by the sorted triple of
//! facets meeting at it; input labels are kept only for reporting and
//! serialization.
//!
//! What is checked: every vertex lies in exactly three facets, every edge in
//! exactly two, two facets share at most one edge, `V - E + F = 2`, and the
//! facet adjacency graph is connected. Steinitz realizability (planarity and
//! 3-connectivity of the graph) is not checked; all downstream computations
//! only use the face lattice.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type FacetId = usize;
pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("facet {facet} is degenerate: {reason}")]
    DegenerateFacet { facet: FacetId, reason: String },
    #[error("facets {first} and {second} list the same vertex set")]
    DuplicateFacet { first: FacetId, second: FacetId },
    #[error("vertex {label} lies in {count} facets, expected 3")]
    NotSimple { label: usize, count: usize },
    #[error("edge {{{a}, {b}}} lies in {count} facet(s), expected 2")]
    NotClosed { a: usize, b: usize, count: usize },
    #[error("facets {first} and {second} share {shared} edges")]
    MultipleSharedEdges {
        first: FacetId,
        second: FacetId,
        shared: usize,
    },
    #[error("Euler relation fails: {vertices} - {edges} + {facets} = {chi}, expected 2")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        facets: usize,
        chi: i64,
    },
    #[error("facet adjacency graph is disconnected")]
    Disconnected,
    #[error("unknown builtin polytope `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameter for builtin `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
    #[error("facet id {id} out of range (polytope has {count} facets)")]
    BadFacetId { id: FacetId, count: usize },
    #[error("facet ids must be distinct, got {0:?}")]
    RepeatedFacetId(Vec<FacetId>),
}

/// On-disk form of a polytope: `{"name": ..., "facets": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Endpoints, smaller internal id first.
    pub vertices: [VertexId; 2],
    /// The two facets containing the edge, smaller id first.
    pub facets: [FacetId; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Polytope,
    Facet,
    Edge,
    Vertex,
}

impl FaceKind {
    pub fn facet_count(self) -> usize {
        match self {
            FaceKind::Polytope => 0,
            FaceKind::Facet => 1,
            FaceKind::Edge => 2,
            FaceKind::Vertex => 3,
        }
    }
}

/// A face named by the facets containing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceRef {
    pub kind: FaceKind,
    pub facets: Vec<FacetId>,
}

impl FaceRef {
    pub fn polytope() -> Self {
        FaceRef {
            kind: FaceKind::Polytope,
            facets: Vec::new(),
        }
    }

    pub fn facet(f: FacetId) -> Self {
        FaceRef {
            kind: FaceKind::Facet,
            facets: vec![f],
        }
    }

    pub fn edge(a: FacetId, b: FacetId) -> Self {
        FaceRef {
            kind: FaceKind::Edge,
            facets: vec![a, b],
        }
    }

    pub fn vertex(a: FacetId, b: FacetId, c: FacetId) -> Self {
        FaceRef {
            kind: FaceKind::Vertex,
            facets: vec![a, b, c],
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplePolytope3 {
    name: String,
    /// Facets as given, cyclic lists of input labels.
    facet_labels: Vec<Vec<usize>>,
    /// Facets as cyclic lists of internal vertex ids.
    facet_vertices: Vec<Vec<VertexId>>,
    /// Sorted facet triple of each vertex; vertex ids are indices into this
    /// lexicographically sorted list.
    vertices: Vec<[FacetId; 3]>,
    vertex_labels: Vec<usize>,
    vertex_index: HashMap<[FacetId; 3], VertexId>,
    edges: Vec<Edge>,
    /// `shared_edge[a][b]` is the edge `a ∩ b`, if any.
    shared_edge: Vec<Vec<Option<EdgeId>>>,
    neighbors: Vec<Vec<FacetId>>,
}

impl SimplePolytope3 {
    /// Builds and validates a polytope from cyclic facet lists.
    pub fn from_facets(
        name: impl Into<String>,
        facets: Vec<Vec<usize>>,
    ) -> Result<Self, PolytopeError> {
        let name = name.into();
        if facets.is_empty() {
            return Err(PolytopeError::Schema("no facets given".into()));
        }
        for (f, cycle) in facets.iter().enumerate() {
            if cycle.len() < 3 {
                return Err(PolytopeError::DegenerateFacet {
                    facet: f,
                    reason: format!("{} vertices, need at least 3", cycle.len()),
                });
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(PolytopeError::DegenerateFacet {
                    facet: f,
                    reason: "repeated vertex".into(),
                });
            }
        }

        let mut seen: HashMap<Vec<usize>, FacetId> = HashMap::new();
        for (f, cycle) in facets.iter().enumerate() {
            let mut key = cycle.clone();
            key.sort_unstable();
            if let Some(&first) = seen.get(&key) {
                return Err(PolytopeError::DuplicateFacet { first, second: f });
            }
            seen.insert(key, f);
        }

        let mut incident: BTreeMap<usize, Vec<FacetId>> = BTreeMap::new();
        for (f, cycle) in facets.iter().enumerate() {
            for &v in cycle {
                incident.entry(v).or_default().push(f);
            }
        }
        for (&label, fs) in &incident {
            if fs.len() != 3 {
                return Err(PolytopeError::NotSimple {
                    label,
                    count: fs.len(),
                });
            }
        }

        let mut edge_facets: BTreeMap<(usize, usize), Vec<FacetId>> = BTreeMap::new();
        for (f, cycle) in facets.iter().enumerate() {
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                edge_facets.entry((a.min(b), a.max(b))).or_default().push(f);
            }
        }
        for (&(a, b), fs) in &edge_facets {
            if fs.len() != 2 {
                return Err(PolytopeError::NotClosed {
                    a,
                    b,
                    count: fs.len(),
                });
            }
        }

        let mut pair_count: BTreeMap<(FacetId, FacetId), usize> = BTreeMap::new();
        for fs in edge_facets.values() {
            let (a, b) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
            *pair_count.entry((a, b)).or_default() += 1;
        }
        if let Some((&(first, second), &shared)) = pair_count.iter().find(|(_, &n)| n > 1) {
            return Err(PolytopeError::MultipleSharedEdges {
                first,
                second,
                shared,
            });
        }

        let (v, e, f) = (incident.len(), edge_facets.len(), facets.len());
        let chi = v as i64 - e as i64 + f as i64;
        if chi != 2 {
            return Err(PolytopeError::EulerViolation {
                vertices: v,
                edges: e,
                facets: f,
                chi,
            });
        }

        // Internal vertex ids: lexicographic order of incident facet triples.
        let mut triples: Vec<([FacetId; 3], usize)> = incident
            .iter()
            .map(|(&label, fs)| {
                let mut t = [fs[0], fs[1], fs[2]];
                t.sort_unstable();
                (t, label)
            })
            .collect();
        triples.sort_unstable();
        debug_assert!(triples.windows(2).all(|w| w[0].0 != w[1].0));
        let vertices: Vec<[FacetId; 3]> = triples.iter().map(|t| t.0).collect();
        let vertex_labels: Vec<usize> = triples.iter().map(|t| t.1).collect();
        let vertex_index: HashMap<[FacetId; 3], VertexId> =
            vertices.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let label_to_id: HashMap<usize, VertexId> = vertex_labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();

        let facet_vertices: Vec<Vec<VertexId>> = facets
            .iter()
            .map(|cycle| cycle.iter().map(|l| label_to_id[l]).collect())
            .collect();

        let mut edges: Vec<Edge> = edge_facets
            .iter()
            .map(|(&(a, b), fs)| {
                let (x, y) = (label_to_id[&a], label_to_id[&b]);
                Edge {
                    vertices: [x.min(y), x.max(y)],
                    facets: [fs[0].min(fs[1]), fs[0].max(fs[1])],
                }
            })
            .collect();
        edges.sort_unstable_by_key(|e| (e.facets, e.vertices));

        let mut shared_edge = vec![vec![None; f]; f];
        let mut neighbors = vec![Vec::new(); f];
        for (id, e) in edges.iter().enumerate() {
            let [a, b] = e.facets;
            shared_edge[a][b] = Some(id);
            shared_edge[b][a] = Some(id);
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }

        let polytope = SimplePolytope3 {
            name,
            facet_labels: facets,
            facet_vertices,
            vertices,
            vertex_labels,
            vertex_index,
            edges,
            shared_edge,
            neighbors,
        };
        if !polytope.is_connected() {
            return Err(PolytopeError::Disconnected);
        }
        Ok(polytope)
    }

    pub fn from_document(doc: PolytopeDocument) -> Result<Self, PolytopeError> {
        Self::from_facets(doc.name.unwrap_or_default(), doc.facets)
    }

    /// Parses and validates the JSON schema `{"name"?: string, "facets": [[int]]}`.
    pub fn parse_json(text: &str) -> Result<Self, PolytopeError> {
        let doc: PolytopeDocument =
            serde_json::from_str(text).map_err(|e| PolytopeError::Schema(e.to_string()))?;
        Self::from_document(doc)
    }

    /// Serializes back to the input schema, facets ordered by their smallest
    /// vertex label. Facet ids are therefore not preserved.
    pub fn to_document(&self) -> PolytopeDocument {
        let mut facets = self.facet_labels.clone();
        facets.sort_by_key(|cycle| (cycle.iter().copied().min(), cycle.clone()));
        PolytopeDocument {
            name: (!self.name.is_empty()).then(|| self.name.clone()),
            facets,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("polytope document serializes")
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.facet_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(f) = queue.pop_front() {
            for &g in &self.neighbors[f] {
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn facet_count(&self) -> usize {
        self.facet_labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The only simple 3-polytope with four facets is the tetrahedron.
    pub fn is_simplex(&self) -> bool {
        self.facet_count() == 4
    }

    /// Cyclic vertex list of a facet, in internal vertex ids.
    pub fn facet(&self, f: FacetId) -> &[VertexId] {
        &self.facet_vertices[f]
    }

    /// Cyclic vertex list of a facet, in input labels.
    pub fn facet_labels(&self, f: FacetId) -> &[usize] {
        &self.facet_labels[f]
    }

    pub fn vertex_facets(&self, v: VertexId) -> [FacetId; 3] {
        self.vertices[v]
    }

    pub fn vertex_label(&self, v: VertexId) -> usize {
        self.vertex_labels[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, [FacetId; 3])> + '_ {
        self.vertices.iter().copied().enumerate()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn neighbors(&self, f: FacetId) -> &[FacetId] {
        &self.neighbors[f]
    }

    pub fn are_adjacent(&self, a: FacetId, b: FacetId) -> bool {
        self.shared_edge[a][b].is_some()
    }

    pub fn shared_edge(&self, a: FacetId, b: FacetId) -> Option<EdgeId> {
        self.shared_edge[a][b]
    }

    /// Vertex common to three facets, without range checks.
    pub(crate) fn vertex_of(&self, a: FacetId, b: FacetId, c: FacetId) -> Option<VertexId> {
        let mut t = [a, b, c];
        t.sort_unstable();
        self.vertex_index.get(&t).copied()
    }

    fn check_ids(&self, ids: &[FacetId]) -> Result<(), PolytopeError> {
        for &id in ids {
            if id >= self.facet_count() {
                return Err(PolytopeError::BadFacetId {
                    id,
                    count: self.facet_count(),
                });
            }
        }
        for i in 0..ids.len() {
            if ids[i + 1..].contains(&ids[i]) {
                return Err(PolytopeError::RepeatedFacetId(ids.to_vec()));
            }
        }
        Ok(())
    }

    /// The vertex shared by three distinct facets, if they meet.
    pub fn facets_common_vertex(
        &self,
        triple: [FacetId; 3],
    ) -> Result<Option<VertexId>, PolytopeError> {
        self.check_ids(&triple)?;
        Ok(self.vertex_of(triple[0], triple[1], triple[2]))
    }

    /// Whether the named facets actually intersect in a face of the stated kind.
    pub fn contains_face(&self, face: &FaceRef) -> Result<bool, PolytopeError> {
        self.check_ids(&face.facets)?;
        if face.facets.len() != face.kind.facet_count() {
            return Ok(false);
        }
        Ok(match face.kind {
            FaceKind::Polytope | FaceKind::Facet => true,
            FaceKind::Edge => self.are_adjacent(face.facets[0], face.facets[1]),
            FaceKind::Vertex => self
                .vertex_of(face.facets[0], face.facets[1], face.facets[2])
                .is_some(),
        })
    }
}

/// Named test polytopes: `simplex`, `cube`, `prism` (with `k >= 3` sides)
/// and `dodecahedron`.
///
/// Facet numbering: the cube lists opposite facets consecutively
/// (`x=0, x=1, y=0, y=1, z=0, z=1`); a prism lists top, bottom, then the
/// sides in cyclic order, so side `i` is facet `i + 2`.
pub fn builtin(name: &str, parameter: Option<usize>) -> Result<SimplePolytope3, PolytopeError> {
    let no_parameter = |name: &str| -> Result<(), PolytopeError> {
        match parameter {
            None => Ok(()),
            Some(_) => Err(PolytopeError::BadParameter {
                name: name.into(),
                reason: "takes no parameter".into(),
            }),
        }
    };
    let facets = match name {
        "simplex" => {
            no_parameter(name)?;
            vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
        }
        "cube" => {
            no_parameter(name)?;
            vec![
                vec![0, 4, 6, 2],
                vec![1, 3, 7, 5],
                vec![0, 1, 5, 4],
                vec![2, 6, 7, 3],
                vec![0, 2, 3, 1],
                vec![4, 5, 7, 6],
            ]
        }
        "prism" => {
            let k = parameter.ok_or_else(|| PolytopeError::BadParameter {
                name: name.into(),
                reason: "needs the number of sides".into(),
            })?;
            if k < 3 {
                return Err(PolytopeError::BadParameter {
                    name: name.into(),
                    reason: format!("need at least 3 sides, got {k}"),
                });
            }
            prism_facets(k)
        }
        "dodecahedron" => {
            no_parameter(name)?;
            dodecahedron_facets()
        }
        other => return Err(PolytopeError::UnknownBuiltin(other.into())),
    };
    let label = match (name, parameter) {
        ("prism", Some(k)) => format!("prism{k}"),
        _ => name.to_string(),
    };
    SimplePolytope3::from_facets(label, facets)
}

fn prism_facets(k: usize) -> Vec<Vec<usize>> {
    // bottom ring 0..k, top ring k..2k
    let mut facets = vec![(k..2 * k).collect(), (0..k).rev().collect()];
    for i in 0..k {
        let j = (i + 1) % k;
        facets.push(vec![i, j, k + j, k + i]);
    }
    facets
}

fn dodecahedron_facets() -> Vec<Vec<usize>> {
    // Four rings of five: a (top face), b, c, d (bottom face).
    let a = |i: usize| i % 5;
    let b = |i: usize| 5 + i % 5;
    let c = |i: usize| 10 + i % 5;
    let d = |i: usize| 15 + i % 5;
    let mut facets = vec![(0..5).map(a).collect::<Vec<_>>()];
    for i in 0..5 {
        facets.push(vec![a(i + 1), a(i), b(i), c(i + 1), b(i + 1)]);
    }
    for i in 0..5 {
        facets.push(vec![d(i), d(i + 1), c(i + 1), b(i), c(i)]);
    }
    facets.push((0..5).rev().map(d).collect());
    facets
}

/// The corpus used throughout the test suites: simplex, cube, prisms with
/// 3 to 8 sides, and the dodecahedron.
pub fn default_corpus() -> Vec<SimplePolytope3> {
    let mut corpus = vec![
        builtin("simplex", None).expect("builtin"),
        builtin("cube", None).expect("builtin"),
    ];
    corpus.extend((3..=8).map(|k| builtin("prism", Some(k)).expect("builtin")));
    corpus.push(builtin("dodecahedron", None).expect("builtin"));
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(p: &SimplePolytope3) -> (usize, usize, usize) {
        (p.vertex_count(), p.edge_count(), p.facet_count())
    }

    #[test]
    fn builtin_counts() {
        assert_eq!(counts(&builtin("simplex", None).unwrap()), (4, 6, 4));
        assert_eq!(counts(&builtin("cube", None).unwrap()), (8, 12, 6));
        assert_eq!(counts(&builtin("prism", Some(5)).unwrap()), (10, 15, 7));
        assert_eq!(counts(&builtin("dodecahedron", None).unwrap()), (20, 30, 12));
    }

    #[test]
    fn dodecahedron_is_all_pentagons() {
        let p = builtin("dodecahedron", None).unwrap();
        assert!((0..12).all(|f| p.facet(f).len() == 5));
    }

    #[test]
    fn simplex_facets_pairwise_adjacent() {
        let p = builtin("simplex", None).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(p.are_adjacent(a, b), a != b);
            }
        }
    }

    #[test]
    fn builtin_errors() {
        assert_eq!(
            builtin("icosahedron", None).unwrap_err(),
            PolytopeError::UnknownBuiltin("icosahedron".into())
        );
        assert!(matches!(
            builtin("prism", Some(2)),
            Err(PolytopeError::BadParameter { .. })
        ));
        assert!(matches!(
            builtin("prism", None),
            Err(PolytopeError::BadParameter { .. })
        ));
        assert!(matches!(
            builtin("cube", Some(4)),
            Err(PolytopeError::BadParameter { .. })
        ));
    }

    #[test]
    fn common_vertex_queries() {
        let simplex = builtin("simplex", None).unwrap();
        for t in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            assert!(simplex.facets_common_vertex(t).unwrap().is_some());
        }
        let cube = builtin("cube", None).unwrap();
        assert_eq!(cube.facets_common_vertex([4, 5, 0]).unwrap(), None);
        assert_eq!(
            cube.facets_common_vertex([0, 6, 1]),
            Err(PolytopeError::BadFacetId { id: 6, count: 6 })
        );
        assert!(matches!(
            cube.facets_common_vertex([0, 0, 2]),
            Err(PolytopeError::RepeatedFacetId(_))
        ));

        // prism(5): sides 2 and 3 share the top vertex above bottom vertex 1.
        let prism = builtin("prism", Some(5)).unwrap();
        let v = prism.facets_common_vertex([2, 3, 0]).unwrap().unwrap();
        assert_eq!(prism.vertex_label(v), 6);
    }

    #[test]
    fn rejects_duplicate_facet() {
        let mut facets = builtin("cube", None).unwrap().facet_labels.clone();
        facets.push(facets[2].iter().rev().copied().collect());
        assert_eq!(
            SimplePolytope3::from_facets("dup", facets).unwrap_err(),
            PolytopeError::DuplicateFacet { first: 2, second: 6 }
        );
    }

    #[test]
    fn rejects_open_surface() {
        let mut facets = builtin("cube", None).unwrap().facet_labels.clone();
        facets.pop();
        assert!(matches!(
            SimplePolytope3::from_facets("open", facets),
            Err(PolytopeError::NotSimple { count: 2, .. })
        ));
    }

    #[test]
    fn rejects_non_simple_vertex() {
        // square pyramid: apex in four facets
        let facets = vec![
            vec![0, 1, 2, 3],
            vec![0, 4, 1],
            vec![1, 4, 2],
            vec![2, 4, 3],
            vec![3, 4, 0],
        ];
        assert_eq!(
            SimplePolytope3::from_facets("pyramid", facets).unwrap_err(),
            PolytopeError::NotSimple { label: 4, count: 4 }
        );
    }

    #[test]
    fn rejects_edge_in_three_facets() {
        // each vertex in three facets, but edge {0,1} is in three of them
        let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 0, 4], vec![2, 3, 4]];
        assert!(matches!(
            SimplePolytope3::from_facets("bad", facets),
            Err(PolytopeError::NotSimple { .. } | PolytopeError::NotClosed { .. })
        ));
    }

    #[test]
    fn rejects_two_shared_edges() {
        // Dual of a sphere triangulation with a doubled edge: simple and
        // closed, Euler characteristic 2, but facets 0 and 1 meet twice.
        let facets = vec![
            vec![0, 1, 3, 7, 5, 4],
            vec![0, 2, 3, 7, 6, 4],
            vec![0, 1, 2],
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![5, 6, 7],
        ];
        assert_eq!(
            SimplePolytope3::from_facets("double", facets).unwrap_err(),
            PolytopeError::MultipleSharedEdges {
                first: 0,
                second: 1,
                shared: 2
            }
        );
    }

    #[test]
    fn rejects_schema_errors() {
        assert!(matches!(
            SimplePolytope3::parse_json(r#"{"facets": [[0, 1, -2]]}"#),
            Err(PolytopeError::Schema(_))
        ));
        assert!(matches!(
            SimplePolytope3::parse_json(r#"{"faces": []}"#),
            Err(PolytopeError::Schema(_))
        ));
        assert!(matches!(
            SimplePolytope3::parse_json(r#"{"facets": [[0, 1]]}"#),
            Err(PolytopeError::DegenerateFacet { .. })
        ));
    }

    #[test]
    fn rejects_disconnected() {
        let mut facets = builtin("simplex", None).unwrap().facet_labels.clone();
        facets.extend(
            builtin("simplex", None)
                .unwrap()
                .facet_labels
                .iter()
                .map(|c| c.iter().map(|v| v + 10).collect::<Vec<_>>()),
        );
        // two tetrahedra: V - E + F = 8 - 12 + 8 = 4
        assert!(matches!(
            SimplePolytope3::from_facets("two", facets),
            Err(PolytopeError::EulerViolation { chi: 4, .. })
        ));
    }

    #[test]
    fn parses_document_with_arbitrary_labels() {
        let text = r#"{"name": "tet", "facets": [[11, 12, 13], [10, 13, 12], [10, 11, 13], [10, 12, 11]]}"#;
        let p = SimplePolytope3::parse_json(text).unwrap();
        assert_eq!(p.name(), "tet");
        assert_eq!(counts(&p), (4, 6, 4));
        let labels: Vec<usize> = (0..4).map(|v| p.vertex_label(v)).collect();
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![10, 11, 12, 13]);
    }

    #[test]
    fn face_membership() {
        let cube = builtin("cube", None).unwrap();
        assert!(cube.contains_face(&FaceRef::polytope()).unwrap());
        assert!(cube.contains_face(&FaceRef::edge(0, 2)).unwrap());
        assert!(!cube.contains_face(&FaceRef::edge(0, 1)).unwrap());
        assert!(cube.contains_face(&FaceRef::vertex(0, 2, 4)).unwrap());
        assert!(!cube.contains_face(&FaceRef::vertex(0, 1, 4)).unwrap());
    }
}
