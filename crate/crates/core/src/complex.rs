//! Small covers and their sectional surfaces as identification complexes.
//!
//! A base cell complex (the polytope, or the square cut out by a 4-belt)
//! comes with a subgroup `G_c ⊆ Z₂³` for every cell. The quotient takes eight
//! copies `(c, g)` and merges `(c, g)` with `(c, g·h)` for `h ∈ G_c`. Boundary
//! incidences are inherited from the base complex copy by copy; the gluing
//! maps are the identity on each face, so incidence signs are inherited too.
//!
//! For the sectional surface, the gluing rule "`g⁻¹h = ⟨λ_F(fᵢ)⟩`" is read as
//! membership `g⁻¹h ∈ ⟨λ_F(fᵢ)⟩`, the same rule as for the polytope.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::belts::Belt;
use crate::coloring::{validate_coloring, CharacteristicMap, SubgroupZ2, SurfaceKind, Z2Vec};
use crate::polytope::SimplePolytope3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("invalid characteristic map: {0}")]
    InvalidColoring(String),
    #[error("expected a 4-belt, got a cycle of {0} facets")]
    NotAFourBelt(usize),
    #[error("not a closed surface: 1-cell {cell} has {sides} sides")]
    NotClosedSurface { cell: String, sides: usize },
    #[error("not a closed manifold: {dimension}-cell {cell} has {sides} sides")]
    NotClosedManifold {
        dimension: usize,
        cell: String,
        sides: usize,
    },
    #[error("expected a complex of dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A cell of the base complex.
#[derive(Debug, Clone)]
pub struct BaseCell {
    pub dimension: usize,
    pub name: String,
    pub stabilizer: SubgroupZ2,
    /// Faces of codimension one with incidence signs.
    pub boundary: Vec<(usize, i8)>,
}

/// An identified cell: a base cell together with the coset of group
/// elements whose copies were merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellClass {
    pub base: usize,
    pub name: String,
    /// Sorted members of the coset `g·G_c`.
    pub members: Vec<Z2Vec>,
}

impl CellClass {
    pub fn representative(&self) -> Z2Vec {
        self.members[0]
    }
}

impl fmt::Display for CellClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.name, self.representative())
    }
}

#[derive(Debug, Clone)]
pub struct IdentificationComplex {
    dimension: usize,
    base: Vec<BaseCell>,
    /// Cell classes per dimension.
    cells: Vec<Vec<CellClass>>,
    /// `class_of[base][g]` is the index of the class of `(base, g)` within
    /// its dimension.
    class_of: Vec<[usize; 8]>,
    /// `boundary[d][i]`: raw incidences of class `i` of dimension `d` on
    /// classes of dimension `d - 1`, one entry per base incidence.
    boundary: Vec<Vec<Vec<(usize, i8)>>>,
}

/// Per-component summary of a closed complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    /// Number of cell classes per dimension.
    pub cells: Vec<usize>,
    pub euler_characteristic: i64,
    pub orientable: bool,
}

impl IdentificationComplex {
    /// Quotient of eight copies of a base complex.
    pub fn from_base(base: Vec<BaseCell>) -> Self {
        let dimension = base.iter().map(|c| c.dimension).max().unwrap_or(0);
        let mut cells = vec![Vec::new(); dimension + 1];
        let mut class_of = vec![[0usize; 8]; base.len()];
        for (b, cell) in base.iter().enumerate() {
            let mut uf = UnionFind::new(8);
            for g in Z2Vec::all() {
                for &h in cell.stabilizer.generators() {
                    uf.union(g.bits() as usize, (g ^ h).bits() as usize);
                }
            }
            let mut root_index = [usize::MAX; 8];
            for g in Z2Vec::all() {
                let i = g.bits() as usize;
                let root = uf.find(i);
                if root_index[root] == usize::MAX {
                    root_index[root] = cells[cell.dimension].len();
                    cells[cell.dimension].push(CellClass {
                        base: b,
                        name: cell.name.clone(),
                        members: Vec::new(),
                    });
                }
                class_of[b][i] = root_index[root];
                cells[cell.dimension][root_index[root]].members.push(g);
            }
        }
        let mut boundary: Vec<Vec<Vec<(usize, i8)>>> =
            cells.iter().map(|level| vec![Vec::new(); level.len()]).collect();
        for (d, level) in cells.iter().enumerate().skip(1) {
            for (i, class) in level.iter().enumerate() {
                let g = class.representative().bits() as usize;
                boundary[d][i] = base[class.base]
                    .boundary
                    .iter()
                    .map(|&(face, sign)| (class_of[face][g], sign))
                    .collect();
            }
        }
        IdentificationComplex {
            dimension,
            base,
            cells,
            class_of,
            boundary,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn base_cells(&self) -> &[BaseCell] {
        &self.base
    }

    pub fn cells(&self, d: usize) -> &[CellClass] {
        &self.cells[d]
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Index of the class containing the copy `(base cell, g)`.
    pub fn class_of(&self, base: usize, g: Z2Vec) -> usize {
        self.class_of[base][g.bits() as usize]
    }

    /// Raw boundary incidences of a class, with signs.
    pub fn boundary(&self, d: usize, i: usize) -> &[(usize, i8)] {
        &self.boundary[d][i]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, level)| if d % 2 == 0 { 1 } else { -1 } * level.len() as i64)
            .sum()
    }

    /// Whether `∂∘∂ = 0` on the cellular chains of the quotient.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..=self.dimension).all(|d| {
            (0..self.cells[d].len()).all(|i| {
                let mut total = vec![0i64; self.cells[d - 2].len()];
                for &(face, s) in &self.boundary[d][i] {
                    for &(sub, t) in &self.boundary[d - 1][face] {
                        total[sub] += i64::from(s) * i64::from(t);
                    }
                }
                total.iter().all(|&x| x == 0)
            })
        })
    }

    /// For each codimension-one class, its incidences on top cells as
    /// `(top class, sign)`.
    fn sides(&self) -> Vec<Vec<(usize, i8)>> {
        let n = self.dimension;
        let mut sides = vec![Vec::new(); self.cells[n - 1].len()];
        for (t, faces) in self.boundary[n].iter().enumerate() {
            for &(face, sign) in faces {
                sides[face].push((t, sign));
            }
        }
        sides
    }

    fn check_closed(&self) -> Result<Vec<Vec<(usize, i8)>>, ComplexError> {
        if self.dimension == 0 {
            return Err(ComplexError::WrongDimension {
                expected: 2,
                actual: 0,
            });
        }
        let sides = self.sides();
        for (i, s) in sides.iter().enumerate() {
            if s.len() != 2 {
                let cell = self.cells[self.dimension - 1][i].to_string();
                return Err(if self.dimension == 2 {
                    ComplexError::NotClosedSurface {
                        cell,
                        sides: s.len(),
                    }
                } else {
                    ComplexError::NotClosedManifold {
                        dimension: self.dimension - 1,
                        cell,
                        sides: s.len(),
                    }
                });
            }
        }
        Ok(sides)
    }

    /// Connected components with their Euler characteristics and
    /// orientability, for a closed pseudomanifold.
    ///
    /// Orientations of top cells are found by propagation: a codimension-one
    /// class with sides `(t1, s1)`, `(t2, s2)` forces `o(t1)·s1 = -o(t2)·s2`.
    pub fn components(&self) -> Result<Vec<ComponentSummary>, ComplexError> {
        let n = self.dimension;
        let sides = self.check_closed()?;
        let top = self.cells[n].len();
        let mut orientation = vec![0i8; top];
        let mut component = vec![usize::MAX; top];
        let mut adjacency: Vec<Vec<(usize, i8)>> = vec![Vec::new(); top];
        for s in &sides {
            let ((t1, s1), (t2, s2)) = (s[0], s[1]);
            adjacency[t1].push((t2, -s1 * s2));
            adjacency[t2].push((t1, -s1 * s2));
        }
        let mut orientable = Vec::new();
        for start in 0..top {
            if component[start] != usize::MAX {
                continue;
            }
            let c = orientable.len();
            orientable.push(true);
            component[start] = c;
            orientation[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for &(u, rel) in &adjacency[t] {
                    let want = orientation[t] * rel;
                    if component[u] == usize::MAX {
                        component[u] = c;
                        orientation[u] = want;
                        stack.push(u);
                    } else if orientation[u] != want {
                        orientable[c] = false;
                    }
                }
            }
        }
        // Lower cells inherit the component of any top cell above them.
        let mut membership: Vec<Vec<usize>> = self.cells.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        membership[n] = component;
        for d in (1..=n).rev() {
            for i in 0..self.cells[d].len() {
                let c = membership[d][i];
                for &(face, _) in &self.boundary[d][i] {
                    membership[d - 1][face] = c;
                }
            }
        }
        let mut out: Vec<ComponentSummary> = orientable
            .into_iter()
            .map(|o| ComponentSummary {
                cells: vec![0; n + 1],
                euler_characteristic: 0,
                orientable: o,
            })
            .collect();
        for (d, level) in membership.iter().enumerate() {
            for &c in level {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                out[c].cells[d] += 1;
                out[c].euler_characteristic += sign;
            }
        }
        Ok(out)
    }

    /// Plain-text census: `cells[d]=<count>` per dimension, then one
    /// `chi=<int> orientable=<bool>` line per component.
    pub fn census(&self) -> Result<String, ComplexError> {
        let mut out = String::new();
        for (d, n) in self.cell_counts().iter().enumerate() {
            writeln!(out, "cells[{d}]={n}").expect("write to string");
        }
        for c in self.components()? {
            writeln!(out, "chi={} orientable={}", c.euler_characteristic, c.orientable)
                .expect("write to string");
        }
        Ok(out)
    }
}

/// Base complex of a polytope: vertices, edges, facets and the 3-cell, with
/// the facet stabilizers `G_f` of `λ`.
///
/// Facets are oriented coherently by propagation across edges, giving the
/// incidence signs of the 3-cell; a facet's edges get sign `+1` when the
/// facet's cyclic order runs from the edge's first endpoint to its second.
pub fn polytope_base(p: &SimplePolytope3, lambda: &CharacteristicMap) -> Vec<BaseCell> {
    let v = p.vertex_count();
    let e = p.edge_count();
    let f = p.facet_count();
    let mut base = Vec::with_capacity(v + e + f + 1);
    for (_, facets) in p.vertices() {
        base.push(BaseCell {
            dimension: 0,
            name: format!("F{}∩F{}∩F{}", facets[0], facets[1], facets[2]),
            stabilizer: SubgroupZ2::span(&facets.map(|x| lambda.color(x))),
            boundary: Vec::new(),
        });
    }
    for edge in p.edges() {
        let [a, b] = edge.facets;
        base.push(BaseCell {
            dimension: 1,
            name: format!("F{a}∩F{b}"),
            stabilizer: SubgroupZ2::span(&[lambda.color(a), lambda.color(b)]),
            boundary: vec![(edge.vertices[1], 1), (edge.vertices[0], -1)],
        });
    }
    for facet in 0..f {
        let cycle = p.facet(facet);
        let boundary = (0..cycle.len())
            .map(|i| {
                let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                let other = p
                    .neighbors(facet)
                    .iter()
                    .copied()
                    .find(|&g| {
                        let ed = p.edge(p.shared_edge(facet, g).expect("neighbor"));
                        ed.vertices == [x.min(y), x.max(y)]
                    })
                    .expect("every facet side is an edge");
                let edge = p.shared_edge(facet, other).expect("neighbor");
                (v + edge, if p.edge(edge).vertices[0] == x { 1 } else { -1 })
            })
            .collect();
        base.push(BaseCell {
            dimension: 2,
            name: format!("F{facet}"),
            stabilizer: SubgroupZ2::span(&[lambda.color(facet)]),
            boundary,
        });
    }
    let signs = coherent_facet_signs(p);
    base.push(BaseCell {
        dimension: 3,
        name: "P".to_string(),
        stabilizer: SubgroupZ2::trivial(),
        boundary: (0..f).map(|x| (v + e + x, signs[x])).collect(),
    });
    base
}

/// Signs making the facet cycles a coherent orientation of the boundary
/// sphere: every edge is traversed in opposite directions by its two facets.
pub fn coherent_facet_signs(p: &SimplePolytope3) -> Vec<i8> {
    let traverses = |facet: usize, x: usize, y: usize| -> bool {
        let c = p.facet(facet);
        (0..c.len()).any(|i| c[i] == x && c[(i + 1) % c.len()] == y)
    };
    let mut signs = vec![0i8; p.facet_count()];
    signs[0] = 1;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for &b in p.neighbors(a) {
            let edge = p.edge(p.shared_edge(a, b).expect("neighbor"));
            let [x, y] = edge.vertices;
            let a_forward = traverses(a, x, y) == (signs[a] == 1);
            let b_same_cycle_forward = traverses(b, x, y);
            let want = if a_forward == b_same_cycle_forward { -1 } else { 1 };
            if signs[b] == 0 {
                signs[b] = want;
                stack.push(b);
            } else {
                assert_eq!(signs[b], want, "boundary of a polytope is orientable");
            }
        }
    }
    signs
}

/// The small cover `M = P × Z₂³ / ∼` of a characteristic map.
pub fn build_manifold_complex(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
) -> Result<IdentificationComplex, ComplexError> {
    match validate_coloring(p, lambda) {
        Err(e) => return Err(ComplexError::InvalidColoring(e.to_string())),
        Ok(Some(bad)) => {
            return Err(ComplexError::InvalidColoring(format!(
                "colors {}, {}, {} at vertex F{}∩F{}∩F{} are dependent",
                bad.colors[0], bad.colors[1], bad.colors[2], bad.facets[0], bad.facets[1], bad.facets[2]
            )))
        }
        Ok(None) => {}
    }
    Ok(IdentificationComplex::from_base(polytope_base(p, lambda)))
}

/// Base complex of the square with edges `f1..f4` colored by `colors`.
/// Corner `pᵢ` joins `fᵢ` to `fᵢ₊₁`; edge `fᵢ` runs from `pᵢ₋₁` to `pᵢ`.
pub fn square_base(colors: [Z2Vec; 4]) -> Vec<BaseCell> {
    let mut base = Vec::with_capacity(9);
    for i in 0..4 {
        base.push(BaseCell {
            dimension: 0,
            name: format!("p{}", i + 1),
            stabilizer: SubgroupZ2::span(&[colors[i], colors[(i + 1) % 4]]),
            boundary: Vec::new(),
        });
    }
    for (i, &c) in colors.iter().enumerate() {
        base.push(BaseCell {
            dimension: 1,
            name: format!("f{}", i + 1),
            stabilizer: SubgroupZ2::span(&[c]),
            boundary: vec![(i, 1), ((i + 3) % 4, -1)],
        });
    }
    base.push(BaseCell {
        dimension: 2,
        name: "F".to_string(),
        stabilizer: SubgroupZ2::trivial(),
        boundary: (0..4).map(|i| (4 + i, 1)).collect(),
    });
    base
}

/// The surface glued from eight squares with edge colors `colors`.
pub fn build_square_surface(colors: [Z2Vec; 4]) -> IdentificationComplex {
    IdentificationComplex::from_base(square_base(colors))
}

/// The sectional surface `M_F = F × Z₂³ / ∼` over a 4-belt.
pub fn build_section_surface(
    belt: &Belt,
    lambda: &CharacteristicMap,
) -> Result<IdentificationComplex, ComplexError> {
    let facets: [usize; 4] = belt
        .facets()
        .try_into()
        .map_err(|_| ComplexError::NotAFourBelt(belt.len()))?;
    Ok(build_square_surface(facets.map(|f| lambda.color(f))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceName {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
    OrientableGenus(u32),
    NonOrientableGenus(u32),
}

impl SurfaceName {
    /// Classification of a closed connected surface.
    pub fn classify(euler_characteristic: i64, orientable: bool) -> Option<Self> {
        let chi = euler_characteristic;
        if orientable {
            if chi > 2 || chi % 2 != 0 {
                return None;
            }
            let genus = ((2 - chi) / 2) as u32;
            Some(match genus {
                0 => SurfaceName::Sphere,
                1 => SurfaceName::Torus,
                g => SurfaceName::OrientableGenus(g),
            })
        } else {
            if chi > 1 {
                return None;
            }
            let k = (2 - chi) as u32;
            Some(match k {
                1 => SurfaceName::ProjectivePlane,
                2 => SurfaceName::KleinBottle,
                k => SurfaceName::NonOrientableGenus(k),
            })
        }
    }
}

impl fmt::Display for SurfaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceName::Sphere => f.write_str("Sphere"),
            SurfaceName::ProjectivePlane => f.write_str("ProjectivePlane"),
            SurfaceName::Torus => f.write_str("Torus"),
            SurfaceName::KleinBottle => f.write_str("KleinBottle"),
            SurfaceName::OrientableGenus(g) => write!(f, "OrientableGenus{g}"),
            SurfaceName::NonOrientableGenus(k) => write!(f, "NonOrientableGenus{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub name: SurfaceName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceReport {
    /// The section surface type this report describes, if it is one of the
    /// four that occur over 4-belts.
    pub fn kind(&self) -> Option<SurfaceKind> {
        let names: Vec<SurfaceName> = self.components.iter().map(|c| c.name).collect();
        match names.as_slice() {
            [SurfaceName::Torus] => Some(SurfaceKind::Torus),
            [SurfaceName::KleinBottle] => Some(SurfaceKind::KleinBottle),
            [SurfaceName::Torus, SurfaceName::Torus] => Some(SurfaceKind::TwoTori),
            [SurfaceName::KleinBottle, SurfaceName::KleinBottle] => Some(SurfaceKind::TwoKleinBottles),
            _ => None,
        }
    }
}

pub fn surface_report(c: &IdentificationComplex) -> Result<SurfaceReport, ComplexError> {
    if c.dimension() != 2 {
        return Err(ComplexError::WrongDimension {
            expected: 2,
            actual: c.dimension(),
        });
    }
    let components = c
        .components()?
        .into_iter()
        .map(|s| SurfaceComponent {
            euler_characteristic: s.euler_characteristic,
            orientable: s.orientable,
            name: SurfaceName::classify(s.euler_characteristic, s.orientable)
                .expect("closed surface has χ ≤ 2"),
        })
        .collect();
    Ok(SurfaceReport { components })
}

/// Orientability of a closed 3-dimensional identification complex.
pub fn complex_orientable(c: &IdentificationComplex) -> Result<bool, ComplexError> {
    if c.dimension() != 3 {
        return Err(ComplexError::WrongDimension {
            expected: 3,
            actual: c.dimension(),
        });
    }
    Ok(c.components()?.iter().all(|s| s.orientable))
}
