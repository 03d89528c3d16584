//! Characteristic maps `λ: facets → Z₂³` and the group theory around them.
//!
//! Group elements are 3-bit masks; the group operation is XOR, so the
//! multiplicative `g·h` of the topology literature is `g ^ h` here. Bit `k`
//! is the coefficient of `e_{k+1}`.

mod section;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::BitXor;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polytope::{FaceKind, FaceRef, FacetId, PolytopeError, SimplePolytope3, VertexId};

pub use section::{
    canonical_section_tuple, classify_belt_section, classify_section_tuple, section_frame,
    SectionClass, SectionError, SectionFrame, SurfaceKind, SECTION_CLASSES,
};

/// Enumeration refuses polytopes with more facets than this unless overridden.
pub const DEFAULT_MAX_FACETS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring schema error: {0}")]
    Schema(String),
    #[error("no color given for facet {0}")]
    MissingFacet(FacetId),
    #[error("color given for facet {facet}, but the polytope has {count} facets")]
    UnknownFacet { facet: FacetId, count: usize },
    #[error("facet {0} is colored with the zero vector")]
    ZeroColor(FacetId),
    #[error("{facets} facets exceeds the enumeration limit of {limit}")]
    TooLarge { facets: usize, limit: usize },
    #[error("not a face of the polytope: {0:?}")]
    BadFace(FaceRef),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// An element of Z₂³.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z2Vec(u8);

impl Z2Vec {
    pub const IDENTITY: Z2Vec = Z2Vec(0);
    pub const E1: Z2Vec = Z2Vec(0b001);
    pub const E2: Z2Vec = Z2Vec(0b010);
    pub const E3: Z2Vec = Z2Vec(0b100);

    pub fn new(bits: u8) -> Option<Self> {
        (bits < 8).then_some(Z2Vec(bits))
    }

    /// From coordinates `[b1, b2, b3]`, each 0 or 1.
    pub fn from_coords(coords: [u8; 3]) -> Option<Self> {
        if coords.iter().any(|&b| b > 1) {
            return None;
        }
        Some(Z2Vec(coords[0] | coords[1] << 1 | coords[2] << 2))
    }

    pub fn coords(self) -> [u8; 3] {
        [self.0 & 1, self.0 >> 1 & 1, self.0 >> 2 & 1]
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Value of the linear functional whose coefficient vector is `self`.
    pub fn pair(self, x: Z2Vec) -> bool {
        (self.0 & x.0).count_ones() % 2 == 1
    }

    pub fn all() -> impl Iterator<Item = Z2Vec> {
        (0..8).map(Z2Vec)
    }

    pub fn nonzero() -> impl Iterator<Item = Z2Vec> {
        (1..8).map(Z2Vec)
    }
}

impl BitXor for Z2Vec {
    type Output = Z2Vec;

    fn bitxor(self, rhs: Z2Vec) -> Z2Vec {
        Z2Vec(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Z2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for k in 0..3 {
            if self.0 >> k & 1 == 1 {
                write!(f, "e{}", k + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Z2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Z2Vec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Z2Vec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coords = <[u8; 3]>::deserialize(d)?;
        Z2Vec::from_coords(coords)
            .ok_or_else(|| serde::de::Error::custom(format!("bits must be 0 or 1, got {coords:?}")))
    }
}

/// Whether three elements form a basis of Z₂³.
pub fn independent3(a: Z2Vec, b: Z2Vec, c: Z2Vec) -> bool {
    !a.is_identity() && !b.is_identity() && a != b && ![Z2Vec(0), a, b, a ^ b].contains(&c)
}

/// A linear map of Z₂³ given by the images of `e1, e2, e3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearMap(pub [Z2Vec; 3]);

impl LinearMap {
    pub const IDENTITY: LinearMap = LinearMap([Z2Vec::E1, Z2Vec::E2, Z2Vec::E3]);

    pub fn apply(&self, x: Z2Vec) -> Z2Vec {
        let mut out = Z2Vec::IDENTITY;
        for k in 0..3 {
            if x.0 >> k & 1 == 1 {
                out = out ^ self.0[k];
            }
        }
        out
    }

    pub fn is_invertible(&self) -> bool {
        independent3(self.0[0], self.0[1], self.0[2])
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_invertible() {
            return None;
        }
        let mut images = [Z2Vec::IDENTITY; 3];
        for x in Z2Vec::all() {
            let y = self.apply(x);
            for (k, slot) in images.iter_mut().enumerate() {
                if y == Z2Vec(1 << k) {
                    *slot = x;
                }
            }
        }
        Some(LinearMap(images))
    }
}

/// All 168 invertible linear maps of Z₂³, in lexicographic order.
pub fn general_linear_group() -> &'static [LinearMap] {
    static GROUP: OnceLock<Vec<LinearMap>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let mut out = Vec::with_capacity(168);
        for a in Z2Vec::nonzero() {
            for b in Z2Vec::nonzero() {
                for c in Z2Vec::nonzero() {
                    if independent3(a, b, c) {
                        out.push(LinearMap([a, b, c]));
                    }
                }
            }
        }
        out
    })
}

/// A subgroup of Z₂³, stored as a membership mask over the eight elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupZ2 {
    generators: Vec<Z2Vec>,
    members: u8,
}

impl SubgroupZ2 {
    pub fn trivial() -> Self {
        SubgroupZ2 {
            generators: Vec::new(),
            members: 1,
        }
    }

    pub fn span(generators: &[Z2Vec]) -> Self {
        let mut members: u8 = 1;
        for &g in generators {
            let mut next = members;
            for x in Z2Vec::all() {
                if members >> x.0 & 1 == 1 {
                    next |= 1 << (x ^ g).0;
                }
            }
            members = next;
        }
        SubgroupZ2 {
            generators: generators.to_vec(),
            members,
        }
    }

    pub fn generators(&self) -> &[Z2Vec] {
        &self.generators
    }

    pub fn contains(&self, x: Z2Vec) -> bool {
        self.members >> x.0 & 1 == 1
    }

    pub fn elements(&self) -> Vec<Z2Vec> {
        Z2Vec::all().filter(|&x| self.contains(x)).collect()
    }

    pub fn order(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn rank(&self) -> u32 {
        self.order().trailing_zeros()
    }

    /// Smallest element of the coset `g·H`.
    pub fn coset_representative(&self, g: Z2Vec) -> Z2Vec {
        self.elements().into_iter().map(|h| g ^ h).min().expect("nonempty")
    }
}

/// An assignment of a nonzero Z₂³ element to every facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacteristicMap {
    colors: Vec<Z2Vec>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringDocument {
    colors: BTreeMap<String, Z2Vec>,
}

impl CharacteristicMap {
    pub fn new(colors: Vec<Z2Vec>) -> Self {
        CharacteristicMap { colors }
    }

    pub fn color(&self, f: FacetId) -> Z2Vec {
        self.colors[f]
    }

    pub fn colors(&self) -> &[Z2Vec] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Applies a basis change to every value.
    pub fn transformed(&self, map: &LinearMap) -> Self {
        CharacteristicMap::new(self.colors.iter().map(|&c| map.apply(c)).collect())
    }

    /// Parses `{"colors": {"<facet index>": [b1, b2, b3]}}` for a polytope
    /// with `facet_count` facets.
    pub fn parse_json(text: &str, facet_count: usize) -> Result<Self, ColoringError> {
        let doc: ColoringDocument =
            serde_json::from_str(text).map_err(|e| ColoringError::Schema(e.to_string()))?;
        let mut colors = vec![None; facet_count];
        for (key, color) in doc.colors {
            let facet: FacetId = key
                .parse()
                .map_err(|_| ColoringError::Schema(format!("facet key `{key}` is not an index")))?;
            if facet >= facet_count {
                return Err(ColoringError::UnknownFacet {
                    facet,
                    count: facet_count,
                });
            }
            if color.is_identity() {
                return Err(ColoringError::ZeroColor(facet));
            }
            colors[facet] = Some(color);
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(f, c)| c.ok_or(ColoringError::MissingFacet(f)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharacteristicMap { colors })
    }

    pub fn to_json(&self) -> String {
        let doc = ColoringDocument {
            colors: self
                .colors
                .iter()
                .enumerate()
                .map(|(f, &c)| (f.to_string(), c))
                .collect(),
        };
        serde_json::to_string(&doc).expect("coloring document serializes")
    }
}

impl fmt::Display for CharacteristicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A vertex whose three facet colors are linearly dependent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub facets: [FacetId; 3],
    pub colors: [Z2Vec; 3],
}

/// Checks linear independence at every vertex; returns the first failing
/// vertex, or `None` when `λ` is a characteristic map.
pub fn validate_coloring(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
) -> Result<Option<Violation>, ColoringError> {
    if lambda.len() < p.facet_count() {
        return Err(ColoringError::MissingFacet(lambda.len()));
    }
    if lambda.len() > p.facet_count() {
        return Err(ColoringError::UnknownFacet {
            facet: p.facet_count(),
            count: p.facet_count(),
        });
    }
    for (vertex, facets) in p.vertices() {
        let colors = facets.map(|f| lambda.color(f));
        if !independent3(colors[0], colors[1], colors[2]) {
            return Ok(Some(Violation {
                vertex,
                facets,
                colors,
            }));
        }
    }
    Ok(None)
}

pub fn is_valid_coloring(p: &SimplePolytope3, lambda: &CharacteristicMap) -> bool {
    matches!(validate_coloring(p, lambda), Ok(None))
}

/// Lexicographically least image of `λ` under all 168 basis changes.
pub fn canonical_under_basis_change(lambda: &CharacteristicMap) -> CharacteristicMap {
    general_linear_group()
        .iter()
        .map(|m| lambda.transformed(m))
        .min()
        .expect("group is nonempty")
}

/// All characteristic maps on `p` by backtracking over facets in id order.
///
/// With `up_to_basis`, returns one representative per orbit of the basis
/// change group, the lexicographically least element of each orbit, sorted.
pub fn enumerate_colorings(
    p: &SimplePolytope3,
    up_to_basis: bool,
    max_facets: usize,
) -> Result<Vec<CharacteristicMap>, ColoringError> {
    let n = p.facet_count();
    if n > max_facets {
        return Err(ColoringError::TooLarge {
            facets: n,
            limit: max_facets,
        });
    }

    // Vertices become checkable once their largest facet is colored.
    let closing = closing_vertices(p);

    let mut colors = vec![Z2Vec::IDENTITY; n];
    if !up_to_basis {
        let mut out = Vec::new();
        extend(0, &mut colors, &closing, &mut |c| {
            out.push(CharacteristicMap::new(c.to_vec()));
            true
        });
        return Ok(out);
    }

    // Every orbit has a member sending the facets at vertex 0 to e1, e2, e3.
    let [a, b, c] = p.vertex_facets(0);
    let fixed = [(a, Z2Vec::E1), (b, Z2Vec::E2), (c, Z2Vec::E3)];
    let mut reps = BTreeSet::new();
    extend_fixed(0, &mut colors, &closing, &fixed, &mut |c| {
        reps.insert(canonical_under_basis_change(&CharacteristicMap::new(c.to_vec())));
    });
    Ok(reps.into_iter().collect())
}

fn closing_vertices(p: &SimplePolytope3) -> Vec<Vec<[FacetId; 3]>> {
    let mut closing: Vec<Vec<[FacetId; 3]>> = vec![Vec::new(); p.facet_count()];
    for (_, t) in p.vertices() {
        closing[t[2]].push(t);
    }
    closing
}

/// The first characteristic map found by the same backtracking, without
/// enumerating the rest. Not subject to a facet limit.
pub fn first_coloring(p: &SimplePolytope3) -> Option<CharacteristicMap> {
    let closing = closing_vertices(p);
    let mut colors = vec![Z2Vec::IDENTITY; p.facet_count()];
    let mut found = None;
    extend(0, &mut colors, &closing, &mut |c| {
        found = Some(CharacteristicMap::new(c.to_vec()));
        false
    });
    found
}

fn consistent(colors: &[Z2Vec], closing: &[[FacetId; 3]]) -> bool {
    closing
        .iter()
        .all(|t| independent3(colors[t[0]], colors[t[1]], colors[t[2]]))
}

/// Returns false once `emit` asks to stop.
fn extend(
    f: usize,
    colors: &mut [Z2Vec],
    closing: &[Vec<[FacetId; 3]>],
    emit: &mut dyn FnMut(&[Z2Vec]) -> bool,
) -> bool {
    if f == colors.len() {
        return emit(colors);
    }
    for c in Z2Vec::nonzero() {
        colors[f] = c;
        if consistent(colors, &closing[f]) && !extend(f + 1, colors, closing, emit) {
            return false;
        }
    }
    true
}

fn extend_fixed(
    f: usize,
    colors: &mut [Z2Vec],
    closing: &[Vec<[FacetId; 3]>],
    fixed: &[(FacetId, Z2Vec)],
    emit: &mut dyn FnMut(&[Z2Vec]),
) {
    if f == colors.len() {
        emit(colors);
        return;
    }
    let pinned = fixed.iter().find(|(g, _)| *g == f).map(|&(_, c)| c);
    for c in Z2Vec::nonzero() {
        if pinned.is_some_and(|p| p != c) {
            continue;
        }
        colors[f] = c;
        if consistent(colors, &closing[f]) {
            extend_fixed(f + 1, colors, closing, fixed, emit);
        }
    }
}

/// A nonzero functional `ε` with `ε(λ(F)) = 1` on every facet, if one exists.
/// Returned as its coefficient vector.
pub fn orientation_functional(lambda: &CharacteristicMap) -> Option<Z2Vec> {
    Z2Vec::nonzero().find(|eps| lambda.colors().iter().all(|&c| eps.pair(c)))
}

/// Orientability of the small cover: some functional is odd on every color.
pub fn is_orientable(lambda: &CharacteristicMap) -> bool {
    orientation_functional(lambda).is_some()
}

/// The subgroup `G_f` generated by the colors of the facets containing `f`.
pub fn face_subgroup(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
    face: &FaceRef,
) -> Result<SubgroupZ2, ColoringError> {
    if !p.contains_face(face)? {
        return Err(ColoringError::BadFace(face.clone()));
    }
    if face.kind == FaceKind::Polytope {
        return Ok(SubgroupZ2::trivial());
    }
    let gens: Vec<Z2Vec> = face.facets.iter().map(|&f| lambda.color(f)).collect();
    Ok(SubgroupZ2::span(&gens))
}
