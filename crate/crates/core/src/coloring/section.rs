//! The square section cut out by a 4-belt and the coloring it inherits.
//!
//! Restricting `λ` to the belt facets `F1..F4` gives a 4-tuple of colors on
//! the edges `f1..f4` of the square. Up to basis changes of Z₂³ and the
//! symmetries of the square there are exactly five such tuples; the sectional
//! surface is determined by which one occurs.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use super::{general_linear_group, CharacteristicMap, LinearMap, SubgroupZ2, Z2Vec};
use crate::belts::Belt;
use crate::polytope::FacetId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionError {
    #[error("expected a 4-belt, got a cycle of {0} facets")]
    NotAFourBelt(usize),
    #[error("adjacent belt facets {0} and {1} have the same color")]
    RepeatedColor(FacetId, FacetId),
    #[error("section tuple {0:?} matches none of the five classes")]
    UnclassifiableSection([Z2Vec; 4]),
}

/// Surface type of the preimage of the square section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    TwoTori,
    TwoKleinBottles,
    Torus,
    KleinBottle,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::TwoTori => "TwoTori",
            SurfaceKind::TwoKleinBottles => "TwoKleinBottles",
            SurfaceKind::Torus => "Torus",
            SurfaceKind::KleinBottle => "KleinBottle",
        }
    }

    pub fn components(self) -> usize {
        match self {
            SurfaceKind::TwoTori | SurfaceKind::TwoKleinBottles => 2,
            SurfaceKind::Torus | SurfaceKind::KleinBottle => 1,
        }
    }

    pub fn orientable(self) -> bool {
        matches!(self, SurfaceKind::TwoTori | SurfaceKind::Torus)
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the five section colorings, in the standard basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SectionClass {
    /// 1 through 5, in the order of [`SECTION_CLASSES`].
    pub case: u8,
    pub tuple: [Z2Vec; 4],
    pub surface: SurfaceKind,
    /// Rank of the subgroup generated by the four colors.
    pub rank: u32,
}

const E1: Z2Vec = Z2Vec::E1;
const E2: Z2Vec = Z2Vec::E2;
const E3: Z2Vec = Z2Vec::E3;
const E12: Z2Vec = Z2Vec(0b011);
const E123: Z2Vec = Z2Vec(0b111);

pub const SECTION_CLASSES: [SectionClass; 5] = [
    SectionClass {
        case: 1,
        tuple: [E1, E2, E1, E2],
        surface: SurfaceKind::TwoTori,
        rank: 2,
    },
    SectionClass {
        case: 2,
        tuple: [E1, E2, E1, E12],
        surface: SurfaceKind::TwoKleinBottles,
        rank: 2,
    },
    SectionClass {
        case: 3,
        tuple: [E1, E2, E3, E2],
        surface: SurfaceKind::Torus,
        rank: 3,
    },
    SectionClass {
        case: 4,
        tuple: [E1, E2, E3, E12],
        surface: SurfaceKind::KleinBottle,
        rank: 3,
    },
    SectionClass {
        case: 5,
        tuple: [E1, E2, E3, E123],
        surface: SurfaceKind::Torus,
        rank: 3,
    },
];

impl SectionClass {
    /// Whether the colors generate all of Z₂³ (the eight-square case) rather
    /// than an index-2 subgroup.
    pub fn is_full_rank(&self) -> bool {
        self.rank == 3
    }

    /// The subgroup generated by the four edge colors.
    pub fn image(&self) -> SubgroupZ2 {
        SubgroupZ2::span(&self.tuple)
    }

    pub fn tuple_string(&self) -> String {
        let parts: Vec<String> = self.tuple.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for SectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} {} {}", self.case, self.tuple_string(), self.surface)
    }
}

/// Position permutations of the square: four rotations, each followed by
/// its reflection. Entry `i` says which old position moves to position `i`.
fn square_symmetries() -> [[usize; 4]; 8] {
    let mut out = [[0; 4]; 8];
    for r in 0..4 {
        out[2 * r] = [0, 1, 2, 3].map(|i| (i + r) % 4);
        out[2 * r + 1] = [0, 1, 2, 3].map(|i| (r + 4 - i) % 4);
    }
    out
}

/// Lexicographically least image of a section tuple under basis changes and
/// symmetries of the square (1344 group elements, searched exhaustively).
pub fn canonical_section_tuple(tuple: [Z2Vec; 4]) -> [Z2Vec; 4] {
    let mut best = tuple;
    for perm in square_symmetries() {
        let permuted = perm.map(|i| tuple[i]);
        for m in general_linear_group() {
            let image = permuted.map(|c| m.apply(c));
            if image < best {
                best = image;
            }
        }
    }
    best
}

fn canonical_table() -> &'static [([Z2Vec; 4], SectionClass); 5] {
    static TABLE: OnceLock<[([Z2Vec; 4], SectionClass); 5]> = OnceLock::new();
    TABLE.get_or_init(|| SECTION_CLASSES.map(|c| (canonical_section_tuple(c.tuple), c)))
}

/// Classifies a tuple of edge colors `(λ(f1), …, λ(f4))` around the square.
pub fn classify_section_tuple(tuple: [Z2Vec; 4]) -> Result<SectionClass, SectionError> {
    let canonical = canonical_section_tuple(tuple);
    canonical_table()
        .iter()
        .find(|(c, _)| *c == canonical)
        .map(|&(_, class)| class)
        .ok_or(SectionError::UnclassifiableSection(tuple))
}

/// A 4-belt reoriented so that its colors are the image of its class's
/// standard tuple under a basis change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionFrame {
    pub class: SectionClass,
    /// Belt facets `F1..F4` in the reoriented cyclic order.
    pub facets: [FacetId; 4],
    /// Actual colors `λ(F1)..λ(F4)` in that order.
    pub colors: [Z2Vec; 4],
    /// Sends the standard basis `e1, e2, e3` of the class tuple to actual
    /// colors: `basis.apply(class.tuple[i]) == colors[i]`.
    pub basis: LinearMap,
}

impl SectionFrame {
    /// Actual group element corresponding to `g` in the standard basis.
    pub fn to_actual(&self, g: Z2Vec) -> Z2Vec {
        self.basis.apply(g)
    }
}

fn restriction(lambda: &CharacteristicMap, belt: &Belt) -> Result<[FacetId; 4], SectionError> {
    let facets: [FacetId; 4] = belt
        .facets()
        .try_into()
        .map_err(|_| SectionError::NotAFourBelt(belt.len()))?;
    for i in 0..4 {
        let (a, b) = (facets[i], facets[(i + 1) % 4]);
        if lambda.color(a) == lambda.color(b) {
            return Err(SectionError::RepeatedColor(a, b));
        }
    }
    Ok(facets)
}

/// Section class of the coloring induced on a 4-belt.
pub fn classify_belt_section(
    lambda: &CharacteristicMap,
    belt: &Belt,
) -> Result<SectionClass, SectionError> {
    let facets = restriction(lambda, belt)?;
    classify_section_tuple(facets.map(|f| lambda.color(f)))
}

/// Classifies the section and finds a reorientation of the belt plus a basis
/// change carrying the standard tuple onto the actual colors.
pub fn section_frame(lambda: &CharacteristicMap, belt: &Belt) -> Result<SectionFrame, SectionError> {
    let facets = restriction(lambda, belt)?;
    let class = classify_section_tuple(facets.map(|f| lambda.color(f)))?;
    for perm in square_symmetries() {
        let oriented = perm.map(|i| facets[i]);
        let colors = oriented.map(|f| lambda.color(f));
        for m in general_linear_group() {
            if class.tuple.map(|c| m.apply(c)) == colors {
                return Ok(SectionFrame {
                    class,
                    facets: oriented,
                    colors,
                    basis: *m,
                });
            }
        }
    }
    Err(SectionError::UnclassifiableSection(
        facets.map(|f| lambda.color(f)),
    ))
}
