//! Loop group presentations, the lift `ψ: π₁(M) → W_P`, and the square of
//! maps comparing a section with the whole small cover.
//!
//! `ψ` follows the same pattern as the section lift: with the base vertex
//! `v = F0 ∩ F1 ∩ F2` and `γ(g) = t_{F0}^a t_{F1}^b t_{F2}^c` for
//! `g = λ(F0)^a λ(F1)^b λ(F2)^c`, it sends `α_{F,g}` to
//! `γ(g)·t_F·γ(g·λ(F))⁻¹`. Whether this respects every relator is checked,
//! not assumed.

use std::collections::HashSet;

use super::section::{psi_generator, section_group};
use super::{equal, phi, reduce, GroupWord, RacgError, RacgPresentation};
use crate::coloring::{validate_coloring, CharacteristicMap, LinearMap, SectionFrame, Z2Vec};
use crate::polytope::{FacetId, SimplePolytope3, VertexId};

/// A loop generator `(facet or edge index, group element)`.
pub type Generator = (usize, Z2Vec);

/// `lhs = rhs`, both products of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    /// 1: `x_{F,g} x_{F,g·λ(F)} = 1`; 2: the commutation family over
    /// intersecting pairs; 3: generators killed at the base point.
    pub family: u8,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Presentation {
    pub generators: Vec<Generator>,
    pub relators: Vec<Relator>,
    pub base_vertex: Option<VertexId>,
}

impl Pi1Presentation {
    /// Generators set to 1 by the third family.
    pub fn killed(&self) -> Vec<Generator> {
        self.relators
            .iter()
            .filter(|r| r.family == 3)
            .map(|r| r.lhs[0])
            .collect()
    }
}

fn check_coloring(p: &SimplePolytope3, lambda: &CharacteristicMap) -> Result<(), RacgError> {
    match validate_coloring(p, lambda) {
        Ok(None) => Ok(()),
        Ok(Some(v)) => Err(RacgError::InvalidColoring(format!(
            "dependent colors at vertex F{}∩F{}∩F{}",
            v.facets[0], v.facets[1], v.facets[2]
        ))),
        Err(e) => Err(RacgError::InvalidColoring(e.to_string())),
    }
}

/// Presentation of `π₁(M, v)` with generators `α_{F,g}` for every facet and
/// every `g ∈ Z₂³`.
pub fn pi1_presentation(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
    v: VertexId,
) -> Result<Pi1Presentation, RacgError> {
    if v >= p.vertex_count() {
        return Err(RacgError::BadVertex(v));
    }
    check_coloring(p, lambda)?;
    let group: Vec<Z2Vec> = Z2Vec::all().collect();
    let generators: Vec<Generator> = (0..p.facet_count())
        .flat_map(|f| group.iter().map(move |&g| (f, g)))
        .collect();
    let mut relators = Vec::new();
    for &(f, g) in &generators {
        relators.push(Relator {
            family: 1,
            lhs: vec![(f, g), (f, g ^ lambda.color(f))],
            rhs: Vec::new(),
        });
    }
    for f in 0..p.facet_count() {
        for &h in p.neighbors(f) {
            for &g in &group {
                relators.push(Relator {
                    family: 2,
                    lhs: vec![(f, g), (h, g ^ lambda.color(f))],
                    rhs: vec![(h, g), (f, g ^ lambda.color(h))],
                });
            }
        }
    }
    for f in p.vertex_facets(v) {
        for &g in &group {
            relators.push(Relator {
                family: 3,
                lhs: vec![(f, g)],
                rhs: Vec::new(),
            });
        }
    }
    Ok(Pi1Presentation {
        generators,
        relators,
        base_vertex: Some(v),
    })
}

/// The lift `ψ: π₁(M, v) → W_P`.
#[derive(Debug, Clone)]
pub struct WpLift {
    w_p: RacgPresentation,
    colors: Vec<Z2Vec>,
    base_vertex: VertexId,
    base_facets: [FacetId; 3],
    /// Coordinates with respect to the colors of the base facets.
    coordinates: LinearMap,
}

impl WpLift {
    pub fn new(
        p: &SimplePolytope3,
        lambda: &CharacteristicMap,
        v: VertexId,
    ) -> Result<Self, RacgError> {
        if v >= p.vertex_count() {
            return Err(RacgError::BadVertex(v));
        }
        check_coloring(p, lambda)?;
        let base_facets = p.vertex_facets(v);
        let coordinates = LinearMap(base_facets.map(|f| lambda.color(f)))
            .inverse()
            .expect("colors at a vertex are independent");
        Ok(WpLift {
            w_p: RacgPresentation::from_polytope(p),
            colors: lambda.colors().to_vec(),
            base_vertex: v,
            base_facets,
            coordinates,
        })
    }

    pub fn presentation(&self) -> &RacgPresentation {
        &self.w_p
    }

    pub fn base_vertex(&self) -> VertexId {
        self.base_vertex
    }

    pub fn base_facets(&self) -> [FacetId; 3] {
        self.base_facets
    }

    /// `γ(g)`, a product of commuting base facet generators.
    pub fn gamma(&self, g: Z2Vec) -> GroupWord {
        let c = self.coordinates.apply(g).coords();
        GroupWord::new((0..3).filter(|&k| c[k] == 1).map(|k| self.base_facets[k]))
    }

    /// `ψ(α_{F,g})` in normal form.
    pub fn psi(&self, (f, g): Generator) -> GroupWord {
        let word = self
            .gamma(g)
            .concat(&GroupWord::new([f]))
            .concat(&self.gamma(g ^ self.colors[f]).inverse());
        reduce(&self.w_p, &word).expect("facet letters")
    }

    pub fn psi_word(&self, word: &[Generator]) -> GroupWord {
        let letters: GroupWord = word
            .iter()
            .fold(GroupWord::empty(), |acc, &x| acc.concat(&self.psi(x)));
        reduce(&self.w_p, &letters).expect("facet letters")
    }

    /// Relators of `presentation` whose two sides have different images.
    pub fn relator_failures(&self, presentation: &Pi1Presentation) -> Vec<Relator> {
        presentation
            .relators
            .iter()
            .filter(|r| {
                !equal(&self.w_p, &self.psi_word(&r.lhs), &self.psi_word(&r.rhs)).expect("facet letters")
            })
            .cloned()
            .collect()
    }

    /// Whether every lift lies in the kernel of `φ`.
    pub fn lands_in_kernel(&self, presentation: &Pi1Presentation) -> bool {
        presentation
            .generators
            .iter()
            .all(|&x| phi(&self.colors, &self.psi(x)).expect("facet letters").is_identity())
    }
}

fn check_edge_index(i: usize) -> Result<(), RacgError> {
    if i >= 4 {
        return Err(RacgError::BadIndex { index: i, bound: 4 });
    }
    Ok(())
}

/// `i_*(β_{i,g})` as a product of generators `α_{F,h}`; `i` is 0-based and
/// `g` is in the standard basis of the frame's class.
///
/// Rank 2: `β_{i,g} ↦ α_{Fᵢ,g}`. Rank 3: the same for `i ≠ 3`, and
/// `β_{3,g} ↦ α_{F3,g·λ(F3)λ(F1)}·α_{F3,g}`.
pub fn i_star(frame: &SectionFrame, i: usize, g: Z2Vec) -> Result<Vec<Generator>, RacgError> {
    check_edge_index(i)?;
    if !frame.class.image().contains(g) {
        return Err(RacgError::BadElement(g));
    }
    let actual = frame.to_actual(g);
    Ok(if frame.class.is_full_rank() && i == 2 {
        let shifted = actual ^ frame.colors[2] ^ frame.colors[0];
        vec![(frame.facets[2], shifted), (frame.facets[2], actual)]
    } else {
        vec![(frame.facets[i], actual)]
    })
}

/// `j_*: W_F → W_P`, `sᵢ ↦ t_{Fᵢ}` for belt facets `F1..F4`.
pub fn j_star(belt_facets: &[FacetId], w: &GroupWord) -> Result<GroupWord, RacgError> {
    if belt_facets.len() != 4 {
        return Err(RacgError::NotAFourBelt(format!("{belt_facets:?}")));
    }
    RacgPresentation::square().check(w)?;
    Ok(w.relabel(belt_facets))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDiscrepancy {
    /// 0-based edge index.
    pub i: usize,
    /// In the standard basis of the class.
    pub g: Z2Vec,
    /// `j_*(ψ_F(β_{i,g}))` in normal form.
    pub via_section: GroupWord,
    /// `ψ(i_*(β_{i,g}))` in normal form.
    pub via_manifold: GroupWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub base_vertex: VertexId,
    pub checked: usize,
    pub discrepancies: Vec<DiagramDiscrepancy>,
}

impl DiagramReport {
    pub fn commutes(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares `j_*∘ψ_F` with `ψ∘i_*` on every generator `β_{i,g}`, with `ψ`
/// based at `v`.
pub fn diagram_check_at(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
    frame: &SectionFrame,
    v: VertexId,
) -> Result<DiagramReport, RacgError> {
    let lift = WpLift::new(p, lambda, v)?;
    let mut checked = 0;
    let mut discrepancies = Vec::new();
    for g in section_group(&frame.class) {
        for i in 0..4 {
            let via_section = reduce(
                lift.presentation(),
                &j_star(&frame.facets, &psi_generator(&frame.class, i, g)?)?,
            )?;
            let via_manifold = lift.psi_word(&i_star(frame, i, g)?);
            checked += 1;
            if !equal(lift.presentation(), &via_section, &via_manifold)? {
                discrepancies.push(DiagramDiscrepancy {
                    i,
                    g,
                    via_section,
                    via_manifold,
                });
            }
        }
    }
    Ok(DiagramReport {
        base_vertex: v,
        checked,
        discrepancies,
    })
}

/// [`diagram_check_at`] with `v` the first endpoint of the edge `F1 ∩ F2`,
/// which corresponds to the section's base point `p0 = f1 ∩ f2`.
pub fn diagram_check(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
    frame: &SectionFrame,
) -> Result<DiagramReport, RacgError> {
    let edge = p
        .shared_edge(frame.facets[0], frame.facets[1])
        .ok_or_else(|| RacgError::NotAFourBelt(format!("{:?}", frame.facets)))?;
    diagram_check_at(p, lambda, frame, p.edge(edge).vertices[0])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    /// Nonempty kernel normal forms examined.
    pub checked: usize,
    /// Kernel normal forms sent to the identity of `W_P`.
    pub failures: Vec<GroupWord>,
}

/// Sends every nonempty normal form of `ker φ_F` up to `max_len` letters
/// through `j_*` and checks that none becomes trivial in `W_P`.
pub fn j_star_injectivity_check(
    p: &SimplePolytope3,
    belt_facets: &[FacetId],
    section_colors: [Z2Vec; 4],
    max_len: usize,
) -> Result<InjectivityReport, RacgError> {
    let square = RacgPresentation::square();
    let w_p = RacgPresentation::from_polytope(p);
    let mut seen: HashSet<GroupWord> = HashSet::from([GroupWord::empty()]);
    let mut frontier = vec![GroupWord::empty()];
    let mut checked = 0;
    let mut failures = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..4 {
                let candidate = reduce(&square, &w.concat(&GroupWord::new([x])))?;
                if candidate.len() == w.len() + 1 && seen.insert(candidate.clone()) {
                    next.push(candidate);
                }
            }
        }
        for w in &next {
            if phi(&section_colors, w)?.is_identity() {
                checked += 1;
                let image = reduce(&w_p, &j_star(belt_facets, w)?)?;
                if image.is_empty() {
                    failures.push(w.clone());
                }
            }
        }
        frontier = next;
    }
    Ok(InjectivityReport { checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::belts::find_belts;
    use crate::coloring::{section_frame, SECTION_CLASSES};
    use crate::polytope::builtin;

    const E1: Z2Vec = Z2Vec::E1;
    const E2: Z2Vec = Z2Vec::E2;
    const E3: Z2Vec = Z2Vec::E3;

    #[test]
    fn presentation_counts() {
        let p = builtin("simplex", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E2, E3, E1 ^ E2 ^ E3]);
        let pres = pi1_presentation(&p, &lambda, 0).unwrap();
        assert_eq!(pres.generators.len(), 32);
        assert_eq!(pres.killed().len(), 24);
        assert_eq!(pi1_presentation(&p, &lambda, 4), Err(RacgError::BadVertex(4)));

        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        assert_eq!(pi1_presentation(&cube, &lambda, 0).unwrap().generators.len(), 48);
    }

    #[test]
    fn lift_is_a_homomorphism_into_the_kernel() {
        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        for v in 0..cube.vertex_count() {
            let pres = pi1_presentation(&cube, &lambda, v).unwrap();
            let lift = WpLift::new(&cube, &lambda, v).unwrap();
            assert!(lift.relator_failures(&pres).is_empty());
            assert!(lift.lands_in_kernel(&pres));
        }
    }

    #[test]
    fn i_star_shapes() {
        let cube = builtin("cube", None).unwrap();
        let belt = find_belts(&cube, 4).unwrap().remove(0);
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        let frame = section_frame(&lambda, &belt).unwrap();
        assert_eq!(frame.class, SECTION_CLASSES[0]);
        assert_eq!(
            i_star(&frame, 1, E1).unwrap(),
            vec![(frame.facets[1], frame.to_actual(E1))]
        );
        assert!(matches!(i_star(&frame, 1, E3), Err(RacgError::BadElement(_))));
        assert!(matches!(i_star(&frame, 4, E1), Err(RacgError::BadIndex { .. })));
    }

    #[test]
    fn j_star_examples() {
        let cube = builtin("cube", None).unwrap();
        let belt = find_belts(&cube, 4).unwrap().remove(0);
        let w_p = RacgPresentation::from_polytope(&cube);
        assert_eq!(j_star(belt.facets(), &GroupWord::empty()).unwrap(), GroupWord::empty());
        let x = GroupWord::new([0, 2]);
        for n in 1..=4 {
            let image = reduce(&w_p, &j_star(belt.facets(), &x.power(n)).unwrap()).unwrap();
            assert_eq!(image.len(), 2 * n as usize);
        }
    }

    #[test]
    fn case_one_diagram_commutes_on_cube() {
        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        for belt in find_belts(&cube, 4).unwrap() {
            let frame = section_frame(&lambda, &belt).unwrap();
            assert!(!frame.class.is_full_rank());
            let report = diagram_check(&cube, &lambda, &frame).unwrap();
            assert_eq!(report.checked, 16);
            assert!(report.commutes(), "{report:?}");
        }
    }

    #[test]
    fn kernel_survives_j_star() {
        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        let belt = find_belts(&cube, 4).unwrap().remove(0);
        let colors = [0, 1, 2, 3].map(|i| lambda.color(belt.facets()[i]));
        let report = j_star_injectivity_check(&cube, belt.facets(), colors, 8).unwrap();
        assert!(report.checked > 0);
        assert!(report.failures.is_empty());
    }
}
