//! The split exact sequence `1 → π₁(M_F) → W_F → Im λ_F → 1` over a square
//! section, in the standard basis of its class.
//!
//! `γ_F` sends `e1 ↦ s1`, `e2 ↦ s2` and, for classes of rank 3,
//! `e3 ↦ s1s3s1`; a general element `e3^c e1^a e2^b` goes to
//! `γ(e3)^c γ(e1)^a γ(e2)^b`. The lift of a loop generator is
//! `S_{i,g} = γ(g)·sᵢ·γ(g·λ_F(fᵢ))⁻¹`. With this convention every relator of
//! the loop group presentation, including the killed generators
//! `β_{3,g}, g ∈ {e1, e1e2, e1e3, e1e2e3}` of the rank-3 classes, maps to the
//! identity.

use super::pi1::{Generator, Pi1Presentation, Relator};
use super::{equal, phi, reduce, GroupWord, RacgError, RacgPresentation};
use crate::coloring::{SectionClass, Z2Vec};

/// Elements indexing the loop generators: the subgroup generated by the
/// class colors (`⟨e1, e2⟩` or all of Z₂³).
pub fn section_group(class: &SectionClass) -> Vec<Z2Vec> {
    class.image().elements()
}

/// `γ_F(g)` in normal form.
pub fn gamma_section(class: &SectionClass, g: Z2Vec) -> Result<GroupWord, RacgError> {
    if !class.image().contains(g) {
        return Err(RacgError::BadElement(g));
    }
    let [a, b, c] = g.coords();
    let mut letters = Vec::new();
    if c == 1 {
        letters.extend([0, 2, 0]);
    }
    if a == 1 {
        letters.push(0);
    }
    if b == 1 {
        letters.push(1);
    }
    reduce(&RacgPresentation::square(), &GroupWord::new(letters))
}

/// `S_{i,g} = γ(g)·sᵢ·γ(g·λ_F(fᵢ))⁻¹` in normal form, with `i` 0-based.
pub fn psi_generator(class: &SectionClass, i: usize, g: Z2Vec) -> Result<GroupWord, RacgError> {
    if i >= 4 {
        return Err(RacgError::BadIndex { index: i, bound: 4 });
    }
    let before = gamma_section(class, g)?;
    let after = gamma_section(class, g ^ class.tuple[i])?;
    let word = before.concat(&GroupWord::new([i])).concat(&after.inverse());
    reduce(&RacgPresentation::square(), &word)
}

/// Generators whose loops are contracted at the base point: `β_{1,g}`,
/// `β_{2,g}` for all `g` and, in rank 3, `β_{3,g}` for `g` with an `e1`
/// component.
fn killed(class: &SectionClass, i: usize, g: Z2Vec) -> bool {
    i < 2 || (class.is_full_rank() && i == 2 && g.coords()[0] == 1)
}

/// Presentation of `π₁(M_F)` with generators `β_{i,g}` (`i` 0-based).
pub fn section_pi1_presentation(class: &SectionClass) -> Pi1Presentation {
    let group = section_group(class);
    let lambda = class.tuple;
    let generators: Vec<Generator> = (0..4)
        .flat_map(|i| group.iter().map(move |&g| (i, g)))
        .collect();
    let mut relators = Vec::new();
    for (i, &c) in lambda.iter().enumerate() {
        for &g in &group {
            relators.push(Relator {
                family: 1,
                lhs: vec![(i, g), (i, g ^ c)],
                rhs: Vec::new(),
            });
        }
    }
    for i in 0..4 {
        for j in [(i + 1) % 4, (i + 3) % 4] {
            for &g in &group {
                relators.push(Relator {
                    family: 2,
                    lhs: vec![(i, g), (j, g ^ lambda[i])],
                    rhs: vec![(j, g), (i, g ^ lambda[j])],
                });
            }
        }
    }
    for &(i, g) in &generators {
        if killed(class, i, g) {
            relators.push(Relator {
                family: 3,
                lhs: vec![(i, g)],
                rhs: Vec::new(),
            });
        }
    }
    Pi1Presentation {
        generators,
        relators,
        base_vertex: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub class: SectionClass,
    /// Elements `g` with `φ_F(γ_F(g)) ≠ g`.
    pub splitting_failures: Vec<Z2Vec>,
    /// Generators whose lift is not in the kernel of `φ_F`.
    pub kernel_failures: Vec<Generator>,
    /// Relators whose two sides lift to different elements, with the
    /// normal form of `lhs·rhs⁻¹`.
    pub relator_failures: Vec<(Relator, GroupWord)>,
    pub relators_checked: usize,
}

impl ExactSequenceReport {
    pub fn passed(&self) -> bool {
        self.splitting_failures.is_empty()
            && self.kernel_failures.is_empty()
            && self.relator_failures.is_empty()
    }
}

fn lift(class: &SectionClass, word: &[Generator]) -> GroupWord {
    word.iter().fold(GroupWord::empty(), |acc, &(i, g)| {
        acc.concat(&psi_generator(class, i, g).expect("generator of the presentation"))
    })
}

/// Checks splitting, that lifts land in the kernel, and that every relator
/// lifts to the identity.
pub fn verify_exact_sequences(class: &SectionClass) -> ExactSequenceReport {
    let square = RacgPresentation::square();
    let colors = class.tuple;
    let group = section_group(class);
    let splitting_failures = group
        .iter()
        .copied()
        .filter(|&g| {
            let word = gamma_section(class, g).expect("g in group");
            phi(&colors, &word).expect("square letters") != g
        })
        .collect();
    let presentation = section_pi1_presentation(class);
    let kernel_failures = presentation
        .generators
        .iter()
        .copied()
        .filter(|&(i, g)| {
            let s = psi_generator(class, i, g).expect("generator of the presentation");
            !phi(&colors, &s).expect("square letters").is_identity()
        })
        .collect();
    let mut relator_failures = Vec::new();
    for relator in &presentation.relators {
        let lhs = lift(class, &relator.lhs);
        let rhs = lift(class, &relator.rhs);
        if !equal(&square, &lhs, &rhs).expect("square letters") {
            let residue = reduce(&square, &lhs.concat(&rhs.inverse())).expect("square letters");
            relator_failures.push((relator.clone(), residue));
        }
    }
    ExactSequenceReport {
        class: *class,
        splitting_failures,
        kernel_failures,
        relator_failures,
        relators_checked: presentation.relators.len(),
    }
}
