//! Right-angled Coxeter groups: presentations, the word problem and normal
//! forms.
//!
//! Words are reduced by cancellation: a letter cancels against an earlier
//! equal letter when every letter between them commutes with it. Applied
//! left to right this keeps the processed prefix reduced, so one pass
//! suffices. The normal form then orders the reduced word ShortLex-least
//! among its commutation shuffles by repeatedly extracting the smallest
//! letter that can be moved to the front.

mod pi1;
mod section;
mod witness;

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::coloring::Z2Vec;
use crate::polytope::SimplePolytope3;

pub use pi1::{
    diagram_check, diagram_check_at, i_star, j_star, j_star_injectivity_check, pi1_presentation,
    DiagramReport, DiagramDiscrepancy, Generator, InjectivityReport, Pi1Presentation, Relator,
    WpLift,
};
pub use section::{
    gamma_section, psi_generator, section_group, section_pi1_presentation, verify_exact_sequences,
    ExactSequenceReport,
};
pub use witness::{has_z2_subgroup, z2_witness, WitnessBounds, WitnessReport, Z2SubgroupCheck, Z2Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RacgError {
    #[error("generator {index} out of range for {count} generators")]
    BadGenerator { index: usize, count: usize },
    #[error("bad word syntax: {0}")]
    Parse(String),
    #[error("bad presentation: {0}")]
    BadPresentation(String),
    #[error("index {index} out of range (expected < {bound})")]
    BadIndex { index: usize, bound: usize },
    #[error("group element {0} is not in the image of the section coloring")]
    BadElement(Z2Vec),
    #[error("vertex {0} does not exist")]
    BadVertex(usize),
    #[error("expected a 4-belt, got {0}")]
    NotAFourBelt(String),
    #[error("invalid characteristic map: {0}")]
    InvalidColoring(String),
}

type Letters = SmallVec<[usize; 16]>;

/// A word in the generators, stored 0-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Letters,
}

impl GroupWord {
    pub fn new(letters: impl IntoIterator<Item = usize>) -> Self {
        GroupWord {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Inverse of the word: all generators are involutions.
    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    /// The word repeated `n` times; negative `n` repeats the inverse.
    pub fn power(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Letters::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        GroupWord { letters }
    }

    /// Substitutes each letter by `map[letter]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        GroupWord::new(self.letters.iter().map(|&l| map[l]))
    }

    /// Parses whitespace-separated tokens: `k` is the 1-based generator `k`,
    /// `#k` the generator of facet `k` (0-based).
    pub fn parse(text: &str) -> Result<Self, RacgError> {
        let mut letters = Letters::new();
        for token in text.split_whitespace() {
            let letter = if let Some(facet) = token.strip_prefix('#') {
                facet
                    .parse::<usize>()
                    .map_err(|_| RacgError::Parse(format!("bad facet token {token:?}")))?
            } else {
                let k = token
                    .parse::<usize>()
                    .map_err(|_| RacgError::Parse(format!("bad generator token {token:?}")))?;
                k.checked_sub(1)
                    .ok_or_else(|| RacgError::Parse("generators are numbered from 1".into()))?
            };
            letters.push(letter);
        }
        Ok(GroupWord { letters })
    }
}

impl fmt::Display for GroupWord {
    /// 1-based generator indices separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDocument {
    name: String,
    generators: usize,
    /// 1-based commuting pairs.
    commuting: Vec<[usize; 2]>,
}

/// A right-angled Coxeter group: involutive generators, some pairs commuting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RacgPresentation {
    name: String,
    generators: usize,
    commute: Vec<bool>,
}

impl RacgPresentation {
    /// Presentation from 0-based commuting pairs.
    pub fn new(
        name: impl Into<String>,
        generators: usize,
        commuting: &[[usize; 2]],
    ) -> Result<Self, RacgError> {
        let mut commute = vec![false; generators * generators];
        for &[a, b] in commuting {
            if a >= generators || b >= generators {
                return Err(RacgError::BadGenerator {
                    index: a.max(b),
                    count: generators,
                });
            }
            if a == b {
                return Err(RacgError::BadPresentation(format!(
                    "generator {} cannot commute with itself",
                    a + 1
                )));
            }
            commute[a * generators + b] = true;
            commute[b * generators + a] = true;
        }
        Ok(RacgPresentation {
            name: name.into(),
            generators,
            commute,
        })
    }

    /// `W_P`: one generator per facet, adjacent facets commute.
    pub fn from_polytope(p: &SimplePolytope3) -> Self {
        let pairs: Vec<[usize; 2]> = p.edges().iter().map(|e| e.facets).collect();
        RacgPresentation::new(p.name(), p.facet_count(), &pairs).expect("facet pairs are valid")
    }

    /// `W_F`: four generators, consecutive ones around the square commute.
    pub fn square() -> Self {
        RacgPresentation::new("square", 4, &[[0, 1], [1, 2], [2, 3], [3, 0]])
            .expect("square presentation is valid")
    }

    /// Parses `{"name": ..., "generators": n, "commuting": [[a, b], ...]}`
    /// with 1-based generator numbers.
    pub fn parse_json(text: &str) -> Result<Self, RacgError> {
        let doc: PresentationDocument =
            serde_json::from_str(text).map_err(|e| RacgError::BadPresentation(e.to_string()))?;
        let mut pairs = Vec::with_capacity(doc.commuting.len());
        for [a, b] in doc.commuting {
            if a == 0 || b == 0 {
                return Err(RacgError::BadPresentation(
                    "generators are numbered from 1".into(),
                ));
            }
            pairs.push([a - 1, b - 1]);
        }
        RacgPresentation::new(doc.name, doc.generators, &pairs)
    }

    pub fn to_json(&self) -> String {
        let doc = PresentationDocument {
            name: self.name.clone(),
            generators: self.generators,
            commuting: self.commuting_pairs().iter().map(|[a, b]| [a + 1, b + 1]).collect(),
        };
        serde_json::to_string(&doc).expect("presentation serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.commute[a * self.generators + b]
    }

    /// 0-based commuting pairs `a < b`, sorted.
    pub fn commuting_pairs(&self) -> Vec<[usize; 2]> {
        let n = self.generators;
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| [a, b]))
            .filter(|&[a, b]| self.commute(a, b))
            .collect()
    }

    pub fn check(&self, w: &GroupWord) -> Result<(), RacgError> {
        match w.letters().iter().find(|&&l| l >= self.generators) {
            Some(&index) => Err(RacgError::BadGenerator {
                index,
                count: self.generators,
            }),
            None => Ok(()),
        }
    }

    /// Appends a letter to a reduced word, cancelling if possible.
    /// Returns the position of the cancelled letter, if any.
    #[inline]
    fn push_reduced(&self, word: &mut Letters, x: usize) -> Option<usize> {
        let row = &self.commute[x * self.generators..(x + 1) * self.generators];
        for k in (0..word.len()).rev() {
            let y = word[k];
            if y == x {
                word.remove(k);
                return Some(k);
            }
            if !row[y] {
                break;
            }
        }
        word.push(x);
        None
    }

    fn cancel_all(&self, letters: impl IntoIterator<Item = usize>) -> Letters {
        let mut out = Letters::new();
        for x in letters {
            self.push_reduced(&mut out, x);
        }
        out
    }

    /// Sorts a reduced word into its normal form.
    fn sort_reduced(&self, mut word: Letters) -> Letters {
        let mut out = Letters::with_capacity(word.len());
        while !word.is_empty() {
            let mut best: Option<usize> = None;
            for j in 0..word.len() {
                let x = word[j];
                if best.is_some_and(|b| word[b] <= x) {
                    continue;
                }
                if word[..j].iter().all(|&y| self.commute(x, y)) {
                    best = Some(j);
                }
            }
            out.push(word.remove(best.expect("first letter is always movable")));
        }
        out
    }
}

/// Normal form: a geodesic, lexicographically least among the words obtained
/// from it by swapping commuting neighbours. Idempotent.
pub fn reduce(w_group: &RacgPresentation, w: &GroupWord) -> Result<GroupWord, RacgError> {
    w_group.check(w)?;
    let reduced = w_group.cancel_all(w.letters().iter().copied());
    Ok(GroupWord {
        letters: w_group.sort_reduced(reduced),
    })
}

/// Whether two words represent the same element.
pub fn equal(w_group: &RacgPresentation, w1: &GroupWord, w2: &GroupWord) -> Result<bool, RacgError> {
    w_group.check(w1)?;
    w_group.check(w2)?;
    // Letter parities are invariant: every relator has even length in each
    // generator.
    if w_group.generators <= 64 {
        let parity = |w: &GroupWord| w.letters().iter().fold(0u64, |m, &l| m ^ (1 << l));
        if parity(w1) != parity(w2) {
            return Ok(false);
        }
    }
    let letters = w1.letters().iter().chain(w2.letters().iter().rev()).copied();
    Ok(w_group.cancel_all(letters).is_empty())
}

/// Word length of the element a word represents.
pub fn length(w_group: &RacgPresentation, w: &GroupWord) -> Result<usize, RacgError> {
    w_group.check(w)?;
    Ok(w_group.cancel_all(w.letters().iter().copied()).len())
}

/// Incremental cancellation with undo, for walking a tree of words.
///
/// After pushing letters `x1..xn` the state is the reduced form of
/// `x1⋯xn`, as computed by [`equal`]; `pop` restores the previous state.
pub struct Reducer<'a> {
    w_group: &'a RacgPresentation,
    word: Letters,
    undo: Vec<Option<(usize, usize)>>,
}

impl<'a> Reducer<'a> {
    pub fn new(w_group: &'a RacgPresentation) -> Self {
        Reducer {
            w_group,
            word: Letters::new(),
            undo: Vec::new(),
        }
    }

    pub fn push(&mut self, x: usize) {
        assert!(x < self.w_group.generator_count(), "generator out of range");
        let cancelled = self.w_group.push_reduced(&mut self.word, x);
        self.undo.push(cancelled.map(|k| (k, x)));
    }

    pub fn pop(&mut self) {
        match self.undo.pop().expect("pop without push") {
            Some((k, x)) => self.word.insert(k, x),
            None => {
                self.word.pop();
            }
        }
    }

    /// Whether the pushed letters multiply to the identity.
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn reduced_len(&self) -> usize {
        self.word.len()
    }
}

/// `φ(w)`: the product of the colors of the letters.
pub fn phi(colors: &[Z2Vec], w: &GroupWord) -> Result<Z2Vec, RacgError> {
    w.letters().iter().try_fold(Z2Vec::IDENTITY, |acc, &l| {
        colors
            .get(l)
            .map(|&c| acc ^ c)
            .ok_or(RacgError::BadGenerator {
                index: l,
                count: colors.len(),
            })
    })
}
