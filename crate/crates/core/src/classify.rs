//! End-to-end classification of a polytope and its small covers.
//!
//! Coloring-independent verdicts:
//! - `atoroidal`: no 4-belt;
//! - `aspherical`: the polytope is flag (not claimed for the tetrahedron);
//! - `hyperbolic_realizable`: not the tetrahedron, and no prismatic 3- or
//!   4-circuit.
//!
//! The report's top-level keys are `polytope`, `circuits`, `belts`,
//! `verdicts` and `colorings`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::belts::{
    belt_to_circuit, circuit_to_belt, find_belts, find_prismatic_circuits, flag_report,
    proposition_p1_check, Belt, BeltError, PrismaticCircuit,
};
use crate::coloring::{
    orientation_functional, section_frame, validate_coloring, CharacteristicMap, ColoringError,
    SectionError, Z2Vec,
};
use crate::complex::{
    build_manifold_complex, build_section_surface, complex_orientable, surface_report, ComplexError,
};
use crate::polytope::{FacetId, SimplePolytope3};
use crate::racg::{has_z2_subgroup, z2_witness, RacgError, WitnessBounds};

pub const SIMPLEX_EXCLUDED: &str = "excluded: P=Δ³";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("invalid characteristic map: dependent colors at vertex F{}∩F{}∩F{}", .0[0], .0[1], .0[2])]
    InvalidColoring([FacetId; 3]),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Racg(#[from] RacgError),
    #[error(transparent)]
    Belt(#[from] BeltError),
    #[error("report invariant violated: {0}")]
    Invariant(String),
}

impl ClassifyError {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            ClassifyError::Section(SectionError::UnclassifiableSection(_))
                | ClassifyError::Invariant(_)
        )
    }
}

/// A boolean verdict, or a marker that the supporting statement excludes
/// this polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Verdict {
    Value(bool),
    Excluded(String),
}

impl Verdict {
    pub fn value(&self) -> Option<bool> {
        match self {
            Verdict::Value(b) => Some(*b),
            Verdict::Excluded(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeSummary {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub facets: usize,
    pub is_simplex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitEntry {
    pub facets: Vec<FacetId>,
    /// Crossed edges as facet pairs.
    pub edges: Vec<[FacetId; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitList {
    pub count: usize,
    pub list: Vec<CircuitEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitSection {
    pub prismatic_3: CircuitList,
    pub prismatic_4: CircuitList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeltList {
    pub count: usize,
    pub list: Vec<Vec<FacetId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeltSection {
    pub belts_4: BeltList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub flag: bool,
    pub aspherical: Verdict,
    pub atoroidal: bool,
    pub hyperbolic_realizable: bool,
    /// A 4-belt gives Z² in `W_P`, cross-checked by an induced 4-cycle search.
    pub z2_subgroup: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceComponentEntry {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionEntry {
    pub belt: Vec<FacetId>,
    pub case: u8,
    pub tuple: String,
    /// Surface type predicted from the section class.
    pub predicted: String,
    /// Components of the glued surface.
    pub surface: Vec<SurfaceComponentEntry>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringBlock {
    pub colors: Vec<Z2Vec>,
    pub orientable: bool,
    /// Orientability found by propagation on the glued 3-complex.
    pub complex_orientable: bool,
    pub euler_characteristic: i64,
    pub sections: Vec<SectionEntry>,
    /// Whether every 4-belt's Z² witness checks out; `null` without belts.
    pub z2_witness_verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReport {
    pub polytope: PolytopeSummary,
    pub circuits: CircuitSection,
    pub belts: BeltSection,
    pub verdicts: Verdicts,
    pub colorings: Vec<ColoringBlock>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The consistency conditions between fields.
    pub fn check_invariants(&self) -> Result<(), ClassifyError> {
        let v = &self.verdicts;
        let fail = |msg: &str| Err(ClassifyError::Invariant(msg.to_string()));
        if v.atoroidal != (self.belts.belts_4.count == 0) {
            return fail("atoroidal must equal absence of 4-belts");
        }
        match (&v.aspherical, self.polytope.is_simplex) {
            (Verdict::Excluded(_), true) => {}
            (Verdict::Value(a), false) if *a == v.flag => {}
            _ => return fail("aspherical must equal flag, or be excluded for the tetrahedron"),
        }
        let andreev = !self.polytope.is_simplex
            && self.circuits.prismatic_3.count == 0
            && self.circuits.prismatic_4.count == 0;
        if v.hyperbolic_realizable != andreev {
            return fail("hyperbolic_realizable must follow the prismatic circuit criterion");
        }
        if v.hyperbolic_realizable && !(v.atoroidal && v.aspherical == Verdict::Value(true)) {
            return fail("a realizable polytope must give atoroidal aspherical covers");
        }
        if v.z2_subgroup == v.atoroidal {
            return fail("Z² in W_P must coincide with existence of a 4-belt");
        }
        for block in &self.colorings {
            if block.orientable != block.complex_orientable {
                return fail("orientability oracles disagree");
            }
            if block.euler_characteristic != 0 {
                return fail("a closed 3-manifold has Euler characteristic 0");
            }
            if block.sections.iter().any(|s| !s.verified) {
                return fail("section surface differs from its class prediction");
            }
        }
        Ok(())
    }
}

fn circuit_list(p: &SimplePolytope3, circuits: &[PrismaticCircuit]) -> CircuitList {
    CircuitList {
        count: circuits.len(),
        list: circuits
            .iter()
            .map(|c| CircuitEntry {
                facets: c.facets().to_vec(),
                edges: c.edges().iter().map(|&e| p.edge(e).facets).collect(),
            })
            .collect(),
    }
}

fn coloring_block(
    p: &SimplePolytope3,
    lambda: &CharacteristicMap,
    belts: &[Belt],
    bounds: WitnessBounds,
) -> Result<ColoringBlock, ClassifyError> {
    if let Some(v) = validate_coloring(p, lambda)? {
        return Err(ClassifyError::InvalidColoring(v.facets));
    }
    let manifold = build_manifold_complex(p, lambda)?;
    let mut sections = Vec::with_capacity(belts.len());
    for belt in belts {
        let frame = section_frame(lambda, belt)?;
        let report = surface_report(&build_section_surface(belt, lambda)?)?;
        sections.push(SectionEntry {
            belt: belt.facets().to_vec(),
            case: frame.class.case,
            tuple: frame.class.tuple_string(),
            predicted: frame.class.surface.to_string(),
            surface: report
                .components
                .iter()
                .map(|c| SurfaceComponentEntry {
                    euler_characteristic: c.euler_characteristic,
                    orientable: c.orientable,
                    name: c.name.to_string(),
                })
                .collect(),
            verified: report.kind() == Some(frame.class.surface),
        });
    }
    let z2_witness_verified = if belts.is_empty() {
        None
    } else {
        let mut all = true;
        for belt in belts {
            all &= z2_witness(p, belt, bounds)?.report.verified();
        }
        Some(all)
    };
    Ok(ColoringBlock {
        colors: lambda.colors().to_vec(),
        orientable: orientation_functional(lambda).is_some(),
        complex_orientable: complex_orientable(&manifold)?,
        euler_characteristic: manifold.euler_characteristic(),
        sections,
        z2_witness_verified,
    })
}

/// Classifies a polytope and, for each given characteristic map, its small
/// cover. Report invariants are checked before returning.
pub fn classify(
    p: &SimplePolytope3,
    colorings: &[CharacteristicMap],
    bounds: WitnessBounds,
) -> Result<ClassificationReport, ClassifyError> {
    let p3 = find_prismatic_circuits(p, 3)?;
    let p4 = find_prismatic_circuits(p, 4)?;
    let belts = find_belts(p, 4)?;
    let flag = flag_report(p).flag;
    let is_simplex = p.is_simplex();
    let z2 = has_z2_subgroup(p, bounds);
    if !z2.agree {
        return Err(ClassifyError::Invariant(
            "belt search and induced 4-cycle search disagree".into(),
        ));
    }
    let verdicts = Verdicts {
        flag,
        aspherical: if is_simplex {
            Verdict::Excluded(SIMPLEX_EXCLUDED.to_string())
        } else {
            Verdict::Value(flag)
        },
        atoroidal: belts.is_empty(),
        hyperbolic_realizable: !is_simplex && p3.is_empty() && p4.is_empty(),
        z2_subgroup: z2.present,
    };
    let colorings = colorings
        .iter()
        .map(|lambda| coloring_block(p, lambda, &belts, bounds))
        .collect::<Result<Vec<_>, _>>()?;
    let report = ClassificationReport {
        polytope: PolytopeSummary {
            name: p.name().to_string(),
            vertices: p.vertex_count(),
            edges: p.edge_count(),
            facets: p.facet_count(),
            is_simplex,
        },
        circuits: CircuitSection {
            prismatic_3: circuit_list(p, &p3),
            prismatic_4: circuit_list(p, &p4),
        },
        belts: BeltSection {
            belts_4: BeltList {
                count: belts.len(),
                list: belts.iter().map(|b| b.facets().to_vec()).collect(),
            },
        },
        verdicts,
        colorings,
    };
    report.check_invariants()?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionResult {
    /// `a` through `d`.
    pub id: char,
    pub name: String,
    pub result: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub polytope: String,
    pub assertions: Vec<AssertionResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<(&str, &AssertionResult)> {
        self.entries
            .iter()
            .flat_map(|e| e.assertions.iter().map(move |a| (e.polytope.as_str(), a)))
            .filter(|(_, a)| matches!(a.result, Outcome::Fail(_)))
            .collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().is_empty()
    }
}

fn assertion(id: char, name: &str, result: Outcome) -> AssertionResult {
    AssertionResult {
        id,
        name: name.to_string(),
        result,
    }
}

fn suite_entry(p: &SimplePolytope3, bounds: WitnessBounds) -> SuiteEntry {
    let belts = find_belts(p, 4).expect("k = 4 is supported");
    let p3 = find_prismatic_circuits(p, 3).expect("k = 3 is supported");
    let p4 = find_prismatic_circuits(p, 4).expect("k = 4 is supported");

    let a = if belts.is_empty() {
        Outcome::Pass("no 4-belts".into())
    } else {
        let failing: Vec<Vec<FacetId>> = belts
            .iter()
            .filter(|b| !z2_witness(p, b, bounds).is_ok_and(|w| w.report.verified()))
            .map(|b| b.facets().to_vec())
            .collect();
        if failing.is_empty() {
            Outcome::Pass(format!("{} belts, all witnesses verified", belts.len()))
        } else {
            Outcome::Fail(format!("witness failed for belts {failing:?}"))
        }
    };

    let z2 = has_z2_subgroup(p, bounds);
    let b = if z2.agree {
        Outcome::Pass(format!("both searches report {}", z2.present))
    } else {
        Outcome::Fail(format!(
            "belts present: {}, induced 4-cycle: {:?}",
            z2.present, z2.induced_four_cycle
        ))
    };

    let c = if !p3.is_empty() {
        Outcome::Skipped(format!("{} prismatic 3-circuits", p3.len()))
    } else {
        let from_circuits: Option<Vec<Belt>> = p4.iter().map(|c| circuit_to_belt(p, c)).collect();
        let back_to_circuits = belts.iter().all(|b| belt_to_circuit(p, b).is_some());
        match from_circuits {
            Some(mut found) if back_to_circuits => {
                found.sort();
                if found == belts {
                    Outcome::Pass(format!("{} circuits, {} belts", p4.len(), belts.len()))
                } else {
                    Outcome::Fail("prismatic 4-circuits and 4-belts differ".into())
                }
            }
            _ => Outcome::Fail("a prismatic 4-circuit without a 4-belt or vice versa".into()),
        }
    };

    let d = match proposition_p1_check(p) {
        Err(BeltError::SimplexExcluded) => Outcome::Skipped(SIMPLEX_EXCLUDED.into()),
        Err(e) => Outcome::Fail(e.to_string()),
        Ok(check) if check.agree => Outcome::Pass(format!("flag = {}", check.flag)),
        Ok(check) => Outcome::Fail(format!(
            "flag = {}, no prismatic 3-circuit = {}",
            check.flag, check.no_prismatic_3
        )),
    };

    SuiteEntry {
        polytope: p.name().to_string(),
        assertions: vec![
            assertion('a', "4-belt gives a verified Z² witness", a),
            assertion('b', "induced 4-cycle search agrees with belt search", b),
            assertion('c', "prismatic 4-circuits are 4-belts without prismatic 3-circuits", c),
            assertion('d', "flag iff no prismatic 3-circuit", d),
        ],
    }
}

/// Checks the belt theorems on every polytope of a corpus.
pub fn run_theorem_suite(corpus: &[SimplePolytope3], bounds: WitnessBounds) -> SuiteReport {
    SuiteReport {
        entries: corpus.iter().map(|p| suite_entry(p, bounds)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{builtin, default_corpus};

    const E1: Z2Vec = Z2Vec::E1;
    const E2: Z2Vec = Z2Vec::E2;
    const E3: Z2Vec = Z2Vec::E3;

    #[test]
    fn cube_with_opposite_pair_coloring() {
        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        let r = classify(&cube, &[lambda], WitnessBounds::default()).unwrap();
        assert!(!r.verdicts.atoroidal);
        assert!(r.verdicts.flag);
        assert_eq!(r.verdicts.aspherical, Verdict::Value(true));
        assert!(!r.verdicts.hyperbolic_realizable);
        let block = &r.colorings[0];
        assert!(block.orientable);
        assert_eq!(block.sections.len(), 3);
        assert!(block.sections.iter().all(|s| s.verified));
        assert_eq!(block.z2_witness_verified, Some(true));
    }

    #[test]
    fn dodecahedron_is_realizable() {
        let p = builtin("dodecahedron", None).unwrap();
        let r = classify(&p, &[], WitnessBounds::default()).unwrap();
        assert!(r.verdicts.atoroidal && r.verdicts.flag && r.verdicts.hyperbolic_realizable);
        assert_eq!(r.verdicts.aspherical, Verdict::Value(true));
    }

    #[test]
    fn simplex_excluded() {
        let p = builtin("simplex", None).unwrap();
        let r = classify(&p, &[], WitnessBounds::default()).unwrap();
        assert!(r.verdicts.atoroidal);
        assert!(r.verdicts.flag);
        assert!(!r.verdicts.hyperbolic_realizable);
        assert_eq!(r.verdicts.aspherical, Verdict::Excluded(SIMPLEX_EXCLUDED.into()));
        let json = r.to_json();
        assert!(json.contains("\"aspherical\":\"excluded: P=Δ³\""));
    }

    #[test]
    fn invalid_coloring_is_an_input_error() {
        let cube = builtin("cube", None).unwrap();
        let bad = CharacteristicMap::new(vec![E1, E1, E1, E2, E3, E3]);
        let err = classify(&cube, &[bad], WitnessBounds::default()).unwrap_err();
        assert!(matches!(err, ClassifyError::InvalidColoring(_)));
        assert!(!err.is_internal());
    }

    #[test]
    fn report_round_trips() {
        let cube = builtin("cube", None).unwrap();
        let lambda = CharacteristicMap::new(vec![E1, E1, E2, E2, E3, E3]);
        let r = classify(&cube, &[lambda], WitnessBounds::default()).unwrap();
        let json = r.to_json();
        let again = ClassificationReport::from_json(&json).unwrap();
        assert_eq!(again, r);
        assert_eq!(again.to_json(), json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["belts", "circuits", "colorings", "polytope", "verdicts"]);
    }

    #[test]
    fn default_suite_has_no_failures() {
        let report = run_theorem_suite(&default_corpus(), WitnessBounds::default());
        assert!(report.all_passed(), "{:?}", report.failures());
        let prism3 = &report.entries[2];
        assert_eq!(prism3.polytope, "prism3");
        assert!(matches!(prism3.assertions[2].result, Outcome::Skipped(_)));
        assert!(run_theorem_suite(&[], WitnessBounds::default()).entries.is_empty());
    }
}
