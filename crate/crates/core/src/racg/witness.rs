//! Rank-two free abelian subgroups of `W_P` coming from 4-belts.
//!
//! For a belt `F1F2F3F4`, `x = t1t3` and `y = t2t4` commute (every letter of
//! `x` commutes with every letter of `y`) and have infinite order, since
//! `t1, t3` and `t2, t4` generate infinite dihedral groups.

use super::{equal, GroupWord, RacgError, RacgPresentation};
use crate::belts::{find_belts, induced_four_cycle, is_belt, Belt};
use crate::polytope::{FacetId, SimplePolytope3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessBounds {
    /// Powers `xⁿ`, `yⁿ` are checked for `1 <= n <= max_power`.
    pub max_power: i32,
    /// `xᵃyᵇ` is checked for `|a|, |b| <= exponent_box`.
    pub exponent_box: i32,
}

impl Default for WitnessBounds {
    fn default() -> Self {
        WitnessBounds {
            max_power: 16,
            exponent_box: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub commute: bool,
    /// Smallest `n` with `xⁿ = 1`, if found within the bound.
    pub x_torsion: Option<i32>,
    pub y_torsion: Option<i32>,
    /// Nonzero `(a, b)` in the box with `xᵃyᵇ = 1`.
    pub box_relations: Vec<(i32, i32)>,
    pub bounds: WitnessBounds,
}

impl WitnessReport {
    pub fn verified(&self) -> bool {
        self.commute
            && self.x_torsion.is_none()
            && self.y_torsion.is_none()
            && self.box_relations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Witness {
    pub belt: Belt,
    pub x: GroupWord,
    pub y: GroupWord,
    pub report: WitnessReport,
}

/// Builds `x = t_{F1}t_{F3}`, `y = t_{F2}t_{F4}` and checks them with
/// [`equal`] within the given bounds.
pub fn z2_witness(
    p: &SimplePolytope3,
    belt: &Belt,
    bounds: WitnessBounds,
) -> Result<Z2Witness, RacgError> {
    let f = belt.facets();
    if f.len() != 4 || !is_belt(p, f) {
        return Err(RacgError::NotAFourBelt(format!("{f:?}")));
    }
    let w_p = RacgPresentation::from_polytope(p);
    let x = GroupWord::new([f[0], f[2]]);
    let y = GroupWord::new([f[1], f[3]]);
    let is_one = |w: &GroupWord| equal(&w_p, w, &GroupWord::empty()).expect("facet letters");
    let commute = equal(&w_p, &x.concat(&y), &y.concat(&x))?;
    let torsion = |w: &GroupWord| (1..=bounds.max_power).find(|&n| is_one(&w.power(n)));
    let x_torsion = torsion(&x);
    let y_torsion = torsion(&y);
    let k = bounds.exponent_box;
    let mut box_relations = Vec::new();
    for a in -k..=k {
        for b in -k..=k {
            if (a, b) != (0, 0) && is_one(&x.power(a).concat(&y.power(b))) {
                box_relations.push((a, b));
            }
        }
    }
    Ok(Z2Witness {
        belt: belt.clone(),
        x,
        y,
        report: WitnessReport {
            commute,
            x_torsion,
            y_torsion,
            box_relations,
            bounds,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2SubgroupCheck {
    /// A 4-belt exists.
    pub present: bool,
    pub witness: Option<Z2Witness>,
    /// Found independently in the facet adjacency graph.
    pub induced_four_cycle: Option<[FacetId; 4]>,
    /// Belt search and the induced 4-cycle search agree.
    pub agree: bool,
}

/// Whether `W_P` contains Z² via a 4-belt, cross-checked against an induced
/// 4-cycle search in the facet adjacency graph.
pub fn has_z2_subgroup(p: &SimplePolytope3, bounds: WitnessBounds) -> Z2SubgroupCheck {
    let belts = find_belts(p, 4).expect("k = 4 is supported");
    let witness = belts
        .first()
        .map(|b| z2_witness(p, b, bounds).expect("found belts are belts"));
    let induced = induced_four_cycle(p);
    Z2SubgroupCheck {
        present: !belts.is_empty(),
        agree: belts.is_empty() == induced.is_none(),
        witness,
        induced_four_cycle: induced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::builtin;

    #[test]
    fn cube_witness() {
        let cube = builtin("cube", None).unwrap();
        let check = has_z2_subgroup(&cube, WitnessBounds::default());
        assert!(check.present && check.agree);
        assert!(check.witness.unwrap().report.verified());
    }

    #[test]
    fn prism_witness() {
        let p = builtin("prism", Some(5)).unwrap();
        let belt = Belt::from_cycle(&[0, 2, 1, 4]);
        let w = z2_witness(&p, &belt, WitnessBounds::default()).unwrap();
        assert!(w.report.verified());
    }

    #[test]
    fn no_witness_without_belts() {
        let simplex = builtin("simplex", None).unwrap();
        assert!(matches!(
            z2_witness(&simplex, &Belt::from_cycle(&[0, 1, 2, 3]), WitnessBounds::default()),
            Err(RacgError::NotAFourBelt(_))
        ));
        let check = has_z2_subgroup(&simplex, WitnessBounds::default());
        assert!(!check.present && check.agree);
        let dodecahedron = builtin("dodecahedron", None).unwrap();
        let check = has_z2_subgroup(&dodecahedron, WitnessBounds::default());
        assert!(!check.present && check.agree && check.witness.is_none());
    }
}
