//! Admission gates: Noether inequality with orbit-length conditions, and
//! general position of the center.

use serde::Serialize;

use super::{Center, LinkState, Node};
use crate::algebra::group::group_all;
use crate::algebra::linalg::{self, Vector};
use crate::error::LinkError;
use crate::geometry::model::action_matrix;
use crate::geometry::pencils::{self, member_through, pencil_reducible_fibers, PencilSpec};
use crate::geometry::ModelId;
use crate::lattice::{
    blow_up_orbit, dp6_lattice, incidences_for, minus_two_effective_candidates, quadric_lattice,
    DivClass,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GateReason {
    Ok,
    NoetherFail,
    LengthFail,
    PositionFail {
        classes: Vec<(String, DivClass)>,
        fibers: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateVerdict {
    pub admissible: bool,
    pub reason: GateReason,
    pub detail: String,
}

impl GateVerdict {
    pub fn ok(detail: impl Into<String>) -> Self {
        GateVerdict {
            admissible: true,
            reason: GateReason::Ok,
            detail: detail.into(),
        }
    }

    pub fn fail(reason: GateReason, detail: impl Into<String>) -> Self {
        GateVerdict {
            admissible: false,
            reason,
            detail: detail.into(),
        }
    }

    pub fn reason_name(&self) -> &'static str {
        match self.reason {
            GateReason::Ok => "ok",
            GateReason::NoetherFail => "noether_fail",
            GateReason::LengthFail => "length_fail",
            GateReason::PositionFail { .. } => "position_fail",
        }
    }
}

/// Length condition alone: d divides |G| = 12, and d < K² on del Pezzo models.
pub fn length_gate(node: Node, d: usize) -> GateVerdict {
    if d == 0 || 12 % d != 0 {
        return GateVerdict::fail(GateReason::LengthFail, format!("{d} does not divide 12"));
    }
    if !node.is_conic_bundle() && d as i64 >= node.k2() {
        return GateVerdict::fail(
            GateReason::LengthFail,
            format!("d = {d} ≥ K² = {}", node.k2()),
        );
    }
    GateVerdict::ok(format!("{d} divides 12"))
}

pub fn noether_gate(state: &LinkState, center: &Center) -> GateVerdict {
    let v = length_gate(state.node, center.length);
    if !v.admissible {
        return v;
    }
    match state.mults.get(&center.label) {
        Some(r) if *r > state.a => GateVerdict::ok(format!("r = {r} > a = {}", state.a)),
        Some(r) => GateVerdict::fail(
            GateReason::NoetherFail,
            format!("r = {r} ≤ a = {}", state.a),
        ),
        None => GateVerdict::fail(
            GateReason::NoetherFail,
            format!("no multiplicity at {}", center.label),
        ),
    }
}

pub fn pencil_of(node: Node) -> Option<PencilSpec> {
    match node {
        Node::CB0 => Some(pencils::pi0()),
        Node::CB1 => Some(pencils::pi1()),
        _ => None,
    }
}

fn parallel(a: &[crate::algebra::CycNum], b: &[crate::algebra::CycNum]) -> bool {
    linalg::rank(&vec![a.to_vec(), b.to_vec()]) <= 1
}

/// Order of the group through which G acts on the base of a conic pencil:
/// g acts trivially iff it fixes three members.
pub fn base_action_order(p: &PencilSpec) -> usize {
    let basis = linalg::kernel(&p.base_constraints, p.planes.len());
    let plane = |u: &Vector| {
        p.planes
            .iter()
            .zip(u)
            .fold(vec![crate::algebra::CycNum::zero(); 4], |acc, (pl, c)| {
                linalg::add_vec(&acc, &linalg::scale_vec(pl, c))
            })
    };
    let a1 = plane(&basis[0]);
    let a2 = plane(&basis[1]);
    let a3 = linalg::add_vec(&a1, &a2);
    let trivial = group_all()
        .into_iter()
        .filter(|&g| {
            let m = action_matrix(ModelId::X2Quadric, g).expect("linear action");
            let minv = linalg::inverse(&m).expect("invertible");
            // planes transform by the inverse transpose
            let mt: Vec<Vector> = (0..4)
                .map(|i| (0..4).map(|j| minv[j][i].clone()).collect())
                .collect();
            [&a1, &a2, &a3]
                .iter()
                .all(|a| parallel(&linalg::mat_vec(&mt, a), a))
        })
        .count();
    12 / trivial
}

/// General position of a center on `node`.
///
/// Del Pezzo models: no known curve becomes a (−2)-class after blowing up.
/// Conic bundles: no point on a reducible fiber and at most one point per
/// fiber; a symbolic center longer than the base orbits must collide.
pub fn position_gate(node: Node, center: &Center) -> Result<GateVerdict, LinkError> {
    let Some(orbit) = &center.orbit else {
        if let Some(p) = pencil_of(node) {
            let k = base_action_order(&p);
            if center.length > k {
                let why = format!(
                    "G acts on the base of {} through a group of order {k} < {}",
                    p.label, center.length
                );
                return Ok(GateVerdict::fail(
                    GateReason::PositionFail {
                        classes: vec![],
                        fibers: vec![why.clone()],
                    },
                    why,
                ));
            }
        }
        return Ok(GateVerdict::ok(
            "symbolic center, general position is part of the hypothesis",
        ));
    };
    if let Some(p) = pencil_of(node) {
        let reducible = pencil_reducible_fibers(&p)?;
        let mut fibers = Vec::new();
        for pt in &orbit.points {
            for f in &reducible.fibers {
                if linalg::dot(&f.plane, &pt.coords).is_zero() {
                    fibers.push(format!(
                        "{pt:?} lies on the reducible fiber {:?} of {}",
                        f.base, p.label
                    ));
                }
            }
        }
        if fibers.is_empty() {
            let members: Vec<Vector> = orbit
                .points
                .iter()
                .map(|pt| member_through(&p, pt))
                .collect::<Result<_, _>>()?;
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    if members[i] == members[j] {
                        fibers.push(format!(
                            "{:?} and {:?} lie on the fiber {:?} of {}",
                            orbit.points[i], orbit.points[j], members[i], p.label
                        ));
                    }
                }
            }
        }
        return Ok(if fibers.is_empty() {
            GateVerdict::ok(format!("one point per smooth fiber of {}", p.label))
        } else {
            let detail = fibers[0].clone();
            GateVerdict::fail(
                GateReason::PositionFail {
                    classes: vec![],
                    fibers,
                },
                detail,
            )
        });
    }
    let base = match node {
        Node::X => dp6_lattice(),
        _ => quadric_lattice(),
    };
    let b = blow_up_orbit(&base, orbit).map_err(LinkError::from)?;
    let inc = incidences_for(orbit)?;
    let classes = minus_two_effective_candidates(&b, &inc);
    Ok(if classes.is_empty() {
        GateVerdict::ok("no known curve becomes a (−2)-curve")
    } else {
        let detail = format!(
            "(−2)-curves: {}",
            classes
                .iter()
                .map(|(l, _)| format!("{l}′"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        GateVerdict::fail(
            GateReason::PositionFail {
                classes,
                fibers: vec![],
            },
            detail,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use crate::geometry::{named, orbit_of};

    fn center(p: &crate::geometry::SurfacePoint, label: &str) -> Center {
        Center::concrete(label, orbit_of(p).unwrap())
    }

    #[test]
    fn noether_examples() {
        let s = LinkState::new(Node::X, rat_int(2)).with_mult("P±", rat_int(3));
        let v = noether_gate(&s, &center(&named::p_plus(), "P±"));
        assert!(v.admissible, "{}", v.detail);
        let s = LinkState::new(Node::X, rat_int(2)).with_mult("x5", rat_int(3));
        assert_eq!(
            noether_gate(&s, &Center::symbolic("x5", 5)).reason,
            GateReason::LengthFail
        );
        assert_eq!(length_gate(Node::X2, 7).reason, GateReason::LengthFail);
        assert_eq!(length_gate(Node::X, 6).reason, GateReason::LengthFail);
        assert!(length_gate(Node::X2, 6).admissible);
        assert!(length_gate(Node::CB1, 6).admissible);
        let s = LinkState::new(Node::X, rat_int(3)).with_mult("P", rat_int(3));
        assert_eq!(
            noether_gate(&s, &center(&named::p(), "P")).reason,
            GateReason::NoetherFail
        );
    }

    #[test]
    fn q_orbit_not_in_general_position() {
        let v = position_gate(Node::X, &center(&named::q(1), "Q")).unwrap();
        let GateReason::PositionFail { classes, .. } = &v.reason else {
            panic!("{v:?}")
        };
        let mut labels: Vec<&str> = classes.iter().map(|(l, _)| l.as_str()).collect();
        labels.sort();
        assert_eq!(labels, ["E_x", "E_y", "E_z"]);
        assert!(
            position_gate(Node::X, &center(&named::p_plus(), "P±"))
                .unwrap()
                .admissible
        );
        assert!(
            position_gate(Node::X, &center(&named::p(), "P"))
                .unwrap()
                .admissible
        );
    }

    #[test]
    fn conic_bundle_positions() {
        let v = position_gate(Node::CB0, &center(&named::x2_p1(), "P±")).unwrap();
        assert_eq!(v.reason_name(), "position_fail");
        let v = position_gate(Node::CB1, &center(&named::r1(), "R")).unwrap();
        assert_eq!(v.reason_name(), "position_fail");
        for a in [named::orbit_a(), named::orbit_b()] {
            assert!(
                position_gate(Node::CB1, &center(&a[0], "A"))
                    .unwrap()
                    .admissible
            );
            assert_eq!(
                position_gate(Node::CB0, &center(&a[0], "A"))
                    .unwrap()
                    .reason_name(),
                "position_fail"
            );
        }
        assert_eq!(base_action_order(&pencils::pi0()), 2);
        assert_eq!(base_action_order(&pencils::pi1()), 6);
        assert!(
            !position_gate(Node::CB0, &Center::symbolic("x6", 6))
                .unwrap()
                .admissible
        );
        assert!(
            position_gate(Node::CB1, &Center::symbolic("x6", 6))
                .unwrap()
                .admissible
        );
    }
}
