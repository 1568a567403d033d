//! Picard lattices of the base models with their G-actions.

use super::blowup::blow_up_orbit;
use super::GPicardLattice;
use crate::algebra::group::group_all;
use crate::algebra::snf::{imat_mul, IMatrix};
use crate::algebra::GroupElem;
use crate::error::LatticeError;
use crate::geometry::named;
use crate::geometry::{orbit_of, ModelId};

fn identity(n: usize) -> IMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

/// Whether g exchanges the two boundary triangles (equivalently, the two
/// rulings of the quadric).
pub fn is_twisting(g: GroupElem) -> bool {
    g.perm.is_odd() ^ g.inv
}

/// The dp6 torus surface in the basis (h, e1, e2, e3) of the blow-up of
/// the plane at three points, where e_i is the boundary line {x_{i+1} = 0,
/// x_{i+2} = ∞}. Permutations act on indices; twisting elements compose
/// with the quadratic involution e_i ↦ h − e_j − e_k.
pub fn dp6_lattice() -> GPicardLattice {
    let cremona: IMatrix = vec![
        vec![2, 1, 1, 1],
        vec![-1, 0, -1, -1],
        vec![-1, -1, 0, -1],
        vec![-1, -1, -1, 0],
    ];
    let action = group_all()
        .into_iter()
        .map(|g| {
            let mut p = vec![vec![0; 4]; 4];
            p[0][0] = 1;
            for i in 0..3 {
                p[1 + g.perm.image(i)][1 + i] = 1;
            }
            if is_twisting(g) {
                imat_mul(&p, &cremona)
            } else {
                p
            }
        })
        .collect();
    GPicardLattice {
        name: "X".into(),
        model: Some(ModelId::XTorus),
        labels: vec!["h".into(), "e1".into(), "e2".into(), "e3".into()],
        gram: vec![
            vec![1, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![0, 0, -1, 0],
            vec![0, 0, 0, -1],
        ],
        k: vec![-3, 1, 1, 1],
        action,
    }
}

/// The quadric in the basis of its two rulings.
pub fn quadric_lattice() -> GPicardLattice {
    let swap: IMatrix = vec![vec![0, 1], vec![1, 0]];
    GPicardLattice {
        name: "X2".into(),
        model: Some(ModelId::X2Quadric),
        labels: vec!["l1".into(), "l2".into()],
        gram: swap.clone(),
        k: vec![-2, -2],
        action: group_all()
            .into_iter()
            .map(|g| {
                if is_twisting(g) {
                    swap.clone()
                } else {
                    identity(2)
                }
            })
            .collect(),
    }
}

pub fn plane_lattice() -> GPicardLattice {
    GPicardLattice {
        name: "P2".into(),
        model: Some(ModelId::YP2),
        labels: vec!["h".into()],
        gram: vec![vec![1]],
        k: vec![-3],
        action: vec![vec![vec![1]]; 12],
    }
}

/// Conic bundle CB0 (quadric blown up at {R1, R2}) or CB1 (at {P1, P−1}).
pub fn cb_lattice(which: u8) -> Result<GPicardLattice, LatticeError> {
    let orbit = orbit_of(&if which == 0 {
        named::r1()
    } else {
        named::x2_p1()
    })?;
    let mut l = blow_up_orbit(&quadric_lattice(), &orbit)?.lattice;
    l.name = format!("CB{which}");
    Ok(l)
}

/// Fiber class l1 + l2 − E1 − E2 of a conic bundle lattice.
pub fn cb_fiber(l: &GPicardLattice) -> Vec<i64> {
    vec![1, 1, -1, -1]
        .into_iter()
        .chain(std::iter::repeat_n(0, l.rank() - 4))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::curves::{image_label, torus_curves};
    use crate::lattice::invariant_sublattice;

    #[test]
    fn base_lattices() {
        for l in [dp6_lattice(), quadric_lattice(), plane_lattice()] {
            assert!(l.check_action(), "{}", l.name);
            assert!(l.is_hyperbolic(), "{}", l.name);
        }
        assert_eq!(dp6_lattice().k2(), 6);
        assert_eq!(quadric_lattice().k2(), 8);
        assert_eq!(plane_lattice().k2(), 9);
    }

    #[test]
    fn invariant_parts_have_rank_one() {
        assert_eq!(
            invariant_sublattice(&dp6_lattice()),
            vec![vec![3, -1, -1, -1]]
        );
        // generated by C0 = −K/2, not −K
        assert_eq!(invariant_sublattice(&quadric_lattice()), vec![vec![1, 1]]);
        assert_eq!(invariant_sublattice(&plane_lattice()), vec![vec![1]]);
    }

    #[test]
    fn curve_classes_follow_the_action() {
        let l = dp6_lattice();
        let curves = torus_curves();
        for c in &curves {
            for g in group_all() {
                let img = image_label(c, g).unwrap();
                let d = curves.iter().find(|x| x.label == img).unwrap();
                assert_eq!(l.act(g, &c.class), d.class, "{} under {g}", c.label);
            }
        }
    }

    #[test]
    fn conic_bundles() {
        for w in [0, 1] {
            let l = cb_lattice(w).unwrap();
            assert!(l.check_action());
            assert_eq!(l.k2(), 6);
            let f = cb_fiber(&l);
            assert_eq!(l.pair(&f, &f), 0);
            assert_eq!(l.pair(&f, &l.k), -2);
            assert_eq!(invariant_sublattice(&l).len(), 2);
        }
    }
}
