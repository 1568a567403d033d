//! Blow-ups at G-orbits, concrete or given as abstract G-sets.

use serde::Serialize;

use super::{DivClass, GPicardLattice};
use crate::algebra::group::group_all;
use crate::algebra::Subgroup;
use crate::error::{GeometryError, LatticeError};
use crate::geometry::Orbit;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupResult {
    pub lattice: GPicardLattice,
    /// Exceptional classes, in orbit order.
    pub exceptionals: Vec<DivClass>,
}

impl BlowupResult {
    /// Pullback of a class from the base lattice.
    pub fn pullback(&self, d: &[i64]) -> DivClass {
        let mut v = d.to_vec();
        v.resize(self.lattice.rank(), 0);
        v
    }
}

/// Permutation of the orbit induced by each group element, in the order of
/// `group_all`: `perms[g][i]` is the index of g·pᵢ.
fn orbit_gset(orbit: &Orbit) -> Result<Vec<Vec<usize>>, GeometryError> {
    group_all()
        .into_iter()
        .map(|g| {
            orbit
                .points
                .iter()
                .map(|p| {
                    let q = p.act(g)?;
                    Ok(orbit.points.binary_search(&q).expect("orbit is G-stable"))
                })
                .collect()
        })
        .collect()
}

/// G-set G/H on left cosets, listed by first appearance in `group_all`.
pub fn coset_gset(h: &Subgroup) -> Vec<Vec<usize>> {
    let all = group_all();
    let mut reps = Vec::new();
    for &g in &all {
        if !reps
            .iter()
            .any(|&r: &crate::algebra::GroupElem| h.contains(r.inverse().compose(g)))
        {
            reps.push(g);
        }
    }
    let coset = |x: crate::algebra::GroupElem| {
        reps.iter()
            .position(|&r| h.contains(r.inverse().compose(x)))
            .expect("cosets cover G")
    };
    all.iter()
        .map(|&g| reps.iter().map(|&r| coset(g.compose(r))).collect())
        .collect()
}

pub fn blow_up_orbit(l: &GPicardLattice, orbit: &Orbit) -> Result<BlowupResult, LatticeError> {
    if l.model != Some(orbit.model) {
        return Err(LatticeError::InconsistentContraction(format!(
            "orbit on {} cannot be blown up on {}",
            orbit.model.name(),
            l.name
        )));
    }
    let perms = orbit_gset(orbit)?;
    let labels = orbit.points.iter().map(|p| format!("E{p:?}")).collect();
    Ok(blow_up_gset(l, &perms, labels))
}

/// Blow up a G-orbit given only as a permutation representation.
pub fn blow_up_gset(l: &GPicardLattice, perms: &[Vec<usize>], labels: Vec<String>) -> BlowupResult {
    let n = l.rank();
    let d = perms[0].len();
    let m = n + d;
    let mut gram = vec![vec![0; m]; m];
    for i in 0..n {
        gram[i][..n].copy_from_slice(&l.gram[i]);
    }
    for i in n..m {
        gram[i][i] = -1;
    }
    let mut k = l.k.clone();
    k.resize(m, 1);
    let action = perms
        .iter()
        .zip(&l.action)
        .map(|(perm, base)| {
            let mut a = vec![vec![0; m]; m];
            for i in 0..n {
                a[i][..n].copy_from_slice(&base[i]);
            }
            for (j, &pj) in perm.iter().enumerate() {
                a[n + pj][n + j] = 1;
            }
            a
        })
        .collect();
    let mut all_labels = l.labels.clone();
    all_labels.extend(labels);
    let lattice = GPicardLattice {
        name: format!("{}[{}]", l.name, d),
        model: l.model,
        labels: all_labels,
        gram,
        k,
        action,
    };
    let exceptionals = (n..m).map(|i| lattice.basis_vector(i)).collect();
    BlowupResult {
        lattice,
        exceptionals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupElem;
    use crate::geometry::{named, orbit_of};
    use crate::lattice::{dp6_lattice, quadric_lattice};

    #[test]
    fn degrees_drop_by_orbit_length() {
        let q = orbit_of(&named::q(1)).unwrap();
        let pm = orbit_of(&named::p_plus()).unwrap();
        let b = blow_up_orbit(&dp6_lattice(), &q).unwrap();
        assert_eq!(b.lattice.k2(), 3);
        assert!(b.lattice.check_action());
        let b2 = blow_up_orbit(&b.lattice, &pm).unwrap();
        assert_eq!(b2.lattice.k2(), 1);
        assert!(b2.lattice.check_action());
        assert!(b2.lattice.is_hyperbolic());
        let b3 = blow_up_orbit(&dp6_lattice(), &pm).unwrap();
        assert_eq!(b3.lattice.k2(), 4);
    }

    #[test]
    fn wrong_model_rejected() {
        let a = orbit_of(&named::r1()).unwrap();
        assert!(blow_up_orbit(&dp6_lattice(), &a).is_err());
        assert!(blow_up_orbit(&quadric_lattice(), &a).is_ok());
    }

    #[test]
    fn coset_sets_are_actions() {
        let h = Subgroup::generated_by(&[GroupElem::TAU]);
        let perms = coset_gset(&h);
        assert_eq!(perms[0].len(), 6);
        let b = blow_up_gset(
            &quadric_lattice(),
            &perms,
            (0..6).map(|i| format!("E{i}")).collect(),
        );
        assert!(b.lattice.check_action());
        assert_eq!(b.lattice.k2(), 2);
    }
}
