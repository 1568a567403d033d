//! G-equivariant Picard lattices: intersection forms, canonical classes,
//! the action of G, blow-ups at orbits, class searches and the pushforward
//! oracle for link coefficients.

pub mod blowup;
pub mod models;
pub mod pushforward;
pub mod search;

use serde::Serialize;

use crate::algebra::group::group_all;
use crate::algebra::snf::{imat_mul, smith_normal_form, IMatrix};
use crate::algebra::{GroupElem, Rat};
use crate::error::LatticeError;
use crate::geometry::ModelId;

pub use blowup::{blow_up_gset, blow_up_orbit, coset_gset, BlowupResult};
pub use models::{cb_fiber, cb_lattice, dp6_lattice, is_twisting, plane_lattice, quadric_lattice};
pub use pushforward::{combo, pushforward_system, to_rat, Contraction, SystemImage};
pub use search::{
    classes_with, hodge_bound, incidences_for, minus_one_classes, minus_two_effective_candidates,
    CurveIncidence,
};

/// Integer coefficients in a lattice basis.
pub type DivClass = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GPicardLattice {
    pub name: String,
    /// Surface whose points index the exceptional classes, if any.
    pub model: Option<ModelId>,
    pub labels: Vec<String>,
    pub gram: IMatrix,
    pub k: DivClass,
    /// Matrix of each group element, in the order of `group_all`; column j
    /// is the image of basis vector j.
    pub action: Vec<IMatrix>,
}

pub fn mat_vec(m: &IMatrix, v: &[i64]) -> DivClass {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn transpose(m: &IMatrix) -> IMatrix {
    let n = m.first().map_or(0, |r| r.len());
    (0..n).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> DivClass {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> DivClass {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], s: i64) -> DivClass {
    a.iter().map(|x| x * s).collect()
}

impl GPicardLattice {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter()
            .zip(mat_vec(&self.gram, b))
            .map(|(x, y)| x * y)
            .sum()
    }

    /// Pairing of rational coefficient vectors.
    pub fn pair_rat(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let mut acc = Rat::from_integer(0.into());
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                if self.gram[i][j] != 0 {
                    acc += ai * bj * Rat::from_integer(self.gram[i][j].into());
                }
            }
        }
        acc
    }

    pub fn k2(&self) -> i64 {
        self.pair(&self.k, &self.k)
    }

    pub fn minus_k(&self) -> DivClass {
        scale(&self.k, -1)
    }

    pub fn matrix(&self, g: GroupElem) -> &IMatrix {
        &self.action[g.index()]
    }

    pub fn act(&self, g: GroupElem, d: &[i64]) -> DivClass {
        mat_vec(self.matrix(g), d)
    }

    pub fn basis_vector(&self, i: usize) -> DivClass {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn check_class(&self, d: &[i64]) -> Result<(), LatticeError> {
        if d.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                rank: self.rank(),
                got: d.len(),
            });
        }
        Ok(())
    }

    /// Every matrix is an isometry fixing K, and g ↦ M_g is a homomorphism.
    pub fn check_action(&self) -> bool {
        let all = group_all();
        let iso = all.iter().all(|&g| {
            let m = self.matrix(g);
            imat_mul(&imat_mul(&transpose(m), &self.gram), m) == self.gram
                && mat_vec(m, &self.k) == self.k
        });
        let hom = all.iter().all(|&g| {
            all.iter()
                .all(|&h| *self.matrix(g.compose(h)) == imat_mul(self.matrix(g), self.matrix(h)))
        });
        iso && hom
    }

    /// Signature (1, rank − 1): K² > 0 and the form is negative definite on K⊥.
    pub fn is_hyperbolic(&self) -> bool {
        if self.k2() <= 0 {
            return false;
        }
        let row = vec![mat_vec(&self.gram, &self.k)];
        let perp = integer_kernel(&row, self.rank());
        let g: Vec<Vec<Rat>> = perp
            .iter()
            .map(|a| {
                perp.iter()
                    .map(|b| Rat::from_integer((-self.pair(a, b)).into()))
                    .collect()
            })
            .collect();
        (1..=g.len()).all(|k| {
            let minor: Vec<Vec<Rat>> = g[..k].iter().map(|r| r[..k].to_vec()).collect();
            rat_det(minor) > Rat::from_integer(0.into())
        })
    }
}

/// Z-basis of `{v ∈ Zⁿ : A v = 0}`, saturated.
pub fn integer_kernel(a: &IMatrix, n: usize) -> Vec<DivClass> {
    if a.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
    }
    let s = smith_normal_form(a);
    let diag = s.diagonal();
    let rank = diag.iter().filter(|d| **d != 0).count();
    (rank..n)
        .map(|j| s.v.iter().map(|row| row[j]).collect())
        .collect()
}

fn rat_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let zero = Rat::from_integer(0.into());
    let mut det = Rat::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != zero) else {
            return zero;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..n {
            let f = m[i][c].clone() / m[c][c].clone();
            for j in c..n {
                let t = f.clone() * m[c][j].clone();
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Integral basis of the sublattice fixed by every group element,
/// each generator oriented to have positive degree against −K.
pub fn invariant_sublattice(l: &GPicardLattice) -> Vec<DivClass> {
    let n = l.rank();
    let mut rows: IMatrix = Vec::new();
    for g in GroupElem::generators() {
        let m = l.matrix(g);
        for (i, row) in m.iter().enumerate() {
            let mut r = row.clone();
            r[i] -= 1;
            rows.push(r);
        }
    }
    let mut basis = integer_kernel(&rows, n);
    for b in basis.iter_mut() {
        if l.pair(b, &l.minus_k()) < 0 {
            *b = scale(b, -1);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_saturated() {
        // 2x − 2y = 0 has kernel generated by (1, 1), not (2, 2)
        let k = integer_kernel(&vec![vec![2, -2]], 2);
        assert_eq!(k.len(), 1);
        assert!(k[0] == vec![1, 1] || k[0] == vec![-1, -1]);
    }
}
