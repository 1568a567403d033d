//! Monomial structure of the torus model: exponent matrices of the action
//! on the open torus xyz = 1, binomial equations, and the hexagon of
//! boundary strata x0y0z0 = 0 (or x1y1z1 = 0).

use serde::Serialize;

use crate::algebra::poly::Poly;
use crate::algebra::snf::IMatrix;
use crate::algebra::{CycNum, GroupElem, RootOfUnity};

/// Matrix `A` with `(log x, log y) ↦ A·(log x, log y)` under `g`.
pub fn exponent_matrix(g: GroupElem) -> [[i64; 2]; 2] {
    let image = |l: [i64; 3]| {
        let m = g.perm.apply(&l);
        if g.inv {
            [-m[0], -m[1]]
        } else {
            [m[0], m[1]]
        }
    };
    let c1 = image([1, 0, -1]);
    let c2 = image([0, 1, -1]);
    [[c1[0], c2[0]], [c1[1], c2[1]]]
}

/// Rows of `A_g − I`: the fixed points of `g` on the torus satisfy `t^{row} = 1`.
pub fn fixed_rows(g: GroupElem) -> IMatrix {
    let a = exponent_matrix(g);
    vec![vec![a[0][0] - 1, a[0][1]], vec![a[1][0], a[1][1] - 1]]
}

/// A torus-chart binomial `x^a y^b = c` extracted from a two-term
/// multihomogeneous equation. `None` if the polynomial is not a binomial
/// whose constant is a sixth root of unity. Monomials reduce to `Some(None)`
/// meaning the curve misses the open torus.
pub fn binomial_row(f: &Poly) -> Option<Option<(Vec<i64>, RootOfUnity)>> {
    assert_eq!(f.nvars(), 6);
    let terms: Vec<_> = f.terms().collect();
    // dehomogenize at x0 = y0 = z0 = 1, then z = 1/(xy)
    let chart = |e: &[u32]| -> [i64; 3] { [e[0] as i64, e[2] as i64, e[4] as i64] };
    match terms.len() {
        1 => Some(None),
        2 => {
            let (e1, c1) = terms[0];
            let (e2, c2) = terms[1];
            let d1 = chart(e1);
            let d2 = chart(e2);
            let diff = [d1[0] - d2[0], d1[1] - d2[1], d1[2] - d2[2]];
            // c1 m1 + c2 m2 = 0  ⇔  m1/m2 = −c2/c1
            let rhs = (-c2).checked_div(c1).ok()?.as_root_of_unity()?;
            Some(Some((vec![diff[0] - diff[2], diff[1] - diff[2]], rhs)))
        }
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slot {
    Zero,
    Inf,
    Free,
}

impl Slot {
    fn swap(self) -> Slot {
        match self {
            Slot::Zero => Slot::Inf,
            Slot::Inf => Slot::Zero,
            Slot::Free => Slot::Free,
        }
    }

    fn coords(self, u: &CycNum) -> [CycNum; 2] {
        match self {
            Slot::Zero => [CycNum::zero(), CycNum::one()],
            Slot::Inf => [CycNum::one(), CycNum::zero()],
            Slot::Free => [u.clone(), CycNum::one()],
        }
    }
}

/// A boundary stratum: a vertex of the hexagon or an open edge (one `Free` slot).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Stratum(pub [Slot; 3]);

impl Stratum {
    pub fn all() -> Vec<Stratum> {
        use Slot::*;
        let mut out = Vec::new();
        for a in [Zero, Inf, Free] {
            for b in [Zero, Inf, Free] {
                for c in [Zero, Inf, Free] {
                    let s = [a, b, c];
                    let free = s.iter().filter(|x| **x == Free).count();
                    let zeros = s.iter().filter(|x| **x == Zero).count();
                    let infs = s.iter().filter(|x| **x == Inf).count();
                    let ok = match free {
                        0 => zeros > 0 && infs > 0,
                        1 => zeros == 1 && infs == 1,
                        _ => false,
                    };
                    if ok {
                        out.push(Stratum(s));
                    }
                }
            }
        }
        out
    }

    pub fn is_vertex(&self) -> bool {
        !self.0.contains(&Slot::Free)
    }

    pub fn free_slot(&self) -> Option<usize> {
        self.0.iter().position(|s| *s == Slot::Free)
    }

    pub fn act(&self, g: GroupElem) -> Stratum {
        let m = g.perm.apply(&self.0);
        Stratum(if g.inv { m.map(Slot::swap) } else { m })
    }

    /// Exponent `±1` of the induced map `u ↦ u^ε` on the free coordinate of
    /// an edge stabilized by `g`.
    pub fn edge_exponent(&self, g: GroupElem) -> Option<i64> {
        self.free_slot()?;
        if self.act(g) != *self {
            return None;
        }
        Some(if g.inv { -1 } else { 1 })
    }

    /// Six coordinates of the point of this stratum with free value `u`.
    pub fn point(&self, u: &CycNum) -> Vec<CycNum> {
        self.0.iter().flat_map(|s| s.coords(u)).collect()
    }

    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|s| match s {
                Slot::Zero => "0",
                Slot::Inf => "∞",
                Slot::Free => "*",
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::group_all;

    #[test]
    fn hexagon_has_six_vertices_and_six_edges() {
        let all = Stratum::all();
        assert_eq!(all.iter().filter(|s| s.is_vertex()).count(), 6);
        assert_eq!(all.iter().filter(|s| !s.is_vertex()).count(), 6);
    }

    #[test]
    fn edges_form_one_orbit() {
        let e = Stratum([Slot::Free, Slot::Zero, Slot::Inf]);
        let mut orbit: Vec<Stratum> = group_all().into_iter().map(|g| e.act(g)).collect();
        orbit.sort();
        orbit.dedup();
        assert_eq!(orbit.len(), 6);
    }

    #[test]
    fn exponent_matrices_compose() {
        let mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
            let mut c = [[0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            c
        };
        for g in group_all() {
            for h in group_all() {
                assert_eq!(
                    exponent_matrix(g.compose(h)),
                    mul(exponent_matrix(g), exponent_matrix(h))
                );
            }
        }
    }

    #[test]
    fn binomials_from_curves() {
        // y1z1 − y0z0: yz = 1, i.e. x = 1 on the chart
        let gamma = Poly::from_int_terms(6, &[(1, &[0, 0, 1, 0, 1, 0]), (-1, &[0, 0, 0, 1, 0, 1])]);
        let (row, c) = binomial_row(&gamma).unwrap().unwrap();
        assert!(row == vec![1, 0] || row == vec![-1, 0]);
        assert_eq!(c, RootOfUnity::new(0));
        // x1 + x0: x = −1
        let e = Poly::from_int_terms(6, &[(1, &[1, 0, 0, 0, 0, 0]), (1, &[0, 1, 0, 0, 0, 0])]);
        let (row, c) = binomial_row(&e).unwrap().unwrap();
        assert!(row == vec![1, 0] || row == vec![-1, 0]);
        assert_eq!(c, RootOfUnity::new(3));
    }
}
