//! Surface models with their defining equations and the G-action on each.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::poly::Poly;
use crate::algebra::{rat, CycNum, GroupElem};
use crate::error::GeometryError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelId {
    /// The projective plane with the linear action.
    #[serde(rename = "Y_P2")]
    YP2,
    /// Degree-6 del Pezzo surface x1y1z1 = x0y0z0 in (P¹)³.
    #[serde(rename = "X_torus")]
    XTorus,
    /// Singular cubic xyz = w³.
    #[serde(rename = "X0_cubic")]
    X0Cubic,
    /// Singular cubic xyz − (1/3)w²(x + y + z) = 0.
    #[serde(rename = "X1_cubic")]
    X1Cubic,
    /// Smooth quadric xy + yz + zx = 3w².
    #[serde(rename = "X2_quadric")]
    X2Quadric,
}

impl ModelId {
    pub fn all() -> [ModelId; 5] {
        [
            ModelId::YP2,
            ModelId::XTorus,
            ModelId::X0Cubic,
            ModelId::X1Cubic,
            ModelId::X2Quadric,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelId::YP2 => "Y_P2",
            ModelId::XTorus => "X_torus",
            ModelId::X0Cubic => "X0_cubic",
            ModelId::X1Cubic => "X1_cubic",
            ModelId::X2Quadric => "X2_quadric",
        }
    }

    /// Sizes of the projective factors of the ambient space.
    pub fn factors(self) -> &'static [usize] {
        match self {
            ModelId::YP2 => &[3],
            ModelId::XTorus => &[2, 2, 2],
            _ => &[4],
        }
    }

    pub fn arity(self) -> usize {
        self.factors().iter().sum()
    }

    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            ModelId::YP2 => &["u0", "u1", "u2"],
            ModelId::XTorus => &["x1", "x0", "y1", "y0", "z1", "z0"],
            _ => &["x", "y", "z", "w"],
        }
    }

    /// Whether every group element acts by a regular automorphism.
    pub fn action_is_regular(self) -> bool {
        self != ModelId::X0Cubic
    }
}

impl fmt::Debug for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A model: ambient space, defining equations and action.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceModel {
    pub id: ModelId,
    pub variables: Vec<String>,
    pub factors: Vec<usize>,
    pub equations: Vec<Poly>,
}

impl SurfaceModel {
    pub fn get(id: ModelId) -> SurfaceModel {
        SurfaceModel {
            id,
            variables: id.var_names().iter().map(|s| s.to_string()).collect(),
            factors: id.factors().to_vec(),
            equations: equations(id),
        }
    }

    /// Exact membership test for a raw coordinate tuple.
    pub fn contains(&self, coords: &[CycNum]) -> Result<bool, GeometryError> {
        check_arity(self.id, coords)?;
        Ok(self.equations.iter().all(|e| e.eval(coords).is_zero()))
    }
}

pub fn equations(id: ModelId) -> Vec<Poly> {
    match id {
        ModelId::YP2 => Vec::new(),
        ModelId::XTorus => vec![Poly::from_int_terms(
            6,
            &[(1, &[1, 0, 1, 0, 1, 0]), (-1, &[0, 1, 0, 1, 0, 1])],
        )],
        ModelId::X0Cubic => vec![Poly::from_int_terms(
            4,
            &[(1, &[1, 1, 1, 0]), (-1, &[0, 0, 0, 3])],
        )],
        ModelId::X1Cubic => {
            let mut p = Poly::from_int_terms(4, &[(1, &[1, 1, 1, 0])]);
            let third = CycNum::from_rat(rat(-1, 3));
            for e in [[1, 0, 0, 2], [0, 1, 0, 2], [0, 0, 1, 2]] {
                p.add_term(e.to_vec(), third.clone());
            }
            vec![p]
        }
        ModelId::X2Quadric => vec![Poly::from_int_terms(
            4,
            &[
                (1, &[1, 1, 0, 0]),
                (1, &[0, 1, 1, 0]),
                (1, &[1, 0, 1, 0]),
                (-3, &[0, 0, 0, 2]),
            ],
        )],
    }
}

pub(crate) fn check_arity(id: ModelId, coords: &[CycNum]) -> Result<(), GeometryError> {
    if coords.len() != id.arity() {
        return Err(GeometryError::ArityMismatch {
            model: id,
            expected: id.arity(),
            got: coords.len(),
        });
    }
    let mut off = 0;
    for (k, &n) in id.factors().iter().enumerate() {
        if coords[off..off + n].iter().all(|c| c.is_zero()) {
            return Err(GeometryError::ZeroFactor(k));
        }
        off += n;
    }
    Ok(())
}

/// Matrix of `g` on the ambient coordinates, for models where the action
/// is linear (on (P¹)³ it permutes the six coordinates).
pub fn action_matrix(id: ModelId, g: GroupElem) -> Option<Matrix> {
    let n = id.arity();
    let cols: Vec<Vec<CycNum>> = (0..n)
        .map(|j| {
            let mut e = vec![CycNum::zero(); n];
            e[j] = CycNum::one();
            linear_image(id, g, &e)
        })
        .collect::<Option<_>>()?;
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

/// Image of a raw coordinate vector under a linear realization.
fn linear_image(id: ModelId, g: GroupElem, v: &[CycNum]) -> Option<Vec<CycNum>> {
    let sign = |c: CycNum| if g.inv { -c } else { c };
    match id {
        ModelId::YP2 => {
            // x = u1/u0, y = u2/u0, z = −(u1 + u2)/u0 on the plane x + y + z = 0
            let trip = [v[1].clone(), v[2].clone(), -&(&v[1] + &v[2])];
            let moved = g.perm.apply(&trip);
            Some(vec![
                v[0].clone(),
                sign(moved[0].clone()),
                sign(moved[1].clone()),
            ])
        }
        ModelId::XTorus => {
            let pairs = [
                [v[0].clone(), v[1].clone()],
                [v[2].clone(), v[3].clone()],
                [v[4].clone(), v[5].clone()],
            ];
            let moved = g.perm.apply(&pairs);
            Some(
                moved
                    .iter()
                    .flat_map(|p| {
                        if g.inv {
                            [p[1].clone(), p[0].clone()]
                        } else {
                            p.clone()
                        }
                    })
                    .collect(),
            )
        }
        ModelId::X1Cubic | ModelId::X2Quadric => {
            let moved = g.perm.apply(&[v[0].clone(), v[1].clone(), v[2].clone()]);
            Some(vec![
                sign(moved[0].clone()),
                sign(moved[1].clone()),
                sign(moved[2].clone()),
                v[3].clone(),
            ])
        }
        ModelId::X0Cubic if !g.inv => {
            let moved = g.perm.apply(&[v[0].clone(), v[1].clone(), v[2].clone()]);
            Some(vec![
                moved[0].clone(),
                moved[1].clone(),
                moved[2].clone(),
                v[3].clone(),
            ])
        }
        ModelId::X0Cubic => None,
    }
}

/// Raw image of a coordinate tuple, before normalization.
pub(crate) fn raw_image(
    id: ModelId,
    g: GroupElem,
    v: &[CycNum],
) -> Result<Vec<CycNum>, GeometryError> {
    if let Some(img) = linear_image(id, g, v) {
        return Ok(img);
    }
    // X0: S3 linear, τ the Cremona-type inversion (x, y, z, w) ↦ (yzw, xzw, xyw, xyz)
    let moved = g.perm.apply(&[v[0].clone(), v[1].clone(), v[2].clone()]);
    let (x, y, z, w) = (&moved[0], &moved[1], &moved[2], &v[3]);
    let img = vec![&(y * z) * w, &(x * z) * w, &(x * y) * w, &(x * y) * z];
    if img.iter().all(|c| c.is_zero()) {
        return Err(GeometryError::UndefinedImage {
            model: id,
            elem: g.name(),
            point: format!("{v:?}"),
        });
    }
    Ok(img)
}

/// Substitution that pulls a polynomial back along `g`: returns `f ∘ g`.
/// Only available for linear realizations.
pub fn pullback(id: ModelId, g: GroupElem, f: &Poly) -> Option<Poly> {
    let m = action_matrix(id, g)?;
    Some(f.linear_substitute(&m))
}

/// Determinant of the linear realization.
pub fn action_det(id: ModelId, g: GroupElem) -> Option<CycNum> {
    action_matrix(id, g).map(|m| linalg::det(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::group_all;
    use crate::algebra::Perm3;

    fn im(rows: &[[i64; 3]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| CycNum::int(x)).collect())
            .collect()
    }

    #[test]
    fn plane_generators_match_the_classical_matrices() {
        let sxy = action_matrix(ModelId::YP2, GroupElem::SIGMA_XY).unwrap();
        assert_eq!(sxy, im(&[[1, 0, 0], [0, 0, 1], [0, 1, 0]]));
        let sxyz = action_matrix(ModelId::YP2, GroupElem::SIGMA_XYZ).unwrap();
        assert_eq!(sxyz, im(&[[1, 0, 0], [0, 0, 1], [0, -1, -1]]));
        let tau = action_matrix(ModelId::YP2, GroupElem::TAU).unwrap();
        assert_eq!(tau, im(&[[1, 0, 0], [0, -1, 0], [0, 0, -1]]));
    }

    #[test]
    fn linear_actions_are_homomorphisms() {
        for id in [
            ModelId::YP2,
            ModelId::XTorus,
            ModelId::X1Cubic,
            ModelId::X2Quadric,
        ] {
            for g in group_all() {
                for h in group_all() {
                    let lhs = action_matrix(id, g.compose(h)).unwrap();
                    let rhs = linalg::mat_mul(
                        &action_matrix(id, g).unwrap(),
                        &action_matrix(id, h).unwrap(),
                    );
                    assert_eq!(lhs, rhs, "{id:?} {g:?} {h:?}");
                }
            }
        }
    }

    #[test]
    fn equations_are_invariant_up_to_scalar() {
        for id in [ModelId::XTorus, ModelId::X1Cubic, ModelId::X2Quadric] {
            let f = &equations(id)[0];
            for g in GroupElem::generators() {
                let pulled = pullback(id, g, f).unwrap();
                assert!(pulled.proportional_to(f), "{id:?} {g:?}");
            }
        }
        // X0 is invariant under the linear S3 part
        let f = &equations(ModelId::X0Cubic)[0];
        let g = GroupElem::new(Perm3::XYZ, false);
        assert!(pullback(ModelId::X0Cubic, g, f).unwrap().proportional_to(f));
        assert!(pullback(ModelId::X0Cubic, GroupElem::TAU, f).is_none());
    }

    #[test]
    fn quadric_ruling_swap_parity() {
        for g in group_all() {
            let d = action_det(ModelId::X2Quadric, g).unwrap();
            let odd = g.perm.is_odd() ^ g.inv;
            assert_eq!(d, CycNum::int(if odd { -1 } else { 1 }));
        }
    }

    #[test]
    fn membership() {
        let t = SurfaceModel::get(ModelId::XTorus);
        assert!(t.contains(&[1, 1, 1, 1, 1, 1].map(CycNum::int)).unwrap());
        let q = SurfaceModel::get(ModelId::X2Quadric);
        assert!(q.contains(&[1, 1, 1, 1].map(CycNum::int)).unwrap());
        assert!(!q.contains(&[1, 0, 0, 1].map(CycNum::int)).unwrap());
        assert!(matches!(
            q.contains(&[1, 1, 1].map(CycNum::int)),
            Err(GeometryError::ArityMismatch { .. })
        ));
        assert!(matches!(
            t.contains(&[0, 0, 1, 1, 1, 1].map(CycNum::int)),
            Err(GeometryError::ZeroFactor(0))
        ));
    }
}
