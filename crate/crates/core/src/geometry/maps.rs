//! Explicit birational maps: the projection p2 of the torus model onto the
//! quadric, the inversion X1 ⇢ X2, and the stereographic projection of the
//! quadric from P1 to the plane w = 0.

use super::model::ModelId;
use super::point::SurfacePoint;
use crate::algebra::{CycNum, GroupElem};
use crate::error::GeometryError;

fn undefined(model: ModelId, map: &str, p: &impl std::fmt::Debug) -> GeometryError {
    GeometryError::UndefinedImage {
        model,
        elem: map.into(),
        point: format!("{p:?}"),
    }
}

/// Projection from the tangent plane at P, on the open torus chart:
/// x ↦ (x + 1/x) − (y + 1/y) − (z + 1/z) + 2 (and cyclically),
/// w ↦ Σ (x − 1/x) / √−3.
pub fn p2(p: &SurfacePoint) -> Result<SurfacePoint, GeometryError> {
    let [x, y, z] = p
        .torus_coords()
        .ok_or_else(|| undefined(ModelId::XTorus, "p2", p))?;
    let inv = |c: &CycNum| c.inv().expect("torus coordinate");
    let plus = |c: &CycNum| c + &inv(c);
    let minus = |c: &CycNum| c - &inv(c);
    let two = CycNum::int(2);
    let (sx, sy, sz) = (plus(&x), plus(&y), plus(&z));
    let cx = &(&(&sx - &sy) - &sz) + &two;
    let cy = &(&(&sy - &sx) - &sz) + &two;
    let cz = &(&(&sz - &sx) - &sy) + &two;
    let w = (&(&minus(&x) + &minus(&y)) + &minus(&z)).checked_div(&CycNum::sqrt_minus_three())?;
    let img = vec![cx, cy, cz, w];
    if img.iter().all(|c| c.is_zero()) {
        return Err(undefined(ModelId::XTorus, "p2", p));
    }
    SurfacePoint::new(ModelId::X2Quadric, img)
}

/// (x, y, z, w) ↦ (1/x, 1/y, 1/z, 1/w), cleared of denominators.
pub fn x1_to_x2(p: &SurfacePoint) -> Result<SurfacePoint, GeometryError> {
    let c = &p.coords;
    let img = vec![
        &(&c[1] * &c[2]) * &c[3],
        &(&c[0] * &c[2]) * &c[3],
        &(&c[0] * &c[1]) * &c[3],
        &(&c[0] * &c[1]) * &c[2],
    ];
    if img.iter().all(|x| x.is_zero()) {
        return Err(undefined(ModelId::X1Cubic, "inversion", p));
    }
    SurfacePoint::new(ModelId::X2Quadric, img)
}

/// Point of the plane w = 0 in coordinates (x : y : z), first nonzero entry 1.
pub type PlanePoint = [CycNum; 3];

fn normalize_plane(v: [CycNum; 3]) -> Option<PlanePoint> {
    let lead = v.iter().find(|c| !c.is_zero())?.inv().ok()?;
    Some(v.map(|c| &c * &lead))
}

/// Stereographic projection from P1 = (1, 1, 1, 1): (x − w : y − w : z − w).
pub fn stereo(p: &SurfacePoint) -> Result<PlanePoint, GeometryError> {
    let c = &p.coords;
    let w = &c[3];
    normalize_plane([&c[0] - w, &c[1] - w, &c[2] - w])
        .ok_or_else(|| undefined(ModelId::X2Quadric, "φ", p))
}

/// Inverse of [`stereo`]: the second point of the quadric on the line
/// through P1 and (a, b, c, 0), namely e2·(1, 1, 1, 1) − 2s·(a, b, c, 0)
/// with s = a + b + c and e2 = ab + bc + ca.
pub fn stereo_inverse(q: &PlanePoint) -> Result<SurfacePoint, GeometryError> {
    let [a, b, c] = q;
    let s = &(a + b) + c;
    let e2 = &(&(a * b) + &(b * c)) + &(c * a);
    let two_s = &s * &CycNum::int(2);
    let img = vec![
        &e2 - &(&two_s * a),
        &e2 - &(&two_s * b),
        &e2 - &(&two_s * c),
        e2.clone(),
    ];
    if img.iter().all(|x| x.is_zero()) {
        return Err(undefined(ModelId::X2Quadric, "φ⁻¹", q));
    }
    SurfacePoint::new(ModelId::X2Quadric, img)
}

/// Action on the plane w = 0 induced from the quadric: permutation of
/// (x, y, z), with τ acting as −1 which is trivial projectively.
pub fn plane_act(g: GroupElem, q: &PlanePoint) -> PlanePoint {
    let m = g.perm.apply(q);
    normalize_plane(if g.inv { m.map(|c| -c) } else { m }).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Perm3;
    use crate::geometry::named;

    #[test]
    fn p2_on_named_points() {
        assert_eq!(p2(&named::p_plus()).unwrap(), named::x2_p1());
        assert_eq!(p2(&named::p_minus()).unwrap(), named::x2_p_minus());
        assert!(p2(&named::p()).is_err());
        // Q1 lies on Γ_x, which is contracted onto A
        assert_eq!(p2(&named::q(1)).unwrap(), named::orbit_a()[0]);
    }

    #[test]
    fn p2_is_equivariant() {
        let t = SurfacePoint::torus(
            CycNum::int(2),
            CycNum::int(3),
            CycNum::from_rat(crate::algebra::rat(1, 6)),
        )
        .unwrap();
        for g in crate::algebra::group::group_all() {
            let lhs = p2(&t.act(g).unwrap()).unwrap();
            let rhs = p2(&t).unwrap().act(g).unwrap();
            assert_eq!(lhs, rhs, "{g:?}");
        }
    }

    #[test]
    fn inversion_maps_x1_to_x2() {
        let p = SurfacePoint::from_ints(ModelId::X1Cubic, &[1, 1, 1, 1]).unwrap();
        assert_eq!(x1_to_x2(&p).unwrap(), named::x2_p1());
        let sing = SurfacePoint::from_ints(ModelId::X1Cubic, &[1, 0, 0, 0]).unwrap();
        assert!(x1_to_x2(&sing).is_err());
    }

    #[test]
    fn stereo_round_trip_and_s3() {
        let p = named::x2_p_minus();
        let q = stereo(&p).unwrap();
        assert_eq!(stereo_inverse(&q).unwrap(), p);
        assert!(stereo(&named::x2_p1()).is_err());
        let g = GroupElem::new(Perm3::XY, false);
        assert_eq!(stereo(&p.act(g).unwrap()).unwrap(), plane_act(g, &q));
    }
}
