//! Named points of the torus model and of the quadric.

use super::model::ModelId;
use super::point::SurfacePoint;
use crate::algebra::CycNum;

/// The G-fixed point P = (1, 1, 1) of the torus model.
pub fn p() -> SurfacePoint {
    SurfacePoint::torus_root(0, 0)
}

/// P1 = (λ, λ, λ).
pub fn p_plus() -> SurfacePoint {
    SurfacePoint::torus_root(2, 2)
}

/// P−1 = (λ², λ², λ²).
pub fn p_minus() -> SurfacePoint {
    SurfacePoint::torus_root(4, 4)
}

/// Q1 = (1, −1, −1), Q2 = (−1, 1, −1), Q3 = (−1, −1, 1).
pub fn q(i: usize) -> SurfacePoint {
    let mut v = [CycNum::int(-1), CycNum::int(-1), CycNum::int(-1)];
    v[i - 1] = CycNum::one();
    let [x, y, z] = v;
    SurfacePoint::torus(x, y, z).expect("on the torus")
}

fn quadric(v: Vec<CycNum>) -> SurfacePoint {
    SurfacePoint::new(ModelId::X2Quadric, v).expect("on the quadric")
}

fn quadric_ints(v: &[i64]) -> SurfacePoint {
    SurfacePoint::from_ints(ModelId::X2Quadric, v).expect("on the quadric")
}

pub fn x2_p1() -> SurfacePoint {
    quadric_ints(&[1, 1, 1, 1])
}

pub fn x2_p_minus() -> SurfacePoint {
    quadric_ints(&[-1, -1, -1, 1])
}

/// R1 = (1, λ, λ², 0).
pub fn r1() -> SurfacePoint {
    quadric(vec![
        CycNum::one(),
        CycNum::omega(),
        CycNum::omega2(),
        CycNum::zero(),
    ])
}

/// R2 = (1, λ², λ, 0).
pub fn r2() -> SurfacePoint {
    quadric(vec![
        CycNum::one(),
        CycNum::omega2(),
        CycNum::omega(),
        CycNum::zero(),
    ])
}

/// Orbit A: the coordinate points of C0.
pub fn orbit_a() -> Vec<SurfacePoint> {
    vec![
        quadric_ints(&[1, 0, 0, 0]),
        quadric_ints(&[0, 1, 0, 0]),
        quadric_ints(&[0, 0, 1, 0]),
    ]
}

/// Orbit B = {(−1, 2, 2, 0), (2, −1, 2, 0), (2, 2, −1, 0)}.
pub fn orbit_b() -> Vec<SurfacePoint> {
    vec![
        quadric_ints(&[-1, 2, 2, 0]),
        quadric_ints(&[2, -1, 2, 0]),
        quadric_ints(&[2, 2, -1, 0]),
    ]
}
