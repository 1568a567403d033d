//! Singular points of the cubic X1 and smoothness of the quadric.

use serde::Serialize;

use super::model::{equations, ModelId};
use super::pencils::quadric_matrix;
use super::point::SurfacePoint;
use crate::algebra::linalg;
use crate::algebra::poly::Poly;
use crate::algebra::{rat, CycNum};
use crate::error::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularLocus {
    pub points: Vec<SurfacePoint>,
    /// Each exact step of the derivation, in order.
    pub steps: Vec<String>,
    pub certified: bool,
}

/// Common zeros of F = xyz − (1/3)w²(x + y + z) and its partials.
///
/// On w = 0 the partials in x, y, z become yz, xz, xy, so at most one
/// coordinate is nonzero. On w ≠ 0 the identity x·F_x − y·F_y = (1/3)w²(y − x)
/// forces x = y = z, then F_w forces x = 0, where F_x = −w²/3 ≠ 0.
pub fn x1_singular_locus() -> Result<SingularLocus, GeometryError> {
    let f = &equations(ModelId::X1Cubic)[0];
    let d: Vec<Poly> = (0..4).map(|i| f.derivative(i)).collect();
    let var = |i| Poly::var(4, i);
    let third = CycNum::from_rat(rat(1, 3));
    let w2 = var(3).mul(&var(3));
    let mut steps = Vec::new();
    let mut certified = true;

    // chart w = 0: restrict the partials
    let at_w0: Vec<Poly> = d[..3]
        .iter()
        .map(|p| p.substitute(&[var(0), var(1), var(2), Poly::zero(4)]))
        .collect();
    let monomials = [
        var(1).mul(&var(2)),
        var(0).mul(&var(2)),
        var(0).mul(&var(1)),
    ];
    let ok = at_w0.iter().zip(&monomials).all(|(a, b)| a == b);
    certified &= ok;
    steps.push(format!("w = 0: (F_x, F_y, F_z) = (yz, xz, xy): {ok}"));
    let mut points = Vec::new();
    for i in 0..3 {
        let mut v = vec![CycNum::zero(); 4];
        v[i] = CycNum::one();
        let all_zero = f.eval(&v).is_zero() && d.iter().all(|p| p.eval(&v).is_zero());
        certified &= all_zero;
        points.push(SurfacePoint::new(ModelId::X1Cubic, v)?);
    }
    steps.push("w = 0: solutions are the three coordinate points, each verified".into());

    // chart w ≠ 0
    let lhs = var(0).mul(&d[0]).sub(&var(1).mul(&d[1]));
    let rhs = w2.mul(&var(1).sub(&var(0))).scale(&third);
    let ok = lhs == rhs;
    certified &= ok;
    steps.push(format!(
        "x·F_x − y·F_y = (1/3)w²(y − x): {ok}, so x = y; by symmetry y = z"
    ));
    let diag = [var(0), var(0), var(0), Poly::constant(4, CycNum::one())];
    let fw = d[3].substitute(&diag);
    let ok = fw == var(0).scale(&CycNum::int(-2));
    certified &= ok;
    steps.push(format!("F_w(s, s, s, 1) = −2s: {ok}, so s = 0"));
    let fx = d[0].eval(&[
        CycNum::zero(),
        CycNum::zero(),
        CycNum::zero(),
        CycNum::one(),
    ]);
    let ok = fx == -&third;
    certified &= ok;
    steps.push(format!(
        "F_x(0, 0, 0, 1) = −1/3 ≠ 0: {ok}, no singular point with w ≠ 0"
    ));

    points.sort();
    Ok(SingularLocus {
        points,
        steps,
        certified,
    })
}

/// The quadric is smooth iff its symmetric matrix is nondegenerate.
pub fn quadric_is_smooth() -> bool {
    !linalg::det(&quadric_matrix()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x1_has_three_singular_points() {
        let s = x1_singular_locus().unwrap();
        assert!(s.certified, "{:?}", s.steps);
        let mut want: Vec<SurfacePoint> = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
            .iter()
            .map(|v| SurfacePoint::from_ints(ModelId::X1Cubic, v).unwrap())
            .collect();
        want.sort();
        assert_eq!(s.points, want);
    }

    #[test]
    fn quadric_smooth() {
        assert!(quadric_is_smooth());
    }
}
