//! Points of the models, kept in a normal form so equality is exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::{check_arity, raw_image, ModelId, SurfaceModel};
use crate::algebra::group::group_all;
use crate::algebra::{CycNum, GroupElem, RootOfUnity, Subgroup};
use crate::error::GeometryError;

/// A point with each projective factor scaled so its first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub model: ModelId,
    pub coords: Vec<CycNum>,
}

pub(crate) fn normalize(id: ModelId, coords: &[CycNum]) -> Result<Vec<CycNum>, GeometryError> {
    check_arity(id, coords)?;
    let mut out = Vec::with_capacity(coords.len());
    let mut off = 0;
    for &n in id.factors() {
        let block = &coords[off..off + n];
        let lead = block
            .iter()
            .find(|c| !c.is_zero())
            .expect("checked nonzero");
        let inv = lead.inv()?;
        out.extend(block.iter().map(|c| c * &inv));
        off += n;
    }
    Ok(out)
}

impl SurfacePoint {
    /// Validate arity, nonvanishing factors and membership, then normalize.
    pub fn new(model: ModelId, coords: Vec<CycNum>) -> Result<Self, GeometryError> {
        let coords = normalize(model, &coords)?;
        if !SurfaceModel::get(model).contains(&coords)? {
            return Err(GeometryError::NotOnModel(model));
        }
        Ok(SurfacePoint { model, coords })
    }

    pub fn from_ints(model: ModelId, coords: &[i64]) -> Result<Self, GeometryError> {
        SurfacePoint::new(model, coords.iter().map(|&c| CycNum::int(c)).collect())
    }

    /// Point of the open torus (x, y, z) with xyz = 1.
    pub fn torus(x: CycNum, y: CycNum, z: CycNum) -> Result<Self, GeometryError> {
        SurfacePoint::new(
            ModelId::XTorus,
            vec![x, CycNum::one(), y, CycNum::one(), z, CycNum::one()],
        )
    }

    /// Torus point (ζ^a, ζ^b, ζ^{−a−b}).
    pub fn torus_root(a: i64, b: i64) -> Self {
        let r = |k: i64| RootOfUnity::new(k).to_cyc();
        SurfacePoint::torus(r(a), r(b), r(-a - b)).expect("on the torus")
    }

    /// Affine torus coordinates (x, y, z) if the point lies in the open torus.
    pub fn torus_coords(&self) -> Option<[CycNum; 3]> {
        if self.model != ModelId::XTorus {
            return None;
        }
        let c = &self.coords;
        let mut out = [CycNum::zero(), CycNum::zero(), CycNum::zero()];
        for k in 0..3 {
            let (num, den) = (&c[2 * k], &c[2 * k + 1]);
            if num.is_zero() || den.is_zero() {
                return None;
            }
            out[k] = num.checked_div(den).ok()?;
        }
        Some(out)
    }

    /// Image under `g`. Fails only on X0 where τ is not regular.
    pub fn act(&self, g: GroupElem) -> Result<SurfacePoint, GeometryError> {
        let img = raw_image(self.model, g, &self.coords)?;
        Ok(SurfacePoint {
            model: self.model,
            coords: normalize(self.model, &img)?,
        })
    }

    pub fn stabilizer(&self) -> Result<Subgroup, GeometryError> {
        let mut fix = Vec::new();
        for g in group_all() {
            if &self.act(g)? == self {
                fix.push(g);
            }
        }
        Ok(Subgroup::generated_by(&fix))
    }
}

impl fmt::Debug for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        match self.model {
            ModelId::XTorus => write!(
                f,
                "({}:{}, {}:{}, {}:{})",
                parts[0], parts[1], parts[2], parts[3], parts[4], parts[5]
            ),
            _ => write!(f, "({})", parts.join(":")),
        }
    }
}

/// An orbit: sorted points and the stabilizer of the first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub model: ModelId,
    pub points: Vec<SurfacePoint>,
    pub stabilizer: Subgroup,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &SurfacePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

pub fn orbit_of(p: &SurfacePoint) -> Result<Orbit, GeometryError> {
    let mut points = Vec::new();
    for g in group_all() {
        points.push(p.act(g)?);
    }
    points.sort();
    points.dedup();
    let stabilizer = points[0].stabilizer()?;
    Ok(Orbit {
        model: p.model,
        points,
        stabilizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let p = SurfacePoint::from_ints(ModelId::X2Quadric, &[2, 2, 2, 2]).unwrap();
        assert_eq!(
            p,
            SurfacePoint::from_ints(ModelId::X2Quadric, &[1, 1, 1, 1]).unwrap()
        );
        assert!(SurfacePoint::from_ints(ModelId::X2Quadric, &[1, 0, 0, 0]).is_ok());
        assert!(matches!(
            SurfacePoint::from_ints(ModelId::X2Quadric, &[1, 1, 0, 0]),
            Err(GeometryError::NotOnModel(_))
        ));
    }

    #[test]
    fn orbit_stabilizer() {
        let p = SurfacePoint::torus_root(0, 0);
        let o = orbit_of(&p).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o.stabilizer.order(), 12);
        let q = SurfacePoint::torus_root(2, 2);
        let o = orbit_of(&q).unwrap();
        assert_eq!(o.len(), 2);
        assert_eq!(o.len() * o.stabilizer.order(), 12);
    }

    #[test]
    fn x0_tau_undefined_on_coordinate_lines() {
        let p = SurfacePoint::from_ints(ModelId::X0Cubic, &[1, 0, 0, 0]).unwrap();
        assert!(matches!(
            p.act(GroupElem::TAU),
            Err(GeometryError::UndefinedImage { .. })
        ));
        let q = SurfacePoint::from_ints(ModelId::X0Cubic, &[1, 1, 1, 1]).unwrap();
        assert_eq!(q.act(GroupElem::TAU).unwrap(), q);
    }
}
