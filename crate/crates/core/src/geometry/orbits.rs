//! Enumeration of short orbits through the fixed loci of subgroups.

use serde::Serialize;

use super::fixed::fixed_locus;
use super::model::ModelId;
use super::point::{orbit_of, Orbit};
use crate::algebra::group::subgroups_of_order;
use crate::error::GeometryError;

/// What was examined to rule orbits of a given length in or out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerCertificate {
    pub length: usize,
    /// Names of the subgroup's elements, empty when the length does not divide 12.
    pub subgroup: Vec<String>,
    pub fixed_points: usize,
    pub exact_stabilizer_points: usize,
    /// Positive-dimensional fixed components not fixed pointwise by a larger subgroup.
    pub open_components: usize,
    pub unresolved: u64,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEnumeration {
    pub model: ModelId,
    pub max_length: usize,
    /// Sorted by length, then by first point.
    pub orbits: Vec<Orbit>,
    pub complete: bool,
    pub certificates: Vec<StabilizerCertificate>,
}

impl OrbitEnumeration {
    pub fn of_length(&self, d: usize) -> Vec<&Orbit> {
        self.orbits.iter().filter(|o| o.len() == d).collect()
    }
}

/// All orbits of length at most `max_length`.
///
/// A point with orbit length d has a stabilizer of order 12/d, so it is a
/// fixed point of that subgroup with no larger stabilizer. Each subgroup's
/// fixed locus is solved exactly; the enumeration is flagged incomplete if
/// a locus has unresolved candidates or a fixed curve whose generic point
/// has exactly that stabilizer.
pub fn enumerate_orbits(id: ModelId, max_length: usize) -> Result<OrbitEnumeration, GeometryError> {
    if !id.action_is_regular() {
        return Err(GeometryError::Unsupported(id));
    }
    let mut orbits: Vec<Orbit> = Vec::new();
    let mut certificates = Vec::new();
    let mut complete = true;
    for d in 1..=max_length.min(12) {
        if 12 % d != 0 {
            certificates.push(StabilizerCertificate {
                length: d,
                subgroup: Vec::new(),
                fixed_points: 0,
                exact_stabilizer_points: 0,
                open_components: 0,
                unresolved: 0,
                note: format!("{d} does not divide |G| = 12"),
            });
            continue;
        }
        for h in subgroups_of_order(12 / d)? {
            let locus = fixed_locus(id, &h)?;
            let mut exact = 0;
            for p in &locus.points {
                if p.stabilizer()? != h {
                    continue;
                }
                exact += 1;
                let o = orbit_of(p)?;
                if !orbits.contains(&o) {
                    orbits.push(o);
                }
            }
            let open_components = locus
                .components
                .iter()
                .filter(|c| c.extra_stabilizer.is_empty())
                .count();
            if open_components > 0 || locus.unresolved > 0 {
                complete = false;
            }
            let note = if locus.boundary.is_empty() {
                String::new()
            } else {
                locus.boundary.join("; ")
            };
            certificates.push(StabilizerCertificate {
                length: d,
                subgroup: h.names(),
                fixed_points: locus.points.len(),
                exact_stabilizer_points: exact,
                open_components,
                unresolved: locus.unresolved,
                note,
            });
        }
    }
    orbits.sort_by(|a, b| (a.len(), &a.points).cmp(&(b.len(), &b.points)));
    Ok(OrbitEnumeration {
        model: id,
        max_length,
        orbits,
        complete,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CycNum;
    use crate::geometry::point::SurfacePoint;

    #[test]
    fn torus_short_orbits() {
        let e = enumerate_orbits(ModelId::XTorus, 5).unwrap();
        assert!(e.complete);
        let lens: Vec<usize> = e.orbits.iter().map(|o| o.len()).collect();
        assert_eq!(lens, vec![1, 2, 3]);
        assert_eq!(e.orbits[0].points, vec![SurfacePoint::torus_root(0, 0)]);
        let q1 = SurfacePoint::torus(CycNum::int(1), CycNum::int(-1), CycNum::int(-1)).unwrap();
        assert!(e.orbits[2].contains(&q1));
    }

    #[test]
    fn quadric_short_orbits() {
        let e = enumerate_orbits(ModelId::X2Quadric, 5).unwrap();
        assert!(e.complete);
        let lens: Vec<usize> = e.orbits.iter().map(|o| o.len()).collect();
        assert_eq!(lens, vec![2, 2, 3, 3]);
    }

    #[test]
    fn zero_length_is_empty() {
        for id in [
            ModelId::YP2,
            ModelId::XTorus,
            ModelId::X1Cubic,
            ModelId::X2Quadric,
        ] {
            let e = enumerate_orbits(id, 0).unwrap();
            assert!(e.orbits.is_empty() && e.complete);
        }
        assert!(enumerate_orbits(ModelId::X0Cubic, 3).is_err());
    }
}
