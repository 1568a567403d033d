//! Enumeration of (−1)-classes and of (−2)-classes carried by known curves.

use serde::Serialize;

use super::blowup::BlowupResult;
use super::{sub, DivClass, GPicardLattice};
use num_integer::Roots;
use num_traits::Signed;

use crate::algebra::{linalg, rat_int};
use crate::error::LatticeError;
use crate::geometry::curves::{catalog, curve_contains, find_curve};
use crate::geometry::pencils::quadric_matrix;
use crate::geometry::{ModelId, Orbit};

/// Upper bound for |D·h| over classes with D² = s and K·D = k, where h is the
/// first basis vector (h² = 1). From the Hodge index theorem: writing both
/// classes as a multiple of K plus a part in K⊥, where the form is negative
/// definite, |D·h − (h·K)k/K²|² ≤ (h⊥²)(D⊥²).
pub fn hodge_bound(l: &GPicardLattice, s: i64, k: i64) -> i64 {
    let d = rat_int(l.k2());
    let hk = rat_int(l.k[0] * l.gram[0][0]);
    let centre = (hk.clone() * rat_int(k) / d.clone()).abs();
    let h_perp = rat_int(1) - hk.clone() * hk / d.clone();
    let d_perp = rat_int(s) - rat_int(k * k) / d;
    let prod = h_perp * d_perp;
    let mut n = centre.ceil().to_integer().try_into().unwrap_or(i64::MAX);
    loop {
        let t = rat_int(n + 1) - centre.clone();
        if t.clone() * t > prod {
            return n;
        }
        n += 1;
    }
}

fn is_standard_diagonal(l: &GPicardLattice) -> bool {
    let n = l.rank();
    (0..n).all(|i| {
        (0..n).all(|j| {
            l.gram[i][j]
                == if i != j {
                    0
                } else if i == 0 {
                    1
                } else {
                    -1
                }
        })
    })
}

/// All classes with D² = `square` and K·D = `kdeg`.
///
/// On a lattice with form diag(1, −1, …, −1) the first coefficient is
/// bounded by [`hodge_bound`] and the rest lie on a sphere, so the
/// enumeration is exhaustive. Other forms are searched in the box
/// |coefficient| ≤ 3·K², which is exhaustive only up to rank 4.
pub fn classes_with(
    l: &GPicardLattice,
    square: i64,
    kdeg: i64,
) -> Result<Vec<DivClass>, LatticeError> {
    let mut out = Vec::new();
    if is_standard_diagonal(l) {
        let b = hodge_bound(l, square, kdeg);
        let weights: Vec<i64> = l.k[1..].iter().map(|x| -x).collect();
        for a in -b..=b {
            let q = a * a - square;
            if q < 0 {
                continue;
            }
            // K·D = k0·a + Σ (−kᵢ) cᵢ
            let target = kdeg - l.k[0] * a;
            let mut cur = vec![a];
            sphere(&weights, q, target, &mut cur, &mut out);
        }
    } else {
        if l.rank() > 4 {
            return Err(LatticeError::SearchUnsupported(format!(
                "{} has rank {} and no diagonal basis",
                l.name,
                l.rank()
            )));
        }
        let b = 3 * l.k2();
        let n = l.rank();
        let mut v = vec![-b; n];
        loop {
            if l.pair(&v, &v) == square && l.pair(&v, &l.k) == kdeg {
                out.push(v.clone());
            }
            let mut i = 0;
            while i < n && v[i] == b {
                v[i] = -b;
                i += 1;
            }
            if i == n {
                break;
            }
            v[i] += 1;
        }
    }
    out.sort();
    Ok(out)
}

fn sphere(w: &[i64], q: i64, target: i64, cur: &mut Vec<i64>, out: &mut Vec<DivClass>) {
    let idx = cur.len() - 1;
    if idx == w.len() {
        if q == 0 && target == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let rest: i64 = w[idx..].iter().map(|x| x * x).sum();
    if target * target > rest * q {
        return;
    }
    let r = q.sqrt();
    for c in -r..=r {
        cur.push(c);
        sphere(w, q - c * c, target - w[idx] * c, cur, out);
        cur.pop();
    }
}

/// Classes of (−1)-curves: D² = −1 and K·D = −1.
pub fn minus_one_classes(l: &GPicardLattice) -> Result<Vec<DivClass>, LatticeError> {
    classes_with(l, -1, -1)
}

/// A known curve on the base surface and the exceptional indices of the
/// blown-up points it passes through.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveIncidence {
    pub label: String,
    pub class: DivClass,
    pub through: Vec<usize>,
}

/// Strict transforms of known curves that become (−2)-classes.
pub fn minus_two_effective_candidates(
    b: &BlowupResult,
    incidences: &[CurveIncidence],
) -> Vec<(String, DivClass)> {
    let l = &b.lattice;
    let mut out: Vec<(String, DivClass)> = Vec::new();
    for c in incidences {
        let mut d = b.pullback(&c.class);
        for &i in &c.through {
            d = sub(&d, &b.exceptionals[i]);
        }
        if l.pair(&d, &d) == -2 && l.pair(&d, &l.k) == 0 && !out.iter().any(|(_, x)| *x == d) {
            out.push((c.label.clone(), d));
        }
    }
    out
}

/// Incidences of the catalog curves with an orbit, plus curves through
/// several orbit points found directly: fibers of the coordinate projections
/// on the torus model; lines and plane sections on the quadric.
pub fn incidences_for(orbit: &Orbit) -> Result<Vec<CurveIncidence>, LatticeError> {
    let mut out = Vec::new();
    let mut push = |label: String, class: DivClass, through: Vec<usize>| {
        if !through.is_empty()
            && !out
                .iter()
                .any(|c: &CurveIncidence| c.class == class && c.through == through)
        {
            out.push(CurveIncidence {
                label,
                class,
                through,
            });
        }
    };
    for c in catalog(orbit.model) {
        let mut through = Vec::new();
        for (i, p) in orbit.points.iter().enumerate() {
            if curve_contains(&c, p)? {
                through.push(i);
            }
        }
        push(c.label.clone(), c.class.clone(), through);
    }
    let pts = &orbit.points;
    match orbit.model {
        ModelId::XTorus => {
            for (axis, name) in ["x", "y", "z"].iter().enumerate() {
                let class = find_curve(ModelId::XTorus, &format!("E_{name}"))
                    .expect("fiber class")
                    .class;
                for p in pts {
                    let Some(cp) = p.torus_coords() else { continue };
                    let through: Vec<usize> = (0..pts.len())
                        .filter(|&j| pts[j].torus_coords().is_some_and(|cq| cq[axis] == cp[axis]))
                        .collect();
                    if through.len() >= 2 {
                        push(format!("{name} = const"), class.clone(), through);
                    }
                }
            }
        }
        ModelId::X2Quadric => {
            let q = quadric_matrix();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let bij = linalg::dot(&pts[i].coords, &linalg::mat_vec(&q, &pts[j].coords));
                    if bij.is_zero() {
                        // the line joining them lies on the quadric; its ruling
                        // does not affect the square or the canonical degree
                        push(format!("line {i}{j}"), vec![1, 0], vec![i, j]);
                    }
                }
            }
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        let m = vec![
                            pts[i].coords.clone(),
                            pts[j].coords.clone(),
                            pts[k].coords.clone(),
                        ];
                        if linalg::rank(&m) < 3 {
                            continue;
                        }
                        let plane = &linalg::kernel(&m, 4)[0];
                        let through: Vec<usize> = (0..pts.len())
                            .filter(|&t| linalg::dot(plane, &pts[t].coords).is_zero())
                            .collect();
                        push("plane section".into(), vec![1, 1], through);
                    }
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{named, orbit_of};
    use crate::lattice::{blow_up_orbit, dp6_lattice, plane_lattice, quadric_lattice};

    fn count(l: &GPicardLattice) -> usize {
        minus_one_classes(l).unwrap().len()
    }

    #[test]
    fn exceptional_counts() {
        let x = dp6_lattice();
        assert_eq!(count(&x), 6);
        assert_eq!(count(&plane_lattice()), 0);
        assert_eq!(count(&quadric_lattice()), 0);
        let pm = orbit_of(&named::p_plus()).unwrap();
        let q = orbit_of(&named::q(1)).unwrap();
        let dp4 = blow_up_orbit(&x, &pm).unwrap().lattice;
        assert_eq!(count(&dp4), 16);
        let dp3 = blow_up_orbit(&x, &q).unwrap().lattice;
        assert_eq!(count(&dp3), 27);
        let dp1 = blow_up_orbit(&dp3, &pm).unwrap().lattice;
        assert_eq!(count(&dp1), 240);
    }

    #[test]
    fn hodge_bound_within_box_for_degree_at_least_two() {
        let x = dp6_lattice();
        assert_eq!(hodge_bound(&x, -1, -1), 1);
        let pm = orbit_of(&named::p_plus()).unwrap();
        let dp4 = blow_up_orbit(&x, &pm).unwrap().lattice;
        assert!(hodge_bound(&dp4, -1, -1) <= 3 * dp4.k2());
        // on a degree one surface 3h − 2e1 − e2 − … − e7 exceeds 3·K²
        let q = orbit_of(&named::q(1)).unwrap();
        let dp1 = blow_up_orbit(&blow_up_orbit(&x, &q).unwrap().lattice, &pm)
            .unwrap()
            .lattice;
        let max = minus_one_classes(&dp1)
            .unwrap()
            .iter()
            .map(|d| d[0].abs())
            .max()
            .unwrap();
        assert!(max > 3 * dp1.k2() && max <= hodge_bound(&dp1, -1, -1));
    }

    #[test]
    fn minus_two_candidates_on_torus_orbits() {
        let x = dp6_lattice();
        let q = orbit_of(&named::q(1)).unwrap();
        let b = blow_up_orbit(&x, &q).unwrap();
        let c = minus_two_effective_candidates(&b, &incidences_for(&q).unwrap());
        let labels: Vec<&str> = c.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(c.len(), 3, "{labels:?}");
        assert!(labels.iter().all(|l| l.starts_with("E_")));
        let pm = orbit_of(&named::p_plus()).unwrap();
        let b = blow_up_orbit(&x, &pm).unwrap();
        assert!(minus_two_effective_candidates(&b, &incidences_for(&pm).unwrap()).is_empty());
    }

    #[test]
    fn quadric_orbits_in_general_position() {
        for p in [
            named::r1(),
            named::x2_p1(),
            named::orbit_a()[0].clone(),
            named::orbit_b()[0].clone(),
        ] {
            let o = orbit_of(&p).unwrap();
            let b = blow_up_orbit(&quadric_lattice(), &o).unwrap();
            assert!(
                minus_two_effective_candidates(&b, &incidences_for(&o).unwrap()).is_empty(),
                "{p:?}"
            );
        }
    }
}
