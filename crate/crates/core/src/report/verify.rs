//! The registered lemma checks.

use super::{identity_checks, Check, Provenance};
use crate::algebra::CycNum;
use crate::error::ReportError;
use crate::geometry::curves::find_curve;
use crate::geometry::singular::{quadric_is_smooth, x1_singular_locus};
use crate::geometry::{
    curve_contains, enumerate_orbits, named, pencil_reducible_fibers, pencils, ModelId,
    SurfacePoint,
};
use crate::links::{involution_identities, FormulaTable, IdentityCheck, Node};
use crate::prover::{
    model_graph, orbit_label, prove_unreachable, refutation_witnesses, Step, Witness,
};

pub const LEMMAS: [&str; 5] = ["1.4.1", "1.8", "1.5-singular", "links-identities", "2.4.2"];

type Out = (Vec<Check>, Vec<IdentityCheck>);

pub(super) fn run(lemma: &str, table: &FormulaTable) -> Result<Out, ReportError> {
    match lemma {
        "1.4.1" => Ok((torus_orbits()?, vec![])),
        "1.8" => Ok((quadric_orbits()?, vec![])),
        "1.5-singular" => Ok((singular()?, vec![])),
        "links-identities" => {
            let ids = involution_identities(table)?;
            Ok((identity_checks(&ids), ids))
        }
        "2.4.2" => Ok((dead_end(table)?, vec![])),
        _ => Err(ReportError::UnknownLemma(lemma.into(), LEMMAS.join(", "))),
    }
}

fn show_points(ps: &[SurfacePoint]) -> String {
    ps.iter()
        .map(|p| format!("{p:?}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn torus_orbits() -> Result<Vec<Check>, ReportError> {
    let e = enumerate_orbits(ModelId::XTorus, 5)?;
    let labels: Vec<String> = e.orbits.iter().map(orbit_label).collect();
    let mut out = vec![Check::new(
        "enumeration certified complete",
        e.complete,
        format!("{} stabilizer certificates", e.certificates.len()),
        Provenance::Derived,
    )];
    out.push(Check::new(
        "orbits of length at most 5",
        labels == ["P", "{P1,P−1}", "{Q1,Q2,Q3}"],
        labels.join(", "),
        Provenance::Source,
    ));
    for o in &e.orbits {
        out.push(Check::new(
            format!("orbit {}", orbit_label(o)),
            true,
            format!("length {}: {}", o.len(), show_points(&o.points)),
            Provenance::Source,
        ));
    }
    for d in [4, 5] {
        let certs = e.certificates.iter().filter(|c| c.length == d).count();
        out.push(Check::new(
            format!("no orbit of length {d}"),
            e.of_length(d).is_empty(),
            format!("{certs} certificates"),
            Provenance::Source,
        ));
    }
    Ok(out)
}

fn quadric_orbits() -> Result<Vec<Check>, ReportError> {
    let e = enumerate_orbits(ModelId::X2Quadric, 4)?;
    let of = |d| {
        let mut v: Vec<String> = e.of_length(d).into_iter().map(orbit_label).collect();
        v.sort();
        v
    };
    let mut out = vec![
        Check::new(
            "enumeration certified complete",
            e.complete,
            format!("{} certificates", e.certificates.len()),
            Provenance::Derived,
        ),
        Check::new(
            "no G-fixed point",
            of(1).is_empty(),
            "no orbit of length 1",
            Provenance::Source,
        ),
        Check::new(
            "orbits of length 2",
            of(2) == ["{P1,P−1}", "{R1,R2}"],
            of(2).join(", "),
            Provenance::Source,
        ),
        Check::new(
            "orbits of length 3",
            of(3) == ["A", "B"],
            of(3).join(", "),
            Provenance::Source,
        ),
    ];
    let c0 = find_curve(ModelId::X2Quadric, "C0").expect("catalog");
    let c1 = find_curve(ModelId::X2Quadric, "C1").expect("catalog");
    let mut on_c0 = true;
    for p in named::orbit_a().iter().chain(&named::orbit_b()) {
        on_c0 &= curve_contains(&c0, p)?;
    }
    out.push(Check::new(
        "A and B lie on C0",
        on_c0,
        "w = 0 at every point",
        Provenance::Source,
    ));
    let mut r_ok = true;
    for p in [named::r1(), named::r2()] {
        r_ok &= curve_contains(&c0, &p)? && curve_contains(&c1, &p)?;
    }
    out.push(Check::new(
        "R1, R2 lie on C0 ∩ C1",
        r_ok,
        show_points(&[named::r1(), named::r2()]),
        Provenance::Source,
    ));

    let f0 = pencil_reducible_fibers(&pencils::pi0())?;
    let want0 = [
        (vec![CycNum::int(1), CycNum::int(-3)], named::x2_p1()),
        (vec![CycNum::int(1), CycNum::int(3)], named::x2_p_minus()),
    ];
    let ok0 = f0.fibers.len() == 2
        && want0.iter().all(|(b, p)| {
            f0.fibers
                .iter()
                .any(|f| f.base == *b && f.singular_point == *p)
        });
    out.push(Check::new(
        "reducible fibers of Π0",
        ok0,
        fiber_detail(&f0.fibers),
        Provenance::Source,
    ));
    let f1 = pencil_reducible_fibers(&pencils::pi1())?;
    let sing: Vec<SurfacePoint> = f1.fibers.iter().map(|f| f.singular_point.clone()).collect();
    let ok1 = f1.fibers.len() == 2 && sing.contains(&named::r1()) && sing.contains(&named::r2());
    out.push(Check::new(
        "reducible fibers of Π1",
        ok1,
        fiber_detail(&f1.fibers),
        Provenance::Source,
    ));
    Ok(out)
}

fn fiber_detail(fs: &[pencils::ReducibleFiber]) -> String {
    fs.iter()
        .map(|f| {
            let base: Vec<String> = f.base.iter().map(|c| c.to_string()).collect();
            format!(
                "base ({}) singular at {:?}",
                base.join(", "),
                f.singular_point
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn singular() -> Result<Vec<Check>, ReportError> {
    let s = x1_singular_locus()?;
    let want: Vec<SurfacePoint> = [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
        .iter()
        .map(|v| SurfacePoint::from_ints(ModelId::X1Cubic, v))
        .collect::<Result<_, _>>()?;
    let mut got = s.points.clone();
    got.sort();
    let mut want_sorted = want;
    want_sorted.sort();
    Ok(vec![
        Check::new(
            "singular locus of X1 derived exactly",
            s.certified,
            s.steps.join(" | "),
            Provenance::Derived,
        ),
        Check::new(
            "X1 has three singular points",
            got == want_sorted,
            show_points(&got),
            Provenance::Source,
        ),
        Check::new(
            "X2 is smooth",
            quadric_is_smooth(),
            "the quadric form has full rank",
            Provenance::Source,
        ),
    ])
}

fn dead_end(table: &FormulaTable) -> Result<Vec<Check>, ReportError> {
    let g = model_graph();
    let mut out = vec![Check::new(
        "no link leaves CB0",
        g.out_edges(Node::CB0).is_empty(),
        format!("{} edges", g.out_edges(Node::CB0).len()),
        Provenance::Source,
    )];
    let v = prove_unreachable(Node::X, Node::P2, table)?;
    let mut nodes = Vec::new();
    v.tree.walk(&mut nodes);
    let cb0: Vec<_> = nodes
        .iter()
        .filter(|n| n.model == Node::CB0 && n.length.is_some())
        .collect();
    let all_refuted = !cb0.is_empty() && cb0.iter().all(|n| matches!(n.step, Step::Refuted { .. }));
    out.push(Check::new(
        "every CB0 center is refuted",
        all_refuted,
        format!("{} branches", cb0.len()),
        Provenance::Source,
    ));
    for (branch, w) in refutation_witnesses(&v.tree)
        .into_iter()
        .filter(|(b, _)| b.starts_with("CB0"))
    {
        let detail = match &w {
            Witness::Position { detail, .. } => detail.clone(),
            Witness::NoCandidates { certificates, .. } => {
                format!("empty enumeration, {} certificates", certificates.len())
            }
            Witness::Length { detail } => detail.clone(),
            Witness::MinusTwoCurves { pairings, .. } => format!("{pairings:?}"),
        };
        out.push(Check::new(branch, true, detail, Provenance::Derived));
    }
    Ok(out)
}
