//! Case analysis proving that no chain of admissible links leads from the
//! torus model to the plane, and the S3 contrast.

pub mod contrast;
pub mod golden;
pub mod tree;

pub use contrast::{s3_contrast, ContrastReport};
pub use golden::{first_difference, golden_skeleton, skeleton, Skeleton};
pub use tree::{
    model_graph, orbit_label, prove_unreachable, refutation_witnesses, CaseNode, CenterRef,
    DescentCheck, ModelGraph, Step, Verdict, Witness,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::{FormulaTable, LinearForm, LinkKind, Node, Transform};

    #[test]
    fn graph_shape() {
        let g = model_graph();
        assert_eq!(g.in_degree(Node::P2), 0);
        let from_x: Vec<_> = g
            .out_edges(Node::X)
            .iter()
            .map(|e| (e.link, e.to))
            .collect();
        assert_eq!(
            from_x,
            vec![(LinkKind::Phi61, Node::X2), (LinkKind::Phi62, Node::X)]
        );
        assert!(g.out_edges(Node::CB0).is_empty());
    }

    #[test]
    fn main_verdict_matches_golden() {
        let v = prove_unreachable(Node::X, Node::P2, &FormulaTable::printed()).unwrap();
        assert_eq!(v.status, "unreachable", "{:?}", v.open_branches);
        assert_eq!(v.incomplete_flags, 0);
        let got = skeleton(&v.tree);
        assert_eq!(first_difference(&got, &golden_skeleton()), None);
        let mut nodes = Vec::new();
        v.tree.walk(&mut nodes);
        let models = nodes
            .iter()
            .filter(|n| matches!(n.step, Step::Model))
            .count();
        assert_eq!(models, 4);
        for n in nodes {
            if let Step::Link { descent, .. } = &n.step {
                assert!(descent.holds, "{}", n.branch_label());
            }
        }
    }

    #[test]
    fn reachable_pairs() {
        let t = FormulaTable::printed();
        let v = prove_unreachable(Node::X, Node::X2, &t).unwrap();
        assert!(v.reachable);
        assert_eq!(v.path, vec![LinkKind::Phi61]);
        let v = prove_unreachable(Node::X, Node::X, &t).unwrap();
        assert!(v.reachable && v.path.is_empty());
    }

    #[test]
    fn witnesses() {
        let v = prove_unreachable(Node::X, Node::P2, &FormulaTable::printed()).unwrap();
        let w = refutation_witnesses(&v.tree);
        let (_, q) = w.iter().find(|(b, _)| b == "X d=3 {Q1,Q2,Q3}").unwrap();
        let Witness::MinusTwoCurves {
            pairings,
            negative_when_maximal,
            classes,
            ..
        } = q
        else {
            panic!("{q:?}")
        };
        assert_eq!(classes.len(), 3);
        assert!(negative_when_maximal);
        assert!(pairings
            .iter()
            .all(|(_, f)| *f == LinearForm::ints(2, 0, -2)));
        let (_, d4) = w
            .iter()
            .find(|(b, _)| b == "X d=4 (no candidates)")
            .unwrap();
        let Witness::NoCandidates { certificates, .. } = d4 else {
            panic!()
        };
        assert!(certificates
            .iter()
            .all(|c| c.exact_stabilizer_points == 0 && c.subgroup.len() == 3));
        let (_, cb0) = w.iter().find(|(b, _)| b == "CB0 d=2 {P1,P−1}").unwrap();
        assert!(
            matches!(cb0, Witness::Position { fibers, .. } if fibers.iter().any(|f| f.contains("reducible")))
        );
    }

    #[test]
    fn corrupted_formula_leaves_an_open_branch() {
        let bad = Transform {
            a: LinearForm::ints(3, 0, -2),
            b: None,
            r: Some(LinearForm::ints(3, 0, -2)),
        };
        let t = FormulaTable::printed().with_override(LinkKind::Phi62, 2, bad);
        let v = prove_unreachable(Node::X, Node::P2, &t).unwrap();
        assert_eq!(v.status, "open");
        assert!(v
            .open_branches
            .iter()
            .any(|b| b.contains("PHI_6_2") && b.contains("lattice oracle")));
    }

    #[test]
    fn contrast_holds_and_control_fails() {
        let r = s3_contrast(42).unwrap();
        assert_eq!(r.status, "reachable", "{r:?}");
        assert!(r.samples >= 100);
        assert!(r.tau_control.passed < r.tau_control.total);
        assert_eq!(s3_contrast(42).unwrap(), r);
    }
}
