//! Structural shape of the case tree, compared against a checked-in
//! expectation.

use serde::{Deserialize, Serialize};

use super::tree::{CaseNode, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    pub model: String,
    pub branches: Vec<BranchSkeleton>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSkeleton {
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    /// "link" or "refuted:<witness kind>".
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub back_edge: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtree: Option<Skeleton>,
}

pub const GOLDEN_TREE: &str = include_str!("../../golden/case_tree.json");

pub fn golden_skeleton() -> Skeleton {
    serde_json::from_str(GOLDEN_TREE).expect("checked-in golden tree parses")
}

/// Only meaningful on model nodes.
pub fn skeleton(n: &CaseNode) -> Skeleton {
    let branches = n
        .children
        .iter()
        .map(|b| {
            let mut s = BranchSkeleton {
                d: b.length.unwrap_or(0),
                center: b.center.as_ref().map(|c| c.label.clone()),
                outcome: String::new(),
                link: None,
                target: None,
                back_edge: false,
                subtree: None,
            };
            match &b.step {
                Step::Link {
                    link,
                    target,
                    back_edge,
                    ..
                } => {
                    s.outcome = "link".into();
                    s.link = Some(link.name().into());
                    s.target = Some(target.name().into());
                    s.back_edge = *back_edge;
                    s.subtree = b.children.first().map(skeleton);
                }
                Step::Refuted { witness } => s.outcome = format!("refuted:{}", witness.kind_name()),
                Step::Model => s.outcome = "model".into(),
            }
            s
        })
        .collect();
    Skeleton {
        model: n.model.name().into(),
        branches,
    }
}

/// First difference between two skeletons, as a path.
pub fn first_difference(got: &Skeleton, want: &Skeleton) -> Option<String> {
    if got.model != want.model {
        return Some(format!("model {} vs {}", got.model, want.model));
    }
    if got.branches.len() != want.branches.len() {
        return Some(format!(
            "{}: {} branches vs {}",
            got.model,
            got.branches.len(),
            want.branches.len()
        ));
    }
    for (g, w) in got.branches.iter().zip(&want.branches) {
        let here = format!(
            "{} d={} {}",
            got.model,
            g.d,
            g.center.as_deref().unwrap_or("-")
        );
        match (&g.subtree, &w.subtree) {
            (Some(a), Some(b)) => {
                if let Some(d) = first_difference(a, b) {
                    return Some(format!("{here} > {d}"));
                }
            }
            (None, None) => {}
            _ => return Some(format!("{here}: subtree presence differs")),
        }
        let strip = |b: &BranchSkeleton| BranchSkeleton {
            subtree: None,
            ..b.clone()
        };
        if strip(g) != strip(w) {
            return Some(format!("{here}: {:?} vs {:?}", strip(g), strip(w)));
        }
    }
    None
}
