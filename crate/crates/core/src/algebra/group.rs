//! The group G = S3 × Z2 acting on three symbols x, y, z.
//!
//! A permutation is stored as its image table on positions: applying `p`
//! to a coordinate triple `v` yields `w` with `w[p[i]] = v[i]`. With this
//! convention `(g·h)·v = g·(h·v)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([0, 1, 2]);
    /// Swap of x and y.
    pub const XY: Perm3 = Perm3([1, 0, 2]);
    /// Swap of y and z.
    pub const YZ: Perm3 = Perm3([0, 2, 1]);
    /// Swap of x and z.
    pub const XZ: Perm3 = Perm3([2, 1, 0]);
    /// (x, y, z) ↦ (y, z, x).
    pub const XYZ: Perm3 = Perm3([2, 0, 1]);

    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        let mut out = [0u8; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[other.0[i] as usize];
        }
        Perm3(out)
    }

    pub fn inverse(self) -> Perm3 {
        let mut out = [0u8; 3];
        for i in 0..3 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm3(out)
    }

    pub fn is_odd(self) -> bool {
        let p = self.0;
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    pub fn image(self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Move entries: `out[p[i]] = v[i]`.
    pub fn apply<T: Clone>(self, v: &[T; 3]) -> [T; 3] {
        let mut out = v.clone();
        for i in 0..3 {
            out[self.0[i] as usize] = v[i].clone();
        }
        out
    }

    /// Cycle notation on the letters x, y, z.
    pub fn name(self) -> String {
        const L: [char; 3] = ['x', 'y', 'z'];
        if self == Perm3::ID {
            return "id".into();
        }
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in 0..3 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                out.push(L[i]);
                i = self.0[i] as usize;
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Element `(perm, inv)` of S3 × Z2; `inv` is the involution τ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElem {
    pub perm: Perm3,
    pub inv: bool,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem {
        perm: Perm3::ID,
        inv: false,
    };
    pub const TAU: GroupElem = GroupElem {
        perm: Perm3::ID,
        inv: true,
    };
    pub const SIGMA_XY: GroupElem = GroupElem {
        perm: Perm3::XY,
        inv: false,
    };
    pub const SIGMA_XYZ: GroupElem = GroupElem {
        perm: Perm3::XYZ,
        inv: false,
    };

    pub fn new(perm: Perm3, inv: bool) -> Self {
        GroupElem { perm, inv }
    }

    /// Generators σ_xy, σ_xyz, τ.
    pub fn generators() -> [GroupElem; 3] {
        [GroupElem::SIGMA_XY, GroupElem::SIGMA_XYZ, GroupElem::TAU]
    }

    pub fn compose(self, other: GroupElem) -> GroupElem {
        GroupElem {
            perm: self.perm.compose(other.perm),
            inv: self.inv ^ other.inv,
        }
    }

    pub fn inverse(self) -> GroupElem {
        GroupElem {
            perm: self.perm.inverse(),
            inv: self.inv,
        }
    }

    pub fn is_identity(self) -> bool {
        self == GroupElem::IDENTITY
    }

    pub fn name(self) -> String {
        match (self.perm == Perm3::ID, self.inv) {
            (true, false) => "id".into(),
            (true, true) => "τ".into(),
            (false, false) => format!("σ{}", self.perm.name()),
            (false, true) => format!("σ{}·τ", self.perm.name()),
        }
    }

    /// Index in [`group_all`].
    pub fn index(self) -> usize {
        let p = Perm3::all().iter().position(|q| *q == self.perm).unwrap();
        2 * p + self.inv as usize
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// All 12 elements: permutations in lexicographic order, each with τ off then on.
pub fn group_all() -> Vec<GroupElem> {
    Perm3::all()
        .into_iter()
        .flat_map(|p| [GroupElem::new(p, false), GroupElem::new(p, true)])
        .collect()
}

pub fn element_order(g: GroupElem) -> usize {
    let mut k = 1;
    let mut acc = g;
    while !acc.is_identity() {
        acc = acc.compose(g);
        k += 1;
    }
    k
}

/// A subgroup, kept as a sorted element list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<GroupElem>,
}

impl Subgroup {
    /// Subgroup generated by the given elements.
    pub fn generated_by(gens: &[GroupElem]) -> Subgroup {
        let mut set: BTreeSet<GroupElem> = BTreeSet::new();
        set.insert(GroupElem::IDENTITY);
        let mut frontier: Vec<GroupElem> = vec![GroupElem::IDENTITY];
        while let Some(h) = frontier.pop() {
            for &g in gens {
                let k = g.compose(h);
                if set.insert(k) {
                    frontier.push(k);
                }
            }
        }
        Subgroup {
            elements: set.into_iter().collect(),
        }
    }

    pub fn whole() -> Subgroup {
        Subgroup::from_mask(0xFFF)
    }

    pub fn trivial() -> Subgroup {
        Subgroup {
            elements: vec![GroupElem::IDENTITY],
        }
    }

    fn from_mask(mask: u16) -> Subgroup {
        let all = group_all();
        let mut elements: Vec<GroupElem> = (0..12)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| all[i])
            .collect();
        elements.sort();
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: GroupElem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|g| other.contains(*g))
    }

    pub fn is_closed(&self) -> bool {
        self.contains(GroupElem::IDENTITY)
            && self.elements.iter().all(|&g| {
                self.contains(g.inverse())
                    && self.elements.iter().all(|&h| self.contains(g.compose(h)))
            })
    }

    /// A small generating set, greedily chosen in element order.
    pub fn generators(&self) -> Vec<GroupElem> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial();
        for &g in &self.elements {
            if !span.contains(g) {
                gens.push(g);
                span = Subgroup::generated_by(&gens);
            }
        }
        gens
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.name()).collect()
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}⟩",
            self.generators()
                .iter()
                .map(|g| g.name())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Every subgroup of order `n`, found by scanning all element subsets that
/// contain the identity and checking closure.
pub fn subgroups_of_order(n: usize) -> Result<Vec<Subgroup>, AlgebraError> {
    if n == 0 || 12 % n != 0 {
        return Err(AlgebraError::InvalidOrder(n));
    }
    let all = group_all();
    let id_bit = 1u16 << GroupElem::IDENTITY.index();
    let mut table = [[0usize; 12]; 12];
    for (i, g) in all.iter().enumerate() {
        for (j, h) in all.iter().enumerate() {
            table[i][j] = g.compose(*h).index();
        }
    }
    let mut out = Vec::new();
    for mask in 0u16..(1 << 12) {
        if mask & id_bit == 0 || mask.count_ones() as usize != n {
            continue;
        }
        // finite subset closed under products is a subgroup
        let closed = (0..12).filter(|i| mask & (1 << i) != 0).all(|i| {
            (0..12)
                .filter(|j| mask & (1 << j) != 0)
                .all(|j| mask & (1 << table[i][j]) != 0)
        });
        if closed {
            out.push(Subgroup::from_mask(mask));
        }
    }
    out.sort();
    Ok(out)
}

/// All subgroups, ordered by decreasing order and then by element list.
pub fn all_subgroups() -> Vec<Subgroup> {
    let mut out = Vec::new();
    for n in [12, 6, 4, 3, 2, 1] {
        out.extend(subgroups_of_order(n).expect("divisor of 12"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_elements() {
        let g = group_all();
        assert_eq!(g.len(), 12);
        assert!(g.contains(&GroupElem::IDENTITY));
        let set: BTreeSet<_> = g.iter().collect();
        assert_eq!(set.len(), 12);
        for (i, e) in g.iter().enumerate() {
            assert_eq!(e.index(), i);
        }
    }

    #[test]
    fn cayley_table_is_latin_and_associative() {
        let g = group_all();
        for a in &g {
            let row: BTreeSet<_> = g.iter().map(|b| a.compose(*b)).collect();
            let col: BTreeSet<_> = g.iter().map(|b| b.compose(*a)).collect();
            assert_eq!(row.len(), 12);
            assert_eq!(col.len(), 12);
            for b in &g {
                for c in &g {
                    assert_eq!(a.compose(*b).compose(*c), a.compose(b.compose(*c)));
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(GroupElem::TAU), 2);
        assert_eq!(element_order(GroupElem::SIGMA_XYZ), 3);
        assert_eq!(element_order(GroupElem::IDENTITY), 1);
        assert_eq!(element_order(GroupElem::new(Perm3::XYZ, true)), 6);
        for g in group_all() {
            assert_eq!(6 % element_order(g), 0);
        }
    }

    #[test]
    fn permutation_convention() {
        let v = ['x', 'y', 'z'];
        assert_eq!(Perm3::XYZ.apply(&v), ['y', 'z', 'x']);
        assert_eq!(Perm3::XY.apply(&v), ['y', 'x', 'z']);
        let a = Perm3::XY;
        let b = Perm3::XYZ;
        assert_eq!(a.compose(b).apply(&v), a.apply(&b.apply(&v)));
    }

    /// Oracle: count subgroups by generating from every pair of elements.
    fn subgroups_by_generation() -> BTreeSet<Subgroup> {
        let g = group_all();
        let mut out = BTreeSet::new();
        for a in &g {
            for b in &g {
                out.insert(Subgroup::generated_by(&[*a, *b]));
            }
        }
        out
    }

    #[test]
    fn subgroup_counts() {
        let counts: Vec<usize> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&n| subgroups_of_order(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 7, 1, 3, 3, 1]);
        // every subgroup of D6 is 2-generated
        let oracle = subgroups_by_generation();
        let ours: BTreeSet<_> = all_subgroups().into_iter().collect();
        assert_eq!(ours, oracle);
        assert_eq!(
            subgroups_of_order(3).unwrap()[0],
            Subgroup::generated_by(&[GroupElem::SIGMA_XYZ])
        );
        let six = subgroups_of_order(6).unwrap();
        assert!(six.contains(&Subgroup::generated_by(
            &[Perm3::XY, Perm3::XYZ].map(|p| GroupElem::new(p, false))
        )));
        assert!(six.contains(&Subgroup::generated_by(&[
            GroupElem::SIGMA_XYZ,
            GroupElem::TAU
        ])));
        assert!(six.contains(&Subgroup::generated_by(&[
            GroupElem::new(Perm3::XY, true),
            GroupElem::SIGMA_XYZ
        ])));
    }

    #[test]
    fn invalid_order() {
        assert_eq!(subgroups_of_order(5), Err(AlgebraError::InvalidOrder(5)));
        assert_eq!(subgroups_of_order(0), Err(AlgebraError::InvalidOrder(0)));
    }

    #[test]
    fn returned_subgroups_are_closed() {
        for h in all_subgroups() {
            assert!(h.is_closed());
            assert_eq!(12 % h.order(), 0);
            assert_eq!(Subgroup::generated_by(&h.generators()), h);
        }
    }
}
