//! Linear forms in the coefficient data (a, b, r) and the link formula table.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::LinkKind;
use crate::algebra::{rat, rat_int, Rat};

/// c_a·a + c_b·b + c_r·r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(pub [Rat; 3]);

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl LinearForm {
    pub fn new(a: Rat, b: Rat, r: Rat) -> Self {
        LinearForm([a, b, r])
    }

    pub fn ints(a: i64, b: i64, r: i64) -> Self {
        Self::new(rat_int(a), rat_int(b), rat_int(r))
    }

    pub fn zero() -> Self {
        Self::ints(0, 0, 0)
    }

    pub fn a() -> Self {
        Self::ints(1, 0, 0)
    }

    pub fn b() -> Self {
        Self::ints(0, 1, 0)
    }

    pub fn r() -> Self {
        Self::ints(0, 0, 1)
    }

    pub fn eval(&self, a: &Rat, b: &Rat, r: &Rat) -> Rat {
        let [ca, cb, cr] = &self.0;
        ca * a + cb * b + cr * r
    }

    pub fn sub(&self, o: &LinearForm) -> LinearForm {
        LinearForm(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn add(&self, o: &LinearForm) -> LinearForm {
        LinearForm(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn scale(&self, c: &Rat) -> LinearForm {
        LinearForm(std::array::from_fn(|i| &self.0[i] * c))
    }

    /// Replace a, b, r by the given forms.
    pub fn substitute(&self, a: &LinearForm, b: &LinearForm, r: &LinearForm) -> LinearForm {
        a.scale(&self.0[0])
            .add(&b.scale(&self.0[1]))
            .add(&r.scale(&self.0[2]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == rat_int(0))
    }

    /// Negative for every a > 0 and r > a, whatever b is: with r = a + t the
    /// form is (c_a + c_r)·a + c_r·t + c_b·b.
    pub fn negative_if_maximal(&self) -> bool {
        let [ca, cb, cr] = &self.0;
        let z = rat_int(0);
        let sa = ca + cr;
        *cb == z && sa <= z && *cr <= z && !(sa == z && *cr == z)
    }

    /// Negative for every a > 0 and b < 0, with r absent.
    pub fn negative_if_b_negative(&self) -> bool {
        let [ca, cb, cr] = &self.0;
        let z = rat_int(0);
        *cr == z && *ca <= z && *cb >= z && !(*ca == z && *cb == z)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, v) in self.0.iter().zip(["a", "b", "r"]) {
            if *c == rat_int(0) {
                continue;
            }
            let neg = *c < rat_int(0);
            let mag = if neg { -c.clone() } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "−",
                (true, false) => "",
                (false, true) => " − ",
                (false, false) => " + ",
            };
            let coeff = if mag == rat_int(1) {
                String::new()
            } else {
                mag.to_string()
            };
            write!(f, "{sign}{coeff}{v}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// New coefficient data as forms in the old (a, b, r). `b` is present when
/// the target is a conic bundle, `r` when the link has a new center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transform {
    pub a: LinearForm,
    pub b: Option<LinearForm>,
    pub r: Option<LinearForm>,
}

impl Transform {
    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Transform) -> Transform {
        let b = first.b.clone().unwrap_or_else(LinearForm::zero);
        let r = first.r.clone().unwrap_or_else(LinearForm::zero);
        let sub = |f: &LinearForm| f.substitute(&first.a, &b, &r);
        Transform {
            a: sub(&self.a),
            b: self.b.as_ref().map(sub),
            r: self.r.as_ref().map(sub),
        }
    }

    /// Components that differ, by name.
    pub fn differences(&self, o: &Transform) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.a != o.a {
            out.push("a");
        }
        if self.b != o.b {
            out.push("b");
        }
        if self.r != o.r {
            out.push("r");
        }
        out
    }
}

/// A formula as printed, with a note when it is known to disagree with the
/// lattice oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaEntry {
    pub transform: Transform,
    pub source: String,
    pub documented_discrepancy: Option<String>,
}

/// Closed formulas for each link kind; ELEM depends on the center length.
#[derive(Clone, Debug, Default)]
pub struct FormulaTable {
    overrides: BTreeMap<(LinkKind, usize), FormulaEntry>,
}

fn form(a: Rat, b: Rat, r: Rat) -> LinearForm {
    LinearForm::new(a, b, r)
}

impl FormulaTable {
    pub fn printed() -> Self {
        Self::default()
    }

    /// Replace one formula, as a test fixture would.
    pub fn with_override(mut self, kind: LinkKind, d: usize, transform: Transform) -> Self {
        let source = format!("override of {}", kind.name());
        self.overrides.insert(
            (kind, d),
            FormulaEntry {
                transform,
                source,
                documented_discrepancy: None,
            },
        );
        self
    }

    pub fn get(&self, kind: LinkKind, d: usize) -> Option<FormulaEntry> {
        if let Some(e) = self.overrides.get(&(kind, d)) {
            return Some(e.clone());
        }
        printed_formula(kind, d)
    }
}

fn printed_formula(kind: LinkKind, d: usize) -> Option<FormulaEntry> {
    use LinkKind::*;
    let entry = |a, b, r, source: &str, note: Option<&str>| FormulaEntry {
        transform: Transform { a, b, r },
        source: source.into(),
        documented_discrepancy: note.map(String::from),
    };
    let i = LinearForm::ints;
    Some(match kind {
        Phi61 => entry(
            form(rat(3, 2), rat_int(0), rat(-1, 2)),
            None,
            Some(i(2, 0, -1)),
            "a2 = 3/2·a1 − 1/2·r1, r2 = 2a1 − r1",
            None,
        ),
        Phi62 => entry(i(2, 0, -1), None, Some(i(3, 0, -2)), "a1 = 2a − r, r1 = 3a − 2r", None),
        Phi63 => return None,
        Phi82Pi0 | Phi82Pi1 => entry(i(2, 0, -1), Some(i(-2, 0, 2)), None, "a1 = 2a − r, b1 = 2(r − a)", None),
        Elem => {
            let d = d as i64;
            entry(
                i(1, 0, 0),
                Some(i(d, 1, -d)),
                Some(i(-2, 0, 2)),
                "a1′ = a1, b1′ = b1 + d1(a1 − r1), r1′ = 2(r1 − a1)",
                Some("the printed r1′ = 2(r1 − a1) contradicts the class map x1 ↦ d1·f1 − x1 printed beside it, which gives 2a1 − r1"),
            )
        }
        Phi82Inv => entry(
            form(rat_int(1), rat(2, 3), rat_int(0)),
            None,
            Some(i(1, 1, 0)),
            "a = a1 + 2/3·b1, r = a1 + b1",
            Some("the printed 2/3 contradicts −K ↦ −K − x and 2f ↦ −K − 2x printed beside it, which give a = a1 + b1/2"),
        ),
        Phi83A | Phi83B => entry(i(2, 0, -1), None, Some(i(4, 0, -3)), "inverse of the projection: a = 2a2 − r2, r = 4a2 − 3r2", None),
        Phi86 => entry(i(7, 0, -6), None, Some(i(8, 0, -7)), "a1 = 7a − 6r, r1 = 8a − 7r", None),
    })
}
