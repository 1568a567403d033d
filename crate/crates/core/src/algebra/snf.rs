//! Smith normal form of small integer matrices and the binomial systems
//! `t^B = c` over the two-dimensional torus that it solves.

use super::RootOfUnity;

pub type IMatrix = Vec<Vec<i64>>;

fn eye(n: usize) -> IMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

pub fn imat_mul(a: &IMatrix, b: &IMatrix) -> IMatrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * br[j]).sum())
                .collect()
        })
        .collect()
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry non-negative and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IMatrix,
    pub d: IMatrix,
    pub v: IMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i]).collect()
    }
}

pub fn smith_normal_form(a: &IMatrix) -> Smith {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut d = a.clone();
    let mut u = eye(m);
    let mut v = eye(n);

    let swap_rows = |x: &mut IMatrix, i: usize, j: usize| x.swap(i, j);
    let swap_cols = |x: &mut IMatrix, i: usize, j: usize| {
        for r in x.iter_mut() {
            r.swap(i, j);
        }
    };
    // row_i -= q row_j
    let row_sub = |x: &mut IMatrix, i: usize, j: usize, q: i64| {
        let rj = x[j].clone();
        for (a, b) in x[i].iter_mut().zip(rj) {
            *a -= q * b;
        }
    };
    let col_sub = |x: &mut IMatrix, i: usize, j: usize, q: i64| {
        for r in x.iter_mut() {
            r[i] -= q * r[j];
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..m {
            let q = d[i][t].div_euclid(d[t][t]);
            if q != 0 {
                row_sub(&mut d, i, t, q);
                row_sub(&mut u, i, t, q);
            }
            if d[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..n {
            let q = d[t][j].div_euclid(d[t][t]);
            if q != 0 {
                col_sub(&mut d, j, t, q);
                col_sub(&mut v, j, t, q);
            }
            if d[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold any entry not divisible by the pivot into row t
        let bad = (t + 1..m)
            .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| d[i][j] % d[t][t] != 0);
        if let Some((i, _)) = bad {
            row_sub(&mut d, t, i, -1);
            row_sub(&mut u, t, i, -1);
            continue;
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    Smith { u, d, v }
}

/// Solutions of a binomial system on the torus `(C*)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSolution {
    /// Points, each coordinate a sixth root of unity.
    pub points: Vec<Vec<RootOfUnity>>,
    /// Number of complex solutions whose coordinates leave μ₆.
    pub unresolved: u64,
    /// Dimension of the solution set (number of free torus directions).
    pub free_dims: usize,
}

/// Solve `∏ᵢ tᵢ^{B[j][i]} = c[j]` for all rows `j`.
///
/// With `U·B·V = D` put `tᵢ = ∏ₖ sₖ^{V[i][k]}`; the system becomes
/// `sₖ^{dₖ} = ∏ⱼ c[j]^{U[k][j]}`. Zero diagonal entries are free
/// directions, rows past the rank are consistency conditions.
pub fn solve_binomial(b: &IMatrix, c: &[RootOfUnity], nvars: usize) -> BinomialSolution {
    assert_eq!(b.len(), c.len());
    if b.is_empty() {
        return BinomialSolution {
            points: Vec::new(),
            unresolved: 0,
            free_dims: nvars,
        };
    }
    let snf = smith_normal_form(b);
    let diag = snf.diagonal();
    let rhs: Vec<RootOfUnity> = snf
        .u
        .iter()
        .map(|row| {
            row.iter()
                .zip(c)
                .fold(RootOfUnity::new(0), |acc, (e, z)| acc * z.pow(*e))
        })
        .collect();
    for (k, r) in rhs.iter().enumerate() {
        let dk = diag.get(k).copied().unwrap_or(0);
        if dk == 0 && r.exponent() != 0 {
            return BinomialSolution {
                points: Vec::new(),
                unresolved: 0,
                free_dims: 0,
            };
        }
    }
    let mut free_dims = 0;
    let mut choices: Vec<Vec<RootOfUnity>> = Vec::new();
    let mut unresolved_factor: u64 = 1;
    let mut total: u64 = 1;
    for k in 0..nvars {
        let dk = diag.get(k).copied().unwrap_or(0);
        if dk == 0 {
            free_dims += 1;
            choices.push(vec![RootOfUnity::new(0)]);
            continue;
        }
        let (found, missing) = rhs[k].roots(dk as u64);
        total *= dk as u64;
        if missing > 0 {
            unresolved_factor = 0;
        }
        choices.push(found);
    }
    if free_dims > 0 {
        return BinomialSolution {
            points: Vec::new(),
            unresolved: 0,
            free_dims,
        };
    }
    let mut points = Vec::new();
    let mut idx = vec![0usize; nvars];
    if choices.iter().all(|c| !c.is_empty()) {
        loop {
            let s: Vec<RootOfUnity> = (0..nvars).map(|k| choices[k][idx[k]]).collect();
            let t: Vec<RootOfUnity> = (0..nvars)
                .map(|i| (0..nvars).fold(RootOfUnity::new(0), |acc, k| acc * s[k].pow(snf.v[i][k])))
                .collect();
            points.push(t);
            let mut k = 0;
            loop {
                if k == nvars {
                    break;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == nvars {
                break;
            }
        }
    }
    points.sort();
    points.dedup();
    let unresolved = if unresolved_factor == 1 {
        0
    } else {
        total - points.len() as u64
    };
    BinomialSolution {
        points,
        unresolved,
        free_dims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &IMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(imat_mul(&imat_mul(&s.u, a), &s.v), s.d);
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "{diag:?}");
            }
        }
        for (i, row) in s.d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    assert_eq!(*x, 0);
                }
            }
        }
    }

    #[test]
    fn three_cycle_system() {
        let a = vec![vec![-1, 1], vec![-1, -2]];
        check(&a);
        assert_eq!(smith_normal_form(&a).diagonal(), vec![1, 3]);
    }

    #[test]
    fn binomial_cube_roots() {
        // x = y, x·x·y... : x³ = 1 via rows (−1, 1), (−1, −2)
        let sol = solve_binomial(
            &vec![vec![-1, 1], vec![-1, -2]],
            &[RootOfUnity::new(0); 2],
            2,
        );
        assert_eq!(sol.points.len(), 3);
        assert_eq!(sol.unresolved, 0);
        for p in &sol.points {
            assert_eq!(p[0], p[1]);
            assert_eq!(p[0].pow(3), RootOfUnity::new(0));
        }
    }

    #[test]
    fn binomial_outside_mu6() {
        let sol = solve_binomial(&vec![vec![4, 0], vec![0, 1]], &[RootOfUnity::new(0); 2], 2);
        assert_eq!(sol.points.len(), 2);
        assert_eq!(sol.unresolved, 2);
    }

    #[test]
    fn binomial_free_and_inconsistent() {
        let sol = solve_binomial(&vec![vec![1, 1]], &[RootOfUnity::new(0)], 2);
        assert_eq!(sol.free_dims, 1);
        let bad = solve_binomial(
            &vec![vec![1, 0], vec![1, 0]],
            &[RootOfUnity::new(0), RootOfUnity::new(3)],
            2,
        );
        assert!(bad.points.is_empty() && bad.free_dims == 0);
    }

    proptest! {
        #[test]
        fn smith_form_is_valid(a in proptest::collection::vec(proptest::collection::vec(-6i64..7, 2), 1..4)) {
            check(&a);
        }
    }
}
