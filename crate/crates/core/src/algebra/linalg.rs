//! Dense linear algebra over Q(ω).

use super::CycNum;

pub type Vector = Vec<CycNum>;
pub type Matrix = Vec<Vec<CycNum>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| CycNum::int((i == j) as i64)).collect())
        .collect()
}

pub fn mat_vec(m: &Matrix, v: &[CycNum]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(CycNum::zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(CycNum::zero(), |acc, (x, brow)| &acc + &(x * &brow[j]))
                })
                .collect()
        })
        .collect()
}

pub fn dot(a: &[CycNum], b: &[CycNum]) -> CycNum {
    a.iter()
        .zip(b)
        .fold(CycNum::zero(), |acc, (x, y)| &acc + &(x * y))
}

pub fn scale_vec(v: &[CycNum], s: &CycNum) -> Vector {
    v.iter().map(|x| x * s).collect()
}

pub fn add_vec(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero_vec(v: &[CycNum]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right kernel `{v : m·v = 0}`; `ncols` is needed for empty `m`.
pub fn kernel(m: &Matrix, ncols: usize) -> Vec<Vector> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycNum::zero(); ncols];
            v[f] = CycNum::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][f];
            }
            v
        })
        .collect()
}

/// Intersection of two subspaces given by spanning vectors.
pub fn intersect(a: &[Vector], b: &[Vector], dim: usize) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // solve Σ αᵢ aᵢ − Σ βⱼ bⱼ = 0
    let n = a.len() + b.len();
    let m: Matrix = (0..dim)
        .map(|k| {
            a.iter()
                .map(|v| v[k].clone())
                .chain(b.iter().map(|v| -&v[k]))
                .collect()
        })
        .collect();
    let mut out: Vec<Vector> = kernel(&m, n)
        .into_iter()
        .map(|coef| {
            let mut v = vec![CycNum::zero(); dim];
            for (c, av) in coef.iter().zip(a) {
                v = add_vec(&v, &scale_vec(av, c));
            }
            v
        })
        .collect();
    out = basis_of(&out);
    out
}

/// Linearly independent subset spanning the same space.
pub fn basis_of(vs: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let mut cand = out.clone();
        cand.push(v.clone());
        if rank(&cand) == cand.len() {
            out = cand;
        }
    }
    out
}

pub fn det(m: &Matrix) -> CycNum {
    let n = m.len();
    let mut a = m.clone();
    let mut d = CycNum::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return CycNum::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    d
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| CycNum::int((i == j) as i64)));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| CycNum::int(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 1, 1]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&mat_vec(&a, v)));
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[1, 0, 0], &[0, 0, 1], &[0, -1, -1]]);
        assert_eq!(det(&a), CycNum::one());
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert!(det(&s).is_zero());
        assert!(inverse(&s).is_none());
    }

    #[test]
    fn subspace_intersection() {
        let e = |i: usize| {
            let mut v = vec![CycNum::zero(); 3];
            v[i] = CycNum::one();
            v
        };
        let a = vec![e(0), e(1)];
        let b = vec![e(1), e(2)];
        let i = intersect(&a, &b, 3);
        assert_eq!(i.len(), 1);
        assert!(i[0][0].is_zero() && i[0][2].is_zero());
    }
}
