//! Small dense exact linear algebra over ℚ.

use crate::Q;
use num::{BigInt, Integer, One, Signed, Zero};

pub type Mat = Vec<Vec<Q>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn from_ints(rows: &[&[i64]]) -> Mat {
    rows.iter().map(|r| r.iter().map(|&x| crate::q(x)).collect()).collect()
}

pub fn transpose(m: &Mat, ncols: usize) -> Mat {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn mat_vec(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref(m: &Mat, ncols: usize) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat, ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Rank of a list of vectors (as rows).
pub fn rank_of_rows(rows: &[Vec<Q>]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => rank(&rows.to_vec(), r.len()),
    }
}

/// Basis of `{x : m·x = 0}`.
pub fn nullspace(m: &Mat, ncols: usize) -> Vec<Vec<Q>> {
    let (a, piv) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m·x = b`, if one exists.
pub fn solve(m: &Mat, b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    let aug: Mat = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (a, piv) = rref(&aug, ncols + 1);
    if piv.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (r, &p) in piv.iter().enumerate() {
        x[p] = a[r][ncols].clone();
    }
    Some(x)
}

/// A basis (subset of the rows, in order) of the row space.
pub fn independent_rows(rows: &[Vec<Q>]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    let mut basis: Mat = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank(&basis, r.len()) == basis.len() {
            out.push(i);
        } else {
            basis.pop();
        }
    }
    out
}

/// Scale to the primitive integer vector with the same direction.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Sign of a rational as -1, 0, 1.
pub fn sgn(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
