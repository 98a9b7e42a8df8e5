//! Exact linear algebra over Q on dense vectors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QVec = Vec<BigRational>;

/// A subspace kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, QVec)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut QVec) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &QVec) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.clone();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.push((pivot, w));
        true
    }
}

/// A basis of `{x : sum_j x_j cols[j] = 0}`, one vector per free column in
/// increasing order, with a 1 in that column.
pub fn nullspace(cols: &[QVec], dim: usize) -> Vec<QVec> {
    let n = cols.len();
    // rows of the matrix whose columns are `cols`
    let mut m: Vec<QVec> = (0..dim)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..dim).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..dim {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == dim {
            break;
        }
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer(v: &QVec) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

pub fn from_ints(v: &[BigInt]) -> QVec {
    v.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(xs: &[i64]) -> QVec {
        xs.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn echelon_tracks_span() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&qv(&[1, 2, 3])));
        assert!(e.insert(&qv(&[0, 1, 1])));
        assert!(!e.insert(&qv(&[2, 5, 7])));
        assert_eq!(e.rank(), 2);
        assert!(!e.insert(&qv(&[1, 0, 1])));
        assert!(e.insert(&qv(&[0, 0, 1])));
    }

    #[test]
    fn nullspace_vectors_are_in_the_kernel() {
        let cols = vec![qv(&[1, 0]), qv(&[2, 0]), qv(&[0, 1]), qv(&[1, 1])];
        let ker = nullspace(&cols, 2);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for i in 0..2 {
                let s: BigRational = cols.iter().zip(v).map(|(c, x)| &c[i] * x).sum();
                assert!(s.is_zero());
            }
        }
        let ints = primitive_integer(&ker[1]);
        let want: Vec<BigInt> = [1, 0, 1, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(ints, want);
    }
}
