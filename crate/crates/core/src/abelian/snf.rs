//! Smith normal form over the integers, `D = U·A·V`.
//!
//! Pivoting always moves the entry of smallest nonzero absolute value into
//! place; this bounds intermediate growth on the matrices that show up here
//! (presentation and boundary matrices with small entries).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `d = u · a · v` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let core = SnfWork::run(a, true, false, true);
    let (m, n) = a.shape();
    let mut d = IntMatrix::zeros(m, n);
    for (i, x) in core.diag.iter().enumerate() {
        d.set(i, i, x.clone());
    }
    Snf {
        u: to_matrix(core.u.unwrap(), m, m),
        d,
        v: to_matrix(core.v.unwrap(), n, n),
    }
}

fn to_matrix(rows: Vec<Vec<BigInt>>, r: usize, c: usize) -> IntMatrix {
    IntMatrix::new(r, c, rows.into_iter().flatten().collect()).expect("square transform")
}

/// Working state; `u_inv` tracks `U^{-1}` alongside `U` so that generators
/// of a cokernel can be read off without a matrix inversion.
pub(crate) struct SnfWork {
    pub diag: Vec<BigInt>,
    pub u: Option<Vec<Vec<BigInt>>>,
    pub u_inv: Option<Vec<Vec<BigInt>>>,
    pub v: Option<Vec<Vec<BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect()
}

impl SnfWork {
    pub fn run(a: &IntMatrix, want_u: bool, want_u_inv: bool, want_v: bool) -> SnfWork {
        let (m, n) = a.shape();
        let mut x: Vec<Vec<BigInt>> = (0..m).map(|i| a.row(i).to_vec()).collect();
        let mut u = want_u.then(|| identity_rows(m));
        let mut u_inv = want_u_inv.then(|| identity_rows(m));
        let mut v = want_v.then(|| identity_rows(n));
        let mut diag = Vec::new();

        // row_i -= q * row_t   (U: same; U^{-1}: col_t += q * col_i)
        let row_sub = |x: &mut Vec<Vec<BigInt>>,
                       u: &mut Option<Vec<Vec<BigInt>>>,
                       u_inv: &mut Option<Vec<Vec<BigInt>>>,
                       i: usize,
                       t: usize,
                       q: &BigInt,
                       from: usize| {
            let (lo, hi) = x.split_at_mut(i.max(t));
            let (ri, rt) = if i > t { (&mut hi[0], &lo[t]) } else { unreachable!() };
            for c in from..rt.len() {
                if !rt[c].is_zero() {
                    ri[c] -= q * &rt[c];
                }
            }
            if let Some(u) = u.as_mut() {
                let (lo, hi) = u.split_at_mut(i);
                let (ri, rt) = (&mut hi[0], &lo[t]);
                for c in 0..rt.len() {
                    if !rt[c].is_zero() {
                        ri[c] -= q * &rt[c];
                    }
                }
            }
            if let Some(w) = u_inv.as_mut() {
                for row in w.iter_mut() {
                    if !row[i].is_zero() {
                        let add = q * &row[i];
                        row[t] += add;
                    }
                }
            }
        };
        // col_j -= q * col_t   (V: same)
        let col_sub = |x: &mut Vec<Vec<BigInt>>,
                       v: &mut Option<Vec<Vec<BigInt>>>,
                       j: usize,
                       t: usize,
                       q: &BigInt,
                       from: usize| {
            for row in x.iter_mut().skip(from) {
                if !row[t].is_zero() {
                    let s = q * &row[t];
                    row[j] -= s;
                }
            }
            if let Some(v) = v.as_mut() {
                for row in v.iter_mut() {
                    if !row[t].is_zero() {
                        let s = q * &row[t];
                        row[j] -= s;
                    }
                }
            }
        };

        for t in 0..m.min(n) {
            loop {
                // smallest nonzero |entry| in the trailing block
                let mut best: Option<(usize, usize)> = None;
                for (i, row) in x.iter().enumerate().skip(t) {
                    for (j, e) in row.iter().enumerate().skip(t) {
                        if e.is_zero() {
                            continue;
                        }
                        let better = match best {
                            None => true,
                            Some((bi, bj)) => e.magnitude() < x[bi][bj].magnitude(),
                        };
                        if better {
                            best = Some((i, j));
                            if e.magnitude().is_one() {
                                break;
                            }
                        }
                    }
                    if best.is_some_and(|(bi, bj)| x[bi][bj].magnitude().is_one()) {
                        break;
                    }
                }
                let Some((pi, pj)) = best else {
                    // trailing block is zero
                    while diag.len() < m.min(n) {
                        diag.push(BigInt::zero());
                    }
                    return SnfWork { diag, u, u_inv, v };
                };
                if pi != t {
                    x.swap(pi, t);
                    if let Some(u) = u.as_mut() {
                        u.swap(pi, t);
                    }
                    if let Some(w) = u_inv.as_mut() {
                        for row in w.iter_mut() {
                            row.swap(pi, t);
                        }
                    }
                }
                if pj != t {
                    for row in x.iter_mut() {
                        row.swap(pj, t);
                    }
                    if let Some(v) = v.as_mut() {
                        for row in v.iter_mut() {
                            row.swap(pj, t);
                        }
                    }
                }
                let mut dirty = false;
                for i in t + 1..m {
                    if x[i][t].is_zero() {
                        continue;
                    }
                    let q = x[i][t].div_floor(&x[t][t]);
                    row_sub(&mut x, &mut u, &mut u_inv, i, t, &q, t);
                    if !x[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if x[t][j].is_zero() {
                        continue;
                    }
                    let q = x[t][j].div_floor(&x[t][t]);
                    col_sub(&mut x, &mut v, j, t, &q, t);
                    if !x[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // pivot must divide the whole trailing block
                let offender = (t + 1..m).find(|&i| {
                    x[i][t + 1..]
                        .iter()
                        .any(|e| !e.is_zero() && !e.is_multiple_of(&x[t][t]))
                });
                match offender {
                    Some(i) => {
                        // row_t += row_i
                        let ri = x[i].clone();
                        for (c, e) in ri.iter().enumerate().skip(t) {
                            x[t][c] += e;
                        }
                        if let Some(u) = u.as_mut() {
                            let ri = u[i].clone();
                            for (c, e) in ri.iter().enumerate() {
                                u[t][c] += e;
                            }
                        }
                        if let Some(w) = u_inv.as_mut() {
                            for row in w.iter_mut() {
                                let s = row[t].clone();
                                row[i] -= s;
                            }
                        }
                    }
                    None => break,
                }
            }
            if x[t][t].is_negative() {
                for e in x[t].iter_mut() {
                    *e = -&*e;
                }
                if let Some(u) = u.as_mut() {
                    for e in u[t].iter_mut() {
                        *e = -&*e;
                    }
                }
                if let Some(w) = u_inv.as_mut() {
                    for row in w.iter_mut() {
                        row[t] = -&row[t];
                    }
                }
            }
            diag.push(x[t][t].clone());
        }
        SnfWork { diag, u, u_inv, v }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Snf {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "{diag:?}");
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
    }

    #[test]
    fn two_by_two() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn non_divisible_pivot_is_repaired() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn u_inverse_tracks_u() {
        let a = IntMatrix::from_rows(&[vec![4, 6, 2], vec![2, 0, 8], vec![1, 3, 5]]).unwrap();
        let w = SnfWork::run(&a, true, true, false);
        let u = to_matrix(w.u.unwrap(), 3, 3);
        let ui = to_matrix(w.u_inv.unwrap(), 3, 3);
        assert_eq!(&u * &ui, IntMatrix::identity(3));
    }
}
