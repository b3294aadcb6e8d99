//! Integer lattices in echelon form and subquotients `L / R` of `Z^n`.
//!
//! Every subgroup and quotient computation in the crate (kernels, cokernels,
//! images, fixed points, cohomology) goes through [`Subquotient`]: a lattice
//! `L ⊆ Z^n` with a relation sublattice `R ⊆ L`, put in canonical form by a
//! Smith normal form of the relations in a basis of `L`. The chosen
//! generators are the columns of the inverse left transform, in order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::group::FinAbGroup;
use super::snf::SnfWork;
use super::IntMatrix;
use crate::arith::{ext_gcd, reduce, reduce_in_place};
use crate::error::{contract_err, Result};

/// Sparse row: `(column, coefficient)` pairs.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Row-echelon basis of a sublattice of `Z^dim`: row `k` is zero before
/// `pivots[k]` and positive there; pivots strictly increase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Replaces `(a, b)` by a unimodular combination with `a[pos] = gcd`,
/// `b[pos] = 0`.
fn combine_at(a: &mut [BigInt], b: &mut [BigInt], pos: usize) {
    if b[pos].is_zero() {
        return;
    }
    if a[pos].is_zero() {
        for k in pos..a.len() {
            std::mem::swap(&mut a[k], &mut b[k]);
        }
        return;
    }
    if b[pos].is_multiple_of(&a[pos]) {
        let q = &b[pos] / &a[pos];
        for k in pos..a.len() {
            if !a[k].is_zero() {
                let s = &q * &a[k];
                b[k] -= s;
            }
        }
        return;
    }
    let (g, s, t) = ext_gcd(&a[pos], &b[pos]);
    let ap = &a[pos] / &g;
    let bp = &b[pos] / &g;
    for k in pos..a.len() {
        let na = &s * &a[k] + &t * &b[k];
        let nb = &ap * &b[k] - &bp * &a[k];
        a[k] = na;
        b[k] = nb;
    }
}

impl EchelonBasis {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut r = vec![BigInt::zero(); dim];
                r[i] = BigInt::one();
                r
            })
            .collect();
        EchelonBasis {
            dim,
            rows,
            pivots: (0..dim).collect(),
        }
    }

    /// Basis of `span(gens)`, or of `span(gens) + modulus·Z^dim` when a
    /// modulus is given (then every position carries a pivot and entries
    /// stay below the modulus).
    pub fn from_generators(dim: usize, gens: Vec<Vec<BigInt>>, modulus: Option<&BigInt>) -> Self {
        let mut pool: Vec<Vec<BigInt>> = gens.into_iter().filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for pos in 0..dim {
            let mut pivot: Option<Vec<BigInt>> = modulus.map(|e| {
                let mut r = vec![BigInt::zero(); dim];
                r[pos] = e.clone();
                r
            });
            let mut rest = Vec::with_capacity(pool.len());
            for mut g in pool.drain(..) {
                if g[pos].is_zero() {
                    rest.push(g);
                    continue;
                }
                match pivot.as_mut() {
                    None => pivot = Some(g),
                    Some(p) => {
                        combine_at(p, &mut g, pos);
                        if let Some(e) = modulus {
                            for x in g.iter_mut().skip(pos + 1) {
                                reduce_in_place(x, e);
                            }
                        }
                        if g.iter().skip(pos).any(|x| !x.is_zero()) {
                            rest.push(g);
                        }
                    }
                }
            }
            pool = rest;
            if let Some(mut p) = pivot {
                if p[pos].is_negative() {
                    for x in p.iter_mut() {
                        *x = -&*x;
                    }
                }
                if let Some(e) = modulus {
                    for x in p.iter_mut().skip(pos + 1) {
                        reduce_in_place(x, e);
                    }
                }
                rows.push(p);
                pivots.push(pos);
            }
        }
        EchelonBasis { dim, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Coefficients of `x` in this basis, or `None` when `x ∉ L`.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(x.len(), self.dim, "vector length");
        let mut x = x.to_vec();
        let mut y = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            // nothing may survive strictly between the previous pivot and this one
            if x[..p].iter().any(|v| !v.is_zero()) {
                return None;
            }
            if x[p].is_zero() {
                y.push(BigInt::zero());
                continue;
            }
            let (q, r) = x[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for k in p..self.dim {
                if !row[k].is_zero() {
                    let s = &q * &row[k];
                    x[k] -= s;
                }
            }
            y.push(q);
        }
        if x.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(y)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.solve(x).is_some()
    }
}

/// `{ x ∈ Z^dim : row_j · x ≡ 0 (mod m_j) for all j }`, where a zero
/// modulus means exact vanishing.
///
/// Rows are absorbed one at a time into a lattice basis by unimodular
/// column operations. When every modulus is positive the lattice contains
/// `lcm(m_j)·Z^dim`, which is carried implicitly so entries stay reduced.
pub fn preimage_lattice(dim: usize, rows: &[SparseRow], moduli: &[BigInt]) -> EchelonBasis {
    assert_eq!(rows.len(), moduli.len(), "one modulus per row");
    if rows.is_empty() {
        return EchelonBasis::identity(dim);
    }
    let modulus: Option<BigInt> = if moduli.iter().all(|m| m.is_positive()) {
        Some(moduli.iter().fold(BigInt::one(), |acc, m| acc.lcm(m)))
    } else {
        None
    };
    let mut cols: Vec<Vec<BigInt>> = EchelonBasis::identity(dim).rows;
    for (row, m) in rows.iter().zip(moduli) {
        if row.is_empty() {
            continue;
        }
        let mut vals: Vec<BigInt> = cols
            .iter()
            .map(|c| {
                let mut s = BigInt::zero();
                for (i, f) in row {
                    if !c[*i].is_zero() {
                        s += f * &c[*i];
                    }
                }
                reduce(&s, m)
            })
            .collect();
        let nonzero: Vec<usize> = (0..cols.len()).filter(|&c| !vals[c].is_zero()).collect();
        let Some(&p) = nonzero.iter().min_by(|&&a, &&b| vals[a].magnitude().cmp(vals[b].magnitude())) else {
            continue;
        };
        for &c in &nonzero {
            if c == p {
                continue;
            }
            let (vp, vc) = (vals[p].clone(), vals[c].clone());
            let (lo, hi) = cols.split_at_mut(p.max(c));
            let (cp, cc) = if p < c { (&mut lo[p], &mut hi[0]) } else { (&mut hi[0], &mut lo[c]) };
            if vc.is_multiple_of(&vp) {
                let q = &vc / &vp;
                for k in 0..dim {
                    if !cp[k].is_zero() {
                        let s = &q * &cp[k];
                        cc[k] -= s;
                    }
                }
            } else {
                let (g, s, t) = ext_gcd(&vp, &vc);
                let ap = &vp / &g;
                let bp = &vc / &g;
                for k in 0..dim {
                    if cp[k].is_zero() && cc[k].is_zero() {
                        continue;
                    }
                    let np = &s * &cp[k] + &t * &cc[k];
                    let nc = &ap * &cc[k] - &bp * &cp[k];
                    cp[k] = np;
                    cc[k] = nc;
                }
                vals[p] = g;
            }
            vals[c] = BigInt::zero();
            if let Some(e) = &modulus {
                for x in cp.iter_mut().chain(cc.iter_mut()) {
                    reduce_in_place(x, e);
                }
            }
        }
        if m.is_zero() {
            cols.swap_remove(p);
        } else {
            let mult = m / vals[p].gcd(m);
            if !mult.is_one() {
                for x in cols[p].iter_mut() {
                    if !x.is_zero() {
                        *x *= &mult;
                        if let Some(e) = &modulus {
                            reduce_in_place(x, e);
                        }
                    }
                }
            }
        }
    }
    EchelonBasis::from_generators(dim, cols, modulus.as_ref())
}

/// A subquotient `L / R` of `Z^n` in canonical invariant-factor form.
#[derive(Clone, Debug)]
pub struct Subquotient {
    basis: EchelonBasis,
    ambient_moduli: Vec<BigInt>,
    /// Rows of the left SNF transform at the kept positions.
    transform_rows: Vec<Vec<BigInt>>,
    group: FinAbGroup,
    generators: Vec<Vec<BigInt>>,
}

impl Subquotient {
    /// `ambient_moduli[i]` is used only to reduce vectors for presentation;
    /// the relations must already include whatever is being quotiented out.
    pub fn new(basis: EchelonBasis, relations: &[Vec<BigInt>], ambient_moduli: Vec<BigInt>) -> Result<Self> {
        let r = basis.rank();
        let mut columns = Vec::with_capacity(relations.len());
        for (k, rel) in relations.iter().enumerate() {
            if rel.iter().all(Zero::is_zero) {
                continue;
            }
            let y = basis
                .solve(rel)
                .ok_or_else(|| contract_err!("relation {k} does not lie in the lattice"))?;
            columns.push(y);
        }
        let rel_matrix = IntMatrix::from_columns(r, &columns);
        let work = SnfWork::run(&rel_matrix, true, true, false);
        let mut diag = work.diag;
        diag.resize(r, BigInt::zero());
        let u = work.u.unwrap();
        let u_inv = work.u_inv.unwrap();
        let kept: Vec<usize> = (0..r).filter(|&t| !diag[t].is_one()).collect();
        let factors: Vec<BigInt> = kept.iter().map(|&t| diag[t].clone()).filter(|d| !d.is_zero()).collect();
        let free_rank = kept.len() - factors.len();
        let group = FinAbGroup::new(factors, free_rank)?;
        let generators = kept
            .iter()
            .map(|&t| {
                let mut x = vec![BigInt::zero(); basis.dim()];
                for (i, row) in basis.rows().iter().enumerate() {
                    let c = &u_inv[i][t];
                    if c.is_zero() {
                        continue;
                    }
                    for (xk, bk) in x.iter_mut().zip(row) {
                        if !bk.is_zero() {
                            *xk += c * bk;
                        }
                    }
                }
                for (xk, m) in x.iter_mut().zip(&ambient_moduli) {
                    reduce_in_place(xk, m);
                }
                x
            })
            .collect();
        let transform_rows = kept.iter().map(|&t| u[t].clone()).collect();
        Ok(Subquotient {
            basis,
            ambient_moduli,
            transform_rows,
            group,
            generators,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Ambient vectors representing the canonical generators, in order.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn lattice(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Canonical coordinates of the class of `x`, or `None` when `x ∉ L`.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut x = x.to_vec();
        for (xk, m) in x.iter_mut().zip(&self.ambient_moduli) {
            reduce_in_place(xk, m);
        }
        let y = self.basis.solve(&x)?;
        let relation_orders = self.group.relation_orders();
        Some(
            self.transform_rows
                .iter()
                .zip(&relation_orders)
                .map(|(row, d)| {
                    let mut s = BigInt::zero();
                    for (a, b) in row.iter().zip(&y) {
                        if !a.is_zero() && !b.is_zero() {
                            s += a * b;
                        }
                    }
                    reduce(&s, d)
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_solves_members_only() {
        let b = EchelonBasis::from_generators(2, vec![big(&[2, 0]), big(&[0, 3])], None);
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&big(&[4, 9])));
        assert!(!b.contains(&big(&[1, 0])));
        let b = EchelonBasis::from_generators(3, vec![big(&[1, 2, 3])], None);
        assert!(b.contains(&big(&[-2, -4, -6])));
        assert!(!b.contains(&big(&[1, 2, 4])));
    }

    #[test]
    fn modular_echelon_is_full_rank() {
        let b = EchelonBasis::from_generators(2, vec![big(&[3, 3])], Some(&BigInt::from(6)));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&big(&[3, 3])));
        assert!(b.contains(&big(&[6, 0])));
        assert!(!b.contains(&big(&[3, 0])));
    }

    #[test]
    fn preimage_of_times_two_mod_four() {
        // x ↦ 2x mod 4 kills {0, 2} in Z/4
        let l = preimage_lattice(1, &[vec![(0, BigInt::from(2))]], &[BigInt::from(4)]);
        assert!(l.contains(&big(&[2])));
        assert!(!l.contains(&big(&[1])));
    }

    #[test]
    fn preimage_exact_rows() {
        // x + y = 0 exactly
        let l = preimage_lattice(2, &[vec![(0, BigInt::one()), (1, BigInt::one())]], &[BigInt::zero()]);
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&big(&[3, -3])));
    }

    #[test]
    fn subquotient_of_z2_by_relations() {
        let sq = Subquotient::new(
            EchelonBasis::identity(2),
            &[big(&[2, 2]), big(&[0, 2])],
            vec![BigInt::zero(), BigInt::zero()],
        )
        .unwrap();
        assert_eq!(sq.group(), &FinAbGroup::from_orders(&[2, 2]).unwrap());
        for g in sq.generators() {
            assert!(sq.coordinates(g).is_some());
        }
    }
}
