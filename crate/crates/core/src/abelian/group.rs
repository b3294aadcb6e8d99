use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::lattice::{preimage_lattice, EchelonBasis, SparseRow, Subquotient};
use super::snf::SnfWork;
use super::IntMatrix;
use crate::arith::{coprime_base, is_prime, pow_big, reduce, reduce_in_place, valuation};
use crate::error::{contract_err, input_err, precondition_err, Result};

/// A finitely generated abelian group `Z/d_1 ⊕ … ⊕ Z/d_k ⊕ Z^r` with
/// `2 ≤ d_1 | d_2 | … | d_k`.
///
/// Elements are coordinate vectors against the canonical generators, torsion
/// generators first, then free ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FinAbGroup {
    pub fn new(invariant_factors: Vec<BigInt>, free_rank: usize) -> Result<Self> {
        for d in &invariant_factors {
            if d < &BigInt::from(2) {
                return Err(input_err!("invariant factor {d} is below 2"));
            }
        }
        for w in invariant_factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(input_err!("invariant factors {} and {} do not form a divisibility chain", w[0], w[1]));
            }
        }
        Ok(FinAbGroup {
            invariant_factors,
            free_rank,
        })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        if n.is_zero() {
            Self::free(1)
        } else if n.abs().is_one() {
            Self::trivial()
        } else {
            FinAbGroup {
                invariant_factors: vec![n.abs()],
                free_rank: 0,
            }
        }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            invariant_factors: Vec::new(),
            free_rank: rank,
        }
    }

    /// Direct sum of cyclic groups of arbitrary orders (0 meaning `Z`).
    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        Ok(direct_sum(&orders.iter().map(|&n| Self::cyclic(n)).collect::<Vec<_>>()))
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    /// Relation order of each canonical generator; 0 for free generators.
    pub fn relation_orders(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .cloned()
            .chain(std::iter::repeat(BigInt::zero()).take(self.free_rank))
            .collect()
    }

    pub fn relation_order(&self, i: usize) -> BigInt {
        self.invariant_factors.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.num_generators() == 0
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one))
    }

    /// Reduces a coordinate vector to canonical form.
    pub fn normalize(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.num_generators(), "element length");
        x.iter()
            .enumerate()
            .map(|(i, v)| reduce(v, &self.relation_order(i)))
            .collect()
    }

    pub fn zero_element(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.num_generators()]
    }

    /// All elements in mixed-radix order (last coordinate fastest), or `None`
    /// when the group is infinite or has more than `limit` elements.
    pub fn elements(&self, limit: usize) -> Option<Vec<Vec<BigInt>>> {
        let order = self.order()?.to_usize()?;
        if order > limit {
            return None;
        }
        let mut out = Vec::with_capacity(order);
        let mut cur = self.zero_element();
        loop {
            out.push(cur.clone());
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return Some(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.invariant_factors[i] {
                    break;
                }
                cur[i] = BigInt::zero();
            }
        }
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: u64) -> FinAbGroup {
        direct_sum_weighted(&[(self.clone(), k)])
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        let factors = &self.invariant_factors;
        let mut i = 0;
        while i < factors.len() {
            let run = factors[i..].iter().take_while(|d| **d == factors[i]).count();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "Z/{}", factors[i])?;
            } else {
                write!(f, "(Z/{})^{run}", factors[i])?;
            }
            i += run;
        }
        if self.free_rank > 0 {
            if !first {
                write!(f, " + ")?;
            }
            if self.free_rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
        }
        Ok(())
    }
}

/// Integers that fit serialize as JSON numbers, larger ones as decimal
/// strings.
#[derive(Serialize)]
#[serde(untagged)]
pub(crate) enum JsonInt {
    Small(i64),
    Big(String),
}

pub(crate) fn big_json(x: &BigInt) -> JsonInt {
    match x.to_i64() {
        Some(v) => JsonInt::Small(v),
        None => JsonInt::Big(x.to_string()),
    }
}

impl Serialize for FinAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FinAbGroup", 2)?;
        let factors: Vec<_> = self.invariant_factors.iter().map(big_json).collect();
        st.serialize_field("invariant_factors", &factors)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.end()
    }
}

/// Cokernel of the relation matrix: rows are relations among `generators`
/// generators.
pub fn fin_ab_from_relations(generators: usize, relations: &IntMatrix) -> Result<FinAbGroup> {
    if relations.cols() != generators {
        return Err(input_err!(
            "relation matrix has {} columns for {generators} generators",
            relations.cols()
        ));
    }
    let work = SnfWork::run(relations, false, false, false);
    let nonzero: Vec<BigInt> = work.diag.into_iter().filter(|d| !d.is_zero()).collect();
    let free_rank = generators - nonzero.len();
    FinAbGroup::new(nonzero.into_iter().filter(|d| !d.is_one()).collect(), free_rank)
}

pub fn direct_sum(groups: &[FinAbGroup]) -> FinAbGroup {
    let weighted: Vec<(FinAbGroup, u64)> = groups.iter().map(|g| (g.clone(), 1)).collect();
    direct_sum_weighted(&weighted)
}

/// `⊕ A_i^{k_i}`. Cyclic factors are split over a coprime base of all
/// orders, sorted per base element and recombined into a divisibility chain.
pub fn direct_sum_weighted(groups: &[(FinAbGroup, u64)]) -> FinAbGroup {
    let mut free_rank = 0usize;
    let mut orders: Vec<(&BigInt, u64)> = Vec::new();
    for (g, k) in groups {
        if *k == 0 {
            continue;
        }
        free_rank += g.free_rank * *k as usize;
        for d in &g.invariant_factors {
            orders.push((d, *k));
        }
    }
    let distinct: Vec<BigInt> = {
        let mut v: Vec<BigInt> = orders.iter().map(|(d, _)| (*d).clone()).collect();
        v.sort();
        v.dedup();
        v
    };
    let base = coprime_base(&distinct);
    // per base element: (exponent, multiplicity), sorted descending
    let mut lists: Vec<Vec<(u32, u64)>> = Vec::with_capacity(base.len());
    for b in &base {
        let mut l: Vec<(u32, u64)> = orders
            .iter()
            .filter_map(|(d, k)| {
                let e = base_valuation(d, b);
                (e > 0).then_some((e, *k))
            })
            .collect();
        l.sort_by(|a, b| b.0.cmp(&a.0));
        lists.push(l);
    }
    let count: u64 = lists.iter().map(|l| l.iter().map(|x| x.1).sum::<u64>()).max().unwrap_or(0);
    let count = usize::try_from(count).expect("direct sum too large");
    let mut factors = vec![BigInt::one(); count];
    for (b, l) in base.iter().zip(&lists) {
        let mut i = 0usize;
        for &(e, k) in l {
            let p = num_traits::pow(b.clone(), e as usize);
            for _ in 0..k {
                factors[i] *= &p;
                i += 1;
            }
        }
    }
    factors.reverse();
    FinAbGroup {
        invariant_factors: factors,
        free_rank,
    }
}

fn base_valuation(d: &BigInt, b: &BigInt) -> u32 {
    let mut d = d.clone();
    let mut e = 0;
    while d.is_multiple_of(b) {
        d /= b;
        e += 1;
    }
    e
}

pub fn is_isomorphic(a: &FinAbGroup, b: &FinAbGroup) -> bool {
    a == b
}

/// `A(ℓ)`, the ℓ-power torsion. The free part contributes nothing.
pub fn ell_primary_part(a: &FinAbGroup, ell: u64) -> Result<FinAbGroup> {
    if !is_prime(ell) {
        return Err(input_err!("{ell} is not prime"));
    }
    let factors = a
        .invariant_factors
        .iter()
        .map(|d| valuation(d, ell))
        .filter(|&v| v > 0)
        .map(|v| pow_big(ell, v))
        .collect();
    Ok(FinAbGroup {
        invariant_factors: factors,
        free_rank: 0,
    })
}

/// Additive invariants of finite abelian groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", content = "ell", rename_all = "snake_case")]
pub enum AdditiveInvariant {
    /// `dim_{F_ℓ} A/ℓA`.
    EllRank(u64),
    /// `v_ℓ(|A|)`.
    EllLength(u64),
}

impl AdditiveInvariant {
    pub fn new_ell_rank(ell: u64) -> Result<Self> {
        crate::lattice::require_prime(ell)?;
        Ok(AdditiveInvariant::EllRank(ell))
    }

    pub fn new_ell_length(ell: u64) -> Result<Self> {
        crate::lattice::require_prime(ell)?;
        Ok(AdditiveInvariant::EllLength(ell))
    }

    pub fn ell(&self) -> u64 {
        match *self {
            AdditiveInvariant::EllRank(l) | AdditiveInvariant::EllLength(l) => l,
        }
    }

    pub fn name(&self) -> String {
        match self {
            AdditiveInvariant::EllRank(l) => format!("ell_rank({l})"),
            AdditiveInvariant::EllLength(l) => format!("ell_length({l})"),
        }
    }

    pub fn evaluate(&self, a: &FinAbGroup) -> Result<u64> {
        evaluate_invariant(*self, a)
    }
}

pub fn evaluate_invariant(m: AdditiveInvariant, a: &FinAbGroup) -> Result<u64> {
    if !a.is_finite() {
        return Err(precondition_err!("{} is only defined on finite groups, got {a}", m.name()));
    }
    let ell = BigInt::from(m.ell());
    Ok(match m {
        AdditiveInvariant::EllRank(_) => a.invariant_factors.iter().filter(|d| d.is_multiple_of(&ell)).count() as u64,
        AdditiveInvariant::EllLength(l) => a.invariant_factors.iter().map(|d| valuation(d, l) as u64).sum(),
    })
}

/// A homomorphism between canonical forms: column `j` is the image of
/// source generator `j`, entries reduced modulo the target relation orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbHom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.num_generators(), source.num_generators()) {
            return Err(contract_err!(
                "matrix is {}x{}, expected {}x{} for {source} -> {target}",
                matrix.rows(),
                matrix.cols(),
                target.num_generators(),
                source.num_generators()
            ));
        }
        let mut matrix = matrix;
        let orders = target.relation_orders();
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                reduce_in_place(matrix.get_mut(i, j), &orders[i]);
            }
        }
        for j in 0..source.num_generators() {
            let d = source.relation_order(j);
            if d.is_zero() {
                continue;
            }
            for (i, e) in orders.iter().enumerate() {
                let v = &d * matrix.get(i, j);
                if !reduce(&v, e).is_zero() {
                    return Err(contract_err!(
                        "image of source generator {j} (order {d}) has order not dividing {d} in coordinate {i}"
                    ));
                }
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    /// Images of the source generators as target coordinate vectors.
    pub fn from_images(source: FinAbGroup, target: FinAbGroup, images: &[Vec<BigInt>]) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(contract_err!(
                "{} images for {} source generators",
                images.len(),
                source.num_generators()
            ));
        }
        for (j, v) in images.iter().enumerate() {
            if v.len() != target.num_generators() {
                return Err(contract_err!("image of source generator {j} has the wrong length"));
            }
        }
        let m = IntMatrix::from_columns(target.num_generators(), images);
        Self::new(source, target, m)
    }

    pub fn identity(a: &FinAbGroup) -> Self {
        AbHom {
            source: a.clone(),
            target: a.clone(),
            matrix: IntMatrix::identity(a.num_generators()),
        }
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> Self {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_generators(), source.num_generators()),
        }
    }

    /// Multiplication by `k` on `a`.
    pub fn scalar(a: &FinAbGroup, k: impl Into<BigInt>) -> Self {
        Self::identity(a).scale(&k.into())
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    fn reduced(source: FinAbGroup, target: FinAbGroup, mut matrix: IntMatrix) -> Self {
        let orders = target.relation_orders();
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                reduce_in_place(matrix.get_mut(i, j), &orders[i]);
            }
        }
        AbHom { source, target, matrix }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.target.normalize(&self.matrix.mul_vec(x))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if other.target != self.source {
            return Err(contract_err!(
                "cannot compose: {} -> {} after {} -> {}",
                self.source,
                self.target,
                other.source,
                other.target
            ));
        }
        Ok(Self::reduced(
            other.source.clone(),
            self.target.clone(),
            &self.matrix * &other.matrix,
        ))
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        if self.source != other.source || self.target != other.target {
            return Err(contract_err!("cannot add homomorphisms with different source or target"));
        }
        Ok(Self::reduced(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix)?,
        ))
    }

    pub fn scale(&self, k: &BigInt) -> AbHom {
        Self::reduced(self.source.clone(), self.target.clone(), self.matrix.scale(k))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// First source generator on which the two maps differ.
    pub fn first_difference(&self, other: &AbHom) -> Option<usize> {
        if self.source != other.source || self.target != other.target {
            return Some(0);
        }
        (0..self.source.num_generators()).find(|&j| self.matrix.column(j) != other.matrix.column(j))
    }

    /// Maps whose source and target are the same group.
    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// Sparse rows of the matrix.
    pub(crate) fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.matrix.rows())
            .map(|i| {
                self.matrix
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn kernel(&self) -> Result<(FinAbGroup, AbHom)> {
        let sq = self.kernel_subquotient()?;
        let inc = subquotient_inclusion(&sq, &self.source)?;
        Ok((sq.group().clone(), inc))
    }

    pub(crate) fn kernel_subquotient(&self) -> Result<Subquotient> {
        kernel_subquotient_sparse(&self.source, &self.sparse_rows(), &self.target.relation_orders())
    }

    pub fn cokernel(&self) -> Result<(FinAbGroup, AbHom)> {
        let b = self.target.num_generators();
        let mut relations = relation_vectors(&self.target);
        for j in 0..self.matrix.cols() {
            relations.push(self.matrix.column(j));
        }
        let sq = Subquotient::new(EchelonBasis::identity(b), &relations, self.target.relation_orders())?;
        let images: Vec<Vec<BigInt>> = (0..b)
            .map(|j| {
                let mut e = vec![BigInt::zero(); b];
                e[j] = BigInt::one();
                sq.coordinates(&e).expect("unit vector lies in Z^b")
            })
            .collect();
        let proj = AbHom::from_images(self.target.clone(), sq.group().clone(), &images)?;
        Ok((sq.group().clone(), proj))
    }

    /// The image with its inclusion into the target and the corestriction
    /// `source → image`.
    pub fn image(&self) -> Result<(FinAbGroup, AbHom, AbHom)> {
        let b = self.target.num_generators();
        let orders = self.target.relation_orders();
        let lambda = relation_vectors(&self.target);
        let mut gens: Vec<Vec<BigInt>> = (0..self.matrix.cols()).map(|j| self.matrix.column(j)).collect();
        gens.extend(lambda.iter().cloned());
        let modulus = self
            .target
            .exponent()
            .filter(|_| b > 0);
        let basis = EchelonBasis::from_generators(b, gens, modulus.as_ref());
        let sq = Subquotient::new(basis, &lambda, orders)?;
        let inc = subquotient_inclusion(&sq, &self.target)?;
        let images: Vec<Vec<BigInt>> = (0..self.matrix.cols())
            .map(|j| sq.coordinates(&self.matrix.column(j)).expect("column lies in the image"))
            .collect();
        let cores = AbHom::from_images(self.source.clone(), sq.group().clone(), &images)?;
        Ok((sq.group().clone(), inc, cores))
    }
}

/// `d_i e_i` for each torsion generator.
pub(crate) fn relation_vectors(a: &FinAbGroup) -> Vec<Vec<BigInt>> {
    let n = a.num_generators();
    a.invariant_factors
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = d.clone();
            v
        })
        .collect()
}

/// Kernel of the map `Z^a/Λ_source → Z^b/Λ` given by sparse rows, where
/// row `r` is read modulo `row_moduli[r]`.
pub(crate) fn kernel_subquotient_sparse(
    source: &FinAbGroup,
    rows: &[SparseRow],
    row_moduli: &[BigInt],
) -> Result<Subquotient> {
    let a = source.num_generators();
    let lattice = preimage_lattice(a, rows, row_moduli);
    Subquotient::new(lattice, &relation_vectors(source), source.relation_orders())
}

/// The inclusion of a subquotient's group whose lattice lies in `ambient`
/// and whose relations are exactly those of `ambient`.
pub(crate) fn subquotient_inclusion(sq: &Subquotient, ambient: &FinAbGroup) -> Result<AbHom> {
    AbHom::from_images(sq.group().clone(), ambient.clone(), sq.generators())
}

pub fn hom_check_compose(f: &AbHom, g: &AbHom) -> Result<AbHom> {
    let c = f.compose(g)?;
    AbHom::new(c.source.clone(), c.target.clone(), c.matrix.clone())
}

pub fn kernel_of_hom(f: &AbHom) -> Result<(FinAbGroup, AbHom)> {
    f.kernel()
}

pub fn cokernel_of_hom(f: &AbHom) -> Result<(FinAbGroup, AbHom)> {
    f.cokernel()
}

impl Serialize for AbHom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbHom", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        let rows: Vec<Vec<_>> = (0..self.matrix.rows())
            .map(|i| self.matrix.row(i).iter().map(big_json).collect())
            .collect();
        st.serialize_field("matrix", &rows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::from_orders(orders).unwrap()
    }

    fn factors(a: &FinAbGroup) -> Vec<u64> {
        a.invariant_factors().iter().map(|d| d.to_u64().unwrap()).collect()
    }

    fn hom(src: &FinAbGroup, tgt: &FinAbGroup, rows: &[Vec<i64>]) -> AbHom {
        AbHom::new(src.clone(), tgt.clone(), IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn relations_to_invariant_factors() {
        let r = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]).unwrap();
        assert_eq!(factors(&fin_ab_from_relations(2, &r).unwrap()), vec![2, 4]);
        let r = IntMatrix::from_rows(&[vec![2, 2], vec![0, 2]]).unwrap();
        assert_eq!(factors(&fin_ab_from_relations(2, &r).unwrap()), vec![2, 2]);
        let r = IntMatrix::zeros(0, 3);
        assert_eq!(fin_ab_from_relations(3, &r).unwrap(), FinAbGroup::free(3));
    }

    #[test]
    fn direct_sums() {
        assert_eq!(direct_sum(&[]), FinAbGroup::trivial());
        assert_eq!(direct_sum(&[g(&[2]), g(&[3])]), g(&[6]));
        assert_eq!(factors(&direct_sum(&[g(&[2]), g(&[4]), g(&[2])])), vec![2, 2, 4]);
        assert_eq!(factors(&direct_sum(&[g(&[6]), g(&[10]), g(&[15])])), vec![30, 30]);
        assert_eq!(g(&[2]).power(10), g(&[2; 10]));
        assert_eq!(factors(&g(&[4, 6])), vec![2, 12]);
    }

    #[test]
    fn primary_parts_and_invariants() {
        assert_eq!(ell_primary_part(&g(&[12]), 2).unwrap(), g(&[4]));
        assert_eq!(ell_primary_part(&g(&[3]), 2).unwrap(), FinAbGroup::trivial());
        assert_eq!(ell_primary_part(&g(&[2, 12]), 2).unwrap(), g(&[2, 4]));
        assert!(ell_primary_part(&g(&[2]), 4).is_err());
        let a = g(&[2, 4]);
        assert_eq!(evaluate_invariant(AdditiveInvariant::EllRank(2), &a).unwrap(), 2);
        assert_eq!(evaluate_invariant(AdditiveInvariant::EllLength(2), &a).unwrap(), 3);
        assert_eq!(evaluate_invariant(AdditiveInvariant::EllRank(3), &g(&[12])).unwrap(), 1);
        assert!(evaluate_invariant(AdditiveInvariant::EllRank(2), &FinAbGroup::free(1)).is_err());
    }

    #[test]
    fn ill_defined_hom_names_generator() {
        let err = AbHom::new(g(&[2]), g(&[3]), IntMatrix::from_rows(&[vec![1]]).unwrap()).unwrap_err();
        assert!(err.to_string().contains("generator 0"), "{err}");
    }

    #[test]
    fn composition_mod_relations() {
        let c4 = g(&[4]);
        let two = hom(&c4, &c4, &[vec![2]]);
        assert!(hom_check_compose(&two, &two).unwrap().is_zero());
        let id = AbHom::identity(&c4);
        assert_eq!(two.compose(&id).unwrap(), two);
    }

    #[test]
    fn kernel_cokernel_image_of_times_two() {
        let c4 = g(&[4]);
        let two = hom(&c4, &c4, &[vec![2]]);
        let (k, inc) = two.kernel().unwrap();
        assert_eq!(k, g(&[2]));
        assert_eq!(inc.apply(&[BigInt::one()]), vec![BigInt::from(2)]);
        let (c, p) = two.cokernel().unwrap();
        assert_eq!(c, g(&[2]));
        assert!(p.compose(&two).unwrap().is_zero());
        let (im, _, _) = two.image().unwrap();
        assert_eq!(im, g(&[2]));

        let z = FinAbGroup::free(1);
        let six = hom(&z, &z, &[vec![6]]);
        assert_eq!(six.cokernel().unwrap().0, g(&[6]));
        assert_eq!(six.kernel().unwrap().0, FinAbGroup::trivial());
    }

    #[test]
    fn display() {
        assert_eq!(g(&[]).to_string(), "0");
        assert_eq!(g(&[2, 4]).to_string(), "Z/2 + Z/4");
        assert_eq!(g(&[2, 2, 2, 4]).to_string(), "(Z/2)^3 + Z/4");
        assert_eq!(direct_sum(&[g(&[3]), FinAbGroup::free(2)]).to_string(), "Z/3 + Z^2");
    }
}
