//! Multiplicative norm on the free split covering `R^d → R` with
//! `R = Z/n` (or `Z` when `n = 0`).
//!
//! A module over the covering is a tuple of free ranks `(m_1, …, m_d)` and
//! its norm is the tensor product, of rank `∏ m_k`. On morphisms the norm is
//! the Kronecker product with the last tensor index varying fastest.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::IntMatrix;
use crate::catalog;
use crate::error::{contract_err, input_err, Error, Result};
use crate::group::Permutation;

/// Largest norm rank the demo harness will build.
pub const NORM_DIM_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRing {
    modulus: BigInt,
}

impl ResidueRing {
    /// `n = 0` gives `Z`; `n = 1` is rejected.
    pub fn new(n: u64) -> Result<Self> {
        if n == 1 {
            return Err(input_err!("modulus must be 0 or at least 2"));
        }
        Ok(ResidueRing { modulus: BigInt::from(n) })
    }

    pub fn integers() -> Self {
        ResidueRing { modulus: BigInt::zero() }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn reduce(&self, x: &BigInt) -> BigInt {
        if self.modulus.is_zero() {
            x.clone()
        } else {
            x.mod_floor(&self.modulus)
        }
    }

    pub fn reduce_matrix(&self, a: &IntMatrix) -> IntMatrix {
        if self.modulus.is_zero() {
            a.clone()
        } else {
            a.reduced_mod(&self.modulus)
        }
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        if self.modulus.is_zero() {
            x.abs().is_one()
        } else {
            x.gcd(&self.modulus).is_one()
        }
    }

    pub fn pow(&self, x: &BigInt, e: u32) -> BigInt {
        if self.modulus.is_zero() {
            x.pow(e)
        } else {
            x.modpow(&BigInt::from(e), &self.modulus)
        }
    }

    /// A uniformly random residue; over `Z` entries come from `[-9, 9]`.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> BigInt {
        if self.modulus.is_zero() {
            BigInt::from(rng.gen_range(-9i64..=9))
        } else {
            let n: u64 = (&self.modulus).try_into().unwrap_or(u64::MAX);
            BigInt::from(rng.gen_range(0..n))
        }
    }

    pub fn random_unit<R: Rng>(&self, rng: &mut R) -> BigInt {
        if self.modulus.is_zero() {
            return if rng.gen::<bool>() { BigInt::one() } else { -BigInt::one() };
        }
        loop {
            let x = self.random_element(rng);
            if self.is_unit(&x) {
                return x;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCovering {
    base: ResidueRing,
    degree: usize,
}

impl SplitCovering {
    pub fn new(base: ResidueRing, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(input_err!("covering degree must be at least 1"));
        }
        Ok(SplitCovering { base, degree })
    }

    pub fn base(&self) -> &ResidueRing {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitModule {
    covering: SplitCovering,
    ranks: Vec<usize>,
}

impl SplitModule {
    pub fn new(covering: &SplitCovering, ranks: Vec<usize>) -> Result<Self> {
        if ranks.len() != covering.degree {
            return Err(input_err!("expected {} ranks, got {}", covering.degree, ranks.len()));
        }
        Ok(SplitModule { covering: covering.clone(), ranks })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covering(&self) -> &SplitCovering {
        &self.covering
    }
}

/// A morphism of split modules: one matrix per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple {
    covering: SplitCovering,
    components: Vec<IntMatrix>,
}

impl MatrixTuple {
    pub fn new(covering: &SplitCovering, components: Vec<IntMatrix>) -> Result<Self> {
        if components.len() != covering.degree {
            return Err(input_err!("expected {} components, got {}", covering.degree, components.len()));
        }
        let components = components.iter().map(|c| covering.base.reduce_matrix(c)).collect();
        Ok(MatrixTuple { covering: covering.clone(), components })
    }

    pub fn identity(module: &SplitModule) -> Self {
        MatrixTuple {
            covering: module.covering.clone(),
            components: module.ranks.iter().map(|&m| IntMatrix::identity(m)).collect(),
        }
    }

    pub fn components(&self) -> &[IntMatrix] {
        &self.components
    }

    pub fn covering(&self) -> &SplitCovering {
        &self.covering
    }

    /// Componentwise `self ∘ other`.
    pub fn compose(&self, other: &MatrixTuple) -> Result<MatrixTuple> {
        if self.covering != other.covering {
            return Err(input_err!("tuples live over different coverings"));
        }
        let mut comps = Vec::with_capacity(self.components.len());
        for (k, (a, b)) in self.components.iter().zip(&other.components).enumerate() {
            let p = a
                .checked_mul(b)
                .map_err(|_| input_err!("component {k}: cannot compose {:?} with {:?}", a.shape(), b.shape()))?;
            comps.push(self.covering.base.reduce_matrix(&p));
        }
        Ok(MatrixTuple { covering: self.covering.clone(), components: comps })
    }

    /// `(σ·t)_k = t_{σ⁻¹(k)}`.
    pub fn shuffle(&self, sigma: &Permutation) -> Result<MatrixTuple> {
        let d = self.covering.degree;
        if sigma.degree() != d {
            return Err(input_err!("permutation has degree {}, covering has degree {d}", sigma.degree()));
        }
        let inv = sigma.inverse();
        let components = (0..d).map(|k| self.components[inv.apply(k)].clone()).collect();
        Ok(MatrixTuple { covering: self.covering.clone(), components })
    }

    pub fn random<R: Rng>(covering: &SplitCovering, shapes: &[(usize, usize)], rng: &mut R) -> Result<MatrixTuple> {
        let comps = shapes
            .iter()
            .map(|&(r, c)| {
                let data = (0..r * c).map(|_| covering.base.random_element(rng)).collect();
                IntMatrix::new(r, c, data)
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixTuple::new(covering, comps)
    }
}

/// The norm of a module: the free module of rank `∏ m_k`.
pub fn norm_module(module: &SplitModule) -> BigInt {
    module.ranks.iter().map(|&m| BigInt::from(m)).product()
}

/// `t_1 ⊗ … ⊗ t_d` for `t: source → target`.
pub fn norm_hom(t: &MatrixTuple, source: &SplitModule, target: &SplitModule) -> Result<IntMatrix> {
    if t.covering != source.covering || t.covering != target.covering {
        return Err(input_err!("tuple and modules live over different coverings"));
    }
    for (k, c) in t.components.iter().enumerate() {
        let want = (target.ranks[k], source.ranks[k]);
        if c.shape() != want {
            return Err(input_err!(
                "component {k} has shape {:?}, expected {:?}",
                c.shape(),
                want
            ));
        }
    }
    Ok(kron_all(&t.covering.base, &t.components))
}

fn kron_all(ring: &ResidueRing, comps: &[IntMatrix]) -> IntMatrix {
    let mut acc = IntMatrix::identity(1);
    for c in comps {
        acc = ring.reduce_matrix(&acc.kron(c));
    }
    acc
}

fn endo_module(t: &MatrixTuple) -> Result<SplitModule> {
    let mut ranks = Vec::with_capacity(t.components.len());
    for (k, c) in t.components.iter().enumerate() {
        let (r, cols) = c.shape();
        if r != cols {
            return Err(input_err!("component {k} is not square ({r}x{cols})"));
        }
        ranks.push(r);
    }
    SplitModule::new(&t.covering, ranks)
}

/// `N(t∘u) = N(t)·N(u)` and `N(id) = id` for endomorphism tuples.
pub fn delta_monoid_check(t: &MatrixTuple, u: &MatrixTuple) -> Result<bool> {
    let m = endo_module(t)?;
    if endo_module(u)? != m {
        return Err(input_err!("tuples act on different modules"));
    }
    let ring = &t.covering.base;
    let lhs = norm_hom(&t.compose(u)?, &m, &m)?;
    let rhs = ring.reduce_matrix(&norm_hom(t, &m, &m)?.checked_mul(&norm_hom(u, &m, &m)?)?);
    let id = norm_hom(&MatrixTuple::identity(&m), &m, &m)?;
    Ok(lhs == rhs && id == IntMatrix::identity(id.rows()))
}

/// Norm of a unit of `R^d`: the product of its components.
pub fn norm_unit(covering: &SplitCovering, units: &[BigInt]) -> Result<BigInt> {
    if units.len() != covering.degree {
        return Err(input_err!("expected {} components, got {}", covering.degree, units.len()));
    }
    let ring = &covering.base;
    let mut prod = BigInt::one();
    for (k, u) in units.iter().enumerate() {
        if !ring.is_unit(u) {
            return Err(input_err!("component {k} ({u}) is not a unit"));
        }
        prod = ring.reduce(&(prod * u));
    }
    // the same value through the matrix norm of 1x1 blocks
    let blocks = units.iter().map(|u| IntMatrix::scalar(1, u)).collect();
    let as_matrix = norm_hom(
        &MatrixTuple::new(covering, blocks)?,
        &SplitModule::new(covering, vec![1; covering.degree])?,
        &SplitModule::new(covering, vec![1; covering.degree])?,
    )?;
    if *as_matrix.get(0, 0) != prod {
        return Err(contract_err!("unit norm {prod} disagrees with 1x1 Kronecker {}", as_matrix.get(0, 0)));
    }
    Ok(prod)
}

/// `N(u, …, u) = u^d`.
pub fn cohomological_degree_check(covering: &SplitCovering, u: &BigInt) -> Result<bool> {
    let n = norm_unit(covering, &vec![u.clone(); covering.degree])?;
    Ok(n == covering.base.pow(u, covering.degree as u32))
}

/// The tensor-factor shuffle `P` with `P·N(t)·Pᵀ = N(σ·t)`, and whether that
/// identity holds for `t`.
pub fn shuffle_conjugation_witness(sigma: &Permutation, t: &MatrixTuple) -> Result<(IntMatrix, bool)> {
    let m = endo_module(t)?;
    let shuffled = t.shuffle(sigma)?;
    let m2 = endo_module(&shuffled)?;
    let p = shuffle_matrix(sigma, m.ranks())?;
    let ring = &t.covering.base;
    let lhs = ring.reduce_matrix(&p.checked_mul(&norm_hom(t, &m, &m)?)?.checked_mul(&p.transpose())?);
    let rhs = norm_hom(&shuffled, &m2, &m2)?;
    Ok((p, lhs == rhs))
}

/// Permutation matrix sending `e_{i_1} ⊗ … ⊗ e_{i_d}` to the basis vector
/// with `j_k = i_{σ⁻¹(k)}`.
pub fn shuffle_matrix(sigma: &Permutation, ranks: &[usize]) -> Result<IntMatrix> {
    let d = ranks.len();
    if sigma.degree() != d {
        return Err(input_err!("permutation has degree {}, expected {d}", sigma.degree()));
    }
    let inv = sigma.inverse();
    let new_ranks: Vec<usize> = (0..d).map(|k| ranks[inv.apply(k)]).collect();
    let dim: usize = ranks.iter().product();
    let mut p = IntMatrix::zeros(dim, dim);
    let mut idx = vec![0usize; d];
    for src in 0..dim {
        let mut rest = src;
        for k in (0..d).rev() {
            idx[k] = rest % ranks[k];
            rest /= ranks[k];
        }
        let mut dst = 0;
        for k in 0..d {
            dst = dst * new_ranks[k] + idx[inv.apply(k)];
        }
        p.set(dst, src, BigInt::one());
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct NormCheck {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormHarnessReport {
    pub modulus: u64,
    pub degree: usize,
    pub ranks: Vec<usize>,
    pub seed: u64,
    pub norm_rank: String,
    pub checks: Vec<NormCheck>,
}

impl NormHarnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

fn tally(name: &str, results: impl Iterator<Item = Result<(bool, String)>>) -> Result<NormCheck> {
    let mut check = NormCheck { name: name.to_string(), instances: 0, failures: 0, witness: None };
    for r in results {
        let (ok, what) = r?;
        check.instances += 1;
        if !ok {
            check.failures += 1;
            check.witness.get_or_insert(what);
        }
    }
    Ok(check)
}

/// Seeded exercise of the norm identities on one module.
pub fn norm_harness(modulus: u64, ranks: &[usize], seed: u64, instances: usize) -> Result<NormHarnessReport> {
    let degree = ranks.len();
    let covering = SplitCovering::new(ResidueRing::new(modulus)?, degree)?;
    let module = SplitModule::new(&covering, ranks.to_vec())?;
    let rank = norm_module(&module);
    if rank > BigInt::from(NORM_DIM_CAP) {
        return Err(Error::Size {
            what: "norm rank".to_string(),
            actual: (&rank).try_into().unwrap_or(u128::MAX),
            limit: NORM_DIM_CAP as u128,
        });
    }
    let dim: usize = ranks.iter().product();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: Vec<(usize, usize)> = ranks.iter().map(|&m| (m, m)).collect();
    let mut checks = Vec::new();

    checks.push(tally(
        "rank",
        std::iter::once(Ok((norm_hom(&MatrixTuple::identity(&module), &module, &module)?.rows() == dim, format!("{rank}")))),
    )?);

    let pairs: Vec<(MatrixTuple, MatrixTuple)> = (0..instances)
        .map(|_| Ok((MatrixTuple::random(&covering, &shapes, &mut rng)?, MatrixTuple::random(&covering, &shapes, &mut rng)?)))
        .collect::<Result<_>>()?;
    checks.push(tally(
        "monoid",
        pairs.iter().enumerate().map(|(i, (t, u))| Ok((delta_monoid_check(t, u)?, format!("instance {i}")))),
    )?);

    let ring = covering.base();
    let mut units = Vec::with_capacity(instances);
    for _ in 0..instances {
        let a: Vec<BigInt> = (0..degree).map(|_| ring.random_unit(&mut rng)).collect();
        let b: Vec<BigInt> = (0..degree).map(|_| ring.random_unit(&mut rng)).collect();
        units.push((a, b));
    }
    checks.push(tally(
        "unit_multiplicative",
        units.iter().map(|(a, b)| {
            let ab: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| ring.reduce(&(x * y))).collect();
            let lhs = norm_unit(&covering, &ab)?;
            let rhs = ring.reduce(&(norm_unit(&covering, a)? * norm_unit(&covering, b)?));
            Ok((lhs == rhs, format!("a={a:?} b={b:?}")))
        }),
    )?);
    checks.push(tally(
        "degree",
        units.iter().map(|(a, _)| Ok((cohomological_degree_check(&covering, &a[0])?, format!("u={}", a[0])))),
    )?);

    let sigmas: Vec<Permutation> = if degree <= 5 {
        catalog::symmetric(degree).labels().map(|l| l.to_vec()).unwrap_or_default()
    } else {
        let mut cycle: Vec<usize> = (1..degree).collect();
        cycle.push(0);
        let mut swap: Vec<usize> = (0..degree).collect();
        swap.swap(0, 1);
        vec![Permutation::new(swap)?, Permutation::new(cycle)?]
    };
    let shuffle_samples = instances.clamp(1, 8);
    checks.push(tally(
        "shuffle",
        sigmas.iter().flat_map(|s| pairs.iter().take(shuffle_samples).map(move |(t, _)| (s, t))).map(|(s, t)| {
            let (_, ok) = shuffle_conjugation_witness(s, t)?;
            Ok((ok, format!("sigma={:?}", s.images())))
        }),
    )?);

    Ok(NormHarnessReport {
        modulus,
        degree,
        ranks: ranks.to_vec(),
        seed,
        norm_rank: rank.to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cov(n: u64, d: usize) -> SplitCovering {
        SplitCovering::new(ResidueRing::new(n).unwrap(), d).unwrap()
    }

    #[test]
    fn ranks_multiply() {
        let c = cov(5, 3);
        assert_eq!(norm_module(&SplitModule::new(&c, vec![2, 3, 4]).unwrap()), BigInt::from(24));
        assert!(SplitModule::new(&c, vec![2]).is_err());
    }

    #[test]
    fn kronecker_order() {
        let c = cov(0, 2);
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let m = SplitModule::new(&c, vec![2, 2]).unwrap();
        let n = norm_hom(&MatrixTuple::new(&c, vec![a.clone(), b.clone()]).unwrap(), &m, &m).unwrap();
        assert_eq!(n, a.kron(&b));
        assert_eq!(*n.get(0, 1), BigInt::from(1));
    }

    #[test]
    fn shape_error_names_component() {
        let c = cov(7, 2);
        let m = SplitModule::new(&c, vec![2, 2]).unwrap();
        let t = MatrixTuple::new(&c, vec![IntMatrix::identity(2), IntMatrix::identity(3)]).unwrap();
        let err = norm_hom(&t, &m, &m).unwrap_err().to_string();
        assert!(err.contains("component 1"), "{err}");
    }

    #[test]
    fn non_unit_rejected() {
        let c = cov(6, 2);
        assert!(norm_unit(&c, &[BigInt::from(5), BigInt::from(2)]).is_err());
        assert_eq!(norm_unit(&c, &[BigInt::from(5), BigInt::from(5)]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn harness_small() {
        let r = norm_harness(6, &[2, 1, 2], 7, 20).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.norm_rank, "4");
    }
}
