//! Finite G-modules and the fixed-point Mackey functor.

use std::collections::VecDeque;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::{
    kernel_subquotient_sparse, relation_vectors, subquotient_inclusion, AbHom, EchelonBasis, FinAbGroup, IntMatrix,
    SparseRow, Subquotient,
};
use crate::error::{contract_err, input_err, Result};
use crate::group::{left_coset_reps, FiniteGroup, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::mackey::CohMackeyFunctor;

/// A finite abelian group with a left action of `G` by automorphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    carrier: FinAbGroup,
    /// One automorphism per group element.
    action: Vec<AbHom>,
}

/// Extends generator actions along the Cayley graph and checks that the
/// result is a homomorphism `G → Aut(A)`.
pub fn gmodule_validate(group: Arc<FiniteGroup>, carrier: FinAbGroup, generator_actions: &[IntMatrix]) -> Result<GModule> {
    if !carrier.is_finite() {
        return Err(input_err!("module carrier {carrier} is not finite"));
    }
    let gens = group.generators().to_vec();
    if generator_actions.len() != gens.len() {
        return Err(input_err!(
            "{} generator actions for {} group generators",
            generator_actions.len(),
            gens.len()
        ));
    }
    let mut maps = Vec::with_capacity(gens.len());
    for (i, m) in generator_actions.iter().enumerate() {
        let f = AbHom::new(carrier.clone(), carrier.clone(), m.clone())
            .map_err(|e| contract_err!("action of generator {i}: {e}"))?;
        // an injective endomorphism of a finite group is bijective
        if !f.kernel()?.0.is_trivial() {
            return Err(contract_err!("generator {i} acts by a non-invertible map"));
        }
        maps.push(f);
    }
    let n = group.order();
    let mut action: Vec<Option<AbHom>> = vec![None; n];
    action[group.identity()] = Some(AbHom::identity(&carrier));
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            let candidate = action[x].as_ref().unwrap().compose(&maps[i])?;
            match &action[y] {
                None => {
                    action[y] = Some(candidate);
                    queue.push_back(y);
                }
                Some(existing) => {
                    if let Some(j) = existing.first_difference(&candidate) {
                        return Err(contract_err!(
                            "action is not multiplicative: element {x} times generator {i} disagrees on carrier generator {j}"
                        ));
                    }
                }
            }
        }
    }
    let action = action
        .into_iter()
        .map(|a| a.ok_or_else(|| contract_err!("group generators do not generate the group")))
        .collect::<Result<Vec<_>>>()?;
    Ok(GModule { group, carrier, action })
}

impl GModule {
    /// `A` with every element acting as the identity.
    pub fn trivial(group: Arc<FiniteGroup>, carrier: FinAbGroup) -> Result<Self> {
        let id = IntMatrix::identity(carrier.num_generators());
        let actions = vec![id; group.generators().len()];
        gmodule_validate(group, carrier, &actions)
    }

    /// `(Z/n)^k` permuted by a permutation group of degree `k`.
    pub fn permutation(group: Arc<FiniteGroup>, modulus: u64) -> Result<Self> {
        let labels = group
            .labels()
            .ok_or_else(|| input_err!("permutation module needs a permutation group"))?;
        let k = labels[0].degree();
        let carrier = FinAbGroup::from_orders(&vec![modulus; k])?;
        if carrier.num_generators() != k {
            return Err(input_err!("modulus {modulus} does not give a standard basis"));
        }
        let actions: Vec<IntMatrix> = group
            .generators()
            .iter()
            .map(|&s| {
                let p = &labels[s];
                let mut m = IntMatrix::zeros(k, k);
                for i in 0..k {
                    m.set(p.apply(i), i, BigInt::one());
                }
                m
            })
            .collect();
        gmodule_validate(group, carrier, &actions)
    }

    /// `Z/n` with generator `s` acting by the scalar `chi(s)`.
    pub fn character(group: Arc<FiniteGroup>, modulus: u64, chi: impl Fn(usize) -> i64) -> Result<Self> {
        let carrier = FinAbGroup::cyclic(modulus);
        let actions: Vec<IntMatrix> = group
            .generators()
            .iter()
            .map(|&s| IntMatrix::scalar(carrier.num_generators(), &BigInt::from(chi(s))))
            .collect();
        gmodule_validate(group, carrier, &actions)
    }

    /// `Z/n` twisted by the sign of a permutation group.
    pub fn sign(group: Arc<FiniteGroup>, modulus: u64) -> Result<Self> {
        let labels = group
            .labels()
            .ok_or_else(|| input_err!("sign module needs a permutation group"))?
            .to_vec();
        Self::character(group, modulus, |s| if labels[s].is_even() { 1 } else { -1 })
    }

    /// The submodule generated by the given carrier elements, with the
    /// inclusion.
    pub fn submodule_generated(&self, elements: &[Vec<BigInt>]) -> Result<(GModule, AbHom)> {
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for x in elements {
            for a in &self.action {
                gens.push(a.apply(x));
            }
        }
        let sq = span_subquotient(&self.carrier, gens)?;
        let sub = sq.group().clone();
        let inc = subquotient_inclusion(&sq, &self.carrier)?;
        let actions: Vec<IntMatrix> = self
            .group
            .generators()
            .iter()
            .map(|&s| {
                let cols: Vec<Vec<BigInt>> = sq
                    .generators()
                    .iter()
                    .map(|x| sq.coordinates(&self.action[s].apply(x)).expect("submodule is stable"))
                    .collect();
                IntMatrix::from_columns(sub.num_generators(), &cols)
            })
            .collect();
        let m = gmodule_validate(self.group.clone(), sub, &actions)?;
        Ok((m, inc))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn carrier(&self) -> &FinAbGroup {
        &self.carrier
    }

    pub fn action(&self, g: usize) -> &AbHom {
        &self.action[g]
    }

    pub fn act(&self, g: usize, x: &[BigInt]) -> Vec<BigInt> {
        self.action[g].apply(x)
    }
}

/// The subgroup of `b` generated by `gens`, in subquotient form.
fn span_subquotient(b: &FinAbGroup, mut gens: Vec<Vec<BigInt>>) -> Result<Subquotient> {
    let lambda = relation_vectors(b);
    gens.extend(lambda.iter().cloned());
    let basis = EchelonBasis::from_generators(b.num_generators(), gens, b.exponent().as_ref());
    Subquotient::new(basis, &lambda, b.relation_orders())
}

/// `A^H` as the kernel of `a ↦ (h·a − a)` over generators `h` of `H`.
pub(crate) fn fixed_point_subquotient(a: &GModule, h: &Subgroup) -> Result<Subquotient> {
    h.ensure_in(&a.group)?;
    let carrier = &a.carrier;
    let orders = carrier.relation_orders();
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut moduli = Vec::new();
    for x in a.group.greedy_generators(h.elements()) {
        let m = a.action[x].matrix();
        for i in 0..m.rows() {
            let row: SparseRow = (0..m.cols())
                .filter_map(|j| {
                    let mut v = m.get(i, j).clone();
                    if i == j {
                        v -= 1;
                    }
                    (!v.is_zero()).then_some((j, v))
                })
                .collect();
            rows.push(row);
            moduli.push(orders[i].clone());
        }
    }
    kernel_subquotient_sparse(carrier, &rows, &moduli)
}

pub fn fixed_points(a: &GModule, h: &Subgroup) -> Result<(FinAbGroup, AbHom)> {
    let sq = fixed_point_subquotient(a, h)?;
    let inc = subquotient_inclusion(&sq, &a.carrier)?;
    Ok((sq.group().clone(), inc))
}

/// `H ↦ A^H` with inclusion as restriction, the relative trace as
/// corestriction and `a ↦ g·a` as conjugation.
pub fn fixed_point_mackey(a: &GModule) -> Result<CohMackeyFunctor> {
    let lattice = Arc::new(SubgroupLattice::new(a.group.clone()));
    fixed_point_mackey_on(a, lattice)
}

pub(crate) fn fixed_point_mackey_on(a: &GModule, lattice: Arc<SubgroupLattice>) -> Result<CohMackeyFunctor> {
    let g = a.group.clone();
    let sq = lattice
        .subgroups()
        .iter()
        .map(|h| fixed_point_subquotient(a, h))
        .collect::<Result<Vec<_>>>()?;
    let values = sq.iter().map(|s| s.group().clone()).collect();
    let read = |target: &Subquotient, v: Vec<BigInt>| {
        target
            .coordinates(&v)
            .ok_or_else(|| contract_err!("structure map leaves the fixed points"))
    };
    let lat = lattice.clone();
    CohMackeyFunctor::from_fns(
        lattice.clone(),
        values,
        |h, k| {
            let images = sq[h]
                .generators()
                .iter()
                .map(|x| read(&sq[k], x.clone()))
                .collect::<Result<Vec<_>>>()?;
            AbHom::from_images(sq[h].group().clone(), sq[k].group().clone(), &images)
        },
        |h, k| {
            let reps = left_coset_reps(&g, lat.subgroup(h), lat.subgroup(k));
            let images = sq[k]
                .generators()
                .iter()
                .map(|x| {
                    let mut sum = a.carrier.zero_element();
                    for &t in &reps {
                        for (s, v) in sum.iter_mut().zip(a.act(t, x)) {
                            *s += v;
                        }
                    }
                    read(&sq[h], sum)
                })
                .collect::<Result<Vec<_>>>()?;
            AbHom::from_images(sq[k].group().clone(), sq[h].group().clone(), &images)
        },
        |x, h| {
            let xh = lat.conjugate(x, h);
            let images = sq[h]
                .generators()
                .iter()
                .map(|v| read(&sq[xh], a.act(x, v)))
                .collect::<Result<Vec<_>>>()?;
            AbHom::from_images(sq[h].group().clone(), sq[xh].group().clone(), &images)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::mackey::verify_cohomological_mackey;

    #[test]
    fn swap_on_two_copies_of_z3() {
        let c2 = Arc::new(catalog::cyclic(2));
        let a = GModule::permutation(c2.clone(), 3).unwrap();
        let (fixed, inc) = fixed_points(&a, &Subgroup::whole(&c2)).unwrap();
        assert_eq!(fixed, FinAbGroup::cyclic(3));
        // exhaustive scan: fixed vectors are exactly (x, x)
        let image = inc.apply(&[BigInt::one()]);
        assert_eq!(image[0], image[1]);
        let m = fixed_point_mackey(&a).unwrap();
        assert!(verify_cohomological_mackey(&m).passed());
        let whole = m.lattice().whole();
        let cr = m.cor(whole, 0).compose(m.res(whole, 0)).unwrap();
        assert_eq!(cr, AbHom::scalar(m.value(whole), 2));
    }

    #[test]
    fn non_invertible_action_is_rejected() {
        let c2 = Arc::new(catalog::cyclic(2));
        let err = gmodule_validate(c2, FinAbGroup::cyclic(4), &[IntMatrix::scalar(1, &BigInt::from(2))]).unwrap_err();
        assert!(err.to_string().contains("non-invertible"), "{err}");
    }

    #[test]
    fn non_multiplicative_action_is_rejected() {
        // the generator of C2 acting by an element of order 3
        let c2 = Arc::new(catalog::cyclic(2));
        let a = FinAbGroup::cyclic(7);
        assert!(gmodule_validate(c2, a, &[IntMatrix::scalar(1, &BigInt::from(2))]).is_err());
    }

    #[test]
    fn trivial_module_values_are_constant() {
        let s3 = Arc::new(catalog::symmetric(3));
        let a = GModule::trivial(s3, FinAbGroup::cyclic(2)).unwrap();
        let m = fixed_point_mackey(&a).unwrap();
        assert!(m.values().iter().all(|v| *v == FinAbGroup::cyclic(2)));
        for h in 0..m.lattice().len() {
            for k in m.lattice().below(h) {
                let idx = m.lattice().index_in(k, h);
                assert_eq!(m.cor(h, k), &AbHom::scalar(m.value(k), idx as i64));
                assert_eq!(m.res(h, k), &AbHom::identity(m.value(h)));
            }
        }
    }
}
