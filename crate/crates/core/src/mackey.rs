//! Cohomological Mackey functors in the subgroup encoding: a group `M(H)` for
//! every subgroup, with restriction, corestriction and conjugation maps
//! stored for every pair and every element.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian::{relation_vectors, subquotient_inclusion, AbHom, EchelonBasis, FinAbGroup, Subquotient};
use crate::error::{contract_err, input_err, precondition_err, Result};
use crate::group::{double_coset_reps, FiniteGroup, GroupHom};
use crate::lattice::SubgroupLattice;

#[derive(Clone, Debug, PartialEq)]
pub struct CohMackeyFunctor {
    lattice: Arc<SubgroupLattice>,
    values: Vec<FinAbGroup>,
    /// `(H, K) ↦ res^H_K : M(H) → M(K)` for `K ≤ H`.
    res: BTreeMap<(usize, usize), AbHom>,
    /// `(H, K) ↦ cor^H_K : M(K) → M(H)` for `K ≤ H`.
    cor: BTreeMap<(usize, usize), AbHom>,
    /// `conj[g][H] = c_{g,H} : M(H) → M(gHg^{-1})`.
    conj: Vec<Vec<AbHom>>,
}

impl CohMackeyFunctor {
    /// Checks that every structure map is present with the declared source
    /// and target. Axioms are not checked here.
    pub fn new(
        lattice: Arc<SubgroupLattice>,
        values: Vec<FinAbGroup>,
        res: BTreeMap<(usize, usize), AbHom>,
        cor: BTreeMap<(usize, usize), AbHom>,
        conj: Vec<Vec<AbHom>>,
    ) -> Result<Self> {
        let n = lattice.len();
        if values.len() != n {
            return Err(contract_err!("{} values for {n} subgroups", values.len()));
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|h| lattice.below(h).map(move |k| (h, k)))
            .collect();
        for (name, table) in [("res", &res), ("cor", &cor)] {
            if table.len() != pairs.len() {
                return Err(contract_err!("{name} has {} entries, expected {}", table.len(), pairs.len()));
            }
            for &(h, k) in &pairs {
                let f = table
                    .get(&(h, k))
                    .ok_or_else(|| contract_err!("{name} map for subgroups ({h}, {k}) is missing"))?;
                let (src, tgt) = if name == "res" { (h, k) } else { (k, h) };
                if f.source() != &values[src] || f.target() != &values[tgt] {
                    return Err(contract_err!("{name} map for subgroups ({h}, {k}) has the wrong shape"));
                }
            }
        }
        let order = lattice.group().order();
        if conj.len() != order || conj.iter().any(|row| row.len() != n) {
            return Err(contract_err!("conjugation table must be {order} x {n}"));
        }
        for (g, row) in conj.iter().enumerate() {
            for (h, f) in row.iter().enumerate() {
                if f.source() != &values[h] || f.target() != &values[lattice.conjugate(g, h)] {
                    return Err(contract_err!("conjugation by {g} on subgroup {h} has the wrong shape"));
                }
            }
        }
        Ok(CohMackeyFunctor {
            lattice,
            values,
            res,
            cor,
            conj,
        })
    }

    /// Builds the tables by calling the given constructors for every pair
    /// `K ≤ H` and every `(g, H)`.
    pub fn from_fns<R, C, J>(
        lattice: Arc<SubgroupLattice>,
        values: Vec<FinAbGroup>,
        mut res: R,
        mut cor: C,
        mut conj: J,
    ) -> Result<Self>
    where
        R: FnMut(usize, usize) -> Result<AbHom>,
        C: FnMut(usize, usize) -> Result<AbHom>,
        J: FnMut(usize, usize) -> Result<AbHom>,
    {
        let n = lattice.len();
        let mut res_t = BTreeMap::new();
        let mut cor_t = BTreeMap::new();
        for h in 0..n {
            for k in lattice.below(h).collect::<Vec<_>>() {
                res_t.insert((h, k), res(h, k)?);
                cor_t.insert((h, k), cor(h, k)?);
            }
        }
        let conj_t = (0..lattice.group().order())
            .map(|g| (0..n).map(|h| conj(g, h)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, values, res_t, cor_t, conj_t)
    }

    /// The functor with every value trivial.
    pub fn zero(lattice: Arc<SubgroupLattice>) -> Self {
        let t = FinAbGroup::trivial();
        let values = vec![t.clone(); lattice.len()];
        let z = AbHom::identity(&t);
        Self::from_fns(lattice, values, |_, _| Ok(z.clone()), |_, _| Ok(z.clone()), |_, _| Ok(z.clone()))
            .expect("zero functor is well formed")
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lattice.group()
    }

    pub fn values(&self) -> &[FinAbGroup] {
        &self.values
    }

    pub fn value(&self, h: usize) -> &FinAbGroup {
        &self.values[h]
    }

    /// `res^H_K`; panics unless `K ≤ H`.
    pub fn res(&self, h: usize, k: usize) -> &AbHom {
        &self.res[&(h, k)]
    }

    /// `cor^H_K`; panics unless `K ≤ H`.
    pub fn cor(&self, h: usize, k: usize) -> &AbHom {
        &self.cor[&(h, k)]
    }

    /// `c_{g,H}`.
    pub fn conj(&self, g: usize, h: usize) -> &AbHom {
        &self.conj[g][h]
    }

    /// Copy with one corestriction replaced; used to inject faults.
    pub fn with_cor(&self, h: usize, k: usize, f: AbHom) -> Result<Self> {
        let mut cor = self.cor.clone();
        if !cor.contains_key(&(h, k)) {
            return Err(input_err!("no corestriction for subgroups ({h}, {k})"));
        }
        cor.insert((h, k), f);
        Self::new(self.lattice.clone(), self.values.clone(), self.res.clone(), cor, self.conj.clone())
    }

    pub fn with_res(&self, h: usize, k: usize, f: AbHom) -> Result<Self> {
        let mut res = self.res.clone();
        if !res.contains_key(&(h, k)) {
            return Err(input_err!("no restriction for subgroups ({h}, {k})"));
        }
        res.insert((h, k), f);
        Self::new(self.lattice.clone(), self.values.clone(), res, self.cor.clone(), self.conj.clone())
    }

    pub fn summary(&self) -> FunctorSummary {
        FunctorSummary {
            subgroups: (0..self.lattice.len())
                .map(|h| SubgroupValue {
                    index: h,
                    order: self.lattice.order_of(h),
                    elements: self.lattice.subgroup(h).elements().to_vec(),
                    value: self.values[h].clone(),
                    display: self.values[h].to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctorSummary {
    pub subgroups: Vec<SubgroupValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupValue {
    pub index: usize,
    pub order: usize,
    pub elements: Vec<usize>,
    pub value: FinAbGroup,
    pub display: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    ByConstruction,
}

/// A reproducible counterexample: subgroup indices, group elements and the
/// source generator on which two maps differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subgroups: Vec<usize>,
    pub elements: Vec<usize>,
    pub generator: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub id: String,
    pub description: String,
    pub status: CheckStatus,
    pub instances: u64,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

struct Tally {
    check: AxiomCheck,
}

impl Tally {
    fn new(id: &str, description: &str) -> Self {
        Tally {
            check: AxiomCheck {
                id: id.into(),
                description: description.into(),
                status: CheckStatus::Pass,
                instances: 0,
                witness: None,
            },
        }
    }

    /// Compares two maps; the first mismatch becomes the witness.
    fn expect_eq(&mut self, lhs: &AbHom, rhs: &AbHom, subgroups: &[usize], elements: &[usize], what: &str) {
        self.check.instances += 1;
        if self.check.witness.is_some() {
            return;
        }
        if let Some(j) = lhs.first_difference(rhs) {
            self.check.status = CheckStatus::Fail;
            self.check.witness = Some(Witness {
                subgroups: subgroups.to_vec(),
                elements: elements.to_vec(),
                generator: Some(j),
                detail: what.into(),
            });
        }
    }

    fn done(self) -> AxiomCheck {
        self.check
    }
}

fn compose(f: &AbHom, g: &AbHom) -> AbHom {
    f.compose(g).expect("structure maps compose by construction")
}

/// Runs the full axiom suite. Each axiom records the number of identities
/// checked and the first counterexample.
pub fn verify_cohomological_mackey(m: &CohMackeyFunctor) -> AxiomReport {
    let lat = &m.lattice;
    let g = lat.group();
    let n = lat.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|h| lat.below(h).map(move |k| (h, k))).collect();
    let mut checks = Vec::new();

    let mut t = Tally::new("a", "res^H_H and cor^H_H are identities");
    for h in 0..n {
        let id = AbHom::identity(&m.values[h]);
        t.expect_eq(m.res(h, h), &id, &[h], &[], "res^H_H != id");
        t.expect_eq(m.cor(h, h), &id, &[h], &[], "cor^H_H != id");
    }
    checks.push(t.done());

    let mut t = Tally::new("b", "c_{h,H} is the identity for h in H");
    for h in 0..n {
        let id = AbHom::identity(&m.values[h]);
        for &x in lat.subgroup(h).elements() {
            t.expect_eq(m.conj(x, h), &id, &[h], &[x], "c_{h,H} != id");
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("c", "transitivity of restriction and corestriction");
    for &(h, k) in &pairs {
        for l in lat.below(k) {
            t.expect_eq(
                &compose(m.res(k, l), m.res(h, k)),
                m.res(h, l),
                &[h, k, l],
                &[],
                "res^K_L res^H_K != res^H_L",
            );
            t.expect_eq(
                &compose(m.cor(h, k), m.cor(k, l)),
                m.cor(h, l),
                &[h, k, l],
                &[],
                "cor^H_K cor^K_L != cor^H_L",
            );
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("d", "c_{g,hHh^-1} c_{h,H} = c_{gh,H}");
    for x in 0..g.order() {
        for y in 0..g.order() {
            let xy = g.mul(x, y);
            for h in 0..n {
                let yh = lat.conjugate(y, h);
                t.expect_eq(
                    &compose(m.conj(x, yh), m.conj(y, h)),
                    m.conj(xy, h),
                    &[h],
                    &[x, y],
                    "c_g c_h != c_gh",
                );
            }
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("e", "conjugation commutes with restriction and corestriction");
    for x in 0..g.order() {
        for &(h, k) in &pairs {
            let (xh, xk) = (lat.conjugate(x, h), lat.conjugate(x, k));
            t.expect_eq(
                &compose(m.conj(x, k), m.res(h, k)),
                &compose(m.res(xh, xk), m.conj(x, h)),
                &[h, k],
                &[x],
                "c_g res^H_K != res^gH_gK c_g",
            );
            t.expect_eq(
                &compose(m.conj(x, h), m.cor(h, k)),
                &compose(m.cor(xh, xk), m.conj(x, k)),
                &[h, k],
                &[x],
                "c_g cor^H_K != cor^gH_gK c_g",
            );
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("f", "double coset formula for res^H_K cor^H_L");
    for h in 0..n {
        let below: Vec<usize> = lat.below(h).collect();
        for &k in &below {
            for &l in &below {
                let lhs = compose(m.res(h, k), m.cor(h, l));
                let mut rhs = AbHom::zero(&m.values[l], &m.values[k]);
                let reps = double_coset_reps(g, lat.subgroup(h), lat.subgroup(k), lat.subgroup(l))
                    .expect("K and L lie in H");
                for &x in &reps {
                    // B = L ∩ x^{-1} K x, and x B x^{-1} = K ∩ x L x^{-1}
                    let b = lat.intersection(l, lat.conjugate(g.inv(x), k));
                    let a = lat.conjugate(x, b);
                    let term = compose(m.cor(k, a), &compose(m.conj(x, b), m.res(l, b)));
                    rhs = rhs.add(&term).expect("same shapes");
                }
                t.expect_eq(&lhs, &rhs, &[h, k, l], &reps, "res^H_K cor^H_L != double coset sum");
            }
        }
    }
    checks.push(t.done());

    let mut t = Tally::new("g", "cor^H_K res^H_K = [H:K]");
    for &(h, k) in &pairs {
        let idx = BigInt::from(lat.index_in(k, h));
        t.expect_eq(
            &compose(m.cor(h, k), m.res(h, k)),
            &AbHom::scalar(&m.values[h], idx),
            &[h, k],
            &[],
            "cor^H_K res^H_K != [H:K]",
        );
    }
    checks.push(t.done());

    checks.push(AxiomCheck {
        id: "additivity".into(),
        description: "additivity over disjoint unions of G-sets".into(),
        status: CheckStatus::ByConstruction,
        instances: 0,
        witness: None,
    });
    AxiomReport { checks }
}

/// A collection of homomorphisms `M(H) → N(H)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MackeyMorphism {
    source: Arc<CohMackeyFunctor>,
    target: Arc<CohMackeyFunctor>,
    components: Vec<AbHom>,
}

impl MackeyMorphism {
    pub fn new(source: Arc<CohMackeyFunctor>, target: Arc<CohMackeyFunctor>, components: Vec<AbHom>) -> Result<Self> {
        if source.lattice != target.lattice {
            return Err(contract_err!("source and target live on different groups"));
        }
        if components.len() != source.values.len() {
            return Err(contract_err!("{} components for {} subgroups", components.len(), source.values.len()));
        }
        for (h, f) in components.iter().enumerate() {
            if f.source() != &source.values[h] || f.target() != &target.values[h] {
                return Err(contract_err!("component at subgroup {h} has the wrong shape"));
            }
        }
        Ok(MackeyMorphism {
            source,
            target,
            components,
        })
    }

    pub fn identity(m: Arc<CohMackeyFunctor>) -> Self {
        let components = m.values.iter().map(AbHom::identity).collect();
        MackeyMorphism {
            source: m.clone(),
            target: m,
            components,
        }
    }

    pub fn zero(source: Arc<CohMackeyFunctor>, target: Arc<CohMackeyFunctor>) -> Result<Self> {
        let components = source
            .values
            .iter()
            .zip(&target.values)
            .map(|(a, b)| AbHom::zero(a, b))
            .collect();
        Self::new(source, target, components)
    }

    /// Multiplication by `k` on every value.
    pub fn scalar(m: Arc<CohMackeyFunctor>, k: i64) -> Self {
        let components = m.values.iter().map(|a| AbHom::scalar(a, k)).collect();
        MackeyMorphism {
            source: m.clone(),
            target: m,
            components,
        }
    }

    pub fn source(&self) -> &Arc<CohMackeyFunctor> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CohMackeyFunctor> {
        &self.target
    }

    pub fn components(&self) -> &[AbHom] {
        &self.components
    }

    pub fn component(&self, h: usize) -> &AbHom {
        &self.components[h]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MackeyMorphism) -> Result<MackeyMorphism> {
        if *other.target != *self.source {
            return Err(contract_err!("morphisms are not composable"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| f.compose(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(other.source.clone(), self.target.clone(), components)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(AbHom::is_zero)
    }

    /// Every component is bijective.
    pub fn is_isomorphism(&self) -> Result<bool> {
        for f in &self.components {
            if !f.kernel()?.0.is_trivial() || !f.cokernel()?.0.is_trivial() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn verify_mackey_morphism(f: &MackeyMorphism) -> AxiomReport {
    let (m, n) = (&f.source, &f.target);
    let lat = &m.lattice;
    let pairs: Vec<(usize, usize)> = (0..lat.len()).flat_map(|h| lat.below(h).map(move |k| (h, k))).collect();
    let mut t_res = Tally::new("res", "components commute with restriction");
    let mut t_cor = Tally::new("cor", "components commute with corestriction");
    for &(h, k) in &pairs {
        t_res.expect_eq(
            &compose(&f.components[k], m.res(h, k)),
            &compose(n.res(h, k), &f.components[h]),
            &[h, k],
            &[],
            "f_K res^H_K != res^H_K f_H",
        );
        t_cor.expect_eq(
            &compose(&f.components[h], m.cor(h, k)),
            &compose(n.cor(h, k), &f.components[k]),
            &[h, k],
            &[],
            "f_H cor^H_K != cor^H_K f_K",
        );
    }
    let mut t_conj = Tally::new("conj", "components commute with conjugation");
    for x in 0..lat.group().order() {
        for h in 0..lat.len() {
            let xh = lat.conjugate(x, h);
            t_conj.expect_eq(
                &compose(&f.components[xh], m.conj(x, h)),
                &compose(n.conj(x, h), &f.components[h]),
                &[h],
                &[x],
                "f c_g != c_g f",
            );
        }
    }
    AxiomReport {
        checks: vec![t_res.done(), t_cor.done(), t_conj.done()],
    }
}

/// Transports a structure map of `m` through subquotients: each generator
/// of the source subquotient is pushed along `f` and read in the target's
/// coordinates.
fn induced(f: &AbHom, source: &Subquotient, target: &Subquotient, what: &str) -> Result<AbHom> {
    let images = source
        .generators()
        .iter()
        .map(|x| {
            target
                .coordinates(&f.apply(x))
                .ok_or_else(|| contract_err!("induced {what} map leaves the subobject"))
        })
        .collect::<Result<Vec<_>>>()?;
    AbHom::from_images(source.group().clone(), target.group().clone(), &images)
}

fn induced_functor(m: &CohMackeyFunctor, sq: &[Subquotient]) -> Result<CohMackeyFunctor> {
    let values = sq.iter().map(|s| s.group().clone()).collect();
    let lat = &m.lattice;
    CohMackeyFunctor::from_fns(
        m.lattice.clone(),
        values,
        |h, k| induced(m.res(h, k), &sq[h], &sq[k], "restriction"),
        |h, k| induced(m.cor(h, k), &sq[k], &sq[h], "corestriction"),
        |g, h| induced(m.conj(g, h), &sq[h], &sq[lat.conjugate(g, h)], "conjugation"),
    )
}

/// Objectwise kernels with the inclusion into the source.
pub fn kernel_mackey(f: &MackeyMorphism) -> Result<(Arc<CohMackeyFunctor>, MackeyMorphism)> {
    let sq = f
        .components
        .iter()
        .map(|c| c.kernel_subquotient())
        .collect::<Result<Vec<_>>>()?;
    let k = Arc::new(induced_functor(&f.source, &sq)?);
    let inc = sq
        .iter()
        .zip(f.source.values.iter())
        .map(|(s, a)| subquotient_inclusion(s, a))
        .collect::<Result<Vec<_>>>()?;
    let inc = MackeyMorphism::new(k.clone(), f.source.clone(), inc)?;
    Ok((k, inc))
}

/// Objectwise cokernels with the projection from the target.
pub fn cokernel_mackey(f: &MackeyMorphism) -> Result<(Arc<CohMackeyFunctor>, MackeyMorphism)> {
    let sq = f
        .components
        .iter()
        .map(|c| {
            let b = c.target();
            let mut rel = relation_vectors(b);
            for j in 0..c.matrix().cols() {
                rel.push(c.matrix().column(j));
            }
            Subquotient::new(EchelonBasis::identity(b.num_generators()), &rel, b.relation_orders())
        })
        .collect::<Result<Vec<_>>>()?;
    let q = Arc::new(induced_functor(&f.target, &sq)?);
    let proj = sq
        .iter()
        .zip(f.target.values.iter())
        .map(|(s, b)| {
            let images: Vec<Vec<BigInt>> = (0..b.num_generators())
                .map(|j| {
                    let mut e = b.zero_element();
                    e[j] = BigInt::from(1);
                    s.coordinates(&e).expect("unit vectors lie in Z^b")
                })
                .collect();
            AbHom::from_images(b.clone(), s.group().clone(), &images)
        })
        .collect::<Result<Vec<_>>>()?;
    let proj = MackeyMorphism::new(f.target.clone(), q.clone(), proj)?;
    Ok((q, proj))
}

/// The functor on `G^op` with the same values, restrictions and
/// corestrictions, and `c'_{g,H} = c_{g^{-1},H}`.
pub fn opposite_mackey(m: &CohMackeyFunctor) -> Result<CohMackeyFunctor> {
    let g = m.group();
    let op = Arc::new(SubgroupLattice::new(Arc::new(g.opposite())));
    if op.subgroups() != m.lattice.subgroups() {
        return Err(contract_err!("opposite group has a different subgroup lattice"));
    }
    let conj = (0..g.order())
        .map(|x| m.conj[g.inv(x)].clone())
        .collect();
    CohMackeyFunctor::new(op, m.values.clone(), m.res.clone(), m.cor.clone(), conj)
}

/// `M_Q(H) = M(pr^{-1}(H))` along a surjection `pr : G → Q`. Conjugation
/// by `q` uses its smallest lift; a second lift, when there is one, must
/// give the same maps.
pub fn restrict_along_quotient(m: &CohMackeyFunctor, pr: &GroupHom) -> Result<CohMackeyFunctor> {
    if **pr.source() != **m.group() {
        return Err(input_err!("projection does not start at the functor's group"));
    }
    if !pr.is_surjective() {
        return Err(precondition_err!("projection is not surjective"));
    }
    let q = pr.target().clone();
    let qlat = Arc::new(SubgroupLattice::new(q.clone()));
    let pre: Vec<usize> = qlat
        .subgroups()
        .iter()
        .map(|h| {
            let elems: Vec<usize> = (0..pr.source().order()).filter(|&x| h.contains(pr.apply(x))).collect();
            m.lattice.index_of_elements(&elems).expect("preimages are subgroups")
        })
        .collect();
    let mut lifts: Vec<Vec<usize>> = vec![Vec::new(); q.order()];
    for x in 0..pr.source().order() {
        lifts[pr.apply(x)].push(x);
    }
    for (y, l) in lifts.iter().enumerate() {
        if l.len() < 2 {
            continue;
        }
        for h in 0..qlat.len() {
            if let Some(j) = m.conj(l[0], pre[h]).first_difference(m.conj(l[1], pre[h])) {
                return Err(contract_err!(
                    "conjugation by element {y} of the quotient depends on the lift (subgroup {h}, generator {j})"
                ));
            }
        }
    }
    let values = pre.iter().map(|&p| m.values[p].clone()).collect();
    CohMackeyFunctor::from_fns(
        qlat,
        values,
        |h, k| Ok(m.res(pre[h], pre[k]).clone()),
        |h, k| Ok(m.cor(pre[h], pre[k]).clone()),
        |y, h| Ok(m.conj(lifts[y][0], pre[h]).clone()),
    )
}

/// Pullback along `pr` followed by the opposite functor.
pub fn restrict_along_quotient_op(m: &CohMackeyFunctor, pr: &GroupHom) -> Result<CohMackeyFunctor> {
    opposite_mackey(&restrict_along_quotient(m, pr)?)
}
