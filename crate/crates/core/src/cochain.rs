//! Group cohomology through equivariant homogeneous cochains.
//!
//! A complex is built on an ambient subgroup `S` and an acting subgroup
//! `H ≤ S`: `C^n` is the group of `H`-equivariant maps `S^{n+1} → A`, stored
//! by its values on orbit representatives `(t, y_1, …, y_n)` with `t` a
//! right coset representative of `H` in `S`. Taking `S = G` gives one
//! ambient complex for all subgroups at once; taking `S = H` gives the much
//! smaller intrinsic complex of `H`, which is what the cohomology functor is
//! computed from.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{relation_vectors, AbHom, FinAbGroup, IntMatrix, SparseRow, Subquotient};
use crate::arith::reduce_in_place;
use crate::error::{contract_err, input_err, Error, Result};
use crate::gmodule::{fixed_point_mackey_on, fixed_point_subquotient, GModule};
use crate::group::{left_coset_reps, RightCosets, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::mackey::{CohMackeyFunctor, MackeyMorphism};

/// Default bound on `|S|^{n_max+1}`, the representative count of the top
/// cochain group for the trivial acting subgroup.
pub const DEFAULT_COCHAIN_CAP: usize = 4096;

/// Largest degree for which the cohomology functor is offered.
pub const MAX_COHOMOLOGY_DEGREE: usize = 2;

/// A linear map `Z^cols → ⊕ Z/row_moduli` given by sparse rows.
#[derive(Clone, Debug)]
pub struct SparseMap {
    cols: usize,
    rows: Vec<SparseRow>,
    row_moduli: Vec<BigInt>,
}

impl SparseMap {
    fn new(cols: usize, rows: Vec<BTreeMap<usize, BigInt>>, row_moduli: Vec<BigInt>) -> Self {
        let rows = rows
            .into_iter()
            .zip(&row_moduli)
            .map(|(r, m)| {
                r.into_iter()
                    .filter_map(|(c, mut v)| {
                        reduce_in_place(&mut v, m);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        SparseMap { cols, rows, row_moduli }
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row_moduli(&self) -> &[BigInt] {
        &self.row_moduli
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMap) -> Result<SparseMap> {
        if self.cols != other.rows.len() {
            return Err(contract_err!(
                "cannot compose sparse maps: {} columns after {} rows",
                self.cols,
                other.rows.len()
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (m, v) in row {
                    for (c, w) in &other.rows[*m] {
                        *acc.entry(*c).or_insert_with(BigInt::zero) += v * w;
                    }
                }
                acc
            })
            .collect();
        Ok(SparseMap::new(other.cols, rows, self.row_moduli.clone()))
    }

    pub fn scale(&self, k: &BigInt) -> SparseMap {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v * k)).collect())
            .collect();
        SparseMap::new(self.cols, rows, self.row_moduli.clone())
    }

    /// Exact equality of the reduced matrices.
    pub fn same_as(&self, other: &SparseMap) -> bool {
        self.cols == other.cols && self.rows == other.rows && self.row_moduli == other.row_moduli
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "vector length");
        self.rows
            .iter()
            .zip(&self.row_moduli)
            .map(|(r, m)| {
                let mut s = BigInt::zero();
                for (c, v) in r {
                    if !x[*c].is_zero() {
                        s += v * &x[*c];
                    }
                }
                reduce_in_place(&mut s, m);
                s
            })
            .collect()
    }

    fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                m.set(i, *c, v.clone());
            }
        }
        m
    }
}

/// `H`-equivariant cochains `S^{n+1} → A` for `n = 0, …, n_max`.
#[derive(Clone, Debug)]
pub struct EquivariantCochainComplex {
    module: GModule,
    ambient: Subgroup,
    subgroup: Subgroup,
    n_max: usize,
    /// Position of each element of `G` inside `S`, or `usize::MAX`.
    s_pos: Vec<usize>,
    s_elems: Vec<usize>,
    coset_reps: Vec<usize>,
    /// For `x ∈ S`: `(coset, h)` with `x = h · coset_reps[coset]`.
    split: Vec<(usize, usize)>,
    groups: Vec<FinAbGroup>,
    boundaries: Vec<SparseMap>,
}

/// Complex on the ambient group `G` with the default size cap.
pub fn cochain_complex(module: &GModule, h: &Subgroup, n_max: usize) -> Result<EquivariantCochainComplex> {
    let whole = Subgroup::whole(module.group());
    EquivariantCochainComplex::new(module, &whole, h, n_max, DEFAULT_COCHAIN_CAP)
}

fn checked_pow(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

impl EquivariantCochainComplex {
    pub fn new(module: &GModule, ambient: &Subgroup, h: &Subgroup, n_max: usize, cap: usize) -> Result<Self> {
        let g = module.group();
        ambient.ensure_in(g)?;
        h.ensure_in(g)?;
        if !h.is_subset_of(ambient) {
            return Err(input_err!("acting subgroup is not contained in the ambient subgroup"));
        }
        let top = checked_pow(ambient.order(), n_max + 1);
        if top > cap as u128 {
            return Err(Error::Size {
                what: format!("cochain representatives |S|^{} for |S| = {}", n_max + 1, ambient.order()),
                actual: top,
                limit: cap as u128,
            });
        }
        let mut s_pos = vec![usize::MAX; g.order()];
        for (i, &x) in ambient.elements().iter().enumerate() {
            s_pos[x] = i;
        }
        let mut split = vec![(usize::MAX, usize::MAX); g.order()];
        let mut coset_reps = Vec::new();
        let order: Vec<usize> = std::iter::once(g.identity())
            .chain(ambient.elements().iter().copied().filter(|&x| x != g.identity()))
            .collect();
        for x in order {
            if split[x].0 != usize::MAX {
                continue;
            }
            let c = coset_reps.len();
            coset_reps.push(x);
            for &y in h.elements() {
                split[g.mul(y, x)] = (c, y);
            }
        }
        let carrier = module.carrier();
        let groups = (0..=n_max)
            .map(|n| carrier.power((coset_reps.len() * ambient.order().pow(n as u32)) as u64))
            .collect();
        let mut cx = EquivariantCochainComplex {
            module: module.clone(),
            ambient: ambient.clone(),
            subgroup: h.clone(),
            n_max,
            s_pos,
            s_elems: ambient.elements().to_vec(),
            coset_reps,
            split,
            groups,
            boundaries: Vec::new(),
        };
        cx.boundaries = (0..n_max).map(|n| cx.build_boundary(n)).collect();
        for n in 0..n_max.saturating_sub(1) {
            let dd = cx.boundaries[n + 1].compose(&cx.boundaries[n])?;
            if !dd.is_zero() {
                return Err(contract_err!("d^{} d^{} is not zero", n + 1, n));
            }
        }
        Ok(cx)
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn ambient(&self) -> &Subgroup {
        &self.ambient
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of orbit representatives in degree `n`.
    pub fn representatives(&self, n: usize) -> usize {
        self.coset_reps.len() * self.s_elems.len().pow(n as u32)
    }

    /// `C^n` as an abelian group; coordinate `j·N + r` is carrier coordinate
    /// `j` at representative `r`.
    pub fn cochains(&self, n: usize) -> &FinAbGroup {
        &self.groups[n]
    }

    /// `d^n : C^n → C^{n+1}`.
    pub fn boundary(&self, n: usize) -> &SparseMap {
        &self.boundaries[n]
    }

    /// `d^n` as a dense homomorphism.
    pub fn boundary_hom(&self, n: usize) -> Result<AbHom> {
        AbHom::new(
            self.groups[n].clone(),
            self.groups[n + 1].clone(),
            self.boundaries[n].to_dense(),
        )
    }

    fn width(&self) -> usize {
        self.module.carrier().num_generators()
    }

    fn coordinate_moduli(&self, n: usize) -> Vec<BigInt> {
        let big_n = self.representatives(n);
        let orders = self.module.carrier().relation_orders();
        (0..self.width() * big_n).map(|i| orders[i / big_n].clone()).collect()
    }

    /// Representative index of `x ∈ S^{n+1}` and the `h ∈ H` with
    /// `x = h · rep`.
    fn encode(&self, x: &[usize]) -> (usize, usize) {
        let g = self.module.group();
        let (c, h) = self.split[x[0]];
        debug_assert!(c != usize::MAX, "tuple leaves the ambient subgroup");
        let hinv = g.inv(h);
        let s = self.s_elems.len();
        let mut idx = c;
        for &y in &x[1..] {
            idx = idx * s + self.s_pos[g.mul(hinv, y)];
        }
        (h, idx)
    }

    fn decode(&self, n: usize, mut idx: usize) -> Vec<usize> {
        let s = self.s_elems.len();
        let mut out = vec![0; n + 1];
        for i in (1..=n).rev() {
            out[i] = self.s_elems[idx % s];
            idx /= s;
        }
        out[0] = self.coset_reps[idx];
        out
    }

    /// Adds `sign · A_h` applied to the source representative `rep` into the
    /// rows for target representative `target`.
    fn add_term(
        &self,
        rows: &mut [BTreeMap<usize, BigInt>],
        target_n: usize,
        target: usize,
        source_n: usize,
        rep: usize,
        h: usize,
        sign: &BigInt,
    ) {
        let a = self.module.action(h).matrix();
        let (nt, ns) = (target_n, source_n);
        for jt in 0..a.rows() {
            for js in 0..a.cols() {
                let v = a.get(jt, js);
                if v.is_zero() {
                    continue;
                }
                *rows[jt * nt + target].entry(js * ns + rep).or_insert_with(BigInt::zero) += sign * v;
            }
        }
    }

    fn build_boundary(&self, n: usize) -> SparseMap {
        let src = self.representatives(n);
        let tgt = self.representatives(n + 1);
        let mut rows = vec![BTreeMap::new(); self.width() * tgt];
        let plus = BigInt::from(1);
        let minus = BigInt::from(-1);
        for r in 0..tgt {
            let x = self.decode(n + 1, r);
            for i in 0..=n + 1 {
                let face: Vec<usize> = x
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, &v)| v)
                    .collect();
                let (h, rep) = self.encode(&face);
                let sign = if i % 2 == 0 { &plus } else { &minus };
                self.add_term(&mut rows, tgt, r, src, rep, h, sign);
            }
        }
        SparseMap::new(self.width() * src, rows, self.coordinate_moduli(n + 1))
    }

    /// Value of the cochain `f ∈ C^n` at an arbitrary tuple of `S^{n+1}`.
    pub fn evaluate(&self, f: &[BigInt], x: &[usize]) -> Vec<BigInt> {
        let n = x.len() - 1;
        let big_n = self.representatives(n);
        let (h, rep) = self.encode(x);
        let local: Vec<BigInt> = (0..self.width()).map(|j| f[j * big_n + rep].clone()).collect();
        self.module.act(h, &local)
    }

    /// Builds a cochain of degree `n` from its value at each representative.
    fn cochain_from<F: FnMut(&[usize]) -> Vec<BigInt>>(&self, n: usize, mut value: F) -> Vec<BigInt> {
        let big_n = self.representatives(n);
        let mut out = vec![BigInt::zero(); self.width() * big_n];
        for r in 0..big_n {
            let x = self.decode(n, r);
            for (j, v) in value(&x).into_iter().enumerate() {
                out[j * big_n + r] = v;
            }
        }
        out
    }

    /// Sparse matrix of a cochain map into this complex whose value at a
    /// representative is a signed sum `Σ A_g · f(x_g)` over source tuples.
    fn map_from<F>(&self, source: &Self, n: usize, mut terms: F) -> SparseMap
    where
        F: FnMut(&[usize]) -> Vec<(usize, Vec<usize>)>,
    {
        let tgt = self.representatives(n);
        let src = source.representatives(n);
        let mut rows = vec![BTreeMap::new(); self.width() * tgt];
        let one = BigInt::from(1);
        let g = self.module.group();
        for r in 0..tgt {
            let x = self.decode(n, r);
            for (a, y) in terms(&x) {
                let (h, rep) = source.encode(&y);
                self.add_term(&mut rows, tgt, r, src, rep, g.mul(a, h), &one);
            }
        }
        SparseMap::new(source.width() * src, rows, self.coordinate_moduli(n))
    }

    fn require_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.module != other.module {
            return Err(input_err!("complexes live on different ambient data"));
        }
        Ok(())
    }

    /// Inclusion of `H`-equivariant into `K`-equivariant cochains, as a map
    /// from `self` (acting subgroup `H`) to `to` (acting subgroup `K ≤ H`).
    pub fn restriction_map(&self, to: &Self, n: usize) -> Result<SparseMap> {
        self.require_same_ambient(to)?;
        if !to.subgroup.is_subset_of(&self.subgroup) {
            return Err(input_err!("restriction needs K ≤ H"));
        }
        let e = self.module.group().identity();
        Ok(to.map_from(self, n, |x| vec![(e, x.to_vec())]))
    }

    /// The trace `f ↦ Σ_{t ∈ [H/K]} t·f(t^{-1}·−)` from `self` (acting
    /// subgroup `K`) to `to` (acting subgroup `H ≥ K`).
    pub fn transfer_map(&self, to: &Self, n: usize) -> Result<SparseMap> {
        self.require_same_ambient(to)?;
        if !self.subgroup.is_subset_of(&to.subgroup) {
            return Err(input_err!("transfer needs K ≤ H"));
        }
        let g = self.module.group().clone();
        let reps = left_coset_reps(&g, &to.subgroup, &self.subgroup);
        Ok(to.map_from(self, n, |x| {
            reps.iter()
                .map(|&t| {
                    let ti = g.inv(t);
                    (t, x.iter().map(|&y| g.mul(ti, y)).collect())
                })
                .collect()
        }))
    }

    /// `f ↦ g·f(g^{-1}·−)` from `self` (acting subgroup `H`) to `to`
    /// (acting subgroup `gHg^{-1}`); `g` must lie in the ambient subgroup.
    pub fn conjugation_map(&self, g: usize, to: &Self, n: usize) -> Result<SparseMap> {
        self.require_same_ambient(to)?;
        let grp = self.module.group().clone();
        if !self.ambient.contains(g) {
            return Err(input_err!("conjugating element is outside the ambient subgroup"));
        }
        let mut conj: Vec<usize> = self.subgroup.elements().iter().map(|&h| grp.conj(g, h)).collect();
        conj.sort_unstable();
        if conj != to.subgroup.elements() {
            return Err(input_err!("target complex is not for the conjugate subgroup"));
        }
        let gi = grp.inv(g);
        Ok(to.map_from(self, n, |x| vec![(g, x.iter().map(|&y| grp.mul(gi, y)).collect())]))
    }
}

/// `Z^n / B^n` with the cocycle lattice and relations pinned.
pub(crate) fn cohomology_subquotient(cx: &EquivariantCochainComplex, n: usize) -> Result<Subquotient> {
    if n >= cx.n_max {
        return Err(input_err!("degree {n} needs a complex built past degree {}", cx.n_max));
    }
    let c = &cx.groups[n];
    let d = &cx.boundaries[n];
    let cocycles = crate::abelian::preimage_lattice(c.num_generators(), d.rows(), d.row_moduli());
    let mut relations = relation_vectors(c);
    if n > 0 {
        let prev = &cx.boundaries[n - 1];
        let mut cols = vec![vec![BigInt::zero(); c.num_generators()]; prev.num_cols()];
        for (i, row) in prev.rows().iter().enumerate() {
            for (j, v) in row {
                cols[*j][i] = v.clone();
            }
        }
        relations.extend(cols.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())));
    }
    Subquotient::new(cocycles, &relations, c.relation_orders())
}

/// `H^n = ker d^n / im d^{n-1}`.
pub fn cohomology_group(cx: &EquivariantCochainComplex, n: usize) -> Result<FinAbGroup> {
    Ok(cohomology_subquotient(cx, n)?.group().clone())
}

/// Degree-`n` cohomology of one subgroup, from its intrinsic complex.
struct Intrinsic {
    complex: EquivariantCochainComplex,
    classes: Subquotient,
    /// `x ↦ r(x)` for `x = r(x)·t` in `G = ⊔ S t`.
    retraction: Vec<usize>,
}

impl Intrinsic {
    /// The intrinsic cochain extended to `G^{n+1}` through the retraction,
    /// evaluated at `y`.
    fn eval_extended(&self, f: &[BigInt], y: &[usize]) -> Vec<BigInt> {
        let k: Vec<usize> = y.iter().map(|&v| self.retraction[v]).collect();
        self.complex.evaluate(f, &k)
    }
}

fn add_into(acc: &mut [BigInt], v: Vec<BigInt>) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

/// `H ↦ H^n(H, A)` with restriction, transfer and conjugation.
pub fn cohomology_mackey(module: &GModule, n: usize) -> Result<CohMackeyFunctor> {
    cohomology_mackey_capped(module, n, DEFAULT_COCHAIN_CAP)
}

pub fn cohomology_mackey_capped(module: &GModule, n: usize, cap: usize) -> Result<CohMackeyFunctor> {
    let lattice = Arc::new(SubgroupLattice::new(module.group().clone()));
    let data = intrinsic_data(module, &lattice, n, cap)?;
    functor_from(module, lattice, &data, n)
}

/// The map `A^H → H^0(H, A)` sending a fixed point to its constant cochain.
pub fn fixed_point_comparison(module: &GModule) -> Result<MackeyMorphism> {
    let lattice = Arc::new(SubgroupLattice::new(module.group().clone()));
    let data = intrinsic_data(module, &lattice, 0, DEFAULT_COCHAIN_CAP)?;
    let coh = Arc::new(functor_from(module, lattice.clone(), &data, 0)?);
    let fp = Arc::new(fixed_point_mackey_on(module, lattice.clone())?);
    let components = lattice
        .subgroups()
        .iter()
        .zip(&data)
        .map(|(h, d)| {
            let sq = fixed_point_subquotient(module, h)?;
            let images = sq
                .generators()
                .iter()
                .map(|a| {
                    let f = d.complex.cochain_from(0, |_| a.clone());
                    d.classes
                        .coordinates(&f)
                        .ok_or_else(|| contract_err!("a fixed point is not a 0-cocycle"))
                })
                .collect::<Result<Vec<_>>>()?;
            AbHom::from_images(sq.group().clone(), d.classes.group().clone(), &images)
        })
        .collect::<Result<Vec<_>>>()?;
    MackeyMorphism::new(fp, coh, components)
}

fn intrinsic_data(module: &GModule, lattice: &SubgroupLattice, n: usize, cap: usize) -> Result<Vec<Intrinsic>> {
    if n > MAX_COHOMOLOGY_DEGREE {
        return Err(input_err!("cohomology functor is offered for degrees 0..={MAX_COHOMOLOGY_DEGREE}, got {n}"));
    }
    let g = module.group().clone();
    let top = checked_pow(g.order(), n + 2);
    if top > cap as u128 {
        return Err(Error::Size {
            what: format!("cochain representatives |G|^{} for |G| = {}", n + 2, g.order()),
            actual: top,
            limit: cap as u128,
        });
    }
    lattice
        .subgroups()
        .iter()
        .map(|s| {
            let complex = EquivariantCochainComplex::new(module, s, s, n + 1, cap)?;
            let classes = cohomology_subquotient(&complex, n)?;
            let cosets = RightCosets::new(&g, s);
            let retraction = cosets.split.iter().map(|&(_, r)| r).collect();
            Ok(Intrinsic {
                complex,
                classes,
                retraction,
            })
        })
        .collect()
}

fn functor_from(module: &GModule, lattice: Arc<SubgroupLattice>, data: &[Intrinsic], n: usize) -> Result<CohMackeyFunctor> {
    let g = module.group().clone();
    let values = data.iter().map(|d| d.classes.group().clone()).collect();

    // pushes every generator class of `source` through `value` and reads the
    // result as a class of `target`
    let induced = |source: &Intrinsic, target: &Intrinsic, value: &dyn Fn(&[BigInt], &[usize]) -> Vec<BigInt>| {
        let images = source
            .classes
            .generators()
            .iter()
            .map(|f| {
                let image = target.complex.cochain_from(n, |x| value(f, x));
                target
                    .classes
                    .coordinates(&image)
                    .ok_or_else(|| contract_err!("structure map does not send cocycles to cocycles"))
            })
            .collect::<Result<Vec<_>>>()?;
        AbHom::from_images(source.classes.group().clone(), target.classes.group().clone(), &images)
    };
    let lat = lattice.clone();
    CohMackeyFunctor::from_fns(
        lattice.clone(),
        values,
        |h, k| induced(&data[h], &data[k], &|f, x| data[h].eval_extended(f, x)),
        |h, k| {
            let reps = left_coset_reps(&g, lat.subgroup(h), lat.subgroup(k));
            let src = &data[k];
            induced(src, &data[h], &|f, x| {
                let mut acc = module.carrier().zero_element();
                for &t in &reps {
                    let ti = g.inv(t);
                    let y: Vec<usize> = x.iter().map(|&v| g.mul(ti, v)).collect();
                    add_into(&mut acc, module.act(t, &src.eval_extended(f, &y)));
                }
                acc
            })
        },
        |x, h| {
            let xi = g.inv(x);
            let src = &data[h];
            induced(src, &data[lat.conjugate(x, h)], &|f, y| {
                let z: Vec<usize> = y.iter().map(|&v| g.mul(xi, v)).collect();
                module.act(x, &src.eval_extended(f, &z))
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::catalog;

    #[test]
    fn dimensions_and_boundaries() {
        let c2 = Arc::new(catalog::cyclic(2));
        let a = GModule::trivial(c2.clone(), FinAbGroup::cyclic(2)).unwrap();
        let cx = cochain_complex(&a, &Subgroup::trivial(&c2), 3).unwrap();
        assert_eq!(cx.cochains(2).num_generators(), 8);
        let whole = cochain_complex(&a, &Subgroup::whole(&c2), 3).unwrap();
        assert_eq!(whole.cochains(0).num_generators(), 1);
        for n in 0..2 {
            assert!(cx.boundary(n + 1).compose(cx.boundary(n)).unwrap().is_zero());
        }
    }

    #[test]
    fn h2_of_c2_with_z2() {
        let c2 = Arc::new(catalog::cyclic(2));
        let a = GModule::trivial(c2.clone(), FinAbGroup::cyclic(2)).unwrap();
        let cx = cochain_complex(&a, &Subgroup::whole(&c2), 3).unwrap();
        assert_eq!(cohomology_group(&cx, 2).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(cohomology_group(&cx, 1).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(cohomology_group(&cx, 0).unwrap(), FinAbGroup::cyclic(2));
        let cx1 = cochain_complex(&a, &Subgroup::trivial(&c2), 3).unwrap();
        assert!(cohomology_group(&cx1, 1).unwrap().is_trivial());
        assert!(cohomology_group(&cx1, 2).unwrap().is_trivial());
    }

    #[test]
    fn cap_is_enforced() {
        let d6 = Arc::new(catalog::dihedral(6));
        let a = GModule::trivial(d6, FinAbGroup::cyclic(2)).unwrap();
        assert!(matches!(cohomology_mackey(&a, 2), Err(Error::Size { .. })));
    }
}
