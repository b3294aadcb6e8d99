//! Finite groups as explicit Cayley tables, with the subgroup, quotient,
//! conjugation and double-coset primitives used by the rest of the crate.
//!
//! Elements are indices `0..order`. Groups built from permutation generators
//! enumerate their elements breadth-first from the identity, so the identity
//! is index 0 and the ordering is reproducible.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{contract_err, input_err, precondition_err, Error, Result};

/// Default bound on the number of elements produced by a closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Tables up to this order get a full associativity scan.
const FULL_ASSOCIATIVITY_SCAN: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(input_err!("{images:?} is not a bijection of 0..{n}"));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation of `0..degree` from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(input_err!("bad cycle {cycle:?} for degree {degree}"));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<Permutation>>,
}

impl FiniteGroup {
    /// Closure of `gens` under composition, elements in breadth-first order.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::from_generators_capped(degree, gens, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_generators_capped(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        for (k, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(input_err!(
                    "generator {k} has degree {}, expected {degree}",
                    g.degree()
                ));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for s in gens {
                let y = x.compose(s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::Size {
                            what: "group closure".into(),
                            actual: elements.len() as u128 + 1,
                            limit: cap as u128,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&a.compose(b)] as u32;
            }
        }
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverses,
            generators,
            labels: Some(elements),
        })
    }

    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(input_err!("table of length {} for order {order}", table.len()));
        }
        if table.iter().any(|&t| t >= order) {
            return Err(input_err!("table entry out of range"));
        }
        let table: Vec<u32> = table.into_iter().map(|t| t as u32).collect();
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| input_err!("table has no identity"))?;
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            inverses[x] = (0..order)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| input_err!("element {x} has no inverse"))?;
        }
        let mut group = FiniteGroup {
            order,
            table,
            identity,
            inverses,
            generators: Vec::new(),
            labels: None,
        };
        group.check_axioms()?;
        group.generators = group.greedy_generators(&(0..order).collect::<Vec<_>>());
        Ok(group)
    }

    /// Latin-square, identity, inverse and associativity checks. The
    /// associativity scan is exhaustive for small orders and strided above.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let r = self.mul(i, j);
                let c = self.mul(j, i);
                if row[r] || col[c] {
                    return Err(input_err!("table row/column {i} is not a bijection"));
                }
                row[r] = true;
                col[c] = true;
            }
            if self.mul(i, self.inverses[i]) != self.identity
                || self.mul(self.inverses[i], i) != self.identity
            {
                return Err(input_err!("inverse law fails at {i}"));
            }
            if self.mul(self.identity, i) != i || self.mul(i, self.identity) != i {
                return Err(input_err!("identity law fails at {i}"));
            }
        }
        let step = if n <= FULL_ASSOCIATIVITY_SCAN { 1 } else { n / 16 + 1 };
        for i in (0..n).step_by(step) {
            for j in 0..n {
                for k in (0..n).step_by(step) {
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        return Err(input_err!("associativity fails at ({i}, {j}, {k})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g h g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[Permutation]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> Option<&Permutation> {
        self.labels.as_ref().map(|l| &l[g])
    }

    /// Index of a permutation among the element labels.
    pub fn element_of(&self, p: &Permutation) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|q| q == p)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A small generating set of the subgroup with the given elements,
    /// chosen greedily in index order.
    pub fn greedy_generators(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for &x in elements {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == elements.len() {
                    break;
                }
            }
        }
        gens
    }

    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.table[j * n + i];
            }
        }
        FiniteGroup {
            order: n,
            table,
            identity: self.identity,
            inverses: self.inverses.clone(),
            generators: self.generators.clone(),
            labels: self.labels.clone(),
        }
    }
}

/// A subgroup, stored as its sorted element indices in the parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates that `elements` form a subgroup of `g`.
    pub fn new(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= g.order()) {
            return Err(input_err!("subgroup element out of range"));
        }
        let h = Subgroup { elements };
        if !h.contains(g.identity()) {
            return Err(input_err!("subset does not contain the identity"));
        }
        for &a in &h.elements {
            if !h.contains(g.inv(a)) {
                return Err(input_err!("subset not closed under inverses at {a}"));
            }
            for &b in &h.elements {
                if !h.contains(g.mul(a, b)) {
                    return Err(input_err!("subset not closed under products at ({a}, {b})"));
                }
            }
        }
        Ok(h)
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<usize>) -> Self {
        Subgroup { elements }
    }

    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Result<Self> {
        if gens.iter().any(|&x| x >= g.order()) {
            return Err(input_err!("generator out of range"));
        }
        Ok(Subgroup {
            elements: g.closure(gens),
        })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: vec![g.identity()],
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: (0..g.order()).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    /// Normal in `g` when `within` is `None`, otherwise normal in the
    /// subgroup `within`.
    pub fn is_normal_in(&self, g: &FiniteGroup, within: Option<&Subgroup>) -> bool {
        let conjugators: Vec<usize> = match within {
            Some(w) => g.greedy_generators(w.elements()),
            None => g.generators().to_vec(),
        };
        conjugators
            .iter()
            .all(|&c| self.elements.iter().all(|&x| self.contains(g.conj(c, x))))
    }

    pub(crate) fn ensure_in(&self, g: &FiniteGroup) -> Result<()> {
        if self.elements.last().is_some_and(|&x| x >= g.order()) {
            return Err(input_err!("subgroup does not belong to a group of order {}", g.order()));
        }
        Subgroup::new(g, self.elements.clone()).map(|_| ())
    }
}

/// A homomorphism between finite groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(input_err!("image table has the wrong shape"));
        }
        if images[source.identity()] != target.identity() {
            return Err(input_err!("identity is not mapped to identity"));
        }
        for i in 0..source.order() {
            for j in 0..source.order() {
                if images[source.mul(i, j)] != target.mul(images[i], images[j]) {
                    return Err(input_err!("not multiplicative at ({i}, {j})"));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        GroupHom {
            images: (0..g.order()).collect(),
            source: g.clone(),
            target: g,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_surjective(&self) -> bool {
        let hit: HashSet<usize> = self.images.iter().copied().collect();
        hit.len() == self.target.order()
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(
            (0..self.source.order())
                .filter(|&g| self.images[g] == self.target.identity())
                .collect(),
        )
    }
}

/// Alias for [`FiniteGroup::from_generators`].
pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
    FiniteGroup::from_generators(degree, gens)
}

/// Every subgroup exactly once, sorted by `(order, element set)`.
///
/// Iterative closure: start from the cyclic subgroups and keep adjoining one
/// element at a time until no new subgroup appears.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut known: HashSet<Vec<usize>> = HashSet::new();
    let mut work: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for x in 0..g.order() {
        let elems = g.closure(&[x]);
        if known.insert(elems.clone()) {
            work.push((elems, vec![x]));
        }
    }
    let mut head = 0;
    while head < work.len() {
        let (elems, gens) = work[head].clone();
        head += 1;
        for x in 0..g.order() {
            if elems.binary_search(&x).is_ok() {
                continue;
            }
            let mut more = gens.clone();
            more.push(x);
            let bigger = g.closure(&more);
            if known.insert(bigger.clone()) {
                work.push((bigger, more));
            }
        }
    }
    let mut subs: Vec<Subgroup> = work
        .into_iter()
        .map(|(e, _)| Subgroup::from_sorted_unchecked(e))
        .collect();
    subs.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subs
}

/// `g H g^{-1}`.
pub fn conjugate_subgroup(g: &FiniteGroup, x: usize, h: &Subgroup) -> Result<Subgroup> {
    if x >= g.order() {
        return Err(input_err!("element {x} out of range"));
    }
    h.ensure_in(g)?;
    let mut elems: Vec<usize> = h.elements().iter().map(|&y| g.conj(x, y)).collect();
    elems.sort_unstable();
    Ok(Subgroup::from_sorted_unchecked(elems))
}

/// `G/N` with cosets ordered by their smallest element, plus the projection.
pub fn quotient_with_projection(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    n.ensure_in(g)?;
    if !n.is_normal_in(g, None) {
        return Err(precondition_err!("subgroup is not normal"));
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut count = 0;
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &y in n.elements() {
            coset_of[g.mul(x, y)] = count;
        }
        count += 1;
    }
    let mut reps = vec![usize::MAX; count];
    for x in (0..g.order()).rev() {
        reps[coset_of[x]] = x;
    }
    let mut table = vec![0usize; count * count];
    for a in 0..count {
        for b in 0..count {
            table[a * count + b] = coset_of[g.mul(reps[a], reps[b])];
        }
    }
    let q = Arc::new(FiniteGroup::from_table(count, table)?);
    let pr = GroupHom::new(g.clone(), q.clone(), coset_of)?;
    Ok((q, pr))
}

/// `{ g : pr(g) ∈ H }`.
pub fn preimage_subgroup(pr: &GroupHom, h: &Subgroup) -> Result<Subgroup> {
    h.ensure_in(pr.target())?;
    Ok(Subgroup::from_sorted_unchecked(
        (0..pr.source().order())
            .filter(|&x| h.contains(pr.apply(x)))
            .collect(),
    ))
}

pub fn opposite_group(g: &FiniteGroup) -> FiniteGroup {
    g.opposite()
}

pub fn is_cyclic(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.elements().iter().any(|&x| g.element_order(x) == h.order())
}

fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// The largest normal ℓ-subgroup `O_ℓ(H)`: an element lies in it exactly
/// when its normal closure in `H` is an ℓ-group.
pub fn ell_core(g: &FiniteGroup, h: &Subgroup, ell: u64) -> Result<Subgroup> {
    if !is_prime(ell) {
        return Err(input_err!("{ell} is not prime"));
    }
    h.ensure_in(g)?;
    let ell = ell as usize;
    let mut members = Vec::new();
    for &x in h.elements() {
        if !is_power_of(g.element_order(x), ell) {
            continue;
        }
        let conjugates: Vec<usize> = h.elements().iter().map(|&y| g.conj(y, x)).collect();
        let closure = g.closure(&conjugates);
        if is_power_of(closure.len(), ell) {
            members.push(x);
        }
    }
    Ok(Subgroup::from_sorted_unchecked(members))
}

/// One representative per double coset `K g L` in `H`, the smallest index in
/// each.
pub fn double_coset_reps(g: &FiniteGroup, h: &Subgroup, k: &Subgroup, l: &Subgroup) -> Result<Vec<usize>> {
    if !k.is_subset_of(h) || !l.is_subset_of(h) {
        return Err(precondition_err!("double coset factors must lie in H"));
    }
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for &x in h.elements() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &a in k.elements() {
            let ax = g.mul(a, x);
            for &b in l.elements() {
                covered[g.mul(ax, b)] = true;
            }
        }
    }
    Ok(reps)
}

/// Representatives `t` of the left cosets `tK` in `H`, smallest index each.
pub fn left_coset_reps(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for &x in h.elements() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &y in k.elements() {
            covered[g.mul(x, y)] = true;
        }
    }
    reps
}

/// Right-coset decomposition `x = r(x) · t(x)` with `r(x) ∈ S` and `t(x)` a
/// fixed representative of `S x`. The coset `S` itself is represented by the
/// identity, every other coset by its smallest element.
#[derive(Clone, Debug)]
pub struct RightCosets {
    /// Coset representatives; index 0 is the identity.
    pub reps: Vec<usize>,
    /// For each element: (coset index, the factor in `S`).
    pub split: Vec<(usize, usize)>,
}

impl RightCosets {
    pub fn new(g: &FiniteGroup, s: &Subgroup) -> Self {
        let mut split = vec![(usize::MAX, usize::MAX); g.order()];
        let mut reps = Vec::new();
        let order: Vec<usize> = std::iter::once(g.identity())
            .chain((0..g.order()).filter(|&x| x != g.identity()))
            .collect();
        for x in order {
            if split[x].0 != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &y in s.elements() {
                split[g.mul(y, x)] = (c, y);
            }
        }
        RightCosets { reps, split }
    }
}

/// Sanity check used by tests and report builders.
pub fn verify_hom_against(g: &FiniteGroup, images: &[usize], target: &FiniteGroup) -> Result<()> {
    for i in 0..g.order() {
        for j in 0..g.order() {
            if images[g.mul(i, j)] != target.mul(images[i], images[j]) {
                return Err(contract_err!("map is not multiplicative at ({i}, {j})"));
            }
        }
    }
    Ok(())
}
