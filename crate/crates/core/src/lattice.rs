//! The subgroup lattice: chains, the Möbius function, and the
//! (ℓ-)hypoelementary classification.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{input_err, precondition_err, Result};
use crate::group::{all_subgroups, ell_core, is_cyclic, FiniteGroup, Subgroup};

/// All subgroups of a group in canonical order, with containment,
/// conjugation and intersection tables by index.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    index: HashMap<Vec<usize>, usize>,
    contains: Vec<Vec<bool>>,
    conjugates: Vec<Vec<usize>>,
}

impl PartialEq for SubgroupLattice {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.subgroups == other.subgroups
    }
}

impl SubgroupLattice {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        let subgroups = all_subgroups(&group);
        let index: HashMap<Vec<usize>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements().to_vec(), i))
            .collect();
        let contains = subgroups
            .iter()
            .map(|h| subgroups.iter().map(|k| k.is_subset_of(h)).collect())
            .collect();
        let conjugates = (0..group.order())
            .map(|g| {
                subgroups
                    .iter()
                    .map(|h| {
                        let mut e: Vec<usize> = h.elements().iter().map(|&x| group.conj(g, x)).collect();
                        e.sort_unstable();
                        index[&e]
                    })
                    .collect()
            })
            .collect();
        SubgroupLattice {
            group,
            subgroups,
            index,
            contains,
            conjugates,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.elements()).copied()
    }

    pub fn index_of_elements(&self, elements: &[usize]) -> Option<usize> {
        self.index.get(elements).copied()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// `K ≤ H`.
    pub fn is_le(&self, k: usize, h: usize) -> bool {
        self.contains[h][k]
    }

    /// Indices of all subgroups of `h`, in lattice order.
    pub fn below(&self, h: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&k| self.contains[h][k])
    }

    /// Index of `g H g^{-1}`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.conjugates[g][h]
    }

    pub fn intersection(&self, a: usize, b: usize) -> usize {
        let e = self.subgroups[a].intersection(&self.subgroups[b]);
        self.index[e.elements()]
    }

    pub fn index_in(&self, k: usize, h: usize) -> usize {
        self.order_of(h) / self.order_of(k)
    }

    fn require_le(&self, u: usize, h: usize) -> Result<()> {
        if u >= self.len() || h >= self.len() {
            return Err(input_err!("subgroup index out of range"));
        }
        if !self.is_le(u, h) {
            return Err(precondition_err!("subgroup {u} is not contained in subgroup {h}"));
        }
        Ok(())
    }

    /// Every strictly increasing chain from `u` to `h`, by depth-first search
    /// in lattice order.
    pub fn chains_between(&self, u: usize, h: usize) -> Result<Vec<SubgroupChain>> {
        self.require_le(u, h)?;
        let mut out = Vec::new();
        let mut path = vec![u];
        self.extend_chains(h, &mut path, &mut out);
        Ok(out)
    }

    fn extend_chains(&self, h: usize, path: &mut Vec<usize>, out: &mut Vec<SubgroupChain>) {
        let last = *path.last().unwrap();
        if last == h {
            out.push(SubgroupChain { links: path.clone() });
            return;
        }
        for k in 0..self.len() {
            if k != last && self.is_le(last, k) && self.is_le(k, h) {
                path.push(k);
                self.extend_chains(h, path, out);
                path.pop();
            }
        }
    }

    /// Number of chains from `u` to `h` of each length, without materializing
    /// them.
    pub fn chain_length_counts(&self, u: usize, h: usize) -> Result<Vec<u64>> {
        self.require_le(u, h)?;
        // counts[k][n]: chains from u to k of length n; lattice order is a
        // linear extension of inclusion.
        let mut counts: Vec<Vec<u64>> = vec![Vec::new(); self.len()];
        counts[u] = vec![1];
        for k in 0..self.len() {
            if k == u || !self.is_le(u, k) || !self.is_le(k, h) {
                continue;
            }
            let mut c: Vec<u64> = Vec::new();
            for j in 0..k {
                if j != k && self.is_le(j, k) && !counts[j].is_empty() && self.is_le(u, j) {
                    if c.len() < counts[j].len() + 1 {
                        c.resize(counts[j].len() + 1, 0);
                    }
                    for (n, &v) in counts[j].iter().enumerate() {
                        c[n + 1] += v;
                    }
                }
            }
            counts[k] = c;
        }
        Ok(std::mem::take(&mut counts[h]))
    }

    /// `μ(U, H)` by interval recursion.
    pub fn moebius(&self, u: usize, h: usize) -> Result<i64> {
        self.require_le(u, h)?;
        let mut mu: HashMap<usize, i64> = HashMap::new();
        mu.insert(u, 1);
        for k in 0..self.len() {
            if k == u || !self.is_le(u, k) || !self.is_le(k, h) {
                continue;
            }
            let s: i64 = mu
                .iter()
                .filter(|(&j, _)| self.is_le(j, k))
                .map(|(_, &v)| v)
                .sum();
            mu.insert(k, -s);
        }
        Ok(mu[&h])
    }

    pub fn moebius_table(&self) -> MoebiusTable {
        MoebiusTable::new(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupChain {
    /// Subgroup indices `U = H_0 < H_1 < … < H_n = H`.
    pub links: Vec<usize>,
}

impl SubgroupChain {
    pub fn length(&self) -> usize {
        self.links.len() - 1
    }

    pub fn start(&self) -> usize {
        self.links[0]
    }

    pub fn end(&self) -> usize {
        *self.links.last().unwrap()
    }
}

/// `μ(U, H)` for every pair `U ≤ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoebiusTable {
    n: usize,
    values: Vec<Option<i64>>,
}

impl MoebiusTable {
    pub fn new(lattice: &SubgroupLattice) -> Self {
        let n = lattice.len();
        let mut values = vec![None; n * n];
        for u in 0..n {
            values[u * n + u] = Some(1);
            for k in u + 1..n {
                if !lattice.is_le(u, k) {
                    continue;
                }
                let s: i64 = (u..k)
                    .filter(|&j| lattice.is_le(j, k))
                    .filter_map(|j| values[u * n + j])
                    .sum();
                values[u * n + k] = Some(-s);
            }
        }
        MoebiusTable { n, values }
    }

    /// `None` unless `u ≤ h`.
    pub fn get(&self, u: usize, h: usize) -> Option<i64> {
        self.values[u * self.n + h]
    }
}

pub fn chains_between(lattice: &SubgroupLattice, u: &Subgroup, h: &Subgroup) -> Result<Vec<SubgroupChain>> {
    let (u, h) = locate_pair(lattice, u, h)?;
    lattice.chains_between(u, h)
}

pub fn moebius(lattice: &SubgroupLattice, u: &Subgroup, h: &Subgroup) -> Result<i64> {
    let (u, h) = locate_pair(lattice, u, h)?;
    lattice.moebius(u, h)
}

fn locate_pair(lattice: &SubgroupLattice, u: &Subgroup, h: &Subgroup) -> Result<(usize, usize)> {
    let ui = lattice
        .index_of(u)
        .ok_or_else(|| input_err!("U is not a subgroup of the lattice's group"))?;
    let hi = lattice
        .index_of(h)
        .ok_or_else(|| input_err!("H is not a subgroup of the lattice's group"))?;
    Ok((ui, hi))
}

/// `H / O_ℓ(H)` is cyclic.
pub fn is_ell_hypoelementary(g: &FiniteGroup, h: &Subgroup, ell: u64) -> Result<bool> {
    let core = ell_core(g, h, ell)?;
    let target = h.order() / core.order();
    Ok(h.elements().iter().any(|&x| {
        // order of x·O_ℓ(H) in the quotient
        let mut y = x;
        let mut k = 1;
        while !core.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k == target
    }))
}

/// ℓ-hypoelementary for some prime ℓ. Primes not dividing `|H|` reduce to
/// cyclicity of `H`, which is tested directly.
pub fn is_hypoelementary(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    if is_cyclic(g, h) {
        return Ok(true);
    }
    for ell in prime_divisors(h.order() as u64) {
        if is_ell_hypoelementary(g, h, ell)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn require_prime(ell: u64) -> Result<()> {
    if is_prime(ell) {
        Ok(())
    } else {
        Err(input_err!("{ell} is not prime"))
    }
}
