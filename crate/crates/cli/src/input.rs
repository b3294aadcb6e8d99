//! JSON group and module specs.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;

use cohmackey::abelian::{FinAbGroup, IntMatrix};
use cohmackey::gmodule::{gmodule_validate, GModule};
use cohmackey::group::{FiniteGroup, Permutation, Subgroup};
use cohmackey::lattice::SubgroupLattice;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub invariant_factors: Vec<u64>,
    /// One square matrix per group generator, acting on column vectors.
    pub generator_actions: Vec<Vec<Vec<i64>>>,
}

/// A file read once, so its bytes can go into the report digest.
pub struct Loaded<T> {
    pub value: T,
    pub bytes: Vec<u8>,
}

fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Loaded<T>, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let value = serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Loaded { value, bytes })
}

pub fn load_group(path: &Path) -> Result<Loaded<GroupSpec>, CliError> {
    load(path)
}

pub fn load_module(path: &Path) -> Result<Loaded<ModuleSpec>, CliError> {
    load(path)
}

fn permutation(degree: usize, images: &[usize]) -> Result<Permutation, CliError> {
    if images.len() != degree {
        return Err(CliError::Input(format!("permutation {images:?} does not have degree {degree}")));
    }
    Permutation::new(images.to_vec()).map_err(|e| CliError::Input(e.to_string()))
}

pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<Arc<FiniteGroup>, CliError> {
    if spec.degree == 0 {
        return Err(CliError::Input("degree must be at least 1".into()));
    }
    let gens = spec
        .generators
        .iter()
        .map(|g| permutation(spec.degree, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arc::new(FiniteGroup::from_generators_capped(spec.degree, &gens, cap)?))
}

/// Any failure here is a bad module spec, whatever the library calls it.
pub fn build_module(group: &Arc<FiniteGroup>, spec: &ModuleSpec) -> Result<GModule, CliError> {
    let bad = |e: cohmackey::Error| CliError::Input(format!("module spec: {e}"));
    if let Some(d) = spec.invariant_factors.iter().find(|&&d| d < 2) {
        return Err(CliError::Input(format!("invariant factor {d} is below 2")));
    }
    let factors: Vec<BigInt> = spec.invariant_factors.iter().map(|&d| BigInt::from(d)).collect();
    let carrier = FinAbGroup::new(factors, 0).map_err(bad)?;
    let k = carrier.num_generators();
    let actions = spec
        .generator_actions
        .iter()
        .enumerate()
        .map(|(i, rows)| {
            if rows.len() != k || rows.iter().any(|r| r.len() != k) {
                return Err(CliError::Input(format!("action of generator {i} is not {k}x{k}")));
            }
            let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
            IntMatrix::new(k, k, data).map_err(bad)
        })
        .collect::<Result<Vec<_>, _>>()?;
    gmodule_validate(group.clone(), carrier, &actions).map_err(bad)
}

/// `whole`, `all`, a lattice index, or a JSON array of generating
/// permutations.
pub fn select_subgroups(lattice: &SubgroupLattice, selector: &str) -> Result<Vec<usize>, CliError> {
    let s = selector.trim();
    match s {
        "whole" => return Ok(vec![lattice.whole()]),
        "all" => return Ok((0..lattice.len()).collect()),
        _ => {}
    }
    if let Ok(i) = s.parse::<usize>() {
        if i >= lattice.len() {
            return Err(CliError::Input(format!("subgroup index {i} out of range (lattice has {})", lattice.len())));
        }
        return Ok(vec![i]);
    }
    let gens: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|_| CliError::Input(format!("cannot read subgroup selector {s:?}")))?;
    let g = lattice.group();
    let degree = g.labels().map(|l| l[0].degree()).unwrap_or(0);
    let mut elems = Vec::with_capacity(gens.len());
    for images in &gens {
        let p = permutation(degree, images)?;
        let x = g
            .element_of(&p)
            .ok_or_else(|| CliError::Input(format!("{images:?} is not an element of the group")))?;
        elems.push(x);
    }
    let h = Subgroup::generated(g, &elems)?;
    Ok(vec![lattice.index_of(&h).expect("generated subgroups are in the lattice")])
}
