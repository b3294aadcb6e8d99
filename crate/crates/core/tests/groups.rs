use std::sync::Arc;

use cohmackey::catalog;
use cohmackey::group::{
    all_subgroups, double_coset_reps, ell_core, opposite_group, quotient_with_projection, FiniteGroup, Permutation,
    Subgroup,
};
use cohmackey::lattice::{is_ell_hypoelementary, is_hypoelementary, SubgroupLattice};

fn lattice(g: FiniteGroup) -> SubgroupLattice {
    SubgroupLattice::new(Arc::new(g))
}

#[test]
fn subgroup_counts() {
    assert_eq!(all_subgroups(&catalog::symmetric(3)).len(), 6);
    assert_eq!(all_subgroups(&catalog::klein_four()).len(), 5);
    assert_eq!(all_subgroups(&catalog::dihedral(4)).len(), 10);
    assert_eq!(all_subgroups(&catalog::quaternion()).len(), 6);
    assert_eq!(all_subgroups(&catalog::alternating(4)).len(), 10);
    assert_eq!(all_subgroups(&catalog::symmetric(4)).len(), 30);
}

#[test]
fn chains_to_the_top() {
    let v4 = lattice(catalog::klein_four());
    assert_eq!(v4.chains_between(v4.trivial(), v4.whole()).unwrap().len(), 4);
    let s3 = lattice(catalog::symmetric(3));
    let chains = s3.chains_between(s3.trivial(), s3.whole()).unwrap();
    assert_eq!(chains.len(), 5);
    assert!(chains.iter().all(|c| c.start() == s3.trivial() && c.end() == s3.whole()));
    assert_eq!(s3.chain_length_counts(s3.trivial(), s3.whole()).unwrap(), vec![0, 1, 4]);
}

#[test]
fn moebius_values() {
    let s3 = lattice(catalog::symmetric(3));
    assert_eq!(s3.moebius(s3.trivial(), s3.whole()).unwrap(), 3);
    let v4 = lattice(catalog::klein_four());
    assert_eq!(v4.moebius(v4.trivial(), v4.whole()).unwrap(), 2);
    // μ(1, C_p^k) = (−1)^k p^{k(k−1)/2}
    let e3 = lattice(catalog::elementary_abelian_2(3));
    assert_eq!(e3.moebius(e3.trivial(), e3.whole()).unwrap(), -8);
    let c4 = lattice(catalog::cyclic(4));
    assert_eq!(c4.moebius(c4.trivial(), c4.whole()).unwrap(), 0);
    let table = s3.moebius_table();
    assert_eq!(table.get(s3.trivial(), s3.whole()), Some(3));
    assert_eq!(table.get(s3.whole(), s3.trivial()), None);
}

#[test]
fn two_core_of_s4_is_v4() {
    let s4 = catalog::symmetric(4);
    let core = ell_core(&s4, &Subgroup::whole(&s4), 2).unwrap();
    assert_eq!(core.order(), 4);
    assert!(core.is_normal_in(&s4, None));
    let s3 = catalog::symmetric(3);
    assert_eq!(ell_core(&s3, &Subgroup::whole(&s3), 2).unwrap().order(), 1);
    assert_eq!(ell_core(&s3, &Subgroup::whole(&s3), 3).unwrap().order(), 3);
}

#[test]
fn hypoelementary() {
    let s3 = catalog::symmetric(3);
    let whole = Subgroup::whole(&s3);
    assert!(is_ell_hypoelementary(&s3, &whole, 3).unwrap());
    assert!(!is_ell_hypoelementary(&s3, &whole, 2).unwrap());
    for g in [catalog::dihedral(6), catalog::symmetric(4)] {
        assert!(!is_hypoelementary(&g, &Subgroup::whole(&g)).unwrap());
    }
    let c6 = catalog::cyclic(6);
    assert!(is_hypoelementary(&c6, &Subgroup::whole(&c6)).unwrap());
    assert!(is_ell_hypoelementary(&s3, &whole, 4).is_err());
}

#[test]
fn double_cosets_in_s3() {
    let s3 = catalog::symmetric(3);
    let swap = s3.element_of(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
    let k = Subgroup::generated(&s3, &[swap]).unwrap();
    let reps = double_coset_reps(&s3, &Subgroup::whole(&s3), &k, &k).unwrap();
    assert_eq!(reps.len(), 2);
}

#[test]
fn quotient_of_s3_by_c3() {
    let s3 = Arc::new(catalog::symmetric(3));
    let c3 = all_subgroups(&s3).into_iter().find(|h| h.order() == 3).unwrap();
    let (q, pr) = quotient_with_projection(&s3, &c3).unwrap();
    assert_eq!(q.order(), 2);
    assert!(pr.is_surjective());
    assert_eq!(pr.kernel(), c3);
    let c2 = all_subgroups(&s3).into_iter().find(|h| h.order() == 2).unwrap();
    assert!(quotient_with_projection(&s3, &c2).is_err());
}

#[test]
fn opposite_is_an_involution() {
    let g = catalog::dihedral(4);
    let op = opposite_group(&g);
    op.check_axioms().unwrap();
    assert_eq!(opposite_group(&op), g);
    for a in 0..g.order() {
        for b in 0..g.order() {
            assert_eq!(op.mul(a, b), g.mul(b, a));
        }
    }
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(Permutation::new(vec![0, 0, 1]).is_err());
    assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1]).is_err());
    let s3 = catalog::symmetric(3);
    assert!(Subgroup::new(&s3, vec![0, 1, 2, 3]).is_err());
}
