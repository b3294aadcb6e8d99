use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use cohmackey::abelian::{
    direct_sum, evaluate_invariant, is_isomorphic, smith_normal_form, AdditiveInvariant, FinAbGroup, IntMatrix,
};
use cohmackey::norm::{delta_monoid_check, MatrixTuple, ResidueRing, SplitCovering};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c)
            .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

fn fin_ab() -> impl Strategy<Value = FinAbGroup> {
    prop::collection::vec(1u64..=36, 0..4).prop_map(|o| FinAbGroup::from_orders(&o).unwrap())
}

proptest! {
    #[test]
    fn snf_factorises(a in matrix()) {
        let s = smith_normal_form(&a);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert_eq!(s.u.checked_mul(&a).unwrap().checked_mul(&s.v).unwrap(), s.d.clone());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn direct_sum_commutes_and_associates(a in fin_ab(), b in fin_ab(), c in fin_ab()) {
        let ab = direct_sum(&[a.clone(), b.clone()]);
        prop_assert!(is_isomorphic(&ab, &direct_sum(&[b.clone(), a.clone()])));
        let left = direct_sum(&[ab, c.clone()]);
        let right = direct_sum(&[a, direct_sum(&[b, c])]);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn invariants_are_additive(a in fin_ab(), b in fin_ab(), l in prop::sample::select(vec![2u64, 3, 5])) {
        let s = direct_sum(&[a.clone(), b.clone()]);
        for inv in [AdditiveInvariant::EllRank(l), AdditiveInvariant::EllLength(l)] {
            let lhs = evaluate_invariant(inv, &s).unwrap();
            let rhs = evaluate_invariant(inv, &a).unwrap() + evaluate_invariant(inv, &b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn relations_reproduce_the_group(a in fin_ab()) {
        // the diagonal relation matrix recovers the same invariant factors
        let orders = a.relation_orders();
        let rel = IntMatrix::diagonal(&orders);
        let back = cohmackey::abelian::fin_ab_from_relations(orders.len(), &rel).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn norm_is_monoidal(seed in any::<u64>(), n in prop::sample::select(vec![0u64, 2, 6, 9, 12]), ranks in prop::collection::vec(1usize..=3, 1..=3)) {
        let cov = SplitCovering::new(ResidueRing::new(n).unwrap(), ranks.len()).unwrap();
        let shapes: Vec<(usize, usize)> = ranks.iter().map(|&m| (m, m)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = MatrixTuple::random(&cov, &shapes, &mut rng).unwrap();
        let u = MatrixTuple::random(&cov, &shapes, &mut rng).unwrap();
        prop_assert!(delta_monoid_check(&t, &u).unwrap());
    }
}
