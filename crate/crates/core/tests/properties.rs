use std::sync::OnceLock;

use proptest::prelude::*;

use wreath_core::abelian::GroupDescriptor;
use wreath_core::bialgebra::{Basis, GradedVector, TensorVector};
use wreath_core::tower::TowerPair;

fn pair() -> &'static TowerPair {
    static PAIR: OnceLock<TowerPair> = OnceLock::new();
    PAIR.get_or_init(|| TowerPair::new(GroupDescriptor::new(vec![4], vec![vec![2]]), 2).unwrap())
}

/// Random integer combination of irreducibles of one degree.
fn vector(dim: usize, n: usize) -> impl Strategy<Value = GradedVector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(move |cs| cs.into_iter().enumerate().map(|(i, c)| (Basis::new(n, i), c)).collect())
}

fn full_vector(n: usize) -> BoxedStrategy<GradedVector> {
    vector(pair().full().dimension(n).unwrap(), n).boxed()
}

fn quotient_vector(n: usize) -> BoxedStrategy<GradedVector> {
    vector(pair().quotient().dimension(n).unwrap(), n).boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twists_preserve_the_pairing((l, a, b) in (0usize..2, 0usize..=2).prop_flat_map(|(l, n)| (Just(l), full_vector(n), full_vector(n)))) {
        let p = pair();
        prop_assert_eq!(p.twist(l, &a).unwrap().pairing(&p.twist(l, &b).unwrap()), a.pairing(&b));
    }

    #[test]
    fn psi_is_adjoint_to_phi(a in full_vector(2), x in quotient_vector(1), y in quotient_vector(1)) {
        let p = pair();
        let lhs = p.big_psi(&a).unwrap().pairing(&TensorVector::from_factors(&[x.clone(), y.clone()]));
        let rhs = a.pairing(&p.big_phi(&[x, y]).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_l_is_adjoint_to_phi_l(l in 0usize..2, a in full_vector(2), x in quotient_vector(2)) {
        let p = pair();
        prop_assert_eq!(p.psi_l(l, &a).unwrap().pairing(&x), a.pairing(&p.phi_l(l, &x).unwrap()));
    }

    #[test]
    fn frobenius_adjointness_on_random_vectors(x in full_vector(1), y in full_vector(1), z in full_vector(2)) {
        let r = pair().full();
        let lhs = r.product(&x, &y).unwrap().pairing(&z);
        let rhs = TensorVector::from_factors(&[x, y]).pairing(&r.coproduct(&z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    // G(4,2,2) has 10 irreducibles.
    #[test]
    fn positive_vectors_have_positive_images(a in prop::collection::vec(0i64..=3, 10)) {
        let v: GradedVector = a.into_iter().enumerate().map(|(i, c)| (Basis::new(2, i), c)).collect();
        prop_assume!(!v.is_zero());
        let psi = pair().big_psi(&v).unwrap();
        prop_assert!(psi.is_nonnegative() && !psi.is_zero());
    }
}
