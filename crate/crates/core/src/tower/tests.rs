use super::*;

fn g42(n_max: usize) -> TowerPair {
    TowerPair::new(GroupDescriptor::new(vec![4], vec![vec![2]]), n_max).unwrap()
}

#[test]
fn lambda_enumeration() {
    let all = LambdaTuple::all(2, 2);
    assert_eq!(all, vec![LambdaTuple(vec![0, 2]), LambdaTuple(vec![1, 1]), LambdaTuple(vec![2, 0])]);
    assert_eq!(LambdaTuple(vec![1, 0, 2]).length(), 2);
    assert_eq!(LambdaTuple::all(3, 3).len(), 10);
    assert_eq!(LambdaTuple::all(0, 0), vec![LambdaTuple(vec![])]);
}

#[test]
fn g422_norm_of_mixed_tuple() {
    let pair = g42(2);
    assert_eq!(pair.index(), 2);
    assert_eq!(pair.dual().len(), 2);
    let t = LabeledTuple { lambda: LambdaTuple(vec![1, 1]), factors: vec![Basis::new(1, 0), Basis::new(1, 0)] };
    let img = pair.phi_of(&t).unwrap();
    assert_eq!(img.pairing(&img), 2);
    // Independent route: [G_2 : G_1 × G_1] = 16 / 4 and both factors are linear.
    let d2 = pair.full().degree(2).unwrap();
    let degree: i64 = img.terms().map(|(b, c)| c * d2.table.degrees()[b.index] as i64).sum();
    assert_eq!(degree, 4);
}

#[test]
fn double_cosets_small_cases() {
    let pair = g42(2);
    assert_eq!(pair.count_diagonal_double_cosets(&LambdaTuple(vec![1, 1]), &LambdaTuple(vec![1, 1])).unwrap(), 2);
    assert_eq!(pair.count_diagonal_double_cosets(&LambdaTuple(vec![2, 0]), &LambdaTuple(vec![2, 0])).unwrap(), 1);
    assert_eq!(pair.count_diagonal_double_cosets(&LambdaTuple(vec![0, 0]), &LambdaTuple(vec![0, 0])).unwrap(), 1);
}

#[test]
fn trivial_twist_is_identity_and_phi_trivial_is_inflation() {
    let pair = g42(2);
    for n in 0..=2 {
        for b in pair.full().basis(n).unwrap() {
            let x = GradedVector::basis(b);
            assert_eq!(pair.twist(0, &x).unwrap(), x);
        }
        for b in pair.quotient().basis(n).unwrap() {
            let x = GradedVector::basis(b);
            assert_eq!(pair.phi_l(0, &x).unwrap(), pair.inflate(&x).unwrap());
        }
    }
}

#[test]
fn inflation_agrees_with_pullback_values() {
    let pair = g42(2);
    let (d, dq) = (pair.full().degree(2).unwrap(), pair.quotient().degree(2).unwrap());
    for (i, img) in pair.inflation_images(2).unwrap().iter().enumerate() {
        let b = img.as_irreducible().expect("inflation of an irreducible is irreducible");
        for c in 0..d.group.class_count() {
            let g = d.group.group().representative(c);
            let r = reduce_mod_h(pair.quotient_map(), g);
            let qc = dq.group.class_of(&r).unwrap();
            let (x, y) = (&d.table.irreducible(b.index).values()[c], &dq.table.irreducible(i).values()[qc]);
            let e = x.conductor().max(y.conductor());
            assert_eq!(x.embed(e).unwrap(), y.embed(e).unwrap());
        }
    }
}

#[test]
fn full_wreath_verification_passes() {
    let pair = TowerPair::new(GroupDescriptor::new(vec![2], vec![vec![1]]), 3).unwrap();
    let report = full_verification(&pair, VerifyOptions::default()).unwrap();
    let failed: Vec<_> = report.failures().collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(report.phi_norms, vec![1]);
    assert!(report.checks.iter().any(|c| c.id == "full_wreath.isomorphism"));
}

#[test]
fn g42_verification_passes() {
    let report = full_verification(&g42(2), VerifyOptions::default()).unwrap();
    let failed: Vec<_> = report.failures().collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(report.phi_norms, vec![1, 2]);
}
