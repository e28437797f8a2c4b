use proptest::prelude::*;
use tanaka::rootsys::{
    build_root_system, exterior_cube_weights, exterior_square_weights, free_lie_module_weights,
    symmetric_square_weights, tensor_weights, IrrepSum, RootSystem, Series, Weight,
    WeightMultiset,
};

fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

fn irrep(rs: &RootSystem, c: &[i64]) -> WeightMultiset {
    rs.freudenthal_weights(&w(c)).unwrap()
}

fn sum(rank: usize, terms: &[(&[i64], u64)]) -> IrrepSum {
    IrrepSum::from_terms(rank, terms)
}

/// `e_i` in the fundamental basis, 1-based.
fn pi(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i - 1] = 1;
    v
}

fn pis(rank: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; rank];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    v
}

#[test]
fn positive_root_counts() {
    for (s, r, n) in [(Series::A, 2, 3), (Series::G, 2, 6), (Series::E, 8, 120), (Series::F, 4, 24)] {
        assert_eq!(build_root_system(s, r).unwrap().positive_roots().len(), n);
    }
}

#[test]
fn weyl_dimensions_from_examples() {
    let a7 = build_root_system(Series::A, 7).unwrap();
    let d7 = build_root_system(Series::D, 7).unwrap();
    let e7 = build_root_system(Series::E, 7).unwrap();
    assert_eq!(a7.weyl_dim(&w(&pi(7, 3))).unwrap(), 56);
    assert_eq!(d7.weyl_dim(&w(&pi(7, 7))).unwrap(), 64);
    assert_eq!(e7.weyl_dim(&w(&pi(7, 7))).unwrap(), 56);
    assert_eq!(e7.weyl_dim(&e7.zero_weight()).unwrap(), 1);
    assert!(a7.weyl_dim(&w(&[-1, 0, 0, 0, 0, 0, 0])).is_err());
}

#[test]
fn freudenthal_small_cases() {
    let a1 = build_root_system(Series::A, 1).unwrap();
    let m = irrep(&a1, &[2]);
    assert_eq!(m, WeightMultiset::from_weights(1, [w(&[2]), w(&[0]), w(&[-2])]));
    let a2 = build_root_system(Series::A, 2).unwrap();
    let adj = irrep(&a2, &[1, 1]);
    assert_eq!(adj.get(&w(&[0, 0])), 2);
    assert_eq!(adj.total(), 8);
}

#[test]
fn sl2_free_layers() {
    let a1 = build_root_system(Series::A, 1).unwrap();
    let v = irrep(&a1, &[1]);
    let l6 = a1.decompose(&free_lie_module_weights(&a1, &v, 6).unwrap()).unwrap();
    assert_eq!(l6, sum(1, &[(&[0], 1), (&[2], 1), (&[4], 1)]));
    let l7 = a1.decompose(&free_lie_module_weights(&a1, &v, 7).unwrap()).unwrap();
    assert_eq!(l7, sum(1, &[(&[1], 2), (&[3], 2), (&[5], 1)]));
    let t = tensor_weights(&a1, &v, &irrep(&a1, &[3])).unwrap();
    assert_eq!(a1.decompose(&t).unwrap(), sum(1, &[(&[2], 1), (&[4], 1)]));
}

#[test]
fn sl_n_free_layers() {
    let a2 = build_root_system(Series::A, 2).unwrap();
    let v = irrep(&a2, &[1, 0]);
    let l4 = a2.decompose(&free_lie_module_weights(&a2, &v, 4).unwrap()).unwrap();
    assert_eq!(l4, sum(2, &[(&[1, 0], 1), (&[2, 1], 1)]));

    let a3 = build_root_system(Series::A, 3).unwrap();
    let v = irrep(&a3, &[1, 0, 0]);
    let l5 = a3.decompose(&free_lie_module_weights(&a3, &v, 5).unwrap()).unwrap();
    let expected = sum(
        3,
        &[(&[1, 0, 0], 1), (&[0, 1, 1], 1), (&[2, 0, 1], 1), (&[1, 2, 0], 1), (&[3, 1, 0], 1)],
    );
    assert_eq!(l5, expected);

    // n = 5: computed, no reference value asserted beyond the dimension
    let a4 = build_root_system(Series::A, 4).unwrap();
    let v = irrep(&a4, &[1, 0, 0, 0]);
    let l5 = a4.decompose(&free_lie_module_weights(&a4, &v, 5).unwrap()).unwrap();
    assert_eq!(a4.irrep_sum_dim(&l5).unwrap(), 624);
}

#[test]
fn sl_n_tensor_branching() {
    for n in 4..=6usize {
        let r = n - 1;
        let rs = build_root_system(Series::A, r).unwrap();
        let t = tensor_weights(&rs, &irrep(&rs, &pi(r, 1)), &irrep(&rs, &pis(r, &[(1, 1), (2, 1)])))
            .unwrap();
        let expected = {
            let a = pis(r, &[(2, 2)]);
            let b = pis(r, &[(1, 1), (3, 1)]);
            let c = pis(r, &[(1, 2), (2, 1)]);
            sum(r, &[(&a, 1), (&b, 1), (&c, 1)])
        };
        assert_eq!(rs.decompose(&t).unwrap(), expected, "n = {n}");
    }
}

/// `Γ_{π₁} ⊗ g₋₄ = g₋₅ + (one eliminated term)` for n = 3, 4.
#[test]
fn jacobi_elimination_bookkeeping() {
    let a2 = build_root_system(Series::A, 2).unwrap();
    let v = irrep(&a2, &[1, 0]);
    let l4 = free_lie_module_weights(&a2, &v, 4).unwrap();
    let t = a2.decompose(&tensor_weights(&a2, &v, &l4).unwrap()).unwrap();
    let l5 = a2.decompose(&free_lie_module_weights(&a2, &v, 5).unwrap()).unwrap();
    assert_eq!(t, l5.merge(&sum(2, &[(&[2, 0], 1)])));
    assert_eq!(
        l5,
        sum(2, &[(&[0, 1], 1), (&[2, 0], 1), (&[1, 2], 1), (&[3, 1], 1)])
    );

    let a3 = build_root_system(Series::A, 3).unwrap();
    let v = irrep(&a3, &[1, 0, 0]);
    let l4 = free_lie_module_weights(&a3, &v, 4).unwrap();
    let t = a3.decompose(&tensor_weights(&a3, &v, &l4).unwrap()).unwrap();
    let l5 = a3.decompose(&free_lie_module_weights(&a3, &v, 5).unwrap()).unwrap();
    assert_eq!(t, l5.merge(&sum(3, &[(&[2, 0, 1], 1)])));
}

#[test]
fn exceptional_exterior_squares() {
    let a7 = build_root_system(Series::A, 7).unwrap();
    let l2 = exterior_square_weights(&a7, &irrep(&a7, &pi(7, 3))).unwrap();
    assert_eq!(l2.total(), 56 * 55 / 2);
    assert_eq!(
        a7.decompose(&l2).unwrap(),
        sum(7, &[(&pi(7, 6), 1), (&pis(7, &[(2, 1), (4, 1)]), 1)])
    );

    let d7 = build_root_system(Series::D, 7).unwrap();
    let l2 = exterior_square_weights(&d7, &irrep(&d7, &pi(7, 7))).unwrap();
    assert_eq!(d7.decompose(&l2).unwrap(), sum(7, &[(&pi(7, 1), 1), (&pi(7, 5), 1)]));

    let e7 = build_root_system(Series::E, 7).unwrap();
    let l2 = exterior_square_weights(&e7, &irrep(&e7, &pi(7, 7))).unwrap();
    assert_eq!(e7.decompose(&l2).unwrap(), sum(7, &[(&[0; 7], 1), (&pi(7, 6), 1)]));
}

#[test]
fn exterior_cube_contents() {
    let a1 = build_root_system(Series::A, 1).unwrap();
    let v = irrep(&a1, &[1]);
    assert_eq!(exterior_cube_weights(&a1, &v).unwrap().total(), 0);
    let a2 = build_root_system(Series::A, 2).unwrap();
    let pair = WeightMultiset::from_weights(2, [w(&[1, 0]), w(&[-1, 1])]);
    assert_eq!(exterior_square_weights(&a2, &pair).unwrap().total(), 1);

    let a7 = build_root_system(Series::A, 7).unwrap();
    let l3 = a7.decompose(&exterior_cube_weights(&a7, &irrep(&a7, &pi(7, 3))).unwrap()).unwrap();
    let listed = sum(
        7,
        &[
            (&pis(7, &[(3, 1), (6, 1)]), 1),
            (&pis(7, &[(2, 1), (7, 1)]), 1),
            (&pis(7, &[(2, 2), (5, 1)]), 1),
            (&pis(7, &[(1, 1), (4, 2)]), 1),
        ],
    );
    assert!(listed.is_submodule_of(&l3));

    let e7 = build_root_system(Series::E, 7).unwrap();
    let l3 = e7.decompose(&exterior_cube_weights(&e7, &irrep(&e7, &pi(7, 7))).unwrap()).unwrap();
    assert_eq!(l3, sum(7, &[(&pi(7, 5), 1), (&pi(7, 7), 1)]));
}

#[test]
fn cross_check_with_witt_numbers() {
    for n in 2..=4usize {
        let rs = build_root_system(Series::A, n - 1).unwrap();
        let v = irrep(&rs, &pi(n - 1, 1));
        for k in 1..=8u32 {
            let got = free_lie_module_weights(&rs, &v, k).unwrap().total();
            assert_eq!(got, tanaka::freelie::witt_dim(n as u64, k) as u64, "n={n} k={k}");
        }
    }
}

fn small_type() -> impl Strategy<Value = (Series, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|r| (Series::A, r)),
        (2usize..=4).prop_map(|r| (Series::B, r)),
        (3usize..=4).prop_map(|r| (Series::C, r)),
        Just((Series::D, 4)),
        Just((Series::G, 2)),
        Just((Series::F, 4)),
    ]
}

fn small_dominant(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(0i64..=2, rank).prop_map(Weight::new)
}

fn typed_weight() -> impl Strategy<Value = (Series, usize, Weight)> {
    small_type().prop_flat_map(|(s, r)| {
        let cap = if matches!(s, Series::F) { 1 } else { 2 };
        proptest::collection::vec(0i64..=cap, r).prop_map(move |c| (s, r, Weight::new(c)))
    })
}

fn is_weyl_invariant(rs: &RootSystem, m: &WeightMultiset) -> bool {
    (0..rs.rank()).all(|i| m.iter().all(|(wt, k)| m.get(&rs.reflect(wt, i)) == k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_round_trip((s, r, lam) in typed_weight()) {
        let rs = build_root_system(s, r).unwrap();
        let m = rs.freudenthal_weights(&lam).unwrap();
        prop_assert_eq!(m.total() as u128, rs.weyl_dim(&lam).unwrap());
        prop_assert!(is_weyl_invariant(&rs, &m));
        let mut expected = IrrepSum::new(r);
        expected.add(lam.clone(), 1);
        prop_assert_eq!(rs.decompose(&m).unwrap(), expected);
    }

    #[test]
    fn square_splits_tensor(r in 1usize..=3, lam in small_dominant(3)) {
        let rs = build_root_system(Series::A, r).unwrap();
        let lam = Weight::new(lam.coords()[..r].to_vec());
        let v = rs.freudenthal_weights(&lam).unwrap();
        let mut both = exterior_square_weights(&rs, &v).unwrap();
        both.add_scaled(&symmetric_square_weights(&rs, &v).unwrap(), 1);
        let t = tensor_weights(&rs, &v, &v).unwrap();
        prop_assert_eq!(&both, &t);
        let n = v.total();
        prop_assert_eq!(exterior_square_weights(&rs, &v).unwrap().total(), n * (n - 1) / 2);
        prop_assert!(is_weyl_invariant(&rs, &t));
        let sym = rs.decompose(&t).unwrap();
        prop_assert_eq!(rs.irrep_sum_dim(&sym).unwrap(), (n * n) as u128);
    }
}

/// Five generators, degree five: the case between the printed n = 4 and
/// n > 5 formulas. Pinned to the computed value; the dimensions must add
/// up to the Witt number.
#[test]
fn fifth_free_layer_on_five_generators() {
    let a4 = build_root_system(Series::A, 4).unwrap();
    let v = irrep(&a4, &[1, 0, 0, 0]);
    let l5 = a4.decompose(&free_lie_module_weights(&a4, &v, 5).unwrap()).unwrap();
    let want = sum(
        4,
        &[(&[0, 1, 1, 0], 1), (&[1, 0, 0, 1], 1), (&[1, 2, 0, 0], 1), (&[2, 0, 1, 0], 1), (&[3, 1, 0, 0], 1)],
    );
    assert_eq!(l5, want);
    assert_eq!(a4.irrep_sum_dim(&l5).unwrap(), tanaka::freelie::witt_dim(5, 5));
}
