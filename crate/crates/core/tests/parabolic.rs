use proptest::prelude::*;
use tanaka::gnla::is_derivation;
use tanaka::parabolic::{
    chevalley_basis, decompose_layers, layer_decomposition, negative_nilradical, parabolic_grading,
    ParabolicError,
};
use tanaka::rootsys::{build_root_system, IrrepSum, Series};

const TYPES: [(Series, usize); 12] = [
    (Series::A, 3),
    (Series::A, 5),
    (Series::B, 3),
    (Series::B, 4),
    (Series::C, 3),
    (Series::C, 4),
    (Series::D, 4),
    (Series::D, 5),
    (Series::G, 2),
    (Series::F, 4),
    (Series::E, 6),
    (Series::E, 7),
];

fn sum(rank: usize, terms: &[(&[i64], u64)]) -> IrrepSum {
    IrrepSum::from_terms(rank, terms)
}

#[test]
fn grades_add_and_layers_fill_the_algebra() {
    for (s, r) in TYPES.iter().copied().chain([(Series::E, 8)]) {
        let rs = build_root_system(s, r).unwrap();
        for i in 1..=r {
            let pg = parabolic_grading(s, r, &[i]).unwrap();
            let roots = rs.positive_roots();
            for a in roots {
                for b in roots {
                    let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if rs.root_index(&c).is_some() {
                        assert_eq!(pg.grade(&c), pg.grade(a) + pg.grade(b));
                    }
                }
            }
            let zero = roots.iter().filter(|a| pg.grade(a) == 0).count();
            assert_eq!(pg.g0_dim(), r + 2 * zero);
            let neg: usize = pg.growth_vector().iter().sum();
            assert_eq!(2 * neg + pg.g0_dim(), s.algebra_dim(r), "{s:?}{r} {{{i}}}");
            if let Some(k) = pg.gl_rank() {
                assert_eq!(pg.g0_dim(), k * k);
            }
        }
    }
}

#[test]
fn table_rows() {
    let a = |r: usize, i: usize| {
        let mut v = vec![0; r];
        v[i - 1] = 1;
        v
    };
    // (B_n, p_n) for several n
    for n in 3..=6usize {
        let pg = parabolic_grading(Series::B, n, &[n]).unwrap();
        assert_eq!(pg.growth_vector(), vec![n, n * (n - 1) / 2]);
        assert_eq!(pg.gl_rank(), Some(n));
        let r = n - 1;
        assert_eq!(layer_decomposition(&pg, 1).unwrap(), sum(r, &[(&a(r, 1), 1)]));
        assert_eq!(layer_decomposition(&pg, 2).unwrap(), sum(r, &[(&a(r, 2), 1)]));
    }
    let rows: [(Series, usize, usize, Vec<usize>, usize, Vec<Vec<i64>>); 5] = [
        (Series::G, 2, 1, vec![2, 1, 2], 2, vec![vec![1], vec![0], vec![1]]),
        (Series::G, 2, 2, vec![4, 1], 2, vec![vec![3], vec![0]]),
        (Series::E, 6, 2, vec![20, 1], 6, vec![a(5, 3), vec![0; 5]]),
        (Series::E, 7, 2, vec![35, 7], 7, vec![a(6, 3), a(6, 6)]),
        (Series::E, 8, 2, vec![56, 28, 8], 8, vec![a(7, 3), a(7, 6), a(7, 1)]),
    ];
    for (s, r, i, growth, gl, reps) in rows {
        let pg = parabolic_grading(s, r, &[i]).unwrap();
        assert_eq!(pg.growth_vector(), growth);
        assert_eq!(pg.gl_rank(), Some(gl));
        let lrs = pg.levi_root_system();
        for (k, w) in reps.iter().enumerate() {
            let d = layer_decomposition(&pg, k + 1).unwrap();
            assert_eq!(d, sum(w.len(), &[(w, 1)]), "{s:?}{r} layer {}", k + 1);
            assert_eq!(lrs.irrep_sum_dim(&d).unwrap(), growth[k] as u128);
        }
    }
}

#[test]
fn contact_rows() {
    for (s, r, i) in [(Series::G, 2, 2), (Series::E, 6, 2), (Series::E, 8, 8), (Series::B, 4, 2), (Series::F, 4, 1)] {
        let pg = parabolic_grading(s, r, &[i]).unwrap();
        assert_eq!(pg.depth(), 2);
        assert_eq!(pg.growth_vector()[1], 1, "{s:?}{r}");
    }
}

#[test]
fn f4_has_no_gl_grading() {
    for i in 1..=4 {
        let pg = parabolic_grading(Series::F, 4, &[i]).unwrap();
        assert_eq!(pg.gl_rank(), None, "node {i}");
    }
    assert_eq!(parabolic_grading(Series::F, 4, &[1]).unwrap().levi_type(), "C3");
    assert_eq!(parabolic_grading(Series::F, 4, &[4]).unwrap().levi_type(), "B3");
}

#[test]
fn gl_gradings_of_depth_above_one() {
    let mut found = Vec::new();
    for (s, r) in TYPES.iter().copied().chain([(Series::E, 8)]) {
        for i in 1..=r {
            let pg = parabolic_grading(s, r, &[i]).unwrap();
            if pg.gl_rank().is_some() && pg.depth() > 1 {
                found.push(format!("{}{{{i}}}", pg.algebra_name()));
            }
        }
    }
    // C_r crossed at r and D_r at r−1, r are depth one; A_r never has a gl
    // Levi of depth two
    assert_eq!(found, ["B3{3}", "B4{4}", "G2{1}", "G2{2}", "E6{2}", "E7{2}", "E8{2}"]);
}

#[test]
fn bad_input() {
    assert!(matches!(parabolic_grading(Series::B, 3, &[4]), Err(ParabolicError::InvalidNode { .. })));
    assert!(matches!(parabolic_grading(Series::B, 3, &[]), Err(ParabolicError::NothingCrossed)));
    assert!(parabolic_grading(Series::E, 9, &[1]).is_err());
    let pg = parabolic_grading(Series::G, 2, &[1]).unwrap();
    assert!(matches!(layer_decomposition(&pg, 4), Err(ParabolicError::InvalidDegree { .. })));
}

#[test]
fn chevalley_jacobi_e6() {
    let cb = chevalley_basis(&build_root_system(Series::E, 6).unwrap());
    assert_eq!(cb.dim(), 78);
    assert!(cb.check_jacobi());
}

fn crossing() -> impl Strategy<Value = (Series, usize, Vec<usize>)> {
    prop::sample::select(TYPES[..10].to_vec()).prop_flat_map(|(s, r)| {
        prop::collection::btree_set(1..=r, 1..=r.min(3)).prop_map(move |c| (s, r, c.into_iter().collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn nilradicals_are_valid_with_levi_action((s, r, crossed) in crossing()) {
        let pg = parabolic_grading(s, r, &crossed).unwrap();
        let m = negative_nilradical(&pg);
        prop_assert!(m.validate().is_valid());
        prop_assert_eq!(m.growth_vector(), pg.growth_vector());
        prop_assert_eq!(m.is_fundamental().fundamental, pg.depth() > 1);
        let action = m.levi_action().unwrap();
        for g in &action.generators {
            prop_assert!(is_derivation(&m, &g.derivation), "{}", g.name);
        }
        let lrs = pg.levi_root_system();
        if lrs.rank() > 0 {
            let parts = decompose_layers(&m, &lrs).unwrap();
            for (k, p) in parts.iter().enumerate() {
                prop_assert_eq!(p, &layer_decomposition(&pg, k + 1).unwrap());
            }
        }
    }
}
