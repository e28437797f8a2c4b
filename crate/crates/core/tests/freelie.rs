use proptest::prelude::*;
use tanaka::exactla::{rat, SparseVec};
use tanaka::fixtures::free_quotient;
use tanaka::freelie::{free_truncated, generic_extension_dim, lyndon_basis, maximal_extension, witt_dim, LyndonWord};
use tanaka::gnla::GradedSubspace;

/// Strictly smaller than every proper rotation.
fn lyndon_by_rotation(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &[&w[i..], &w[..i]].concat()[..])
}

#[test]
fn mobius_inversion_identity() {
    for n in 1..=4u64 {
        for k in 1..=20u32 {
            let total: u128 = (1..=k).filter(|t| k % t == 0).map(|t| t as u128 * witt_dim(n, t)).sum();
            assert_eq!(total, (n as u128).pow(k), "n={n} k={k}");
        }
    }
}

#[test]
fn lyndon_counts_match_witt() {
    for (n, s) in [(2, 12), (3, 8), (4, 6), (5, 5)] {
        for (k, words) in lyndon_basis(n, s).iter().enumerate() {
            assert_eq!(words.len() as u128, witt_dim(n as u64, k as u32 + 1), "n={n} k={}", k + 1);
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            for w in words {
                assert!(lyndon_by_rotation(w.letters()), "{w}");
            }
        }
    }
}

#[test]
fn free_algebras_validate_up_to_dimension_200() {
    for n in 2..=6usize {
        let mut s = 1;
        loop {
            let total: u128 = (1..=s as u32).map(|k| witt_dim(n as u64, k)).sum();
            if total > 200 {
                break;
            }
            let f = free_truncated(n, s).unwrap();
            assert_eq!(f.total_dim() as u128, total);
            for k in 1..=s {
                assert_eq!(f.dim(k) as u128, witt_dim(n as u64, k as u32));
            }
            assert!(f.validate().is_valid(), "f{s}({n})");
            assert!(f.is_fundamental().fundamental || s == 1);
            s += 1;
        }
    }
}

#[test]
fn extension_of_free_is_free_and_generic_count_agrees() {
    for (n, s) in [(2, 3), (2, 4), (3, 2), (3, 3)] {
        let f = free_truncated(n, s).unwrap();
        let e = maximal_extension(&f).unwrap();
        assert_eq!(e.growth_vector(), free_truncated(n, s + 1).unwrap().growth_vector());
        assert_eq!(generic_extension_dim(&f) as u128, witt_dim(n as u64, s as u32 + 1));
    }
    for (n, s, w) in [(2, 5, vec![4, 1]), (2, 5, vec![3, 2]), (3, 4, vec![2, 1, 1])] {
        let q = free_quotient(n, s, &w).unwrap();
        assert_eq!(maximal_extension(&q).unwrap().dim(s + 1), generic_extension_dim(&q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lyndon_test_matches_rotations(w in proptest::collection::vec(1u8..=3, 1..9)) {
        prop_assert_eq!(LyndonWord::is_lyndon(&w), lyndon_by_rotation(&w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factorization_is_standard(n in 2usize..=3, s in 2usize..=6) {
        for words in lyndon_basis(n, s).iter().skip(1) {
            for w in words {
                let (u, v) = w.factorization().unwrap();
                prop_assert!(u < v);
                prop_assert_eq!([u.letters(), v.letters()].concat(), w.letters().to_vec());
                prop_assert!(LyndonWord::is_lyndon(u.letters()) && LyndonWord::is_lyndon(v.letters()));
                // no longer proper suffix is Lyndon
                let cut = w.len() - v.len();
                prop_assert!((1..cut).all(|i| !LyndonWord::is_lyndon(&w.letters()[i..])));
            }
        }
    }

    #[test]
    fn extension_shrinks_with_the_ideal(
        (n, s) in prop_oneof![Just((2usize, 3usize)), Just((2, 4)), Just((3, 2))],
        rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 8), 0..=3),
    ) {
        let f = free_truncated(n, s).unwrap();
        let d = f.dim(s);
        let vecs: Vec<SparseVec> = rows
            .iter()
            .map(|r| SparseVec::from_pairs(r[..d].iter().enumerate().map(|(i, &c)| (i, rat(c)))))
            .collect();
        let nonzero = tanaka::exactla::rank_of(d, &vecs) > 0;
        let mut h = GradedSubspace::zero(s);
        h.layers[s - 1] = vecs;
        let q = f.quotient(&h).unwrap();
        let e = maximal_extension(&q).unwrap();
        let top = if e.depth() > q.depth() { e.dim(s + 1) } else { 0 };
        let full = witt_dim(n as u64, s as u32 + 1) as usize;
        prop_assert!(top <= full);
        prop_assert_eq!(top == full, !nonzero);
        prop_assert!(e.validate().is_valid());
    }
}
