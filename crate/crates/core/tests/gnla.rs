use proptest::prelude::*;
use tanaka::exactla::{rank_of, rat, SparseVec};
use tanaka::fixtures::{fixture, m4, m4_prime, m5_double_prime, m5_prime, NAMES};
use tanaka::freelie::free_truncated;
use tanaka::gnla::{abelian, heisenberg, GnlaError, GradedSubspace, Gnla};

fn same_brackets(a: &Gnla, b: &Gnla) -> bool {
    a.dims() == b.dims() && a.brackets().eq(b.brackets())
}

#[test]
fn every_fixture_validates_and_round_trips() {
    for name in NAMES {
        let m = fixture(name).unwrap();
        let v = m.validate();
        assert!(v.is_valid(), "{name}: {:?}", v.violation);
        let back = Gnla::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m, "{name}");
        assert_eq!(back.hash(), m.hash());
    }
    for m in [heisenberg(3), abelian(4)] {
        assert!(m.validate().is_valid());
    }
}

#[test]
fn fundamental_fixtures_have_no_central_generators() {
    for name in NAMES {
        let m = fixture(name).unwrap();
        if m.is_fundamental().fundamental {
            assert!(m.center().layer(1).is_empty(), "{name}");
            assert!(m.check_branching().surjective(), "{name}");
        }
    }
    let a = abelian(3);
    assert_eq!(a.center().layer(1).len(), 3);
    assert!(!a.is_fundamental().fundamental);
}

#[test]
fn common_relations_extend_to_both_depth_five_algebras() {
    let base = m4();
    assert_eq!(base.growth_vector(), vec![2, 1, 2, 3]);
    for m in [m5_prime(), m5_double_prime()] {
        assert!(m.validate().is_valid());
        assert!(same_brackets(&m.truncated(4), &base), "{}", m.name());
    }
    // the fractional constants of m5'
    let m = m5_prime();
    let coeffs: Vec<String> = m.brackets().flat_map(|(_, v)| v.iter().map(|(_, c)| c.to_string()).collect::<Vec<_>>()).collect();
    assert!(coeffs.iter().any(|c| c == "2/3") && coeffs.iter().any(|c| c == "4/3"));
}

#[test]
fn three_generator_depth_four_layers() {
    let m = m4_prime();
    assert_eq!(m.dim(3), 8);
    assert_eq!(m.growth_vector(), vec![3, 3, 8, 3]);
    assert!(m.validate().is_valid());
    let printed = fixture("m4prime_printed").unwrap();
    assert!(printed.validate().is_valid());
    assert!(same_brackets(&printed.truncated(3), &m.truncated(3)));
}

#[test]
fn quotient_rejects_non_ideals() {
    let f = free_truncated(2, 3).unwrap();
    let mut h = GradedSubspace::zero(3);
    h.layers[0] = vec![SparseVec::unit(0)];
    assert_eq!(f.quotient(&h), Err(GnlaError::MeetsDegreeOne));
    let mut h = GradedSubspace::zero(3);
    h.layers[1] = vec![SparseVec::unit(0)];
    assert!(matches!(f.quotient(&h), Err(GnlaError::NotAnIdeal { .. })));
}

#[test]
fn spec_files_reject_malformed_input() {
    for text in [
        r#"{"name":"x","dims":[],"brackets":[]}"#,
        r#"{"name":"x","dims":[2,0],"brackets":[]}"#,
        r#"{"name":"x","dims":[2,1],"brackets":[{"left":[1,1],"right":[1,1],"value":[]}]}"#,
        r#"{"name":"x","dims":[2,1],"brackets":[{"left":[3,1],"right":[1,2],"value":[]}]}"#,
        r#"{"name":"x","dims":[2,1]}"#,
        "not json",
    ] {
        assert!(Gnla::from_json(text).is_err(), "{text}");
    }
}

fn top_subspace() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    prop_oneof![Just((2usize, 4usize)), Just((2, 5)), Just((3, 3)), Just((4, 2))].prop_flat_map(|(n, s)| {
        let d = tanaka::freelie::witt_dim(n as u64, s as u32) as usize;
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, d), 0..=d)
            .prop_map(move |rows| (n, s, rows))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn quotient_dimension_count((n, s, rows) in top_subspace()) {
        let f = free_truncated(n, s).unwrap();
        let vecs: Vec<SparseVec> = rows
            .iter()
            .map(|r| SparseVec::from_pairs(r.iter().enumerate().map(|(i, &c)| (i, rat(c)))))
            .collect();
        let rank = rank_of(f.dim(s), &vecs);
        let mut h = GradedSubspace::zero(s);
        h.layers[s - 1] = vecs.clone();
        let q = f.quotient(&h).unwrap();
        prop_assert_eq!(q.total_dim(), f.total_dim() - rank);
        prop_assert!(q.validate().is_valid());
        // a quotient of a free algebra is always generated by g₋₁; it is
        // fundamental unless some x ∈ g₋₁ has [x, g₋₁] inside the ideal,
        // which needs the ideal to reach g₋₂
        prop_assert!(q.check_branching().first_failure.is_none());
        let central_generator = s == 2
            && (0..n).any(|x| {
                let mut span = vecs.clone();
                span.extend((0..n).map(|y| f.bracket_basis(x, y)).map(|v| {
                    SparseVec::from_pairs(v.iter().map(|(i, c)| (i - f.dim(1), c.clone())))
                }));
                rank_of(f.dim(s), &span) == rank
            });
        prop_assert_eq!(q.is_fundamental().fundamental, !central_generator);
        let back = Gnla::from_json(&q.to_json()).unwrap();
        prop_assert_eq!(back, q);
    }
}
