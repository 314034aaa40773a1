use bundlecalc::dsl::parse;
use bundlecalc_core::{BundleExpr, Partition};
use proptest::prelude::*;

fn expr_strategy() -> impl Strategy<Value = BundleExpr> {
    let leaf = prop_oneof![Just(BundleExpr::U), Just(BundleExpr::Q), (-5i64..=5).prop_map(BundleExpr::Line)];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(BundleExpr::dual),
            inner.clone().prop_map(BundleExpr::end0),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| BundleExpr::tensor(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| BundleExpr::sum(a, b)),
            (0u32..=4, inner.clone()).prop_map(|(p, e)| BundleExpr::wedge(p, e)),
            (0u32..=4, inner.clone()).prop_map(|(p, e)| BundleExpr::sym(p, e)),
            (prop::collection::vec(1u32..=3, 0..=3), inner.clone()).prop_map(|(mut v, e)| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                BundleExpr::schur(Partition::new(v).unwrap(), e)
            }),
        ]
    })
}

#[test]
fn documented_examples_round_trip() {
    for text in [
        "wedge(2, Q)",
        "sym(3, dual(U))",
        "wedge(2, wedge(2, Q))",
        "end0(wedge(2,Q))",
        "wedge(2,Q)*dual(wedge(2,Q))",
        "schur([2,1,1], Q) * O(-1)",
        "U + Q * O(3) + O(-2)",
    ] {
        let e = parse(text).unwrap();
        assert_eq!(parse(&e.to_string()).unwrap(), e, "{text}");
    }
}

#[test]
fn whitespace_is_insignificant() {
    assert_eq!(parse(" wedge ( 2 ,\tQ ) ").unwrap(), parse("wedge(2,Q)").unwrap());
    assert_eq!(parse("O( -1 )").unwrap(), BundleExpr::Line(-1));
}

#[test]
fn tensor_binds_tighter_than_sum() {
    let e = parse("U + Q * O(1)").unwrap();
    assert_eq!(e, BundleExpr::sum(BundleExpr::U, BundleExpr::tensor(BundleExpr::Q, BundleExpr::Line(1))));
}

#[test]
fn diagnostics_carry_offsets() {
    let err = parse("wedge(2 Q)").unwrap_err();
    assert_eq!(err.offset, 8);
    let err = parse("schur([1,2], Q)").unwrap_err();
    assert!(err.to_string().contains("partition"), "{err}");
    assert!(parse("sym(-1, U)").is_err());
    assert!(parse("Q +").is_err());
    assert!(parse("Q Q").is_err());
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr_strategy()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e.clone());
        prop_assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}
