use hopf_galois::crossed::{
    check_action_cocycle_relations, check_cross_product_relations, check_product_equivalence,
    fuzz_product_equivalence,
};
use hopf_galois::exactlin::Field;
use hopf_galois::examples::{builtin, fuzz_base, Builtin};
use hopf_galois::hopfstruct::check_comodule_algebra;
use hopf_galois::ydcat::BraidingMode;

const CROSSED: &[&str] = &[
    "adjoint-smash:c2",
    "adjoint-smash:h4",
    "adjoint-smash:superline",
    "twisted:c2",
    "clifford:superline",
    "crossed:c2-sign",
];

#[test]
fn suite_systems_satisfy_every_battery() {
    for field in [Field::Rational, Field::Prime(5), Field::Prime(7)] {
        for id in CROSSED {
            let Builtin::Crossed { cat, sys } =
                builtin(id, field, BraidingMode::YetterDrinfeld).unwrap()
            else {
                panic!("{id} is not crossed");
            };
            let eq =
                check_product_equivalence(&cat, &sys.b, &sys.h, &sys.alpha, &sys.sigma).unwrap();
            assert!(eq.lhs && eq.rhs, "{id} over {field}: {:?}", eq);
            let rel = check_cross_product_relations(&cat, &sys.b, &sys.h, &sys.alpha, &sys.sigma)
                .unwrap();
            assert!(rel.passed(), "{id} over {field}: {rel}");
            let rel = check_action_cocycle_relations(&sys, &cat).unwrap();
            assert!(rel.passed(), "{id} over {field}: {rel}");
            let com = check_comodule_algebra(&cat, &sys.comodule_algebra()).unwrap();
            assert!(com.passed(), "{id} over {field}: {com}");
        }
    }
}

#[test]
fn fuzz_sides_agree() {
    let (cat, b, h, a, s) = fuzz_base(Field::Prime(5)).unwrap();
    let sum = fuzz_product_equivalence(&cat, &b, &h, &a, &s, 7, 50, 5, 500).unwrap();
    println!(
        "cases {} holding {} failing {} disagree {}",
        sum.cases.len(),
        sum.holding(),
        sum.failing(),
        sum.disagreements()
    );
    assert_eq!(sum.disagreements(), 0);
}
