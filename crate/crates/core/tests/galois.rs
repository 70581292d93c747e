use hopf_galois::crossed::CrossedSystem;
use hopf_galois::exactlin::{Field, LinMap};
use hopf_galois::examples::{builtin, Builtin};
use hopf_galois::galois::{
    analyze_galois, check_u_prime_relations, extract_crossed_from_galois, forward_certificate,
    roundtrip, theta_prime, verify_forward, verify_yd_equivalence,
};
use hopf_galois::ydcat::{BraidingMode, Category};
use hopf_galois::Error;

const CROSSED: &[&str] = &[
    "adjoint-smash:c2",
    "adjoint-smash:h4",
    "adjoint-smash:superline",
    "twisted:c2",
    "clifford:superline",
    "crossed:c2-sign",
];

fn crossed(id: &str, field: Field) -> (Category, CrossedSystem) {
    match builtin(id, field, BraidingMode::YetterDrinfeld).unwrap() {
        Builtin::Crossed { cat, sys } => (cat, sys),
        _ => panic!("{id} is not crossed"),
    }
}

#[test]
fn roundtrip_recovers_action_and_cocycle() {
    for field in [Field::Rational, Field::Prime(7)] {
        for id in CROSSED {
            let (cat, sys) = crossed(id, field);
            let out = roundtrip(&cat, &sys).unwrap();
            assert!(out.report.passed(), "{id} over {field}: {}", out.report);
            let p = &out.forward.p;
            assert_eq!(p.compose(&sys.alpha).unwrap(), out.backward.alpha_p);
            assert_eq!(p.compose(&sys.sigma).unwrap(), out.backward.sigma_p);
            assert_eq!(out.backward.alpha, sys.alpha);
            assert_eq!(out.backward.sigma, sys.sigma);
            assert_eq!(out.backward.omega, sys.sigma_inv);
        }
    }
}

#[test]
fn forward_dimensions_match_normal_basis() {
    for id in CROSSED {
        let (cat, sys) = crossed(id, Field::Prime(5));
        let cert = verify_forward(&cat, &sys).unwrap();
        let (nb, k) = (sys.b.dim(), sys.h.dim());
        assert_eq!(cert.p.cols(), nb);
        // A ⊗_B A ≅ A ⊗ H has dimension nb·k·k
        assert_eq!(cert.q.rows(), nb * k * k, "{id}");
        assert_eq!(cert.can.rows(), cert.can.cols());
    }
}

#[test]
fn u_prime_relations_hold_and_section_needs_quotient() {
    for id in CROSSED {
        let (cat, sys) = crossed(id, Field::Rational);
        let cert = forward_certificate(&cat, &sys).unwrap();
        let r = check_u_prime_relations(&cert.a, &cert.q, &cert.u_prime).unwrap();
        assert!(r.passed(), "{id}: {r}");
        assert!(r.item("u_prime_section").unwrap().note.is_some());
    }
}

#[test]
fn theta_with_cocycle_in_place_of_its_inverse_is_not_inverse_to_can() {
    let (cat, sys) = crossed("crossed:c2-sign", Field::Rational);
    let cert = forward_certificate(&cat, &sys).unwrap();
    let mut wrong = sys.clone();
    wrong.sigma_inv = sys.sigma.clone();
    let theta = cert.q.compose(&theta_prime(&cat, &wrong).unwrap()).unwrap();
    let id = LinMap::identity(Field::Rational, cert.can.rows());
    assert_ne!(cert.can.compose(&theta).unwrap(), id);
}

#[test]
fn trivial_coaction_is_not_galois() {
    let Builtin::Comodule { cat, a } = builtin(
        "trivial-coaction:h4",
        Field::Rational,
        BraidingMode::YetterDrinfeld,
    )
    .unwrap() else {
        panic!()
    };
    let g = analyze_galois(&cat, &a).unwrap();
    assert!(!g.is_galois());
    let s = g.summary();
    assert_eq!(
        (s.dim_b, s.dim_tensor_over_b, s.can_rows, s.can_cols),
        (4, 4, 16, 4)
    );
}

#[test]
fn smash_products_are_galois_as_comodule_algebras() {
    for id in CROSSED {
        let (cat, sys) = crossed(id, Field::Prime(7));
        let g = analyze_galois(&cat, &sys.comodule_algebra()).unwrap();
        assert!(g.is_galois(), "{id}");
        assert_eq!(g.coinvariants.p.cols(), sys.b.dim());
    }
}

#[test]
fn rescaled_normal_basis_rescales_cocycle() {
    let f = Field::Rational;
    let (cat, sys) = crossed("twisted:c2", f);
    let cert = forward_certificate(&cat, &sys).unwrap();
    let two = f.from_i64(2);
    let mut phi = LinMap::identity(f, 2);
    phi.set(1, 1, two);
    let ex = extract_crossed_from_galois(&cat, &cert.a, &cert.p, &cert.q, &cert.w, &phi).unwrap();
    assert!(ex.report.passed(), "{}", ex.report);
    // γ(g) = 2g gives σ(g, g) = γ(g)γ(g)γ⁻¹(1) = 4 g² = -4
    assert_eq!(ex.sigma.get(0, 3), &f.from_i64(-4));
    assert_eq!(ex.sigma.get(0, 0), &f.from_i64(1));
}

#[test]
fn non_comodule_phi_is_rejected() {
    let f = Field::Rational;
    let (cat, sys) = crossed("adjoint-smash:c2", f);
    let cert = forward_certificate(&cat, &sys).unwrap();
    let swap_h = LinMap::from_ints(f, &[&[0, 1], &[1, 0]]);
    let phi = LinMap::identity(f, 2).kron(&swap_h);
    let err =
        extract_crossed_from_galois(&cat, &cert.a, &cert.p, &cert.q, &cert.w, &phi).unwrap_err();
    assert!(matches!(err, Error::NotModuleComoduleIso(_)), "{err}");
}

#[test]
fn swap_braided_super_line_is_refused() {
    let (cat, sys) = crossed("clifford:superline", Field::Rational);
    assert!(verify_yd_equivalence(&cat, &sys).unwrap().report.passed());
    let swap = Category::with_mode(cat.base().clone(), BraidingMode::Swap);
    let err = verify_yd_equivalence(&swap, &sys).unwrap_err();
    assert!(matches!(err, Error::AxiomsFailed(_)), "{err}");
}
