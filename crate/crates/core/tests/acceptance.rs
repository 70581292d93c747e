//! One pass/fail line per acceptance criterion, all comparisons exact.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use hopf_galois::crossed::{
    check_action_cocycle_relations, fuzz_product_equivalence, CrossedSystem,
};
use hopf_galois::exactlin::{cokernel_projection, kernel_basis, rank, Field, LinMap};
use hopf_galois::examples::{builtin, c2_category, fuzz_base, super_line, Builtin, BUILTIN_IDS};
use hopf_galois::galois::{analyze_galois, roundtrip, verify_forward};
use hopf_galois::hopfstruct::check_hopf;
use hopf_galois::io::{export_builtin, to_json, Loaded, Target};
use hopf_galois::ydcat::{BraidingMode, Category};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SMASH: [&str; 3] = [
    "adjoint-smash:c2",
    "adjoint-smash:h4",
    "adjoint-smash:superline",
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn crossed(id: &str, f: Field) -> (Category, CrossedSystem) {
    match builtin(id, f, BraidingMode::YetterDrinfeld).unwrap() {
        Builtin::Crossed { cat, sys } => (cat, sys),
        _ => panic!("{id} is not crossed"),
    }
}

fn hopf_axiom_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut s_orders = true;
    for f in [Field::Rational, Field::Prime(5)] {
        for id in ["hopf:c2", "hopf:c4", "hopf:h4"] {
            let Builtin::Hopf { cat, h } = builtin(id, f, BraidingMode::YetterDrinfeld).unwrap()
            else {
                unreachable!()
            };
            if !cat.base().is_trivial() || !check_hopf(&cat, &h).unwrap().passed() {
                failures.push(format!("{id}/{f}"));
            }
            if id == "hopf:h4" {
                let id4 = LinMap::identity(f, 4);
                s_orders &=
                    h.antipode.power(2).unwrap() != id4 && h.antipode.power(4).unwrap() == id4;
            }
        }
    }
    outcome(
        failures.is_empty() && s_orders,
        format!(
            "failing {:?}, H4 has S^2 != id and S^4 == id: {s_orders}",
            failures
        ),
    )
}

fn braided_witness() -> Outcome {
    let f = Field::Rational;
    let yd = c2_category(f, BraidingMode::YetterDrinfeld).unwrap();
    let h = super_line(&yd).unwrap();
    let with_yd = check_hopf(&yd, &h).unwrap().passed();
    let swap = Category::with_mode(yd.base().clone(), BraidingMode::Swap);
    let failed: Vec<String> = check_hopf(&swap, &h)
        .unwrap()
        .failures()
        .map(|i| i.axiom.clone())
        .collect();
    outcome(
        with_yd && failed == ["bialgebra.braided_law"],
        format!("YD braiding passes: {with_yd}; swap fails {failed:?}"),
    )
}

fn crossed_product_equivalence() -> Outcome {
    let (cat, b, h, alpha, sigma) = fuzz_base(Field::Prime(5)).unwrap();
    let s = fuzz_product_equivalence(&cat, &b, &h, &alpha, &sigma, 7, 50, 5, 500).unwrap();
    outcome(
        s.cases.len() >= 50 && s.holding() >= 5 && s.failing() >= 5 && s.disagreements() == 0,
        format!(
            "seed 7 over F5: {} cases, {} algebra, {} not, {} disagreements",
            s.cases.len(),
            s.holding(),
            s.failing(),
            s.disagreements()
        ),
    )
}

fn forward_direction() -> Outcome {
    let keys = [
        "can_theta_is_id",
        "theta_can_is_id",
        "q_w_is_id",
        "can_q_is_can_prime",
        "u_prime_coaction",
        "u_prime_counit",
        "u_prime_section",
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for id in SMASH {
        let (cat, sys) = crossed(id, Field::Rational);
        match verify_forward(&cat, &sys) {
            Ok(cert) => {
                let all = keys
                    .iter()
                    .all(|k| cert.report.item(k).is_some_and(|i| i.passed));
                ok &= all;
                let aa = cert.can_prime.cols();
                if id == "adjoint-smash:h4" {
                    ok &= aa == 256 && cert.can.rows() == 64 && cert.can.cols() == 64;
                }
                notes.push(format!(
                    "{id}: A⊗A {aa}, can {}x{}",
                    cert.can.rows(),
                    cert.can.cols()
                ));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{id}: {e}"));
            }
        }
    }
    outcome(ok, notes.join("; "))
}

fn backward_direction() -> Outcome {
    let keys = [
        "alpha_recovered",
        "sigma_recovered",
        "sigma_inverse_recovered",
        "theta_agrees_after_q",
    ];
    let backward_keys = [
        "gamma_mu",
        "mu_gamma",
        "sigma_omega",
        "omega_sigma",
        "phi_multiplicative",
        "phi_unital",
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for id in SMASH {
        let (cat, sys) = crossed(id, Field::Rational);
        match roundtrip(&cat, &sys) {
            Ok(out) => {
                let pass = out.report.passed()
                    && keys
                        .iter()
                        .all(|k| out.report.item(k).is_some_and(|i| i.passed))
                    && backward_keys
                        .iter()
                        .all(|k| out.backward.report.item(k).is_some_and(|i| i.passed));
                ok &= pass;
                notes.push(format!(
                    "{id}: {}",
                    if pass { "recovered" } else { "mismatch" }
                ));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{id}: {e}"));
            }
        }
    }
    outcome(ok, notes.join("; "))
}

fn action_cocycle_relations() -> Outcome {
    let mut failing = Vec::new();
    let ids = SMASH
        .iter()
        .chain(&["twisted:c2", "clifford:superline", "crossed:c2-sign"]);
    for id in ids {
        for f in [Field::Rational, Field::Prime(5)] {
            let (cat, sys) = crossed(id, f);
            if !check_action_cocycle_relations(&sys, &cat).unwrap().passed() {
                failing.push(format!("{id}/{f}"));
            }
        }
    }
    outcome(
        failing.is_empty(),
        format!(
            "three smash products and three nontrivial cocycles over Q and F5; failing {failing:?}"
        ),
    )
}

fn negative_controls() -> Outcome {
    let Builtin::Comodule { cat, a } = builtin(
        "trivial-coaction:h4",
        Field::Rational,
        BraidingMode::YetterDrinfeld,
    )
    .unwrap() else {
        unreachable!()
    };
    let g = analyze_galois(&cat, &a).unwrap();
    let non_galois = !g.is_galois() && !g.can.is_square();

    let f = Field::Rational;
    let yd = c2_category(f, BraidingMode::YetterDrinfeld).unwrap();
    let sl = super_line(&yd).unwrap();
    let flip = LinMap::from_ints(f, &[&[0, 1], &[1, 0]]);
    let rejected = !yd
        .check_morphism(sl.object(), sl.object(), &flip)
        .unwrap()
        .passed();
    outcome(
        non_galois && rejected,
        format!(
            "trivial coaction: galois {}, can {}x{}; non-equivariant map rejected: {rejected}",
            g.is_galois(),
            g.can.rows(),
            g.can.cols()
        ),
    )
}

fn infrastructure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut bad = 0;
    let mut count = 0;
    for f in [Field::Rational, Field::Prime(7)] {
        for _ in 0..200 {
            count += 1;
            let (r, c, k) = (
                rng.gen_range(1..5),
                rng.gen_range(1..5),
                rng.gen_range(1..4),
            );
            let (er, ec) = (rng.gen_range(1..3), rng.gen_range(1..3));
            let a = common::random_matrix(&mut rng, f, r, c);
            let b = common::random_matrix(&mut rng, f, c, k);
            let e = common::random_matrix(&mut rng, f, er, ec);
            let rk = rank(&a);
            let ker = kernel_basis(&a);
            let cok = cokernel_projection(&a);
            let ok = a.compose(&b).unwrap() == common::compose(&a, &b)
                && a.kron(&e) == common::kron(&a, &e)
                && rk == common::rank(&a)
                && rk + ker.dim() == c
                && rk + cok.dim() == r
                && ker.map().is_none_or(|k| {
                    common::compose(&a, k).is_zero() && common::rank(k) == k.cols()
                })
                && cok.map().is_none_or(|q| {
                    common::compose(q, &a).is_zero() && common::rank(q) == q.rows()
                });
            if !ok {
                bad += 1;
            }
        }
    }
    let mut io_bad = Vec::new();
    for id in BUILTIN_IDS {
        for f in [Field::Rational, Field::Prime(7)] {
            let b = builtin(id, f, BraidingMode::YetterDrinfeld).unwrap();
            let doc = export_builtin(&b);
            let text = to_json(&doc);
            let loaded = Loaded::from_json(&text, BraidingMode::YetterDrinfeld).unwrap();
            let same = loaded.doc == doc
                && to_json(&loaded.doc) == text
                && match (
                    &b,
                    loaded
                        .target(&loaded.default_system().unwrap_or_else(|_| "H".into()))
                        .unwrap(),
                ) {
                    (Builtin::Hopf { h, .. }, Target::Hopf(h2)) => *h == h2,
                    (Builtin::Crossed { sys, .. }, Target::Crossed(s2)) => *sys == s2,
                    (Builtin::Comodule { a, .. }, Target::ComoduleAlgebra(a2)) => *a == a2,
                    _ => false,
                };
            if !same {
                io_bad.push(format!("{id}/{f}"));
            }
        }
    }
    outcome(
        bad == 0 && io_bad.is_empty(),
        format!(
            "{count} random matrices, {bad} oracle mismatches; export/import mismatches {io_bad:?}"
        ),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        (
            "1 Hopf axiom suite",
            hopf_axiom_suite,
            Duration::from_secs(1),
        ),
        ("2 braided witness", braided_witness, Duration::from_secs(1)),
        (
            "3 crossed-product equivalence",
            crossed_product_equivalence,
            Duration::from_secs(30),
        ),
        (
            "4 Galois forward",
            forward_direction,
            Duration::from_secs(60),
        ),
        (
            "5 Galois backward",
            backward_direction,
            Duration::from_secs(60),
        ),
        (
            "6 action-cocycle relations",
            action_cocycle_relations,
            Duration::from_secs(60),
        ),
        (
            "7 negative controls",
            negative_controls,
            Duration::from_secs(60),
        ),
        ("8 infrastructure", infrastructure, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.passed && elapsed < budget;
        writeln!(
            err,
            "acceptance {name}: {} ({:.3}s of {}s) {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            o.detail
        )
        .unwrap();
        if !pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
