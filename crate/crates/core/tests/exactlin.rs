mod common;

use hopf_galois::exactlin::{
    cokernel_projection, invert, kernel_basis, rank, right_inverse, solve_factor_through_mono,
    Chain, Factor, Field, LinMap,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(7)),
        Just(Field::Prime(5))
    ]
}

fn mat(f: Field, rows: usize, cols: usize, seed: u64) -> LinMap {
    common::random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), f, rows, cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_matches_triple_loop(f in field(), n in 1usize..5, m in 1usize..5, k in 1usize..5, s in any::<u64>()) {
        let a = mat(f, n, m, s);
        let b = mat(f, m, k, s ^ 1);
        prop_assert_eq!(a.compose(&b).unwrap(), common::compose(&a, &b));
    }

    #[test]
    fn composition_is_associative(f in field(), d in prop::array::uniform4(1usize..4), s in any::<u64>()) {
        let a = mat(f, d[0], d[1], s);
        let b = mat(f, d[1], d[2], s ^ 1);
        let c = mat(f, d[2], d[3], s ^ 2);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_matches_index_formula(f in field(), d in prop::array::uniform4(1usize..4), s in any::<u64>()) {
        let a = mat(f, d[0], d[1], s);
        let b = mat(f, d[2], d[3], s ^ 1);
        prop_assert_eq!(a.kron(&b), common::kron(&a, &b));
    }

    #[test]
    fn kron_interchange_law(f in field(), d in prop::array::uniform6(1usize..4), s in any::<u64>()) {
        let a = mat(f, d[0], d[1], s);
        let c = mat(f, d[1], d[2], s ^ 1);
        let b = mat(f, d[3], d[4], s ^ 2);
        let e = mat(f, d[4], d[5], s ^ 3);
        let lhs = a.kron(&b).compose(&c.kron(&e)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&e).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_matches_minors_and_rank_nullity(f in field(), n in 1usize..5, m in 1usize..5, s in any::<u64>()) {
        let a = mat(f, n, m, s);
        let r = rank(&a);
        prop_assert_eq!(r, common::rank(&a));
        let ker = kernel_basis(&a);
        prop_assert_eq!(r + ker.dim(), m);
        if let Some(k) = ker.map() {
            prop_assert!(a.compose(k).unwrap().is_zero());
            prop_assert_eq!(rank(k), k.cols());
        }
        let cok = cokernel_projection(&a);
        prop_assert_eq!(r + cok.dim(), n);
        if let Some(q) = cok.map() {
            prop_assert!(q.compose(&a).unwrap().is_zero());
            prop_assert_eq!(common::rank(q), q.rows());
        }
        prop_assert_eq!(rank(&a.transpose()), r);
    }

    #[test]
    fn inverse_is_two_sided(f in field(), n in 1usize..5, s in any::<u64>()) {
        let a = mat(f, n, n, s);
        match invert(&a) {
            Ok(inv) => {
                prop_assert_eq!(common::compose(&a, &inv), LinMap::identity(f, n));
                prop_assert_eq!(common::compose(&inv, &a), LinMap::identity(f, n));
            }
            Err(_) => prop_assert!(common::rank(&a) < n),
        }
    }

    #[test]
    fn factoring_through_a_mono_recovers_the_factor(f in field(), n in 1usize..5, extra in 0usize..3, k in 1usize..4, s in any::<u64>()) {
        let p = mat(f, n + extra, n, s);
        prop_assume!(rank(&p) == n);
        let g = mat(f, n, k, s ^ 1);
        let pg = p.compose(&g).unwrap();
        prop_assert_eq!(solve_factor_through_mono(&p, &pg).unwrap(), g);
    }

    #[test]
    fn right_inverse_splits_an_epi(f in field(), n in 1usize..4, extra in 0usize..3, s in any::<u64>()) {
        let q = mat(f, n, n + extra, s);
        prop_assume!(rank(&q) == n);
        let r = right_inverse(&q).unwrap();
        prop_assert_eq!(q.compose(&r).unwrap(), LinMap::identity(f, n));
    }

    #[test]
    fn chain_matches_kron_then_compose(f in field(), d in prop::array::uniform4(1usize..4), s in any::<u64>()) {
        let a = mat(f, d[0], d[1], s);
        let b = mat(f, d[2], d[3], s ^ 1);
        let c = mat(f, d[1], d[0], s ^ 2);
        let chained = Chain::identity(f, d[1] * d[3])
            .then(&[Factor::Id(d[1]), Factor::Map(&b)]).unwrap()
            .then(&[Factor::Map(&a), Factor::Id(d[2])]).unwrap()
            .then(&[Factor::Map(&c), Factor::Id(d[2])]).unwrap()
            .finish();
        let id2 = LinMap::identity(f, d[2]);
        let expected = common::compose(
            &common::kron(&c, &id2),
            &common::compose(&common::kron(&a, &id2), &common::kron(&LinMap::identity(f, d[1]), &b)),
        );
        prop_assert_eq!(chained, expected);
    }

    #[test]
    fn permutation_of_factors_is_invertible_and_moves_basis_vectors(s in any::<u64>()) {
        let f = Field::Rational;
        let dims = [2usize, 3, 2];
        let order = [2usize, 0, 1];
        let p = LinMap::permutation(f, &dims, &order);
        let idx = (s % 12) as usize;
        let (a, b, c) = (idx / 6, idx / 2 % 3, idx % 2);
        // output factors (c, a, b) with dims (2, 2, 3)
        let out = c * 6 + a * 3 + b;
        prop_assert!(p.get(out, idx).is_one());
        prop_assert_eq!(rank(&p), 12);
    }
}

#[test]
fn swap_applied_to_basis_index_two() {
    let f = Field::Rational;
    let m = LinMap::swap(f, 2, 2).kron(&LinMap::identity(f, 2));
    // e_{(1,0)} ⊗ e_0 lives at index 4 and moves to e_{(0,1)} ⊗ e_0 at index 2
    for col in 0..8 {
        let (i, j, k) = (col / 4, col / 2 % 2, col % 2);
        let target = j * 4 + i * 2 + k;
        for row in 0..8 {
            assert_eq!(m.get(row, col).is_one(), row == target);
        }
    }
}
