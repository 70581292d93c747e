//! Brute-force oracles written independently of the library's linear algebra.
#![allow(dead_code)]

use hopf_galois::exactlin::{Field, LinMap, Scalar};
use rand::Rng;

/// `(a b)[i][j] = Σ_k a[i][k] b[k][j]` by a triple loop.
pub fn compose(a: &LinMap, b: &LinMap) -> LinMap {
    assert_eq!(a.cols(), b.rows());
    let f = a.field();
    let mut out = LinMap::zero(f, a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = f.zero();
            for k in 0..a.cols() {
                acc = &acc + &(a.get(i, k) * b.get(k, j));
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// `(a ⊗ b)[(i, k)][(j, l)] = a[i][j] b[k][l]`.
pub fn kron(a: &LinMap, b: &LinMap) -> LinMap {
    let f = a.field();
    let mut out = LinMap::zero(f, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(
                        i * b.rows() + k,
                        j * b.cols() + l,
                        a.get(i, j) * b.get(k, l),
                    );
                }
            }
        }
    }
    out
}

fn det(m: &[Vec<Scalar>], f: Field) -> Scalar {
    let n = m.len();
    let mut total = f.zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = if inversions % 2 == 0 {
            f.one()
        } else {
            f.from_i64(-1)
        };
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[i][j];
        }
        total = &total + &term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// The largest `k` with a nonzero `k x k` minor (Leibniz determinants).
pub fn rank(a: &LinMap) -> usize {
    let f = a.field();
    for k in (1..=a.rows().min(a.cols())).rev() {
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let minor: Vec<Vec<Scalar>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| a.get(r, c).clone()).collect())
                    .collect();
                if !det(&minor, f).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Entries in `{-3..3}` over `F_p`, and `n/d` with `n ∈ {-3..3}`, `d ∈ {1..3}` over `Q`;
/// about a third of the entries are zero so that rank deficiency is common.
pub fn random_matrix(rng: &mut impl Rng, f: Field, rows: usize, cols: usize) -> LinMap {
    LinMap::from_fn(f, rows, cols, |_, _| {
        if rng.gen_bool(0.35) {
            return f.zero();
        }
        let n = rng.gen_range(-3i64..=3);
        match f {
            Field::Rational => f.ratio(n, rng.gen_range(1..=3)).unwrap(),
            Field::Prime(_) => f.from_i64(n),
        }
    })
}
