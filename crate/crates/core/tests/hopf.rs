use hopf_galois::exactlin::{Field, LinMap, Scalar};
use hopf_galois::examples::{cyclic_table, group_algebra, sweedler_h4};
use hopf_galois::hopfstruct::{check_hopf, convolution_inverse, HopfAlgebraObject};
use hopf_galois::ydcat::Category;

type Vector = Vec<Scalar>;

/// Classical Hopf algebra in coordinates: every operation is an explicit sum over basis
/// indices, with no matrix products or tensor helpers from the library.
struct Classical {
    f: Field,
    n: usize,
    mul: Vec<Vec<Scalar>>,
    unit: Vec<Vec<Scalar>>,
    comul: Vec<Vec<Scalar>>,
    counit: Vec<Vec<Scalar>>,
    antipode: Vec<Vec<Scalar>>,
}

impl Classical {
    fn from(h: &HopfAlgebraObject) -> Classical {
        Classical {
            f: h.mul().field(),
            n: h.dim(),
            mul: h.mul().to_rows(),
            unit: h.unit().to_rows(),
            comul: h.comul.to_rows(),
            counit: h.counit.to_rows(),
            antipode: h.antipode.to_rows(),
        }
    }

    fn zero(&self, len: usize) -> Vector {
        vec![self.f.zero(); len]
    }

    fn basis(&self, i: usize) -> Vector {
        let mut v = self.zero(self.n);
        v[i] = self.f.one();
        v
    }

    fn times(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.n;
        let mut out = self.zero(n);
        for i in 0..n {
            for j in 0..n {
                let c = &a[i] * &b[j];
                if c.is_zero() {
                    continue;
                }
                for r in 0..n {
                    out[r] = &out[r] + &(&c * &self.mul[r][i * n + j]);
                }
            }
        }
        out
    }

    fn one(&self) -> Vector {
        (0..self.n).map(|r| self.unit[r][0].clone()).collect()
    }

    /// `Δ(v)` as a length `n²` vector.
    fn delta(&self, v: &Vector) -> Vector {
        let n = self.n;
        let mut out = self.zero(n * n);
        for i in 0..n {
            for r in 0..n * n {
                out[r] = &out[r] + &(&v[i] * &self.comul[r][i]);
            }
        }
        out
    }

    fn eps(&self, v: &Vector) -> Scalar {
        let mut s = self.f.zero();
        for i in 0..self.n {
            s = &s + &(&v[i] * &self.counit[0][i]);
        }
        s
    }

    fn s(&self, v: &Vector) -> Vector {
        let n = self.n;
        let mut out = self.zero(n);
        for i in 0..n {
            for r in 0..n {
                out[r] = &out[r] + &(&v[i] * &self.antipode[r][i]);
            }
        }
        out
    }

    /// Applies `f ⊗ g` to a vector on `n ⊗ n` where `f`, `g` map basis vectors to vectors
    /// of lengths `p`, `q`.
    fn both(
        &self,
        t: &Vector,
        p: usize,
        q: usize,
        f: impl Fn(usize) -> Vector,
        g: impl Fn(usize) -> Vector,
    ) -> Vector {
        let n = self.n;
        let mut out = self.zero(p * q);
        for i in 0..n {
            for j in 0..n {
                let c = &t[i * n + j];
                if c.is_zero() {
                    continue;
                }
                let (fi, gj) = (f(i), g(j));
                for a in 0..p {
                    for b in 0..q {
                        out[a * q + b] = &out[a * q + b] + &(&(c * &fi[a]) * &gj[b]);
                    }
                }
            }
        }
        out
    }

    /// The names of the classical axioms that fail.
    fn failures(&self) -> Vec<&'static str> {
        let n = self.n;
        let mut bad = Vec::new();
        let mut fail = |name: &'static str, ok: bool| {
            if !ok && !bad.contains(&name) {
                bad.push(name);
            }
        };
        let e = |i: usize| self.basis(i);
        let one = self.one();
        let scalar = |s: Scalar| vec![s];
        for i in 0..n {
            fail("left_unit", self.times(&one, &e(i)) == e(i));
            fail("right_unit", self.times(&e(i), &one) == e(i));
            let d = self.delta(&e(i));
            fail("coassociativity", {
                let l = self.both(&d, n * n, n, |a| self.delta(&e(a)), e);
                let r = self.both(&d, n, n * n, e, |b| self.delta(&e(b)));
                l == r
            });
            fail(
                "left_counit",
                self.both(&d, 1, n, |a| scalar(self.eps(&e(a))), e) == e(i),
            );
            fail(
                "right_counit",
                self.both(&d, n, 1, e, |b| scalar(self.eps(&e(b)))) == e(i),
            );
            let sl = self.both(&d, n, n, |a| self.s(&e(a)), e);
            let sr = self.both(&d, n, n, e, |b| self.s(&e(b)));
            let collapse = |t: &Vector| -> Vector {
                let mut out = self.zero(n);
                for a in 0..n {
                    for b in 0..n {
                        let c = &t[a * n + b];
                        if !c.is_zero() {
                            let p = self.times(&e(a), &e(b));
                            for r in 0..n {
                                out[r] = &out[r] + &(c * &p[r]);
                            }
                        }
                    }
                }
                out
            };
            let eta_eps: Vector = one.iter().map(|u| u * &self.eps(&e(i))).collect();
            fail("antipode_left", collapse(&sl) == eta_eps);
            fail("antipode_right", collapse(&sr) == eta_eps);
            for j in 0..n {
                let ij = self.times(&e(i), &e(j));
                fail(
                    "counit_multiplicative",
                    self.eps(&ij) == &self.eps(&e(i)) * &self.eps(&e(j)),
                );
                // Δ(ij) = Δ(i) Δ(j) componentwise in H ⊗ H
                let (di, dj) = (self.delta(&e(i)), self.delta(&e(j)));
                let mut prod = self.zero(n * n);
                for a in 0..n * n {
                    for b in 0..n * n {
                        let c = &di[a] * &dj[b];
                        if c.is_zero() {
                            continue;
                        }
                        let (x, y) = (
                            self.times(&e(a / n), &e(b / n)),
                            self.times(&e(a % n), &e(b % n)),
                        );
                        for p in 0..n {
                            for q in 0..n {
                                prod[p * n + q] = &prod[p * n + q] + &(&(&c * &x[p]) * &y[q]);
                            }
                        }
                    }
                }
                fail("bialgebra", self.delta(&ij) == prod);
                for k in 0..n {
                    let l = self.times(&ij, &e(k));
                    let r = self.times(&e(i), &self.times(&e(j), &e(k)));
                    fail("associativity", l == r);
                }
            }
        }
        fail(
            "comul_unital",
            self.delta(&one)
                == self.both(
                    &{
                        let mut t = self.zero(n * n);
                        for a in 0..n {
                            for b in 0..n {
                                t[a * n + b] = &one[a] * &one[b];
                            }
                        }
                        t
                    },
                    n,
                    n,
                    e,
                    e,
                ),
        );
        fail("counit_unital", self.eps(&one).is_one());
        bad
    }
}

/// `g^a x^b` at index `a + 2b`; `x^b g^c = (-1)^{bc} g^c x^b`.
fn sweedler_oracle(f: Field) -> LinMap {
    let mut m = LinMap::zero(f, 4, 16);
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d > 1 {
                continue;
            }
            let sign = if b == 1 && c == 1 { -1 } else { 1 };
            m.set((a + c) % 2 + 2 * (b + d), i * 4 + j, f.from_i64(sign));
        }
    }
    m
}

const FIELDS: [Field; 2] = [Field::Rational, Field::Prime(5)];

#[test]
fn group_algebras_pass_classical_oracle_and_library_battery() {
    for f in FIELDS {
        let cat = Category::vector_spaces(f);
        for n in [2, 3, 4] {
            let h = group_algebra(&cat, &cyclic_table(n)).unwrap();
            assert!(Classical::from(&h).failures().is_empty(), "C{n} over {f}");
            assert!(check_hopf(&cat, &h).unwrap().passed(), "C{n} over {f}");
        }
    }
}

#[test]
fn sweedler_matches_hand_table_and_passes_both_checkers() {
    for f in FIELDS {
        let cat = Category::vector_spaces(f);
        let h = sweedler_h4(&cat).unwrap();
        assert_eq!(h.mul(), &sweedler_oracle(f));
        assert!(Classical::from(&h).failures().is_empty(), "{f}");
        assert!(check_hopf(&cat, &h).unwrap().passed(), "{f}");
        let s2 = h.antipode.power(2).unwrap();
        assert_ne!(s2, LinMap::identity(f, 4));
        assert_eq!(h.antipode.power(4).unwrap(), LinMap::identity(f, 4));
        // S is the convolution inverse of the identity
        let s = convolution_inverse(&LinMap::identity(f, 4), &h.coalgebra(), &h.algebra).unwrap();
        assert_eq!(s, h.antipode);
    }
}

#[test]
fn checkers_agree_on_perturbations() {
    let f = Field::Prime(5);
    let cat = Category::vector_spaces(f);
    let h = sweedler_h4(&cat).unwrap();
    let targets: [(&str, fn(&mut HopfAlgebraObject) -> &mut LinMap); 3] = [
        ("mul", |h| &mut h.algebra.mul),
        ("comul", |h| &mut h.comul),
        ("antipode", |h| &mut h.antipode),
    ];
    let mut disagreements = 0;
    let mut detected = 0;
    for (_, pick) in targets {
        let shape = {
            let mut c = h.clone();
            let m = pick(&mut c);
            (m.rows(), m.cols())
        };
        for r in 0..shape.0 {
            for c in (0..shape.1).step_by(3) {
                let mut p = h.clone();
                let m = pick(&mut p);
                let bumped = m.get(r, c) + &f.one();
                m.set(r, c, bumped);
                let classical = Classical::from(&p).failures().is_empty();
                let library = check_hopf(&cat, &p).unwrap().passed();
                if classical != library {
                    disagreements += 1;
                }
                if !library {
                    detected += 1;
                }
            }
        }
    }
    assert_eq!(disagreements, 0);
    assert!(detected > 0);
}
