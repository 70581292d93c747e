//! The ambient braided category: Yetter-Drinfeld modules over a finite-dimensional
//! Hopf algebra `D`.
//!
//! Conventions (left-left): an object `V` carries an action `D ⊗ V -> V` and a coaction
//! `V -> D ⊗ V`, written `v ↦ v₋₁ ⊗ v₀`, subject to
//!
//! ```text
//! δ(h·v) = h₁ v₋₁ S(h₃) ⊗ h₂·v₀
//! ```
//!
//! The braiding is `C(v ⊗ w) = v₋₁·w ⊗ v₀` with inverse `C⁻¹(w ⊗ v) = v₀ ⊗ S⁻¹(v₋₁)·w`.
//! Tensor products use the diagonal action through `Δ_D` and the codiagonal coaction
//! through `m_D`; flattened indices make the associators identities.

use serde::{Deserialize, Serialize};

use crate::error::{dim_check, Error, Result};
use crate::exactlin::{invert, Chain, Factor, Field, LinMap};
use crate::report::CheckReport;

use Factor::{Id, Map};

/// An ordinary finite-dimensional Hopf algebra with invertible antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseHopf {
    pub dim: usize,
    pub mul: LinMap,
    pub unit: LinMap,
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub antipode_inv: LinMap,
}

impl BaseHopf {
    /// Validates the Hopf axioms and computes `S⁻¹`.
    pub fn new(
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
        antipode: LinMap,
    ) -> Result<BaseHopf> {
        let antipode_inv = invert(&antipode).map_err(|e| match e {
            Error::NotInvertible => Error::AxiomsFailed("base antipode is not invertible".into()),
            e => e,
        })?;
        BaseHopf::with_antipode_inv(mul, unit, comul, counit, antipode, antipode_inv)
    }

    /// As [`BaseHopf::new`] with a supplied `S⁻¹`, which is verified.
    pub fn with_antipode_inv(
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
        antipode: LinMap,
        antipode_inv: LinMap,
    ) -> Result<BaseHopf> {
        let dim = mul.rows();
        dim_check("base mul rows", dim, mul.rows())?;
        dim_check("base mul cols", dim * dim, mul.cols())?;
        dim_check("base unit shape", dim, unit.rows())?;
        dim_check("base unit shape", 1, unit.cols())?;
        dim_check("base comul shape", dim * dim, comul.rows())?;
        dim_check("base comul shape", dim, comul.cols())?;
        dim_check("base counit shape", 1, counit.rows())?;
        dim_check("base counit shape", dim, counit.cols())?;
        for (name, m) in [("antipode", &antipode), ("antipode_inv", &antipode_inv)] {
            dim_check(name, dim, m.rows())?;
            dim_check(name, dim, m.cols())?;
        }
        let base = BaseHopf {
            dim,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        };
        let report = base.check()?;
        if !report.passed() {
            let failed: Vec<&str> = report.failures().map(|i| i.axiom.as_str()).collect();
            return Err(Error::AxiomsFailed(format!(
                "base Hopf algebra: {}",
                failed.join(", ")
            )));
        }
        Ok(base)
    }

    /// `D = k`: every structure map is the 1x1 identity.
    pub fn trivial(field: Field) -> BaseHopf {
        let one = LinMap::identity(field, 1);
        BaseHopf {
            dim: 1,
            mul: one.clone(),
            unit: one.clone(),
            comul: one.clone(),
            counit: one.clone(),
            antipode: one.clone(),
            antipode_inv: one,
        }
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 1
    }

    /// The ordinary (unbraided) Hopf axioms.
    pub fn check(&self) -> Result<CheckReport> {
        let f = self.field();
        let d = self.dim;
        let mut r = CheckReport::new("base Hopf algebra");
        let id = LinMap::identity(f, d);
        let m = &self.mul;

        let lhs = Chain::identity(f, d * d * d)
            .then(&[Map(m), Id(d)])?
            .then_map(m)?
            .finish();
        let rhs = Chain::identity(f, d * d * d)
            .then(&[Id(d), Map(m)])?
            .then_map(m)?
            .finish();
        r.check_eq("base.associativity", &lhs, &rhs, &[d, d, d]);
        let lu = m.compose(&self.unit.kron(&id))?;
        r.check_eq("base.left_unit", &lu, &id, &[d]);
        let ru = m.compose(&id.kron(&self.unit))?;
        r.check_eq("base.right_unit", &ru, &id, &[d]);

        let lhs = Chain::from_map(&self.comul)
            .then(&[Map(&self.comul), Id(d)])?
            .finish();
        let rhs = Chain::from_map(&self.comul)
            .then(&[Id(d), Map(&self.comul)])?
            .finish();
        r.check_eq("base.coassociativity", &lhs, &rhs, &[d]);
        let lc = self.counit.kron(&id).compose(&self.comul)?;
        r.check_eq("base.left_counit", &lc, &id, &[d]);
        let rc = id.kron(&self.counit).compose(&self.comul)?;
        r.check_eq("base.right_counit", &rc, &id, &[d]);

        let sw = LinMap::swap(f, d, d);
        let lhs = self.comul.compose(m)?;
        let rhs = Chain::identity(f, d * d)
            .then(&[Map(&self.comul), Map(&self.comul)])?
            .then(&[Id(d), Map(&sw), Id(d)])?
            .then(&[Map(m), Map(m)])?
            .finish();
        r.check_eq("base.bialgebra", &lhs, &rhs, &[d, d]);
        let lhs = self.counit.compose(m)?;
        let rhs = self.counit.kron(&self.counit);
        r.check_eq("base.counit_multiplicative", &lhs, &rhs, &[d, d]);
        let lhs = self.comul.compose(&self.unit)?;
        r.check_eq("base.comul_unital", &lhs, &self.unit.kron(&self.unit), &[1]);
        let lhs = self.counit.compose(&self.unit)?;
        r.check_eq("base.counit_unital", &lhs, &LinMap::identity(f, 1), &[1]);

        let eta_eps = self.unit.compose(&self.counit)?;
        let left = Chain::from_map(&self.comul)
            .then(&[Map(&self.antipode), Id(d)])?
            .then_map(m)?
            .finish();
        r.check_eq("base.antipode_left", &left, &eta_eps, &[d]);
        let right = Chain::from_map(&self.comul)
            .then(&[Id(d), Map(&self.antipode)])?
            .then_map(m)?
            .finish();
        r.check_eq("base.antipode_right", &right, &eta_eps, &[d]);
        let round = self.antipode_inv.compose(&self.antipode)?;
        r.check_eq("base.antipode_inverse", &round, &id, &[d]);
        Ok(r)
    }
}

/// A Yetter-Drinfeld module over the base Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDObject {
    pub dim: usize,
    /// `D ⊗ V -> V`.
    pub action: LinMap,
    /// `V -> D ⊗ V`.
    pub coaction: LinMap,
}

/// Which braiding the category uses. `Swap` keeps the Yetter-Drinfeld objects but
/// replaces `C` by the flip, to expose checks that depend on the braiding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidingMode {
    #[serde(rename = "yd")]
    YetterDrinfeld,
    Swap,
}

#[derive(Clone, Debug)]
pub struct Category {
    base: BaseHopf,
    mode: BraidingMode,
}

impl Category {
    pub fn new(base: BaseHopf) -> Category {
        Category {
            base,
            mode: BraidingMode::YetterDrinfeld,
        }
    }

    pub fn with_mode(base: BaseHopf, mode: BraidingMode) -> Category {
        Category { base, mode }
    }

    /// The classical category of vector spaces, `D = k`.
    pub fn vector_spaces(field: Field) -> Category {
        Category::new(BaseHopf::trivial(field))
    }

    pub fn base(&self) -> &BaseHopf {
        &self.base
    }

    pub fn mode(&self) -> BraidingMode {
        self.mode
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Wraps action and coaction matrices after a shape check.
    pub fn object(&self, action: LinMap, coaction: LinMap) -> Result<YDObject> {
        let d = self.base.dim;
        let dim = action.rows();
        dim_check("action columns", d * dim, action.cols())?;
        dim_check("coaction rows", d * dim, coaction.rows())?;
        dim_check("coaction columns", dim, coaction.cols())?;
        Ok(YDObject {
            dim,
            action,
            coaction,
        })
    }

    /// `dim`-dimensional object with trivial action and coaction.
    pub fn trivial_object(&self, dim: usize) -> YDObject {
        let id = LinMap::identity(self.field(), dim);
        YDObject {
            dim,
            action: self.base.counit.kron(&id),
            coaction: self.base.unit.kron(&id),
        }
    }

    /// The unit object `I`.
    pub fn unit_object(&self) -> YDObject {
        self.trivial_object(1)
    }

    pub fn tensor(&self, v: &YDObject, w: &YDObject) -> YDObject {
        let f = self.field();
        let d = self.base.dim;
        let sw_dv = LinMap::swap(f, d, v.dim);
        let sw_vd = LinMap::swap(f, v.dim, d);
        let action = Chain::identity(f, d * v.dim * w.dim)
            .then(&[Map(&self.base.comul), Id(v.dim), Id(w.dim)])
            .and_then(|c| c.then(&[Id(d), Map(&sw_dv), Id(w.dim)]))
            .and_then(|c| c.then(&[Map(&v.action), Map(&w.action)]))
            .expect("tensor action shapes")
            .finish();
        let coaction = Chain::identity(f, v.dim * w.dim)
            .then(&[Map(&v.coaction), Map(&w.coaction)])
            .and_then(|c| c.then(&[Id(d), Map(&sw_vd), Id(w.dim)]))
            .and_then(|c| c.then(&[Map(&self.base.mul), Id(v.dim), Id(w.dim)]))
            .expect("tensor coaction shapes")
            .finish();
        YDObject {
            dim: v.dim * w.dim,
            action,
            coaction,
        }
    }

    /// Left-nested tensor product of several objects.
    pub fn tensor_all(&self, objs: &[&YDObject]) -> YDObject {
        let mut acc = objs[0].clone();
        for o in &objs[1..] {
            acc = self.tensor(&acc, o);
        }
        acc
    }

    /// `C_{V,W}: V ⊗ W -> W ⊗ V`.
    pub fn braiding(&self, v: &YDObject, w: &YDObject) -> LinMap {
        let f = self.field();
        if self.mode == BraidingMode::Swap {
            return LinMap::swap(f, v.dim, w.dim);
        }
        let d = self.base.dim;
        let sw = LinMap::swap(f, v.dim, w.dim);
        Chain::identity(f, v.dim * w.dim)
            .then(&[Map(&v.coaction), Id(w.dim)])
            .and_then(|c| c.then(&[Id(d), Map(&sw)]))
            .and_then(|c| c.then(&[Map(&w.action), Id(v.dim)]))
            .expect("braiding shapes")
            .finish()
    }

    /// `C⁻¹_{V,W}: W ⊗ V -> V ⊗ W`, built from `S⁻¹` and checked against `C`.
    pub fn inverse_braiding(&self, v: &YDObject, w: &YDObject) -> Result<LinMap> {
        let f = self.field();
        if self.mode == BraidingMode::Swap {
            return Ok(LinMap::swap(f, w.dim, v.dim));
        }
        let d = self.base.dim;
        let sw_wv = LinMap::swap(f, w.dim, v.dim);
        let sw_dv = LinMap::swap(f, d, v.dim);
        let inv = Chain::identity(f, w.dim * v.dim)
            .then_map(&sw_wv)?
            .then(&[Map(&v.coaction), Id(w.dim)])?
            .then(&[Map(&self.base.antipode_inv), Id(v.dim), Id(w.dim)])?
            .then(&[Map(&sw_dv), Id(w.dim)])?
            .then(&[Id(v.dim), Map(&w.action)])?
            .finish();
        let c = self.braiding(v, w);
        if !inv.compose(&c)?.is_identity() || !c.compose(&inv)?.is_identity() {
            return Err(Error::NotInvertible);
        }
        Ok(inv)
    }

    /// Module, comodule and Yetter-Drinfeld compatibility axioms of `V`.
    pub fn check_object(&self, v: &YDObject) -> Result<CheckReport> {
        let f = self.field();
        let d = self.base.dim;
        let n = v.dim;
        dim_check("action columns", d * n, v.action.cols())?;
        dim_check("action rows", n, v.action.rows())?;
        dim_check("coaction rows", d * n, v.coaction.rows())?;
        dim_check("coaction columns", n, v.coaction.cols())?;
        let b = &self.base;
        let id = LinMap::identity(f, n);
        let mut r = CheckReport::new("Yetter-Drinfeld object");

        let lhs = Chain::identity(f, d * d * n)
            .then(&[Map(&b.mul), Id(n)])?
            .then_map(&v.action)?
            .finish();
        let rhs = Chain::identity(f, d * d * n)
            .then(&[Id(d), Map(&v.action)])?
            .then_map(&v.action)?
            .finish();
        r.check_eq("module.associativity", &lhs, &rhs, &[d, d, n]);
        let lhs = v.action.compose(&b.unit.kron(&id))?;
        r.check_eq("module.unit", &lhs, &id, &[n]);

        let lhs = Chain::from_map(&v.coaction)
            .then(&[Map(&b.comul), Id(n)])?
            .finish();
        let rhs = Chain::from_map(&v.coaction)
            .then(&[Id(d), Map(&v.coaction)])?
            .finish();
        r.check_eq("comodule.coassociativity", &lhs, &rhs, &[n]);
        let lhs = b.counit.kron(&id).compose(&v.coaction)?;
        r.check_eq("comodule.counit", &lhs, &id, &[n]);

        // δ(h·v) against h₁ v₋₁ S(h₃) ⊗ h₂·v₀
        let lhs = v.coaction.compose(&v.action)?;
        let sw_dd = LinMap::swap(f, d, d);
        let m3 = Chain::identity(f, d * d * d)
            .then(&[Map(&b.mul), Id(d)])?
            .then_map(&b.mul)?
            .finish();
        let rhs = Chain::identity(f, d * n)
            .then(&[Map(&b.comul), Id(n)])?
            .then(&[Map(&b.comul), Id(d), Id(n)])?
            .then(&[Id(d), Id(d), Id(d), Map(&v.coaction)])?
            .then(&[Id(d), Id(d), Map(&sw_dd), Id(n)])?
            .then(&[Id(d), Map(&sw_dd), Id(d), Id(n)])?
            .then(&[Id(d), Id(d), Id(d), Map(&b.antipode), Id(n)])?
            .then(&[Id(d), Id(d), Map(&sw_dd), Id(n)])?
            .then(&[Map(&m3), Map(&v.action)])?
            .finish();
        r.check_eq("yd.compatibility", &lhs, &rhs, &[d, n]);
        Ok(r)
    }

    /// D-linearity and D-colinearity of `f: V -> W`.
    pub fn check_morphism(&self, v: &YDObject, w: &YDObject, f: &LinMap) -> Result<CheckReport> {
        dim_check("morphism domain", v.dim, f.cols())?;
        dim_check("morphism codomain", w.dim, f.rows())?;
        let d = self.base.dim;
        let idd = LinMap::identity(self.field(), d);
        let mut r = CheckReport::new("morphism of Yetter-Drinfeld modules");
        let lhs = f.compose(&v.action)?;
        let rhs = w.action.compose(&idd.kron(f))?;
        r.check_eq("morphism.action", &lhs, &rhs, &[d, v.dim]);
        let lhs = w.coaction.compose(f)?;
        let rhs = idd.kron(f).compose(&v.coaction)?;
        r.check_eq("morphism.coaction", &lhs, &rhs, &[v.dim]);
        Ok(r)
    }

    pub fn is_morphism(&self, v: &YDObject, w: &YDObject, f: &LinMap) -> Result<bool> {
        Ok(self.check_morphism(v, w, f)?.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kc2(f: Field) -> BaseHopf {
        // basis {1, g}
        let mul = LinMap::from_ints(f, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let unit = LinMap::from_ints(f, &[&[1], &[0]]);
        let comul = LinMap::from_ints(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
        let counit = LinMap::from_ints(f, &[&[1, 1]]);
        let s = LinMap::identity(f, 2);
        BaseHopf::new(mul, unit, comul, counit, s).unwrap()
    }

    fn odd_line(cat: &Category) -> YDObject {
        let f = cat.field();
        // g·x = -x, δ(x) = g ⊗ x
        cat.object(
            LinMap::from_ints(f, &[&[1, -1]]),
            LinMap::from_ints(f, &[&[0], &[1]]),
        )
        .unwrap()
    }

    #[test]
    fn trivial_base_gives_swap() {
        let cat = Category::vector_spaces(Field::Rational);
        let v = cat.trivial_object(2);
        let w = cat.trivial_object(3);
        assert_eq!(cat.braiding(&v, &w), LinMap::swap(Field::Rational, 2, 3));
        assert!(cat.check_object(&v).unwrap().passed());
    }

    #[test]
    fn odd_line_has_super_sign() {
        let f = Field::Rational;
        let cat = Category::new(kc2(f));
        let x = odd_line(&cat);
        assert!(cat.check_object(&x).unwrap().passed());
        assert_eq!(cat.braiding(&x, &x), LinMap::from_ints(f, &[&[-1]]));
        assert_eq!(
            cat.inverse_braiding(&x, &x).unwrap(),
            LinMap::from_ints(f, &[&[-1]])
        );
    }

    #[test]
    fn grading_breaking_action_fails_compatibility() {
        let f = Field::Rational;
        let cat = Category::new(kc2(f));
        // e0 in degree 1, e1 in degree g; g swaps e0 and e1
        let action = LinMap::from_ints(f, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let coaction = LinMap::from_ints(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
        let v = cat.object(action, coaction).unwrap();
        let r = cat.check_object(&v).unwrap();
        assert!(r.item("module.associativity").unwrap().passed);
        assert!(r.item("comodule.coassociativity").unwrap().passed);
        let yd = r.item("yd.compatibility").unwrap();
        assert!(!yd.passed);
        assert!(yd.counterexample.is_some());
    }

    #[test]
    fn unit_object_is_neutral() {
        let f = Field::Prime(7);
        let cat = Category::new(kc2(f));
        let x = odd_line(&cat);
        let i = cat.unit_object();
        assert_eq!(cat.tensor(&x, &i), x);
        assert_eq!(cat.tensor(&i, &x), x);
        assert!(cat.braiding(&x, &i).is_identity());
    }

    #[test]
    fn base_rejects_broken_antipode() {
        let f = Field::Rational;
        let b = kc2(f);
        let bad = LinMap::from_ints(f, &[&[1, 0], &[0, 2]]);
        let err = BaseHopf::new(b.mul, b.unit, b.comul, b.counit, bad).unwrap_err();
        assert!(matches!(err, Error::AxiomsFailed(_)));
    }
}
