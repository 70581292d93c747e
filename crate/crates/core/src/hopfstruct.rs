//! Algebras, coalgebras, Hopf algebras and comodule algebras inside a [`Category`],
//! and the convolution product on `Hom(C, A)`.

use crate::error::{dim_check, Error, Result};
use crate::exactlin::{solve, Chain, Factor, LinMap};
use crate::report::CheckReport;
use crate::ydcat::{Category, YDObject};

use Factor::{Id, Map};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInC {
    pub object: YDObject,
    /// `A ⊗ A -> A`.
    pub mul: LinMap,
    /// `I -> A`.
    pub unit: LinMap,
}

impl AlgebraInC {
    pub fn dim(&self) -> usize {
        self.object.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraInC {
    pub object: YDObject,
    /// `C -> C ⊗ C`.
    pub comul: LinMap,
    /// `C -> I`.
    pub counit: LinMap,
}

impl CoalgebraInC {
    pub fn dim(&self) -> usize {
        self.object.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraObject {
    pub algebra: AlgebraInC,
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
}

impl HopfAlgebraObject {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn object(&self) -> &YDObject {
        &self.algebra.object
    }

    pub fn mul(&self) -> &LinMap {
        &self.algebra.mul
    }

    pub fn unit(&self) -> &LinMap {
        &self.algebra.unit
    }

    pub fn coalgebra(&self) -> CoalgebraInC {
        CoalgebraInC {
            object: self.algebra.object.clone(),
            comul: self.comul.clone(),
            counit: self.counit.clone(),
        }
    }
}

/// A right `H`-comodule algebra `(A, ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub algebra: AlgebraInC,
    pub hopf: HopfAlgebraObject,
    /// `ψ: A -> A ⊗ H`.
    pub coact: LinMap,
}

impl ComoduleAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Records whether `f: V -> W` is a morphism of the category.
fn check_morphism_item(
    r: &mut CheckReport,
    cat: &Category,
    key: &str,
    v: &YDObject,
    w: &YDObject,
    f: &LinMap,
) -> Result<bool> {
    let sub = cat.check_morphism(v, w, f)?;
    Ok(r.check_sub(key, &sub))
}

pub fn check_algebra(cat: &Category, a: &AlgebraInC) -> Result<CheckReport> {
    let f = cat.field();
    let n = a.dim();
    dim_check("algebra mul shape", n, a.mul.rows())?;
    dim_check("algebra mul shape", n * n, a.mul.cols())?;
    dim_check("algebra unit shape", n, a.unit.rows())?;
    dim_check("algebra unit shape", 1, a.unit.cols())?;
    let mut r = CheckReport::new("algebra");
    let m = &a.mul;
    let lhs = Chain::identity(f, n * n * n)
        .then(&[Map(m), Id(n)])?
        .then_map(m)?
        .finish();
    let rhs = Chain::identity(f, n * n * n)
        .then(&[Id(n), Map(m)])?
        .then_map(m)?
        .finish();
    r.check_eq("algebra.associativity", &lhs, &rhs, &[n, n, n]);
    let id = LinMap::identity(f, n);
    let lu = m.compose(&a.unit.kron(&id))?;
    r.check_eq("algebra.left_unit", &lu, &id, &[n]);
    let ru = m.compose(&id.kron(&a.unit))?;
    r.check_eq("algebra.right_unit", &ru, &id, &[n]);
    let aa = cat.tensor(&a.object, &a.object);
    check_morphism_item(&mut r, cat, "algebra.mul_is_morphism", &aa, &a.object, m)?;
    let i = cat.unit_object();
    check_morphism_item(
        &mut r,
        cat,
        "algebra.unit_is_morphism",
        &i,
        &a.object,
        &a.unit,
    )?;
    Ok(r)
}

pub fn check_coalgebra(cat: &Category, c: &CoalgebraInC) -> Result<CheckReport> {
    let f = cat.field();
    let n = c.dim();
    dim_check("coalgebra comul shape", n * n, c.comul.rows())?;
    dim_check("coalgebra comul shape", n, c.comul.cols())?;
    dim_check("coalgebra counit shape", 1, c.counit.rows())?;
    dim_check("coalgebra counit shape", n, c.counit.cols())?;
    let mut r = CheckReport::new("coalgebra");
    let lhs = Chain::from_map(&c.comul)
        .then(&[Map(&c.comul), Id(n)])?
        .finish();
    let rhs = Chain::from_map(&c.comul)
        .then(&[Id(n), Map(&c.comul)])?
        .finish();
    r.check_eq("coalgebra.coassociativity", &lhs, &rhs, &[n]);
    let id = LinMap::identity(f, n);
    let lc = c.counit.kron(&id).compose(&c.comul)?;
    r.check_eq("coalgebra.left_counit", &lc, &id, &[n]);
    let rc = id.kron(&c.counit).compose(&c.comul)?;
    r.check_eq("coalgebra.right_counit", &rc, &id, &[n]);
    let cc = cat.tensor(&c.object, &c.object);
    check_morphism_item(
        &mut r,
        cat,
        "coalgebra.comul_is_morphism",
        &c.object,
        &cc,
        &c.comul,
    )?;
    let i = cat.unit_object();
    check_morphism_item(
        &mut r,
        cat,
        "coalgebra.counit_is_morphism",
        &c.object,
        &i,
        &c.counit,
    )?;
    Ok(r)
}

/// All braided Hopf algebra axioms. Only `bialgebra.braided_law` involves the braiding.
pub fn check_hopf(cat: &Category, h: &HopfAlgebraObject) -> Result<CheckReport> {
    let f = cat.field();
    let n = h.dim();
    let mut r = CheckReport::new("braided Hopf algebra");
    r.extend("", check_algebra(cat, &h.algebra)?);
    r.extend("", check_coalgebra(cat, &h.coalgebra())?);
    dim_check("antipode shape", n, h.antipode.rows())?;
    dim_check("antipode shape", n, h.antipode.cols())?;

    let m = h.mul();
    let c = cat.braiding(h.object(), h.object());
    let lhs = h.comul.compose(m)?;
    let rhs = Chain::identity(f, n * n)
        .then(&[Map(&h.comul), Map(&h.comul)])?
        .then(&[Id(n), Map(&c), Id(n)])?
        .then(&[Map(m), Map(m)])?
        .finish();
    r.check_eq("bialgebra.braided_law", &lhs, &rhs, &[n, n]);
    let lhs = h.counit.compose(m)?;
    r.check_eq(
        "bialgebra.counit_multiplicative",
        &lhs,
        &h.counit.kron(&h.counit),
        &[n, n],
    );
    let lhs = h.comul.compose(h.unit())?;
    r.check_eq(
        "bialgebra.comul_unital",
        &lhs,
        &h.unit().kron(h.unit()),
        &[1],
    );
    let lhs = h.counit.compose(h.unit())?;
    r.check_eq(
        "bialgebra.counit_unital",
        &lhs,
        &LinMap::identity(f, 1),
        &[1],
    );

    let eta_eps = h.unit().compose(&h.counit)?;
    let left = Chain::from_map(&h.comul)
        .then(&[Map(&h.antipode), Id(n)])?
        .then_map(m)?
        .finish();
    r.check_eq("antipode.left", &left, &eta_eps, &[n]);
    let right = Chain::from_map(&h.comul)
        .then(&[Id(n), Map(&h.antipode)])?
        .then_map(m)?
        .finish();
    r.check_eq("antipode.right", &right, &eta_eps, &[n]);
    check_morphism_item(
        &mut r,
        cat,
        "antipode.is_morphism",
        h.object(),
        h.object(),
        &h.antipode,
    )?;
    Ok(r)
}

/// Comodule axioms for `ψ` plus the braided algebra-map condition
/// `ψ m_A = (m_A ⊗ m_H)(A ⊗ C_{H,A} ⊗ H)(ψ ⊗ ψ)` and `ψ η_A = η_A ⊗ η_H`.
pub fn check_comodule_algebra(cat: &Category, a: &ComoduleAlgebra) -> Result<CheckReport> {
    let f = cat.field();
    let n = a.dim();
    let h = &a.hopf;
    let k = h.dim();
    dim_check("coaction shape", n * k, a.coact.rows())?;
    dim_check("coaction shape", n, a.coact.cols())?;
    let psi = &a.coact;
    let mut r = CheckReport::new("comodule algebra");
    let lhs = Chain::from_map(psi).then(&[Map(psi), Id(k)])?.finish();
    let rhs = Chain::from_map(psi).then(&[Id(n), Map(&h.comul)])?.finish();
    r.check_eq("comodule.coassociativity", &lhs, &rhs, &[n]);
    let id = LinMap::identity(f, n);
    let lhs = id.kron(&h.counit).compose(psi)?;
    r.check_eq("comodule.counit", &lhs, &id, &[n]);

    let c = cat.braiding(h.object(), &a.algebra.object);
    let lhs = psi.compose(&a.algebra.mul)?;
    let rhs = Chain::identity(f, n * n)
        .then(&[Map(psi), Map(psi)])?
        .then(&[Id(n), Map(&c), Id(k)])?
        .then(&[Map(&a.algebra.mul), Map(h.mul())])?
        .finish();
    r.check_eq("comodule.multiplicative", &lhs, &rhs, &[n, n]);
    let lhs = psi.compose(&a.algebra.unit)?;
    r.check_eq(
        "comodule.unital",
        &lhs,
        &a.algebra.unit.kron(h.unit()),
        &[1],
    );
    let ah = cat.tensor(&a.algebra.object, h.object());
    check_morphism_item(
        &mut r,
        cat,
        "comodule.coaction_is_morphism",
        &a.algebra.object,
        &ah,
        psi,
    )?;
    Ok(r)
}

/// `C ⊗ D` with `Δ = (C ⊗ C_{C,D} ⊗ D)(Δ_C ⊗ Δ_D)` and counit `ε_C ⊗ ε_D`.
pub fn tensor_coalgebra(
    cat: &Category,
    c: &CoalgebraInC,
    d: &CoalgebraInC,
) -> Result<CoalgebraInC> {
    let f = cat.field();
    let (nc, nd) = (c.dim(), d.dim());
    let braid = cat.braiding(&c.object, &d.object);
    let comul = Chain::identity(f, nc * nd)
        .then(&[Map(&c.comul), Map(&d.comul)])?
        .then(&[Id(nc), Map(&braid), Id(nd)])?
        .finish();
    Ok(CoalgebraInC {
        object: cat.tensor(&c.object, &d.object),
        comul,
        counit: c.counit.kron(&d.counit),
    })
}

/// `A ⊗ B` with `m = (m_A ⊗ m_B)(A ⊗ C_{B,A} ⊗ B)` and unit `η_A ⊗ η_B`.
pub fn tensor_algebra(cat: &Category, a: &AlgebraInC, b: &AlgebraInC) -> Result<AlgebraInC> {
    let f = cat.field();
    let (na, nb) = (a.dim(), b.dim());
    let braid = cat.braiding(&b.object, &a.object);
    let mul = Chain::identity(f, na * nb * na * nb)
        .then(&[Id(na), Map(&braid), Id(nb)])?
        .then(&[Map(&a.mul), Map(&b.mul)])?
        .finish();
    Ok(AlgebraInC {
        object: cat.tensor(&a.object, &b.object),
        mul,
        unit: a.unit.kron(&b.unit),
    })
}

/// `η_A ε_C`, the unit of the convolution algebra.
pub fn convolution_unit(c: &CoalgebraInC, a: &AlgebraInC) -> Result<LinMap> {
    a.unit.compose(&c.counit)
}

/// `f * g = m_A (f ⊗ g) Δ_C`.
pub fn convolution(f: &LinMap, g: &LinMap, c: &CoalgebraInC, a: &AlgebraInC) -> Result<LinMap> {
    for (name, x) in [
        ("convolution left factor", f),
        ("convolution right factor", g),
    ] {
        dim_check(name, c.dim(), x.cols())?;
        dim_check(name, a.dim(), x.rows())?;
    }
    Ok(Chain::from_map(&c.comul)
        .then(&[Map(f), Map(g)])?
        .then_map(&a.mul)?
        .finish())
}

/// The two-sided convolution inverse of `f: C -> A`.
///
/// Both `f * g = ηε` and `g * f = ηε` are linear in the entries of `g`; they are stacked
/// into one system, solved exactly, and the solution is re-verified.
pub fn convolution_inverse(f: &LinMap, c: &CoalgebraInC, a: &AlgebraInC) -> Result<LinMap> {
    let nc = c.dim();
    let na = a.dim();
    dim_check("convolution inverse domain", nc, f.cols())?;
    dim_check("convolution inverse codomain", na, f.rows())?;
    let field = f.field();
    // left(r, (x1, t)) = m(f(x1) ⊗ e_t)_r, right(r, (t, x2)) = m(e_t ⊗ f(x2))_r
    let left = Chain::identity(field, nc * na)
        .then(&[Map(f), Id(na)])?
        .then_map(&a.mul)?
        .finish();
    let right = Chain::identity(field, na * nc)
        .then(&[Id(na), Map(f)])?
        .then_map(&a.mul)?
        .finish();
    let unknowns = na * nc;
    let mut system = LinMap::zero(field, 2 * unknowns, unknowns);
    for x in 0..nc {
        for (idx, dv) in c.comul.column_sparse(x) {
            let (x1, x2) = (idx / nc, idx % nc);
            for r in 0..na {
                for t in 0..na {
                    let lv = left.get(r, x1 * na + t);
                    if !lv.is_zero() {
                        let (e, u) = (r * nc + x, t * nc + x2);
                        let cur = system.get(e, u) + &(&dv * lv);
                        system.set(e, u, cur);
                    }
                    let rv = right.get(r, t * nc + x2);
                    if !rv.is_zero() {
                        let (e, u) = (unknowns + r * nc + x, t * nc + x1);
                        let cur = system.get(e, u) + &(&dv * rv);
                        system.set(e, u, cur);
                    }
                }
            }
        }
    }
    let target = convolution_unit(c, a)?;
    let mut rhs = LinMap::zero(field, 2 * unknowns, 1);
    for r in 0..na {
        for x in 0..nc {
            rhs.set(r * nc + x, 0, target.get(r, x).clone());
            rhs.set(unknowns + r * nc + x, 0, target.get(r, x).clone());
        }
    }
    let sol = solve(&system, &rhs)?
        .ok_or_else(|| Error::NotConvInvertible("no two-sided convolution inverse".into()))?;
    let g = LinMap::from_fn(field, na, nc, |t, x| sol.get(t * nc + x, 0).clone());
    if convolution(f, &g, c, a)? != target || convolution(&g, f, c, a)? != target {
        return Err(Error::NotConvInvertible(
            "solution failed the two-sided check".into(),
        ));
    }
    Ok(g)
}
