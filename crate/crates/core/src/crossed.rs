//! Crossed products `B #_σ H`: weak actions, 2-cocycles, twisted modules, the product
//! builder and the relation batteries around it.
//!
//! Every identity is assembled wire by wire from the braided string diagram. `C` without
//! subscript is the braiding between whichever objects meet at that crossing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{dim_check, Error, Result};
use crate::exactlin::{Chain, Factor, LinMap};
use crate::hopfstruct::{
    check_algebra, convolution, convolution_inverse, tensor_coalgebra, AlgebraInC, CoalgebraInC,
    ComoduleAlgebra, HopfAlgebraObject,
};
use crate::report::CheckReport;
use crate::ydcat::Category;

use Factor::{Id, Map};

/// `B #_σ H` together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    pub b: AlgebraInC,
    pub h: HopfAlgebraObject,
    /// `α: H ⊗ B -> B`.
    pub alpha: LinMap,
    /// `σ: H ⊗ H -> B`.
    pub sigma: LinMap,
    /// Convolution inverse of `σ` over the coalgebra `H ⊗ H`.
    pub sigma_inv: LinMap,
    /// The product algebra on the object `B ⊗ H`.
    pub product: AlgebraInC,
    /// `ψ = B ⊗ Δ_H`.
    pub psi: LinMap,
}

impl CrossedSystem {
    pub fn comodule_algebra(&self) -> ComoduleAlgebra {
        ComoduleAlgebra {
            algebra: self.product.clone(),
            hopf: self.h.clone(),
            coact: self.psi.clone(),
        }
    }
}

/// Shapes and shorthands shared by the identity builders.
struct Wires<'a> {
    cat: &'a Category,
    b: &'a AlgebraInC,
    h: &'a HopfAlgebraObject,
    nb: usize,
    nh: usize,
    c_hb: LinMap,
    c_hh: LinMap,
}

impl<'a> Wires<'a> {
    fn new(cat: &'a Category, b: &'a AlgebraInC, h: &'a HopfAlgebraObject) -> Wires<'a> {
        Wires {
            cat,
            b,
            h,
            nb: b.dim(),
            nh: h.dim(),
            c_hb: cat.braiding(h.object(), &b.object),
            c_hh: cat.braiding(h.object(), h.object()),
        }
    }

    fn start(&self, dim: usize) -> Chain {
        Chain::identity(self.cat.field(), dim)
    }

    fn check_alpha(&self, alpha: &LinMap) -> Result<()> {
        dim_check("alpha rows", self.nb, alpha.rows())?;
        dim_check("alpha cols", self.nh * self.nb, alpha.cols())
    }

    fn check_sigma(&self, sigma: &LinMap) -> Result<()> {
        dim_check("sigma rows", self.nb, sigma.rows())?;
        dim_check("sigma cols", self.nh * self.nh, sigma.cols())
    }

    fn eta_b_eps(&self) -> Result<LinMap> {
        self.b.unit.compose(&self.h.counit)
    }

    fn hh_coalgebra(&self) -> Result<CoalgebraInC> {
        let c = self.h.coalgebra();
        tensor_coalgebra(self.cat, &c, &c)
    }

    /// `(m_B ⊗ H)(m_B ⊗ σ ⊗ m_H)(B ⊗ B ⊗ H ⊗ C ⊗ H)(B ⊗ α ⊗ Δ ⊗ Δ)(B ⊗ H ⊗ C ⊗ H)(B ⊗ Δ ⊗ B ⊗ H)`.
    fn product_mul(&self, alpha: &LinMap, sigma: &LinMap) -> Result<LinMap> {
        let (b, k) = (self.nb, self.nh);
        let (d, mb, mh) = (&self.h.comul, &self.b.mul, self.h.mul());
        Ok(self
            .start(b * k * b * k)
            .then(&[Id(b), Map(d), Id(b), Id(k)])?
            .then(&[Id(b), Id(k), Map(&self.c_hb), Id(k)])?
            .then(&[Id(b), Map(alpha), Map(d), Map(d)])?
            .then(&[Id(b), Id(b), Id(k), Map(&self.c_hh), Id(k)])?
            .then(&[Map(mb), Map(sigma), Map(mh)])?
            .then(&[Map(mb), Id(k)])?
            .finish())
    }

    /// `φ = (α ⊗ H)(H ⊗ C_{H,B})(Δ ⊗ B): H ⊗ B -> B ⊗ H`.
    fn phi(&self, alpha: &LinMap) -> Result<LinMap> {
        let (b, k) = (self.nb, self.nh);
        Ok(self
            .start(k * b)
            .then(&[Map(&self.h.comul), Id(b)])?
            .then(&[Id(k), Map(&self.c_hb)])?
            .then(&[Map(alpha), Id(k)])?
            .finish())
    }

    /// `σ̂ = (σ ⊗ m_H)(H ⊗ C ⊗ H)(Δ ⊗ Δ): H ⊗ H -> B ⊗ H`.
    fn sigma_hat(&self, sigma: &LinMap) -> Result<LinMap> {
        let k = self.nh;
        Ok(self
            .start(k * k)
            .then(&[Map(&self.h.comul), Map(&self.h.comul)])?
            .then(&[Id(k), Map(&self.c_hh), Id(k)])?
            .then(&[Map(sigma), Map(self.h.mul())])?
            .finish())
    }
}

/// The raw product multiplication, with no validation of α or σ.
pub fn product_multiplication(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<LinMap> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    w.product_mul(alpha, sigma)
}

/// `B ⊗ H` with the crossed-product multiplication and unit `η_B ⊗ η_H`.
pub fn assemble_product(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<AlgebraInC> {
    Ok(AlgebraInC {
        object: cat.tensor(&b.object, h.object()),
        mul: product_multiplication(cat, b, h, alpha, sigma)?,
        unit: b.unit.kron(h.unit()),
    })
}

/// Assembles `B #_σ H`. α and σ must be morphisms of the category and σ must be
/// convolution invertible; the crossed-product axioms are not checked here.
pub fn build_crossed_product(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<CrossedSystem> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    let hb = cat.tensor(h.object(), &b.object);
    if !cat.is_morphism(&hb, &b.object, alpha)? {
        return Err(Error::NotMorphism("alpha".into()));
    }
    let hh = cat.tensor(h.object(), h.object());
    if !cat.is_morphism(&hh, &b.object, sigma)? {
        return Err(Error::NotMorphism("sigma".into()));
    }
    let sigma_inv = convolution_inverse(sigma, &w.hh_coalgebra()?, b)?;
    let product = assemble_product(cat, b, h, alpha, sigma)?;
    let psi = LinMap::identity(cat.field(), b.dim()).kron(&h.comul);
    Ok(CrossedSystem {
        b: b.clone(),
        h: h.clone(),
        alpha: alpha.clone(),
        sigma: sigma.clone(),
        sigma_inv,
        product,
        psi,
    })
}

fn weak_action_report(w: &Wires, alpha: &LinMap) -> Result<CheckReport> {
    let (b, k) = (w.nb, w.nh);
    let mut r = CheckReport::new("weak action");
    let lhs = w
        .start(k * b * b)
        .then(&[Id(k), Map(&w.b.mul)])?
        .then_map(alpha)?
        .finish();
    let rhs = w
        .start(k * b * b)
        .then(&[Map(&w.h.comul), Id(b), Id(b)])?
        .then(&[Id(k), Map(&w.c_hb), Id(b)])?
        .then(&[Map(alpha), Map(alpha)])?
        .then_map(&w.b.mul)?
        .finish();
    r.check_eq("wa.multiplicative", &lhs, &rhs, &[k, b, b]);
    let id_h = LinMap::identity(w.cat.field(), k);
    let lhs = alpha.compose(&id_h.kron(&w.b.unit))?;
    r.check_eq("wa.unit", &lhs, &w.eta_b_eps()?, &[k]);
    Ok(r)
}

fn cocycle_report(w: &Wires, alpha: &LinMap, sigma: &LinMap) -> Result<CheckReport> {
    let (b, k) = (w.nb, w.nh);
    let (d, mh) = (&w.h.comul, w.h.mul());
    let mut r = CheckReport::new("2-cocycle");
    let lhs = w
        .start(k * k * k)
        .then(&[Map(d), Map(d), Map(d)])?
        .then(&[Id(k), Id(k), Id(k), Map(&w.c_hh), Id(k)])?
        .then(&[Id(k), Id(k), Map(sigma), Map(mh)])?
        .then(&[Id(k), Map(&w.c_hb), Id(k)])?
        .then(&[Map(alpha), Map(sigma)])?
        .then_map(&w.b.mul)?
        .finish();
    let rhs = w
        .start(k * k * k)
        .then(&[Map(d), Map(d), Id(k)])?
        .then(&[Id(k), Map(&w.c_hh), Id(k), Id(k)])?
        .then(&[Map(sigma), Map(mh), Id(k)])?
        .then(&[Id(b), Map(sigma)])?
        .then_map(&w.b.mul)?
        .finish();
    r.check_eq("cocycle.identity", &lhs, &rhs, &[k, k, k]);
    let id_h = LinMap::identity(w.cat.field(), k);
    let ee = w.eta_b_eps()?;
    let left = sigma.compose(&w.h.unit().kron(&id_h))?;
    r.check_eq("cocycle.left_normal", &left, &ee, &[k]);
    let right = sigma.compose(&id_h.kron(w.h.unit()))?;
    r.check_eq("cocycle.right_normal", &right, &ee, &[k]);
    Ok(r)
}

fn twisted_module_report(w: &Wires, alpha: &LinMap, sigma: &LinMap) -> Result<CheckReport> {
    let (b, k) = (w.nb, w.nh);
    let d = &w.h.comul;
    let mut r = CheckReport::new("twisted module");
    let lhs = w
        .start(k * k * b)
        .then(&[Map(d), Map(d), Id(b)])?
        .then(&[Id(k), Id(k), Id(k), Map(&w.c_hb)])?
        .then(&[Id(k), Id(k), Map(alpha), Id(k)])?
        .then(&[Id(k), Map(&w.c_hb), Id(k)])?
        .then(&[Map(alpha), Map(sigma)])?
        .then_map(&w.b.mul)?
        .finish();
    let rhs = w
        .start(k * k * b)
        .then(&[Map(d), Map(d), Id(b)])?
        .then(&[Id(k), Map(&w.c_hh), Id(k), Id(b)])?
        .then(&[Map(sigma), Map(w.h.mul()), Id(b)])?
        .then(&[Id(b), Map(alpha)])?
        .then_map(&w.b.mul)?
        .finish();
    r.check_eq("tm.identity", &lhs, &rhs, &[k, k, b]);
    let id_b = LinMap::identity(w.cat.field(), b);
    let lhs = alpha.compose(&w.h.unit().kron(&id_b))?;
    r.check_eq("tm.unit", &lhs, &id_b, &[b]);
    Ok(r)
}

/// (WA). Fails with `NotMorphism` when α is not a morphism of the category.
pub fn check_weak_action(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
) -> Result<CheckReport> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    let hb = cat.tensor(h.object(), &b.object);
    if !cat.is_morphism(&hb, &b.object, alpha)? {
        return Err(Error::NotMorphism("alpha".into()));
    }
    weak_action_report(&w, alpha)
}

/// (2-COC): the braided cocycle identity and normalization of σ.
pub fn check_2cocycle(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<CheckReport> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    cocycle_report(&w, alpha, sigma)
}

/// (TM): the twisted module identity and `α(η_H ⊗ B) = id_B`.
pub fn check_twisted_module(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<CheckReport> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    twisted_module_report(&w, alpha, sigma)
}

/// Both sides of the equivalence "the product is a unital associative algebra iff
/// (WA), (2-COC) and (TM) hold".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub product: CheckReport,
    pub weak_action: CheckReport,
    pub cocycle: CheckReport,
    pub twisted_module: CheckReport,
    /// Associativity and both unit laws of the product.
    pub lhs: bool,
    /// (WA) ∧ (2-COC) ∧ (TM).
    pub rhs: bool,
}

impl EquivalenceReport {
    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_product_equivalence(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<EquivalenceReport> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    let product = check_algebra(cat, &assemble_product(cat, b, h, alpha, sigma)?)?;
    let lhs = [
        "algebra.associativity",
        "algebra.left_unit",
        "algebra.right_unit",
    ]
    .iter()
    .all(|k| product.item(k).is_some_and(|i| i.passed));
    let weak_action = weak_action_report(&w, alpha)?;
    let cocycle = cocycle_report(&w, alpha, sigma)?;
    let twisted_module = twisted_module_report(&w, alpha, sigma)?;
    let rhs = weak_action.passed() && cocycle.passed() && twisted_module.passed();
    Ok(EquivalenceReport {
        product,
        weak_action,
        cocycle,
        twisted_module,
        lhs,
        rhs,
    })
}

/// `σ̂ = (σ ⊗ m_H)(H ⊗ C ⊗ H)(Δ_H ⊗ Δ_H)`.
pub fn sigma_hat(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    sigma: &LinMap,
) -> Result<LinMap> {
    let w = Wires::new(cat, b, h);
    w.check_sigma(sigma)?;
    w.sigma_hat(sigma)
}

/// `φ = (α ⊗ H)(H ⊗ C)(Δ ⊗ B)`.
pub fn phi_map(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
) -> Result<LinMap> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.phi(alpha)
}

/// Normalization of `φ` and `σ̂` on units, plus the compatibility of `φ` with `m_B`, the
/// cocycle identity for `σ̂`, and the twisting of `φ` by `σ̂`; together these say the
/// product is the cross product of `B` and `H` determined by `φ` and `σ̂`.
pub fn check_cross_product_relations(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
) -> Result<CheckReport> {
    let w = Wires::new(cat, b, h);
    w.check_alpha(alpha)?;
    w.check_sigma(sigma)?;
    let field = cat.field();
    let (nb, k) = (w.nb, w.nh);
    let (d, mb, mh) = (&h.comul, &b.mul, h.mul());
    let phi = w.phi(alpha)?;
    let shat = w.sigma_hat(sigma)?;
    let id_b = LinMap::identity(field, nb);
    let id_h = LinMap::identity(field, k);
    let eta_b_h = b.unit.kron(&id_h);
    let mut r = CheckReport::new("cross product relations");

    let lhs = phi.compose(&h.unit().kron(&id_b))?;
    r.check_eq(
        "normalization.phi_unit_h",
        &lhs,
        &id_b.kron(h.unit()),
        &[nb],
    );
    let lhs = shat.compose(&h.unit().kron(&id_h))?;
    r.check_eq("normalization.sigma_hat_left_unit", &lhs, &eta_b_h, &[k]);
    let lhs = phi.compose(&id_h.kron(&b.unit))?;
    r.check_eq("normalization.phi_unit_b", &lhs, &eta_b_h, &[k]);
    let lhs = shat.compose(&id_h.kron(h.unit()))?;
    r.check_eq("normalization.sigma_hat_right_unit", &lhs, &eta_b_h, &[k]);

    let lhs = w
        .start(k * nb * nb)
        .then(&[Map(d), Map(mb)])?
        .then(&[Id(k), Map(&w.c_hb)])?
        .then(&[Map(alpha), Id(k)])?
        .finish();
    let rhs = w
        .start(k * nb * nb)
        .then(&[Map(d), Id(nb), Id(nb)])?
        .then(&[Id(k), Map(&w.c_hb), Id(nb)])?
        .then(&[Map(alpha), Map(d), Id(nb)])?
        .then(&[Id(nb), Id(k), Map(&w.c_hb)])?
        .then(&[Id(nb), Map(alpha), Id(k)])?
        .then(&[Map(mb), Id(k)])?
        .finish();
    r.check_eq("phi_over_m_b", &lhs, &rhs, &[k, nb, nb]);

    let lhs = w
        .start(k * k * k)
        .then(&[Id(k), Map(d), Map(d)])?
        .then(&[Id(k), Id(k), Map(&w.c_hh), Id(k)])?
        .then(&[Map(d), Map(sigma), Map(mh)])?
        .then(&[Id(k), Map(&w.c_hb), Id(k)])?
        .then(&[Map(alpha), Map(d), Map(d)])?
        .then(&[Id(nb), Id(k), Map(&w.c_hh), Id(k)])?
        .then(&[Id(nb), Map(sigma), Map(mh)])?
        .then(&[Map(mb), Id(k)])?
        .finish();
    let rhs = w
        .start(k * k * k)
        .then(&[Map(d), Map(d), Id(k)])?
        .then(&[Id(k), Map(&w.c_hh), Id(k), Id(k)])?
        .then(&[Map(sigma), Map(mh), Id(k)])?
        .then(&[Id(nb), Map(d), Map(d)])?
        .then(&[Id(nb), Id(k), Map(&w.c_hh), Id(k)])?
        .then(&[Id(nb), Map(sigma), Map(mh)])?
        .then(&[Map(mb), Id(k)])?
        .finish();
    r.check_eq("sigma_hat_cocycle", &lhs, &rhs, &[k, k, k]);

    let lhs = w
        .start(k * k * nb)
        .then(&[Id(k), Map(d), Id(nb)])?
        .then(&[Id(k), Id(k), Map(&w.c_hb)])?
        .then(&[Map(d), Map(alpha), Id(k)])?
        .then(&[Id(k), Map(&w.c_hb), Id(k)])?
        .then(&[Map(alpha), Map(d), Map(d)])?
        .then(&[Id(nb), Id(k), Map(&w.c_hh), Id(k)])?
        .then(&[Id(nb), Map(sigma), Map(mh)])?
        .then(&[Map(mb), Id(k)])?
        .finish();
    let rhs = w
        .start(k * k * nb)
        .then(&[Map(d), Map(d), Id(nb)])?
        .then(&[Id(k), Map(&w.c_hh), Id(k), Id(nb)])?
        .then(&[Map(sigma), Map(mh), Id(nb)])?
        .then(&[Id(nb), Map(d), Id(nb)])?
        .then(&[Id(nb), Id(k), Map(&w.c_hb)])?
        .then(&[Id(nb), Map(alpha), Id(k)])?
        .then(&[Map(mb), Id(k)])?
        .finish();
    r.check_eq("phi_sigma_hat_twist", &lhs, &rhs, &[k, k, nb]);
    Ok(r)
}

/// The relations between the action and the cocycle used for `can ∘ Θ = id`:
///
/// ```text
/// α(H ⊗ σ)  = (σ ⊗ ε) * σ(m ⊗ H) * σ̄(H ⊗ m)
/// α(H ⊗ σ̄)  = σ(H ⊗ m) * σ̄(m ⊗ H) * (σ̄ ⊗ ε)
/// ```
///
/// with convolution over the braided tensor coalgebra `H ⊗ H ⊗ H`.
pub fn check_action_cocycle_relations(sys: &CrossedSystem, cat: &Category) -> Result<CheckReport> {
    let w = Wires::new(cat, &sys.b, &sys.h);
    let field = cat.field();
    let k = w.nh;
    let hc = sys.h.coalgebra();
    let h3 = tensor_coalgebra(cat, &hc, &tensor_coalgebra(cat, &hc, &hc)?)?;
    let id_h = LinMap::identity(field, k);
    let m_left = sys.h.mul().kron(&id_h);
    let m_right = id_h.kron(sys.h.mul());
    let (sigma, sbar) = (&sys.sigma, &sys.sigma_inv);
    let conv3 = |x: &LinMap, y: &LinMap, z: &LinMap| -> Result<LinMap> {
        let xy = convolution(x, y, &h3, &sys.b)?;
        convolution(&xy, z, &h3, &sys.b)
    };
    let mut r = CheckReport::new("action and cocycle relations");

    let lhs = sys.alpha.compose(&id_h.kron(sigma))?;
    let rhs = conv3(
        &sigma.kron(&sys.h.counit),
        &sigma.compose(&m_left)?,
        &sbar.compose(&m_right)?,
    )?;
    r.check_eq("action_on_sigma", &lhs, &rhs, &[k, k, k]);

    let lhs = sys.alpha.compose(&id_h.kron(sbar))?;
    let rhs = conv3(
        &sigma.compose(&m_right)?,
        &sbar.compose(&m_left)?,
        &sbar.kron(&sys.h.counit),
    )?;
    r.check_eq("action_on_sigma_inverse", &lhs, &rhs, &[k, k, k]);
    Ok(r)
}

/// Which structure map a perturbation touched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PerturbTarget {
    Alpha,
    Sigma,
}

/// One single-entry perturbation and both sides of the equivalence on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzCase {
    pub target: PerturbTarget,
    pub row: usize,
    pub col: usize,
    pub delta: String,
    pub lhs: bool,
    pub rhs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub cases: Vec<FuzzCase>,
}

impl FuzzSummary {
    pub fn holding(&self) -> usize {
        self.cases.iter().filter(|c| c.lhs && c.rhs).count()
    }

    pub fn failing(&self) -> usize {
        self.cases.iter().filter(|c| !c.lhs && !c.rhs).count()
    }

    pub fn disagreements(&self) -> usize {
        self.cases.iter().filter(|c| c.lhs != c.rhs).count()
    }
}

/// Applies seeded single structure-constant bumps to α or σ and evaluates both sides of
/// the product-associativity equivalence on each. Perturbations that keep the axioms are
/// kept; sampling stops once `min_cases` cases with at least `min_each` on each side have
/// been seen, or after `max_cases`.
pub fn fuzz_product_equivalence(
    cat: &Category,
    b: &AlgebraInC,
    h: &HopfAlgebraObject,
    alpha: &LinMap,
    sigma: &LinMap,
    seed: u64,
    min_cases: usize,
    min_each: usize,
    max_cases: usize,
) -> Result<FuzzSummary> {
    let field = cat.field();
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::BadCharacteristic(
            "perturbation fuzzing needs a prime field".into(),
            p,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = FuzzSummary {
        seed,
        cases: Vec::new(),
    };
    while summary.cases.len() < max_cases {
        let enough = summary.cases.len() >= min_cases
            && summary.holding() >= min_each
            && summary.failing() >= min_each;
        if enough {
            break;
        }
        let target = if rng.gen_bool(0.5) {
            PerturbTarget::Alpha
        } else {
            PerturbTarget::Sigma
        };
        let (mut a, mut s) = (alpha.clone(), sigma.clone());
        let m = match target {
            PerturbTarget::Alpha => &mut a,
            PerturbTarget::Sigma => &mut s,
        };
        let row = rng.gen_range(0..m.rows());
        let col = rng.gen_range(0..m.cols());
        let delta = field.from_i64(rng.gen_range(1..p) as i64);
        let bumped = m.get(row, col) + &delta;
        m.set(row, col, bumped);
        let rep = check_product_equivalence(cat, b, h, &a, &s)?;
        summary.cases.push(FuzzCase {
            target,
            row,
            col,
            delta: delta.to_string(),
            lhs: rep.lhs,
            rhs: rep.rhs,
        });
    }
    Ok(summary)
}
