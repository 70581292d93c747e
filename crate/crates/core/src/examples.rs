//! Built-in, exactly specified instances.
//!
//! Classical examples live over the trivial base `D = k`; the super line lives over
//! `D = kC₂` where the braiding is a genuine sign.

use crate::crossed::{build_crossed_product, CrossedSystem};
use crate::error::{Error, Result};
use crate::exactlin::{Chain, Factor, Field, LinMap};
use crate::hopfstruct::{AlgebraInC, ComoduleAlgebra, HopfAlgebraObject};
use crate::ydcat::{BaseHopf, BraidingMode, Category};

use Factor::{Id, Map};

/// Builds an `out x (n^arity)` structure-constant matrix from a rule giving, for each
/// input basis index, the output as `(basis index, integer coefficient)` terms.
fn structure(
    field: Field,
    rows: usize,
    cols: usize,
    rule: impl Fn(usize) -> Vec<(usize, i64)>,
) -> LinMap {
    let mut m = LinMap::zero(field, rows, cols);
    for c in 0..cols {
        for (r, v) in rule(c) {
            let cur = m.get(r, c) + &field.from_i64(v);
            m.set(r, c, cur);
        }
    }
    m
}

fn require_odd_characteristic(field: Field, what: &str) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(what.to_string(), 2));
    }
    Ok(())
}

/// `D = k`.
pub fn trivial_base(field: Field) -> BaseHopf {
    BaseHopf::trivial(field)
}

/// Cayley table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Validates a Cayley table and returns `(identity, inverses)`.
fn validate_group(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table
        .iter()
        .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
    {
        return Err(Error::NotAGroup(
            "table is not a closed n x n operation".into(),
        ));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let inverses = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((e, inverses))
}

struct GroupMaps {
    mul: LinMap,
    unit: LinMap,
    comul: LinMap,
    counit: LinMap,
    antipode: LinMap,
}

fn group_maps(field: Field, table: &[Vec<usize>]) -> Result<GroupMaps> {
    let (e, inv) = validate_group(table)?;
    let n = table.len();
    Ok(GroupMaps {
        mul: structure(field, n, n * n, |c| vec![(table[c / n][c % n], 1)]),
        unit: structure(field, n, 1, |_| vec![(e, 1)]),
        comul: structure(field, n * n, n, |c| vec![(c * n + c, 1)]),
        counit: structure(field, 1, n, |_| vec![(0, 1)]),
        antipode: structure(field, n, n, |c| vec![(inv[c], 1)]),
    })
}

/// The group algebra `kG` as a base Hopf algebra.
pub fn group_base(field: Field, table: &[Vec<usize>]) -> Result<BaseHopf> {
    let g = group_maps(field, table)?;
    BaseHopf::new(g.mul, g.unit, g.comul, g.counit, g.antipode)
}

/// `kG` with `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`, as an object with trivial
/// action and coaction.
pub fn group_algebra(cat: &Category, table: &[Vec<usize>]) -> Result<HopfAlgebraObject> {
    let g = group_maps(cat.field(), table)?;
    Ok(HopfAlgebraObject {
        algebra: AlgebraInC {
            object: cat.trivial_object(table.len()),
            mul: g.mul,
            unit: g.unit,
        },
        comul: g.comul,
        counit: g.counit,
        antipode: g.antipode,
    })
}

/// Sweedler's four-dimensional Hopf algebra on the basis `g^a x^b` (index `a + 2b`):
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`, `S(x) = -gx`.
pub fn sweedler_h4(cat: &Category) -> Result<HopfAlgebraObject> {
    let f = cat.field();
    require_odd_characteristic(f, "Sweedler's Hopf algebra")?;
    let idx = |a: usize, b: usize| a + 2 * b;
    let mul = structure(f, 4, 16, |col| {
        let (i, j) = (col / 4, col % 4);
        let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
        if b + d >= 2 {
            return vec![];
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        vec![(idx((a + c) % 2, b + d), sign)]
    });
    let comul = structure(f, 16, 4, |col| {
        let (a, b) = (col % 2, col / 2);
        let g = a;
        if b == 0 {
            vec![(idx(g, 0) * 4 + idx(g, 0), 1)]
        } else {
            // Δ(g^a x) = g^a x ⊗ g^a + g^{a+1} ⊗ g^a x
            vec![
                (idx(g, 1) * 4 + idx(g, 0), 1),
                (idx((g + 1) % 2, 0) * 4 + idx(g, 1), 1),
            ]
        }
    });
    let counit = structure(f, 1, 4, |col| if col < 2 { vec![(0, 1)] } else { vec![] });
    let antipode = structure(f, 4, 4, |col| match col {
        0 => vec![(0, 1)],
        1 => vec![(1, 1)],
        2 => vec![(idx(1, 1), -1)],
        _ => vec![(idx(0, 1), 1)],
    });
    Ok(HopfAlgebraObject {
        algebra: AlgebraInC {
            object: cat.trivial_object(4),
            mul,
            unit: structure(f, 4, 1, |_| vec![(0, 1)]),
        },
        comul,
        counit,
        antipode,
    })
}

/// The category of Yetter-Drinfeld modules over `kC₂`.
pub fn c2_category(field: Field, mode: BraidingMode) -> Result<Category> {
    Ok(Category::with_mode(
        group_base(field, &cyclic_table(2))?,
        mode,
    ))
}

/// The exterior algebra `Λ(x) = k{1, x}` in Yetter-Drinfeld modules over `kC₂`, with
/// `x` odd (`g·x = -x`, `δ(x) = g ⊗ x`), `x² = 0`, `Δx = x ⊗ 1 + 1 ⊗ x`, `S(x) = -x`.
pub fn super_line(cat: &Category) -> Result<HopfAlgebraObject> {
    let f = cat.field();
    require_odd_characteristic(f, "super line")?;
    if cat.base().dim != 2 {
        return Err(Error::DimensionMismatch {
            context: "super line needs the base kC2".into(),
            expected: 2,
            found: cat.base().dim,
        });
    }
    let object = cat.object(
        LinMap::from_ints(f, &[&[1, 0, 1, 0], &[0, 1, 0, -1]]),
        LinMap::from_ints(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]),
    )?;
    Ok(HopfAlgebraObject {
        algebra: AlgebraInC {
            object,
            mul: LinMap::from_ints(f, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]),
            unit: LinMap::from_ints(f, &[&[1], &[0]]),
        },
        comul: LinMap::from_ints(f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]),
        counit: LinMap::from_ints(f, &[&[1, 0]]),
        antipode: LinMap::from_ints(f, &[&[1, 0], &[0, -1]]),
    })
}

/// Category and super line together.
pub fn super_line_over_c2(
    field: Field,
    mode: BraidingMode,
) -> Result<(Category, HopfAlgebraObject)> {
    require_odd_characteristic(field, "super line")?;
    let cat = c2_category(field, mode)?;
    let h = super_line(&cat)?;
    Ok((cat, h))
}

/// `η_B (ε ⊗ ε)`.
pub fn trivial_cocycle(b: &AlgebraInC, h: &HopfAlgebraObject) -> LinMap {
    b.unit
        .compose(&h.counit.kron(&h.counit))
        .expect("unit and counit shapes")
}

/// `ε_H ⊗ B`.
pub fn trivial_action(b: &AlgebraInC, h: &HopfAlgebraObject) -> LinMap {
    h.counit.kron(&LinMap::identity(h.counit.field(), b.dim()))
}

/// The adjoint action `α = m (H ⊗ m)(H ⊗ C_{H,H})(H ⊗ S ⊗ H)(Δ ⊗ H)` of `H` on itself.
pub fn adjoint_action(cat: &Category, h: &HopfAlgebraObject) -> Result<LinMap> {
    let k = h.dim();
    let c = cat.braiding(h.object(), h.object());
    Ok(Chain::identity(cat.field(), k * k)
        .then(&[Map(&h.comul), Id(k)])?
        .then(&[Id(k), Map(&h.antipode), Id(k)])?
        .then(&[Id(k), Map(&c)])?
        .then(&[Id(k), Map(h.mul())])?
        .then_map(h.mul())?
        .finish())
}

/// `H # H` with `H` acting on `B = H` by the adjoint action and trivial cocycle.
pub fn adjoint_smash(cat: &Category, h: &HopfAlgebraObject) -> Result<CrossedSystem> {
    let alpha = adjoint_action(cat, h)?;
    let sigma = trivial_cocycle(&h.algebra, h);
    build_crossed_product(cat, &h.algebra, h, &alpha, &sigma)
}

/// The one-dimensional algebra `k` as the unit object.
pub fn ground_algebra(cat: &Category) -> AlgebraInC {
    let f = cat.field();
    AlgebraInC {
        object: cat.unit_object(),
        mul: LinMap::identity(f, 1),
        unit: LinMap::identity(f, 1),
    }
}

/// `k^σ C₂`: `B = k`, trivial action, `σ(g, g) = -1`.
pub fn twisted_group_algebra_c2(cat: &Category) -> Result<CrossedSystem> {
    let f = cat.field();
    let h = group_algebra(cat, &cyclic_table(2))?;
    let b = ground_algebra(cat);
    let alpha = trivial_action(&b, &h);
    let sigma = LinMap::from_ints(f, &[&[1, 1, 1, -1]]);
    build_crossed_product(cat, &b, &h, &alpha, &sigma)
}

/// The Clifford algebra `k[x]/(x² - 1)` as a crossed product of `k` with the super line,
/// `σ(x, x) = 1`.
pub fn clifford_superline(field: Field) -> Result<(Category, CrossedSystem)> {
    let (cat, h) = super_line_over_c2(field, BraidingMode::YetterDrinfeld)?;
    let b = ground_algebra(&cat);
    let alpha = trivial_action(&b, &h);
    let sigma = LinMap::from_ints(field, &[&[1, 0, 0, 1]]);
    let sys = build_crossed_product(&cat, &b, &h, &alpha, &sigma)?;
    Ok((cat, sys))
}

/// `B = H = kC₂` with `g·t = -t` and `σ(g, g) = 2`.
pub fn crossed_c2_sign(cat: &Category) -> Result<CrossedSystem> {
    let f = cat.field();
    require_odd_characteristic(f, "crossed:c2-sign")?;
    let h = group_algebra(cat, &cyclic_table(2))?;
    let b = h.algebra.clone();
    // columns (h, b): (1,1) (1,t) (g,1) (g,t)
    let alpha = LinMap::from_ints(f, &[&[1, 0, 1, 0], &[0, 1, 0, -1]]);
    let sigma = LinMap::from_ints(f, &[&[1, 1, 1, 2], &[0, 0, 0, 0]]);
    build_crossed_product(cat, &b, &h, &alpha, &sigma)
}

/// `H` viewed as an `H`-comodule algebra with trivial coaction `ψ = A ⊗ η_H`.
pub fn trivial_coaction(cat: &Category, h: &HopfAlgebraObject) -> ComoduleAlgebra {
    let id = LinMap::identity(cat.field(), h.dim());
    ComoduleAlgebra {
        algebra: h.algebra.clone(),
        hopf: h.clone(),
        coact: id.kron(h.unit()),
    }
}

/// `(B, H) = (kC₂, kC₂)` with trivial action and cocycle: the starting point for
/// perturbation fuzzing.
pub fn fuzz_base(
    field: Field,
) -> Result<(Category, AlgebraInC, HopfAlgebraObject, LinMap, LinMap)> {
    let cat = Category::vector_spaces(field);
    let h = group_algebra(&cat, &cyclic_table(2))?;
    let b = h.algebra.clone();
    let alpha = trivial_action(&b, &h);
    let sigma = trivial_cocycle(&b, &h);
    Ok((cat, b, h, alpha, sigma))
}

/// A named built-in.
#[derive(Clone, Debug)]
pub enum Builtin {
    Hopf { cat: Category, h: HopfAlgebraObject },
    Crossed { cat: Category, sys: CrossedSystem },
    Comodule { cat: Category, a: ComoduleAlgebra },
}

impl Builtin {
    pub fn category(&self) -> &Category {
        match self {
            Builtin::Hopf { cat, .. }
            | Builtin::Crossed { cat, .. }
            | Builtin::Comodule { cat, .. } => cat,
        }
    }
}

pub const BUILTIN_IDS: &[&str] = &[
    "hopf:c2",
    "hopf:c4",
    "hopf:h4",
    "hopf:superline",
    "adjoint-smash:c2",
    "adjoint-smash:h4",
    "adjoint-smash:superline",
    "trivial-coaction:h4",
    "twisted:c2",
    "clifford:superline",
    "crossed:c2-sign",
];

/// Looks up a built-in by id. `mode` selects the braiding of categories over `kC₂`.
pub fn builtin(id: &str, field: Field, mode: BraidingMode) -> Result<Builtin> {
    let classical = || Category::with_mode(trivial_base(field), mode);
    let hopf = |cat: Category, h: HopfAlgebraObject| Builtin::Hopf { cat, h };
    Ok(match id {
        "hopf:c2" => {
            let cat = classical();
            let h = group_algebra(&cat, &cyclic_table(2))?;
            hopf(cat, h)
        }
        "hopf:c4" => {
            let cat = classical();
            let h = group_algebra(&cat, &cyclic_table(4))?;
            hopf(cat, h)
        }
        "hopf:h4" => {
            let cat = classical();
            let h = sweedler_h4(&cat)?;
            hopf(cat, h)
        }
        "hopf:superline" => {
            let (cat, h) = super_line_over_c2(field, mode)?;
            hopf(cat, h)
        }
        "adjoint-smash:c2" => {
            let cat = classical();
            let h = group_algebra(&cat, &cyclic_table(2))?;
            let sys = adjoint_smash(&cat, &h)?;
            Builtin::Crossed { cat, sys }
        }
        "adjoint-smash:h4" => {
            let cat = classical();
            let h = sweedler_h4(&cat)?;
            let sys = adjoint_smash(&cat, &h)?;
            Builtin::Crossed { cat, sys }
        }
        "adjoint-smash:superline" => {
            let (cat, h) = super_line_over_c2(field, mode)?;
            let sys = adjoint_smash(&cat, &h)?;
            Builtin::Crossed { cat, sys }
        }
        "trivial-coaction:h4" => {
            let cat = classical();
            let h = sweedler_h4(&cat)?;
            let a = trivial_coaction(&cat, &h);
            Builtin::Comodule { cat, a }
        }
        "twisted:c2" => {
            let cat = classical();
            let sys = twisted_group_algebra_c2(&cat)?;
            Builtin::Crossed { cat, sys }
        }
        "clifford:superline" => {
            let (cat, sys) = clifford_superline(field)?;
            Builtin::Crossed {
                cat: Category::with_mode(cat.base().clone(), mode),
                sys,
            }
        }
        "crossed:c2-sign" => {
            let cat = classical();
            let sys = crossed_c2_sign(&cat)?;
            Builtin::Crossed { cat, sys }
        }
        other => return Err(Error::UnknownTarget(other.to_string())),
    })
}
