//! The JSON structure-constant format.
//!
//! A document has keys `field`, `base_hopf`, `objects`, `morphisms` and `systems`.
//! Matrices are dense and row-major with scalar strings. Objects and systems refer to
//! morphisms and other entries by name.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::crossed::{build_crossed_product, CrossedSystem};
use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap};
use crate::examples::Builtin;
use crate::hopfstruct::{AlgebraInC, ComoduleAlgebra, HopfAlgebraObject};
use crate::ydcat::{BaseHopf, BraidingMode, Category, YDObject};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseHopfDoc {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Matrix,
    pub comul: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Matrix>,
}

/// A Yetter-Drinfeld object. A missing action or coaction is the trivial one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SystemDoc {
    Algebra {
        object: String,
        mul: String,
        unit: String,
    },
    Hopf {
        object: String,
        mul: String,
        unit: String,
        comul: String,
        counit: String,
        antipode: String,
    },
    ComoduleAlgebra {
        algebra: String,
        hopf: String,
        coaction: String,
    },
    Crossed {
        b: String,
        h: String,
        alpha: String,
        sigma: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub field: String,
    pub base_hopf: BaseHopfDoc,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectDoc>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, Matrix>,
    #[serde(default)]
    pub systems: BTreeMap<String, SystemDoc>,
}

/// A named entry resolved against its category.
#[derive(Clone, Debug)]
pub enum Target {
    Object(YDObject),
    Algebra(AlgebraInC),
    Hopf(HopfAlgebraObject),
    ComoduleAlgebra(ComoduleAlgebra),
    Crossed(CrossedSystem),
}

impl Target {
    pub fn kind(&self) -> &'static str {
        match self {
            Target::Object(_) => "object",
            Target::Algebra(_) => "algebra",
            Target::Hopf(_) => "hopf",
            Target::ComoduleAlgebra(_) => "comodule_algebra",
            Target::Crossed(_) => "crossed",
        }
    }
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

pub fn matrix_to_doc(m: &LinMap) -> Matrix {
    Matrix {
        rows: m.rows(),
        cols: m.cols(),
        data: m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect(),
    }
}

pub fn matrix_from_doc(field: Field, m: &Matrix, location: &str) -> Result<LinMap> {
    if m.rows == 0 || m.cols == 0 {
        return Err(parse_error(location, "zero dimension"));
    }
    if m.data.len() != m.rows {
        return Err(parse_error(
            location,
            format!("declared {} rows, found {}", m.rows, m.data.len()),
        ));
    }
    let mut rows = Vec::with_capacity(m.rows);
    for (i, row) in m.data.iter().enumerate() {
        if row.len() != m.cols {
            return Err(parse_error(
                format!("{location}.data[{i}]"),
                format!("declared {} columns, found {}", m.cols, row.len()),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, s)| {
                field
                    .parse_scalar(s)
                    .map_err(|e| parse_error(format!("{location}.data[{i}][{j}]"), e))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    LinMap::from_rows(field, rows)
}

fn expect_shape(m: &LinMap, rows: usize, cols: usize, location: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(parse_error(
            location,
            format!("expected {rows}x{cols}, found {}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(())
}

/// A parsed document with its category.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub doc: Document,
    pub field: Field,
    pub cat: Category,
}

impl Loaded {
    pub fn from_json(text: &str, mode: BraidingMode) -> Result<Loaded> {
        let doc: Document = serde_json::from_str(text).map_err(|e| {
            parse_error(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        Loaded::from_doc(doc, mode)
    }

    pub fn from_path(path: &std::path::Path, mode: BraidingMode) -> Result<Loaded> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Loaded::from_json(&text, mode)
    }

    pub fn from_doc(doc: Document, mode: BraidingMode) -> Result<Loaded> {
        let field: Field = doc
            .field
            .parse()
            .map_err(|e: Error| parse_error("field", e.to_string()))?;
        let b = &doc.base_hopf;
        let d = b.dim;
        let m = |x: &Matrix, name: &str, r: usize, c: usize| -> Result<LinMap> {
            let loc = format!("base_hopf.{name}");
            let map = matrix_from_doc(field, x, &loc)?;
            expect_shape(&map, r, c, &loc)?;
            Ok(map)
        };
        let mul = m(&b.mul, "mul", d, d * d)?;
        let unit = m(&b.unit, "unit", d, 1)?;
        let comul = m(&b.comul, "comul", d * d, d)?;
        let counit = m(&b.counit, "counit", 1, d)?;
        let antipode = m(&b.antipode, "antipode", d, d)?;
        let base = match &b.antipode_inv {
            Some(inv) => {
                let inv = m(inv, "antipode_inv", d, d)?;
                BaseHopf::with_antipode_inv(mul, unit, comul, counit, antipode, inv)?
            }
            None => BaseHopf::new(mul, unit, comul, counit, antipode)?,
        };
        let cat = Category::with_mode(base, mode);
        Ok(Loaded { doc, field, cat })
    }

    pub fn names(&self) -> Vec<String> {
        self.doc
            .systems
            .keys()
            .chain(self.doc.objects.keys())
            .cloned()
            .collect()
    }

    /// The unique crossed or comodule-algebra system of the file.
    pub fn default_system(&self) -> Result<String> {
        let candidates: Vec<&String> = self
            .doc
            .systems
            .iter()
            .filter(|(_, s)| {
                matches!(
                    s,
                    SystemDoc::Crossed { .. } | SystemDoc::ComoduleAlgebra { .. }
                )
            })
            .map(|(n, _)| n)
            .collect();
        match candidates.as_slice() {
            [one] => Ok((*one).clone()),
            _ => Err(parse_error("systems", "pass a name to pick a system")),
        }
    }

    fn morphism(&self, name: &str, rows: usize, cols: usize, location: &str) -> Result<LinMap> {
        let m = self
            .doc
            .morphisms
            .get(name)
            .ok_or_else(|| parse_error(location, format!("unknown morphism `{name}`")))?;
        let loc = format!("morphisms.{name}");
        let map = matrix_from_doc(self.field, m, &loc)?;
        expect_shape(&map, rows, cols, &loc)?;
        Ok(map)
    }

    pub fn object(&self, name: &str) -> Result<YDObject> {
        let o = self
            .doc
            .objects
            .get(name)
            .ok_or_else(|| Error::UnknownTarget(name.to_string()))?;
        let loc = format!("objects.{name}");
        if o.dim == 0 {
            return Err(parse_error(loc, "zero dimension"));
        }
        let d = self.cat.base().dim;
        let triv = self.cat.trivial_object(o.dim);
        let action = match &o.action {
            Some(a) => self.morphism(a, o.dim, d * o.dim, &format!("{loc}.action"))?,
            None => triv.action,
        };
        let coaction = match &o.coaction {
            Some(c) => self.morphism(c, d * o.dim, o.dim, &format!("{loc}.coaction"))?,
            None => triv.coaction,
        };
        self.cat.object(action, coaction)
    }

    fn system(&self, name: &str) -> Result<&SystemDoc> {
        self.doc
            .systems
            .get(name)
            .ok_or_else(|| Error::UnknownTarget(name.to_string()))
    }

    pub fn algebra(&self, name: &str) -> Result<AlgebraInC> {
        match self.system(name)? {
            SystemDoc::Algebra { object, mul, unit } => {
                let loc = format!("systems.{name}");
                let object = self.object(object)?;
                let n = object.dim;
                let mul = self.morphism(mul, n, n * n, &loc)?;
                let unit = self.morphism(unit, n, 1, &loc)?;
                Ok(AlgebraInC { object, mul, unit })
            }
            SystemDoc::Hopf { .. } => Ok(self.hopf(name)?.algebra),
            _ => Err(parse_error(format!("systems.{name}"), "not an algebra")),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<HopfAlgebraObject> {
        match self.system(name)? {
            SystemDoc::Hopf {
                object,
                mul,
                unit,
                comul,
                counit,
                antipode,
            } => {
                let loc = format!("systems.{name}");
                let object = self.object(object)?;
                let n = object.dim;
                Ok(HopfAlgebraObject {
                    algebra: AlgebraInC {
                        object,
                        mul: self.morphism(mul, n, n * n, &loc)?,
                        unit: self.morphism(unit, n, 1, &loc)?,
                    },
                    comul: self.morphism(comul, n * n, n, &loc)?,
                    counit: self.morphism(counit, 1, n, &loc)?,
                    antipode: self.morphism(antipode, n, n, &loc)?,
                })
            }
            _ => Err(parse_error(format!("systems.{name}"), "not a Hopf algebra")),
        }
    }

    pub fn target(&self, name: &str) -> Result<Target> {
        if !self.doc.systems.contains_key(name) {
            return self.object(name).map(Target::Object);
        }
        let loc = format!("systems.{name}");
        Ok(match self.system(name)? {
            SystemDoc::Algebra { .. } => Target::Algebra(self.algebra(name)?),
            SystemDoc::Hopf { .. } => Target::Hopf(self.hopf(name)?),
            SystemDoc::ComoduleAlgebra {
                algebra,
                hopf,
                coaction,
            } => {
                let algebra = self.algebra(algebra)?;
                let hopf = self.hopf(hopf)?;
                let n = algebra.dim();
                let coact = self.morphism(coaction, n * hopf.dim(), n, &loc)?;
                Target::ComoduleAlgebra(ComoduleAlgebra {
                    algebra,
                    hopf,
                    coact,
                })
            }
            SystemDoc::Crossed { b, h, alpha, sigma } => {
                let b = self.algebra(b)?;
                let h = self.hopf(h)?;
                let (nb, k) = (b.dim(), h.dim());
                let alpha = self.morphism(alpha, nb, k * nb, &loc)?;
                let sigma = self.morphism(sigma, nb, k * k, &loc)?;
                Target::Crossed(build_crossed_product(&self.cat, &b, &h, &alpha, &sigma)?)
            }
        })
    }
}

fn base_to_doc(base: &BaseHopf) -> BaseHopfDoc {
    BaseHopfDoc {
        dim: base.dim,
        mul: matrix_to_doc(&base.mul),
        unit: matrix_to_doc(&base.unit),
        comul: matrix_to_doc(&base.comul),
        counit: matrix_to_doc(&base.counit),
        antipode: matrix_to_doc(&base.antipode),
        antipode_inv: Some(matrix_to_doc(&base.antipode_inv)),
    }
}

/// Accumulates named entries for export.
pub struct Writer {
    doc: Document,
}

impl Writer {
    pub fn new(cat: &Category) -> Writer {
        Writer {
            doc: Document {
                field: cat.field().to_string(),
                base_hopf: base_to_doc(cat.base()),
                objects: BTreeMap::new(),
                morphisms: BTreeMap::new(),
                systems: BTreeMap::new(),
            },
        }
    }

    pub fn morphism(&mut self, name: &str, m: &LinMap) -> String {
        self.doc
            .morphisms
            .insert(name.to_string(), matrix_to_doc(m));
        name.to_string()
    }

    pub fn object(&mut self, name: &str, o: &YDObject) -> String {
        let action = self.morphism(&format!("{name}.action"), &o.action);
        let coaction = self.morphism(&format!("{name}.coaction"), &o.coaction);
        self.doc.objects.insert(
            name.to_string(),
            ObjectDoc {
                dim: o.dim,
                action: Some(action),
                coaction: Some(coaction),
            },
        );
        name.to_string()
    }

    pub fn algebra(&mut self, name: &str, a: &AlgebraInC) -> String {
        let object = self.object(name, &a.object);
        let mul = self.morphism(&format!("{name}.mul"), &a.mul);
        let unit = self.morphism(&format!("{name}.unit"), &a.unit);
        self.doc
            .systems
            .insert(name.to_string(), SystemDoc::Algebra { object, mul, unit });
        name.to_string()
    }

    pub fn hopf(&mut self, name: &str, h: &HopfAlgebraObject) -> String {
        let object = self.object(name, h.object());
        let sys = SystemDoc::Hopf {
            object,
            mul: self.morphism(&format!("{name}.mul"), h.mul()),
            unit: self.morphism(&format!("{name}.unit"), h.unit()),
            comul: self.morphism(&format!("{name}.comul"), &h.comul),
            counit: self.morphism(&format!("{name}.counit"), &h.counit),
            antipode: self.morphism(&format!("{name}.antipode"), &h.antipode),
        };
        self.doc.systems.insert(name.to_string(), sys);
        name.to_string()
    }

    pub fn comodule_algebra(&mut self, name: &str, a: &ComoduleAlgebra) -> String {
        let algebra = self.algebra(&format!("{name}.algebra"), &a.algebra);
        let hopf = self.hopf("H", &a.hopf);
        let coaction = self.morphism(&format!("{name}.coaction"), &a.coact);
        self.doc.systems.insert(
            name.to_string(),
            SystemDoc::ComoduleAlgebra {
                algebra,
                hopf,
                coaction,
            },
        );
        name.to_string()
    }

    pub fn crossed(&mut self, name: &str, sys: &CrossedSystem) -> String {
        let b = self.algebra("B", &sys.b);
        let h = self.hopf("H", &sys.h);
        let alpha = self.morphism(&format!("{name}.alpha"), &sys.alpha);
        let sigma = self.morphism(&format!("{name}.sigma"), &sys.sigma);
        self.doc
            .systems
            .insert(name.to_string(), SystemDoc::Crossed { b, h, alpha, sigma });
        name.to_string()
    }

    pub fn finish(self) -> Document {
        self.doc
    }
}

/// Exports a built-in: a Hopf algebra as `H`, a crossed system as `S` over `B` and `H`,
/// a comodule algebra as `A` over `H`.
pub fn export_builtin(b: &Builtin) -> Document {
    let mut w = Writer::new(b.category());
    match b {
        Builtin::Hopf { h, .. } => {
            w.hopf("H", h);
        }
        Builtin::Crossed { sys, .. } => {
            w.crossed("S", sys);
        }
        Builtin::Comodule { a, .. } => {
            w.comodule_algebra("A", a);
        }
    }
    w.finish()
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}
