//! Layered composites of tensor products of maps.
//!
//! A composite such as `(m_B ⊗ H)(B ⊗ α ⊗ Δ)` is evaluated right to left, one layer at a
//! time. Each domain basis vector is pushed through the layers as a sparse vector, so a
//! layer `f_1 ⊗ ... ⊗ f_n` costs time proportional to the nonzeros it produces rather
//! than to the size of the Kronecker product. The indexing is the same row-major
//! flattening used by [`LinMap::kron`], and the two are cross-checked in tests.

use std::collections::HashMap;

use super::linmap::LinMap;
use super::scalar::{Field, Scalar};
use crate::error::{dim_check, Result};

/// One tensor factor of a layer.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    /// Identity on a space of the given dimension.
    Id(usize),
    /// An arbitrary map.
    Map(&'a LinMap),
}

impl Factor<'_> {
    fn in_dim(&self) -> usize {
        match self {
            Factor::Id(n) => *n,
            Factor::Map(m) => m.cols(),
        }
    }

    fn out_dim(&self) -> usize {
        match self {
            Factor::Id(n) => *n,
            Factor::Map(m) => m.rows(),
        }
    }
}

type SparseVec = Vec<(usize, Scalar)>;

/// A linear map under construction, stored column by column as sparse vectors.
#[derive(Clone, Debug)]
pub struct Chain {
    field: Field,
    dim: usize,
    columns: Vec<SparseVec>,
}

enum Prepared {
    Id(usize),
    Map {
        out_dim: usize,
        cols: Vec<SparseVec>,
    },
}

impl Chain {
    /// The identity on a space of dimension `dim`.
    pub fn identity(field: Field, dim: usize) -> Chain {
        Chain {
            field,
            dim,
            columns: (0..dim).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    /// Starts from an existing map.
    pub fn from_map(map: &LinMap) -> Chain {
        Chain {
            field: map.field(),
            dim: map.rows(),
            columns: (0..map.cols()).map(|c| map.column_sparse(c)).collect(),
        }
    }

    /// Current codomain dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Post-composes with `f_1 ⊗ ... ⊗ f_n`.
    pub fn then(self, layer: &[Factor<'_>]) -> Result<Chain> {
        let in_total: usize = layer.iter().map(Factor::in_dim).product();
        dim_check("layer input", self.dim, in_total)?;
        let out_total: usize = layer.iter().map(Factor::out_dim).product();

        let mut in_strides = vec![1usize; layer.len()];
        for k in (0..layer.len().saturating_sub(1)).rev() {
            in_strides[k] = in_strides[k + 1] * layer[k + 1].in_dim();
        }
        let prepared: Vec<Prepared> = layer
            .iter()
            .map(|f| match f {
                Factor::Id(n) => Prepared::Id(*n),
                Factor::Map(m) => {
                    assert_eq!(m.field(), self.field, "layer across fields");
                    Prepared::Map {
                        out_dim: m.rows(),
                        cols: (0..m.cols()).map(|c| m.column_sparse(c)).collect(),
                    }
                }
            })
            .collect();

        let field = self.field;
        let columns = self
            .columns
            .into_iter()
            .map(|col| {
                let mut acc: HashMap<usize, Scalar> = HashMap::new();
                let mut terms: Vec<(usize, Scalar)> = Vec::new();
                let mut next: Vec<(usize, Scalar)> = Vec::new();
                for (idx, coeff) in col {
                    terms.clear();
                    terms.push((0, coeff));
                    for (k, factor) in layer.iter().enumerate() {
                        let i = (idx / in_strides[k]) % factor.in_dim();
                        match &prepared[k] {
                            Prepared::Id(n) => {
                                for t in terms.iter_mut() {
                                    t.0 = t.0 * n + i;
                                }
                            }
                            Prepared::Map { out_dim, cols } => {
                                next.clear();
                                for (o, c) in terms.iter() {
                                    for (r, v) in &cols[i] {
                                        next.push((o * out_dim + r, c * v));
                                    }
                                }
                                std::mem::swap(&mut terms, &mut next);
                            }
                        }
                        if terms.is_empty() {
                            break;
                        }
                    }
                    for (o, c) in terms.drain(..) {
                        match acc.get_mut(&o) {
                            Some(slot) => *slot = &*slot + &c,
                            None => {
                                acc.insert(o, c);
                            }
                        }
                    }
                }
                let mut out: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                out.sort_unstable_by_key(|(i, _)| *i);
                out
            })
            .collect();
        Ok(Chain {
            field,
            dim: out_total,
            columns,
        })
    }

    /// Post-composes with a single map.
    pub fn then_map(self, f: &LinMap) -> Result<Chain> {
        self.then(&[Factor::Map(f)])
    }

    pub fn finish(self) -> LinMap {
        let mut out = LinMap::zero(self.field, self.dim, self.columns.len());
        for (c, col) in self.columns.into_iter().enumerate() {
            for (r, v) in col {
                out.set(r, c, v);
            }
        }
        out
    }
}
