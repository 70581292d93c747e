//! Dense matrices over a [`Field`], read as linear maps between based spaces.
//!
//! Column `j` is the image of the `j`-th domain basis vector. Tensor products of bases
//! are flattened row-major: the pair `(i, j)` in `V ⊗ W` has index `i * dim W + j`.

use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{dim_check, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinMap {
    /// The zero map `k^cols -> k^rows`.
    ///
    /// Panics on a zero dimension; parsed input goes through [`LinMap::from_rows`].
    pub fn zero(field: Field, rows: usize, cols: usize) -> LinMap {
        assert!(
            rows > 0 && cols > 0,
            "zero-dimensional LinMap {rows}x{cols}"
        );
        LinMap {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> LinMap {
        let mut m = LinMap::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds a map from explicit rows, validating shape and field.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::ZeroDimension("matrix with no rows".into()));
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(Error::ZeroDimension("matrix with no columns".into()));
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            dim_check("matrix row length", ncols, row.len())?;
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        s.field().to_string(),
                    ));
                }
                data.push(s);
            }
        }
        Ok(LinMap {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Small-integer convenience constructor, mostly for structure constants.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> LinMap {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        LinMap::from_rows(field, rows).expect("well-formed integer matrix")
    }

    /// A single column vector `k -> k^n`.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> LinMap {
        let n = entries.len();
        let mut m = LinMap::zero(field, n, 1);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, 0, e);
        }
        m
    }

    /// The flip `V ⊗ W -> W ⊗ V` of plain vector spaces.
    pub fn swap(field: Field, dim_v: usize, dim_w: usize) -> LinMap {
        let n = dim_v * dim_w;
        let mut m = LinMap::zero(field, n, n);
        for i in 0..dim_v {
            for j in 0..dim_w {
                m.set(j * dim_v + i, i * dim_w + j, field.one());
            }
        }
        m
    }

    /// Reorders tensor factors of plain vector spaces: output factor `k` is input factor
    /// `order[k]`, where the input is `dims[0] ⊗ dims[1] ⊗ ...`.
    pub fn permutation(field: Field, dims: &[usize], order: &[usize]) -> LinMap {
        assert_eq!(dims.len(), order.len(), "permutation arity");
        let n: usize = dims.iter().product();
        let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
        let mut m = LinMap::zero(field, n, n);
        let mut digits = vec![0usize; dims.len()];
        for idx in 0..n {
            let mut rest = idx;
            for k in (0..dims.len()).rev() {
                digits[k] = rest % dims[k];
                rest /= dims[k];
            }
            let out = order
                .iter()
                .zip(&out_dims)
                .fold(0, |acc, (&k, &d)| acc * d + digits[k]);
            m.set(out, idx, field.one());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column_sparse(&self, c: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (!v.is_zero()).then(|| (r, v.clone()))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    fn same_field(&self, other: &LinMap) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        self.same_field(g)?;
        dim_check("compose", self.cols, g.rows)?;
        let g_rows: Vec<Vec<(usize, &Scalar)>> = (0..g.rows)
            .map(|k| {
                g.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = LinMap::zero(self.field, self.rows, g.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &g_rows[k] {
                    out.data[i * g.cols + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; column `i * g.cols + j` is `self(e_i) ⊗ g(e_j)`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        assert_eq!(self.field, g.field, "kron across fields");
        let mut out = LinMap::zero(self.field, self.rows * g.rows, self.cols * g.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..g.rows {
                    for c2 in 0..g.cols {
                        let b = g.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * g.rows + r2, c1 * g.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a list of maps, left to right.
    pub fn kron_all(maps: &[&LinMap]) -> LinMap {
        let (first, rest) = maps.split_first().expect("kron of an empty list");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap> {
        self.zip(g, |a, b| a + b)
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap> {
        self.zip(g, |a, b| a - b)
    }

    fn zip(&self, g: &LinMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinMap> {
        self.same_field(g)?;
        dim_check("elementwise rows", self.rows, g.rows)?;
        dim_check("elementwise cols", self.cols, g.cols)?;
        Ok(LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&g.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Columns `cols` of `self`, in order.
    pub fn select_columns(&self, cols: &[usize]) -> LinMap {
        LinMap::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &LinMap) -> Result<LinMap> {
        self.same_field(other)?;
        dim_check("hstack rows", self.rows, other.rows)?;
        Ok(LinMap::from_fn(
            self.field,
            self.rows,
            self.cols + other.cols,
            |r, c| {
                if c < self.cols {
                    self.get(r, c).clone()
                } else {
                    other.get(r, c - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &LinMap) -> Result<LinMap> {
        self.same_field(other)?;
        dim_check("vstack cols", self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(LinMap {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// First `(row, col)` at which two equally shaped maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.cols).find_map(|c| {
            (0..self.rows)
                .find(|&r| self.get(r, c) != other.get(r, c))
                .map(|r| (r, c))
        })
    }

    /// `self^n` for square maps.
    pub fn power(&self, n: u32) -> Result<LinMap> {
        dim_check("power of non-square map", self.rows, self.cols)?;
        let mut acc = LinMap::identity(self.field, self.rows);
        for _ in 0..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }
}
