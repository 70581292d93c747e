//! Exact Gauss-Jordan elimination and everything built on it.
//!
//! Elimination skips zero entries of the pivot row, so the structure-constant matrices
//! this crate produces (overwhelmingly sparse) reduce in time close to their fill-in.

use super::linmap::LinMap;
use super::scalar::Scalar;
use crate::error::{dim_check, Error, Result};

/// Reduced row echelon form: `rows[k]` has its leading one in column `pivots[k]`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Row-reduces `rows` (each of length `width`) in place, considering only the first
/// `pivot_limit` columns as pivot candidates.
fn eliminate(mut rows: Vec<Vec<Scalar>>, width: usize, pivot_limit: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_limit {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv().expect("nonzero pivot");
        let mut support = Vec::new();
        for j in col..width {
            if !rows[next][j].is_zero() {
                rows[next][j] = &rows[next][j] * &inv;
                support.push(j);
            }
        }
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let factor = -&row[col];
            for &j in &support {
                row[j].add_mul(&factor, &pivot_row[j]);
            }
            debug_assert!(row[col].is_zero());
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    Rref { rows, pivots }
}

pub fn rref(f: &LinMap) -> Rref {
    eliminate(f.to_rows(), f.cols(), f.cols())
}

pub fn rank(f: &LinMap) -> usize {
    if f.rows() <= f.cols() {
        rref(f).rank()
    } else {
        rref(&f.transpose()).rank()
    }
}

/// Result of [`kernel_basis`]. Zero-dimensional spaces are never materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kernel {
    Trivial,
    Inclusion(LinMap),
}

impl Kernel {
    pub fn dim(&self) -> usize {
        match self {
            Kernel::Trivial => 0,
            Kernel::Inclusion(k) => k.cols(),
        }
    }

    pub fn map(&self) -> Option<&LinMap> {
        match self {
            Kernel::Trivial => None,
            Kernel::Inclusion(k) => Some(k),
        }
    }
}

/// Result of [`cokernel_projection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cokernel {
    Trivial,
    Projection(LinMap),
}

impl Cokernel {
    pub fn dim(&self) -> usize {
        match self {
            Cokernel::Trivial => 0,
            Cokernel::Projection(q) => q.rows(),
        }
    }

    pub fn map(&self) -> Option<&LinMap> {
        match self {
            Cokernel::Trivial => None,
            Cokernel::Projection(q) => Some(q),
        }
    }
}

/// An injection whose columns form a basis of `ker f`, one column per free variable of
/// the reduced row echelon form.
pub fn kernel_basis(f: &LinMap) -> Kernel {
    let field = f.field();
    let r = rref(f);
    let free: Vec<usize> = (0..f.cols()).filter(|c| !r.pivots.contains(c)).collect();
    if free.is_empty() {
        return Kernel::Trivial;
    }
    let mut k = LinMap::zero(field, f.cols(), free.len());
    for (i, &fc) in free.iter().enumerate() {
        k.set(fc, i, field.one());
        for (row, &pc) in r.pivots.iter().enumerate() {
            let v = &r.rows[row][fc];
            if !v.is_zero() {
                k.set(pc, i, -v);
            }
        }
    }
    Kernel::Inclusion(k)
}

/// A surjection `cod f -> Q` with `q ∘ f = 0`: reduce `Im f` to echelon form, then
/// project onto the non-pivot coordinates along it.
pub fn cokernel_projection(f: &LinMap) -> Cokernel {
    let field = f.field();
    let r = rref(&f.transpose());
    let free: Vec<usize> = (0..f.rows()).filter(|c| !r.pivots.contains(c)).collect();
    if free.is_empty() {
        return Cokernel::Trivial;
    }
    let mut q = LinMap::zero(field, free.len(), f.rows());
    for (i, &n) in free.iter().enumerate() {
        q.set(i, n, field.one());
        for (row, &p) in r.pivots.iter().enumerate() {
            let v = &r.rows[row][n];
            if !v.is_zero() {
                q.set(i, p, -v);
            }
        }
    }
    Cokernel::Projection(q)
}

pub fn invert(f: &LinMap) -> Result<LinMap> {
    dim_check("invert (square)", f.rows(), f.cols())?;
    let n = f.rows();
    let field = f.field();
    let aug = f.hstack(&LinMap::identity(field, n))?;
    let r = eliminate(aug.to_rows(), 2 * n, n);
    if r.rank() < n {
        return Err(Error::NotInvertible);
    }
    Ok(LinMap::from_fn(field, n, n, |i, j| {
        r.rows[i][n + j].clone()
    }))
}

/// A particular solution `x` of `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &LinMap, b: &LinMap) -> Result<Option<LinMap>> {
    dim_check("solve", a.rows(), b.rows())?;
    let field = a.field();
    let n = a.cols();
    let aug = a.hstack(b)?;
    let r = eliminate(aug.to_rows(), n + b.cols(), n + b.cols());
    if r.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = LinMap::zero(field, n, b.cols());
    for (row, &p) in r.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.rows[row][n + j].clone());
        }
    }
    Ok(Some(x))
}

/// The unique `g` with `p ∘ g = f`, for an injective `p` whose image contains `Im f`.
pub fn solve_factor_through_mono(p: &LinMap, f: &LinMap) -> Result<LinMap> {
    dim_check("factor through mono (codomain)", p.rows(), f.rows())?;
    if rank(p) != p.cols() {
        return Err(Error::NotMono);
    }
    let g = solve(p, f)?.ok_or(Error::NotFactorable)?;
    debug_assert_eq!(&p.compose(&g)?, f);
    Ok(g)
}

/// Some `s` with `q ∘ s = id`, for a surjective `q`.
pub fn right_inverse(q: &LinMap) -> Result<LinMap> {
    if rank(q) != q.rows() {
        return Err(Error::NotEpi);
    }
    solve(q, &LinMap::identity(q.field(), q.rows()))?.ok_or(Error::NotEpi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn kernel_of_zero_is_everything_and_of_identity_is_trivial() {
        let z = LinMap::zero(Q, 2, 2);
        assert_eq!(kernel_basis(&z), Kernel::Inclusion(LinMap::identity(Q, 2)));
        assert_eq!(kernel_basis(&LinMap::identity(Q, 2)), Kernel::Trivial);
    }

    #[test]
    fn kernel_of_row_sum() {
        let f = LinMap::from_ints(Q, &[&[1, 1]]);
        let k = kernel_basis(&f);
        let k = k.map().unwrap();
        assert_eq!(k.cols(), 1);
        assert!(f.compose(k).unwrap().is_zero());
        assert_eq!(rank(k), 1);
        // spans (1, -1) up to scale
        assert_eq!(k.get(0, 0), &-k.get(1, 0));
    }

    #[test]
    fn cokernel_cases() {
        let z = LinMap::zero(Q, 2, 2);
        assert_eq!(
            cokernel_projection(&z),
            Cokernel::Projection(LinMap::identity(Q, 2))
        );
        assert_eq!(
            cokernel_projection(&LinMap::identity(Q, 2)),
            Cokernel::Trivial
        );
        let diag = LinMap::from_ints(Q, &[&[1], &[1]]);
        let q = cokernel_projection(&diag);
        let q = q.map().unwrap();
        assert_eq!((q.rows(), q.cols()), (1, 2));
        assert!(q.compose(&diag).unwrap().is_zero());
        assert_eq!(rank(q), 1);
    }

    #[test]
    fn invert_cases() {
        assert_eq!(
            invert(&LinMap::identity(Q, 4)).unwrap(),
            LinMap::identity(Q, 4)
        );
        let flip = LinMap::from_ints(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&flip).unwrap(), flip);
        let singular = LinMap::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(invert(&singular), Err(Error::NotInvertible));
        assert!(matches!(
            invert(&LinMap::zero(Q, 2, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn factor_through_mono_cases() {
        let f = LinMap::from_ints(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(
            solve_factor_through_mono(&LinMap::identity(Q, 2), &f).unwrap(),
            f
        );
        let incl = LinMap::from_ints(Q, &[&[1], &[0]]);
        let g = solve_factor_through_mono(&incl, &incl).unwrap();
        assert!(g.is_identity());
        let off = LinMap::from_ints(Q, &[&[0], &[1]]);
        assert_eq!(
            solve_factor_through_mono(&incl, &off),
            Err(Error::NotFactorable)
        );
        let not_mono = LinMap::from_ints(Q, &[&[1, 1], &[0, 0]]);
        assert_eq!(
            solve_factor_through_mono(&not_mono, &incl),
            Err(Error::NotMono)
        );
    }

    #[test]
    fn right_inverse_of_projection() {
        let q = LinMap::from_ints(Q, &[&[1, -1, 0], &[0, 2, 1]]);
        let s = right_inverse(&q).unwrap();
        assert!(q.compose(&s).unwrap().is_identity());
        let not_epi = LinMap::from_ints(Q, &[&[1, 1], &[2, 2]]);
        assert_eq!(right_inverse(&not_epi), Err(Error::NotEpi));
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = Field::Prime(7);
        let m = LinMap::from_ints(f7, &[&[2, 3], &[1, 4]]);
        let inv = invert(&m).unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        // det = 5 != 0 mod 7; now a matrix singular only mod 7
        let s = LinMap::from_ints(f7, &[&[1, 2], &[3, 13]]);
        assert_eq!(invert(&s), Err(Error::NotInvertible));
    }
}
