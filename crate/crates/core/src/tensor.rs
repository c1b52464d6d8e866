//! Dense structure tensors over an exact field.
//!
//! Internal indices are 0-based; everything user-facing (files, reports, docs) is 1-based.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Soft cap on dimension for dense exact arithmetic.
pub const MAX_DIM: usize = 8;

pub type Vector = Vec<Scalar>;

#[inline]
pub(crate) fn ix3(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::DimLimit(n, MAX_DIM));
    }
    Ok(())
}

fn check_entries(field: Field, xs: &[Scalar]) -> Result<()> {
    match xs.iter().find(|x| x.field() != field) {
        Some(x) => Err(Error::FieldMismatch(field, x.field())),
        None => Ok(()),
    }
}

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn check_vec(field: Field, n: usize, x: &[Scalar]) -> Result<()> {
    if x.len() != n {
        return Err(Error::Dim {
            expected: n,
            got: x.len(),
        });
    }
    check_entries(field, x)
}

/// Index of `v` if it is a standard basis vector.
pub fn basis_index(v: &[Scalar]) -> Option<usize> {
    let mut hit = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if !x.is_one() || hit.is_some() {
            return None;
        }
        hit = Some(i);
    }
    hit
}

/// μ(e_i⊗e_j) = Σ_k C_ij^k e_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultTensor {
    dim: usize,
    field: Field,
    c: Vec<Scalar>,
}

impl MultTensor {
    pub fn new(dim: usize, field: Field, c: Vec<Scalar>) -> Result<Self> {
        check_dim(dim)?;
        if c.len() != dim * dim * dim {
            return Err(Error::Dim {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        check_entries(field, &c)?;
        Ok(MultTensor { dim, field, c })
    }

    pub fn zero(dim: usize, field: Field) -> Result<Self> {
        Self::new(dim, field, zero_vec(field, dim * dim * dim))
    }

    /// Zero tensor plus `e_u` acting as a two-sided unit on the basis.
    pub fn with_unit(dim: usize, field: Field, u: usize) -> Result<Self> {
        let mut t = Self::zero(dim, field)?;
        for i in 0..dim {
            t.set(u, i, i, field.one());
            t.set(i, u, i, field.one());
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn data(&self) -> &[Scalar] {
        &self.c
    }
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[ix3(self.dim, i, j, k)]
    }
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        let n = self.dim;
        self.c[ix3(n, i, j, k)] = v;
    }

    /// Overwrite the product e_i e_j with the given vector.
    pub fn set_product(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (k, x) in v.iter().enumerate() {
            self.set(i, j, k, x.clone());
        }
    }

    pub fn product(&self, i: usize, j: usize) -> Vector {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    /// μ^op(x⊗y) = μ(y⊗x).
    pub fn op(&self) -> Self {
        let n = self.dim;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    pub fn to_field(&self, field: Field) -> Result<Self> {
        let c = self
            .c
            .iter()
            .map(|x| x.to_field(field))
            .collect::<Result<_>>()?;
        Self::new(self.dim, field, c)
    }
}

/// Δ(e_i) = Σ D_i^jk e_j⊗e_k together with the counit constants ξ_i = ε(e_i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComultTensor {
    dim: usize,
    field: Field,
    d: Vec<Scalar>,
    counit: Vec<Scalar>,
}

impl ComultTensor {
    pub fn new(dim: usize, field: Field, d: Vec<Scalar>, counit: Vec<Scalar>) -> Result<Self> {
        check_dim(dim)?;
        if d.len() != dim * dim * dim {
            return Err(Error::Dim {
                expected: dim * dim * dim,
                got: d.len(),
            });
        }
        check_vec(field, dim, &counit)?;
        check_entries(field, &d)?;
        Ok(ComultTensor {
            dim,
            field,
            d,
            counit,
        })
    }

    pub fn zero(dim: usize, field: Field) -> Result<Self> {
        Self::new(
            dim,
            field,
            zero_vec(field, dim * dim * dim),
            zero_vec(field, dim),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn data(&self) -> &[Scalar] {
        &self.d
    }
    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.d[ix3(self.dim, i, j, k)]
    }
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        let n = self.dim;
        self.d[ix3(n, i, j, k)] = v;
    }
    pub fn set_counit(&mut self, i: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.counit[i] = v;
    }

    pub fn with_counit(&self, counit: Vec<Scalar>) -> Result<Self> {
        Self::new(self.dim, self.field, self.d.clone(), counit)
    }

    /// Δ(e_i) as an element of V⊗V.
    pub fn row(&self, i: usize) -> Tensor2 {
        let n = self.dim;
        Tensor2 {
            dim: n,
            field: self.field,
            coeffs: self.d[i * n * n..(i + 1) * n * n].to_vec(),
        }
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(i, k, j))))
    }

    /// Δ^cop = τ∘Δ.
    pub fn cop(&self) -> Self {
        let n = self.dim;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.set(i, j, k, self.get(i, k, j).clone());
                }
            }
        }
        t
    }

    pub fn to_field(&self, field: Field) -> Result<Self> {
        let d = self
            .d
            .iter()
            .map(|x| x.to_field(field))
            .collect::<Result<_>>()?;
        let e = self
            .counit
            .iter()
            .map(|x| x.to_field(field))
            .collect::<Result<_>>()?;
        Self::new(self.dim, field, d, e)
    }
}

/// Element of V⊗V; `coeffs[j*n+k]` is the coefficient of e_j⊗e_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    pub fn new(dim: usize, field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        check_dim(dim)?;
        if coeffs.len() != dim * dim {
            return Err(Error::Dim {
                expected: dim * dim,
                got: coeffs.len(),
            });
        }
        check_entries(field, &coeffs)?;
        Ok(Tensor2 { dim, field, coeffs })
    }

    pub fn zero(dim: usize, field: Field) -> Self {
        Tensor2 {
            dim,
            field,
            coeffs: zero_vec(field, dim * dim),
        }
    }

    /// Pure tensor x⊗y.
    pub fn pure(x: &[Scalar], y: &[Scalar]) -> Result<Self> {
        let n = x.len();
        if y.len() != n {
            return Err(Error::Dim {
                expected: n,
                got: y.len(),
            });
        }
        let field = x.first().map(|s| s.field()).unwrap_or(Field::Q);
        let mut coeffs = Vec::with_capacity(n * n);
        for a in x {
            for b in y {
                coeffs.push(a * b);
            }
        }
        Self::new(n, field, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }
    pub fn get(&self, j: usize, k: usize) -> &Scalar {
        &self.coeffs[j * self.dim + k]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }
}

fn check_same(field: Field, n: usize, other_field: Field, other_n: usize) -> Result<()> {
    if n != other_n {
        return Err(Error::Dim {
            expected: n,
            got: other_n,
        });
    }
    if field != other_field {
        return Err(Error::FieldMismatch(field, other_field));
    }
    Ok(())
}

/// Σ_ij x_i y_j C_ij^k e_k.
pub fn evaluate_mult(t: &MultTensor, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
    let n = t.dim;
    check_vec(t.field, n, x)?;
    check_vec(t.field, n, y)?;
    let mut out = zero_vec(t.field, n);
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let w = &x[i] * &y[j];
            for (k, o) in out.iter_mut().enumerate() {
                let c = t.get(i, j, k);
                if !c.is_zero() {
                    *o = &*o + &(&w * c);
                }
            }
        }
    }
    Ok(out)
}

/// Σ_i x_i Δ(e_i).
pub fn evaluate_comult(t: &ComultTensor, x: &[Scalar]) -> Result<Tensor2> {
    let n = t.dim;
    check_vec(t.field, n, x)?;
    let mut out = Tensor2::zero(n, t.field);
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            out = out.add(&t.row(i).scale(xi));
        }
    }
    Ok(out)
}

/// (x⊗y)•(x′⊗y′) = μ(x⊗x′)⊗μ(y⊗y′), extended bilinearly.
pub fn tensor_square_product(t: &MultTensor, u: &Tensor2, v: &Tensor2) -> Result<Tensor2> {
    let n = t.dim;
    check_same(t.field, n, u.field, u.dim)?;
    check_same(t.field, n, v.field, v.dim)?;
    let mut out = Tensor2::zero(n, t.field);
    for a in 0..n {
        for b in 0..n {
            let uab = u.get(a, b);
            if uab.is_zero() {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    let vcd = v.get(c, d);
                    if vcd.is_zero() {
                        continue;
                    }
                    let w = uab * vcd;
                    for k in 0..n {
                        let l = t.get(a, c, k);
                        if l.is_zero() {
                            continue;
                        }
                        let wl = &w * l;
                        for s in 0..n {
                            let r = t.get(b, d, s);
                            if !r.is_zero() {
                                let slot = &mut out.coeffs[k * n + s];
                                *slot = &*slot + &(&wl * r);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Dense matrix over an exact field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: zero_vec(field, rows * cols),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        let cols = self.cols;
        self.data[r * cols + c] = v;
    }

    // gaussian elimination to reduced row echelon form; returns pivot columns and the determinant factor
    fn rref(&self) -> (Matrix, Vec<usize>, Scalar) {
        let mut m = self.clone();
        let mut det = self.field.one();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(pr) = (rank..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            if pr != rank {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, rank * m.cols + k);
                }
                det = -det;
            }
            let piv = m.get(rank, c).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for k in 0..m.cols {
                let v = m.get(rank, k) * &inv;
                m.set(rank, k, v);
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..m.cols {
                    let v = m.get(r, k) - &(&f * m.get(rank, k));
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : M x = 0}.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots, _) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.field, self.cols);
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }
}

/// Linear map V→V; column j of `m` is the image of e_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearEndo {
    dim: usize,
    field: Field,
    m: Vec<Scalar>,
}

impl LinearEndo {
    /// `m` is row-major: `m[r*n+c]` is the e_r-coefficient of f(e_c).
    pub fn new(dim: usize, field: Field, m: Vec<Scalar>) -> Result<Self> {
        check_dim(dim)?;
        if m.len() != dim * dim {
            return Err(Error::Dim {
                expected: dim * dim,
                got: m.len(),
            });
        }
        check_entries(field, &m)?;
        Ok(LinearEndo { dim, field, m })
    }

    pub fn from_ints(dim: usize, field: Field, rows: &[i64]) -> Result<Self> {
        Self::new(dim, field, rows.iter().map(|&v| field.int(v)).collect())
    }

    /// Build from the images of the basis vectors.
    pub fn from_columns(field: Field, cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        let mut m = zero_vec(field, n * n);
        for (c, col) in cols.iter().enumerate() {
            check_vec(field, n, col)?;
            for (r, x) in col.iter().enumerate() {
                m[r * n + c] = x.clone();
            }
        }
        Self::new(n, field, m)
    }

    pub fn identity(dim: usize, field: Field) -> Self {
        let mut m = zero_vec(field, dim * dim);
        for i in 0..dim {
            m[i * dim + i] = field.one();
        }
        LinearEndo { dim, field, m }
    }

    pub fn zero(dim: usize, field: Field) -> Self {
        LinearEndo {
            dim,
            field,
            m: zero_vec(field, dim * dim),
        }
    }

    /// E_rc: e_c ↦ e_r, every other basis vector ↦ 0.
    pub fn elementary(dim: usize, field: Field, r: usize, c: usize) -> Self {
        let mut e = Self::zero(dim, field);
        e.m[r * dim + c] = field.one();
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn data(&self) -> &[Scalar] {
        &self.m
    }
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.m[r * self.dim + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        let n = self.dim;
        self.m[r * n + c] = v;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        check_vec(self.field, self.dim, x)?;
        let n = self.dim;
        Ok((0..n)
            .map(|r| {
                (0..n).fold(self.field.zero(), |acc, c| {
                    if x[c].is_zero() {
                        acc
                    } else {
                        &acc + &(self.get(r, c) * &x[c])
                    }
                })
            })
            .collect())
    }

    /// self ∘ g.
    pub fn compose(&self, g: &LinearEndo) -> Result<LinearEndo> {
        check_same(self.field, self.dim, g.field, g.dim)?;
        let n = self.dim;
        let mut m = zero_vec(self.field, n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    if !a.is_zero() {
                        acc = &acc + &(a * g.get(k, c));
                    }
                }
                m[r * n + c] = acc;
            }
        }
        Ok(LinearEndo {
            dim: n,
            field: self.field,
            m,
        })
    }

    pub fn add(&self, g: &LinearEndo) -> Result<LinearEndo> {
        check_same(self.field, self.dim, g.field, g.dim)?;
        Ok(LinearEndo {
            dim: self.dim,
            field: self.field,
            m: self.m.iter().zip(&g.m).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, g: &LinearEndo) -> Result<LinearEndo> {
        check_same(self.field, self.dim, g.field, g.dim)?;
        Ok(LinearEndo {
            dim: self.dim,
            field: self.field,
            m: self.m.iter().zip(&g.m).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinearEndo {
        LinearEndo {
            dim: self.dim,
            field: self.field,
            m: self.m.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(Scalar::is_zero)
    }

    fn as_matrix(&self) -> Matrix {
        Matrix {
            rows: self.dim,
            cols: self.dim,
            field: self.field,
            data: self.m.clone(),
        }
    }

    pub fn det(&self) -> Scalar {
        let (_, piv, det) = self.as_matrix().rref();
        if piv.len() < self.dim {
            self.field.zero()
        } else {
            det
        }
    }

    pub fn rank(&self) -> usize {
        self.as_matrix().rank()
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.as_matrix().kernel()
    }

    pub fn inverse(&self) -> Result<LinearEndo> {
        let n = self.dim;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, piv, _) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut m = zero_vec(self.field, n * n);
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = red.get(r, n + c).clone();
            }
        }
        Ok(LinearEndo {
            dim: n,
            field: self.field,
            m,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Q.int(v)
    }

    #[test]
    fn inverse_roundtrip() {
        let f = LinearEndo::from_ints(3, Field::Q, &[1, 1, 0, 0, 2, 1, 0, 0, 3]).unwrap();
        let g = f.inverse().unwrap();
        assert_eq!(f.compose(&g).unwrap(), LinearEndo::identity(3, Field::Q));
        assert_eq!(f.det(), q(6));
    }

    #[test]
    fn singular_detected() {
        let f = LinearEndo::from_ints(2, Field::Q, &[1, 2, 2, 4]).unwrap();
        assert!(f.det().is_zero());
        assert!(matches!(f.inverse(), Err(Error::Singular)));
        assert_eq!(f.kernel().len(), 1);
        let k = &f.kernel()[0];
        assert!(f.apply(k).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn elementary_maps_column() {
        let e = LinearEndo::elementary(2, Field::Q, 0, 1);
        assert_eq!(
            e.apply(&basis(Field::Q, 2, 1)).unwrap(),
            basis(Field::Q, 2, 0)
        );
        assert!(e
            .apply(&basis(Field::Q, 2, 0))
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
    }

    #[test]
    fn basis_index_detects() {
        assert_eq!(basis_index(&basis(Field::Q, 3, 2)), Some(2));
        assert_eq!(basis_index(&[q(1), q(1)]), None);
        assert_eq!(basis_index(&[q(0), q(2)]), None);
    }
}
