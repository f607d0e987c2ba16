//! Sparse order-2 and order-3 tensors over ℚ.
//!
//! Zeros are never stored and iteration is lexicographic in the index tuple,
//! so serialized output is canonical.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{ensure_dim, AlgError, Result};
use crate::exact::{Matrix, Rat};

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rat>, key: K, c: Rat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element `Σ t_ij e_i ⊗ f_j` of `V ⊗ W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim_left: usize,
    dim_right: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl Tensor2 {
    pub fn zero(dim_left: usize, dim_right: usize) -> Self {
        Tensor2 {
            dim_left,
            dim_right,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        dim_left: usize,
        dim_right: usize,
        entries: impl IntoIterator<Item = ((usize, usize), Rat)>,
    ) -> Result<Self> {
        let mut t = Tensor2::zero(dim_left, dim_right);
        for ((i, j), c) in entries {
            if i >= dim_left || j >= dim_right {
                return Err(AlgError::input(format!(
                    "tensor index ({i},{j}) out of bounds for {dim_left}x{dim_right}"
                )));
            }
            t.add_to(i, j, c);
        }
        Ok(t)
    }

    /// The tensor whose coefficient grid is `m` (entry `(i,j)` = `m[i][j]`).
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut t = Tensor2::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                t.add_to(i, j, m.get(i, j).clone());
            }
        }
        t
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim_left, self.dim_right);
        for (&(i, j), c) in &self.entries {
            m.set(i, j, c.clone());
        }
        m
    }

    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: Rat) {
        debug_assert!(i < self.dim_left && j < self.dim_right);
        accumulate(&mut self.entries, (i, j), c);
    }

    /// Non-zero entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim_left, self.dim_right);
        for (i, j, x) in self.entries() {
            out.add_to(i, j, x * c);
        }
        out
    }

    pub fn neg(&self) -> Tensor2 {
        let mut out = self.clone();
        for c in out.entries.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        ensure_dim("tensor sum (left)", self.dim_left, other.dim_left)?;
        ensure_dim("tensor sum (right)", self.dim_right, other.dim_right)?;
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.add_to(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        self.add(&other.neg())
    }

    /// `(f ⊗ g)(t)`: entry `(a,b) = Σ f[a][i] g[b][j] t[i][j]`.
    pub fn map(&self, f: &Matrix, g: &Matrix) -> Result<Tensor2> {
        ensure_dim("tensor map (left operator)", self.dim_left, f.cols())?;
        ensure_dim("tensor map (right operator)", self.dim_right, g.cols())?;
        let mut out = Tensor2::zero(f.rows(), g.rows());
        for (i, j, c) in self.entries() {
            for a in 0..f.rows() {
                let fa = f.get(a, i);
                if fa.is_zero() {
                    continue;
                }
                let fc = fa * c;
                for b in 0..g.rows() {
                    let gb = g.get(b, j);
                    if !gb.is_zero() {
                        out.add_to(a, b, &fc * gb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(A ⊗ Id + Id ⊗ A)(t)` for a square operator `A`.
    pub fn derivation_action(&self, a: &Matrix) -> Result<Tensor2> {
        let id_l = Matrix::identity(self.dim_left);
        let id_r = Matrix::identity(self.dim_right);
        self.map(a, &id_r)?.add(&self.map(&id_l, a)?)
    }

    /// The flip σ: `(i,j) ↦ (j,i)`.
    pub fn flip(&self) -> Result<Tensor2> {
        if self.dim_left != self.dim_right {
            return Err(AlgError::input(format!(
                "flip of non-square tensor {}x{}",
                self.dim_left, self.dim_right
            )));
        }
        let mut out = Tensor2::zero(self.dim_right, self.dim_left);
        for (i, j, c) in self.entries() {
            out.add_to(j, i, c.clone());
        }
        Ok(out)
    }

    pub fn is_skew(&self) -> bool {
        self.flip().map(|f| f == self.neg()).unwrap_or(false)
    }

    pub fn is_symmetric(&self) -> bool {
        self.flip().map(|f| &f == self).unwrap_or(false)
    }

    /// Coefficients flattened row-major; used as a certificate residual.
    pub fn dense(&self) -> Vec<Rat> {
        self.to_matrix().entries().to_vec()
    }
}

/// An element of `U ⊗ V ⊗ W`; only produced as a computation result.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    entries: BTreeMap<(usize, usize, usize), Rat>,
}

impl Tensor3 {
    pub fn zero(dims: [usize; 3]) -> Self {
        Tensor3 {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rat {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, c: Rat) {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        accumulate(&mut self.entries, (i, j, k), c);
    }

    pub fn merge(&mut self, other: &Tensor3) {
        for (&(i, j, k), c) in &other.entries {
            self.add_to(i, j, k, c.clone());
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> {
        self.entries.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cyclic permutation ε(a ⊗ b ⊗ c) = c ⊗ a ⊗ b.
    pub fn cycle(&self) -> Tensor3 {
        let mut out = Tensor3::zero([self.dims[2], self.dims[0], self.dims[1]]);
        for (a, b, c, x) in self.entries() {
            out.add_to(c, a, b, x.clone());
        }
        out
    }

    /// `(A ⊗ Id ⊗ Id + Id ⊗ A ⊗ Id + Id ⊗ Id ⊗ A)(t)` for a square `A`.
    pub fn derivation_action(&self, a: &Matrix) -> Result<Tensor3> {
        for d in self.dims {
            ensure_dim("order-3 derivation action", d, a.cols())?;
        }
        let mut out = Tensor3::zero(self.dims);
        for (i, j, k, c) in self.entries() {
            for p in 0..a.rows() {
                let x = a.get(p, i);
                if !x.is_zero() {
                    out.add_to(p, j, k, x * c);
                }
                let y = a.get(p, j);
                if !y.is_zero() {
                    out.add_to(i, p, k, y * c);
                }
                let z = a.get(p, k);
                if !z.is_zero() {
                    out.add_to(i, j, p, z * c);
                }
            }
        }
        Ok(out)
    }

    /// Coefficients flattened in index order; used as a certificate residual.
    pub fn dense(&self) -> Vec<Rat> {
        let [a, b, c] = self.dims;
        let mut out = vec![Rat::zero(); a * b * c];
        for (&(i, j, k), x) in &self.entries {
            out[(i * b + j) * c + k] = x.clone();
        }
        out
    }
}
