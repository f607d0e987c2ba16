//! Lie coalgebras, (Reynolds) Lie bialgebras, Drinfeld doubles and coboundary
//! bialgebras.
//!
//! A bialgebra is stored as the pair `(g, dual)` of structure-constant tables.
//! The cobracket is derived from `dual` by `⟨Δ(x), ξ⊗η⟩ = ⟨x, [ξ,η]*⟩`, so
//! `Δ(e_k)` has entry `(i,j)` equal to the `e_k*`-coefficient of `[e_i*, e_j*]`.

use crate::cert::{self, Certificate};
use crate::cybe::cybe_bracket;
use crate::error::{ensure_dim, require, AlgError, Result};
use crate::exact::{Matrix, Vector};
use crate::lie::{jacobi_check, BilinearMap, LieAlgebra};
use crate::reynolds::{is_reynolds, ReynoldsLieAlgebra};
use crate::tensor::{Tensor2, Tensor3};

/// `Δ(e_k)` for every basis vector of `g = (dual)*`.
pub fn cobracket_from_dual(dual: &LieAlgebra) -> Vec<Tensor2> {
    let n = dual.dim();
    let mut deltas = vec![Tensor2::zero(n, n); n];
    for (i, j, k, c) in dual.table().entries() {
        deltas[k].add_to(i, j, c.clone());
    }
    deltas
}

fn ensure_cobracket(deltas: &[Tensor2]) -> Result<usize> {
    let n = deltas.len();
    for (k, d) in deltas.iter().enumerate() {
        ensure_dim("cobracket tensor (left)", n, d.dim_left())?;
        ensure_dim("cobracket tensor (right)", n, d.dim_right())?;
        if !d.is_skew() {
            return Err(AlgError::input(format!("Δ(e_{k}) is not skew-symmetric")));
        }
    }
    Ok(n)
}

/// Inverse of [`cobracket_from_dual`].
pub fn dual_from_cobracket(basis: Vec<String>, deltas: &[Tensor2]) -> Result<LieAlgebra> {
    let n = ensure_cobracket(deltas)?;
    let br = BilinearMap::from_fn(n, |i, j| Vector::from_vec(deltas.iter().map(|d| d.get(i, j)).collect()));
    LieAlgebra::from_bilinear_unchecked(basis, br)
}

/// `(Id ⊗ Δ)Δ(e_k)`.
fn iterate(deltas: &[Tensor2], k: usize) -> Tensor3 {
    let n = deltas.len();
    let mut out = Tensor3::zero([n; 3]);
    for (i, j, c) in deltas[k].entries() {
        for (a, b, x) in deltas[j].entries() {
            out.add_to(i, a, b, c * x);
        }
    }
    out
}

/// Skewness (error if violated) and co-Jacobi per basis vector.
pub fn is_lie_coalgebra(deltas: &[Tensor2]) -> Result<Certificate> {
    let n = ensure_cobracket(deltas)?;
    Ok(cert::exhaustive("lie-coalgebra", "co-jacobi", &cert::singles(n), |t| {
        let it = iterate(deltas, t[0]);
        let once = it.cycle();
        let mut s = it.clone();
        s.merge(&once);
        s.merge(&once.cycle());
        s.dense()
    }))
}

/// `Δ(Rx) = Σ R_lk Δ(e_l)` for `x = e_k`.
fn delta_of(deltas: &[Tensor2], v: &Vector) -> Tensor2 {
    let n = deltas.len();
    let mut out = Tensor2::zero(n, n);
    for (l, c) in v.support() {
        out = out.add(&deltas[l].scale(c)).expect("same shape");
    }
    out
}

/// `(R⊗R)Δ = (R⊗Id + Id⊗R − R⊗R)ΔR` per basis vector.
pub fn is_reynolds_coalgebra(deltas: &[Tensor2], r: &Matrix) -> Result<Certificate> {
    let n = ensure_cobracket(deltas)?;
    ensure_dim("operator rows", n, r.rows())?;
    ensure_dim("operator cols", n, r.cols())?;
    let id = Matrix::identity(n);
    Ok(cert::exhaustive(
        "reynolds-coalgebra",
        "reynolds-coalgebra",
        &cert::singles(n),
        |t| {
            let k = t[0];
            let lhs = deltas[k].map(r, r).expect("shape");
            let dr = delta_of(deltas, &r.column(k));
            let rhs = dr
                .map(r, &id)
                .and_then(|a| a.add(&dr.map(&id, r)?))
                .and_then(|a| a.sub(&dr.map(r, r)?))
                .expect("shape");
            lhs.sub(&rhs).expect("shape").dense()
        },
    ))
}

/// `(g, g*)` as two bracket tables on dual coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieBialgebra {
    g: LieAlgebra,
    dual: LieAlgebra,
}

impl LieBialgebra {
    /// Dimensions only.
    pub fn new_unchecked(g: LieAlgebra, dual: LieAlgebra) -> Result<Self> {
        ensure_dim("dual algebra dimension", g.dim(), dual.dim())?;
        Ok(LieBialgebra { g, dual })
    }

    pub fn new(g: LieAlgebra, dual: LieAlgebra) -> Result<Self> {
        let b = Self::new_unchecked(g, dual)?;
        require(is_lie_bialgebra(&b))?;
        Ok(b)
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn dual(&self) -> &LieAlgebra {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn cobracket(&self) -> Vec<Tensor2> {
        cobracket_from_dual(&self.dual)
    }
}

/// `Δ[x,y] = ad_x·Δ(y) − ad_y·Δ(x)` for basis pairs `x < y`, where `ad_x·`
/// is `ad_x ⊗ Id + Id ⊗ ad_x`.
pub fn cocycle(g: &LieAlgebra, deltas: &[Tensor2]) -> Result<Certificate> {
    let n = ensure_cobracket(deltas)?;
    ensure_dim("cobracket count", g.dim(), n)?;
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    Ok(cert::exhaustive("cocycle", "cocycle", &cert::pairs(n), |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = delta_of(deltas, g.bracket_basis(i, j));
        let rhs = deltas[j]
            .derivation_action(&ads[i])
            .and_then(|a| a.sub(&deltas[i].derivation_action(&ads[j])?))
            .expect("shape");
        lhs.sub(&rhs).expect("shape").dense()
    }))
}

/// Jacobi on both sides (Jacobi of `dual` is co-Jacobi of `Δ`) and the
/// cocycle condition.
pub fn is_lie_bialgebra(b: &LieBialgebra) -> Certificate {
    let deltas = b.cobracket();
    jacobi_check(&b.g)
        .renamed("jacobi-g")
        .and(jacobi_check(&b.dual).renamed("jacobi-dual"))
        .and(cocycle(&b.g, &deltas).expect("skew by construction"))
        .renamed("lie-bialgebra")
}

/// A Lie bialgebra with an operator `R` on `g`; `−Rᵀ` acts on `g*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReynoldsLieBialgebra {
    pub bialg: LieBialgebra,
    pub r: Matrix,
}

impl ReynoldsLieBialgebra {
    pub fn new_unchecked(bialg: LieBialgebra, r: Matrix) -> Result<Self> {
        ensure_dim("operator rows", bialg.dim(), r.rows())?;
        ensure_dim("operator cols", bialg.dim(), r.cols())?;
        Ok(ReynoldsLieBialgebra { bialg, r })
    }

    pub fn new(bialg: LieBialgebra, r: Matrix) -> Result<Self> {
        let rb = Self::new_unchecked(bialg, r)?;
        require(is_reynolds_bialgebra(&rb.bialg, &rb.r)?)?;
        Ok(rb)
    }

    /// `−Rᵀ`.
    pub fn dual_operator(&self) -> Matrix {
        self.r.transpose().neg()
    }
}

/// The bialgebra axioms, `R` Reynolds on `g` and `−Rᵀ` Reynolds on `g*`.
pub fn is_reynolds_bialgebra(b: &LieBialgebra, r: &Matrix) -> Result<Certificate> {
    let on_g = is_reynolds(&b.g, r)?.renamed("reynolds-g");
    let on_dual = is_reynolds(&b.dual, &r.transpose().neg())?.renamed("reynolds-dual");
    Ok(is_lie_bialgebra(b).and(on_g).and(on_dual).renamed("reynolds-bialgebra"))
}

/// `(g ⋈ g*, R ⊕ −Rᵀ)` with `[e_i, ξ_a] = −𝔞𝔡*_{ξ_a} e_i + ad*_{e_i} ξ_a`.
pub fn drinfeld_double(rb: &ReynoldsLieBialgebra) -> Result<ReynoldsLieAlgebra> {
    require(is_reynolds_bialgebra(&rb.bialg, &rb.r)?)?;
    Ok(drinfeld_double_unchecked(rb))
}

fn drinfeld_double_unchecked(rb: &ReynoldsLieBialgebra) -> ReynoldsLieAlgebra {
    let (g, dual) = (&rb.bialg.g, &rb.bialg.dual);
    let n = g.dim();
    let br = BilinearMap::skew_from_fn(2 * n, |i, j| {
        let mut v = Vector::zeros(2 * n);
        if j < n {
            for (k, c) in g.bracket_basis(i, j).support() {
                v[k] = c.clone();
            }
        } else if i >= n {
            for (k, c) in dual.bracket_basis(i - n, j - n).support() {
                v[n + k] = c.clone();
            }
        } else {
            let a = j - n;
            // ⟨𝔞𝔡*_{ξ_a} e_i, ξ_b⟩ = −c*_{ab}^i and ⟨ad*_{e_i} ξ_a, e_b⟩ = −c_{ib}^a
            for b in 0..n {
                v[b] = dual.bracket_basis(a, b)[i].clone();
                v[n + b] = -g.bracket_basis(i, b)[a].clone();
            }
        }
        v
    });
    let mut basis = g.basis().to_vec();
    basis.extend(dual.basis().iter().cloned());
    let d = LieAlgebra::from_bilinear_unchecked(basis, br).expect("skew by construction");
    ReynoldsLieAlgebra::new_unchecked(d, Matrix::block_diag(&rb.r, &rb.dual_operator())).expect("shape")
}

/// `(𝔡, 𝔡*_r, R ⊕ −Rᵀ)` with `[ξ+x, η+y]_r = (−[ξ,η]*, [x,y])` on
/// `𝔡* = g* ⊕ g`.
pub fn double_quasitriangular(rb: &ReynoldsLieBialgebra) -> Result<ReynoldsLieBialgebra> {
    let d = drinfeld_double(rb)?;
    let (g, dual) = (&rb.bialg.g, &rb.bialg.dual);
    let n = g.dim();
    let br = BilinearMap::skew_from_fn(2 * n, |i, j| {
        if j < n {
            (-dual.bracket_basis(i, j)).concat(&Vector::zeros(n))
        } else if i >= n {
            Vector::zeros(n).concat(g.bracket_basis(i - n, j - n))
        } else {
            Vector::zeros(2 * n)
        }
    });
    let mut basis = dual.basis().to_vec();
    basis.extend(g.basis().iter().map(|s| format!("{s}*")));
    let dstar = LieAlgebra::from_bilinear_unchecked(basis, br)?;
    let out = ReynoldsLieBialgebra::new_unchecked(
        LieBialgebra::new_unchecked(d.algebra().clone(), dstar)?,
        d.operator().clone(),
    )?;
    require(is_reynolds_bialgebra(&out.bialg, &out.r)?)?;
    Ok(out)
}

/// `Δ(e_k) = (ad_k ⊗ Id + Id ⊗ ad_k) r`.
pub fn coboundary_cobracket(g: &LieAlgebra, r: &Tensor2) -> Result<Vec<Tensor2>> {
    ensure_dim("r (left)", g.dim(), r.dim_left())?;
    ensure_dim("r (right)", g.dim(), r.dim_right())?;
    Ok((0..g.dim())
        .map(|k| r.derivation_action(&g.ad(k)).expect("shape"))
        .collect())
}

/// Invariance of `r + σ(r)` and of `[[r,r]]` under every `ad_x`.
pub fn coboundary_conditions(g: &LieAlgebra, r: &Tensor2) -> Result<Certificate> {
    let n = g.dim();
    let sym = r.add(&r.flip()?)?;
    let cb = cybe_bracket(g, r)?;
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let singles = cert::singles(n);
    let c1 = cert::exhaustive("coboundary", "ad-invariant-symmetric-part", &singles, |t| {
        sym.derivation_action(&ads[t[0]]).expect("shape").dense()
    });
    let c2 = cert::exhaustive("coboundary", "ad-invariant-cybe", &singles, |t| {
        cb.derivation_action(&ads[t[0]]).expect("shape").dense()
    });
    Ok(c1.and(c2))
}

/// For `s = (R⊗Id + Id⊗R) r`, checks `(A_x ⊗ Id + Id ⊗ A_x) s = 0` with
/// `A_x = ad_{Rx} + R∘ad_{Rx} − R∘ad_x` for every basis `x`.
pub fn reynolds_coboundary_condition(a: &ReynoldsLieAlgebra, r: &Tensor2) -> Result<Certificate> {
    let g = a.algebra();
    let op = a.operator();
    let n = g.dim();
    ensure_dim("r (left)", n, r.dim_left())?;
    ensure_dim("r (right)", n, r.dim_right())?;
    let s = r.derivation_action(op)?;
    Ok(cert::exhaustive(
        "reynolds-coboundary",
        "reynolds-coboundary",
        &cert::singles(n),
        |t| {
            let ad_rx = g.ad_vec(&op.column(t[0]));
            let ax = ad_rx
                .add(&op.mul_unchecked(&ad_rx))
                .and_then(|m| m.sub(&op.mul_unchecked(&g.ad(t[0]))))
                .expect("shape");
            s.derivation_action(&ax).expect("shape").dense()
        },
    ))
}
