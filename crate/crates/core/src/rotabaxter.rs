//! Rota-Baxter operators, quadratic Rota-Baxter Lie algebras and the
//! r-matrix pipeline to Reynolds Lie bialgebras.

use num_traits::Zero;

use crate::bialgebra::{LieBialgebra, ReynoldsLieBialgebra};
use crate::cert::{self, Certificate};
use crate::cybe::cybe_bracket;
use crate::error::{ensure_dim, require, AlgError, Result};
use crate::exact::{Matrix, Rat, Vector};
use crate::lie::{coadjoint_rep, dual_labels, i_s, is_quadratic, BilinForm, BilinearMap, LieAlgebra};
use crate::reynolds::is_reynolds;
use crate::tensor::Tensor2;

/// `(L, B, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotaBaxterAlg {
    pub l: LieAlgebra,
    pub b: Matrix,
    pub lambda: Rat,
}

impl RotaBaxterAlg {
    /// Shapes only.
    pub fn new_unchecked(l: LieAlgebra, b: Matrix, lambda: Rat) -> Result<Self> {
        ensure_dim("operator rows", l.dim(), b.rows())?;
        ensure_dim("operator cols", l.dim(), b.cols())?;
        Ok(RotaBaxterAlg { l, b, lambda })
    }

    pub fn new(l: LieAlgebra, b: Matrix, lambda: Rat) -> Result<Self> {
        let rb = Self::new_unchecked(l, b, lambda)?;
        require(is_rota_baxter(&rb.l, &rb.b, &rb.lambda)?)?;
        Ok(rb)
    }

    fn descendent_table(&self) -> BilinearMap {
        let g = &self.l;
        let bc: Vec<Vector> = (0..g.dim()).map(|i| self.b.column(i)).collect();
        BilinearMap::skew_from_fn(g.dim(), |i, j| {
            let mut v = &g.br(&bc[i], &g.e(j)) + &g.br(&g.e(i), &bc[j]);
            v.axpy(&self.lambda, g.bracket_basis(i, j));
            v
        })
    }
}

/// `[Bx,By] = B([Bx,y] + [x,By] + λ[x,y])` for basis pairs.
pub fn is_rota_baxter(l: &LieAlgebra, b: &Matrix, lambda: &Rat) -> Result<Certificate> {
    let rb = RotaBaxterAlg::new_unchecked(l.clone(), b.clone(), lambda.clone())?;
    let table = rb.descendent_table();
    let bc: Vec<Vector> = (0..l.dim()).map(|i| b.column(i)).collect();
    Ok(cert::exhaustive(
        "rota-baxter",
        "rota-baxter",
        &cert::pairs(l.dim()),
        |t| {
            let lhs = l.br(&bc[t[0]], &bc[t[1]]);
            (&lhs - &b.apply_unchecked(table.get(t[0], t[1]))).into_coords()
        },
    ))
}

/// `g_B` with `[x,y]_B = [Bx,y] + [x,By] + λ[x,y]`.
pub fn descendent(rb: &RotaBaxterAlg) -> Result<LieAlgebra> {
    require(is_rota_baxter(&rb.l, &rb.b, &rb.lambda)?)?;
    Ok(descendent_unchecked(rb))
}

fn descendent_unchecked(rb: &RotaBaxterAlg) -> LieAlgebra {
    LieAlgebra::from_bilinear_unchecked(rb.l.basis().to_vec(), rb.descendent_table()).expect("skew by construction")
}

/// `R` Reynolds on `g_B`. Adds a note saying whether `R∘B = B∘R`; the check
/// runs either way.
pub fn reynolds_descends(rb: &RotaBaxterAlg, r: &Matrix) -> Result<Certificate> {
    let d = descendent(rb)?;
    let mut c = is_reynolds(&d, r)?.renamed("reynolds-descends");
    let commute = r.mul(&rb.b)? == rb.b.mul(r)?;
    c.note(if commute {
        "R commutes with B"
    } else {
        "R does not commute with B"
    });
    Ok(c)
}

/// `(L, B, λ)` with a form `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticRB {
    pub rb: RotaBaxterAlg,
    pub s: BilinForm,
}

impl QuadraticRB {
    pub fn new_unchecked(rb: RotaBaxterAlg, s: BilinForm) -> Result<Self> {
        ensure_dim("form dimension", rb.l.dim(), s.dim())?;
        Ok(QuadraticRB { rb, s })
    }

    pub fn new(rb: RotaBaxterAlg, s: BilinForm) -> Result<Self> {
        let q = Self::new_unchecked(rb, s)?;
        require(is_quadratic_rb(&q.rb, &q.s)?)?;
        Ok(q)
    }

    /// `R^{*,S} = G⁻¹RᵀG`, defined by `S(Ra, b) = S(a, R^{*,S} b)`.
    pub fn s_adjoint(&self, r: &Matrix) -> Result<Matrix> {
        let g = self.s.gram();
        let gi = i_s(&self.s)?;
        gi.mul(&r.transpose())?.mul(g)
    }
}

/// Rota-Baxter, `(L,S)` quadratic, and
/// `S(x,By) + S(Bx,y) + λS(x,y) = 0` for all basis pairs.
pub fn is_quadratic_rb(rb: &RotaBaxterAlg, s: &BilinForm) -> Result<Certificate> {
    ensure_dim("form dimension", rb.l.dim(), s.dim())?;
    let l = &rb.l;
    let mut c = is_rota_baxter(l, &rb.b, &rb.lambda)?;
    c.absorb(is_quadratic(l, s)?);
    let bc: Vec<Vector> = (0..l.dim()).map(|i| rb.b.column(i)).collect();
    c.absorb(cert::exhaustive(
        "rb-form",
        "rb-manin",
        &cert::grid(l.dim(), l.dim()),
        |t| {
            let (x, y) = (l.e(t[0]), l.e(t[1]));
            let v = s.eval(&x, &bc[t[1]]) + s.eval(&bc[t[0]], &y) + &rb.lambda * s.eval(&x, &y);
            vec![v]
        },
    ));
    Ok(c.renamed("quadratic-rb"))
}

/// `r_+` as a matrix `g* → g`; `r_+(e_a*) = Σ_j r_aj e_j`.
pub fn r_plus(r: &Tensor2) -> Matrix {
    r.to_matrix().transpose()
}

/// The tensor with `r_+ = m`.
pub fn r_from_plus(m: &Matrix) -> Tensor2 {
    Tensor2::from_matrix(&m.transpose())
}

/// `r_− = −r_+ᵀ`.
pub fn r_minus(r: &Tensor2) -> Matrix {
    r_plus(r).transpose().neg()
}

/// `I = r_+ − r_−`.
pub fn i_operator(r: &Tensor2) -> Matrix {
    r_plus(r).sub(&r_minus(r)).expect("same shape")
}

/// `I ∘ ad*_x = ad_x ∘ I` for every basis `x`.
fn i_invariance(g: &LieAlgebra, r: &Tensor2) -> Result<Certificate> {
    ensure_dim("r (left)", g.dim(), r.dim_left())?;
    ensure_dim("r (right)", g.dim(), r.dim_right())?;
    let i = i_operator(r);
    let co = coadjoint_rep(g);
    Ok(cert::exhaustive(
        "i-invariance",
        "i-invariance",
        &cert::singles(g.dim()),
        |t| {
            let lhs = i.mul_unchecked(co.get(t[0]));
            let rhs = g.ad(t[0]).mul_unchecked(&i);
            lhs.residual(&rhs)
        },
    ))
}

/// `[ξ,η]_r = ad*_{r_+ξ} η − ad*_{r_−η} ξ` on `g*`. The invariance of the
/// symmetric part is checked first and reported as a hypothesis failure.
pub fn dual_bracket_from_r(g: &LieAlgebra, r: &Tensor2) -> Result<LieAlgebra> {
    require(i_invariance(g, r)?)?;
    let n = g.dim();
    let (rp, rm) = (r_plus(r), r_minus(r));
    let co = coadjoint_rep(g);
    let br = BilinearMap::from_fn(n, |a, b| {
        let (xa, xb) = (Vector::basis(n, a), Vector::basis(n, b));
        &co.apply(&rp.column(a), &xb) - &co.apply(&rm.column(b), &xa)
    });
    if !br.is_skew() {
        return Err(AlgError::input("r-bracket is not skew-symmetric"));
    }
    LieAlgebra::from_bilinear_unchecked(dual_labels(g.basis()), br)
}

/// Invariance of `I` and invertibility (condition `invertible`, residual
/// `det I` when it vanishes).
pub fn is_factorizable(g: &LieAlgebra, r: &Tensor2) -> Result<Certificate> {
    let mut c = i_invariance(g, r)?.renamed("factorizable");
    c.checked += 1;
    let det = i_operator(r).determinant()?;
    if det.is_zero() {
        c.fail("invertible", &[], vec![det]);
    }
    Ok(c)
}

/// `[[r,r]] = 0` and `[I_S⁻¹x, I_S⁻¹y]_r = I_S⁻¹[x,y]_B` over basis pairs, for
/// `r_+ = B∘I_S`.
pub fn converse_certificate(qrb: &QuadraticRB) -> Result<Certificate> {
    let mut c = is_quadratic_rb(&qrb.rb, &qrb.s)?;
    if !c.passed() {
        return Ok(c);
    }
    let l = &qrb.rb.l;
    let r = r_from_plus(&qrb.rb.b.mul(&i_s(&qrb.s)?)?);
    c.checked += 1;
    let cb = cybe_bracket(l, &r)?;
    if !cb.is_zero() {
        c.fail("cybe", &[], cb.dense());
    }
    let dual = dual_bracket_from_r(l, &r)?;
    let sharp = qrb.s.gram();
    let gb = descendent_unchecked(&qrb.rb);
    c.absorb(cert::exhaustive(
        "descendent-compatibility",
        "descendent-compatibility",
        &cert::pairs(l.dim()),
        |t| {
            let lhs = dual.br(&sharp.column(t[0]), &sharp.column(t[1]));
            (&lhs - &sharp.apply_unchecked(gb.bracket_basis(t[0], t[1]))).into_coords()
        },
    ));
    Ok(c.renamed("r-from-qrb"))
}

/// `r^{B,S}` with `r_+ = B∘I_S`, certified by [`converse_certificate`].
pub fn r_from_qrb(qrb: &QuadraticRB) -> Result<Tensor2> {
    require(converse_certificate(qrb)?)?;
    Ok(r_from_plus(&qrb.rb.b.mul(&i_s(&qrb.s)?)?))
}

/// Which adjoint realizes `R*` in `B∘R* = −R∘B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjoint {
    /// `R^{*,S} = G⁻¹RᵀG`, the adjoint inside the quadratic space.
    SAdjoint,
    /// The bare matrix transpose `Rᵀ`.
    DualTranspose,
}

/// [`is_reynolds_on_qrb_with`] using the S-adjoint.
pub fn is_reynolds_on_qrb(qrb: &QuadraticRB, r: &Matrix) -> Result<Certificate> {
    is_reynolds_on_qrb_with(qrb, r, Adjoint::SAdjoint)
}

/// `R` Reynolds on `L` and `B∘R* + R∘B = 0` column by column. A note records
/// whether `λ(R + R*) = 0`.
pub fn is_reynolds_on_qrb_with(qrb: &QuadraticRB, r: &Matrix, adj: Adjoint) -> Result<Certificate> {
    let l = &qrb.rb.l;
    let b = &qrb.rb.b;
    let rstar = match adj {
        Adjoint::SAdjoint => qrb.s_adjoint(r)?,
        Adjoint::DualTranspose => r.transpose(),
    };
    let mut c = is_reynolds(l, r)?;
    let sum = b.mul(&rstar)?.add(&r.mul(b)?)?;
    c.absorb(cert::exhaustive(
        "rb-compatibility",
        "rb-compatibility",
        &cert::singles(l.dim()),
        |t| sum.column(t[0]).into_coords(),
    ));
    let skew = r.add(&rstar)?.scale(&qrb.rb.lambda).is_zero();
    c.note(if skew {
        "lambda(R + R*) = 0"
    } else {
        "lambda(R + R*) != 0"
    });
    Ok(c.renamed("reynolds-on-qrb"))
}

/// `−R^{*,S}` Reynolds on `g_B`.
pub fn minus_rstar_on_descendent(qrb: &QuadraticRB, r: &Matrix) -> Result<Certificate> {
    let d = descendent(&qrb.rb)?;
    Ok(is_reynolds(&d, &qrb.s_adjoint(r)?.neg())?.renamed("minus-rstar-on-descendent"))
}

/// `(g, g*_{r^{B,S}}, R)`.
pub fn thm_fl_bialgebra(qrb: &QuadraticRB, r: &Matrix) -> Result<ReynoldsLieBialgebra> {
    require(is_reynolds_on_qrb(qrb, r)?)?;
    let rm = r_from_qrb(qrb)?;
    let dual = dual_bracket_from_r(&qrb.rb.l, &rm)?;
    let b = LieBialgebra::new_unchecked(qrb.rb.l.clone(), dual)?;
    ReynoldsLieBialgebra::new(b, r.clone())
}
