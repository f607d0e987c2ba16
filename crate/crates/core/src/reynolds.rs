//! Reynolds operators, induced brackets and Reynolds representations.

use crate::cert::{self, Certificate};
use crate::error::{ensure_dim, require, Result};
use crate::exact::{Matrix, Vector};
use crate::lie::{
    self, adjoint_rep, dual_labels, dual_rep, is_quadratic, is_representation, jacobi_check, BilinForm, BilinearMap,
    LieAlgebra, Representation,
};

fn ensure_operator(g: &LieAlgebra, r: &Matrix) -> Result<()> {
    ensure_dim("operator rows", g.dim(), r.rows())?;
    ensure_dim("operator cols", g.dim(), r.cols())
}

/// `[Rx,Ry] = R([Rx,y] + [x,Ry] − [Rx,Ry])` for all basis pairs.
pub fn is_reynolds(g: &LieAlgebra, r: &Matrix) -> Result<Certificate> {
    ensure_operator(g, r)?;
    let rcols: Vec<Vector> = (0..g.dim()).map(|i| r.column(i)).collect();
    Ok(cert::exhaustive("reynolds", "reynolds", &cert::pairs(g.dim()), |t| {
        let (i, j) = (t[0], t[1]);
        let (rx, ry) = (&rcols[i], &rcols[j]);
        let rxry = g.br(rx, ry);
        let inner = &(&g.br(rx, &g.e(j)) + &g.br(&g.e(i), ry)) - &rxry;
        (&rxry - &r.apply_unchecked(&inner)).into_coords()
    }))
}

/// `[x,y]_R = [Rx,y] + [x,Ry] − [Rx,Ry]`.
pub fn induced_bracket(g: &LieAlgebra, r: &Matrix) -> Result<BilinearMap> {
    ensure_operator(g, r)?;
    let rcols: Vec<Vector> = (0..g.dim()).map(|i| r.column(i)).collect();
    Ok(BilinearMap::skew_from_fn(g.dim(), |i, j| {
        let (rx, ry) = (&rcols[i], &rcols[j]);
        &(&g.br(rx, &g.e(j)) + &g.br(&g.e(i), ry)) - &g.br(rx, ry)
    }))
}

/// A Lie algebra with a Reynolds operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReynoldsLieAlgebra {
    g: LieAlgebra,
    r: Matrix,
}

impl ReynoldsLieAlgebra {
    /// Verifies Jacobi and the Reynolds identity.
    pub fn new(g: LieAlgebra, r: Matrix) -> Result<Self> {
        require(jacobi_check(&g))?;
        require(is_reynolds(&g, &r)?)?;
        Ok(ReynoldsLieAlgebra { g, r })
    }

    /// Skips the identity checks; shapes are still validated.
    pub fn new_unchecked(g: LieAlgebra, r: Matrix) -> Result<Self> {
        ensure_operator(&g, &r)?;
        Ok(ReynoldsLieAlgebra { g, r })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn operator(&self) -> &Matrix {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// Full check: Jacobi and the Reynolds identity.
    pub fn verify(&self) -> Certificate {
        let c = jacobi_check(&self.g);
        c.and(is_reynolds(&self.g, &self.r).expect("shape validated"))
            .renamed("reynolds-lie-algebra")
    }

    /// `R x`.
    pub fn apply(&self, x: &Vector) -> Vector {
        self.r.apply_unchecked(x)
    }
}

/// The induced Lie algebra `(g, [·,·]_R, R)`.
pub fn induced_algebra(a: &ReynoldsLieAlgebra) -> ReynoldsLieAlgebra {
    let br = induced_bracket(&a.g, &a.r).expect("shape validated");
    let g = LieAlgebra::from_bilinear_unchecked(a.g.basis().to_vec(), br).expect("skew");
    ReynoldsLieAlgebra { g, r: a.r.clone() }
}

/// `R[x,y]_R = [Rx,Ry]` for all basis pairs.
pub fn induced_homomorphism_check(a: &ReynoldsLieAlgebra) -> Certificate {
    let br = induced_bracket(&a.g, &a.r).expect("shape validated");
    let g = &a.g;
    cert::exhaustive("induced-homomorphism", "homomorphism", &cert::pairs(g.dim()), |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = a.apply(br.get(i, j));
        let rhs = g.br(&a.r.column(i), &a.r.column(j));
        (&lhs - &rhs).into_coords()
    })
}

/// A representation `(W; T, ρ)` of a Reynolds Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReynoldsRep {
    base: ReynoldsLieAlgebra,
    rep: Representation,
    t: Matrix,
}

impl ReynoldsRep {
    pub fn new(base: ReynoldsLieAlgebra, rep: Representation, t: Matrix) -> Result<Self> {
        let rr = Self::new_unchecked(base, rep, t)?;
        require(is_reynolds_rep(&rr))?;
        Ok(rr)
    }

    pub fn new_unchecked(base: ReynoldsLieAlgebra, rep: Representation, t: Matrix) -> Result<Self> {
        rep.ensure_on(base.algebra())?;
        ensure_dim("module operator rows", rep.module_dim(), t.rows())?;
        ensure_dim("module operator cols", rep.module_dim(), t.cols())?;
        Ok(ReynoldsRep { base, rep, t })
    }

    /// `(g; R, ad)`.
    pub fn adjoint(base: &ReynoldsLieAlgebra) -> ReynoldsRep {
        ReynoldsRep {
            rep: adjoint_rep(base.algebra()),
            t: base.operator().clone(),
            base: base.clone(),
        }
    }

    /// `(g*; −Rᵀ, ad*)`.
    pub fn coadjoint(base: &ReynoldsLieAlgebra) -> ReynoldsRep {
        dual_reynolds_rep(&ReynoldsRep::adjoint(base))
    }

    /// `(W; T, 0)` on a module of the given dimension.
    pub fn zero(base: &ReynoldsLieAlgebra, t: Matrix) -> Result<ReynoldsRep> {
        let m = t.rows();
        ReynoldsRep::new_unchecked(base.clone(), Representation::zero(base.dim(), m), t)
    }

    pub fn base(&self) -> &ReynoldsLieAlgebra {
        &self.base
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn operator(&self) -> &Matrix {
        &self.t
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim()
    }
}

/// Residual of `ρ(Rx)(Tu) = T(ρ(x)Tu + ρ(Rx)u − ρ(Rx)Tu)` at basis `x`, `u`.
pub fn reynolds_rep_residual(rr: &ReynoldsRep, x: usize, u: usize) -> Vector {
    let rx = rr.base.operator().column(x);
    let uu = Vector::basis(rr.module_dim(), u);
    let t = &rr.t;
    let tu = t.apply_unchecked(&uu);
    let a = rr.rep.act(&rx);
    let lhs = a.apply_unchecked(&tu);
    let inner = &(&rr.rep.get(x).apply_unchecked(&tu) + &a.apply_unchecked(&uu)) - &lhs;
    &lhs - &t.apply_unchecked(&inner)
}

/// The underlying representation, then the Reynolds compatibility for all
/// basis `x`, `u`.
pub fn is_reynolds_rep(rr: &ReynoldsRep) -> Certificate {
    let g = rr.base.algebra();
    let mut c = is_representation(g, &rr.rep).expect("shape validated");
    let body = cert::exhaustive(
        "reynolds-rep",
        "reynolds-rep",
        &cert::grid(g.dim(), rr.module_dim()),
        |p| reynolds_rep_residual(rr, p[0], p[1]).into_coords(),
    );
    c.absorb(body);
    c.renamed("reynolds-rep")
}

/// `(W*; −Tᵀ, ρ*)`.
pub fn dual_reynolds_rep(rr: &ReynoldsRep) -> ReynoldsRep {
    ReynoldsRep {
        base: rr.base.clone(),
        rep: dual_rep(&rr.rep),
        t: rr.t.transpose().neg(),
    }
}

/// `g ⋉_ρ W` with operator `R ⊕ T`.
pub fn semidirect_reynolds(rr: &ReynoldsRep) -> Result<ReynoldsLieAlgebra> {
    require(is_reynolds_rep(rr))?;
    Ok(semidirect_reynolds_unchecked(rr))
}

pub(crate) fn semidirect_reynolds_unchecked(rr: &ReynoldsRep) -> ReynoldsLieAlgebra {
    let g = lie::semidirect_unchecked(rr.base.algebra(), &rr.rep);
    let op = Matrix::block_diag(rr.base.operator(), &rr.t);
    ReynoldsLieAlgebra { g, r: op }
}

/// Semidirect product with the coadjoint module labelled as the dual basis.
pub(crate) fn semidirect_with_dual_labels(rr: &ReynoldsRep) -> ReynoldsLieAlgebra {
    let mut out = semidirect_reynolds_unchecked(rr);
    let mut basis = rr.base.algebra().basis().to_vec();
    basis.extend(dual_labels(rr.base.algebra().basis()));
    out.g = out.g.with_basis(basis).expect("dimension matches");
    out
}

/// `(g, S)` quadratic and `S(Rx,y) + S(x,Ry) = 0` for all basis pairs.
/// A degenerate form fails under the condition `nondegenerate`, separately
/// from invariance failures.
pub fn is_quadratic_reynolds(a: &ReynoldsLieAlgebra, s: &BilinForm) -> Result<Certificate> {
    let g = a.algebra();
    let mut c = is_quadratic(g, s)?;
    let body = cert::exhaustive("rey-manin", "rey-manin", &cert::grid(g.dim(), g.dim()), |t| {
        let (x, y) = (g.e(t[0]), g.e(t[1]));
        vec![s.eval(&a.apply(&x), &y) + s.eval(&x, &a.apply(&y))]
    });
    c.absorb(body);
    Ok(c.renamed("quadratic-reynolds"))
}

/// `S♯ ad(e_i) = ad*(e_i) S♯` for every `i`, and `S♯ R = −Rᵀ S♯`.
pub fn check_ssharp_intertwiner(a: &ReynoldsLieAlgebra, s: &BilinForm) -> Result<Certificate> {
    let g = a.algebra();
    ensure_dim("form dimension", g.dim(), s.dim())?;
    let sh = lie::s_sharp(s)?;
    let co = lie::coadjoint_rep(g);
    let mut c = cert::exhaustive("ssharp-intertwiner", "intertwiner", &cert::singles(g.dim()), |t| {
        let i = t[0];
        sh.mul_unchecked(&g.ad(i)).residual(&co.get(i).mul_unchecked(&sh))
    });
    let lhs = sh.mul_unchecked(a.operator());
    let rhs = a.operator().transpose().neg().mul_unchecked(&sh);
    c.record("operator-dual", &[], lhs.residual(&rhs));
    Ok(c)
}
