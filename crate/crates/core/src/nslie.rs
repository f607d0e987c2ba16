//! NS-Lie algebras `(G, ⊲, ⊳)` and their representations.

use crate::cert::{self, Certificate};
use crate::error::{ensure_dim, require, AlgError, Result};
use crate::exact::{Matrix, Vector};
use crate::lie::{default_labels, BilinearMap, LieAlgebra};
use crate::reynolds::{is_reynolds_rep, ReynoldsLieAlgebra, ReynoldsRep};

/// Products `x ⊲ y` (no symmetry) and `x ⊳ y` (skew).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NSLieAlgebra {
    basis: Vec<String>,
    left: BilinearMap,
    wedge: BilinearMap,
}

impl NSLieAlgebra {
    /// Shapes and skewness of `⊳` are validated; the axioms are not.
    pub fn new_unchecked(basis: Vec<String>, left: BilinearMap, wedge: BilinearMap) -> Result<Self> {
        ensure_dim("NS basis labels", left.dim(), basis.len())?;
        ensure_dim("NS wedge table", left.dim(), wedge.dim())?;
        if !wedge.is_skew() {
            return Err(AlgError::input("the ⊳ product must be skew-symmetric"));
        }
        Ok(NSLieAlgebra { basis, left, wedge })
    }

    pub fn new(basis: Vec<String>, left: BilinearMap, wedge: BilinearMap) -> Result<Self> {
        let a = Self::new_unchecked(basis, left, wedge)?;
        require(is_nslie(&a))?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn left(&self) -> &BilinearMap {
        &self.left
    }

    pub fn wedge(&self) -> &BilinearMap {
        &self.wedge
    }

    fn tri(&self, x: &Vector, y: &Vector) -> Vector {
        self.left.apply_unchecked(x, y)
    }

    fn wed(&self, x: &Vector, y: &Vector) -> Vector {
        self.wedge.apply_unchecked(x, y)
    }

    /// `[x,y] = x⊲y − y⊲x + x⊳y`.
    pub fn commutator_table(&self) -> BilinearMap {
        self.left.commutator().add(&self.wedge).expect("same dimension")
    }

    fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

/// Both NS-Lie identities for every ordered basis triple.
pub fn is_nslie(a: &NSLieAlgebra) -> Certificate {
    let br = a.commutator_table();
    let tuples = cert::cube(a.dim());
    let first = cert::exhaustive("nslie", "ns-lie-1", &tuples, |t| {
        let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
        let mut s = a.tri(&a.tri(&x, &y), &z);
        s = &s - &a.tri(&x, &a.tri(&y, &z));
        s = &s - &a.tri(&a.tri(&y, &x), &z);
        s = &s + &a.tri(&y, &a.tri(&x, &z));
        s = &s + &a.tri(&a.wed(&x, &y), &z);
        s.into_coords()
    });
    let second = cert::exhaustive("nslie", "ns-lie-2", &tuples, |t| {
        let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
        let b = |u: &Vector, v: &Vector| br.apply_unchecked(u, v);
        let mut s = a.wed(&x, &b(&y, &z));
        s = &s + &a.wed(&y, &b(&z, &x));
        s = &s + &a.wed(&z, &b(&x, &y));
        s = &s + &a.tri(&x, &a.wed(&y, &z));
        s = &s + &a.tri(&y, &a.wed(&z, &x));
        s = &s + &a.tri(&z, &a.wed(&x, &y));
        s.into_coords()
    });
    first.and(second)
}

/// `x ⊲ y = [Rx, y]`, `x ⊳ y = −[Rx, Ry]`.
pub fn ns_from_reynolds(a: &ReynoldsLieAlgebra) -> NSLieAlgebra {
    let g = a.algebra();
    let n = g.dim();
    let rc: Vec<Vector> = (0..n).map(|i| a.operator().column(i)).collect();
    let left = BilinearMap::from_fn(n, |i, j| g.br(&rc[i], &g.e(j)));
    let wedge = BilinearMap::skew_from_fn(n, |i, j| -&g.br(&rc[i], &rc[j]));
    NSLieAlgebra {
        basis: g.basis().to_vec(),
        left,
        wedge,
    }
}

/// The Lie algebra `(G, [·,·]_{⊲,⊳})`.
pub fn ns_commutator(a: &NSLieAlgebra) -> LieAlgebra {
    LieAlgebra::from_bilinear_unchecked(a.basis.clone(), a.commutator_table())
        .expect("commutator plus skew product is skew")
}

/// Linear maps `ϱ, μ, ν : G → gl(W)`, one matrix per basis vector each.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NSRep {
    module_dim: usize,
    varrho: Vec<Matrix>,
    mu: Vec<Matrix>,
    nu: Vec<Matrix>,
}

fn act(ms: &[Matrix], m: usize, x: &Vector) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, c) in x.support() {
        out = out.add(&ms[i].scale(c)).expect("same shape");
    }
    out
}

impl NSRep {
    pub fn new(module_dim: usize, varrho: Vec<Matrix>, mu: Vec<Matrix>, nu: Vec<Matrix>) -> Result<Self> {
        ensure_dim("NS representation maps", varrho.len(), mu.len())?;
        ensure_dim("NS representation maps", varrho.len(), nu.len())?;
        for m in varrho.iter().chain(&mu).chain(&nu) {
            ensure_dim("NS representation matrix rows", module_dim, m.rows())?;
            ensure_dim("NS representation matrix cols", module_dim, m.cols())?;
        }
        Ok(NSRep {
            module_dim,
            varrho,
            mu,
            nu,
        })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(module_dim, module_dim); algebra_dim];
        NSRep {
            module_dim,
            varrho: z.clone(),
            mu: z.clone(),
            nu: z,
        }
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn varrho(&self) -> &[Matrix] {
        &self.varrho
    }

    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn nu(&self) -> &[Matrix] {
        &self.nu
    }

    pub fn with_nu(mut self, nu: Vec<Matrix>) -> Result<Self> {
        ensure_dim("NS representation maps", self.varrho.len(), nu.len())?;
        self.nu = nu;
        Ok(self)
    }
}

/// The three representation identities for every ordered basis pair.
pub fn is_ns_rep(a: &NSLieAlgebra, rep: &NSRep) -> Result<Certificate> {
    ensure_dim("NS representation algebra dimension", a.dim(), rep.varrho.len())?;
    let m = rep.module_dim;
    let br = a.commutator_table();
    let tuples = cert::grid(a.dim(), a.dim());
    let mul = |p: &Matrix, q: &Matrix| p.mul_unchecked(q);
    let sum = |terms: &[(i32, Matrix)]| {
        let mut out = Matrix::zeros(m, m);
        for (s, t) in terms {
            out = if *s > 0 { out.add(t) } else { out.sub(t) }.expect("same shape");
        }
        out
    };
    let (vr, mu, nu) = (&rep.varrho, &rep.mu, &rep.nu);
    let c1 = cert::exhaustive("ns-rep", "ns-rep-1", &tuples, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = act(mu, m, &a.wedge.get(i, j).clone());
        let rhs = sum(&[
            (1, mul(&mu[i], &mu[j])),
            (-1, mul(&mu[j], &mu[i])),
            (-1, act(mu, m, a.left.get(i, j))),
            (1, act(mu, m, a.left.get(j, i))),
        ]);
        lhs.residual(&rhs)
    });
    let c2 = cert::exhaustive("ns-rep", "ns-rep-2", &tuples, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = act(nu, m, a.left.get(i, j));
        let rhs = sum(&[
            (1, mul(&mu[i], &nu[j])),
            (-1, mul(&nu[j], &mu[i])),
            (1, mul(&nu[j], &nu[i])),
            (-1, mul(&nu[j], &vr[i])),
        ]);
        lhs.residual(&rhs)
    });
    let c3 = cert::exhaustive("ns-rep", "ns-rep-3", &tuples, |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = act(nu, m, a.wedge.get(i, j));
        let rhs = sum(&[
            (1, mul(&mu[j], &vr[i])),
            (-1, mul(&vr[i], &mu[j])),
            (1, mul(&vr[i], &nu[j])),
            (-1, mul(&vr[j], &nu[i])),
            (1, mul(&vr[j], &vr[i])),
            (-1, mul(&vr[i], &vr[j])),
            (1, mul(&vr[j], &mu[i])),
            (-1, mul(&mu[i], &vr[j])),
            (1, act(vr, m, br.get(i, j))),
        ]);
        lhs.residual(&rhs)
    });
    Ok(c1.and(c2).and(c3))
}

/// `ϱ = Ad` (left `⊳`), `μ` = left `⊲`, `ν` = right `⊲`.
pub fn regular_rep(a: &NSLieAlgebra) -> NSRep {
    let n = a.dim();
    NSRep {
        module_dim: n,
        varrho: (0..n).map(|i| a.wedge.left(i)).collect(),
        mu: (0..n).map(|i| a.left.left(i)).collect(),
        nu: (0..n).map(|i| a.left.right(i)).collect(),
    }
}

/// Semidirect product NS-Lie algebra on `G ⊕ W`.
pub fn ns_semidirect(a: &NSLieAlgebra, rep: &NSRep) -> Result<NSLieAlgebra> {
    require(is_ns_rep(a, rep)?)?;
    let n = a.dim();
    let m = rep.module_dim;
    let zero_w = Vector::zeros(m);
    let left = BilinearMap::from_fn(n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.left.get(i, j).concat(&zero_w),
        // x ⊲ v = μ(x)v
        (true, false) => Vector::zeros(n).concat(&rep.mu[i].column(j - n)),
        // u ⊲ y = ν(y)u
        (false, true) => Vector::zeros(n).concat(&rep.nu[j].column(i - n)),
        (false, false) => Vector::zeros(n + m),
    });
    let wedge = BilinearMap::skew_from_fn(n + m, |i, j| {
        if j < n {
            a.wedge.get(i, j).concat(&zero_w)
        } else if i < n {
            Vector::zeros(n).concat(&rep.varrho[i].column(j - n))
        } else {
            Vector::zeros(n + m)
        }
    });
    let mut basis = a.basis.clone();
    basis.extend(default_labels("w", m));
    Ok(NSLieAlgebra { basis, left, wedge })
}

/// `ϱ(x) = −ρ(Rx)T`, `μ(x) = ρ(Rx)`, `ν(x) = −ρ(x)T`, as a representation of
/// `ns_from_reynolds(base)`.
pub fn ns_rep_from_reynolds_rep(rr: &ReynoldsRep) -> Result<(NSLieAlgebra, NSRep)> {
    require(is_reynolds_rep(rr))?;
    let base = rr.base();
    let rho = rr.rep();
    let t = rr.operator();
    let n = base.dim();
    let rho_r: Vec<Matrix> = (0..n).map(|i| rho.act(&base.operator().column(i))).collect();
    let varrho = rho_r.iter().map(|a| a.mul_unchecked(t).neg()).collect();
    let nu = (0..n).map(|i| rho.get(i).mul_unchecked(t).neg()).collect();
    let rep = NSRep {
        module_dim: rr.module_dim(),
        varrho,
        mu: rho_r,
        nu,
    };
    Ok((ns_from_reynolds(base), rep))
}
