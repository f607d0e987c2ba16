//! Matched pairs, doubles and Manin triples of (Reynolds) Lie algebras.

use crate::cert::{self, Certificate};
use crate::error::{ensure_dim, require, AlgError, Result};
use crate::exact::{Matrix, Vector};
use crate::lie::{coadjoint_rep, is_representation, BilinForm, BilinearMap, LieAlgebra, Representation};
use crate::reynolds::{
    induced_algebra, is_quadratic_reynolds, is_reynolds, reynolds_rep_residual, ReynoldsLieAlgebra, ReynoldsRep,
};

/// `(g, h; ρ, μ)` with `ρ: g → gl(h)` and `μ: h → gl(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchedPair {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub rho: Representation,
    pub mu: Representation,
}

impl MatchedPair {
    /// Shapes only; use [`is_matched_pair`] for the identities.
    pub fn new(g: LieAlgebra, h: LieAlgebra, rho: Representation, mu: Representation) -> Result<Self> {
        rho.ensure_on(&g)?;
        ensure_dim("rho module dimension", h.dim(), rho.module_dim())?;
        mu.ensure_on(&h)?;
        ensure_dim("mu module dimension", g.dim(), mu.module_dim())?;
        Ok(MatchedPair { g, h, rho, mu })
    }

    /// `ρ = 0`, `μ = 0`.
    pub fn trivial(g: LieAlgebra, h: LieAlgebra) -> Self {
        let rho = Representation::zero(g.dim(), h.dim());
        let mu = Representation::zero(h.dim(), g.dim());
        MatchedPair { g, h, rho, mu }
    }
}

/// Both representations, then the two compatibility identities over all
/// basis tuples `(x, ξ, η)` and `(ξ, x, y)`.
pub fn is_matched_pair(mp: &MatchedPair) -> Certificate {
    let (g, h, rho, mu) = (&mp.g, &mp.h, &mp.rho, &mp.mu);
    let (n, m) = (g.dim(), h.dim());
    let c_rho = is_representation(g, rho).expect("shape validated").renamed("rho");
    let c_mu = is_representation(h, mu).expect("shape validated").renamed("mu");
    let mp1 = cert::exhaustive("matched-pair", "eq:mp1", &cert::product(&[n, m, m]), |t| {
        let (x, xi, eta) = (g.e(t[0]), h.e(t[1]), h.e(t[2]));
        let rx = rho.get(t[0]);
        let mut s = rx.apply_unchecked(h.bracket_basis(t[1], t[2]));
        s = &s - &h.br(&rx.apply_unchecked(&xi), &eta);
        s = &s - &h.br(&xi, &rx.apply_unchecked(&eta));
        s = &s - &rho.apply(&mu.get(t[2]).apply_unchecked(&x), &xi);
        s = &s + &rho.apply(&mu.get(t[1]).apply_unchecked(&x), &eta);
        s.into_coords()
    });
    let mp2 = cert::exhaustive("matched-pair", "eq:mp2", &cert::product(&[m, n, n]), |t| {
        let (xi, x, y) = (h.e(t[0]), g.e(t[1]), g.e(t[2]));
        let mx = mu.get(t[0]);
        let mut s = mx.apply_unchecked(g.bracket_basis(t[1], t[2]));
        s = &s - &g.br(&mx.apply_unchecked(&x), &y);
        s = &s - &g.br(&x, &mx.apply_unchecked(&y));
        s = &s - &mu.apply(&rho.get(t[2]).apply_unchecked(&xi), &x);
        s = &s + &mu.apply(&rho.get(t[1]).apply_unchecked(&xi), &y);
        s.into_coords()
    });
    c_rho.and(c_mu).and(mp1).and(mp2).renamed("matched-pair")
}

/// `g ⋈ h` on `g ⊕ h` (g block first).
pub fn double(mp: &MatchedPair) -> Result<LieAlgebra> {
    require(is_matched_pair(mp))?;
    Ok(double_unchecked(mp))
}

pub(crate) fn double_unchecked(mp: &MatchedPair) -> LieAlgebra {
    let (n, m) = (mp.g.dim(), mp.h.dim());
    let br = BilinearMap::skew_from_fn(n + m, |i, j| match (i < n, j < n) {
        (true, true) => mp.g.bracket_basis(i, j).concat(&Vector::zeros(m)),
        // [x, ξ] = −μ(ξ)x + ρ(x)ξ
        (true, false) => {
            let a = j - n;
            (-&mp.mu.get(a).column(i)).concat(&mp.rho.get(i).column(a))
        }
        (false, false) => Vector::zeros(n).concat(mp.h.bracket_basis(i - n, j - n)),
        (false, true) => unreachable!("i < j"),
    });
    let mut basis = mp.g.basis().to_vec();
    basis.extend(mp.h.basis().iter().cloned());
    LieAlgebra::from_bilinear_unchecked(basis, br).expect("skew by construction")
}

/// A matched pair together with operators on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReynoldsMatchedPair {
    pub pair: MatchedPair,
    pub rg: Matrix,
    pub rh: Matrix,
}

impl ReynoldsMatchedPair {
    pub fn new(pair: MatchedPair, rg: Matrix, rh: Matrix) -> Result<Self> {
        ensure_dim("Rg rows", pair.g.dim(), rg.rows())?;
        ensure_dim("Rg cols", pair.g.dim(), rg.cols())?;
        ensure_dim("Rh rows", pair.h.dim(), rh.rows())?;
        ensure_dim("Rh cols", pair.h.dim(), rh.cols())?;
        Ok(ReynoldsMatchedPair { pair, rg, rh })
    }

    fn sides(&self) -> (ReynoldsRep, ReynoldsRep) {
        let p = &self.pair;
        let gr = ReynoldsLieAlgebra::new_unchecked(p.g.clone(), self.rg.clone()).expect("shape");
        let hr = ReynoldsLieAlgebra::new_unchecked(p.h.clone(), self.rh.clone()).expect("shape");
        let on_h = ReynoldsRep::new_unchecked(gr, p.rho.clone(), self.rh.clone()).expect("shape");
        let on_g = ReynoldsRep::new_unchecked(hr, p.mu.clone(), self.rg.clone()).expect("shape");
        (on_h, on_g)
    }
}

/// `ρ(Rx)(𝓡ξ) = 𝓡(ρ(x)𝓡ξ + ρ(Rx)ξ − ρ(Rx)𝓡ξ)` over `(x, ξ)` and the mirror
/// identity for `μ` over `(ξ, x)`.
pub fn reynolds_compatibility(rmp: &ReynoldsMatchedPair) -> Certificate {
    let (on_h, on_g) = rmp.sides();
    let (n, m) = (rmp.pair.g.dim(), rmp.pair.h.dim());
    let c1 = cert::exhaustive("reynolds-compatibility", "rey-1", &cert::grid(n, m), |t| {
        reynolds_rep_residual(&on_h, t[0], t[1]).into_coords()
    });
    let c2 = cert::exhaustive("reynolds-compatibility", "rey-2", &cert::grid(m, n), |t| {
        reynolds_rep_residual(&on_g, t[0], t[1]).into_coords()
    });
    c1.and(c2)
}

/// Matched pair, both operators Reynolds, and the two compatibilities.
pub fn is_reynolds_matched_pair(rmp: &ReynoldsMatchedPair) -> Certificate {
    let p = &rmp.pair;
    let mut c = is_matched_pair(p);
    c.absorb(is_reynolds(&p.g, &rmp.rg).expect("shape").renamed("reynolds-g"));
    c.absorb(is_reynolds(&p.h, &rmp.rh).expect("shape").renamed("reynolds-h"));
    c.absorb(reynolds_compatibility(rmp));
    c.renamed("reynolds-matched-pair")
}

/// `(g ⋈ h, R ⊕ 𝓡)`.
pub fn reynolds_double(rmp: &ReynoldsMatchedPair) -> Result<ReynoldsLieAlgebra> {
    require(is_reynolds_matched_pair(rmp))?;
    Ok(reynolds_double_unchecked(rmp))
}

pub(crate) fn reynolds_double_unchecked(rmp: &ReynoldsMatchedPair) -> ReynoldsLieAlgebra {
    let d = double_unchecked(&rmp.pair);
    ReynoldsLieAlgebra::new_unchecked(d, Matrix::block_diag(&rmp.rg, &rmp.rh)).expect("shape")
}

/// `(g_R, h_𝓡; ρ_(R,𝓡), μ_(R,𝓡))`.
pub fn induced_matched_pair(rmp: &ReynoldsMatchedPair) -> Result<MatchedPair> {
    require(is_reynolds_matched_pair(rmp))?;
    let p = &rmp.pair;
    let (rg, rh) = (&rmp.rg, &rmp.rh);
    let gr = induced_algebra(&ReynoldsLieAlgebra::new_unchecked(p.g.clone(), rg.clone())?);
    let hr = induced_algebra(&ReynoldsLieAlgebra::new_unchecked(p.h.clone(), rh.clone())?);
    // ρ_(R,𝓡)(x) = ρ(x)𝓡 + ρ(Rx) − ρ(Rx)𝓡
    let twist = |rep: &Representation, own: &Matrix, other: &Matrix, k: usize| {
        let a = rep.act(&own.column(k));
        rep.get(k)
            .mul_unchecked(other)
            .add(&a)
            .and_then(|s| s.sub(&a.mul_unchecked(other)))
            .expect("same shape")
    };
    let rho: Vec<Matrix> = (0..p.g.dim()).map(|k| twist(&p.rho, rg, rh, k)).collect();
    let mu: Vec<Matrix> = (0..p.h.dim()).map(|k| twist(&p.mu, rh, rg, k)).collect();
    MatchedPair::new(
        gr.algebra().clone(),
        hr.algebra().clone(),
        Representation::new(p.h.dim(), rho)?,
        Representation::new(p.g.dim(), mu)?,
    )
}

/// `((g,R), (g*,𝓡); ad*, 𝔞𝔡*)` where `𝔞𝔡*` is the coadjoint action of the
/// dual algebra on `g = (g*)*`.
pub fn canonical_pair(g: &LieAlgebra, r: &Matrix, dual: &LieAlgebra, rh: &Matrix) -> Result<ReynoldsMatchedPair> {
    ensure_dim("dual algebra dimension", g.dim(), dual.dim())?;
    let pair = MatchedPair::new(g.clone(), dual.clone(), coadjoint_rep(g), coadjoint_rep(dual))?;
    ReynoldsMatchedPair::new(pair, r.clone(), rh.clone())
}

/// A quadratic Reynolds Lie algebra split into two index blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManinTripleReynolds {
    pub ambient: ReynoldsLieAlgebra,
    pub form: BilinForm,
    pub part_g: Vec<usize>,
    pub part_h: Vec<usize>,
}

fn closed_under(part: &[usize], v: &Vector) -> Vec<crate::exact::Rat> {
    // coordinates outside the part; all zero when v lies in span(part)
    (0..v.dim())
        .filter(|k| !part.contains(k))
        .map(|k| v[k].clone())
        .collect()
}

/// Quadratic Reynolds, partition of the basis, closure of each part under
/// bracket and operator, and isotropy of each part.
pub fn is_manin_triple_reynolds(mt: &ManinTripleReynolds) -> Result<Certificate> {
    let a = &mt.ambient;
    let d = a.algebra();
    let mut c = is_quadratic_reynolds(a, &mt.form)?;
    let mut all: Vec<usize> = mt.part_g.iter().chain(&mt.part_h).copied().collect();
    all.sort_unstable();
    c.checked += 1;
    if all != (0..d.dim()).collect::<Vec<_>>() {
        c.fail("partition", &all, Vec::new());
    }
    for part in [&mt.part_g, &mt.part_h] {
        for (pi, &i) in part.iter().enumerate() {
            c.record("operator-closure", &[i], closed_under(part, &a.operator().column(i)));
            for &j in &part[pi + 1..] {
                c.record("subalgebra", &[i, j], closed_under(part, d.bracket_basis(i, j)));
            }
            for &j in part.iter() {
                c.record("isotropy", &[i, j], vec![mt.form.gram().get(i, j).clone()]);
            }
        }
    }
    Ok(c.renamed("manin-triple"))
}

/// Gram matrix of `S(x+ξ, y+η) = ξ(y) + η(x)`.
pub fn standard_pairing(n: usize) -> BilinForm {
    let mut gram = Matrix::zeros(2 * n, 2 * n);
    gram.paste(0, n, &Matrix::identity(n));
    gram.paste(n, 0, &Matrix::identity(n));
    BilinForm::new(gram).expect("symmetric")
}

/// `((g ⊕ g*, R − Rᵀ, S), (g,R), (g*,−Rᵀ))` from a dual-shaped Reynolds
/// matched pair.
pub fn matched_to_manin(rmp: &ReynoldsMatchedPair) -> Result<ManinTripleReynolds> {
    let p = &rmp.pair;
    let n = p.g.dim();
    if p.h.dim() != n {
        return Err(AlgError::input("h must have the dimension of g*"));
    }
    if p.rho != coadjoint_rep(&p.g) || p.mu != coadjoint_rep(&p.h) {
        return Err(AlgError::input(
            "actions must be the coadjoint actions against the canonical pairing",
        ));
    }
    if rmp.rh != rmp.rg.transpose().neg() {
        return Err(AlgError::input("operator on g* must be −Rᵀ"));
    }
    require(is_reynolds_matched_pair(rmp))?;
    let mt = ManinTripleReynolds {
        ambient: reynolds_double_unchecked(rmp),
        form: standard_pairing(n),
        part_g: (0..n).collect(),
        part_h: (n..2 * n).collect(),
    };
    require(is_manin_triple_reynolds(&mt)?)?;
    Ok(mt)
}

/// Extract `((g,R), (g*,𝓡); ρ, μ)` from a Manin triple in standard form.
pub fn manin_to_matched(mt: &ManinTripleReynolds) -> Result<ReynoldsMatchedPair> {
    let d = mt.ambient.algebra();
    if !d.dim().is_multiple_of(2) {
        return Err(AlgError::input("ambient dimension must be even"));
    }
    let n = d.dim() / 2;
    if mt.part_g != (0..n).collect::<Vec<_>>() || mt.part_h != (n..2 * n).collect::<Vec<_>>() {
        return Err(AlgError::input("parts must be the leading and trailing halves"));
    }
    if *mt.form.gram() != *standard_pairing(n).gram() {
        return Err(AlgError::input("form must be the standard pairing"));
    }
    require(is_manin_triple_reynolds(mt)?)?;
    let block =
        |i0: usize, j0: usize| BilinearMap::skew_from_fn(n, |i, j| d.bracket_basis(i0 + i, j0 + j).slice(i0, n));
    let basis = d.basis();
    let g = LieAlgebra::from_bilinear_unchecked(basis[..n].to_vec(), block(0, 0))?;
    let h = LieAlgebra::from_bilinear_unchecked(basis[n..].to_vec(), block(n, n))?;
    // [x, ξ] = −μ(ξ)x + ρ(x)ξ
    let rho: Vec<Matrix> = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = (0..n).map(|a| d.bracket_basis(i, n + a).slice(n, n)).collect();
            Matrix::from_columns(n, &cols).expect("square")
        })
        .collect();
    let mu: Vec<Matrix> = (0..n)
        .map(|a| {
            let cols: Vec<Vector> = (0..n).map(|i| -&d.bracket_basis(i, n + a).slice(0, n)).collect();
            Matrix::from_columns(n, &cols).expect("square")
        })
        .collect();
    let op = mt.ambient.operator();
    let pair = MatchedPair::new(g, h, Representation::new(n, rho)?, Representation::new(n, mu)?)?;
    ReynoldsMatchedPair::new(pair, op.submatrix(0, 0, n, n), op.submatrix(n, n, n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, H, X, Y};
    use crate::exact::int;
    use crate::lie::jacobi_check;
    use crate::testutil::fl_dual;

    fn fl_pair() -> ReynoldsMatchedPair {
        let b = catalog::sl2_b();
        canonical_pair(&catalog::sl2(), &b, &fl_dual(), &b.transpose().neg()).unwrap()
    }

    #[test]
    fn matched_pair_examples() {
        let t = MatchedPair::trivial(catalog::sl2(), LieAlgebra::abelian(2));
        assert!(is_matched_pair(&t).passed());
        assert!(is_matched_pair(&fl_pair().pair).passed());
        let g = catalog::sl2();
        let bad = MatchedPair::new(g.clone(), g.clone(), Representation::zero(3, 3), coadjoint_rep(&g)).unwrap();
        let c = is_matched_pair(&bad);
        let v = c.first.unwrap();
        assert_eq!(v.condition, "eq:mp2");
        // ξ = H: μ(H) = diag(0,−2,2) = ad(−H) is a derivation; ξ = X is the first
        // failure, at [H,X]: μ(X)(2X) = 4H vs [−Y,X] + [H,2H] = H.
        assert_eq!(v.indices, vec![X as i64, H as i64, X as i64]);
        assert_eq!(v.residual, vec![int(3), int(0), int(0)]);
    }

    #[test]
    fn double_examples() {
        let t = MatchedPair::trivial(catalog::sl2(), LieAlgebra::abelian(2));
        let d = double(&t).unwrap();
        assert!(d.bracket_basis(H, 3).is_zero());
        assert!(jacobi_check(&d).passed());
        let fl = double(&fl_pair().pair).unwrap();
        assert!(jacobi_check(&fl).passed());
        // [H, X*] = ad*_H X* − 𝔞𝔡*_{X*} H; ad*_H X* = −2X*, and 𝔞𝔡*_{X*} H = 2H
        // since ⟨𝔞𝔡*_{X*}H, H*⟩ = −⟨H, [X*,H*]⟩ = 2.
        assert_eq!(*fl.bracket_basis(H, 3 + X), Vector::from_ints(&[-2, 0, 0, 0, -2, 0]));
        let g = catalog::sl2();
        let co = MatchedPair::new(
            g.clone(),
            LieAlgebra::abelian(3),
            coadjoint_rep(&g),
            Representation::zero(3, 3),
        )
        .unwrap();
        let dc = double(&co).unwrap();
        assert_eq!(
            dc.bracket_basis(H, 3 + X).slice(3, 3),
            coadjoint_rep(&g).get(H).column(X)
        );
    }

    #[test]
    fn reynolds_matched_examples() {
        let a = catalog::sl2_reynolds();
        let t = ReynoldsMatchedPair::new(
            MatchedPair::trivial(a.algebra().clone(), a.algebra().clone()),
            a.operator().clone(),
            Matrix::identity(3),
        )
        .unwrap();
        assert!(is_reynolds_matched_pair(&t).passed());
        assert!(is_reynolds_matched_pair(&fl_pair()).passed());
    }

    #[test]
    fn plus_transpose_is_not_a_reynolds_matched_pair() {
        let b = catalog::sl2_b();
        let rmp = canonical_pair(&catalog::sl2(), &b, &fl_dual(), &b.transpose()).unwrap();
        assert!(!is_reynolds_matched_pair(&rmp).passed());
        let rc = reynolds_compatibility(&rmp);
        assert!(!rc.passed());
        assert_eq!(rc.first.unwrap().condition, "rey-1");
    }

    #[test]
    fn reynolds_double_examples() {
        let d = reynolds_double(&fl_pair()).unwrap();
        assert_eq!(d.dim(), 6);
        assert!(d.verify().passed());
        let b = catalog::sl2_b();
        assert_eq!(*d.operator(), Matrix::block_diag(&b, &b.transpose().neg()));
        let z = ReynoldsMatchedPair::new(
            MatchedPair::trivial(catalog::sl2(), catalog::sl2()),
            Matrix::zeros(3, 3),
            Matrix::zeros(3, 3),
        )
        .unwrap();
        assert!(reynolds_double(&z).unwrap().operator().is_zero());
    }

    #[test]
    fn induced_pair_coherence() {
        let rmp = fl_pair();
        let ind = induced_matched_pair(&rmp).unwrap();
        assert!(is_matched_pair(&ind).passed());
        let lhs = double(&ind).unwrap();
        let rhs = induced_algebra(&reynolds_double(&rmp).unwrap());
        assert!(lhs.same_brackets(rhs.algebra()));
        let a = catalog::sl2_reynolds();
        let id = ReynoldsMatchedPair::new(
            MatchedPair::new(
                a.algebra().clone(),
                LieAlgebra::abelian(3),
                coadjoint_rep(a.algebra()),
                Representation::zero(3, 3),
            )
            .unwrap(),
            Matrix::identity(3),
            Matrix::identity(3),
        )
        .unwrap();
        let same = induced_matched_pair(&id).unwrap();
        assert_eq!(same.rho, id.pair.rho);
    }

    #[test]
    fn manin_round_trip() {
        let rmp = fl_pair();
        let mt = matched_to_manin(&rmp).unwrap();
        assert!(is_manin_triple_reynolds(&mt).unwrap().passed());
        assert_eq!(manin_to_matched(&mt).unwrap(), rmp);
        let ab = canonical_pair(
            &LieAlgebra::abelian(2),
            &Matrix::zeros(2, 2),
            &LieAlgebra::abelian(2),
            &Matrix::zeros(2, 2),
        )
        .unwrap();
        assert!(matched_to_manin(&ab).is_ok());
        let mut bad = mt.clone();
        bad.part_g = vec![0, 1, 3];
        bad.part_h = vec![2, 4, 5];
        assert!(!is_manin_triple_reynolds(&bad).unwrap().passed());
    }

    #[test]
    fn manin_shape_errors() {
        let b = catalog::sl2_b();
        let rmp = canonical_pair(&catalog::sl2(), &b, &fl_dual(), &b.transpose()).unwrap();
        assert!(matches!(matched_to_manin(&rmp), Err(AlgError::Input(_))));
        let _ = Y;
    }
}
