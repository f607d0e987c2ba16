//! Lie algebras by structure constants, representations and bilinear forms.

use num_traits::Zero;

use crate::cert::{self, Certificate};
use crate::error::{ensure_dim, require, AlgError, Result};
use crate::exact::{Matrix, Rat, Vector};

/// A bilinear product on a coordinate space, stored as a dense table of
/// basis products: `get(i, j) = e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    table: Vec<Vector>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap {
            dim,
            table: vec![Vector::zeros(dim); dim * dim],
        }
    }

    /// Tabulate `f(i, j) = e_i · e_j`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                debug_assert_eq!(v.dim(), dim);
                table.push(v);
            }
        }
        BilinearMap { dim, table }
    }

    /// Skew product from its values on `i < j`.
    pub fn skew_from_fn(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut m = BilinearMap::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                m.table[j * dim + i] = -&v;
                m.table[i * dim + j] = v;
            }
        }
        m
    }

    /// Accumulate `c · e_k` into `e_i · e_j`.
    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: &Rat) -> Result<()> {
        if i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(AlgError::input(format!(
                "structure constant ({i},{j};{k}) out of bounds for dimension {}",
                self.dim
            )));
        }
        self.table[i * self.dim + j][k] += c;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        ensure_dim("bilinear product (left)", self.dim, x.dim())?;
        ensure_dim("bilinear product (right)", self.dim, y.dim())?;
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                out.axpy(&(a * b), self.get(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ e_i · y`.
    pub fn left(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.get(i, j).clone()).collect();
        Matrix::from_columns(self.dim, &cols).expect("square table")
    }

    /// Matrix of `x ↦ x · e_j`.
    pub fn right(&self, j: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|i| self.get(i, j).clone()).collect();
        Matrix::from_columns(self.dim, &cols).expect("square table")
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| self.get(i, i).is_zero() && (i + 1..self.dim).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    /// Non-zero constants `(i, j, k, c)` for all ordered `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> + '_ {
        let n = self.dim;
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.support().map(move |(k, c)| (ij / n, ij % n, k, c)))
    }

    /// `x·y − y·x`.
    pub fn commutator(&self) -> BilinearMap {
        BilinearMap::skew_from_fn(self.dim, |i, j| self.get(i, j) - self.get(j, i))
    }

    pub fn add(&self, other: &BilinearMap) -> Result<BilinearMap> {
        ensure_dim("sum of products", self.dim, other.dim)?;
        Ok(BilinearMap::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn scale(&self, c: &Rat) -> BilinearMap {
        BilinearMap::from_fn(self.dim, |i, j| self.get(i, j).scale(c))
    }
}

/// `prefix0, prefix1, …`.
pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub(crate) fn dual_labels(basis: &[String]) -> Vec<String> {
    basis.iter().map(|b| format!("{b}*")).collect()
}

/// A Lie algebra given by structure constants in a fixed basis.
///
/// The bracket is skew by construction. Jacobi is enforced by [`LieAlgebra::new`]
/// and skipped by [`LieAlgebra::new_unchecked`], which exists so that raw data
/// can be handed to [`jacobi_check`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    basis: Vec<String>,
    br: BilinearMap,
}

impl LieAlgebra {
    /// Build from constants `[e_i, e_j] = Σ c e_k` given for `i < j` and
    /// verify Jacobi. Entries with `i > j` are read as `[e_i,e_j]` and stored
    /// negated on `(j, i)`.
    pub fn new(basis: Vec<String>, constants: impl IntoIterator<Item = (usize, usize, usize, Rat)>) -> Result<Self> {
        let g = Self::new_unchecked(basis, constants)?;
        require(jacobi_check(&g))?;
        Ok(g)
    }

    /// As [`LieAlgebra::new`] without the Jacobi check. Skewness still holds.
    pub fn new_unchecked(
        basis: Vec<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut upper = BilinearMap::zero(n);
        for (i, j, k, c) in constants {
            if i == j {
                if !c.is_zero() {
                    return Err(AlgError::input(format!(
                        "diagonal structure constant [e{i},e{i}] must vanish"
                    )));
                }
                continue;
            }
            if i < j {
                upper.add_entry(i, j, k, &c)?;
            } else {
                upper.add_entry(j, i, k, &-c)?;
            }
        }
        let br = BilinearMap::skew_from_fn(n, |i, j| upper.get(i, j).clone());
        Ok(LieAlgebra { basis, br })
    }

    /// Wrap a skew product table. Jacobi is not checked.
    pub fn from_bilinear_unchecked(basis: Vec<String>, br: BilinearMap) -> Result<Self> {
        ensure_dim("basis labels", br.dim(), basis.len())?;
        if !br.is_skew() {
            return Err(AlgError::input("bracket table is not skew-symmetric"));
        }
        Ok(LieAlgebra { basis, br })
    }

    /// Wrap a skew product table and verify Jacobi.
    pub fn from_bilinear(basis: Vec<String>, br: BilinearMap) -> Result<Self> {
        let g = Self::from_bilinear_unchecked(basis, br)?;
        require(jacobi_check(&g))?;
        Ok(g)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            basis: default_labels("e", n),
            br: BilinearMap::zero(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.br.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        ensure_dim("basis labels", self.dim(), basis.len())?;
        self.basis = basis;
        Ok(self)
    }

    pub fn table(&self) -> &BilinearMap {
        &self.br
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.br.apply(x, y)
    }

    pub(crate) fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.br.apply_unchecked(x, y)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        self.br.get(i, j)
    }

    /// Matrix of `ad(e_i)`: column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        self.br.left(i)
    }

    /// Matrix of `ad(x)`.
    pub fn ad_vec(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.br(x, &Vector::basis(n, j))).collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    /// Non-zero constants `c_{ij}^k` with `i < j`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> + '_ {
        self.br.entries().filter(|(i, j, _, _)| i < j)
    }

    pub fn is_abelian(&self) -> bool {
        self.br.is_zero()
    }

    /// Equality of brackets, ignoring basis labels.
    pub fn same_brackets(&self, other: &LieAlgebra) -> bool {
        self.br == other.br
    }

    pub fn vector(&self, coords: &[i64]) -> Result<Vector> {
        ensure_dim("vector", self.dim(), coords.len())?;
        Ok(Vector::from_ints(coords))
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

/// Cyclic Jacobi sum over every triple `i < j < k`.
pub fn jacobi_check(g: &LieAlgebra) -> Certificate {
    let n = g.dim();
    cert::exhaustive("jacobi", "jacobi", &cert::triples(n), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let ei = g.e(i);
        let ej = g.e(j);
        let ek = g.e(k);
        let mut s = g.br(g.bracket_basis(i, j), &ek);
        s = &s + &g.br(g.bracket_basis(j, k), &ei);
        s = &s + &g.br(g.bracket_basis(k, i), &ej);
        s.into_coords()
    })
}

/// A representation `ρ: g → gl(W)`, one matrix per basis vector of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    module_dim: usize,
    rho: Vec<Matrix>,
}

impl Representation {
    pub fn new(module_dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        for m in &rho {
            ensure_dim("representation matrix rows", module_dim, m.rows())?;
            ensure_dim("representation matrix cols", module_dim, m.cols())?;
        }
        Ok(Representation { module_dim, rho })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Representation {
            module_dim,
            rho: vec![Matrix::zeros(module_dim, module_dim); algebra_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(e_i)`.
    pub fn get(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`.
    pub fn act(&self, x: &Vector) -> Matrix {
        debug_assert_eq!(x.dim(), self.rho.len());
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in x.support() {
            out = out.add(&self.rho[i].scale(c)).expect("same shape");
        }
        out
    }

    /// `ρ(x)u`.
    pub fn apply(&self, x: &Vector, u: &Vector) -> Vector {
        let mut out = Vector::zeros(self.module_dim);
        for (i, c) in x.support() {
            out.axpy(c, &self.rho[i].apply_unchecked(u));
        }
        out
    }

    /// Check that the representation is defined on `g`.
    pub(crate) fn ensure_on(&self, g: &LieAlgebra) -> Result<()> {
        ensure_dim("representation algebra dimension", g.dim(), self.algebra_dim())
    }

    /// Precompose with a linear map `f` of the acting algebra: `x ↦ ρ(f x)`.
    pub fn pullback(&self, f: &Matrix) -> Result<Representation> {
        ensure_dim("pullback map", self.algebra_dim(), f.rows())?;
        let rho = (0..f.cols()).map(|j| self.act(&f.column(j))).collect();
        Ok(Representation {
            module_dim: self.module_dim,
            rho,
        })
    }
}

pub fn adjoint_rep(g: &LieAlgebra) -> Representation {
    Representation {
        module_dim: g.dim(),
        rho: (0..g.dim()).map(|i| g.ad(i)).collect(),
    }
}

/// `ad*(x) = −ad(x)ᵀ` on `g*`.
pub fn coadjoint_rep(g: &LieAlgebra) -> Representation {
    dual_rep(&adjoint_rep(g))
}

/// `ρ*(x) = −ρ(x)ᵀ` on `W*`.
pub fn dual_rep(rep: &Representation) -> Representation {
    Representation {
        module_dim: rep.module_dim,
        rho: rep.rho.iter().map(|m| m.transpose().neg()).collect(),
    }
}

/// `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` for all `i < j`.
pub fn is_representation(g: &LieAlgebra, rep: &Representation) -> Result<Certificate> {
    rep.ensure_on(g)?;
    Ok(cert::exhaustive(
        "representation",
        "representation",
        &cert::pairs(g.dim()),
        |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = rep.act(g.bracket_basis(i, j));
            let a = rep.get(i);
            let b = rep.get(j);
            let rhs = a.mul_unchecked(b).sub(&b.mul_unchecked(a)).expect("square");
            lhs.residual(&rhs)
        },
    ))
}

/// `g ⋉_ρ W` with basis `g` block first.
pub fn semidirect(g: &LieAlgebra, rep: &Representation) -> Result<LieAlgebra> {
    require(is_representation(g, rep)?)?;
    Ok(semidirect_unchecked(g, rep))
}

pub(crate) fn semidirect_unchecked(g: &LieAlgebra, rep: &Representation) -> LieAlgebra {
    let n = g.dim();
    let m = rep.module_dim();
    let br = BilinearMap::skew_from_fn(n + m, |i, j| {
        if j < n {
            g.bracket_basis(i, j).concat(&Vector::zeros(m))
        } else if i < n {
            // [e_i, w_j] = ρ(e_i) w_j
            Vector::zeros(n).concat(&rep.get(i).column(j - n))
        } else {
            Vector::zeros(n + m)
        }
    });
    let mut basis = g.basis().to_vec();
    basis.extend(default_labels("w", m));
    LieAlgebra { basis, br }
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinForm {
    gram: Matrix,
    nondegenerate: bool,
}

impl BilinForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(AlgError::input("Gram matrix is not square"));
        }
        if !gram.is_symmetric() {
            return Err(AlgError::input("Gram matrix is not symmetric"));
        }
        let nondegenerate = !gram.determinant()?.is_zero();
        Ok(BilinForm { gram, nondegenerate })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Rat {
        x.dot(&self.gram.apply_unchecked(y))
    }
}

/// `S([x,y],z) + S(y,[x,z]) = 0` for all basis triples.
pub fn is_invariant_form(g: &LieAlgebra, s: &BilinForm) -> Result<Certificate> {
    ensure_dim("form dimension", g.dim(), s.dim())?;
    Ok(cert::exhaustive(
        "invariant-form",
        "invariance",
        &cert::cube(g.dim()),
        |t| {
            let (x, y, z) = (g.e(t[0]), g.e(t[1]), g.e(t[2]));
            let v = s.eval(&g.br(&x, &y), &z) + s.eval(&y, &g.br(&x, &z));
            vec![v]
        },
    ))
}

/// Invariance plus nondegeneracy. A degenerate form is reported under the
/// condition `nondegenerate` with the determinant as residual.
pub fn is_quadratic(g: &LieAlgebra, s: &BilinForm) -> Result<Certificate> {
    let mut c = Certificate::new("quadratic");
    c.absorb(nondegeneracy(s)?);
    c.absorb(is_invariant_form(g, s)?);
    Ok(c)
}

pub(crate) fn nondegeneracy(s: &BilinForm) -> Result<Certificate> {
    let mut c = Certificate::new("nondegenerate");
    c.checked = 1;
    if !s.is_nondegenerate() {
        c.fail("nondegenerate", &[], vec![s.gram.determinant()?]);
    }
    Ok(c)
}

/// `S♯: g → g*`, `⟨S♯x, y⟩ = S(x, y)`.
pub fn s_sharp(s: &BilinForm) -> Result<Matrix> {
    if !s.is_nondegenerate() {
        return Err(AlgError::input("form is degenerate"));
    }
    // column i holds S(e_i, e_j) over j, which is the (symmetric) Gram matrix
    Ok(s.gram.clone())
}

/// `I_S = (S♯)⁻¹: g* → g`.
pub fn i_s(s: &BilinForm) -> Result<Matrix> {
    s.gram.inverse().ok_or_else(|| AlgError::input("form is degenerate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::int;

    const H: usize = 0;
    const X: usize = 1;
    const Y: usize = 2;

    #[test]
    fn sl2_brackets() {
        let g = catalog::sl2();
        assert_eq!(g.bracket(&g.e(H), &g.e(X)).unwrap(), Vector::from_ints(&[0, 2, 0]));
        assert_eq!(g.bracket(&g.e(X), &g.e(Y)).unwrap(), Vector::from_ints(&[1, 0, 0]));
        let x = Vector::from_ints(&[3, -1, 7]);
        assert!(g.bracket(&x, &x).unwrap().is_zero());
        assert!(g.bracket(&x, &Vector::from_ints(&[1])).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobi_check(&catalog::sl2()).passed());
        assert!(jacobi_check(&LieAlgebra::abelian(4)).passed());
        let bad = LieAlgebra::new_unchecked(
            default_labels("e", 3),
            [(0, 1, 2, int(1)), (0, 2, 1, int(1)), (1, 2, 1, int(1))],
        )
        .unwrap();
        let c = jacobi_check(&bad);
        assert!(!c.passed());
        let v = c.first.unwrap();
        assert_eq!(v.indices, vec![0, 1, 2]);
        // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = 0 - e2 + 0
        assert_eq!(v.residual, vec![int(0), int(0), int(-1)]);
        assert!(LieAlgebra::new(
            default_labels("e", 3),
            [(0, 1, 2, int(1)), (0, 2, 1, int(1)), (1, 2, 1, int(1))]
        )
        .is_err());
    }

    #[test]
    fn representation_examples() {
        let g = catalog::sl2();
        assert!(is_representation(&g, &adjoint_rep(&g)).unwrap().passed());
        assert!(is_representation(&g, &Representation::zero(3, 5)).unwrap().passed());
        let bad = Representation::new(2, vec![Matrix::identity(2), Matrix::zeros(2, 2), Matrix::zeros(2, 2)]).unwrap();
        let c = is_representation(&g, &bad).unwrap();
        assert!(!c.passed());
        // [H,X]=2X gives ρ(2X) − [Id,0] = 0, so the first failure is (X,Y).
        assert_eq!(c.first.unwrap().indices, vec![X as i64, Y as i64]);
    }

    #[test]
    fn adjoint_and_coadjoint() {
        let g = catalog::sl2();
        let ad_h = g.ad(H);
        assert_eq!(ad_h, Matrix::from_int_rows(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]));
        assert!(adjoint_rep(&LieAlgebra::abelian(3))
            .matrices()
            .iter()
            .all(Matrix::is_zero));
        let co = coadjoint_rep(&g);
        assert_eq!(co.get(H).column(X), Vector::from_ints(&[0, -2, 0]));
        assert!(is_representation(&g, &co).unwrap().passed());
    }

    #[test]
    fn dual_rep_examples() {
        let g = catalog::sl2();
        let z = Representation::zero(3, 2);
        assert_eq!(dual_rep(&z), z);
        assert_eq!(dual_rep(&adjoint_rep(&g)), coadjoint_rep(&g));
        let ad = adjoint_rep(&g);
        assert_eq!(dual_rep(&dual_rep(&ad)), ad);
    }

    #[test]
    fn semidirect_examples() {
        let g = catalog::sl2();
        let s = semidirect(&g, &adjoint_rep(&g)).unwrap();
        assert_eq!(s.dim(), 6);
        let v = s.bracket(&s.e(H), &s.e(3 + X)).unwrap();
        assert_eq!(v, Vector::from_ints(&[0, 0, 0, 0, 2, 0]));
        assert!(jacobi_check(&s).passed());
        let d = semidirect(&g, &Representation::zero(3, 2)).unwrap();
        assert!(d.bracket_basis(3, 4).is_zero());
        assert!(d.bracket_basis(H, 3).is_zero());
        let bad = Representation::new(1, vec![Matrix::identity(1), Matrix::zeros(1, 1), Matrix::zeros(1, 1)]).unwrap();
        assert!(semidirect(&g, &bad).is_err());
    }

    #[test]
    fn forms() {
        let g = catalog::sl2();
        let s = catalog::sl2_form();
        assert!(is_invariant_form(&g, &s).unwrap().passed());
        assert!(is_quadratic(&g, &s).unwrap().passed());
        let a = LieAlgebra::abelian(3);
        let id = BilinForm::new(Matrix::identity(3)).unwrap();
        assert!(is_quadratic(&a, &id).unwrap().passed());
        let c = is_invariant_form(&g, &id).unwrap();
        assert!(!c.passed());
        assert!(BilinForm::new(Matrix::from_int_rows(&[&[0, 1], &[0, 0]])).is_err());
        let deg = BilinForm::new(Matrix::zeros(3, 3)).unwrap();
        let q = is_quadratic(&a, &deg).unwrap();
        assert_eq!(q.first.unwrap().condition, "nondegenerate");
    }

    #[test]
    fn sharp_maps() {
        let s = catalog::sl2_form();
        let sh = s_sharp(&s).unwrap();
        assert_eq!(sh.column(H), Vector::from_ints(&[2, 0, 0]));
        assert_eq!(sh.column(X), Vector::from_ints(&[0, 0, 1]));
        assert_eq!(sh.column(Y), Vector::from_ints(&[0, 1, 0]));
        assert_eq!(i_s(&s).unwrap().mul(&sh).unwrap(), Matrix::identity(3));
        let id2 = BilinForm::new(Matrix::identity(2)).unwrap();
        assert_eq!(s_sharp(&id2).unwrap(), Matrix::identity(2));
        assert!(s_sharp(&BilinForm::new(Matrix::zeros(2, 2)).unwrap()).is_err());
    }

    #[test]
    fn sharp_intertwines_ad_and_coadjoint() {
        let g = catalog::sl2();
        let sh = s_sharp(&catalog::sl2_form()).unwrap();
        let co = coadjoint_rep(&g);
        for i in 0..3 {
            assert_eq!(sh.mul(&g.ad(i)).unwrap(), co.get(i).mul(&sh).unwrap());
        }
    }
}
