//! Named example structures.

use serde_json::Value;

use crate::bialgebra::{is_lie_bialgebra, LieBialgebra};
use crate::block::block_window_check;
use crate::cert::Certificate;
use crate::cybe::is_cybe_solution_reynolds;
use crate::error::{AlgError, Result};
use crate::exact::{int, parse_rat, rat, Matrix, Rat};
use crate::io::{rep_of, rows_of, AlgebraDoc, MatchedDoc, MatrixDoc, TensorDoc};
use crate::lie::{is_quadratic, jacobi_check, BilinForm, LieAlgebra};
use crate::matched::{is_matched_pair, MatchedPair};
use crate::reynolds::{is_reynolds, ReynoldsLieAlgebra};
use crate::rotabaxter::is_rota_baxter;
use crate::tensor::Tensor2;

pub const H: usize = 0;
pub const X: usize = 1;
pub const Y: usize = 2;

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `sl(2)` in the basis `(H, X, Y)`: `[H,X] = 2X`, `[H,Y] = −2Y`, `[X,Y] = H`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        labels(&["H", "X", "Y"]),
        [(H, X, X, int(2)), (H, Y, Y, int(-2)), (X, Y, H, int(1))],
    )
    .expect("sl2 satisfies Jacobi")
}

/// `B(H) = 2X`, `B(X) = 0`, `B(Y) = −H`.
pub fn sl2_b() -> Matrix {
    Matrix::from_int_rows(&[&[0, 0, -1], &[2, 0, 0], &[0, 0, 0]])
}

/// `S(H,H) = 2`, `S(X,Y) = S(Y,X) = 1`.
pub fn sl2_form() -> BilinForm {
    BilinForm::new(Matrix::from_int_rows(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]])).expect("symmetric")
}

/// `r = H⊗X − X⊗H`.
pub fn sl2_r() -> Tensor2 {
    Tensor2::from_entries(3, 3, [((H, X), int(1)), ((X, H), int(-1))]).expect("in bounds")
}

pub fn sl2_reynolds() -> ReynoldsLieAlgebra {
    ReynoldsLieAlgebra::new(sl2(), sl2_b()).expect("B is a Reynolds operator on sl2")
}

/// The dual bracket `[H*,X*] = ¼X*`, `[H*,Y*] = ¼Y*`, `[X*,Y*] = 0`, kept
/// exactly as stated.
pub fn sl2_km_dual() -> LieAlgebra {
    LieAlgebra::new_unchecked(
        labels(&["H*", "X*", "Y*"]),
        [(H, X, X, rat(1, 4)), (H, Y, Y, rat(1, 4))],
    )
    .expect("in bounds")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// Where an entry's data comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Data stated in the literature, kept exactly as stated.
    Stated(&'static str),
    /// Data built here from other entries or parameters.
    Derived(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(LieAlgebra),
    Operator(Matrix),
    Form(BilinForm),
    Tensor(Tensor2),
    /// `B(q)` on the window `[lo, hi]²`.
    BlockWindow {
        q: Rat,
        lo: i64,
        hi: i64,
    },
    Matched(MatchedPair),
}

/// A named structure together with the certificates of the properties it is
/// known to have, re-run at load time.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub payload: Payload,
    pub source: Source,
    pub checks: Vec<Certificate>,
}

impl CatalogEntry {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Certificate::passed)
    }

    /// The payload as a document. Block windows have no file form.
    pub fn to_json(&self) -> Result<Value> {
        Ok(match &self.payload {
            Payload::Algebra(g) => serde_json::to_value(AlgebraDoc::of(g))?,
            Payload::Operator(m) => serde_json::to_value(MatrixDoc::of(m))?,
            Payload::Form(f) => serde_json::to_value(AlgebraDoc {
                dim: f.dim(),
                gram: Some(rows_of(f.gram())),
                ..Default::default()
            })?,
            Payload::Tensor(t) => serde_json::to_value(TensorDoc::of(t))?,
            Payload::Matched(mp) => serde_json::to_value(MatchedDoc {
                g: AlgebraDoc::of(&mp.g),
                h: AlgebraDoc::of(&mp.h),
                rho: rep_of(&mp.rho),
                mu: rep_of(&mp.mu),
                rg: None,
                rh: None,
            })?,
            Payload::BlockWindow { .. } => {
                return Err(AlgError::input("block windows are parametric and have no file form"))
            }
        })
    }
}

fn entry(name: &str, payload: Payload, source: Source, checks: Vec<Certificate>) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        payload,
        source,
        checks,
    }
}

/// `name(a,b,…)` → `("name", ["a","b",…])`, splitting on top-level commas.
fn call(name: &str) -> Option<(&str, Vec<&str>)> {
    let open = name.find('(')?;
    let inner = name[open + 1..].strip_suffix(')')?;
    let mut args = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => {
                args.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    args.push(inner[start..].trim());
    Some((&name[..open], args))
}

fn parse_int(s: &str) -> Result<i64> {
    s.parse()
        .map_err(|_| AlgError::Parse(format!("expected an integer, found `{s}`")))
}

fn algebra_named(name: &str) -> Result<LieAlgebra> {
    match catalog(name)?.payload {
        Payload::Algebra(g) => Ok(g),
        _ => Err(AlgError::input(format!("`{name}` is not a Lie algebra entry"))),
    }
}

/// Look up `sl2`, `sl2.B`, `sl2.S`, `sl2.r`, `sl2.km_dual`, `block(q,lo,hi)`,
/// `abelian(n)` or `trivial_matched(g,h)`.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    let g = sl2();
    Ok(match name {
        "sl2" => entry(
            name,
            Payload::Algebra(g.clone()),
            Source::Stated("sl(2) with [H,X]=2X, [H,Y]=-2Y, [X,Y]=H"),
            vec![jacobi_check(&g)],
        ),
        "sl2.B" => {
            let b = sl2_b();
            entry(
                name,
                Payload::Operator(b.clone()),
                Source::Stated("B(H)=2X, B(X)=0, B(Y)=-H on sl(2)"),
                vec![is_rota_baxter(&g, &b, &int(0))?, is_reynolds(&g, &b)?],
            )
        }
        "sl2.S" => entry(
            name,
            Payload::Form(sl2_form()),
            Source::Stated("trace form S(H,H)=2, S(X,Y)=1 on sl(2)"),
            vec![is_quadratic(&g, &sl2_form())?],
        ),
        "sl2.r" => entry(
            name,
            Payload::Tensor(sl2_r()),
            Source::Stated("r = H⊗X - X⊗H on sl(2)"),
            vec![is_cybe_solution_reynolds(&sl2_reynolds(), &sl2_r())?],
        ),
        "sl2.km_dual" => {
            let d = sl2_km_dual();
            let verdict = is_lie_bialgebra(&LieBialgebra::new_unchecked(g, d.clone())?);
            entry(
                name,
                Payload::Algebra(d),
                Source::Stated("dual bracket [H*,X*]=X*/4, [H*,Y*]=Y*/4, [X*,Y*]=0"),
                vec![verdict],
            )
        }
        _ => {
            let (head, args) = call(name).ok_or_else(|| AlgError::input(format!("unknown catalog entry `{name}`")))?;
            match (head, args.as_slice()) {
                ("abelian", [n]) => {
                    let n = usize::try_from(parse_int(n)?).map_err(|_| AlgError::input("abelian(n) needs n >= 0"))?;
                    let a = abelian(n);
                    let c = jacobi_check(&a);
                    entry(
                        name,
                        Payload::Algebra(a),
                        Source::Derived("abelian Lie algebra"),
                        vec![c],
                    )
                }
                ("block", [q, lo, hi]) => {
                    let q = parse_rat(q)?;
                    let (lo, hi) = (parse_int(lo)?, parse_int(hi)?);
                    let c = block_window_check(&q, lo, hi, true)?;
                    entry(
                        name,
                        Payload::BlockWindow { q, lo, hi },
                        Source::Stated("Block algebra B(q) with R(L_{m,i}) = L_{m,i}/(m+i+1)"),
                        vec![c],
                    )
                }
                ("trivial_matched", [a, b]) => {
                    let mp = MatchedPair::trivial(algebra_named(a)?, algebra_named(b)?);
                    let c = is_matched_pair(&mp);
                    entry(
                        name,
                        Payload::Matched(mp),
                        Source::Stated("matched pair with rho = 0, mu = 0"),
                        vec![c],
                    )
                }
                _ => return Err(AlgError::input(format!("unknown catalog entry `{name}`"))),
            }
        }
    })
}

/// Names accepted by [`catalog`], with example parameters for the families.
pub const NAMES: &[&str] = &[
    "sl2",
    "sl2.B",
    "sl2.S",
    "sl2.r",
    "sl2.km_dual",
    "block(1/2,1,3)",
    "abelian(3)",
    "trivial_matched(sl2,abelian(2))",
];
