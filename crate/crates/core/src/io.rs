//! JSON documents. Rationals are strings `"p/q"` (or `"p"`); plain JSON
//! integers are accepted on input. Loaders never verify axioms, so a broken
//! file can still be handed to a check.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize};
use serde_json::Value;

use crate::error::{ensure_dim, AlgError, Result};
use crate::exact::{fmt_rat, parse_rat, Matrix, Rat, Vector};
use crate::lie::{default_labels, BilinForm, BilinearMap, LieAlgebra, Representation};
use crate::reynolds::{ReynoldsLieAlgebra, ReynoldsRep};
use crate::tensor::Tensor2;

/// A rational on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RatStr(pub String);

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) => Ok(RatStr(s)),
            Value::Number(n) if n.is_i64() => Ok(RatStr(n.to_string())),
            other => Err(serde::de::Error::custom(format!(
                "expected a rational string, found {other}"
            ))),
        }
    }
}

impl RatStr {
    fn of(r: &Rat) -> Self {
        RatStr(fmt_rat(r))
    }

    fn value(&self) -> Result<Rat> {
        parse_rat(&self.0)
    }
}

pub type Rows = Vec<Vec<RatStr>>;

pub fn rows_of(m: &Matrix) -> Rows {
    m.to_rows().iter().map(|r| r.iter().map(RatStr::of).collect()).collect()
}

fn matrix_of(rows: &Rows) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(RatStr::value).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

/// `{"matrix": rows}`, or a bare rows array on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixDoc {
    Wrapped { matrix: Rows },
    Bare(Rows),
}

impl MatrixDoc {
    pub fn of(m: &Matrix) -> Self {
        MatrixDoc::Wrapped { matrix: rows_of(m) }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        match self {
            MatrixDoc::Wrapped { matrix } | MatrixDoc::Bare(matrix) => matrix_of(matrix),
        }
    }
}

/// One product entry `e_i · e_j = Σ out[k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub i: usize,
    pub j: usize,
    pub out: BTreeMap<String, RatStr>,
}

fn out_of(v: &Vector) -> BTreeMap<String, RatStr> {
    v.support().map(|(k, c)| (k.to_string(), RatStr::of(c))).collect()
}

/// Full table, every non-zero `(i, j)`.
fn products_of(b: &BilinearMap) -> Vec<ProductDoc> {
    let n = b.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = b.get(i, j);
            if !v.is_zero() {
                out.push(ProductDoc { i, j, out: out_of(v) });
            }
        }
    }
    out
}

/// Skew table, only `i < j`.
fn brackets_of(b: &BilinearMap) -> Vec<ProductDoc> {
    products_of(b).into_iter().filter(|p| p.i < p.j).collect()
}

fn table_of(n: usize, ps: &[ProductDoc]) -> Result<BilinearMap> {
    let mut b = BilinearMap::zero(n);
    for p in ps {
        for (k, c) in &p.out {
            let k: usize = k
                .parse()
                .map_err(|_| AlgError::Parse(format!("bad basis index `{k}`")))?;
            b.add_entry(p.i, p.j, k, &c.value()?)?;
        }
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub i: usize,
    pub j: usize,
    pub c: RatStr,
}

/// A tensor in `V ⊗ W`. Dimensions default to the ambient algebra's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 2]>,
    pub entries: Vec<EntryDoc>,
}

impl TensorDoc {
    pub fn of(t: &Tensor2) -> Self {
        TensorDoc {
            dims: Some([t.dim_left(), t.dim_right()]),
            entries: t
                .entries()
                .map(|(i, j, c)| EntryDoc { i, j, c: RatStr::of(c) })
                .collect(),
        }
    }

    pub fn to_tensor(&self, default_dim: Option<usize>) -> Result<Tensor2> {
        let [a, b] = match (self.dims, default_dim) {
            (Some(d), _) => d,
            (None, Some(n)) => [n, n],
            (None, None) => return Err(AlgError::input("tensor without dims")),
        };
        let es = self
            .entries
            .iter()
            .map(|e| Ok(((e.i, e.j), e.c.value()?)))
            .collect::<Result<Vec<_>>>()?;
        Tensor2::from_entries(a, b, es)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbDoc {
    pub matrix: Rows,
    pub lambda: RatStr,
}

/// An algebra file with its optional attachments. The same shape carries NS
/// tables (`left`, `wedge`) and pre-Lie products (`prod`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<ProductDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reynolds: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rb: Option<RbDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<TensorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<ProductDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedge: Option<Vec<ProductDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prod: Option<Vec<ProductDoc>>,
}

impl AlgebraDoc {
    pub fn of(g: &LieAlgebra) -> Self {
        AlgebraDoc {
            dim: g.dim(),
            basis: Some(g.basis().to_vec()),
            brackets: brackets_of(g.table()),
            ..Default::default()
        }
    }

    pub fn of_reynolds(a: &ReynoldsLieAlgebra) -> Self {
        AlgebraDoc {
            reynolds: Some(MatrixDoc::of(a.operator())),
            ..Self::of(a.algebra())
        }
    }

    pub fn labels(&self) -> Result<Vec<String>> {
        match &self.basis {
            Some(b) => {
                ensure_dim("basis labels", self.dim, b.len())?;
                Ok(b.clone())
            }
            None => Ok(default_labels("e", self.dim)),
        }
    }

    /// Brackets listed with `i > j` are read as `[e_i, e_j]`.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        let mut cs = Vec::new();
        for p in &self.brackets {
            for (k, c) in &p.out {
                let k: usize = k
                    .parse()
                    .map_err(|_| AlgError::Parse(format!("bad basis index `{k}`")))?;
                cs.push((p.i, p.j, k, c.value()?));
            }
        }
        for &(i, j, k, _) in &cs {
            if i.max(j).max(k) >= self.dim {
                return Err(AlgError::input(format!(
                    "bracket entry ({i},{j})->{k} outside dimension {}",
                    self.dim
                )));
            }
        }
        LieAlgebra::new_unchecked(self.labels()?, cs)
    }

    fn field<'a, T>(&'a self, v: &'a Option<T>, name: &str) -> Result<&'a T> {
        v.as_ref()
            .ok_or_else(|| AlgError::input(format!("document has no `{name}` field")))
    }

    pub fn operator(&self) -> Result<Matrix> {
        self.field(&self.reynolds, "reynolds")?.to_matrix()
    }

    pub fn reynolds_algebra(&self) -> Result<ReynoldsLieAlgebra> {
        ReynoldsLieAlgebra::new_unchecked(self.algebra()?, self.operator()?)
    }

    pub fn form(&self) -> Result<BilinForm> {
        BilinForm::new(matrix_of(self.field(&self.gram, "gram")?)?)
    }

    pub fn rota_baxter(&self) -> Result<(Matrix, Rat)> {
        let rb = self.field(&self.rb, "rb")?;
        Ok((matrix_of(&rb.matrix)?, rb.lambda.value()?))
    }

    pub fn tensor(&self) -> Result<Tensor2> {
        self.field(&self.r, "r")?.to_tensor(Some(self.dim))
    }

    pub fn left_table(&self) -> Result<BilinearMap> {
        table_of(self.dim, self.field(&self.left, "left")?)
    }

    pub fn wedge_table(&self) -> Result<BilinearMap> {
        table_of(self.dim, self.field(&self.wedge, "wedge")?)
    }

    pub fn prod_table(&self) -> Result<BilinearMap> {
        table_of(self.dim, self.field(&self.prod, "prod")?)
    }

    pub fn set_left(&mut self, b: &BilinearMap) {
        self.left = Some(products_of(b));
    }

    pub fn set_wedge(&mut self, b: &BilinearMap) {
        self.wedge = Some(products_of(b));
    }

    pub fn set_prod(&mut self, b: &BilinearMap) {
        self.prod = Some(products_of(b));
    }
}

pub fn rep_of(rep: &Representation) -> Vec<Rows> {
    rep.matrices().iter().map(rows_of).collect()
}

pub fn rep_from(module_dim: usize, ms: &[Rows]) -> Result<Representation> {
    Representation::new(module_dim, ms.iter().map(matrix_of).collect::<Result<_>>()?)
}

/// `{"rho": [...], "T": <matrix>}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    pub module_dim: usize,
    pub rho: Vec<Rows>,
    #[serde(rename = "T")]
    pub t: MatrixDoc,
}

/// A Reynolds representation, or with `K` a relative Rota-Baxter operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelDoc {
    pub g: AlgebraDoc,
    pub rep: RepDoc,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<MatrixDoc>,
}

impl RelDoc {
    pub fn of(rr: &ReynoldsRep, k: Option<&Matrix>) -> Self {
        RelDoc {
            g: AlgebraDoc::of_reynolds(rr.base()),
            rep: RepDoc {
                module_dim: rr.module_dim(),
                rho: rep_of(rr.rep()),
                t: MatrixDoc::of(rr.operator()),
            },
            k: k.map(MatrixDoc::of),
        }
    }

    pub fn reynolds_rep(&self) -> Result<ReynoldsRep> {
        let base = self.g.reynolds_algebra()?;
        let rep = rep_from(self.rep.module_dim, &self.rep.rho)?;
        ReynoldsRep::new_unchecked(base, rep, self.rep.t.to_matrix()?)
    }

    pub fn k(&self) -> Result<Matrix> {
        self.k
            .as_ref()
            .ok_or_else(|| AlgError::input("document has no `K` field"))?
            .to_matrix()
    }
}

/// Keys `g, h, rho, mu` and optional `Rg, Rh`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedDoc {
    pub g: AlgebraDoc,
    pub h: AlgebraDoc,
    pub rho: Vec<Rows>,
    pub mu: Vec<Rows>,
    #[serde(rename = "Rg", default, skip_serializing_if = "Option::is_none")]
    pub rg: Option<MatrixDoc>,
    #[serde(rename = "Rh", default, skip_serializing_if = "Option::is_none")]
    pub rh: Option<MatrixDoc>,
}

/// `{ "g": <algebra>, "dual": <algebra>, "reynolds": <matrix, optional> }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraDoc {
    pub g: AlgebraDoc,
    pub dual: AlgebraDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reynolds: Option<MatrixDoc>,
}

/// The ambient Reynolds algebra carries `gram`; `split` is the size of the
/// first isotropic block (basis indices `0..split`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManinDoc {
    pub ambient: AlgebraDoc,
    pub split: usize,
}

/// An NS algebra (`left`, `wedge` tables) with `varrho, mu, nu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NSRepDoc {
    pub ns: AlgebraDoc,
    pub module_dim: usize,
    pub varrho: Vec<Rows>,
    pub mu: Vec<Rows>,
    pub nu: Vec<Rows>,
}

pub fn read_value(path: &Path) -> Result<Value> {
    let s = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&s)?)
}

pub fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    Ok(serde_json::from_value(v)?)
}

pub fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    from_value(read_value(path)?)
}

/// Serialize `doc` with a `provenance` record naming the construction and its
/// source files. Keys come out sorted, so output is byte-stable.
pub fn with_provenance<T: Serialize>(doc: &T, construction: &str, sources: &[String]) -> Result<Value> {
    let mut v = serde_json::to_value(doc)?;
    if let Value::Object(m) = &mut v {
        m.insert(
            "provenance".into(),
            serde_json::json!({ "construction": construction, "sources": sources }),
        );
    }
    Ok(v)
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
