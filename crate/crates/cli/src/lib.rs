//! Shared plumbing for `algcheck`, `algbuild`, `algcat` and `algblock`.
//!
//! Exit codes: 0 when every certificate passes, 1 when at least one fails,
//! 2 when the input cannot be read or interpreted.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;
use serde_json::Value;

use reylie::bialgebra::{
    coboundary_cobracket, coboundary_conditions, cobracket_from_dual, double_quasitriangular, drinfeld_double,
    dual_from_cobracket, is_lie_bialgebra, is_lie_coalgebra, is_reynolds_bialgebra, is_reynolds_coalgebra,
    LieBialgebra, ReynoldsLieBialgebra,
};
use reylie::cybe::{
    canonical_r, descendent_on_w, is_cybe_solution, is_cybe_solution_reynolds, is_prelie, is_relative_rb,
    is_reynolds_prelie, rk_solution, PreLieAlgebra, RelativeRB, ReynoldsPreLie,
};
use reylie::io::{
    self, rep_from, rep_of, AlgebraDoc, BialgebraDoc, ManinDoc, MatchedDoc, MatrixDoc, NSRepDoc, RelDoc, TensorDoc,
};
use reylie::lie::{jacobi_check, LieAlgebra};
use reylie::matched::{
    double, induced_matched_pair, is_manin_triple_reynolds, is_matched_pair, is_reynolds_matched_pair, reynolds_double,
    ManinTripleReynolds, MatchedPair, ReynoldsMatchedPair,
};
use reylie::nslie::{is_ns_rep, is_nslie, ns_commutator, ns_from_reynolds, NSLieAlgebra, NSRep};
use reylie::reynolds::{induced_algebra, is_reynolds, is_reynolds_rep, semidirect_reynolds};
use reylie::rotabaxter::{
    descendent, dual_bracket_from_r, is_quadratic_rb, is_reynolds_on_qrb, is_rota_baxter, r_from_qrb, thm_fl_bialgebra,
    QuadraticRB, RotaBaxterAlg,
};
use reylie::{AlgError, Certificate, Report, Result, ReynoldsLieAlgebra};

pub const CHECK_KINDS: &[&str] = &[
    "jacobi",
    "reynolds",
    "reynolds-rep",
    "nslie",
    "ns-rep",
    "matched",
    "reynolds-matched",
    "manin",
    "coalgebra",
    "bialgebra",
    "reynolds-bialgebra",
    "rb",
    "quadratic-rb",
    "reynolds-on-qrb",
    "cybe",
    "reynolds-cybe",
    "relative-rb",
    "prelie",
    "reynolds-prelie",
];

pub const BUILD_KINDS: &[&str] = &[
    "induced",
    "descendent",
    "ns-from-reynolds",
    "semidirect",
    "double",
    "reynolds-double",
    "induced-matched",
    "drinfeld-double",
    "quasitriangular-double",
    "cobracket",
    "r-from-qrb",
    "thmfl",
    "rk",
    "canonical-r",
    "dual-from-r",
];

/// Flags shared by the commands.
#[derive(Args, Clone, Debug, Default)]
pub struct Common {
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Stop running checks after the first failing one.
    #[arg(long)]
    pub first_only: bool,
}

/// Side files merged into the main document.
#[derive(Args, Clone, Debug, Default)]
pub struct Attach {
    /// Operator file (`{"matrix": ...}`) used as the Reynolds operator.
    #[arg(long, alias = "reynolds", value_name = "FILE")]
    pub op: Option<PathBuf>,
    /// Tensor file (`{"entries": ...}`) used as `r`.
    #[arg(long, value_name = "FILE")]
    pub r: Option<PathBuf>,
    /// Form file (`{"gram": ...}`).
    #[arg(long, value_name = "FILE")]
    pub form: Option<PathBuf>,
}

/// The main input file(s) plus attachments, already parsed.
pub struct Inputs {
    pub files: Vec<PathBuf>,
    pub value: Value,
    op: Option<MatrixDoc>,
    r: Option<TensorDoc>,
    gram: Option<io::Rows>,
}

impl Inputs {
    pub fn load(files: &[PathBuf], attach: &Attach) -> Result<Self> {
        let first = files.first().ok_or_else(|| AlgError::input("no input file given"))?;
        let value = io::read_value(first)?;
        let op = attach.op.as_deref().map(io::read::<MatrixDoc>).transpose()?;
        let r = attach.r.as_deref().map(io::read::<TensorDoc>).transpose()?;
        let gram = match attach.form.as_deref() {
            Some(p) => io::read::<AlgebraDoc>(p)
                .ok()
                .and_then(|d| d.gram)
                .map(Some)
                .ok_or_else(|| AlgError::input(format!("{} has no `gram`", p.display())))?,
            None => None,
        };
        Ok(Inputs {
            files: files.to_vec(),
            value,
            op,
            r,
            gram,
        })
    }

    fn attach(&self, mut doc: AlgebraDoc) -> AlgebraDoc {
        if let Some(op) = &self.op {
            doc.reynolds = Some(op.clone());
        }
        if let Some(r) = &self.r {
            doc.r = Some(r.clone());
        }
        if let Some(g) = &self.gram {
            doc.gram = Some(g.clone());
        }
        doc
    }

    pub fn algebra_doc(&self) -> Result<AlgebraDoc> {
        Ok(self.attach(io::from_value(self.value.clone())?))
    }

    fn bialgebra_doc(&self) -> Result<BialgebraDoc> {
        let mut d: BialgebraDoc = io::from_value(self.value.clone())?;
        if let Some(op) = &self.op {
            d.reynolds = Some(op.clone());
        }
        Ok(d)
    }

    fn rel_doc(&self) -> Result<RelDoc> {
        let mut d: RelDoc = io::from_value(self.value.clone())?;
        if let Some(op) = &self.op {
            d.g.reynolds = Some(op.clone());
        }
        Ok(d)
    }

    fn source_names(&self) -> Vec<String> {
        self.files.iter().map(|p| p.display().to_string()).collect()
    }
}

fn lie(doc: &AlgebraDoc) -> Result<LieAlgebra> {
    doc.algebra()
}

fn bialgebra(doc: &BialgebraDoc) -> Result<LieBialgebra> {
    LieBialgebra::new_unchecked(doc.g.algebra()?, doc.dual.algebra()?)
}

fn bialgebra_op(doc: &BialgebraDoc) -> Result<reylie::Matrix> {
    doc.reynolds
        .as_ref()
        .ok_or_else(|| AlgError::input("bialgebra document has no `reynolds` field"))?
        .to_matrix()
}

fn matched(doc: &MatchedDoc) -> Result<MatchedPair> {
    let g = doc.g.algebra()?;
    let h = doc.h.algebra()?;
    MatchedPair::new(
        g.clone(),
        h.clone(),
        rep_from(h.dim(), &doc.rho)?,
        rep_from(g.dim(), &doc.mu)?,
    )
}

fn reynolds_matched(doc: &MatchedDoc) -> Result<ReynoldsMatchedPair> {
    let need = |m: &Option<MatrixDoc>, k: &str| {
        m.as_ref()
            .ok_or_else(|| AlgError::input(format!("matched-pair document has no `{k}` field")))?
            .to_matrix()
    };
    ReynoldsMatchedPair::new(matched(doc)?, need(&doc.rg, "Rg")?, need(&doc.rh, "Rh")?)
}

fn matched_doc(mp: &MatchedPair) -> MatchedDoc {
    MatchedDoc {
        g: AlgebraDoc::of(&mp.g),
        h: AlgebraDoc::of(&mp.h),
        rho: rep_of(&mp.rho),
        mu: rep_of(&mp.mu),
        rg: None,
        rh: None,
    }
}

fn manin(doc: &ManinDoc) -> Result<ManinTripleReynolds> {
    let ambient = doc.ambient.reynolds_algebra()?;
    let n = ambient.dim();
    if doc.split > n {
        return Err(AlgError::input("split exceeds the ambient dimension"));
    }
    Ok(ManinTripleReynolds {
        form: doc.ambient.form()?,
        ambient,
        part_g: (0..doc.split).collect(),
        part_h: (doc.split..n).collect(),
    })
}

fn ns(doc: &AlgebraDoc) -> Result<NSLieAlgebra> {
    NSLieAlgebra::new_unchecked(doc.labels()?, doc.left_table()?, doc.wedge_table()?)
}

fn ns_doc(a: &NSLieAlgebra) -> AlgebraDoc {
    let mut d = AlgebraDoc::of(&ns_commutator(a));
    d.set_left(a.left());
    d.set_wedge(a.wedge());
    d
}

fn prelie(doc: &AlgebraDoc) -> Result<PreLieAlgebra> {
    PreLieAlgebra::new_unchecked(doc.labels()?, doc.prod_table()?)
}

fn qrb(doc: &AlgebraDoc) -> Result<QuadraticRB> {
    let (b, lambda) = doc.rota_baxter()?;
    QuadraticRB::new_unchecked(RotaBaxterAlg::new_unchecked(lie(doc)?, b, lambda)?, doc.form()?)
}

type Lazy<'a> = (&'static str, Box<dyn FnOnce() -> Result<Certificate> + 'a>);

fn lazy<'a>(name: &'static str, f: impl FnOnce() -> Result<Certificate> + 'a) -> Lazy<'a> {
    (name, Box::new(f))
}

/// The certificates a check kind runs, in report order.
fn check_list(kind: &str, inp: &Inputs) -> Result<Vec<Lazy<'static>>> {
    let ok = |c: Certificate| -> Result<Certificate> { Ok(c) };
    Ok(match kind {
        "jacobi" => {
            let g = lie(&inp.algebra_doc()?)?;
            vec![lazy("jacobi", move || ok(jacobi_check(&g)))]
        }
        "reynolds" => {
            let d = inp.algebra_doc()?;
            let (g, r) = (lie(&d)?, d.operator()?);
            let g2 = g.clone();
            vec![
                lazy("jacobi", move || ok(jacobi_check(&g2))),
                lazy("reynolds", move || is_reynolds(&g, &r)),
            ]
        }
        "reynolds-rep" => {
            let rr = inp.rel_doc()?.reynolds_rep()?;
            let base = rr.base().clone();
            vec![
                lazy("reynolds", move || is_reynolds(base.algebra(), base.operator())),
                lazy("reynolds-rep", move || ok(is_reynolds_rep(&rr))),
            ]
        }
        "nslie" => {
            let a = ns(&inp.algebra_doc()?)?;
            vec![lazy("nslie", move || ok(is_nslie(&a)))]
        }
        "ns-rep" => {
            let d: NSRepDoc = io::from_value(inp.value.clone())?;
            let a = ns(&d.ns)?;
            let m = |ms: &[io::Rows]| -> Result<Vec<reylie::Matrix>> {
                Ok(rep_from(d.module_dim, ms)?.matrices().to_vec())
            };
            let rep = NSRep::new(d.module_dim, m(&d.varrho)?, m(&d.mu)?, m(&d.nu)?)?;
            let a2 = a.clone();
            vec![
                lazy("nslie", move || ok(is_nslie(&a2))),
                lazy("ns-rep", move || is_ns_rep(&a, &rep)),
            ]
        }
        "matched" => {
            let mp = matched(&io::from_value(inp.value.clone())?)?;
            vec![lazy("matched-pair", move || ok(is_matched_pair(&mp)))]
        }
        "reynolds-matched" => {
            let rmp = reynolds_matched(&io::from_value(inp.value.clone())?)?;
            vec![lazy("reynolds-matched-pair", move || {
                ok(is_reynolds_matched_pair(&rmp))
            })]
        }
        "manin" => {
            let mt = manin(&io::from_value(inp.value.clone())?)?;
            let d = mt.ambient.algebra().clone();
            vec![
                lazy("jacobi", move || ok(jacobi_check(&d))),
                lazy("manin-triple", move || is_manin_triple_reynolds(&mt)),
            ]
        }
        "coalgebra" => {
            // A bialgebra document, or an algebra document read as g*.
            let (dual, op) = if inp.value.get("dual").is_some() {
                let d = inp.bialgebra_doc()?;
                (d.dual.algebra()?, d.reynolds.map(|m| m.to_matrix()).transpose()?)
            } else {
                let d = inp.algebra_doc()?;
                (lie(&d)?, d.reynolds.map(|m| m.to_matrix()).transpose()?)
            };
            let deltas = cobracket_from_dual(&dual);
            let mut v = vec![];
            let d2 = deltas.clone();
            v.push(lazy("co-jacobi", move || is_lie_coalgebra(&d2)));
            if let Some(r) = op {
                v.push(lazy("reynolds-coalgebra", move || is_reynolds_coalgebra(&deltas, &r)));
            }
            v
        }
        "bialgebra" => {
            let b = bialgebra(&inp.bialgebra_doc()?)?;
            vec![lazy("lie-bialgebra", move || ok(is_lie_bialgebra(&b)))]
        }
        "reynolds-bialgebra" => {
            let d = inp.bialgebra_doc()?;
            let (b, r) = (bialgebra(&d)?, bialgebra_op(&d)?);
            vec![lazy("reynolds-bialgebra", move || is_reynolds_bialgebra(&b, &r))]
        }
        "rb" => {
            let d = inp.algebra_doc()?;
            let (g, (b, l)) = (lie(&d)?, d.rota_baxter()?);
            vec![lazy("rota-baxter", move || is_rota_baxter(&g, &b, &l))]
        }
        "quadratic-rb" => {
            let q = qrb(&inp.algebra_doc()?)?;
            vec![lazy("quadratic-rb", move || is_quadratic_rb(&q.rb, &q.s))]
        }
        "reynolds-on-qrb" => {
            let d = inp.algebra_doc()?;
            let (q, r) = (qrb(&d)?, d.operator()?);
            let q2 = q.clone();
            vec![
                lazy("quadratic-rb", move || is_quadratic_rb(&q2.rb, &q2.s)),
                lazy("reynolds-on-qrb", move || is_reynolds_on_qrb(&q, &r)),
            ]
        }
        "cybe" => {
            let d = inp.algebra_doc()?;
            let (g, r) = (lie(&d)?, d.tensor()?);
            vec![lazy("cybe", move || is_cybe_solution(&g, &r))]
        }
        "reynolds-cybe" => {
            let d = inp.algebra_doc()?;
            let (a, r) = (d.reynolds_algebra()?, d.tensor()?);
            vec![lazy("reynolds-cybe", move || is_cybe_solution_reynolds(&a, &r))]
        }
        "relative-rb" => {
            let d = inp.rel_doc()?;
            let rel = RelativeRB::new(d.reynolds_rep()?, d.k()?)?;
            vec![lazy("relative-rb", move || ok(is_relative_rb(&rel)))]
        }
        "prelie" => {
            let a = prelie(&inp.algebra_doc()?)?;
            vec![lazy("prelie", move || ok(is_prelie(&a)))]
        }
        "reynolds-prelie" => {
            let d = inp.algebra_doc()?;
            let (a, r) = (prelie(&d)?, d.operator()?);
            vec![lazy("reynolds-prelie", move || is_reynolds_prelie(&a, &r))]
        }
        other => return Err(unknown("check", other, CHECK_KINDS)),
    })
}

fn unknown(what: &str, kind: &str, known: &[&str]) -> AlgError {
    AlgError::input(format!(
        "unknown {what} kind `{kind}`; expected one of: {}",
        known.join(", ")
    ))
}

fn echo(cmd: &str, kind: &str, files: &[PathBuf], attach: &Attach) -> String {
    let mut parts = vec![cmd.to_string(), kind.to_string()];
    parts.extend(files.iter().map(|p| p.display().to_string()));
    for (flag, p) in [("--op", &attach.op), ("--r", &attach.r), ("--form", &attach.form)] {
        if let Some(p) = p {
            parts.push(format!("{flag} {}", p.display()));
        }
    }
    parts.join(" ")
}

pub fn run_check(kind: &str, files: &[PathBuf], attach: &Attach, common: &Common) -> Result<Report> {
    let start = Instant::now();
    let inp = Inputs::load(files, attach)?;
    let mut report = Report::new(echo("algcheck", kind, files, attach), common.first_only);
    for (name, f) in check_list(kind, &inp)? {
        report.run(name, f)?;
    }
    report.wall_time = Some(start.elapsed());
    Ok(report)
}

/// A build's output document and the certificates that validate it.
struct Built {
    doc: Value,
    checks: Vec<Certificate>,
}

fn built<T: serde::Serialize>(doc: &T, checks: Vec<Certificate>) -> Result<Built> {
    Ok(Built {
        doc: serde_json::to_value(doc)?,
        checks,
    })
}

fn reynolds_checks(a: &ReynoldsLieAlgebra) -> Result<Vec<Certificate>> {
    Ok(vec![jacobi_check(a.algebra()), is_reynolds(a.algebra(), a.operator())?])
}

fn with_r(a: &ReynoldsLieAlgebra, r: &reylie::Tensor2) -> AlgebraDoc {
    AlgebraDoc {
        r: Some(TensorDoc::of(r)),
        ..AlgebraDoc::of_reynolds(a)
    }
}

fn build(kind: &str, inp: &Inputs) -> Result<Built> {
    match kind {
        "induced" => {
            let d = inp.algebra_doc()?;
            let a = ReynoldsLieAlgebra::new(lie(&d)?, d.operator()?)?;
            let out = induced_algebra(&a);
            built(&AlgebraDoc::of_reynolds(&out), reynolds_checks(&out)?)
        }
        "descendent" => {
            if inp.value.get("rep").is_some() {
                let d = inp.rel_doc()?;
                let out = descendent_on_w(&RelativeRB::new(d.reynolds_rep()?, d.k()?)?)?;
                built(&AlgebraDoc::of_reynolds(&out), reynolds_checks(&out)?)
            } else {
                let d = inp.algebra_doc()?;
                let (b, l) = d.rota_baxter()?;
                let out = descendent(&RotaBaxterAlg::new_unchecked(lie(&d)?, b, l)?)?;
                built(&AlgebraDoc::of(&out), vec![jacobi_check(&out)])
            }
        }
        "ns-from-reynolds" => {
            let a = inp.algebra_doc()?.reynolds_algebra()?;
            let c = is_reynolds(a.algebra(), a.operator())?;
            require_passed(c)?;
            let out = ns_from_reynolds(&a);
            built(&ns_doc(&out), vec![is_nslie(&out), jacobi_check(&ns_commutator(&out))])
        }
        "semidirect" => {
            let out = semidirect_reynolds(&inp.rel_doc()?.reynolds_rep()?)?;
            built(&AlgebraDoc::of_reynolds(&out), reynolds_checks(&out)?)
        }
        "double" => {
            let out = double(&matched(&io::from_value(inp.value.clone())?)?)?;
            built(&AlgebraDoc::of(&out), vec![jacobi_check(&out)])
        }
        "reynolds-double" => {
            let out = reynolds_double(&reynolds_matched(&io::from_value(inp.value.clone())?)?)?;
            built(&AlgebraDoc::of_reynolds(&out), reynolds_checks(&out)?)
        }
        "induced-matched" => {
            let out = induced_matched_pair(&reynolds_matched(&io::from_value(inp.value.clone())?)?)?;
            built(&matched_doc(&out), vec![is_matched_pair(&out)])
        }
        "drinfeld-double" => {
            let d = inp.bialgebra_doc()?;
            let rb = ReynoldsLieBialgebra::new_unchecked(bialgebra(&d)?, bialgebra_op(&d)?)?;
            let out = drinfeld_double(&rb)?;
            built(&AlgebraDoc::of_reynolds(&out), reynolds_checks(&out)?)
        }
        "quasitriangular-double" => {
            let d = inp.bialgebra_doc()?;
            let rb = ReynoldsLieBialgebra::new_unchecked(bialgebra(&d)?, bialgebra_op(&d)?)?;
            let out = double_quasitriangular(&rb)?;
            let doc = BialgebraDoc {
                g: AlgebraDoc::of(out.bialg.g()),
                dual: AlgebraDoc::of(out.bialg.dual()),
                reynolds: Some(MatrixDoc::of(&out.r)),
            };
            built(&doc, vec![is_reynolds_bialgebra(&out.bialg, &out.r)?])
        }
        "cobracket" => {
            let d = inp.algebra_doc()?;
            let (g, r) = (lie(&d)?, d.tensor()?);
            let conditions = coboundary_conditions(&g, &r)?;
            let deltas = coboundary_cobracket(&g, &r)?;
            let dual = dual_from_cobracket(reylie::lie::default_labels("f", g.dim()), &deltas)?;
            let b = LieBialgebra::new_unchecked(g.clone(), dual)?;
            let doc = BialgebraDoc {
                g: AlgebraDoc::of(&g),
                dual: AlgebraDoc::of(b.dual()),
                reynolds: None,
            };
            built(&doc, vec![conditions, is_lie_bialgebra(&b)])
        }
        "r-from-qrb" => {
            let q = qrb(&inp.algebra_doc()?)?;
            let r = r_from_qrb(&q)?;
            let doc = AlgebraDoc {
                r: Some(TensorDoc::of(&r)),
                ..AlgebraDoc::of(&q.rb.l)
            };
            built(&doc, vec![is_cybe_solution(&q.rb.l, &r)?])
        }
        "thmfl" => {
            let d = inp.algebra_doc()?;
            let out = thm_fl_bialgebra(&qrb(&d)?, &d.operator()?)?;
            let doc = BialgebraDoc {
                g: AlgebraDoc::of(out.bialg.g()),
                dual: AlgebraDoc::of(out.bialg.dual()),
                reynolds: Some(MatrixDoc::of(&out.r)),
            };
            built(&doc, vec![is_reynolds_bialgebra(&out.bialg, &out.r)?])
        }
        "rk" => {
            let d = inp.rel_doc()?;
            let (a, r) = rk_solution(&RelativeRB::new(d.reynolds_rep()?, d.k()?)?)?;
            let mut checks = reynolds_checks(&a)?;
            checks.push(is_cybe_solution_reynolds(&a, &r)?);
            built(&with_r(&a, &r), checks)
        }
        "canonical-r" => {
            let d = inp.algebra_doc()?;
            let rp = ReynoldsPreLie::new(prelie(&d)?, d.operator()?)?;
            let (a, r) = canonical_r(&rp)?;
            let mut checks = reynolds_checks(&a)?;
            checks.push(is_cybe_solution_reynolds(&a, &r)?);
            built(&with_r(&a, &r), checks)
        }
        "dual-from-r" => {
            let d = inp.algebra_doc()?;
            let (g, r) = (lie(&d)?, d.tensor()?);
            let dual = dual_bracket_from_r(&g, &r)?;
            let b = LieBialgebra::new_unchecked(g.clone(), dual)?;
            let doc = BialgebraDoc {
                g: AlgebraDoc::of(&g),
                dual: AlgebraDoc::of(b.dual()),
                reynolds: None,
            };
            built(&doc, vec![jacobi_check(b.dual()), is_lie_bialgebra(&b)])
        }
        other => Err(unknown("build", other, BUILD_KINDS)),
    }
}

fn require_passed(c: Certificate) -> Result<()> {
    if c.passed() {
        Ok(())
    } else {
        Err(AlgError::Hypothesis(Box::new(c)))
    }
}

/// Run a build. A failed hypothesis becomes a failing certificate in the
/// report and no output is written.
pub fn run_build(
    kind: &str,
    files: &[PathBuf],
    attach: &Attach,
    out: Option<&Path>,
    common: &Common,
) -> Result<(Report, Option<Value>)> {
    let start = Instant::now();
    let inp = Inputs::load(files, attach)?;
    let mut report = Report::new(echo("algbuild", kind, files, attach), common.first_only);
    let doc = match build(kind, &inp) {
        Ok(b) => {
            for c in b.checks {
                report.push(c);
            }
            let doc = io::with_provenance(&b.doc, kind, &inp.source_names())?;
            if let Some(path) = out {
                std::fs::write(path, io::to_pretty(&doc))?;
            }
            Some(doc)
        }
        Err(AlgError::Hypothesis(c)) => {
            report.push(*c);
            None
        }
        Err(e) => return Err(e),
    };
    report.wall_time = Some(start.elapsed());
    Ok((report, doc))
}

/// Print the report and return the process exit code.
pub fn emit(report: &Report, common: &Common) -> i32 {
    if common.json {
        print!("{}", io::to_pretty(&report.to_json()));
    } else {
        print!("{}", report.to_text());
    }
    if let Some(t) = report.wall_time {
        eprintln!("wall time: {:.3}s", t.as_secs_f64());
    }
    if report.passed() {
        0
    } else {
        1
    }
}

/// Report an input error and return exit code 2.
pub fn input_error(e: &AlgError) -> i32 {
    eprintln!("error: {e}");
    2
}
