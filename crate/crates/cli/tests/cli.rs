use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

use reylie::catalog;
use reylie::cybe::prelie_from_relrb;
use reylie::io::{
    rep_of, rows_of, AlgebraDoc, BialgebraDoc, ManinDoc, MatchedDoc, MatrixDoc, NSRepDoc, RbDoc, RelDoc, TensorDoc,
};
use reylie::lie::LieAlgebra;
use reylie::matched::{canonical_pair, standard_pairing};
use reylie::nslie::{ns_from_reynolds, regular_rep};
use reylie::rotabaxter::r_plus;
use reylie::{int, Matrix, ReynoldsRep};

struct Fixtures {
    dir: TempDir,
}

impl Fixtures {
    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, v: impl serde::Serialize) {
        std::fs::write(self.path(name), serde_json::to_string_pretty(&v).unwrap()).unwrap();
    }
}

fn fl_dual() -> LieAlgebra {
    let labels = ["H*", "X*", "Y*"].iter().map(|s| s.to_string()).collect();
    LieAlgebra::new(labels, [(0, 1, 0, int(2)), (1, 2, 2, int(-2))]).unwrap()
}

fn fixtures() -> Fixtures {
    let f = Fixtures {
        dir: TempDir::new().unwrap(),
    };
    let g = catalog::sl2();
    let b = catalog::sl2_b();
    let a = catalog::sl2_reynolds();
    let form = rows_of(catalog::sl2_form().gram());
    f.write("sl2.json", AlgebraDoc::of(&g));
    f.write("B.json", MatrixDoc::of(&b));
    f.write("r.json", TensorDoc::of(&catalog::sl2_r()));
    f.write("sl2_reynolds.json", AlgebraDoc::of_reynolds(&a));
    f.write(
        "sl2_qrb.json",
        AlgebraDoc {
            rb: Some(RbDoc {
                matrix: rows_of(&b),
                lambda: serde_json::from_value(json!("0")).unwrap(),
            }),
            gram: Some(form.clone()),
            ..AlgebraDoc::of(&g)
        },
    );
    f.write(
        "broken.json",
        json!({"dim": 3, "brackets": [
            {"i": 0, "j": 1, "out": {"1": "1"}},
            {"i": 0, "j": 2, "out": {"2": "1"}},
            {"i": 1, "j": 2, "out": {"0": "1"}}
        ]}),
    );
    f.write("coadjoint.json", RelDoc::of(&ReynoldsRep::coadjoint(&a), None));
    let k = r_plus(&catalog::sl2_r());
    f.write("relrb.json", RelDoc::of(&ReynoldsRep::coadjoint(&a), Some(&k)));
    let rmp = canonical_pair(&g, &b, &fl_dual(), &b.transpose().neg()).unwrap();
    let mdoc = MatchedDoc {
        g: AlgebraDoc::of(&g),
        h: AlgebraDoc::of(&fl_dual()),
        rho: rep_of(&rmp.pair.rho),
        mu: rep_of(&rmp.pair.mu),
        rg: Some(MatrixDoc::of(&b)),
        rh: Some(MatrixDoc::of(&b.transpose().neg())),
    };
    f.write("matched.json", &mdoc);
    // the +Bᵀ variant is not a Reynolds matched pair
    f.write(
        "matched_plus.json",
        MatchedDoc {
            rh: Some(MatrixDoc::of(&b.transpose())),
            ..mdoc.clone()
        },
    );
    f.write(
        "fl_bialgebra.json",
        BialgebraDoc {
            g: AlgebraDoc::of(&g),
            dual: AlgebraDoc::of(&fl_dual()),
            reynolds: Some(MatrixDoc::of(&b)),
        },
    );
    let ns = ns_from_reynolds(&a);
    let mut ndoc = AlgebraDoc::of(&g);
    ndoc.set_left(ns.left());
    ndoc.set_wedge(ns.wedge());
    let reg = regular_rep(&ns);
    f.write(
        "nsrep.json",
        NSRepDoc {
            ns: ndoc.clone(),
            module_dim: 3,
            varrho: reg.varrho().iter().map(rows_of).collect(),
            mu: reg.mu().iter().map(rows_of).collect(),
            nu: reg.nu().iter().map(rows_of).collect(),
        },
    );
    f.write("ns.json", ndoc);
    let rel = reylie::cybe::RelativeRB::new(ReynoldsRep::coadjoint(&a), k).unwrap();
    let rp = prelie_from_relrb(&rel).unwrap();
    let mut pdoc = AlgebraDoc {
        dim: 3,
        reynolds: Some(MatrixDoc::of(&rp.r)),
        ..Default::default()
    };
    pdoc.set_prod(rp.a.product());
    f.write("prelie.json", pdoc);
    f
}

fn run(bin: &str, dir: &Path, args: &[&str]) -> Output {
    let exe = match bin {
        "algcheck" => env!("CARGO_BIN_EXE_algcheck"),
        "algbuild" => env!("CARGO_BIN_EXE_algbuild"),
        "algcat" => env!("CARGO_BIN_EXE_algcat"),
        "algblock" => env!("CARGO_BIN_EXE_algblock"),
        _ => unreachable!(),
    };
    Command::new(exe).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn reynolds_check_passes() {
    let f = fixtures();
    let o = run("algcheck", f.dir.path(), &["reynolds", "sl2.json", "--op", "B.json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(
        stdout(&o),
        "command: algcheck reynolds sl2.json --op B.json\n\
         check jacobi: pass (1 tuples checked)\n\
         check reynolds: pass (3 tuples checked)\n\
         verdict: PASS\n"
    );
}

#[test]
fn broken_jacobi_exits_one_with_triple() {
    let f = fixtures();
    let o = run("algcheck", f.dir.path(), &["jacobi", "broken.json"]);
    assert_eq!(code(&o), 1);
    // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = e0 + 0 + e0
    assert!(
        stdout(&o).contains("jacobi at (0,1,2): residual [2, 0, 0]"),
        "{}",
        stdout(&o)
    );
    let j = run("algcheck", f.dir.path(), &["jacobi", "broken.json", "--json"]);
    let v: Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["checks"][0]["first"]["indices"], json!([0, 1, 2]));
    assert_eq!(v["verdict"], "fail");
}

#[test]
fn first_only_skips_later_checks() {
    let f = fixtures();
    let o = run(
        "algcheck",
        f.dir.path(),
        &["reynolds", "broken.json", "--op", "B.json", "--first-only"],
    );
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not run: reynolds\n"));
}

#[test]
fn input_errors_exit_two() {
    let f = fixtures();
    assert_eq!(code(&run("algcheck", f.dir.path(), &["jacobi", "missing.json"])), 2);
    assert_eq!(code(&run("algcheck", f.dir.path(), &["reynolds", "sl2.json"])), 2);
    std::fs::write(f.path("bad.json"), "{\"dim\": 2, \"brackets\": [{\"i\":0}]}").unwrap();
    assert_eq!(code(&run("algcheck", f.dir.path(), &["jacobi", "bad.json"])), 2);
    assert_eq!(code(&run("algcat", f.dir.path(), &["nonsense"])), 2);
}

#[test]
fn reports_are_byte_stable() {
    let f = fixtures();
    for args in [
        vec!["reynolds-cybe", "sl2_reynolds.json", "--r", "r.json"],
        vec!["reynolds-matched", "matched_plus.json", "--json"],
    ] {
        let a = run("algcheck", f.dir.path(), &args);
        let b = run("algcheck", f.dir.path(), &args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn every_check_kind_runs() {
    let f = fixtures();
    let cases: &[(&[&str], i32)] = &[
        (&["jacobi", "sl2.json"], 0),
        (&["reynolds", "sl2_reynolds.json"], 0),
        (&["reynolds-rep", "coadjoint.json"], 0),
        (&["nslie", "ns.json"], 0),
        (&["ns-rep", "nsrep.json"], 0),
        (&["matched", "matched.json"], 0),
        (&["reynolds-matched", "matched.json"], 0),
        (&["reynolds-matched", "matched_plus.json"], 1),
        (&["coalgebra", "fl_bialgebra.json"], 0),
        (&["bialgebra", "fl_bialgebra.json"], 0),
        (&["reynolds-bialgebra", "fl_bialgebra.json"], 0),
        (&["rb", "sl2_qrb.json"], 0),
        (&["quadratic-rb", "sl2_qrb.json"], 0),
        (&["reynolds-on-qrb", "sl2_qrb.json", "--op", "B.json"], 0),
        (&["cybe", "sl2.json", "--r", "r.json"], 0),
        (&["reynolds-cybe", "sl2_reynolds.json", "--r", "r.json"], 0),
        (&["relative-rb", "relrb.json"], 0),
        (&["prelie", "prelie.json"], 0),
        (&["reynolds-prelie", "prelie.json"], 0),
    ];
    for (args, want) in cases {
        let o = run("algcheck", f.dir.path(), args);
        assert_eq!(
            code(&o),
            *want,
            "{args:?}: {}{}",
            stdout(&o),
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn manin_check_from_built_double() {
    let f = fixtures();
    let o = run(
        "algbuild",
        f.dir.path(),
        &["reynolds-double", "matched.json", "-o", "d.json"],
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let d: AlgebraDoc = serde_json::from_str(&std::fs::read_to_string(f.path("d.json")).unwrap()).unwrap();
    let doc = ManinDoc {
        ambient: AlgebraDoc {
            gram: Some(rows_of(standard_pairing(3).gram())),
            ..d.clone()
        },
        split: 3,
    };
    f.write("manin.json", &doc);
    assert_eq!(code(&run("algcheck", f.dir.path(), &["manin", "manin.json"])), 0);
    let bad = ManinDoc {
        ambient: AlgebraDoc {
            gram: Some(rows_of(&Matrix::identity(6))),
            ..d
        },
        split: 3,
    };
    f.write("manin_bad.json", &bad);
    let o = run("algcheck", f.dir.path(), &["manin", "manin_bad.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn thmfl_pipeline() {
    let f = fixtures();
    let o = run(
        "algbuild",
        f.dir.path(),
        &["thmfl", "sl2_qrb.json", "--reynolds", "B.json", "-o", "bialg.json"],
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run("algcheck", f.dir.path(), &["reynolds-bialgebra", "bialg.json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(f.path("bialg.json")).unwrap()).unwrap();
    assert_eq!(v["provenance"]["construction"], "thmfl");
    assert_eq!(v["provenance"]["sources"], json!(["sl2_qrb.json"]));
    // [H*,X*] = 2H*, [X*,Y*] = −2Y*
    assert_eq!(
        v["dual"]["brackets"],
        json!([{"i": 0, "j": 1, "out": {"0": "2"}}, {"i": 1, "j": 2, "out": {"2": "-2"}}])
    );
}

#[test]
fn every_build_kind_round_trips() {
    let f = fixtures();
    let cases: &[(&[&str], &str)] = &[
        (&["induced", "sl2_reynolds.json"], "reynolds"),
        (&["descendent", "sl2_qrb.json"], "jacobi"),
        (&["descendent", "relrb.json"], "reynolds"),
        (&["ns-from-reynolds", "sl2_reynolds.json"], "nslie"),
        (&["semidirect", "coadjoint.json"], "reynolds"),
        (&["double", "matched.json"], "jacobi"),
        (&["reynolds-double", "matched.json"], "reynolds"),
        (&["induced-matched", "matched.json"], "matched"),
        (&["drinfeld-double", "fl_bialgebra.json"], "reynolds"),
        (&["quasitriangular-double", "fl_bialgebra.json"], "reynolds-bialgebra"),
        (&["cobracket", "sl2.json", "--r", "r.json"], "bialgebra"),
        (&["r-from-qrb", "sl2_qrb.json"], "cybe"),
        (&["thmfl", "sl2_qrb.json", "--op", "B.json"], "reynolds-bialgebra"),
        (&["rk", "relrb.json"], "reynolds-cybe"),
        (&["canonical-r", "prelie.json"], "reynolds-cybe"),
        (&["dual-from-r", "sl2.json", "--r", "r.json"], "bialgebra"),
    ];
    for (i, (args, recheck)) in cases.iter().enumerate() {
        let out = format!("out{i}.json");
        let mut a: Vec<&str> = args.to_vec();
        a.extend(["-o", &out]);
        let o = run("algbuild", f.dir.path(), &a);
        assert_eq!(
            code(&o),
            0,
            "{args:?}: {}{}",
            stdout(&o),
            String::from_utf8_lossy(&o.stderr)
        );
        let o = run("algcheck", f.dir.path(), &[recheck, &out]);
        assert_eq!(code(&o), 0, "{args:?} -> {recheck}: {}", stdout(&o));
        // rebuilding gives the same bytes
        let first = std::fs::read(f.path(&out)).unwrap();
        run("algbuild", f.dir.path(), &a);
        assert_eq!(first, std::fs::read(f.path(&out)).unwrap());
    }
}

#[test]
fn failed_hypothesis_is_a_certificate() {
    let f = fixtures();
    let o = run(
        "algbuild",
        f.dir.path(),
        &["reynolds-double", "matched_plus.json", "-o", "x.json"],
    );
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("rey-1"), "{}", stdout(&o));
    assert!(!f.path("x.json").exists());
}

#[test]
fn catalog_and_block_commands() {
    let f = fixtures();
    let o = run("algcat", f.dir.path(), &["sl2.km_dual", "-o", "km.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("check lie-bialgebra: pass"));
    let km: Value = serde_json::from_str(&std::fs::read_to_string(f.path("km.json")).unwrap()).unwrap();
    assert_eq!(km["brackets"][0]["out"], json!({"1": "1/4"}));
    assert_eq!(code(&run("algcat", f.dir.path(), &["block(2,1,2)"])), 0);
    let o = run("algblock", f.dir.path(), &["--q", "1/2", "--lo", "1", "--hi", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("check block-window: pass (162 tuples checked)"));
    assert_eq!(
        code(&run(
            "algblock",
            f.dir.path(),
            &["--q", "-3", "--lo", "-3", "--hi", "3"]
        )),
        2
    );
    let o = run(
        "algblock",
        f.dir.path(),
        &["--q", "-3", "--lo", "-3", "--hi", "3", "--exclude-singular"],
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("note: excluded 6 singular window indices"));
}
