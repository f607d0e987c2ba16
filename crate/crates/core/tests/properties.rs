use proptest::prelude::*;

use reylie::block::block_window_check;
use reylie::catalog::{self, H, X, Y};
use reylie::cybe::{cybe_bracket, is_cybe_solution_reynolds, is_relative_rb, RelativeRB};
use reylie::io::AlgebraDoc;
use reylie::lie::{default_labels, jacobi_check, s_sharp, LieAlgebra};
use reylie::reynolds::{is_reynolds, semidirect_reynolds};
use reylie::rotabaxter::{is_rota_baxter, r_plus};
use reylie::{int, rat, Matrix, Rat, ReynoldsLieAlgebra, ReynoldsRep, Tensor2};

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn skew_sl2() -> impl Strategy<Value = Tensor2> {
    (small(), small(), small()).prop_map(|(a, b, c)| {
        let es = [
            ((H, X), a),
            ((X, H), -a),
            ((H, Y), b),
            ((Y, H), -b),
            ((X, Y), c),
            ((Y, X), -c),
        ];
        Tensor2::from_entries(3, 3, es.into_iter().map(|(ij, v)| (ij, int(v)))).unwrap()
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small(), n * n).prop_map(move |xs| {
        let rows: Vec<Vec<Rat>> = xs.chunks(n).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Matrix::from_rows(rows).unwrap()
    })
}

fn table(n: usize) -> impl Strategy<Value = LieAlgebra> {
    proptest::collection::vec((0..n, 0..n, 0..n, small()), 0..8).prop_map(move |cs| {
        let cs: Vec<_> = cs
            .into_iter()
            .filter(|c| c.0 != c.1)
            .map(|(i, j, k, v)| (i, j, k, int(v)))
            .collect();
        LieAlgebra::new_unchecked(default_labels("e", n), cs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cybe_bracket_is_quadratic(r in skew_sl2(), c in small()) {
        let g = catalog::sl2();
        let lhs = cybe_bracket(&g, &r.scale(&int(c))).unwrap();
        let rhs = cybe_bracket(&g, &r).unwrap();
        prop_assert_eq!(lhs.dense(), rhs.dense().iter().map(|x| x * int(c * c)).collect::<Vec<_>>());
    }

    #[test]
    fn r_plus_relative_rb_iff_reynolds_cybe(r in skew_sl2()) {
        let a = catalog::sl2_reynolds();
        let rel = RelativeRB::new(ReynoldsRep::coadjoint(&a), r_plus(&r)).unwrap();
        prop_assert_eq!(
            is_relative_rb(&rel).passed(),
            is_cybe_solution_reynolds(&a, &r).unwrap().passed()
        );
    }

    #[test]
    fn quadratic_relative_rb_iff_commuting_rota_baxter(k in matrix(3)) {
        let a = catalog::sl2_reynolds();
        let rel = RelativeRB::new(ReynoldsRep::coadjoint(&a), k.clone()).unwrap();
        let p = k.mul(&s_sharp(&catalog::sl2_form()).unwrap()).unwrap();
        let rb = is_rota_baxter(a.algebra(), &p, &int(0)).unwrap().passed();
        let commutes = a.operator().mul(&p).unwrap() == p.mul(a.operator()).unwrap();
        prop_assert_eq!(is_relative_rb(&rel).passed(), rb && commutes);
    }

    #[test]
    fn jacobi_is_invariant_under_rescaling(g in table(3), c in 1i64..4) {
        let scaled = LieAlgebra::from_bilinear_unchecked(g.basis().to_vec(), g.table().scale(&int(c))).unwrap();
        prop_assert_eq!(jacobi_check(&g).passed(), jacobi_check(&scaled).passed());
    }

    #[test]
    fn abelian_semidirect_is_reynolds(r in matrix(2), t in matrix(2)) {
        let a = ReynoldsLieAlgebra::new(catalog::abelian(2), r).unwrap();
        let s = semidirect_reynolds(&ReynoldsRep::zero(&a, t).unwrap()).unwrap();
        prop_assert!(jacobi_check(s.algebra()).passed());
        prop_assert!(is_reynolds(s.algebra(), s.operator()).unwrap().passed());
    }

    #[test]
    fn algebra_documents_round_trip(g in table(4), r in matrix(4)) {
        let a = ReynoldsLieAlgebra::new_unchecked(g, r).unwrap();
        let text = serde_json::to_string(&AlgebraDoc::of_reynolds(&a)).unwrap();
        let back: AlgebraDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.reynolds_algebra().unwrap(), a);
    }

    #[test]
    fn block_small_window_holds(p in -6i64..=6, q in 1i64..=5) {
        prop_assume!(p != 0);
        prop_assert!(block_window_check(&rat(p, q), 1, 2, false).unwrap().passed());
    }

    #[test]
    fn first_violation_is_stable(g in table(3)) {
        let a = jacobi_check(&g);
        let b = jacobi_check(&g);
        prop_assert_eq!(a, b);
    }
}
