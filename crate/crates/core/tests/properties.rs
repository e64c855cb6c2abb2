//! Property tests over the bundled fixtures.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use fiatcell::algebra::FinDimAlgebra;
use fiatcell::bimod::{
    commutant_dimension, hom_space, iso_test, tensor_over, z_prime, Bimodule, Ccx, CcxMorphism,
    DEFAULT_SEED,
};
use fiatcell::fixtures;
use fiatcell::graded::{GradedCcx, ShiftChoice};
use fiatcell::hecke::{CoxeterType, KlData, NamedCells};
use fiatcell::linalg::{is_zero_vec, q, Vector};
use fiatcell::mscell::{MultiSemigroup, OneMorphism};
use fiatcell::report::Report;
use fiatcell::suite::{load_ccx, report_all, PROPERTY_FIXTURES};

const ALGEBRAS: [&str; 6] = [
    "rational.alg",
    "dualnumbers.alg",
    "x3local.alg",
    "x4local.alg",
    "exterior2.alg",
    "zigzagA2.alg",
];

fn tables() -> &'static Vec<MultiSemigroup> {
    static T: OnceLock<Vec<MultiSemigroup>> = OnceLock::new();
    T.get_or_init(|| {
        let mut out: Vec<_> = ["b2.ms", "s3.ms", "s4.ms", "skewed-m.ms"]
            .iter()
            .map(|f| MultiSemigroup::parse(fixtures::text(f).unwrap()).unwrap())
            .collect();
        for name in PROPERTY_FIXTURES.iter().chain(&["sl2-weights"]) {
            out.push(load_ccx(name).unwrap().ms);
        }
        out
    })
}

fn s4() -> &'static KlData {
    static K: OnceLock<KlData> = OnceLock::new();
    K.get_or_init(|| KlData::for_type(CoxeterType::A(3)).unwrap())
}

fn algebra(i: usize) -> Arc<FinDimAlgebra> {
    fixtures::algebra(ALGEBRAS[i]).unwrap()
}

fn combination(basis: &[Vector], coeffs: &[i64], dim: usize) -> Vector {
    let mut v = vec![q(0); dim];
    for (b, c) in basis.iter().zip(coeffs.iter().cycle()) {
        for (x, y) in v.iter_mut().zip(b) {
            *x += q(*c) * y;
        }
    }
    v
}

/// Same table with morphism `i` moved to position `perm[i]`.
fn permuted(ms: &MultiSemigroup, perm: &[usize]) -> MultiSemigroup {
    let mut morphisms: Vec<Option<OneMorphism>> = vec![None; ms.len()];
    for (i, m) in ms.morphisms().iter().enumerate() {
        morphisms[perm[i]] = Some(m.clone());
    }
    let products = ms
        .products()
        .into_iter()
        .map(|((f, g), res)| {
            let res = res.into_iter().map(|(h, k)| (perm[h], k)).collect();
            ((perm[f], perm[g]), res)
        })
        .collect::<BTreeMap<_, _>>();
    let mut star = vec![0; ms.len()];
    for f in 0..ms.len() {
        star[perm[f]] = perm[ms.star(f)];
    }
    MultiSemigroup::new(
        ms.objects().to_vec(),
        morphisms.into_iter().map(Option::unwrap).collect(),
        products,
        star,
    )
    .unwrap()
}

fn table_and_perm() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..tables().len()).prop_flat_map(|t| {
        let n = tables()[t].len();
        (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cells_survive_reindexing((t, perm) in table_and_perm()) {
        let ms = &tables()[t];
        prop_assert_eq!(NamedCells::of(ms), NamedCells::of(&permuted(ms, &perm)));
    }

    #[test]
    fn star_swaps_left_and_right(t in 0..tables().len(), f in 0usize..64, g in 0usize..64) {
        let ms = &tables()[t];
        let (f, g) = (f % ms.len(), g % ms.len());
        prop_assert_eq!(ms.star(ms.star(f)), f);
        prop_assert_eq!(ms.leq_left(f, g), ms.leq_right(ms.star(f), ms.star(g)));
    }

    #[test]
    fn kl_products_respect_inversion(x in 0usize..24, y in 0usize..24) {
        let kl = s4();
        let w = kl.group();
        let lhs = kl.product_at_one(x, y).unwrap();
        let rhs = kl.product_at_one(w.inverse(y), w.inverse(x)).unwrap();
        let rhs: BTreeMap<_, _> = rhs.into_iter().map(|(z, k)| (w.inverse(z), k)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn center_is_a_subalgebra(i in 0..ALGEBRAS.len(), c1 in prop::collection::vec(-3i64..4, 1..5), c2 in prop::collection::vec(-3i64..4, 1..5)) {
        let a = algebra(i);
        let z = a.center();
        prop_assert!(z.contains(a.unit()));
        let u = combination(z.basis(), &c1, a.dim());
        let v = combination(z.basis(), &c2, a.dim());
        prop_assert!(z.contains(&a.mul(&u, &v)));
    }

    #[test]
    fn radical_elements_are_nilpotent(i in 0..ALGEBRAS.len(), c in prop::collection::vec(-3i64..4, 1..5)) {
        let a = algebra(i);
        let mut r = combination(a.radical().basis(), &c, a.dim());
        prop_assert!(a.radical().contains(&r));
        let x = r.clone();
        for _ in 1..a.loewy_length().unwrap() {
            r = a.mul(&r, &x);
        }
        prop_assert!(is_zero_vec(&r));
    }

    #[test]
    fn adjunction_dimension_law(g in 0usize..2, e in 0usize..2, f in 0usize..2, h in 0usize..2) {
        let a = algebra(5);
        let lhs = hom_space(&Bimodule::proj(&a, e, &a, f), &Bimodule::proj(&a, g, &a, h)).unwrap().dim();
        prop_assert_eq!(lhs, a.corner(g, e).dim() * a.corner(f, h).dim());
    }

    #[test]
    fn tensor_is_associative(picks in prop::collection::vec(0usize..5, 3)) {
        let a = algebra(5);
        let pick = |k: usize| match k {
            4 => Bimodule::regular(&a),
            k => Bimodule::proj(&a, k / 2, &a, k % 2),
        };
        let (x, y, z) = (pick(picks[0]), pick(picks[1]), pick(picks[2]));
        let left = tensor_over(&tensor_over(&x, &y).unwrap(), &z).unwrap();
        let right = tensor_over(&x, &tensor_over(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left.dim(), right.dim());
        prop_assert!(iso_test(&left, &right, DEFAULT_SEED).unwrap());
    }
}

#[test]
fn strongly_regular_cells_biject_onto_pairs() {
    for ms in tables() {
        for j in &ms.cells().two_sided_cells {
            if !ms.is_strongly_regular(j).unwrap() {
                continue;
            }
            let table = ms.intersection_table(j).unwrap();
            let cells: Vec<_> = table.iter().flatten().collect();
            assert!(cells.iter().all(|c| c.len() == 1));
            assert_eq!(cells.len(), j.len());
        }
    }
}

#[test]
fn ccx_tables_are_strongly_regular() {
    for name in PROPERTY_FIXTURES
        .iter()
        .chain(&["sl2-weights", "x3local-small-x"])
    {
        let ccx = load_ccx(name).unwrap();
        for j in &ccx.ms.cells().two_sided_cells {
            assert!(ccx.ms.is_strongly_regular(j).unwrap(), "{name}");
            assert!(ccx.ms.m_constant_on_right_cells(j).unwrap(), "{name}");
        }
        assert!(ccx.ms.identities_only_from_identities(), "{name}");
        assert_eq!(commutant_dimension(&ccx.cell_rep), 1, "{name}");
    }
}

#[test]
fn algebra_fixture_invariants() {
    for i in 0..ALGEBRAS.len() {
        let a = algebra(i);
        let top_power = a.radical_power(a.loewy_length().unwrap());
        assert!(top_power.is_zero(), "{}", a.name());
        for e in 0..a.num_idempotents() {
            let p = a.left_projective(e);
            assert_eq!(a.top_left(&p).dim(), 1, "{} top of P{e}", a.name());
            assert_eq!(p.dim(), a.right_projective(e).dim(), "{}", a.name());
        }
        assert!(a.is_weakly_symmetric());
    }
}

#[test]
fn z_prime_is_a_central_subalgebra() {
    for i in 0..ALGEBRAS.len() {
        let a = algebra(i);
        let zp = z_prime(&a).unwrap();
        assert!(a.center().contains_subspace(&zp));
        assert!(zp.contains(a.unit()));
        for u in zp.basis() {
            for v in zp.basis() {
                assert!(zp.contains(&a.mul(u, v)));
            }
        }
    }
}

#[test]
fn z_prime_of_truncated_polynomials() {
    // k[x]/(x^n) for n = 1, 2, 3, 4: Z = A, and Z′ is spanned by 1 and the socle.
    let got: Vec<(usize, usize)> = [0, 1, 2, 3]
        .iter()
        .map(|&i| {
            let a = algebra(i);
            (a.center().dim(), z_prime(&a).unwrap().dim())
        })
        .collect();
    assert_eq!(got, [(1, 1), (2, 2), (3, 2), (4, 2)]);
}

fn hom_dims_match_at_one(ccx: &Ccx) {
    for f in 0..ccx.ms.len() {
        for g in 0..ccx.ms.len() {
            let (m, n) = (ccx.bimodule(f), ccx.bimodule(g));
            if m.left_algebra().name() != n.left_algebra().name()
                || m.right_algebra().name() != n.right_algebra().name()
            {
                continue;
            }
            let series = fiatcell::graded::graded_hom_series(&m, &n).unwrap();
            assert_eq!(
                series.eval_at_one() as usize,
                hom_space(&m, &n).unwrap().dim()
            );
        }
    }
}

#[test]
fn graded_hom_series_specialise_to_dimensions() {
    for name in ["dualnumbers-graded", "zigzagA2-graded", "x3local"] {
        hom_dims_match_at_one(&load_ccx(name).unwrap());
    }
}

fn shifted_by(ccx: &Ccx, c: i32) -> GradedCcx {
    let shifts = ccx
        .kinds
        .iter()
        .map(|k| match k {
            CcxMorphism::Identity(_) => 0,
            _ => c,
        })
        .collect();
    GradedCcx::with_shifts(ccx.clone(), ShiftChoice { shifts }).unwrap()
}

#[test]
fn invariants_under_a_common_shift() {
    // Translating every non-identity shift by c moves a by c and leaves
    // l, χ_G and ψ alone.
    for name in ["dualnumbers-graded", "zigzagA2-graded"] {
        let ccx = load_ccx(name).unwrap();
        let base = shifted_by(&ccx, 1);
        let cells = ccx.left_cells().unwrap();
        for c in -2..=3 {
            let g = shifted_by(&ccx, c);
            for l in &cells {
                assert_eq!(
                    g.invariant_a(l).unwrap() - base.invariant_a(l).unwrap(),
                    c - 1
                );
                assert_eq!(g.invariant_l(l).unwrap(), base.invariant_l(l).unwrap());
                assert_eq!(g.chi(l).unwrap(), base.chi(l).unwrap());
                for f in &cells {
                    let psi = |x: &GradedCcx| {
                        x.verify_hilbert_factorization(l, f)
                            .unwrap()
                            .iter()
                            .map(|r| r.values.get("psi").cloned())
                            .collect::<Vec<_>>()
                    };
                    assert_eq!(psi(&g), psi(&base));
                }
            }
        }
    }
}

#[test]
fn positive_gradings_have_unit_constant_term() {
    for name in ["dualnumbers-graded", "zigzagA2-graded"] {
        let g = GradedCcx::new(load_ccx(name).unwrap()).unwrap();
        assert!(g.is_positive().unwrap());
        for l in g.ccx.left_cells().unwrap() {
            let chi = g.chi(&l).unwrap();
            assert_eq!(chi.coeff(0), 1);
            assert_eq!(chi.max_degree(), Some(g.invariant_l(&l).unwrap()));
        }
    }
}

#[test]
fn report_json_roundtrip() {
    let r = report_all(DEFAULT_SEED).unwrap();
    assert_eq!(
        Report::from_json(&r.to_json()).unwrap().to_json(),
        r.to_json()
    );
}
