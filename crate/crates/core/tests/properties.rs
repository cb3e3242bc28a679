//! Property and randomized invariants: corepresentation conditions on random
//! matrices, Krull–Schmidt stability under admissible shuffles, duality
//! functoriality, isomorphism invariance, and the reflection/root laws.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use eqposet::catalog;
use eqposet::corep::{
    adjoin_point, apply_transformation, dim_vector_of_spaces, direct_sum, dual_corep,
    extend_subposet, is_reduced, matrix_of, spaces_of, AdjoinSide, MatrixCorep, Move,
};
use eqposet::fields::{GElem, GMat, Tower};
use eqposet::homalg::{are_isomorphic, decompose, is_indecomposable, IndecStatus, IsoStatus};
use eqposet::poset::{poset_iso, EquippedPoset, PointKind, RelKind};
use eqposet::subspace::FSub;
use eqposet::tits::{classify_vector, tits_form, DimVector, RootClass};

fn random_gelem(rng: &mut StdRng, tower: &Tower) -> GElem {
    if tower.is_finite() {
        let gs = tower.g_elems().unwrap();
        gs[rng.gen_range(0..gs.len())].clone()
    } else {
        tower.g_from_i64(rng.gen_range(-2..=2), rng.gen_range(-2..=2))
    }
}

fn random_matrix(rng: &mut StdRng, tower: &Tower, p: &EquippedPoset, d0: usize) -> MatrixCorep {
    let stripes = (0..p.n())
        .map(|_| {
            let cols = rng.gen_range(0..=2);
            let mut m = GMat::zero(tower, d0, cols);
            for i in 0..d0 {
                for j in 0..cols {
                    m.set(i, j, random_gelem(rng, tower));
                }
            }
            m
        })
        .collect();
    MatrixCorep::new(p.clone(), d0, stripes).unwrap()
}

#[test]
fn corepresentation_conditions_on_random_matrices() {
    // 200 random matrices per reference tower satisfy the corepresentation
    // conditions by construction, and dimc spaces ≤ dimc matrix with
    // equality exactly on reduced matrices
    for tower in [Tower::gf2(), Tower::qsqrt2()] {
        let mut rng = StdRng::seed_from_u64(7);
        for i in 0..200 {
            let pid = ["K6", "A25", "K7"][i % 3];
            let p = catalog::catalog_poset(pid).unwrap();
            let d0 = 1 + (i % 3);
            let m = random_matrix(&mut rng, &tower, &p, d0);
            let u = spaces_of(&tower, &m);
            u.validate(&tower).unwrap();
            let sd = dim_vector_of_spaces(&tower, &u);
            let md = m.dim_vector();
            assert!(sd.leq(&md));
            assert_eq!(sd == md, is_reduced(&tower, &m));
            // matrix_of of the spaces regenerates the same spaces
            assert_eq!(spaces_of(&tower, &matrix_of(&tower, &u)), u);
        }
    }
}

fn random_move(rng: &mut StdRng, tower: &Tower, m: &MatrixCorep) -> Option<Move> {
    let p = &m.poset;
    for _ in 0..60 {
        match rng.gen_range(0..5) {
            0 if m.d0 >= 2 => {
                let i = rng.gen_range(0..m.d0);
                let j = rng.gen_range(0..m.d0);
                if i != j {
                    return Some(Move::RowSwap(i, j));
                }
            }
            1 if m.d0 >= 2 => {
                let i = rng.gen_range(0..m.d0);
                let j = rng.gen_range(0..m.d0);
                if i != j {
                    return Some(Move::RowAdd {
                        src: i,
                        dst: j,
                        coeff: random_gelem(rng, tower),
                    });
                }
            }
            2 => {
                let x = rng.gen_range(0..p.n());
                if m.stripes[x].cols >= 2 {
                    let i = rng.gen_range(0..m.stripes[x].cols);
                    let j = rng.gen_range(0..m.stripes[x].cols);
                    if i != j {
                        let coeff = if p.is_weak_point(x) {
                            tower.g_one()
                        } else {
                            // any nonzero G-coefficient
                            tower.xi()
                        };
                        return Some(Move::ColAdd { point: x, src: i, dst: j, coeff });
                    }
                }
            }
            3 => {
                let i = rng.gen_range(0..m.d0);
                let c = random_gelem(rng, tower);
                if !c.is_zero() {
                    return Some(Move::RowScale(i, c));
                }
            }
            _ => {
                // a legal across-stripe addition if any relation exists
                let x = rng.gen_range(0..p.n());
                let y = rng.gen_range(0..p.n());
                if x != y
                    && p.leq(x, y)
                    && m.stripes[x].cols > 0
                    && m.stripes[y].cols > 0
                {
                    let coeff = if p.strong_rel(x, y) { tower.xi() } else { tower.g_one() };
                    return Some(Move::ColAddAcross {
                        from: x,
                        from_col: rng.gen_range(0..m.stripes[x].cols),
                        to: y,
                        to_col: rng.gen_range(0..m.stripes[y].cols),
                        coeff,
                    });
                }
            }
        }
    }
    None
}

#[test]
fn isomorphism_invariant_under_admissible_moves() {
    let tower = Tower::gf2();
    let mut rng = StdRng::seed_from_u64(11);
    let [k64, a255, _] = catalog::table2_coreps(&tower).unwrap();
    for base in [k64, a255] {
        let u0 = spaces_of(&tower, &base);
        let mut m = base.clone();
        for _ in 0..20 {
            if let Some(mv) = random_move(&mut rng, &tower, &m) {
                m = apply_transformation(&tower, &m, &mv).unwrap();
            }
        }
        let u1 = spaces_of(&tower, &m);
        assert_eq!(are_isomorphic(&tower, &u0, &u1).unwrap(), IsoStatus::Iso);
    }
}

#[test]
fn krull_schmidt_shuffle() {
    // decompose applied to a shuffled isomorphic copy yields a multiset of
    // summands pairwise isomorphic to the original multiset
    let tower = Tower::gf2();
    let mut rng = StdRng::seed_from_u64(23);
    let mut done = 0;
    let mut attempts = 0;
    while done < 50 && attempts < 400 {
        attempts += 1;
        let pid = ["K6", "A25"][attempts % 2];
        let p = catalog::catalog_poset(pid).unwrap();
        let m = random_matrix(&mut rng, &tower, &p, 1 + attempts % 2);
        if m.dim_vector().dx.iter().all(|&c| c == 0) {
            continue;
        }
        let mut shuffled = m.clone();
        for _ in 0..8 {
            if let Some(mv) = random_move(&mut rng, &tower, &shuffled) {
                shuffled = apply_transformation(&tower, &shuffled, &mv).unwrap();
            }
        }
        let d1 = decompose(&tower, &spaces_of(&tower, &m)).unwrap();
        let d2 = decompose(&tower, &spaces_of(&tower, &shuffled)).unwrap();
        assert!(!d1.undecided && !d2.undecided);
        assert_eq!(d1.summands.len(), d2.summands.len());
        let mut used = vec![false; d2.summands.len()];
        for s in &d1.summands {
            let mut matched = false;
            for (j, t) in d2.summands.iter().enumerate() {
                if !used[j] && are_isomorphic(&tower, s, t).unwrap() == IsoStatus::Iso {
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            assert!(matched, "unmatched summand in shuffle test");
        }
        done += 1;
    }
    assert_eq!(done, 50);
}

#[test]
fn duality_functorial_on_random_instances() {
    // U indecomposable ⟺ U* indecomposable; (U ⊕ V)* ≅ U* ⊕ V*
    let tower = Tower::gf2();
    let mut rng = StdRng::seed_from_u64(31);
    let p = catalog::catalog_poset("A25").unwrap();
    let mut done = 0;
    while done < 25 {
        let m = random_matrix(&mut rng, &tower, &p, 1 + done % 2);
        let n = random_matrix(&mut rng, &tower, &p, 1);
        let u = spaces_of(&tower, &m);
        let v = spaces_of(&tower, &n);
        let u_ind = matches!(
            is_indecomposable(&tower, &u).unwrap(),
            IndecStatus::Indecomposable(_)
        );
        let du = dual_corep(&tower, &u).unwrap();
        let du_ind = matches!(
            is_indecomposable(&tower, &du).unwrap(),
            IndecStatus::Indecomposable(_)
        );
        assert_eq!(u_ind, du_ind);
        let sum = spaces_of(&tower, &direct_sum(&tower, &m, &n).unwrap());
        let lhs = dual_corep(&tower, &sum).unwrap();
        let rhs_m = matrix_of(&tower, &dual_corep(&tower, &u).unwrap());
        let rhs_n = matrix_of(&tower, &dual_corep(&tower, &v).unwrap());
        let rhs = spaces_of(&tower, &direct_sum(&tower, &rhs_m, &rhs_n).unwrap());
        assert_eq!(are_isomorphic(&tower, &lhs, &rhs).unwrap(), IsoStatus::Iso);
        done += 1;
    }
}

#[test]
fn extension_examples() {
    let tower = Tower::gf2();
    let a25 = catalog::catalog_poset("A25").unwrap();
    let k6 = catalog::catalog_poset("K6").unwrap();
    let [k64, a255, _] = catalog::table2_coreps(&tower).unwrap();
    let u = spaces_of(&tower, &k64);
    // Q = P is the identity
    let same = extend_subposet(&tower, &u, &k6, &[0, 1]).unwrap();
    assert_eq!(same, u);
    // the trivial corepresentation extends to the trivial one
    let triv = spaces_of(&tower, &MatrixCorep::trivial(&tower, &k6));
    let ext = extend_subposet(&tower, &triv, &a25, &[0, 1]).unwrap();
    assert!(ext.spaces.iter().all(|s| s.is_zero()));
    // extending ₄(K6−4) into A25 puts hull(U_b) at η
    let ext = extend_subposet(&tower, &u, &a25, &[0, 1]).unwrap();
    let eta = a25.index_of("eta").unwrap();
    let b = a25.index_of("b").unwrap();
    assert_eq!(ext.spaces[eta], u.spaces[b].hull(&tower));
    // which is exactly the radical structure of ₄(A25−5) at η
    let full = spaces_of(&tower, &a255);
    assert_eq!(
        eqposet::corep::radical(&tower, &full, eta),
        ext.spaces[eta]
    );
    // a non-full embedding is rejected
    assert!(extend_subposet(&tower, &u, &a25, &[0, 2]).is_err());
}

#[test]
fn adjoin_trivial_top() {
    // adjoining a maximal strong point to the trivial corepresentation
    // produces a one-dimensional strong space
    let tower = Tower::gf2();
    let a25 = catalog::catalog_poset("A25").unwrap();
    let k6 = catalog::catalog_poset("K6").unwrap();
    let triv = spaces_of(&tower, &MatrixCorep::trivial(&tower, &k6));
    let v = adjoin_point(&tower, &triv, &a25, "eta", AdjoinSide::Top, 0).unwrap();
    let eta = a25.index_of("eta").unwrap();
    assert_eq!(v.spaces[eta].dim_f(), 2);
    assert!(v.spaces[eta].is_strong(&tower));
}

#[test]
fn a25_table_vectors_are_roots() {
    // every Appendix row of A25 with f ∈ {1,2} is reflection-reachable
    let a25 = catalog::catalog_poset("A25").unwrap();
    let (rows, _) = catalog::dim_table("A25").unwrap();
    for row in rows {
        assert_eq!(
            classify_vector(&a25, &row.d).unwrap(),
            RootClass::AdmissibleRoot,
            "row T{}",
            row.type_label
        );
    }
}

#[test]
fn poset_iso_is_an_equivalence_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(43);
    // reflexivity on the catalog
    for id in catalog::SINCERE_IDS {
        let p = catalog::catalog_poset(id).unwrap();
        assert!(poset_iso(&p, &p, false).unwrap().is_some());
    }
    // symmetry on 50 random pairs
    let mut done = 0;
    while done < 50 {
        let a = random_poset(&mut rng);
        let b = random_poset(&mut rng);
        let ab = poset_iso(&a, &b, false).unwrap().is_some();
        let ba = poset_iso(&b, &a, false).unwrap().is_some();
        assert_eq!(ab, ba);
        done += 1;
    }
}

fn random_poset(rng: &mut StdRng) -> EquippedPoset {
    loop {
        let n = rng.gen_range(1..=5);
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let kinds: Vec<PointKind> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    PointKind::Weak
                } else {
                    PointKind::Strong
                }
            })
            .collect();
        let points: Vec<(&str, PointKind)> =
            names.iter().map(|s| s.as_str()).zip(kinds.iter().copied()).collect();
        let mut rels: Vec<(&str, &str, RelKind)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.3) {
                    // weak declarations only between weak points keep the
                    // generators closure-consistent
                    let kind = if kinds[i] == PointKind::Weak
                        && kinds[j] == PointKind::Weak
                        && rng.gen_bool(0.6)
                    {
                        RelKind::Weak
                    } else {
                        RelKind::Strong
                    };
                    rels.push((&names[i], &names[j], kind));
                }
            }
        }
        if let Ok(p) = EquippedPoset::build("rand", &points, &rels) {
            return p;
        }
    }
}

#[test]
fn reclosing_is_idempotent() {
    let mut rng = StdRng::seed_from_u64(47);
    for _ in 0..50 {
        let p = random_poset(&mut rng);
        let text = eqposet::textio::print_poset(&p);
        let q = eqposet::textio::parse_poset(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(eqposet::textio::print_poset(&q), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// hat is multiplicative and involutive over Q(√2) (p = 0 case).
    #[test]
    fn hat_conjugation_laws_rational(
        a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20
    ) {
        let t = Tower::qsqrt2();
        let z = t.g_from_i64(a, b);
        let w = t.g_from_i64(c, d);
        prop_assert_eq!(t.conj_hat(&t.conj_hat(&z)), z.clone());
        prop_assert_eq!(
            t.conj_hat(&t.g_mul(&z, &w)),
            t.g_mul(&t.conj_hat(&z), &t.conj_hat(&w))
        );
        // field laws on random rationals
        if !z.is_zero() {
            let inv = t.g_inv(&z).unwrap();
            prop_assert_eq!(t.g_mul(&z, &inv), t.g_one());
        }
        prop_assert_eq!(t.g_mul(&z, &w), t.g_mul(&w, &z));
    }

    /// Orthogonal complement is an involution on random rational subspaces.
    #[test]
    fn perp_involution_rational(vs in proptest::collection::vec(
        (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3), 0..4
    )) {
        let t = Tower::qsqrt2();
        let vecs: Vec<Vec<GElem>> = vs
            .iter()
            .map(|&(a, b, c, d)| vec![t.g_from_i64(a, b), t.g_from_i64(c, d)])
            .collect();
        let u = FSub::span(&t, 2, &vecs, false).unwrap();
        let p = u.perp(&t);
        prop_assert_eq!(u.dim_f() + p.dim_f(), 4);
        prop_assert_eq!(p.perp(&t), u.clone());
        prop_assert_eq!(u.cohull(&t).perp(&t), p.hull(&t));
        if u.is_strong(&t) {
            prop_assert!(p.is_strong(&t));
        }
    }

    /// Lattice modularity for random subspace pairs over the finite tower.
    #[test]
    fn subspace_modularity_gf2(seed in 0u64..10_000) {
        let t = Tower::gf2();
        let mut rng = StdRng::seed_from_u64(seed);
        let rand_sub = |rng: &mut StdRng| {
            let k = rng.gen_range(0..5);
            let rows: Vec<Vec<GElem>> = (0..k)
                .map(|_| (0..2).map(|_| random_gelem(rng, &t)).collect())
                .collect();
            FSub::span(&t, 2, &rows, false).unwrap()
        };
        let u = rand_sub(&mut rng);
        let v = rand_sub(&mut rng);
        let sum = u.sum(&t, &v).unwrap();
        let meet = u.intersect(&t, &v).unwrap();
        prop_assert_eq!(sum.dim_f() + meet.dim_f(), u.dim_f() + v.dim_f());
        prop_assert!(sum.contains(&t, &u).unwrap());
        prop_assert!(u.contains(&t, &meet).unwrap());
    }

    /// Reflections are f-isometries on random vectors over catalog posets.
    #[test]
    fn reflections_preserve_form(
        idx in 0usize..4,
        d0 in -3i64..=3,
        coords in proptest::collection::vec(-3i64..=3, 5)
    ) {
        let id = ["K6", "K7", "K9", "A45"][idx];
        let p = catalog::catalog_poset(id).unwrap();
        let d = DimVector::new(d0, coords[..p.n()].to_vec());
        let f = tits_form(&p, &d).unwrap();
        for x in std::iter::once(None).chain((0..p.n()).map(Some)) {
            let r = eqposet::tits::reflect(&p, x, &d).unwrap();
            prop_assert_eq!(tits_form(&p, &r).unwrap(), f);
        }
    }
}

#[test]
fn oracle_determinism_and_catalog_consistency() {
    let tower = Tower::gf2();
    let k6 = catalog::catalog_poset("K6").unwrap();
    let dmax = DimVector::new(1, vec![2, 2]);
    let run1 = eqposet::verify::brute_force_indecomposables(&tower, &k6, &dmax, 1_000_000)
        .unwrap();
    let run2 = eqposet::verify::brute_force_indecomposables(&tower, &k6, &dmax, 1_000_000)
        .unwrap();
    assert_eq!(run1.keys().collect::<Vec<_>>(), run2.keys().collect::<Vec<_>>());
    for (d, c1) in &run1 {
        let (eqposet::verify::ClassCount::Classes(a), eqposet::verify::ClassCount::Classes(b)) =
            (c1, &run2[d])
        else {
            panic!("unexpected skip")
        };
        assert_eq!(a, b, "oracle not deterministic at {d}");
    }
    // every catalog K6 corepresentation inside the box matches exactly one
    // oracle representative
    let x = GMat::zero(&tower, 1, 1);
    for m in [
        catalog::k6_series(&tower, 1, &x).unwrap(),
        catalog::k6_discrete(&tower, 1).unwrap(),
    ] {
        let u = spaces_of(&tower, &m);
        let d = dim_vector_of_spaces(&tower, &u);
        let eqposet::verify::ClassCount::Classes(reps) = &run1[&d] else { panic!() };
        let hits = reps
            .iter()
            .filter(|r| are_isomorphic(&tower, r, &u).unwrap() == IsoStatus::Iso)
            .count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn minimal_root_error_contracts() {
    use eqposet::poset::{critical_poset, disjoint_union, CriticalId};
    use eqposet::tits::{minimal_imaginary_root, same_type};
    // two incomparable minimal imaginary roots on K6 ⊔ K6
    let union = disjoint_union(
        critical_poset(CriticalId::K6),
        critical_poset(CriticalId::K6),
    );
    let err = minimal_imaginary_root(&union, &DimVector::new(2, vec![2, 2, 2, 2])).unwrap_err();
    assert!(matches!(err, eqposet::Error::AmbiguousMinimalRoot { .. }));
    // no imaginary root at all on the finite-type chain F17
    let f17 = catalog::catalog_poset("F17").unwrap();
    let err = same_type(
        &f17,
        &DimVector::new(1, vec![1, 1]),
        &DimVector::new(1, vec![1, 0]),
    )
    .unwrap_err();
    assert!(matches!(err, eqposet::Error::NoImaginaryRoot));
}

#[test]
fn special_vector_has_exactly_one_indecomposable() {
    // the A46 family vector at k = 1 classifies as special-listed and is the
    // dimension of exactly one indecomposable over GF(2) ⊂ GF(4)
    let tower = Tower::gf2();
    let a46 = catalog::catalog_poset("A46").unwrap();
    let (d, f) = catalog::sincere_dims("A46", 1).unwrap();
    assert_eq!(f, 2);
    assert_eq!(
        classify_vector(&a46, &d).unwrap(),
        RootClass::SpecialListed { poset_id: "A46".into(), k: 1 }
    );
    let count = eqposet::verify::brute_force_single(&tower, &a46, &d, 10_000_000).unwrap();
    assert_eq!(count.count(), Some(1));
}
