use kdecomp::clutters::{self, Chordality};
use kdecomp::decomposition::{
    self, split, ComplexCertificate, ComplexSearcher, Decision, IdealSearcher, Mode,
};
use kdecomp::model::minimal_sets;
use kdecomp::oracle::{self, Field};
use kdecomp::resolution;
use kdecomp::verify::ha_sides;
use kdecomp::{Clutter, Ctx, Monomial, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};
use proptest::prelude::*;

fn ctx(n: usize) -> Ctx {
    VariableContext::indexed(n).unwrap()
}

fn complex_on(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<u64>(), 0..6)))
        .prop_map(|(n, masks)| {
            let c = ctx(n);
            let faces = masks.into_iter().map(|m| VertexSet(m & c.all().0)).collect();
            SimplicialComplex::new(&c, c.all(), faces).unwrap()
        })
}

fn ideal_on(max_n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let gen = prop::collection::vec(0..=max_exp, n)
                .prop_filter("not the unit", |e| e.iter().any(|&x| x > 0));
            (Just(n), prop::collection::vec(gen, 1..7))
        })
        .prop_map(|(n, gens)| {
            MonomialIdeal::minimalize(&ctx(n), gens.into_iter().map(Monomial::from_exponents)).unwrap()
        })
}

fn clutter_on(max_n: usize) -> impl Strategy<Value = Clutter> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<u64>(), 0..7)))
        .prop_map(|(n, masks)| {
            let c = ctx(n);
            let edges = masks
                .into_iter()
                .map(|m| VertexSet(m & c.all().0))
                .filter(|e| e.len() >= 2)
                .collect();
            Clutter::new(&c, c.all(), minimal_sets(edges)).unwrap()
        })
}

fn ideal_of(d: &SimplicialComplex) -> MonomialIdeal {
    d.ideal().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complex_duality_is_an_involution(d in complex_on(8)) {
        prop_assert_eq!(d.alexander_dual().alexander_dual(), d);
    }

    #[test]
    fn dual_of_ideal_is_ideal_of_dual(d in complex_on(7)) {
        let dual = d.alexander_dual();
        prop_assume!(!d.is_void() && !dual.is_void());
        prop_assert_eq!(ideal_of(&d).alexander_dual().unwrap(), ideal_of(&dual));
    }

    #[test]
    fn edge_ideal_is_ideal_of_independence_complex(h in clutter_on(7)) {
        let sr = h.independence_complex().stanley_reisner_ideal(h.vertices()).unwrap();
        prop_assert_eq!(sr, h.edge_ideal());
    }

    #[test]
    fn minimalize_is_idempotent_and_order_free(i in ideal_on(5, 3)) {
        let again = MonomialIdeal::minimalize(i.ctx(), i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let mut reversed = i.gens().to_vec();
        reversed.reverse();
        reversed.extend(i.gens().iter().cloned());
        prop_assert_eq!(MonomialIdeal::minimalize(i.ctx(), reversed).unwrap(), i);
    }

    #[test]
    fn link_faces_join_to_faces(d in complex_on(6)) {
        for f in d.faces() {
            let link = d.link(f).unwrap();
            for g in link.faces() {
                prop_assert!(!g.intersects(f));
                prop_assert!(d.contains_face(g.union(f)));
            }
        }
    }

    #[test]
    fn split_partitions_generators(i in ideal_on(5, 3), u in prop::collection::vec(0u32..=3, 5)) {
        let u = Monomial::from_exponents(u[..i.ctx().len()].to_vec());
        prop_assume!(!u.is_one());
        let (capped, free) = split(&i, &u).unwrap();
        let mut all: Vec<Monomial> = capped.gens().iter().chain(free.gens()).cloned().collect();
        all.sort();
        let mut expected = i.gens().to_vec();
        expected.sort();
        prop_assert_eq!(all, expected);
    }

    #[test]
    fn ideal_certificates_are_sound_and_monotone(i in ideal_on(5, 3), k in 0usize..3) {
        let d = IdealSearcher::new(Some(k)).decide(&i).unwrap();
        if let Decision::Decomposable(cert) = &d {
            prop_assert_eq!(cert.verify(i.ctx(), Some(k)).unwrap(), i.clone());
            prop_assert!(cert.max_support() <= k + 1);
            let order = resolution::order_from_certificate(cert, i.ctx()).unwrap();
            order.verify(&i).unwrap();
            let recursive = resolution::betti_recursive(cert, i.ctx()).unwrap();
            prop_assert_eq!(
                resolution::pd_reg_from_certificate(cert, i.ctx()).unwrap(),
                resolution::invariants_from_betti(&recursive).unwrap()
            );
            let wider = IdealSearcher::new(Some(k + 1)).decide(&i).unwrap();
            prop_assert!(wider.is_decomposable());
        }
    }

    #[test]
    fn complex_certificates_are_sound_and_monotone(d in complex_on(6), k in 0usize..3) {
        let decision = ComplexSearcher::new(Some(k)).decide(&d).unwrap();
        if let Decision::Decomposable(cert) = &decision {
            cert.verify(&d, Some(k)).unwrap();
            prop_assert!(ComplexSearcher::new(Some(k + 1)).decide(&d).unwrap().is_decomposable());
        }
    }

    #[test]
    fn modes_agree(d in complex_on(7), k in 0usize..3) {
        let direct = decomposition::k_decomposable_complex(&d, Some(k), Mode::Direct).unwrap();
        let dual = decomposition::k_decomposable_complex(&d, Some(k), Mode::Dual).unwrap();
        prop_assert_eq!(direct.is_decomposable(), dual.is_decomposable());
        if let Some(c) = dual.certificate() {
            c.verify(&d, Some(k)).unwrap();
        }
    }

    #[test]
    fn shedding_faces_are_shedding_monomials_of_the_dual(d in complex_on(6)) {
        prop_assume!(!d.is_void() && !d.facets().contains(&d.ground()));
        let dual = d.dual_ideal().unwrap();
        prop_assert_eq!(&dual, &ideal_of(&d.alexander_dual()));
        for sigma in d.faces().into_iter().filter(|f| !f.is_empty()) {
            let u = Monomial::of_set(d.ctx().len(), sigma);
            prop_assert_eq!(
                decomposition::is_shedding_face(&d, sigma).unwrap(),
                decomposition::is_shedding_monomial(&dual, &u).unwrap(),
                "σ = {}", d.ctx().fmt_set(sigma)
            );
        }
    }

    #[test]
    fn koszul_matches_hochster_on_squarefree(i in ideal_on(6, 1)) {
        prop_assert_eq!(
            oracle::betti_koszul(&i, Field::Rational).unwrap(),
            oracle::betti_hochster(&i, Field::Rational).unwrap()
        );
    }

    #[test]
    fn linear_quotients_are_field_independent(i in ideal_on(5, 2)) {
        if let Some(order) = resolution::linear_quotients_order(&i).unwrap() {
            let table = resolution::betti_from_order(&order);
            prop_assert_eq!(&oracle::betti_oracle(&i, Field::Rational).unwrap(), &table);
            prop_assert_eq!(&oracle::betti_oracle(&i, Field::Prime(2)).unwrap(), &table);
        }
    }

    #[test]
    fn euler_characteristic(d in complex_on(7)) {
        prop_assume!(!d.is_void());
        let s = oracle::chain_summary(&d, Field::Rational).unwrap();
        let alt = |v: &[usize]| v.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 }).sum::<i64>();
        prop_assert_eq!(alt(&s.reduced_homology()), alt(&s.face_counts));
    }

    #[test]
    fn terao(i in ideal_on(7, 1)) {
        let (pd_dual, reg) = resolution::terao_sides(&i).unwrap();
        prop_assert_eq!(pd_dual as i64, reg);
    }

    #[test]
    fn ha_bound(d in complex_on(7), pick in any::<prop::sample::Index>()) {
        let faces: Vec<VertexSet> = d.faces().into_iter().filter(|f| !f.is_empty()).collect();
        prop_assume!(!faces.is_empty());
        let sigma = faces[pick.index(faces.len())];
        let (lhs, rhs) = ha_sides(&d, sigma).unwrap();
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn decomposable_complexes(d in complex_on(7)) {
        prop_assume!(!d.is_void());
        let Decision::Decomposable(cert) = ComplexSearcher::new(None).decide(&d).unwrap() else {
            return Ok(());
        };
        let oracle_values = oracle::complex_reg_pd(&d, Field::Rational).unwrap();
        prop_assert_eq!(resolution::reg_pd_complex(&d, &cert).unwrap(), oracle_values);
        prop_assert_eq!(oracle_values.1, resolution::bight(&ideal_of(&d)).unwrap());
        if let Some(sigma) = cert.root() {
            let (lhs, rhs) = ha_sides(&d, sigma).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shedding_vertex_pd(d in complex_on(7)) {
        prop_assume!(!d.is_void());
        let Decision::Decomposable(ComplexCertificate::Node { sigma, .. }) =
            ComplexSearcher::new(Some(0)).decide(&d).unwrap()
        else {
            return Ok(());
        };
        let x = sigma.first().unwrap();
        let ambient = d.ground().without(x);
        let del = d.delete_face(sigma).unwrap().stanley_reisner_ideal(ambient).unwrap();
        let (_, pd_del) = oracle::quotient_reg_pd(&del, Field::Rational).unwrap();
        let (_, pd_lk) = oracle::complex_reg_pd(&d.link(sigma).unwrap(), Field::Rational).unwrap();
        let (_, pd) = oracle::complex_reg_pd(&d, Field::Rational).unwrap();
        prop_assert_eq!(pd, (pd_del + 1).max(pd_lk));
    }

    #[test]
    fn contraction_order_is_irrelevant(h in clutter_on(7), mask in any::<u64>(), rev in any::<bool>()) {
        let s = VertexSet(mask & h.vertices().0);
        let mut order: Vec<usize> = s.iter().collect();
        if rev {
            order.reverse();
        } else {
            let half = order.len() / 2;
            order.rotate_left(half);
        }
        let stepwise = order
            .iter()
            .try_fold(h.clone(), |acc, &v| clutters::contraction(&acc, v));
        prop_assert_eq!(stepwise, clutters::contraction_set(&h, s));
    }

    #[test]
    fn clutter_local_properties(h in clutter_on(7)) {
        for x in h.vertices().iter() {
            if clutters::is_simplicial_vertex(&h, x).unwrap() {
                for &e in h.edges().iter().filter(|e| e.contains(x)) {
                    prop_assert!(clutters::is_containment_pair(&h, x, e).unwrap());
                }
            }
        }
        for &e in h.edges() {
            for x in e.iter() {
                clutters::lemma_h_ideals(&h, e, x).unwrap();
            }
        }
    }

    #[test]
    fn minors_of_chordal_clutters_are_chordal(h in clutter_on(6)) {
        match clutters::is_chordal(&h) {
            Chordality::Chordal => {
                for v in h.vertices().iter() {
                    prop_assert!(clutters::is_chordal(&clutters::deletion(&h, v).unwrap()).is_chordal());
                    if let Ok(c) = clutters::contraction(&h, v) {
                        prop_assert!(clutters::is_chordal(&c).is_chordal());
                    }
                }
            }
            Chordality::NotChordal(trace) => {
                let minor = trace.replay(&h).unwrap();
                prop_assert!(clutters::simplicial_vertices(&minor).is_empty());
            }
            Chordality::Undecided => prop_assert!(false, "budget exhausted on a small clutter"),
        }
    }
}
