use std::collections::HashSet;
use std::sync::Arc;

use contact_bgg::bgg::build_bgg;
use contact_bgg::descent::{descended_cohomology, CohomologyProfile};
use contact_bgg::kostant::homology_weights;
use contact_bgg::lattice::{LieType, RootSystem, Weight, WeylElement};
use contact_bgg::parabolic::{hasse_diagram, Parabolic};
use contact_bgg::repinfo::{freudenthal, freudenthal_scaled, kernel_dim, weyl_dim, CartanElement};
use contact_bgg::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const ALGEBRAS: &[&str] = &["A2", "A3", "B2", "B3", "C2", "C3", "D4"];

fn rs(name: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(name.parse::<LieType>().unwrap()))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn algebra() -> impl Strategy<Value = Arc<RootSystem>> {
    prop::sample::select(ALGEBRAS).prop_map(rs)
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..10)
}

fn int_weight(rank: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, rank)
}

fn element(rs: &RootSystem, w: &[usize]) -> WeylElement {
    rs.element_from_word(w).unwrap()
}

/// Algebra, two Weyl words and two integral weights of matching rank.
fn algebra_words_weights() -> impl Strategy<Value = (Arc<RootSystem>, Vec<usize>, Vec<usize>, Vec<i64>, Vec<i64>)> {
    algebra().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), word(n), word(n), int_weight(n, -4, 4), int_weight(n, 0, 4))
    })
}

fn dominant_on(name: &'static str, hi: i64) -> impl Strategy<Value = (Arc<RootSystem>, Vec<i64>)> {
    let rs = rs(name);
    let n = rs.rank();
    (Just(rs), int_weight(n, 0, hi))
}

fn profile() -> impl Strategy<Value = CohomologyProfile> {
    (1usize..=6, 0u64..=5).prop_flat_map(|(n, w1)| {
        let dim = 2 * n;
        prop::collection::vec(0u64..=5, dim + 1).prop_flat_map(move |betti| {
            let bounds: Vec<u64> = (0..dim - 1).map(|j| betti[j].min(betti[j + 2])).collect();
            let ranks = bounds.iter().map(|&b| 0..=b).collect::<Vec<_>>();
            (Just(betti), ranks).prop_map(move |(betti, ranks)| CohomologyProfile::new(dim, betti, ranks, w1).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn form_is_weyl_invariant((rs, w, _, a, b) in algebra_words_weights()) {
        let w = element(&rs, &w);
        let (x, y) = (Weight::from_ints(&a), Weight::from_ints(&b));
        prop_assert_eq!(
            rs.inner_product(&w.apply(&x), &w.apply(&y)).unwrap(),
            rs.inner_product(&x, &y).unwrap()
        );
    }

    #[test]
    fn affine_action_composes((rs, w1, w2, a, _) in algebra_words_weights()) {
        let (e1, e2) = (element(&rs, &w1), element(&rs, &w2));
        let lam = Weight::from_ints(&a);
        let lhs = rs.affine_act(&rs.compose(&e1, &e2), &lam).unwrap();
        let rhs = rs.affine_act(&e1, &rs.affine_act(&e2, &lam).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn affine_shift_is_positive_root_combination((rs, w, _, _, a) in algebra_words_weights()) {
        let lam = Weight::from_ints(&a);
        let moved = rs.affine_act(&element(&rs, &w), &lam).unwrap();
        for c in rs.weight_to_root_basis(&lam.sub(&moved)).unwrap() {
            prop_assert!(c.is_integer() && !c.is_negative());
        }
    }

    #[test]
    fn kostant_weights_are_levi_dominant_and_distinct(
        (rs, a) in algebra().prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), int_weight(n, 0, 3)) }),
        mask in 1u32..16,
    ) {
        let crossed: Vec<usize> = (1..=rs.rank()).filter(|i| mask & (1 << ((i - 1) % 4)) != 0).collect();
        prop_assume!(!crossed.is_empty());
        let p = Parabolic::new(rs.clone(), &crossed).unwrap();
        let table = homology_weights(&p, &Weight::from_ints(&a)).unwrap();
        let mut seen = HashSet::new();
        for (_, e) in table.entries() {
            for &i in p.levi_simples() {
                let c = &e.weight.coeffs()[i - 1];
                prop_assert!(c.is_integer() && !c.is_negative());
            }
            prop_assert!(seen.insert(e.weight.clone()));
        }
        let counts = hasse_diagram(&p).length_counts();
        for (k, &c) in counts.iter().enumerate() {
            prop_assert_eq!(table.degree(k).len(), c);
        }
        prop_assert_eq!(table.euler_characteristic(), 0);
    }

    #[test]
    fn bgg_edges_drop_by_positive_roots((rs, a) in dominant_on("C3", 3)) {
        let p = Parabolic::new(rs.clone(), &[1]).unwrap();
        let d = build_bgg(&p, &Weight::from_ints(&a), None).unwrap();
        prop_assert_eq!(d.euler_characteristic(), 0);
        for e in &d.edges {
            prop_assert_eq!(d.nodes[e.to].degree, d.nodes[e.from].degree + 1);
            let diff = d.nodes[e.from].weight.sub(&d.nodes[e.to].weight);
            for c in rs.weight_to_root_basis(&diff).unwrap() {
                prop_assert!(c.is_integer() && !c.is_negative());
            }
        }
    }

    #[test]
    fn c_chain_orders_are_symmetric(n in 2usize..=4, a in prop::collection::vec(0i64..=3, 5)) {
        let rs = rs(&format!("C{}", n + 1));
        let lam = Weight::from_ints(&a[..n + 1]);
        let d = build_bgg(&Parabolic::new(rs, &[1]).unwrap(), &lam, None).unwrap();
        let orders: Vec<u64> = d.edges.iter().map(|e| e.order).collect();
        let mut reversed = orders.clone();
        reversed.reverse();
        prop_assert_eq!(orders, reversed);
    }

    #[test]
    fn multiplicities_sum_to_dimension(
        (rs, a) in prop_oneof![dominant_on("A2", 4), dominant_on("A3", 2), dominant_on("C2", 3), dominant_on("C3", 1)]
    ) {
        let lam = Weight::from_ints(&a);
        let table = freudenthal(&rs, &lam).unwrap();
        prop_assert_eq!(table.total(), weyl_dim(&rs, &lam).unwrap());
    }

    #[test]
    fn multiplicities_are_orbit_constant(
        (rs, a) in prop_oneof![dominant_on("A3", 2), dominant_on("B3", 1), dominant_on("C3", 1)],
        words in prop::collection::vec(prop::collection::vec(1usize..=3, 0..8), 5),
    ) {
        let table = freudenthal(&rs, &Weight::from_ints(&a)).unwrap();
        let sample: Vec<_> = table.iter().map(|(w, &m)| (w.clone(), m)).take(20).collect();
        for w in &words {
            let e = element(&rs, w);
            for (mu, m) in &sample {
                prop_assert_eq!(table.get(&e.apply(mu)), *m);
            }
        }
    }

    #[test]
    fn freudenthal_ignores_form_scale((rs, a) in prop_oneof![dominant_on("B2", 3), dominant_on("C3", 1)], num in 1i64..9, den in 1i64..9) {
        let lam = Weight::from_ints(&a);
        prop_assert_eq!(freudenthal_scaled(&rs, &lam, &q(num, den)).unwrap(), freudenthal(&rs, &lam).unwrap());
    }

    #[test]
    fn kernel_dim_ignores_scaling(
        (rs, a) in dominant_on("A3", 2),
        x in prop::collection::vec(-3i64..=3, 3),
        num in prop_oneof![-7i64..=-1, 1i64..=7],
        den in 1i64..5,
    ) {
        let lam = Weight::from_ints(&a);
        let x: Vec<Rational> = x.iter().map(|&c| q(c, 1)).collect();
        let scaled: Vec<Rational> = x.iter().map(|c| c * q(num, den)).collect();
        let k1 = kernel_dim(&rs, &lam, &CartanElement::new(x.clone())).unwrap();
        prop_assert_eq!(k1, kernel_dim(&rs, &lam, &CartanElement::new(scaled)).unwrap());
        if x.iter().all(Zero::is_zero) {
            prop_assert_eq!(k1, weyl_dim(&rs, &lam).unwrap());
        }
    }

    #[test]
    fn descended_cohomology_identities(p in profile()) {
        let r = descended_cohomology(&p);
        prop_assert_eq!(r.dims.len(), p.dim_m + 2);
        prop_assert_eq!(r.euler_characteristic(), 0);
        prop_assert_eq!(r.dims[0], p.betti_at(0) * p.w1);
    }

    #[test]
    fn raising_a_rank_never_raises_cohomology(p in profile(), j in 0usize..11) {
        prop_assume!(j < p.dim_m - 1);
        let mut ranks = p.lefschetz_ranks.clone();
        ranks.resize(p.dim_m - 1, 0);
        ranks[j] += 1;
        if let Ok(bigger) = CohomologyProfile::new(p.dim_m, p.betti.clone(), ranks, p.w1) {
            let (before, after) = (descended_cohomology(&p), descended_cohomology(&bigger));
            for (a, b) in after.dims.iter().zip(&before.dims) {
                prop_assert!(a <= b);
            }
        }
    }
}

#[test]
fn rho_orbits_have_group_order() {
    for (name, order) in [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192)] {
        let rs = rs(name);
        let orbit: HashSet<Weight> = rs.weyl_group(1000).unwrap().iter().map(|w| w.apply(rs.rho())).collect();
        assert_eq!(orbit.len(), order);
    }
}

#[test]
fn contact_length_counts_are_palindromic() {
    for n in 2..=5 {
        for (name, crossed) in [(format!("C{}", n + 1), vec![1]), (format!("A{}", n + 1), vec![1, n + 1])] {
            let counts = hasse_diagram(&Parabolic::new(rs(&name), &crossed).unwrap()).length_counts();
            let mut rev = counts.clone();
            rev.reverse();
            assert_eq!(counts, rev, "{name}");
        }
    }
}
