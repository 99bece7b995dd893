//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use contact_bgg::bgg::{build_bgg, operator_order, Preset, PresetInput};
use contact_bgg::descent::{cpn_profile, descended_cohomology, les_oracle, CohomologyProfile};
use contact_bgg::kostant::homology_weights;
use contact_bgg::lattice::{LieType, RootSystem, Weight};
use contact_bgg::parabolic::{brute_force_hasse, hasse_diagram, relative_hasse, Parabolic};
use contact_bgg::repinfo::{center_character, freudenthal, weyl_dim, GroupTag};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn rs(name: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(name.parse::<LieType>().unwrap()))
}

fn par(name: &str, crossed: &[usize]) -> Parabolic {
    Parabolic::new(rs(name), crossed).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn hasse_shape_c() -> Check {
    for n in 2..=5 {
        let start = Instant::now();
        let h = hasse_diagram(&par(&format!("C{}", n + 1), &[1]));
        within(Duration::from_secs(1), start, &format!("C{}", n + 1))?;
        ensure(h.len() == 2 * n + 2, || format!("C{}: {} elements", n + 1, h.len()))?;
        ensure(h.length_counts() == vec![1; 2 * n + 2], || format!("C{}: {:?}", n + 1, h.length_counts()))?;
        ensure(h.is_chain(), || format!("C{}: not a chain", n + 1))?;
    }
    Ok(())
}

fn hasse_shape_a() -> Check {
    for n in 2..=5 {
        let start = Instant::now();
        let h = hasse_diagram(&par(&format!("A{}", n + 1), &[1, n + 1]));
        within(Duration::from_secs(1), start, &format!("A{}", n + 1))?;
        let mut expected: Vec<usize> = (1..=n + 1).collect();
        expected.extend((1..=n + 1).rev());
        ensure(h.length_counts() == expected, || format!("A{}: {:?}", n + 1, h.length_counts()))?;
        ensure(h.len() == (n + 1) * (n + 2), || format!("A{}: {} elements", n + 1, h.len()))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut cases: Vec<(&str, Vec<usize>)> = Vec::new();
    for alg in ["A3", "B3", "C3"] {
        for mask in 1u32..8 {
            cases.push((alg, (1..=3).filter(|i| mask & (1 << (i - 1)) != 0).collect()));
        }
    }
    cases.push(("D4", vec![2]));
    for (alg, crossed) in cases {
        let p = par(alg, &crossed);
        let slow = brute_force_hasse(&p).map_err(|e| e.to_string())?;
        ensure(hasse_diagram(&p).action_set() == slow.action_set(), || format!("{alg} {crossed:?} differs"))?;
    }
    within(Duration::from_secs(30), start, "oracle comparison")
}

fn affine_regression() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        // Degree one of the C chain: (-k-2)ω_1 + (a_2+k+1)ω_2.
        let n = rng.gen_range(2..=5usize);
        let lam: Vec<i64> = (0..=n).map(|_| rng.gen_range(0..6)).collect();
        let (k, a2) = (lam[0], lam[1]);
        let t = homology_weights(&par(&format!("C{}", n + 1), &[1]), &Weight::from_ints(&lam)).map_err(|e| e.to_string())?;
        let mut expected = lam.clone();
        expected[0] = -k - 2;
        expected[1] = a2 + k + 1;
        ensure(t.degree(1)[0].weight == Weight::from_ints(&expected), || format!("C{} degree 1 for {lam:?}", n + 1))?;

        // Degree two for C3, λ = kω_1 + ℓω_2: (-k-ℓ-3)ω_1 + kω_2 + (ℓ+1)ω_3.
        let (k, l) = (rng.gen_range(0..6i64), rng.gen_range(0..6i64));
        let t = homology_weights(&par("C3", &[1]), &Weight::from_ints(&[k, l, 0])).map_err(|e| e.to_string())?;
        ensure(t.degree(2)[0].weight == Weight::from_ints(&[-k - l - 3, k, l + 1]), || format!("C3 degree 2 for k={k} l={l}"))?;

        // Degree one of A_{n+1} with nodes 1 and n+1 crossed: shifts
        // -2(k+1)ω_1 + (k+1)ω_2 and (ℓ+1)ω_n - 2(ℓ+1)ω_{n+1}.
        let n = rng.gen_range(2..=5usize);
        let lam: Vec<i64> = (0..=n).map(|_| rng.gen_range(0..6)).collect();
        let (k, l) = (lam[0], lam[n]);
        let lam_w = Weight::from_ints(&lam);
        let t = homology_weights(&par(&format!("A{}", n + 1), &[1, n + 1]), &lam_w).map_err(|e| e.to_string())?;
        let mut left = vec![0; n + 1];
        left[0] = -2 * (k + 1);
        left[1] = k + 1;
        let mut right = vec![0; n + 1];
        right[n - 1] = l + 1;
        right[n] = -2 * (l + 1);
        let got: HashSet<Weight> = t.degree(1).iter().map(|e| e.weight.sub(&lam_w)).collect();
        let want: HashSet<Weight> = [Weight::from_ints(&left), Weight::from_ints(&right)].into();
        ensure(got == want, || format!("A{} degree 1 shifts for {lam:?}", n + 1))?;
    }
    Ok(())
}

fn relative_hasse_shape() -> Check {
    for n in 2..=5 {
        let name = format!("A{}", n + 1);
        let h = relative_hasse(&par(&name, &[1]), &par(&name, &[1, n + 1])).map_err(|e| e.to_string())?;
        ensure(h.len() == n + 1, || format!("{name}: {} elements", h.len()))?;
        ensure(h.length_counts() == vec![1; n + 1], || format!("{name}: {:?}", h.length_counts()))?;
    }
    Ok(())
}

fn operator_orders() -> Check {
    for name in ["C3", "C4"] {
        let p = par(name, &[1]);
        let h = hasse_diagram(&p);
        let rank = p.root_system().rank();
        for k in 0..=2i64 {
            for l in 0..=2i64 {
                let mut lam = vec![0; rank];
                lam[0] = k;
                lam[1] = l;
                let lam = Weight::from_ints(&lam);
                let e = h.elements();
                let first = operator_order(&p, &lam, &e[0], &e[1]).map_err(|e| e.to_string())?;
                let second = operator_order(&p, &lam, &e[1], &e[2]).map_err(|e| e.to_string())?;
                ensure(first == (k + 1) as u64 && second == (l + 1) as u64, || {
                    format!("{name} k={k} l={l}: orders {first}, {second}")
                })?;
            }
        }
    }
    Ok(())
}

fn euler_characteristic() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, crossed) in [("C3", vec![1]), ("A3", vec![1, 3])] {
        let p = par(name, &crossed);
        for _ in 0..20 {
            let lam: Vec<i64> = (0..3).map(|_| rng.gen_range(0..5)).collect();
            let d = build_bgg(&p, &Weight::from_ints(&lam), None).map_err(|e| e.to_string())?;
            let chi: i128 = d
                .nodes
                .iter()
                .map(|n| if n.degree % 2 == 0 { n.dim as i128 } else { -(n.dim as i128) })
                .sum();
            ensure(chi == 0, || format!("{name} {lam:?}: alternating sum {chi}"))?;
        }
    }
    Ok(())
}

/// Draws weights until both parities of `parity` have appeared `per` times.
fn balanced_weights(rng: &mut ChaCha8Rng, rank: usize, per: usize, parity: impl Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    while even.len() < per || odd.len() < per {
        let w: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..4)).collect();
        let bucket = if parity(&w) { &mut even } else { &mut odd };
        if bucket.len() < per {
            bucket.push(w);
        }
    }
    even.into_iter().chain(odd).collect()
}

fn parity_integrability() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // Type C: the adjoint group sees exactly the weights in the root lattice.
    for name in ["C3", "C4"] {
        let rs = rs(name);
        let in_root_lattice = |w: &[i64]| {
            rs.weight_to_root_basis(&Weight::from_ints(w)).unwrap().iter().all(|c| c.is_integer())
        };
        for w in balanced_weights(&mut rng, rs.rank(), 3, in_root_lattice) {
            let c = center_character(&rs, &Weight::from_ints(&w), GroupTag::AdjointC).map_err(|e| e.to_string())?;
            ensure(c.integrable == in_root_lattice(&w), || format!("{name} {w:?}: integrable = {}", c.integrable))?;
        }
    }
    // Type A_{m-1}, m even: -1 ∈ SL(m) acts on V(λ) by (-1)^{Σ i·a_i}.
    for name in ["A3", "A5"] {
        let rs = rs(name);
        let minus_one_trivial = |w: &[i64]| w.iter().enumerate().map(|(i, a)| (i as i64 + 1) * a).sum::<i64>() % 2 == 0;
        for w in balanced_weights(&mut rng, rs.rank(), 3, minus_one_trivial) {
            let c = center_character(&rs, &Weight::from_ints(&w), GroupTag::AdjointAEven).map_err(|e| e.to_string())?;
            ensure(c.integrable == minus_one_trivial(&w), || format!("{name} {w:?}: integrable = {}", c.integrable))?;
        }
    }
    // Presets pick the matching group.
    for (preset, group) in [("ricci-type:2,1", Some(GroupTag::AdjointC)), ("bilagrangean:4,1,1", Some(GroupTag::AdjointAEven))] {
        let input = preset.parse::<Preset>().and_then(|p| p.inputs()).map_err(|e| e.to_string())?;
        let chosen = match input {
            PresetInput::Absolute { group, .. } => group,
            PresetInput::Relative { .. } => None,
        };
        ensure(chosen == group, || format!("{preset}: group {chosen:?}"))?;
    }
    Ok(())
}

fn multiplicities() -> Check {
    let start = Instant::now();
    let err = |e: contact_bgg::Error| e.to_string();
    let a2 = rs("A2");
    let adj = freudenthal(&a2, &Weight::from_ints(&[1, 1])).map_err(err)?;
    ensure(adj.get(&Weight::zero(2)) == 2, || "A2 adjoint zero weight".into())?;
    let c2 = rs("C2");
    let t = freudenthal(&c2, &Weight::from_ints(&[0, 1])).map_err(err)?;
    ensure(t.total() == 5 && t.get(&Weight::zero(2)) == 1, || format!("C2 ω_2: total {}", t.total()))?;
    let a1 = freudenthal(&rs("A1"), &Weight::from_ints(&[2])).map_err(err)?;
    let got: BTreeMap<Weight, u64> = a1.iter().map(|(w, &m)| (w.clone(), m)).collect();
    let want: BTreeMap<Weight, u64> = [2, 0, -2].iter().map(|&c| (Weight::from_ints(&[c]), 1)).collect();
    ensure(got == want, || "A1 2ω_1".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let systems = [rs("A2"), rs("A3"), rs("C2"), rs("C3")];
    let mut tested = 0;
    while tested < 10 {
        let r = &systems[tested % systems.len()];
        let lam = Weight::from_ints(&(0..r.rank()).map(|_| rng.gen_range(0..5)).collect::<Vec<_>>());
        let dim = weyl_dim(r, &lam).map_err(err)?;
        if dim > 2000 {
            continue;
        }
        let total = freudenthal(r, &lam).map_err(err)?.total();
        ensure(total == dim, || format!("{} {lam}: Σ mult {total} vs dim {dim}", r.lie_type()))?;
        tested += 1;
    }
    within(Duration::from_secs(10), start, "multiplicities")
}

fn descended_cohomology_shape() -> Check {
    for n in 2..=5 {
        for w1 in [1, 3, 7] {
            let dims = descended_cohomology(&cpn_profile(n, w1).map_err(|e| e.to_string())?).dims;
            let mut want = vec![0; 2 * n + 2];
            want[0] = w1;
            want[2 * n + 1] = w1;
            ensure(dims == want, || format!("CP^{n}, w1 = {w1}: {dims:?}"))?;

            let mut betti = vec![0; 2 * n + 1];
            betti[0] = 1;
            let point = CohomologyProfile::new(2 * n, betti, vec![], w1).map_err(|e| e.to_string())?;
            let dims = descended_cohomology(&point).dims;
            let mut want = vec![0; 2 * n + 2];
            want[0] = w1;
            want[1] = w1;
            ensure(dims == want, || format!("contractible, n = {n}, w1 = {w1}: {dims:?}"))?;
        }
    }
    Ok(())
}

fn random_profile(rng: &mut ChaCha8Rng) -> CohomologyProfile {
    let dim = 2 * rng.gen_range(1..=6usize);
    let betti: Vec<u64> = (0..=dim).map(|_| rng.gen_range(0..=5)).collect();
    let ranks: Vec<u64> = (0..dim - 1).map(|j| rng.gen_range(0..=betti[j].min(betti[j + 2]))).collect();
    CohomologyProfile::new(dim, betti, ranks, rng.gen_range(0..=5)).unwrap()
}

fn les_equivalence() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let profile = random_profile(&mut rng);
        let expected = descended_cohomology(&profile);
        for seed in 0..3 {
            let got = les_oracle(&profile, 1000 * i + seed).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("profile {profile:?} seed {seed}: {:?} vs {:?}", got.dims, expected.dims))?;
        }
    }
    within(Duration::from_secs(30), start, "LES comparison")
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_contact-bgg");
    let examples: [&[&str]; 6] = [
        &["bgg", "C3", "--cross", "1", "--weight", "2,1,0", "--group", "adjoint-C", "--format", "json"],
        &["descend", "--cpn", "4", "--w1", "7", "--format", "text"],
        &["hasse", "A4", "--cross", "1,4", "--format", "text"],
        &["hasse", "C3", "--cross", "1", "--format", "dot"],
        &["hasse", "A3", "--cross", "1,3", "--format", "dot"],
        &["bgg", "--preset", "relative-parakahler:3,2,1/2", "--format", "json"],
    ];
    for args in examples {
        let start = Instant::now();
        let first = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        within(Duration::from_secs(5), start, &args.join(" "))?;
        let second = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure(first.status.success(), || format!("{} failed", args.join(" ")))?;
        ensure(first.stdout == second.stdout, || format!("{} differs between runs", args.join(" ")))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("Hasse shape, type C", hasse_shape_c),
        ("Hasse shape, type A", hasse_shape_a),
        ("Oracle equivalence", oracle_equivalence),
        ("Affine-action regression", affine_regression),
        ("Relative Hasse", relative_hasse_shape),
        ("Operator orders", operator_orders),
        ("Euler characteristic", euler_characteristic),
        ("Parity/integrability", parity_integrability),
        ("Multiplicities", multiplicities),
        ("Descended cohomology", descended_cohomology_shape),
        ("LES oracle equivalence", les_equivalence),
        ("Determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
