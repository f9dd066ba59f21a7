//! Acceptance suite: one test per criterion, each printing a pass line and
//! holding its stated time budget.

use std::time::{Duration, Instant};

use biclosed::affine::{closure, AffineRoot, EPSet};
use biclosed::braid::{build_braid_graph, connect, realize, Realization, RestrictionVertex};
use biclosed::canonical::{enumerate_canonical, generators, is_finitely_generated, truncation_gap};
use biclosed::oracle;
use biclosed::roots::{system, Root, RootSystemType, SimpleSet};
use biclosed::words::{maximal_elements, periodic_word, WBarElement};

fn ar(a: i32, b: i32, level: i32) -> AffineRoot {
    AffineRoot::new(Root::new(a, b), level)
}

fn within(budget: Duration, start: Instant, label: &str) {
    let elapsed = start.elapsed();
    println!("{label}: PASS in {elapsed:?} (budget {budget:?})");
    assert!(elapsed <= budget, "{label} exceeded its time budget: {elapsed:?}");
}

/// Criterion 1: d_L = h_L exhaustively over every type, subset and root.
#[test]
fn criterion_01_d_equals_h() {
    let t = Instant::now();
    for (ty, positives) in [
        (RootSystemType::A2, 3),
        (RootSystemType::B2, 4),
        (RootSystemType::G2, 6),
    ] {
        let rep = oracle::d_equals_h(ty);
        assert_eq!(rep.cases, positives * 4);
        assert!(rep.passed(), "{:?}", rep.failures);
    }
    within(Duration::from_secs(1), t, "criterion 1 (d = h exhaustively)");
}

/// Criterion 2: the three-root-sum lemma over all qualifying triples.
#[test]
fn criterion_02_three_root_sum() {
    let t = Instant::now();
    let mut total = 0;
    for ty in RootSystemType::ALL {
        let rep = oracle::three_root_sum(ty);
        assert!(rep.passed(), "{:?}", rep.failures);
        total += rep.cases;
    }
    assert!(total > 0, "B2 and G2 have qualifying triples");
    within(Duration::from_secs(1), t, "criterion 2 (three-root-sum lemma)");
}

/// Criterion 3: closure((Φ⁺_{L,∅})_n) = {α+kδ : 0 ≤ k ≤ n·d(α)} exactly.
#[test]
fn criterion_03_closure_formula() {
    let t = Instant::now();
    for ty in RootSystemType::ALL {
        let rep = oracle::closure_formula(ty, 0);
        assert!(rep.passed(), "{ty}: {:?}", rep.failures.first());
    }
    within(Duration::from_secs(10), t, "criterion 3 (closure formula)");
}

/// Criterion 4: the periodic word s_α s_β s_{δ−α−β}⋯ canonicalizes to
/// (e, {β}) with inversion set widehat{α, α+β}, exactly.
#[test]
fn criterion_04_bijection_example() {
    let t = Instant::now();
    let ty = RootSystemType::A2;
    let u = periodic_word(ty, &[], &[0, 1, 2]).unwrap();
    assert!(u.word().is_empty());
    assert_eq!(u.l_set(), SimpleSet::B);
    let want = EPSet::widehat(ty, &[Root::new(1, 0), Root::new(1, 1)]);
    assert_eq!(u.epset(), &want);
    within(Duration::from_secs(1), t, "criterion 4 (bijection example)");
}

/// Criterion 5: maximal-element counts 6/8/12, and for Ã₂ the six
/// inversion sets are the six positive-system hats, matching the six
/// displayed periodic expressions after canonicalization.
#[test]
fn criterion_05_maximal_elements() {
    let t = Instant::now();
    for (ty, n) in [
        (RootSystemType::A2, 6),
        (RootSystemType::B2, 8),
        (RootSystemType::G2, 12),
    ] {
        let maxes = maximal_elements(ty);
        assert_eq!(maxes.len(), n);
        let mut hats: Vec<EPSet> = biclosed::roots::positive_systems(system(ty))
            .iter()
            .map(|ps| EPSet::widehat(ty, &ps.roots))
            .collect();
        hats.sort_by_key(|e| format!("{e:?}"));
        let mut got: Vec<EPSet> = maxes.iter().map(|m| m.epset().clone()).collect();
        got.sort_by_key(|e| format!("{e:?}"));
        assert_eq!(got, hats);
    }
    // The six displayed periodic expressions of the Ã₂ example.
    let ty = RootSystemType::A2;
    let displayed: [(&[u8], [Root; 3]); 6] = [
        (&[0, 1, 0, 2], [Root::new(1, 0), Root::new(0, 1), Root::new(1, 1)]),
        (&[2, 0, 1, 0], [Root::new(-1, 0), Root::new(0, -1), Root::new(-1, -1)]),
        (&[1, 2, 1, 0], [Root::new(-1, 0), Root::new(0, 1), Root::new(-1, -1)]),
        (&[0, 1, 2, 1], [Root::new(1, 0), Root::new(0, -1), Root::new(1, 1)]),
        (&[1, 0, 2, 0], [Root::new(-1, 0), Root::new(0, 1), Root::new(1, 1)]),
        (&[0, 2, 0, 1], [Root::new(1, 0), Root::new(0, -1), Root::new(-1, -1)]),
    ];
    let maxes = maximal_elements(ty);
    for (cycle, dirs) in displayed {
        let u = periodic_word(ty, &[], cycle).unwrap();
        assert_eq!(u.epset(), &EPSet::widehat(ty, &dirs), "cycle {cycle:?}");
        assert!(maxes.contains(&u));
    }
    within(Duration::from_secs(5), t, "criterion 5 (maximal elements)");
}

/// Criterion 6: ortholattice laws over ≥200 canonical elements per type.
#[test]
fn criterion_06_ortholattice_laws() {
    let t = Instant::now();
    for ty in RootSystemType::ALL {
        let rep = oracle::lattice_laws(ty, 0);
        assert!(rep.passed(), "{ty}: {:?}", rep.failures.first());
        assert!(rep.cases >= 200);
    }
    within(Duration::from_secs(120), t, "criterion 6 (ortholattice laws)");
}

/// Criterion 7: finitely generated canonical forms with |w| ≤ 4 are
/// regenerated by their generating sets (checked exactly and on the
/// window ≤ 20); non-finitely-generated ones fail at truncations 2, 4, 6
/// with the missing root exhibited one level above the cut.
#[test]
fn criterion_07_finitely_generated_classification() {
    let t = Instant::now();
    for ty in RootSystemType::ALL {
        let mut fg_count = 0;
        let mut nfg_count = 0;
        for c in enumerate_canonical(ty, 4) {
            if is_finitely_generated(&c) {
                fg_count += 1;
                let gens = generators(&c).unwrap();
                let cl = closure(ty, &gens).unwrap();
                assert_eq!(&cl, c.epset(), "{ty} {c:?}");
                assert_eq!(cl.truncate(20), c.epset().truncate(20));
            } else {
                nfg_count += 1;
                for tlevel in [2, 4, 6] {
                    let (_, witness) = truncation_gap(&c, tlevel).unwrap();
                    assert_eq!(witness.level, tlevel + 1, "{ty} {c:?}");
                    assert!(c.epset().contains(witness));
                }
            }
        }
        assert!(fg_count > 0 && nfg_count > 0, "{ty}: fg={fg_count} nfg={nfg_count}");
    }
    within(Duration::from_secs(120), t, "criterion 7 (finitely generated classification)");
}

/// Criterion 8: the worked braid example connects with certified
/// intermediates, and every restriction with |R| ≤ 4 over level-≤1 roots
/// of Ã₂ has a connected braid graph.
#[test]
fn criterion_08_braid_worked_example_and_connectivity() {
    let t = Instant::now();
    let ty = RootSystemType::A2;
    let budget = oracle::braid_budget(ty);
    let v1 = RestrictionVertex::new(
        ty,
        &[ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 1), ar(1, 0, 1), ar(-1, 0, 1), ar(0, -1, 1), ar(-1, -1, 1)],
    )
    .unwrap();
    let v2 = RestrictionVertex::new(
        ty,
        &[ar(0, 1, 0), ar(-1, 0, 1), ar(1, 1, 1), ar(1, 0, 1), ar(-1, -1, 1), ar(0, -1, 1), ar(1, 0, 0)],
    )
    .unwrap();
    let moves = connect(&v1, &v2, budget).unwrap();
    assert!(!moves.is_empty());
    let mut cur = v1.clone();
    for (step, after) in &moves {
        // Each step reverses a contiguous block equal to R ∩ (its plane).
        let members: Vec<AffineRoot> =
            cur.order.iter().copied().filter(|&r| step.plane.contains(r)).collect();
        assert_eq!(members.len(), step.hi - step.lo + 1);
        let mut expect = cur.order.clone();
        expect[step.lo..=step.hi].reverse();
        assert_eq!(&expect, &after.order);
        assert!(matches!(realize(after, budget), Realization::Realizable(_)));
        cur = after.clone();
    }
    assert_eq!(cur, v2);

    // Exhaustive connectivity for |R| ≤ 4 over levels ≤ 1.
    let universe = biclosed::affine::universe(ty, 1);
    let n = universe.len();
    let mut checked = 0;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() > 4 {
            continue;
        }
        let r: Vec<AffineRoot> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| universe[i]).collect();
        let g = build_braid_graph(ty, &r, budget).unwrap();
        assert_eq!(g.unknown, 0, "budget exhausted on R={r:?}");
        assert!(g.components <= 1, "disconnected graph on R={r:?}");
        checked += 1;
    }
    assert_eq!(checked, 255);
    within(Duration::from_secs(300), t, "criterion 8 (braid worked example and connectivity)");
}

/// Criterion 9: the quasi-positive counterexample verdicts hold at both
/// windows.
#[test]
fn criterion_09_quasi_positive_counterexample() {
    let t = Instant::now();
    for n in [6, 10] {
        let r = biclosed::lattice::quasi_positive_counterexample(n);
        assert!(r.lower_bounds_contained);
        assert!(r.closure_fills_intersection);
        assert!(r.not_coclosed);
    }
    within(Duration::from_secs(1), t, "criterion 9 (quasi-positive counterexample)");
}

/// Criterion 10: the sampled structural lemmas — Join Orthogonality,
/// dominance, no Φ_x′ ⊊ Φ_y, and |Φ_v′ ∖ Φ_u| ≠ 1 — with zero failures.
#[test]
fn criterion_10_structural_lemmas() {
    let t = Instant::now();
    for ty in RootSystemType::ALL {
        for rep in [oracle::jop(ty, 0), oracle::dominance(ty), oracle::distance_not_one(ty)] {
            assert!(rep.passed(), "{ty} {}: {:?}", rep.suite, rep.failures.first());
            assert!(rep.cases > 0);
        }
    }
    within(Duration::from_secs(60), t, "criterion 10 (structural lemmas)");
}

/// The words sanity check behind several criteria: inversion counts equal
/// lengths for every word up to length 8, exhaustively.
#[test]
fn inversion_count_equals_length() {
    for ty in RootSystemType::ALL {
        for entry in biclosed::weyl::elements_up_to(ty, 8).iter() {
            let w = biclosed::words::FiniteWord::new(ty, &entry.word).unwrap();
            assert_eq!(w.inversion_roots().len(), entry.word.len());
            assert_eq!(WBarElement::Finite(w.clone()).epset().cardinality(), Some(entry.word.len() as u64));
        }
    }
}
