//! Acceptance gate: every criterion runs at its stated tolerance and time
//! bound, printing one PASS/FAIL line each. Exits nonzero if any fails.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use betpo_core::generators::b_cycle;
use betpo_core::graphs::is_connected;
use betpo_core::mso::DEFAULT_MAX_COMPONENT;
use betpo_core::oracle::{structure_from_mask, symmetric_triple_pairs};
use betpo_core::*;
use common::shuffled_random_poset;

type Outcome = std::result::Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(|k| enumerate_posets(k).unwrap()).collect()
}

fn b2_closed_structures(n: usize) -> Vec<TernaryStructure> {
    let pairs = symmetric_triple_pairs(n);
    (0..1u64 << pairs.len())
        .map(|m| structure_from_mask(n, &pairs, m))
        .collect()
}

/// Seeded random posets with `1 ≤ n ≤ max_n` and varied densities.
fn random_posets(count: u64, max_n: usize, salt: u64) -> Vec<Poset> {
    (0..count)
        .map(|i| {
            let seed = salt.wrapping_mul(1_000_003).wrapping_add(i);
            let n = 1 + (seed % max_n as u64) as usize;
            let prob = ((seed / 7) % 11) as f64 / 10.0;
            shuffled_random_poset(n, prob.min(1.0), seed)
        })
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let mut detail = Vec::new();
    for (n, expected) in [(3, 8), (4, 4096)] {
        let structures = b2_closed_structures(n);
        ensure(structures.len() == expected, || {
            format!("n={n}: {} structures", structures.len())
        })?;
        let mut accepted = 0;
        for s in &structures {
            let by_algorithm = recognize(s).is_accepted();
            let by_oracle = !posets_with_betweenness(s).unwrap().is_empty();
            ensure(by_algorithm == by_oracle, || format!("disagreement on {s}"))?;
            accepted += by_algorithm as usize;
        }
        detail.push(format!(
            "n={n}: {} structures, {accepted} accepted, 0 disagreements",
            structures.len()
        ));
    }
    Ok(detail.join("; "))
}

fn completeness_round_trip() -> Outcome {
    let exhaustive = posets_up_to(5);
    let random = random_posets(1000, 10, 2);
    for p in exhaustive.iter().chain(&random) {
        let s = betweenness_of(p);
        let out = recognize(&s);
        let w = out
            .witness()
            .ok_or_else(|| format!("rejected betweenness of {p:?}: {:?}", out.rejection()))?;
        ensure(betweenness_of(w) == s, || {
            format!("witness betweenness differs for {p:?}")
        })?;
        ensure(is_b_minimal(w), || {
            format!("witness not B-minimal for {p:?}")
        })?;
    }
    Ok(format!(
        "{} enumerated + {} random posets, 0 failures",
        exhaustive.len(),
        random.len()
    ))
}

fn b_cycle_verdicts() -> Outcome {
    for k in 2..=10 {
        let out = recognize(&b_cycle(k).unwrap());
        if k % 2 == 0 {
            ensure(out.is_accepted(), || {
                format!("k={k} rejected: {:?}", out.rejection())
            })?;
        } else {
            let reason = out.rejection().map(|r| r.reason);
            ensure(reason == Some(RejectionReason::ExtNotBipartite), || {
                format!("k={k}: {reason:?}")
            })?;
        }
    }
    Ok("k=2..10: even accepted, odd ExtNotBipartite".into())
}

fn group_by_betweenness(posets: &[Poset]) -> HashMap<TernaryStructure, Vec<&Poset>> {
    let mut groups: HashMap<TernaryStructure, Vec<&Poset>> = HashMap::new();
    for q in posets {
        groups.entry(betweenness_of(q)).or_default().push(q);
    }
    groups
}

fn minimal_reduction_suite() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        let posets: Vec<Poset> = enumerate_posets(n).unwrap().collect();
        let groups = group_by_betweenness(&posets);
        for p in &posets {
            let m = minimize(p);
            let s = betweenness_of(p);
            ensure(minimize(&m) == m, || format!("not idempotent on {p:?}"))?;
            ensure(betweenness_of(&m) == s, || {
                format!("betweenness changed on {p:?}")
            })?;
            ensure(m.is_subrelation_of(p), || format!("not contained in {p:?}"))?;
            for q in groups[&s].iter().filter(|q| q.is_subrelation_of(p)) {
                ensure(m.is_subrelation_of(q), || format!("{m:?} not below {q:?}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} posets, 0 failures"))
}

fn reconstructibility() -> Outcome {
    let mut checked = 0;
    let mut reconstructible = 0;
    for n in 0..=5 {
        let posets: Vec<Poset> = enumerate_posets(n).unwrap().collect();
        let groups = group_by_betweenness(&posets);
        for p in &posets {
            let realizers = &groups[&betweenness_of(p)];
            let verdict = is_b_reconstructible(p);
            let r = reverse(p);
            // For n ≤ 1 the poset equals its reversal, so "only P and P^rev"
            // means exactly one realizer rather than two.
            let expected_count = if *p == r { 1 } else { 2 };
            let only_p_and_rev = realizers.len() == expected_count
                && realizers.iter().all(|q| **q == *p || **q == r);
            ensure(only_p_and_rev == verdict, || {
                format!("{p:?}: {} realizers, verdict {verdict}", realizers.len())
            })?;
            if p.n() >= 2 {
                ensure((realizers.len() == 2) == verdict, || {
                    format!("{p:?}: count {}", realizers.len())
                })?;
            }
            checked += 1;
            reconstructible += verdict as usize;
        }
    }
    Ok(format!(
        "{checked} posets, {reconstructible} reconstructible; count == 2 iff reconstructible for n ≥ 2, \
         and realizers == {{P, P^rev}} iff reconstructible for all n"
    ))
}

fn lemma14_suite() -> Outcome {
    let mut checked = 0;
    for p in posets_up_to(5) {
        if !is_b_minimal(&p) || !isolated_elements(&p).is_empty() {
            continue;
        }
        let ext = ext_graph(&betweenness_of(&p));
        let (maxs, mins) = (max_elements(&p), min_elements(&p));
        ensure(bipartition(&ext).is_some(), || {
            format!("Ext not bipartite for {p:?}")
        })?;
        let union: BTreeSet<usize> = maxs.union(&mins).copied().collect();
        ensure(maxs.is_disjoint(&mins) && ext.tag() == Some(&union), || {
            format!("Ext vertices ≠ Max ∪ Min for {p:?}")
        })?;
        ensure(
            ext.edges()
                .iter()
                .all(|&(u, v)| maxs.contains(&u) != maxs.contains(&v)),
            || format!("edge inside a block for {p:?}"),
        )?;
        if is_connected(&comparability(&p)) {
            ensure(is_connected(&ext), || {
                format!("Ext disconnected for connected {p:?}")
            })?;
            let (a, b) = bipartition(&ext).unwrap();
            ensure((a == maxs && b == mins) || (a == mins && b == maxs), || {
                format!("blocks differ for {p:?}")
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} B-minimal posets without isolated elements, 0 failures"
    ))
}

fn mso_agreement() -> Outcome {
    let mut structures = b2_closed_structures(4);
    structures.extend((2..=6).map(|k| b_cycle(k).unwrap()));
    structures.extend(random_posets(200, 12, 7).iter().map(betweenness_of));
    let mut satisfied = 0;
    for s in &structures {
        let theta = theta_check(s, DEFAULT_MAX_COMPONENT).map_err(|e| e.to_string())?;
        let accepted = recognize(s).is_accepted();
        ensure(theta.is_satisfied() == accepted, || {
            format!(
                "theta {} vs recognize {accepted} on {s}",
                theta.is_satisfied()
            )
        })?;
        satisfied += accepted as usize;
    }
    Ok(format!(
        "{} structures, {satisfied} satisfied, 0 disagreements",
        structures.len()
    ))
}

fn cut_coherence() -> Outcome {
    let mut checked = 0;
    for p in posets_up_to(5) {
        // the empty poset has no partition into two nonempty blocks
        if p.n() == 0 || !is_b_minimal(&p) || !isolated_elements(&p).is_empty() {
            continue;
        }
        let cut = cut_of(&p).map_err(|e| e.to_string())?;
        let violation = cut.validate(&p).map_err(|e| e.to_string())?;
        ensure(violation.is_ok(), || {
            format!("{cut:?} not a cut of {p:?}: {violation:?}")
        })?;
        let rel = order_from_cut(&betweenness_of(&p), &cut.lower);
        ensure(rel == p.pairs().collect(), || {
            format!("cut formula differs on {p:?}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} posets, 0 failures"))
}

fn performance_envelope() -> Outcome {
    let mut detail = Vec::new();
    for (i, prob) in [0.02, 0.05, 0.1, 0.3, 0.6, 1.0].into_iter().enumerate() {
        let p = shuffled_random_poset(100, prob, 100 + i as u64);
        let s = betweenness_of(&p);
        let start = Instant::now();
        let out = recognize(&s);
        let elapsed = start.elapsed();
        ensure(out.is_accepted(), || format!("p={prob} rejected"))?;
        ensure(elapsed < Duration::from_secs(10), || {
            format!("p={prob}: {elapsed:?}")
        })?;
        detail.push(format!("p={prob}: {} triples in {:.0?}", s.len(), elapsed));
    }
    Ok(detail.join("; "))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "exhaustive oracle equivalence",
            limit: Some(Duration::from_secs(10)),
            run: oracle_equivalence,
        },
        Criterion {
            id: 2,
            name: "completeness round-trip",
            limit: Some(Duration::from_secs(60)),
            run: completeness_round_trip,
        },
        Criterion {
            id: 3,
            name: "B-cycle verdicts",
            limit: Some(Duration::from_secs(1)),
            run: b_cycle_verdicts,
        },
        Criterion {
            id: 4,
            name: "minimal reduction suite",
            limit: Some(Duration::from_secs(30)),
            run: minimal_reduction_suite,
        },
        Criterion {
            id: 5,
            name: "finite reconstructibility",
            limit: Some(Duration::from_secs(120)),
            run: reconstructibility,
        },
        Criterion {
            id: 6,
            name: "Ext graph bipartition",
            limit: None,
            run: lemma14_suite,
        },
        Criterion {
            id: 7,
            name: "MSO/algorithm agreement",
            limit: Some(Duration::from_secs(300)),
            run: mso_agreement,
        },
        Criterion {
            id: 8,
            name: "cut coherence",
            limit: None,
            run: cut_coherence,
        },
        Criterion {
            id: 9,
            name: "performance envelope",
            limit: None,
            run: performance_envelope,
        },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!(
                "[PASS] criterion {}: {} ({:.2?}) {detail}",
                c.id, c.name, elapsed
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "[FAIL] criterion {}: {} ({:.2?}) {why}",
                    c.id, c.name, elapsed
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
