mod common;

use std::collections::{BTreeSet, HashMap, VecDeque};

use common::{generic_chamber_count, instances, random_generic, Instance};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topes::committee::{critical_from_cycle, double_sum, two_path_witness, CommitteeCandidate};
use topes::cycle::{enumerate_all_cycles, enumerate_cycles, find_cycle};
use topes::decomposition::{decompose, decompose_via_poset};
use topes::fixtures::{example_tope_set, hexagon_tope_set};
use topes::poset::{max_positive, BasedPoset};
use topes::signs::{negative_part, positive_tope, reorient, tope_sum, ElementSet};
use topes::{SymmetricCycle, Tope, TopeSet};

/// Acyclic copy of `set`, reoriented so that its first tope becomes `+...+`.
fn acyclic(set: &TopeSet) -> TopeSet {
    let out = set.reorient(&negative_part(&set.topes()[0])).unwrap();
    assert!(out.is_acyclic());
    out
}

fn small_instances() -> Vec<Instance> {
    instances()
        .into_iter()
        .filter(|i| i.set.len() <= 64)
        .collect()
}

fn random_subset(set: &TopeSet, rng: &mut ChaCha8Rng) -> BTreeSet<Tope> {
    let k = rng.gen_range(1..=set.len());
    set.topes().choose_multiple(rng, k).cloned().collect()
}

fn bfs_distances(set: &TopeSet, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; set.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for &j in set.neighbors(i) {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    dist
}

#[test]
fn tope_graphs_are_partial_cubes() {
    for inst in small_instances() {
        inst.set.check_partial_cube().unwrap();
        // Independent BFS check.
        for (i, a) in inst.set.topes().iter().enumerate() {
            let dist = bfs_distances(&inst.set, i);
            for (j, b) in inst.set.topes().iter().enumerate() {
                let hamming = a
                    .entries()
                    .iter()
                    .zip(b.entries())
                    .filter(|(x, y)| x != y)
                    .count();
                assert_eq!(dist[j], hamming, "{}", inst.name);
            }
        }
    }
}

#[test]
fn reorientation_preserves_structure_and_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for inst in instances() {
        let t = inst.set.t();
        for _ in 0..4 {
            let a: ElementSet = (1..=t).filter(|_| rng.gen_bool(0.5)).collect();
            let moved = inst.set.reorient(&a).unwrap();
            // Rebuilding through the validating constructor re-checks every invariant.
            TopeSet::new(t, moved.topes().to_vec()).unwrap();
            let images: BTreeSet<(Tope, Tope)> = inst
                .set
                .adjacency_edges()
                .edge_topes()
                .map(|(x, y)| {
                    let (x, y) = (reorient(x, &a).unwrap(), reorient(y, &a).unwrap());
                    if x < y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            let edges: BTreeSet<(Tope, Tope)> = moved
                .adjacency_edges()
                .edge_topes()
                .map(|(x, y)| {
                    if x < y {
                        (x.clone(), y.clone())
                    } else {
                        (y.clone(), x.clone())
                    }
                })
                .collect();
            assert_eq!(images, edges, "{}", inst.name);
            assert_eq!(moved.reorient(&a).unwrap(), inst.set);
        }
        assert_eq!(inst.set.reorient(&ElementSet::new()).unwrap(), inst.set);
    }
}

#[test]
fn poset_axioms_hold_exhaustively() {
    for inst in small_instances() {
        let all = inst.set.topes();
        for base in all.iter().step_by(3) {
            let p = BasedPoset::new(&inst.set, base).unwrap();
            let leq: Vec<Vec<bool>> = all
                .iter()
                .map(|a| all.iter().map(|b| p.leq(a, b).unwrap()).collect())
                .collect();
            let n = all.len();
            for i in 0..n {
                assert!(leq[i][i]);
                for j in 0..n {
                    if i != j {
                        assert!(!(leq[i][j] && leq[j][i]), "{}", inst.name);
                    }
                    if leq[i][j] {
                        assert!(p.rank(&all[i]).unwrap() <= p.rank(&all[j]).unwrap());
                        if i != j {
                            assert!(p.rank(&all[i]).unwrap() < p.rank(&all[j]).unwrap());
                        }
                        for (jk, ik) in leq[j].iter().zip(&leq[i]) {
                            assert!(!jk || *ik, "{}", inst.name);
                        }
                    }
                }
            }
            assert_eq!(
                p.minimal_elements(all).unwrap(),
                BTreeSet::from([base.clone()])
            );
        }
    }
}

#[test]
fn minimal_elements_form_nonempty_antichains() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for inst in instances() {
        let base = inst.set.topes()[rng.gen_range(0..inst.set.len())].clone();
        let p = BasedPoset::new(&inst.set, &base).unwrap();
        for _ in 0..20 {
            let x = random_subset(&inst.set, &mut rng);
            let min = p.minimal_elements(&x).unwrap();
            assert!(!min.is_empty());
            assert!(min.is_subset(&x));
            for a in &min {
                for b in &min {
                    assert!(a == b || !p.leq(a, b).unwrap(), "{}", inst.name);
                }
                // Nothing else in X lies strictly below a minimal element.
                assert!(x.iter().all(|y| y == a || !p.leq(y, a).unwrap()));
            }
        }
    }
}

#[test]
fn minimal_at_positive_equals_max_positive() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for inst in instances() {
        let set = acyclic(&inst.set);
        let plus = positive_tope(set.t()).unwrap();
        let p = BasedPoset::new(&set, &plus).unwrap();
        for _ in 0..30 {
            let x = random_subset(&set, &mut rng);
            assert_eq!(
                p.minimal_elements(&x).unwrap(),
                max_positive(&x),
                "{}",
                inst.name
            );
        }
    }
}

#[test]
fn cycle_invariants() {
    for inst in instances() {
        let t = inst.set.t();
        let all = enumerate_all_cycles(&inst.set, 50, false).unwrap();
        assert!(!all.cycles.is_empty());
        let keys: BTreeSet<Vec<Tope>> = all
            .cycles
            .iter()
            .map(SymmetricCycle::canonical_key)
            .collect();
        assert_eq!(keys.len(), all.cycles.len());
        for c in &all.cycles {
            let v = c.vertices();
            let mut l = c.l_sequence().0;
            let l_copy = l.clone();
            l.sort_unstable();
            assert_eq!(l, (1..=t).collect::<Vec<_>>());
            for i in 0..t {
                let a = &v[t + i];
                let b = &v[(t + i + 1) % (2 * t)];
                let flipped: Vec<usize> = (1..=t).filter(|&e| a.sign(e) != b.sign(e)).collect();
                assert_eq!(flipped, vec![l_copy[i]]);
            }
            let lt = l_copy[t - 1];
            for r in c.first_half() {
                assert_eq!(r.sign(lt), v[0].sign(lt));
            }
            // R^0..R^t is a maximal chain in the poset based at R^0.
            let p = BasedPoset::new(&inst.set, &v[0]).unwrap();
            for k in 0..t {
                assert!(p.leq(&v[k], &v[k + 1]).unwrap());
                assert_eq!(p.rank(&v[k]).unwrap(), k);
            }
            let set = c.vertex_set();
            assert_eq!(set.len(), 2 * t);
            assert!(set.iter().all(|x| set.contains(&-x)));
            SymmetricCycle::validate(&inst.set, v.to_vec()).unwrap();
        }
    }
}

#[test]
fn find_cycle_passes_validation_from_every_base() {
    for inst in instances() {
        for base in inst.set.topes() {
            let c = find_cycle(&inst.set, base).unwrap();
            assert_eq!(c.base(), base);
            SymmetricCycle::validate(&inst.set, c.vertices().to_vec()).unwrap();
        }
    }
}

#[test]
fn decomposition_ignores_rerooting() {
    for inst in instances() {
        let cycles = enumerate_all_cycles(&inst.set, 5, false).unwrap();
        for c in cycles.cycles.iter().take(10) {
            let variants: Vec<SymmetricCycle> = (0..c.vertices().len())
                .flat_map(|k| [c.rotated(k), c.rotated(k).reflected()])
                .collect();
            for target in inst.set.topes() {
                let q = decompose(target, c).unwrap().q_set;
                for other in &variants {
                    assert_eq!(decompose(target, other).unwrap().q_set, q, "{}", inst.name);
                }
            }
        }
    }
}

#[test]
fn double_sum_matches_committee_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for inst in instances() {
        let cycle = find_cycle(&inst.set, &inst.set.topes()[0]).unwrap();
        for _ in 0..40 {
            let k = CommitteeCandidate::new(&inst.set, random_subset(&inst.set, &mut rng)).unwrap();
            let double = double_sum(&k, &cycle).unwrap();
            assert_eq!(double, k.sum());
            assert_eq!(k.is_committee(), double.entries().iter().all(|&s| s >= 1));
        }
    }
}

#[test]
fn critical_committees_from_cycles() {
    for inst in instances() {
        let set = acyclic(&inst.set);
        let plus = positive_tope(set.t()).unwrap();
        let cycles = enumerate_all_cycles(&set, 20, false).unwrap();
        for c in &cycles.cycles {
            let k = critical_from_cycle(&set, c).unwrap();
            assert!(k.sum().equals_tope(&plus));
            assert_eq!(k.len() % 2, 1);
            assert!(k.members().is_subset(&c.vertex_set()));
            assert!(k.is_minimal().unwrap());
            for v in c.vertices() {
                assert_eq!(
                    two_path_witness(&set, c, v).unwrap(),
                    k.members().contains(v),
                    "{}",
                    inst.name
                );
            }
            if c.vertex_set().contains(&plus) {
                assert_eq!(k.members(), &BTreeSet::from([plus.clone()]));
            }
        }
    }
}

#[test]
fn reorientation_covariance() {
    for inst in instances() {
        let cycles = enumerate_all_cycles(&inst.set, 3, false).unwrap();
        for base in inst.set.topes().iter().step_by(2) {
            let neg = negative_part(base);
            let moved_set = inst.set.reorient(&neg).unwrap();
            let plus = positive_tope(base.len()).unwrap();
            for c in cycles.cycles.iter().take(6) {
                let moved = SymmetricCycle::validate(
                    &moved_set,
                    c.vertices()
                        .iter()
                        .map(|v| reorient(v, &neg).unwrap())
                        .collect(),
                )
                .unwrap();
                let k = critical_from_cycle(&moved_set, &moved).unwrap();
                assert!(k.sum().equals_tope(&plus));
                let back: BTreeSet<Tope> = k
                    .members()
                    .iter()
                    .map(|m| reorient(m, &neg).unwrap())
                    .collect();
                assert!(tope_sum(base.len(), &back).unwrap().equals_tope(base));
                assert_eq!(back, decompose_via_poset(base, c).unwrap());
            }
        }
    }
}

/// Five-member minimal committee of `set` with sum (3,1,1,1,1), by exhaustive search.
fn excess_committee(set: &TopeSet) -> Option<CommitteeCandidate> {
    let all = set.topes();
    let n = all.len();
    let want = vec![3, 1, 1, 1, 1];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let members = [a, b, c, d, e].map(|i| all[i].clone());
                        if tope_sum(5, &members).unwrap().0 != want {
                            continue;
                        }
                        let k = CommitteeCandidate::new(set, members).unwrap();
                        if k.is_minimal().unwrap() {
                            return Some(k);
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn minimal_committee_with_excess_is_not_critical() {
    // Seed picked by scanning random acyclic instances on five elements.
    let set = acyclic(&random_generic(4, 5, 301).chambers().unwrap());
    let k = excess_committee(&set).expect("a minimal committee with sum (3,1,1,1,1)");
    assert_eq!(k.len(), 5);
    assert!(k.is_committee());
    assert!(k.is_minimal().unwrap());
    assert!(!k.is_critical().unwrap());
}

#[test]
fn chamber_counts_of_generic_arrangements() {
    for (seed, t) in [(1u64, 4usize), (2, 5), (3, 6), (4, 7)] {
        let a = random_generic(3, t, seed);
        let set = a.chambers().unwrap();
        assert_eq!(set.len(), t * t - t + 2);
        assert_eq!(set.len(), generic_chamber_count(3, t));
        TopeSet::new(t, set.topes().to_vec()).unwrap();
    }
    for (seed, t) in [(5u64, 5usize), (6, 6)] {
        let a = random_generic(4, t, seed);
        assert_eq!(a.chambers().unwrap().len(), generic_chamber_count(4, t));
    }
}

#[test]
fn enumeration_budget_is_respected() {
    let hex = hexagon_tope_set();
    let base = hex.topes()[0].clone();
    let none = enumerate_cycles(&hex, &base, 0).unwrap();
    assert!(none.cycles.is_empty() && none.truncated);
    let one = enumerate_cycles(&hex, &base, 1).unwrap();
    assert_eq!(one.cycles.len(), 1);
    assert!(!one.truncated);
}

fn tope_strategy(t: usize) -> impl Strategy<Value = Tope> {
    prop::collection::vec(prop::bool::ANY, t).prop_map(|bits| {
        Tope::from_signs(bits.into_iter().map(|b| if b { 1i64 } else { -1 })).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn feasibility_is_antipodal(seed in 0u64..1000, sigma in tope_strategy(5)) {
        let a = random_generic(3, 5, seed);
        prop_assert_eq!(a.feasible(&sigma).unwrap(), a.feasible(&-&sigma).unwrap());
    }

    #[test]
    fn random_generic_planes_count(seed in 0u64..1000, t in 4usize..=6) {
        let set = random_generic(3, t, seed).chambers().unwrap();
        prop_assert_eq!(set.len(), t * t - t + 2);
        for x in set.topes() {
            prop_assert!(set.contains(&-x));
        }
    }

    #[test]
    fn coordinates_stay_ternary(seed in 0u64..200, sigma in tope_strategy(5)) {
        let set = random_generic(3, 5, seed).chambers().unwrap();
        let base = set.topes()[(seed as usize) % set.len()].clone();
        let c = find_cycle(&set, &base).unwrap();
        let d = decompose(&sigma, &c).unwrap();
        prop_assert!(d.x.iter().all(|x| (-1..=1).contains(x)));
        prop_assert!(tope_sum(5, &d.q_set).unwrap().equals_tope(&sigma));
        prop_assert_eq!(d.q_set.len() % 2, 1);
    }
}

#[test]
fn cycles_are_shared_across_bases() {
    // Each cycle found from some base is found again from every vertex on it.
    let set = example_tope_set().unwrap();
    let mut by_base: HashMap<Tope, BTreeSet<Vec<Tope>>> = HashMap::new();
    for base in set.topes() {
        let e = enumerate_cycles(&set, base, 200).unwrap();
        assert!(!e.truncated);
        by_base.insert(
            base.clone(),
            e.cycles.iter().map(SymmetricCycle::canonical_key).collect(),
        );
    }
    for (base, keys) in &by_base {
        for key in keys {
            assert!(key.contains(base));
            for v in key {
                assert!(by_base[v].contains(key));
            }
        }
    }
}
