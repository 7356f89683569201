//! Symmetric cycles in the tope graph.
//!
//! A symmetric cycle `(R^0, .., R^{2t-1})` has unit steps and satisfies
//! `R^{k+t} = -R^k`. Its first half together with `-R^0` is a maximal chain
//! of the tope poset based at `R^0`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signs::{hamming, Tope};
use crate::tope_set::TopeSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricCycle {
    vertices: Vec<Tope>,
}

/// Elements flipped by the first `t` steps of a cycle, in order (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LSequence(pub Vec<usize>);

#[derive(Serialize)]
struct CycleJson<'a> {
    base: &'a Tope,
    vertices: &'a [Tope],
    l_sequence: &'a LSequence,
}

impl SymmetricCycle {
    /// Checks membership, distinctness, unit steps and antipodality.
    pub fn validate(set: &TopeSet, vertices: Vec<Tope>) -> Result<Self> {
        let t = set.t();
        if vertices.len() != 2 * t {
            return Err(Error::CycleLength {
                expected: 2 * t,
                found: vertices.len(),
            });
        }
        for (k, v) in vertices.iter().enumerate() {
            if v.len() != t || !set.contains(v) {
                return Err(Error::CycleVertexNotInTopeSet(k));
            }
        }
        let mut seen = HashSet::new();
        for (k, v) in vertices.iter().enumerate() {
            if !seen.insert(v) {
                return Err(Error::Duplicate(k));
            }
        }
        for k in 0..vertices.len() {
            if hamming(&vertices[k], &vertices[(k + 1) % vertices.len()]) != 1 {
                return Err(Error::NonAdjacentStep(k));
            }
        }
        for k in 0..t {
            if vertices[k + t] != -&vertices[k] {
                return Err(Error::NotAntipodal(k + t));
            }
        }
        Ok(SymmetricCycle { vertices })
    }

    /// Completes a geodesic `B = R^0, .., R^t = -B` by antipodes.
    fn from_chain(chain: &[Tope]) -> Self {
        let t = chain.len() - 1;
        let mut vertices: Vec<Tope> = chain[..t].to_vec();
        vertices.extend(chain[..t].iter().map(|v| -v));
        SymmetricCycle { vertices }
    }

    pub fn t(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn base(&self) -> &Tope {
        &self.vertices[0]
    }

    pub fn vertices(&self) -> &[Tope] {
        &self.vertices
    }

    /// `R^0, .., R^{t-1}`: the rows of the sign matrix.
    pub fn first_half(&self) -> &[Tope] {
        &self.vertices[..self.t()]
    }

    pub fn vertex_set(&self) -> BTreeSet<Tope> {
        self.vertices.iter().cloned().collect()
    }

    /// Position of `tope` on the cycle.
    pub fn position(&self, tope: &Tope) -> Option<usize> {
        self.vertices.iter().position(|v| v == tope)
    }

    pub fn l_sequence(&self) -> LSequence {
        LSequence(
            (1..=self.t())
                .map(|i| {
                    let (a, b) = (&self.vertices[i - 1], &self.vertices[i]);
                    (1..=a.len()).find(|&e| a.sign(e) != b.sign(e)).unwrap_or(0)
                })
                .collect(),
        )
    }

    /// Same cycle started at vertex `k`.
    pub fn rotated(&self, k: usize) -> SymmetricCycle {
        let mut vertices = self.vertices.clone();
        let n = vertices.len();
        vertices.rotate_left(k % n);
        SymmetricCycle { vertices }
    }

    /// Same cycle traversed backwards from the same base.
    pub fn reflected(&self) -> SymmetricCycle {
        let mut vertices = self.vertices.clone();
        vertices[1..].reverse();
        SymmetricCycle { vertices }
    }

    /// Sorted vertex set; rotations and reflections share it.
    pub fn canonical_key(&self) -> Vec<Tope> {
        self.vertex_set().into_iter().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let l = self.l_sequence();
        serde_json::to_value(CycleJson {
            base: self.base(),
            vertices: &self.vertices,
            l_sequence: &l,
        })
        .expect("cycle serializes")
    }
}

/// Result of a budgeted cycle enumeration.
#[derive(Clone, Debug, Default)]
pub struct CycleEnumeration {
    pub cycles: Vec<SymmetricCycle>,
    /// More distinct cycles exist beyond the budget.
    pub truncated: bool,
}

/// Depth-first search over geodesics from `start` to `-start`.
///
/// Elements are tried in ascending order; each is flipped at most once.
/// `visit` returns `false` to stop the search.
fn walk_chains<F>(set: &TopeSet, start: &Tope, visit: &mut F)
where
    F: FnMut(&[Tope]) -> bool,
{
    fn go<F>(set: &TopeSet, chain: &mut Vec<Tope>, flipped: &mut [bool], visit: &mut F) -> bool
    where
        F: FnMut(&[Tope]) -> bool,
    {
        let t = set.t();
        if chain.len() == t + 1 {
            return visit(chain);
        }
        for e in 1..=t {
            if flipped[e - 1] {
                continue;
            }
            let next = chain[chain.len() - 1].flipped(e);
            if !set.contains(&next) {
                continue;
            }
            flipped[e - 1] = true;
            chain.push(next);
            let keep_going = go(set, chain, flipped, visit);
            chain.pop();
            flipped[e - 1] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut chain = vec![start.clone()];
    let mut flipped = vec![false; set.t()];
    go(set, &mut chain, &mut flipped, visit);
}

/// First symmetric cycle based at `base` in depth-first order.
pub fn find_cycle(set: &TopeSet, base: &Tope) -> Result<SymmetricCycle> {
    set.require(base)?;
    let mut found = None;
    walk_chains(set, base, &mut |chain| {
        found = Some(SymmetricCycle::from_chain(chain));
        false
    });
    found.ok_or_else(|| Error::NoCycleFound(base.clone()))
}

/// All symmetric cycles through `base`, up to rotation and reflection.
///
/// Every returned cycle is stored with `base` as `R^0`. At most `budget`
/// cycles are returned; `truncated` is set when a further one exists.
pub fn enumerate_cycles(set: &TopeSet, base: &Tope, budget: usize) -> Result<CycleEnumeration> {
    set.require(base)?;
    let mut seen = HashSet::new();
    let mut out = CycleEnumeration::default();
    walk_chains(set, base, &mut |chain| {
        let cycle = SymmetricCycle::from_chain(chain);
        if !seen.insert(cycle.canonical_key()) {
            return true;
        }
        if out.cycles.len() == budget {
            out.truncated = true;
            return false;
        }
        out.cycles.push(cycle);
        true
    });
    Ok(out)
}

/// Distinct cycles over every base tope, sorted by canonical key.
///
/// Each cycle keeps the base of the first tope (in lexicographic order)
/// through which it was found.
pub fn enumerate_all_cycles(
    set: &TopeSet,
    budget_per_base: usize,
    parallel: bool,
) -> Result<CycleEnumeration> {
    use rayon::prelude::*;
    let per_base: Vec<CycleEnumeration> = if parallel {
        set.topes()
            .par_iter()
            .map(|b| enumerate_cycles(set, b, budget_per_base))
            .collect::<Result<_>>()?
    } else {
        set.topes()
            .iter()
            .map(|b| enumerate_cycles(set, b, budget_per_base))
            .collect::<Result<_>>()?
    };
    let mut seen = HashSet::new();
    let mut out = CycleEnumeration::default();
    for e in per_base {
        out.truncated |= e.truncated;
        for c in e.cycles {
            if seen.insert(c.canonical_key()) {
                out.cycles.push(c);
            }
        }
    }
    out.cycles.sort_by_cached_key(|c| c.canonical_key());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topes(list: &[&str]) -> Vec<Tope> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn hexagon() -> TopeSet {
        TopeSet::new(3, topes(&["+++", "+-+", "+--", "---", "-+-", "-++"])).unwrap()
    }

    fn square() -> TopeSet {
        TopeSet::new(2, topes(&["++", "+-", "--", "-+"])).unwrap()
    }

    const HEX_CYCLE: [&str; 6] = ["+++", "+-+", "+--", "---", "-+-", "-++"];

    #[test]
    fn hexagon_cycle_valid() {
        let c = SymmetricCycle::validate(&hexagon(), topes(&HEX_CYCLE)).unwrap();
        assert_eq!(c.l_sequence(), LSequence(vec![2, 3, 1]));
        assert_eq!(c.vertex_set().len(), 6);
    }

    #[test]
    fn validation_errors() {
        let s = hexagon();
        assert_eq!(
            SymmetricCycle::validate(&s, topes(&HEX_CYCLE[..4])).unwrap_err(),
            Error::CycleLength {
                expected: 6,
                found: 4
            }
        );
        let mut bad = topes(&HEX_CYCLE);
        bad[2] = "--+".parse().unwrap();
        assert_eq!(
            SymmetricCycle::validate(&s, bad).unwrap_err(),
            Error::CycleVertexNotInTopeSet(2)
        );
        let mut swapped = topes(&HEX_CYCLE);
        swapped.swap(1, 2);
        assert_eq!(
            SymmetricCycle::validate(&s, swapped).unwrap_err(),
            Error::NonAdjacentStep(0)
        );
        let mut dup = topes(&HEX_CYCLE);
        dup[3] = dup[1].clone();
        assert_eq!(
            SymmetricCycle::validate(&s, dup).unwrap_err(),
            Error::Duplicate(3)
        );
    }

    #[test]
    fn not_antipodal() {
        // A 6-cycle of unit steps in the full 3-cube that is not centrally symmetric.
        let all: Vec<Tope> = ["+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let cube = TopeSet::new(3, all).unwrap();
        let walk = topes(&["+++", "++-", "+--", "---", "--+", "+-+"]);
        assert_eq!(
            SymmetricCycle::validate(&cube, walk).unwrap_err(),
            Error::NotAntipodal(5)
        );
    }

    #[test]
    fn find_cycle_cases() {
        let s = hexagon();
        let plus: Tope = "+++".parse().unwrap();
        let c = find_cycle(&s, &plus).unwrap();
        // Ascending element order tries element 1 first (-++ is a tope).
        assert_eq!(
            c.vertices(),
            topes(&["+++", "-++", "-+-", "---", "+--", "+-+"]).as_slice()
        );
        SymmetricCycle::validate(&s, c.vertices().to_vec()).unwrap();
        let sq = square();
        let c = find_cycle(&sq, &"++".parse().unwrap()).unwrap();
        assert_eq!(c.vertex_set().len(), 4);
        assert!(find_cycle(&s, &"--+".parse().unwrap()).is_err());
    }

    #[test]
    fn enumerate_hexagon() {
        let s = hexagon();
        let plus: Tope = "+++".parse().unwrap();
        let e = enumerate_cycles(&s, &plus, 10).unwrap();
        assert_eq!(e.cycles.len(), 1);
        assert!(!e.truncated);
        let e = enumerate_cycles(&s, &plus, 0).unwrap();
        assert!(e.cycles.is_empty());
        assert!(e.truncated);
    }

    #[test]
    fn enumerate_cube_budget() {
        let all: Vec<Tope> = ["+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let cube = TopeSet::new(3, all).unwrap();
        let plus: Tope = "+++".parse().unwrap();
        // 3! geodesics, each cycle found from both directions.
        let e = enumerate_cycles(&cube, &plus, 100).unwrap();
        assert_eq!(e.cycles.len(), 3);
        assert!(!e.truncated);
        let e = enumerate_cycles(&cube, &plus, 1).unwrap();
        assert_eq!(e.cycles.len(), 1);
        assert!(e.truncated);
        let all = enumerate_all_cycles(&cube, 100, false).unwrap();
        // 4 antipodal pairs of vertices, each cycle passes through 3 of them.
        assert_eq!(all.cycles.len(), 4);
        let par = enumerate_all_cycles(&cube, 100, true).unwrap();
        assert_eq!(par.cycles, all.cycles);
    }

    #[test]
    fn rotation_and_reflection() {
        let s = hexagon();
        let c = SymmetricCycle::validate(&s, topes(&HEX_CYCLE)).unwrap();
        for k in 0..6 {
            for r in [c.rotated(k), c.rotated(k).reflected()] {
                let v = SymmetricCycle::validate(&s, r.vertices().to_vec()).unwrap();
                assert_eq!(v.canonical_key(), c.canonical_key());
            }
        }
        assert_eq!(c.reflected().base(), c.base());
    }

    #[test]
    fn json_shape() {
        let c = SymmetricCycle::validate(&hexagon(), topes(&HEX_CYCLE)).unwrap();
        let j = c.to_json();
        assert_eq!(j["base"], "+++");
        assert_eq!(j["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(j["l_sequence"], serde_json::json!([2, 3, 1]));
    }
}
