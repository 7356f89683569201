//! Tope committees: subsets whose sum is at least one in every coordinate.
//!
//! A committee is minimal when no nonempty proper subset is a committee, and
//! critical when it is minimal and sums exactly to the positive tope.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::cycle::{enumerate_all_cycles, enumerate_cycles, SymmetricCycle};
use crate::decomposition::decompose;
use crate::error::{Error, Result};
use crate::poset::max_positive;
use crate::signs::{hamming, positive_tope, tope_sum, IntegerVector, Tope};
use crate::tope_set::TopeSet;

/// Largest committee accepted by [`CommitteeCandidate::is_minimal`].
pub const MINIMALITY_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommitteeCandidate {
    members: BTreeSet<Tope>,
    t: usize,
}

#[derive(Serialize)]
struct CommitteeJson<'a> {
    members: &'a BTreeSet<Tope>,
    sum: IntegerVector,
    critical: bool,
    minimal: bool,
}

impl CommitteeCandidate {
    pub fn new<I: IntoIterator<Item = Tope>>(carrier: &TopeSet, members: I) -> Result<Self> {
        let members: BTreeSet<Tope> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyCommittee);
        }
        for m in &members {
            carrier.require(m)?;
        }
        Ok(CommitteeCandidate {
            members,
            t: carrier.t(),
        })
    }

    pub fn members(&self) -> &BTreeSet<Tope> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sum(&self) -> IntegerVector {
        tope_sum(self.t, &self.members).expect("members share the ground size")
    }

    pub fn is_committee(&self) -> bool {
        self.sum().entries().iter().all(|&v| v >= 1)
    }

    /// No nonempty proper subset is a committee, by exhaustion.
    pub fn is_minimal(&self) -> Result<bool> {
        let n = self.members.len();
        if n > MINIMALITY_BOUND {
            return Err(Error::SizeBoundExceeded {
                size: n,
                bound: MINIMALITY_BOUND,
            });
        }
        let members: Vec<&Tope> = self.members.iter().collect();
        let full = (1u32 << n) - 1;
        for mask in 1..full {
            let mut sum = vec![0i64; self.t];
            for (i, m) in members.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (acc, &s) in sum.iter_mut().zip(m.entries()) {
                        *acc += s as i64;
                    }
                }
            }
            if sum.iter().all(|&v| v >= 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_critical(&self) -> Result<bool> {
        let plus = positive_tope(self.t)?;
        Ok(self.sum().equals_tope(&plus) && self.is_minimal()?)
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let json = CommitteeJson {
            members: &self.members,
            sum: self.sum(),
            critical: self.is_critical()?,
            minimal: self.is_minimal()?,
        };
        Ok(serde_json::to_value(json).expect("committee serializes"))
    }
}

/// Componentwise sum of the members' decompositions over `cycle`.
///
/// Each inner sum rebuilds its tope, so this equals the plain member sum.
pub fn double_sum(candidate: &CommitteeCandidate, cycle: &SymmetricCycle) -> Result<IntegerVector> {
    let mut total = IntegerVector::zeros(candidate.t);
    for member in candidate.members() {
        for q in decompose(member, cycle)?.q_set {
            total.add_tope(&q)?;
        }
    }
    Ok(total)
}

/// Critical committee `max+ V(R)` of an acyclic tope set.
pub fn critical_from_cycle(set: &TopeSet, cycle: &SymmetricCycle) -> Result<CommitteeCandidate> {
    if !set.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let plus = positive_tope(set.t())?;
    let members = max_positive(cycle.vertices());
    let sum = tope_sum(set.t(), &members)?;
    if !sum.equals_tope(&plus) {
        return Err(Error::CommitteeSumMismatch(sum.0));
    }
    if decompose(&plus, cycle)?.q_set != members {
        return Err(Error::VerificationFailed);
    }
    CommitteeCandidate::new(set, members)
}

/// `O` is in `max+ V(R)` iff both cycle neighbours are one step further from
/// the positive tope than `O`.
pub fn two_path_witness(set: &TopeSet, cycle: &SymmetricCycle, vertex: &Tope) -> Result<bool> {
    if !set.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let k = cycle
        .position(vertex)
        .ok_or_else(|| Error::NotOnCycle(vertex.clone()))?;
    let n = cycle.vertices().len();
    let before = &cycle.vertices()[(k + n - 1) % n];
    let after = &cycle.vertices()[(k + 1) % n];
    let plus = positive_tope(set.t())?;
    let d = hamming(&plus, vertex);
    Ok(before != after && hamming(&plus, before) == d + 1 && hamming(&plus, after) == d + 1)
}

#[derive(Clone, Debug, Default)]
pub struct CriticalEnumeration {
    pub committees: Vec<CommitteeCandidate>,
    pub truncated: bool,
}

/// Distinct critical committees from cycles through the positive tope, or
/// through every tope when `all_bases` is set. Sorted by member list.
pub fn enumerate_critical(
    set: &TopeSet,
    cycle_budget: usize,
    all_bases: bool,
    parallel: bool,
) -> Result<CriticalEnumeration> {
    if !set.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let cycles = if all_bases {
        enumerate_all_cycles(set, cycle_budget, parallel)?
    } else {
        enumerate_cycles(set, &positive_tope(set.t())?, cycle_budget)?
    };
    let mut seen = HashSet::new();
    let mut committees = Vec::new();
    for cycle in &cycles.cycles {
        let committee = critical_from_cycle(set, cycle)?;
        if !committee.is_critical()? {
            return Err(Error::VerificationFailed);
        }
        if seen.insert(committee.members.clone()) {
            committees.push(committee);
        }
    }
    committees.sort();
    Ok(CriticalEnumeration {
        committees,
        truncated: cycles.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topes(list: &[&str]) -> Vec<Tope> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn tope(s: &str) -> Tope {
        s.parse().unwrap()
    }

    fn hexagon() -> TopeSet {
        TopeSet::new(3, topes(&["+++", "+-+", "+--", "---", "-+-", "-++"])).unwrap()
    }

    fn cube() -> TopeSet {
        TopeSet::new(
            3,
            topes(&["+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"]),
        )
        .unwrap()
    }

    #[test]
    fn singleton_positive_tope() {
        let s = hexagon();
        let k = CommitteeCandidate::new(&s, [tope("+++")]).unwrap();
        assert!(k.is_committee());
        assert!(k.is_minimal().unwrap());
        assert!(k.is_critical().unwrap());
    }

    #[test]
    fn antipodal_pair_is_not_committee() {
        let s = hexagon();
        let k = CommitteeCandidate::new(&s, [tope("+-+"), tope("-+-")]).unwrap();
        assert!(!k.is_committee());
        assert_eq!(k.sum(), IntegerVector(vec![0, 0, 0]));
    }

    #[test]
    fn singleton_non_positive_is_vacuously_minimal() {
        let s = hexagon();
        let k = CommitteeCandidate::new(&s, [tope("+-+")]).unwrap();
        assert!(!k.is_committee());
        assert!(k.is_minimal().unwrap());
        assert!(!k.is_critical().unwrap());
    }

    #[test]
    fn superset_of_positive_is_not_minimal() {
        let s = hexagon();
        let k = CommitteeCandidate::new(&s, [tope("+++"), tope("+-+"), tope("-+-")]).unwrap();
        assert!(k.is_committee());
        assert!(!k.is_minimal().unwrap());
    }

    #[test]
    fn critical_triangle_in_cube() {
        let s = cube();
        let k = CommitteeCandidate::new(&s, [tope("++-"), tope("+-+"), tope("-++")]).unwrap();
        assert!(k.is_critical().unwrap());
        let k = CommitteeCandidate::new(&s, [tope("++-"), tope("+-+")]).unwrap();
        assert_eq!(k.sum(), IntegerVector(vec![2, 0, 0]));
        assert!(!k.is_committee());
    }

    #[test]
    fn candidate_errors() {
        let s = hexagon();
        assert_eq!(
            CommitteeCandidate::new(&s, Vec::new()).unwrap_err(),
            Error::EmptyCommittee
        );
        assert!(matches!(
            CommitteeCandidate::new(&s, [tope("--+")]),
            Err(Error::NotInTopeSet(_))
        ));
        let big = TopeSet::new(5, all_signs(5)).unwrap();
        let k = CommitteeCandidate::new(&big, all_signs(5).into_iter().take(17)).unwrap();
        assert_eq!(
            k.is_minimal().unwrap_err(),
            Error::SizeBoundExceeded {
                size: 17,
                bound: 16
            }
        );
    }

    fn all_signs(t: usize) -> Vec<Tope> {
        (0..1u32 << t)
            .map(|m| {
                Tope::from_signs((0..t).map(|i| if m >> i & 1 == 1 { 1i64 } else { -1 })).unwrap()
            })
            .collect()
    }

    #[test]
    fn hexagon_critical() {
        let s = hexagon();
        let c = crate::cycle::find_cycle(&s, &tope("+++")).unwrap();
        let k = critical_from_cycle(&s, &c).unwrap();
        assert_eq!(k.members(), &BTreeSet::from([tope("+++")]));
        for v in c.vertices() {
            assert_eq!(
                two_path_witness(&s, &c, v).unwrap(),
                k.members().contains(v)
            );
        }
        let e = enumerate_critical(&s, 10, false, false).unwrap();
        assert_eq!(e.committees, vec![k]);
        let e = enumerate_critical(&s, 0, false, false).unwrap();
        assert!(e.committees.is_empty());
        assert!(e.truncated);
    }

    #[test]
    fn requires_acyclic() {
        let s = hexagon()
            .reorient(&crate::signs::ElementSet::from_iter([1, 2]))
            .unwrap();
        assert!(!s.is_acyclic());
        let c = crate::cycle::find_cycle(&s, &s.topes()[0]).unwrap();
        assert_eq!(critical_from_cycle(&s, &c).unwrap_err(), Error::NotAcyclic);
        assert_eq!(
            two_path_witness(&s, &c, c.base()).unwrap_err(),
            Error::NotAcyclic
        );
        assert_eq!(
            enumerate_critical(&s, 5, false, false).unwrap_err(),
            Error::NotAcyclic
        );
        let h = hexagon();
        let c = crate::cycle::find_cycle(&h, &tope("+++")).unwrap();
        assert!(matches!(
            two_path_witness(&h, &c, &tope("--+")),
            Err(Error::NotOnCycle(_))
        ));
    }

    #[test]
    fn cube_committees_and_double_sum() {
        let s = cube();
        let e = enumerate_critical(&s, 100, true, false).unwrap();
        // Cycles through +++ give {+++}; the fourth cycle avoids ±(+++) and yields
        // {++-, +-+, -++}.
        assert_eq!(e.committees.len(), 2);
        for k in &e.committees {
            assert!(k.is_critical().unwrap());
            assert_eq!(k.len() % 2, 1);
        }
        let cycles = enumerate_all_cycles(&s, 100, false).unwrap();
        let k = CommitteeCandidate::new(&s, [tope("++-"), tope("+--"), tope("-++")]).unwrap();
        for c in &cycles.cycles {
            assert_eq!(double_sum(&k, c).unwrap(), k.sum());
        }
    }
}
